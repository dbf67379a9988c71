#ifndef SUBCODE_GF_HPP
#define SUBCODE_GF_HPP

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "subcode/errors.hpp"

namespace subcode {

// Packed representation of a field element: the base-p digits of the value
// are the coefficients of the representative polynomial over GF(p), least
// significant digit first. For prime fields this is just the residue.
using fe_t = std::uint16_t;

class Gf;
using GfPtr = std::shared_ptr<const Gf>;

// Exact arithmetic in GF(q), q = p^m <= 256. Instances are interned per q
// with a fixed reduction polynomial (the first monic irreducible of degree m
// over GF(p) in ascending packed order; for GF(4) this is x^2 + x + 1), so
// element values are reproducible across runs. All operations are total
// table lookups except inv, which rejects zero.
class Gf {
  public:
    static GfPtr get(unsigned q);

    unsigned q() const { return q_; }
    unsigned characteristic() const { return p_; }
    unsigned degree() const { return m_; }
    // Coefficients c_0..c_m of the monic reduction polynomial over GF(p);
    // empty for prime fields.
    const std::vector<unsigned>& reduction_poly() const { return redpoly_; }

    fe_t add(fe_t a, fe_t b) const { return add_[idx(a, b)]; }
    fe_t sub(fe_t a, fe_t b) const { return add_[idx(a, neg_[b])]; }
    fe_t neg(fe_t a) const { return neg_[a]; }
    fe_t mul(fe_t a, fe_t b) const { return mul_[idx(a, b)]; }
    fe_t inv(fe_t a) const;
    fe_t pow(fe_t a, std::uint64_t e) const;

    fe_t check(unsigned v) const;  // validates v < q

    std::vector<unsigned> coeffs(fe_t a) const;  // m base-p digits
    fe_t from_coeffs(const std::vector<unsigned>& c) const;

    std::string name() const;  // "GF(q)"

    Gf(const Gf&) = delete;
    Gf& operator=(const Gf&) = delete;

  private:
    explicit Gf(unsigned q);
    std::size_t idx(fe_t a, fe_t b) const { return std::size_t(a) * q_ + b; }

    unsigned q_, p_, m_;
    std::vector<unsigned> redpoly_;
    std::vector<fe_t> add_, mul_, neg_, inv_;
};

// A field element tagged with its field. Mixed-field arithmetic throws
// FieldMismatch; the fields are interned so identity comparison suffices.
class Fe {
  public:
    Fe(fe_t v, const GfPtr& f) : v_(f->check(v)), f_(f.get()) {}
    Fe(fe_t v, const Gf* f) : v_(f->check(v)), f_(f) {}

    fe_t value() const { return v_; }
    const Gf& field() const { return *f_; }

    Fe operator+(const Fe& o) const { return Fe(same(o).add(v_, o.v_), f_); }
    Fe operator-(const Fe& o) const { return Fe(same(o).sub(v_, o.v_), f_); }
    Fe operator*(const Fe& o) const { return Fe(same(o).mul(v_, o.v_), f_); }
    Fe operator/(const Fe& o) const { return Fe(same(o).mul(v_, f_->inv(o.v_)), f_); }
    Fe operator-() const { return Fe(f_->neg(v_), f_); }
    Fe inverse() const { return Fe(f_->inv(v_), f_); }

    bool operator==(const Fe& o) const { return f_ == o.f_ && v_ == o.v_; }
    bool operator!=(const Fe& o) const { return !(*this == o); }
    bool is_zero() const { return v_ == 0; }

  private:
    const Gf& same(const Fe& o) const {
        if (f_ != o.f_) throw FieldMismatch("elements of different fields");
        return *f_;
    }
    fe_t v_;
    const Gf* f_;
};

}  // namespace subcode

#endif
