#include "subcode/gf.hpp"

#include <algorithm>
#include <map>
#include <mutex>

namespace subcode {

namespace {

// Dense polynomials over GF(p), coefficient vectors with c[i] the
// coefficient of x^i. Trailing zeros allowed; deg() ignores them.
using Poly = std::vector<unsigned>;

int deg(const Poly& f) {
    for (int i = int(f.size()) - 1; i >= 0; --i)
        if (f[std::size_t(i)] != 0) return i;
    return -1;
}

// Remainder of f by monic g.
Poly poly_mod(Poly f, const Poly& g, unsigned p) {
    const int dg = deg(g);
    for (int i = deg(f); i >= dg && dg >= 0; i = deg(f)) {
        const unsigned lead = f[std::size_t(i)];
        for (int j = 0; j <= dg; ++j) {
            unsigned& c = f[std::size_t(i - dg + j)];
            c = (c + p - (lead * g[std::size_t(j)]) % p) % p;
        }
    }
    return f;
}

Poly packed_to_poly(unsigned v, unsigned p, unsigned m) {
    Poly c(m, 0);
    for (unsigned i = 0; i < m; ++i) {
        c[i] = v % p;
        v /= p;
    }
    return c;
}

unsigned poly_to_packed(const Poly& c, unsigned p, unsigned m) {
    unsigned v = 0;
    for (unsigned i = m; i-- > 0;) v = v * p + (i < c.size() ? c[i] : 0);
    return v;
}

// Monic degree-d polynomial from its packed lower coefficients.
Poly monic_from_packed(unsigned packed, unsigned d, unsigned p) {
    Poly f = packed_to_poly(packed, p, d);
    f.resize(d + 1, 0);
    f[d] = 1;
    return f;
}

bool divides(const Poly& g, const Poly& f, unsigned p) {
    return deg(poly_mod(f, g, p)) < 0;
}

// First monic irreducible of degree m over GF(p), in ascending packed order
// of the lower coefficients. A polynomial of degree m is irreducible iff no
// monic polynomial of degree 1..m/2 divides it.
Poly find_reduction_poly(unsigned p, unsigned m) {
    unsigned count = 1;
    for (unsigned i = 0; i < m; ++i) count *= p;
    for (unsigned packed = 0; packed < count; ++packed) {
        Poly f = monic_from_packed(packed, m, p);
        bool irreducible = true;
        for (unsigned d = 1; irreducible && 2 * d <= m; ++d) {
            unsigned dcount = 1;
            for (unsigned i = 0; i < d; ++i) dcount *= p;
            for (unsigned gp = 0; gp < dcount; ++gp) {
                if (divides(monic_from_packed(gp, d, p), f, p)) {
                    irreducible = false;
                    break;
                }
            }
        }
        if (irreducible) return f;
    }
    throw ParamError("no irreducible polynomial found");  // unreachable
}

unsigned smallest_prime_factor(unsigned n) {
    for (unsigned d = 2; d * d <= n; ++d)
        if (n % d == 0) return d;
    return n;
}

}  // namespace

Gf::Gf(unsigned q) : q_(q) {
    if (q < 2 || q > 256) throw ParamError("field order must be in [2, 256]");
    p_ = smallest_prime_factor(q);
    m_ = 0;
    unsigned t = q;
    while (t > 1) {
        if (t % p_ != 0) throw ParamError("field order must be a prime power");
        t /= p_;
        ++m_;
    }

    Poly red;
    if (m_ > 1) {
        red = find_reduction_poly(p_, m_);
        redpoly_ = red;
    }

    add_.resize(std::size_t(q_) * q_);
    mul_.resize(std::size_t(q_) * q_);
    neg_.resize(q_);
    inv_.assign(q_, 0);

    for (unsigned a = 0; a < q_; ++a) {
        const Poly pa = packed_to_poly(a, p_, m_);
        {
            Poly nc(m_);
            for (unsigned i = 0; i < m_; ++i) nc[i] = (p_ - pa[i]) % p_;
            neg_[a] = fe_t(poly_to_packed(nc, p_, m_));
        }
        for (unsigned b = 0; b < q_; ++b) {
            const Poly pb = packed_to_poly(b, p_, m_);
            Poly s(m_);
            for (unsigned i = 0; i < m_; ++i) s[i] = (pa[i] + pb[i]) % p_;
            add_[idx(fe_t(a), fe_t(b))] = fe_t(poly_to_packed(s, p_, m_));

            Poly prod(2 * m_ - 1, 0);
            for (unsigned i = 0; i < m_; ++i)
                for (unsigned j = 0; j < m_; ++j)
                    prod[i + j] = (prod[i + j] + pa[i] * pb[j]) % p_;
            if (m_ > 1) prod = poly_mod(std::move(prod), red, p_);
            mul_[idx(fe_t(a), fe_t(b))] = fe_t(poly_to_packed(prod, p_, m_));
        }
    }

    // a^(q-2) inverts nonzero a; the multiplicative group has order q-1.
    for (unsigned a = 1; a < q_; ++a) inv_[a] = pow(fe_t(a), q_ - 2);
}

fe_t Gf::inv(fe_t a) const {
    if (a == 0) throw DivisionByZero("inverse of zero in " + name());
    return inv_[a];
}

fe_t Gf::pow(fe_t a, std::uint64_t e) const {
    fe_t r = 1, base = a;
    while (e > 0) {
        if (e & 1) r = mul(r, base);
        base = mul(base, base);
        e >>= 1;
    }
    return r;
}

fe_t Gf::check(unsigned v) const {
    if (v >= q_) throw ParamError("element value out of range for " + name());
    return fe_t(v);
}

std::vector<unsigned> Gf::coeffs(fe_t a) const { return packed_to_poly(a, p_, m_); }

fe_t Gf::from_coeffs(const std::vector<unsigned>& c) const {
    if (c.size() > m_) throw ParamError("too many coefficients for " + name());
    for (unsigned v : c)
        if (v >= p_) throw ParamError("coefficient out of range for " + name());
    Poly f(c.begin(), c.end());
    f.resize(m_, 0);
    return fe_t(poly_to_packed(f, p_, m_));
}

std::string Gf::name() const { return "GF(" + std::to_string(q_) + ")"; }

GfPtr Gf::get(unsigned q) {
    static std::mutex mtx;
    static std::map<unsigned, GfPtr> cache;
    std::lock_guard<std::mutex> lock(mtx);
    auto it = cache.find(q);
    if (it != cache.end()) return it->second;
    GfPtr f(new Gf(q));
    cache.emplace(q, f);
    return f;
}

}  // namespace subcode
