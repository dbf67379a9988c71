#include "subcode/rankmetric.hpp"

#include <algorithm>
#include <cmath>

namespace subcode {

namespace {

// GF(q^deg) as polynomials over the base field modulo a fixed monic
// irreducible; elements are coefficient vectors of length deg over GF(q).
class ExtField {
  public:
    using Elem = std::vector<fe_t>;

    ExtField(GfPtr base, std::size_t deg) : base_(std::move(base)), deg_(deg) {
        if (deg_ == 0) throw ParamError("extension degree must be positive");
        modulus_ = first_irreducible();
    }

    std::size_t degree() const { return deg_; }

    Elem zero() const { return Elem(deg_, 0); }

    // x^t for t < deg.
    Elem monomial(std::size_t t) const {
        Elem e = zero();
        e[t] = 1;
        return e;
    }

    Elem add(const Elem& a, const Elem& b) const {
        Elem r(deg_);
        for (std::size_t i = 0; i < deg_; ++i) r[i] = base_->add(a[i], b[i]);
        return r;
    }

    Elem mul(const Elem& a, const Elem& b) const {
        std::vector<fe_t> prod(2 * deg_ - 1, 0);
        for (std::size_t i = 0; i < deg_; ++i) {
            if (a[i] == 0) continue;
            for (std::size_t j = 0; j < deg_; ++j)
                prod[i + j] = base_->add(prod[i + j], base_->mul(a[i], b[j]));
        }
        // reduce by the monic modulus
        for (std::size_t i = 2 * deg_ - 1; i-- > deg_;) {
            const fe_t lead = prod[i];
            if (lead == 0) continue;
            prod[i] = 0;
            for (std::size_t j = 0; j < deg_; ++j)
                prod[i - deg_ + j] =
                    base_->sub(prod[i - deg_ + j], base_->mul(lead, modulus_[j]));
        }
        prod.resize(deg_);
        return prod;
    }

    Elem pow(Elem a, std::uint64_t e) const {
        Elem r = zero();
        r[0] = 1;
        while (e > 0) {
            if (e & 1) r = mul(r, a);
            a = mul(a, a);
            e >>= 1;
        }
        return r;
    }

  private:
    // Lower coefficients of the first monic irreducible of degree deg_ over
    // the base field, ascending in base-q packed order. Irreducibility by
    // trial division against all monic polynomials of degree 1..deg_/2.
    std::vector<fe_t> first_irreducible() const {
        const unsigned q = base_->q();
        std::uint64_t count = 1;
        for (std::size_t i = 0; i < deg_; ++i) count *= q;
        for (std::uint64_t packed = 0; packed < count; ++packed) {
            std::vector<fe_t> lower = unpack(packed, deg_);
            if (is_irreducible(lower)) return lower;
        }
        throw ParamError("no irreducible polynomial found");  // unreachable
    }

    std::vector<fe_t> unpack(std::uint64_t packed, std::size_t len) const {
        std::vector<fe_t> c(len);
        for (std::size_t i = 0; i < len; ++i) {
            c[i] = fe_t(packed % base_->q());
            packed /= base_->q();
        }
        return c;
    }

    // f = x^deg + lower; divisor candidates g = x^d + glower.
    bool is_irreducible(const std::vector<fe_t>& lower) const {
        for (std::size_t d = 1; 2 * d <= deg_; ++d) {
            std::uint64_t dcount = 1;
            for (std::size_t i = 0; i < d; ++i) dcount *= base_->q();
            for (std::uint64_t gp = 0; gp < dcount; ++gp) {
                if (divides(unpack(gp, d), d, lower)) return false;
            }
        }
        return true;
    }

    bool divides(const std::vector<fe_t>& glower, std::size_t gdeg,
                 const std::vector<fe_t>& flower) const {
        std::vector<fe_t> rem(flower);
        rem.resize(deg_ + 1, 0);
        rem[deg_] = 1;
        for (std::size_t i = deg_ + 1; i-- > gdeg;) {
            const fe_t lead = rem[i];
            if (lead == 0) continue;
            rem[i] = 0;
            for (std::size_t j = 0; j < gdeg; ++j)
                rem[i - gdeg + j] = base_->sub(rem[i - gdeg + j], base_->mul(lead, glower[j]));
        }
        for (std::size_t j = 0; j < gdeg; ++j)
            if (rem[j] != 0) return false;
        return true;
    }

    GfPtr base_;
    std::size_t deg_;
    std::vector<fe_t> modulus_;  // lower coefficients, the leading one implicit
};

}  // namespace

LinearMatrixCode::LinearMatrixCode(GfPtr field, std::size_t rows, std::size_t cols,
                                   std::vector<MatrixGf> basis, unsigned declared_min_rank)
    : field_(std::move(field)),
      rows_(rows),
      cols_(cols),
      basis_(std::move(basis)),
      declared_min_rank_(declared_min_rank) {
    for (const MatrixGf& b : basis_) {
        if (b.field().get() != field_.get()) throw FieldMismatch("basis field mismatch");
        if (b.rows() != rows_ || b.cols() != cols_) throw ShapeError("basis shape mismatch");
    }
    if (!basis_.empty()) {
        MatrixGf flat(field_, basis_.size(), rows_ * cols_);
        for (std::size_t i = 0; i < basis_.size(); ++i)
            for (std::size_t r = 0; r < rows_; ++r)
                for (std::size_t c = 0; c < cols_; ++c)
                    flat.set(i, r * cols_ + c, basis_[i].get(r, c));
        if (flat.rank() != basis_.size())
            throw ParamError("basis matrices are linearly dependent");
    }
}

std::uint64_t LinearMatrixCode::size() const {
    std::uint64_t s = 1;
    for (std::size_t i = 0; i < dim(); ++i) {
        if (s > UINT64_MAX / field_->q()) throw ParamError("code size exceeds 64 bits");
        s *= field_->q();
    }
    return s;
}

MatrixGf LinearMatrixCode::span_element(std::uint64_t index) const {
    MatrixGf m(field_, rows_, cols_);
    for (std::size_t i = 0; i < dim() && index > 0; ++i) {
        const fe_t c = fe_t(index % field_->q());
        index /= field_->q();
        if (c != 0) m = m + basis_[i].scaled(c);
    }
    if (index > 0) throw ParamError("span index out of range");
    return m;
}

LinearMatrixCode gabidulin_code(const GfPtr& field, std::size_t rows, std::size_t cols,
                                unsigned delta_r) {
    if (rows == 0 || cols == 0) throw ParamError("codeword shape must be nonempty");
    const std::size_t big = std::max(rows, cols), small = std::min(rows, cols);
    if (delta_r < 1 || delta_r > small)
        throw ParamError("minimum rank distance must be in [1, min(rows, cols)]");
    const std::size_t n_coef = small - delta_r + 1;  // linearized q-degree bound

    const ExtField ext(field, big);
    const unsigned q = field->q();

    // frob[i][j] = (x^j)^(q^i)
    std::vector<std::vector<ExtField::Elem>> frob(n_coef);
    for (std::size_t j = 0; j < small; ++j) frob[0].push_back(ext.monomial(j));
    for (std::size_t i = 1; i < n_coef; ++i)
        for (std::size_t j = 0; j < small; ++j)
            frob[i].push_back(ext.pow(frob[i - 1][j], q));

    std::vector<MatrixGf> basis;
    basis.reserve(big * n_coef);
    for (std::size_t i = 0; i < n_coef; ++i) {
        for (std::size_t t = 0; t < big; ++t) {
            const ExtField::Elem coef = ext.monomial(t);
            MatrixGf w(field, big, small);
            for (std::size_t j = 0; j < small; ++j) {
                const ExtField::Elem val = ext.mul(coef, frob[i][j]);
                for (std::size_t r = 0; r < big; ++r) w.set(r, j, val[r]);
            }
            basis.push_back(rows >= cols ? std::move(w) : w.transpose());
        }
    }
    return LinearMatrixCode(field, rows, cols, std::move(basis), delta_r);
}

unsigned min_rank_distance(const LinearMatrixCode& c, std::uint64_t budget) {
    if (c.dim() == 0) throw ParamError("zero code has no nonzero elements");
    const Gf& f = *c.field();
    const unsigned q = f.q();
    const std::size_t rows = c.rows(), cols = c.cols(), dim = c.dim();
    for (std::size_t i = 0, sz = 1; i < dim; ++i) {
        if (std::uint64_t(sz) > budget / q)
            throw BudgetExceeded("code too large for exhaustive rank scan");
        sz *= q;
    }

    const std::size_t cells = rows * cols;
    std::vector<std::vector<fe_t>> flat(dim, std::vector<fe_t>(cells));
    for (std::size_t i = 0; i < dim; ++i)
        for (std::size_t r = 0; r < rows; ++r)
            for (std::size_t col = 0; col < cols; ++col)
                flat[i][r * cols + col] = c.basis()[i].get(r, col);

    std::vector<fe_t> work(cells);
    auto rank_destructive = [&](std::vector<fe_t>& a) {
        std::size_t rk = 0;
        for (std::size_t col = 0; col < cols && rk < rows; ++col) {
            std::size_t piv = rk;
            while (piv < rows && a[piv * cols + col] == 0) ++piv;
            if (piv == rows) continue;
            if (piv != rk)
                for (std::size_t j = col; j < cols; ++j)
                    std::swap(a[rk * cols + j], a[piv * cols + j]);
            const fe_t li = f.inv(a[rk * cols + col]);
            // rows rk..piv hold zero in this column after the swap
            for (std::size_t i = piv + 1; i < rows; ++i) {
                const fe_t factor = f.mul(a[i * cols + col], li);
                if (factor == 0) continue;
                for (std::size_t j = col; j < cols; ++j)
                    a[i * cols + j] = f.sub(a[i * cols + j], f.mul(factor, a[rk * cols + j]));
            }
            ++rk;
        }
        return unsigned(rk);
    };

    // Rank is invariant under scaling, so only span elements whose leading
    // nonzero coefficient is 1 are visited. For a fixed leading position the
    // tail coefficients run through a base-q odometer; a digit step adds its
    // basis matrix once (q consecutive additions cancel), so each visited
    // codeword costs O(cells) on top of the rank itself.
    unsigned best = unsigned(std::min(rows, cols));
    std::vector<fe_t> cur(cells);
    std::vector<unsigned> digit;
    for (std::size_t lead = 0; lead < dim && best > 1; ++lead) {
        cur = flat[lead];
        digit.assign(dim - lead - 1, 0);
        for (;;) {
            work = cur;
            const unsigned r = rank_destructive(work);
            if (r < best) {
                best = r;
                if (best == 1) break;
            }
            std::size_t pos = 0;
            for (; pos < digit.size(); ++pos) {
                const std::vector<fe_t>& b = flat[lead + 1 + pos];
                for (std::size_t k = 0; k < cells; ++k) cur[k] = f.add(cur[k], b[k]);
                if (++digit[pos] < q) break;
                digit[pos] = 0;  // carry; the q-fold sum has cancelled
            }
            if (pos == digit.size()) break;
        }
    }
    return best;
}

LinearMatrixCode fdrm_subcode(const LinearMatrixCode& c, const FerrersPattern& f) {
    if (c.rows() != f.rows() || c.cols() != f.cols())
        throw ShapeError("pattern box does not match the codeword shape");
    std::vector<std::pair<std::size_t, std::size_t>> forbidden;
    for (std::size_t r = 0; r < f.rows(); ++r)
        for (std::size_t col = 0; col < f.cols(); ++col)
            if (!f.is_free(r, col)) forbidden.emplace_back(r, col);

    // coefficients a with sum_i a_i B_i zero at every forbidden position
    MatrixGf constraints(c.field(), forbidden.size(), c.dim());
    for (std::size_t k = 0; k < forbidden.size(); ++k)
        for (std::size_t i = 0; i < c.dim(); ++i)
            constraints.set(k, i, c.basis()[i].get(forbidden[k].first, forbidden[k].second));
    const MatrixGf kernel = constraints.nullspace_basis();

    std::vector<MatrixGf> basis;
    basis.reserve(kernel.rows());
    for (std::size_t k = 0; k < kernel.rows(); ++k) {
        MatrixGf m(c.field(), c.rows(), c.cols());
        for (std::size_t i = 0; i < c.dim(); ++i) {
            const fe_t a = kernel.get(k, i);
            if (a != 0) m = m + c.basis()[i].scaled(a);
        }
        basis.push_back(std::move(m));
    }
    return LinearMatrixCode(c.field(), c.rows(), c.cols(), std::move(basis),
                            c.declared_min_rank());
}

}  // namespace subcode
