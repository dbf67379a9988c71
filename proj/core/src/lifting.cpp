#include "subcode/lifting.hpp"

namespace subcode {

Subspace lift(const MatrixGf& x) {
    const std::size_t l = x.rows(), m = x.cols();
    if (l == 0) throw ParamError("cannot lift a matrix with no rows");
    MatrixGf basis(x.field(), l, l + m);
    std::vector<std::size_t> pivots(l);
    for (std::size_t i = 0; i < l; ++i) {
        basis.set(i, i, 1);
        pivots[i] = i;
        for (std::size_t j = 0; j < m; ++j) basis.set(i, l + j, x.get(i, j));
    }
    return Subspace::from_rref(std::move(basis), std::move(pivots));
}

FerrersPattern ferrers(const ProfileVector& v) { return asterisk_pattern(v.support()); }

bool fits(const MatrixGf& x, const FerrersPattern& f) {
    if (x.rows() > f.rows() || x.cols() > f.cols())
        throw ShapeError("matrix larger than the pattern box");
    for (std::size_t r = 0; r < x.rows(); ++r)
        for (std::size_t c = 0; c < x.cols(); ++c)
            if (x.get(r, c) != 0 && !f.is_free(r, c)) return false;
    return true;
}

MatrixGf augment(const MatrixGf& x, const ProfileVector& v) {
    const FerrersPattern f = ferrers(v);
    if (!fits(x, f)) throw FitError("matrix does not fit the profile's dots");
    MatrixGf out(x.field(), f.rows(), f.cols());
    for (std::size_t r = 0; r < x.rows(); ++r)
        for (std::size_t c = 0; c < x.cols(); ++c) out.set(r, c, x.get(r, c));
    return out;
}

Subspace generalized_lift(const MatrixGf& x, const ProfileVector& v) {
    const MatrixGf padded = augment(x, v);
    const CellTuple t = v.support();
    const std::size_t k = t.length(), n = t.n();
    MatrixGf basis(x.field(), k, n);
    for (std::size_t i = 0; i < k; ++i) basis.set(i, t.indices()[i], 1);
    if (k < n) {
        const CellTuple comp = complement(t);
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t c = 0; c < comp.length(); ++c)
                basis.set(i, comp.indices()[c], padded.get(i, c));
    }
    return Subspace::from_rref(std::move(basis), t.indices());
}

}  // namespace subcode
