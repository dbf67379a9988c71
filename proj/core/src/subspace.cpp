#include "subcode/subspace.hpp"

#include <tuple>

namespace subcode {

Subspace::Subspace(MatrixGf basis, std::vector<std::size_t> pivots)
    : basis_(std::move(basis)), pivots_(std::move(pivots)) {}

Subspace Subspace::row_space(const MatrixGf& m) {
    Echelon e = m.rref();
    const std::size_t d = e.pivots.size();
    if (d == 0) throw ParamError("zero matrix spans no subspace");
    MatrixGf basis(m.field(), d, m.cols());
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) basis.set(i, j, e.r.get(i, j));
    return Subspace(std::move(basis), std::move(e.pivots));
}

Subspace Subspace::from_rref(MatrixGf basis, std::vector<std::size_t> pivots) {
    const std::size_t d = basis.rows(), n = basis.cols();
    if (d == 0 || pivots.size() != d) throw ParamError("pivot count must equal row count");
    for (std::size_t i = 0; i < d; ++i) {
        const std::size_t p = pivots[i];
        if (p >= n || (i > 0 && pivots[i - 1] >= p))
            throw ParamError("pivots must be strictly increasing column indices");
        for (std::size_t j = 0; j < p; ++j)
            if (basis.get(i, j) != 0) throw ParamError("nonzero entry left of pivot");
        for (std::size_t r = 0; r < d; ++r)
            if (basis.get(r, p) != (r == i ? 1 : 0))
                throw ParamError("pivot column is not a standard basis column");
    }
    return Subspace(std::move(basis), std::move(pivots));
}

bool Subspace::contains(const Subspace& other) const {
    if (field().get() != other.field().get()) throw FieldMismatch("different fields");
    if (ambient() != other.ambient()) throw AmbientMismatch("different ambient spaces");
    return basis_.vstack(other.basis_).rank() == dim();
}

bool Subspace::operator<(const Subspace& o) const {
    auto key = [](const Subspace& s) {
        return std::make_tuple(s.ambient(), s.dim());
    };
    if (key(*this) != key(o)) return key(*this) < key(o);
    for (std::size_t i = 0; i < dim(); ++i)
        for (std::size_t j = 0; j < ambient(); ++j) {
            const fe_t a = basis_.get(i, j), b = o.basis_.get(i, j);
            if (a != b) return a < b;
        }
    return false;
}

}  // namespace subcode
