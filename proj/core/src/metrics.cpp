#include "subcode/metrics.hpp"

#include <algorithm>

namespace subcode {

namespace {

std::size_t sum_dimension(const Subspace& u, const Subspace& v) {
    if (u.field().get() != v.field().get())
        throw FieldMismatch("subspaces over different fields");
    if (u.ambient() != v.ambient())
        throw AmbientMismatch("subspaces of different ambient spaces");
    return u.basis().vstack(v.basis()).rank();
}

}  // namespace

std::size_t subspace_distance(const Subspace& u, const Subspace& v) {
    const std::size_t sum = sum_dimension(u, v);
    const std::size_t meet = u.dim() + v.dim() - sum;
    return u.dim() + v.dim() - 2 * meet;
}

std::size_t injection_distance(const Subspace& u, const Subspace& v) {
    const std::size_t sum = sum_dimension(u, v);
    const std::size_t meet = u.dim() + v.dim() - sum;
    return std::max(u.dim(), v.dim()) - meet;
}

std::size_t symmetric_distance(const CellTuple& a, const CellTuple& b) {
    if (a.n() != b.n()) throw AmbientMismatch("tuples over different ranges");
    const auto& x = a.indices();
    const auto& y = b.indices();
    std::size_t i = 0, j = 0, common = 0;
    while (i < x.size() && j < y.size()) {
        if (x[i] == y[j]) {
            ++common;
            ++i;
            ++j;
        } else if (x[i] < y[j]) {
            ++i;
        } else {
            ++j;
        }
    }
    return x.size() + y.size() - 2 * common;
}

std::size_t modified_symmetric_distance(const CellTuple& a, const CellTuple& b) {
    const std::size_t gap = a.length() > b.length() ? a.length() - b.length()
                                                    : b.length() - a.length();
    return symmetric_distance(a, b) + gap;
}

bool check_distance_bounds(const Subspace& u, const Subspace& v) {
    const std::size_t delta = symmetric_distance(cell_of(u), cell_of(v));
    return subspace_distance(u, v) >= delta && injection_distance(u, v) >= delta / 2;
}

}  // namespace subcode
