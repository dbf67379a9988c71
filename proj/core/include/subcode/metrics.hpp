#ifndef SUBCODE_METRICS_HPP
#define SUBCODE_METRICS_HPP

#include "subcode/schubert.hpp"
#include "subcode/subspace.hpp"

namespace subcode {

// All dimensions in this module are vector space dimensions (projective
// dimension + 1); the tuple bounds below hold verbatim in this convention.

// dim U + dim V - 2 dim(U ∩ V). Computed through ranks of stacked bases;
// the intersection is never materialized.
std::size_t subspace_distance(const Subspace& u, const Subspace& v);

// max{dim U, dim V} - dim(U ∩ V). Satisfies
// 2 d_I(U,V) = d_s(U,V) + |dim U - dim V|.
std::size_t injection_distance(const Subspace& u, const Subspace& v);

// |A \ B| + |B \ A| on the index sets.
std::size_t symmetric_distance(const CellTuple& a, const CellTuple& b);

// Symmetric distance plus the cardinality gap; a metric on tuples.
std::size_t modified_symmetric_distance(const CellTuple& a, const CellTuple& b);

// Both cell-tuple lower bounds at once:
//   d_s(U,V) >= Delta(cell(U), cell(V))   and
//   d_I(U,V) >= floor(Delta(cell(U), cell(V)) / 2).
bool check_distance_bounds(const Subspace& u, const Subspace& v);

}  // namespace subcode

#endif
