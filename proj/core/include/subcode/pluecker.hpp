#ifndef SUBCODE_PLUECKER_HPP
#define SUBCODE_PLUECKER_HPP

#include <cstdint>
#include <vector>

#include "subcode/subspace.hpp"

namespace subcode {

// The maximal minors of a basis matrix of a subspace, one per strictly
// increasing column tuple in lexicographic order. The vector is projective:
// it is defined up to one global nonzero scalar. Queries with permuted
// indices resolve through the alternating sign; repeated indices give zero.
class PlueckerVector {
  public:
    PlueckerVector(GfPtr field, std::size_t ambient, std::size_t dim,
                   std::vector<fe_t> coords);

    std::size_t ambient() const { return ambient_; }
    std::size_t dim() const { return dim_; }
    const GfPtr& field() const { return field_; }
    std::size_t coordinate_count() const { return coords_.size(); }

    // Entry for a sorted tuple, by lexicographic rank.
    fe_t by_rank(std::size_t rank) const { return coords_[rank]; }
    // Signed entry for an arbitrary index sequence of length dim().
    Fe coordinate(const std::vector<std::size_t>& indices) const;

    // All sorted tuples in storage order.
    std::vector<std::vector<std::size_t>> tuples() const;

    // First nonzero coordinate (lex order) scaled to 1.
    PlueckerVector normalized() const;
    bool projectively_equal(const PlueckerVector& o) const;

    bool operator==(const PlueckerVector& o) const {
        return field_.get() == o.field_.get() && ambient_ == o.ambient_ &&
               dim_ == o.dim_ && coords_ == o.coords_;
    }

  private:
    GfPtr field_;
    std::size_t ambient_;  // number of coordinates of the vector space
    std::size_t dim_;      // subspace dimension, i.e. tuple length
    std::vector<fe_t> coords_;
};

PlueckerVector pluecker_coordinates(const Subspace& s);

// The quadratic exchange relations. Checked for every index choice when the
// coordinate count is at most full_check_limit, otherwise for sample_count
// deterministically seeded random choices.
bool check_quadratic_relations(const PlueckerVector& p,
                               std::size_t full_check_limit = 1000,
                               std::size_t sample_count = 10000);

// Reconstructs the dim x ambient matrix whose submatrix on the pivot tuple k
// is the identity, entry (i, j) = D(k_0..k_{i-1}, j, k_{i+1}..k_d) / D(k).
// PivotNotInvertible when D(k) = 0.
MatrixGf coordinate_matrix(const PlueckerVector& p, const std::vector<std::size_t>& k);

// True when coordinate_matrix at the RREF pivot tuple reproduces the basis.
bool rref_coincidence(const Subspace& s);

}  // namespace subcode

#endif
