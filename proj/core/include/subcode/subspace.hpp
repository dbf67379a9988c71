#ifndef SUBCODE_SUBSPACE_HPP
#define SUBCODE_SUBSPACE_HPP

#include <vector>

#include "subcode/matrix.hpp"

namespace subcode {

// A nonzero subspace of GF(q)^n, held as its unique RREF basis with no zero
// rows. Two subspaces are equal exactly when their bases agree entrywise,
// which makes equality and ordering cheap and canonical.
class Subspace {
  public:
    // Canonicalizes an arbitrary spanning matrix; ParamError on zero span.
    static Subspace row_space(const MatrixGf& m);
    // Accepts a matrix already in RREF with the given pivot columns; the
    // shape is validated (ParamError on violation).
    static Subspace from_rref(MatrixGf basis, std::vector<std::size_t> pivots);

    const MatrixGf& basis() const { return basis_; }
    const std::vector<std::size_t>& pivots() const { return pivots_; }
    std::size_t dim() const { return basis_.rows(); }
    std::size_t ambient() const { return basis_.cols(); }
    const GfPtr& field() const { return basis_.field(); }

    bool contains(const Subspace& other) const;

    bool operator==(const Subspace& o) const { return basis_ == o.basis_; }
    bool operator!=(const Subspace& o) const { return !(*this == o); }
    bool operator<(const Subspace& o) const;  // for ordered containers

  private:
    Subspace(MatrixGf basis, std::vector<std::size_t> pivots);

    MatrixGf basis_;
    std::vector<std::size_t> pivots_;
};

}  // namespace subcode

#endif
