#ifndef SUBCODE_LIFTING_HPP
#define SUBCODE_LIFTING_HPP

#include "subcode/schubert.hpp"
#include "subcode/subspace.hpp"

namespace subcode {

// Row space of [I | X]: an l x m matrix becomes an l-dimensional subspace of
// GF(q)^(l+m) in the principal cell.
Subspace lift(const MatrixGf& x);

// Dot pattern of the profile matrix of v, as a weight(v) x (len(v)-weight(v))
// box over the non-pivot columns.
FerrersPattern ferrers(const ProfileVector& v);

// True when every nonzero entry of x lies on a dot. x may be smaller than
// the box (it is placed in the top-left corner; missing entries are zero);
// larger than the box is a ShapeError.
bool fits(const MatrixGf& x, const FerrersPattern& f);

// Pads x to the full weight(v) x (len(v)-weight(v)) box: zero rows appended
// below, zero columns appended after x's columns in order. FitError when x
// does not fit ferrers(v).
MatrixGf augment(const MatrixGf& x, const ProfileVector& v);

// Profile matrix of v with the dots filled from x by position: the entry in
// row i and the c-th non-pivot column is x(i, c). FitError when x does not
// fit ferrers(v).
Subspace generalized_lift(const MatrixGf& x, const ProfileVector& v);

}  // namespace subcode

#endif
