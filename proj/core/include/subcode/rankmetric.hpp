#ifndef SUBCODE_RANKMETRIC_HPP
#define SUBCODE_RANKMETRIC_HPP

#include <cstdint>
#include <vector>

#include "subcode/matrix.hpp"
#include "subcode/schubert.hpp"

namespace subcode {

// An F_q-linear space of rows x cols matrices over GF(q), given by a basis.
// declared_min_rank is the rank every nonzero span element is guaranteed to
// reach by construction; min_rank_distance() verifies it by brute force.
class LinearMatrixCode {
  public:
    LinearMatrixCode(GfPtr field, std::size_t rows, std::size_t cols,
                     std::vector<MatrixGf> basis, unsigned declared_min_rank);

    const GfPtr& field() const { return field_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    std::size_t dim() const { return basis_.size(); }
    unsigned declared_min_rank() const { return declared_min_rank_; }
    const std::vector<MatrixGf>& basis() const { return basis_; }

    // Number of codewords q^dim; ParamError if it does not fit in 64 bits.
    std::uint64_t size() const;
    // Codeword for a coefficient index in [0, size()): the base-q digits of
    // the index are the basis coefficients.
    MatrixGf span_element(std::uint64_t index) const;

  private:
    GfPtr field_;
    std::size_t rows_, cols_;
    std::vector<MatrixGf> basis_;
    unsigned declared_min_rank_;
};

// Linear MRD code of rows x cols matrices over GF(q) with minimum rank
// distance delta_r and F_q-dimension max{rows,cols} * (min{rows,cols} -
// delta_r + 1). Codewords are linearized polynomials of q-degree below
// min - delta_r + 1 over GF(q^max), evaluated at the polynomial basis
// elements 1, x, .., x^(min-1) and expanded column-wise over that basis;
// when rows < cols the construction runs transposed. Deterministic: the
// extension field uses the first monic irreducible polynomial of its degree.
LinearMatrixCode gabidulin_code(const GfPtr& field, std::size_t rows, std::size_t cols,
                                unsigned delta_r);

// Minimum rank over the nonzero span, by exhaustive scan of the projective
// representatives. BudgetExceeded when q^dim > budget; ParamError on the
// zero code.
unsigned min_rank_distance(const LinearMatrixCode& c, std::uint64_t budget = 1ull << 20);

// Largest subcode whose span vanishes at every non-free position of the
// pattern: the kernel of the evaluation map at those positions. The box must
// match the codeword shape. The result keeps the parent's declared rank.
LinearMatrixCode fdrm_subcode(const LinearMatrixCode& c, const FerrersPattern& f);

}  // namespace subcode

#endif
