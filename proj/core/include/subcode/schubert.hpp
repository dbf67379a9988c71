#ifndef SUBCODE_SCHUBERT_HPP
#define SUBCODE_SCHUBERT_HPP

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "subcode/subspace.hpp"

namespace subcode {

// Pivot-column tuple identifying a Schubert cell: the positions of the
// leading 1s of the RREF basis of every subspace in the cell. Indices are
// 0-based internally; every human-facing rendering is 1-based.
class CellTuple {
  public:
    static CellTuple from_zero_based(std::vector<std::size_t> indices, std::size_t n);
    static CellTuple from_one_based(const std::vector<std::size_t>& indices, std::size_t n);

    const std::vector<std::size_t>& indices() const { return idx_; }
    std::vector<std::size_t> one_based() const;
    std::size_t n() const { return n_; }
    std::size_t length() const { return idx_.size(); }

    bool operator==(const CellTuple& o) const { return n_ == o.n_ && idx_ == o.idx_; }
    bool operator!=(const CellTuple& o) const { return !(*this == o); }
    bool operator<(const CellTuple& o) const;  // ascending length, then lex

    std::string str() const;  // e.g. "(1,3,4)", 1-based

  private:
    CellTuple(std::vector<std::size_t> idx, std::size_t n) : idx_(std::move(idx)), n_(n) {}
    std::vector<std::size_t> idx_;
    std::size_t n_;
};

// Free-entry pattern of a cell's RREF skeleton, restricted to the non-pivot
// columns: a rows x cols box whose marked positions form right-aligned rows
// of non-increasing length (the Ferrers shape). Position (i, c) refers to
// row i and the c-th non-pivot column in ascending order.
class FerrersPattern {
  public:
    FerrersPattern(std::size_t rows, std::size_t cols,
                   std::vector<std::pair<std::size_t, std::size_t>> free_positions);
    static FerrersPattern full(std::size_t rows, std::size_t cols);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool is_free(std::size_t r, std::size_t c) const { return mask_[r * cols_ + c] != 0; }
    std::size_t free_count() const { return free_.size(); }
    // Row-major sorted.
    const std::vector<std::pair<std::size_t, std::size_t>>& free_positions() const {
        return free_;
    }
    std::vector<std::size_t> row_counts() const;

    bool operator==(const FerrersPattern& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && free_ == o.free_;
    }

    std::string str() const;  // dot diagram, one row per box row

  private:
    std::size_t rows_, cols_;
    std::vector<std::pair<std::size_t, std::size_t>> free_;
    std::vector<std::uint8_t> mask_;
};

// Binary identifying vector; its support is a cell tuple.
class ProfileVector {
  public:
    explicit ProfileVector(std::vector<std::uint8_t> bits);
    static ProfileVector from_string(const std::string& bits);  // e.g. "110101"
    static ProfileVector from_support(const CellTuple& t);

    const std::vector<std::uint8_t>& bits() const { return bits_; }
    std::size_t length() const { return bits_.size(); }
    std::size_t weight() const;
    CellTuple support() const;  // EmptyProfile on the zero vector

    std::string str() const;

  private:
    std::vector<std::uint8_t> bits_;
};

// Symbolic RREF skeleton of a cell: 1s in the pivot columns, structural 0s,
// dots for the free entries.
class ProfileMatrix {
  public:
    ProfileMatrix(CellTuple pivots, FerrersPattern dots);

    std::size_t rows() const { return pivots_.length(); }
    std::size_t cols() const { return pivots_.n(); }
    const CellTuple& pivots() const { return pivots_; }
    const FerrersPattern& dots() const { return dots_; }

    char entry(std::size_t r, std::size_t c) const;  // '1', '0' or '*'
    std::string str() const;

  private:
    CellTuple pivots_;
    FerrersPattern dots_;
    std::vector<std::size_t> box_col_;  // ambient column -> box column, or npos
};

CellTuple cell_of(const Subspace& s);
std::size_t cell_dimension(const CellTuple& t);
MatrixGf cell_matrix(const CellTuple& t, const GfPtr& field);
CellTuple complement(const CellTuple& t);  // EmptyComplement when length == n
FerrersPattern asterisk_pattern(const CellTuple& t);
ProfileMatrix profile_matrix(const ProfileVector& v);
// All 2^n - 1 nonempty tuples, ascending length, lexicographic within a length.
std::vector<CellTuple> enumerate_cells(std::size_t n);

// The other classical cell labelling uses the trailing 1s of a basis of the
// form (*,..,*,1,0,..,0); it partitions subspaces differently and is not used
// by the construction. Provided for reference: the tuple of a subspace in
// that labelling, and the dimension sum(b_i) - C(d+1, 2) of its cell
// (1-based b_i).
CellTuple trailing_one_tuple(const Subspace& s);
std::size_t trailing_cell_dimension(const CellTuple& t);

}  // namespace subcode

#endif
