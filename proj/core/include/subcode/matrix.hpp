#ifndef SUBCODE_MATRIX_HPP
#define SUBCODE_MATRIX_HPP

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

#include "subcode/gf.hpp"

namespace subcode {

struct Echelon;

// Dense row-major matrix over an interned GF(q). Values are stored packed;
// at() wraps them into field-tagged elements. Zero row and column counts are
// allowed. All operations return fresh matrices; nothing mutates in place
// except set().
class MatrixGf {
  public:
    MatrixGf(GfPtr field, std::size_t rows, std::size_t cols);

    static MatrixGf identity(const GfPtr& field, std::size_t k);
    static MatrixGf from_rows(const GfPtr& field,
                              const std::vector<std::vector<unsigned>>& rows);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    const GfPtr& field() const { return field_; }

    fe_t get(std::size_t r, std::size_t c) const { return e_[r * cols_ + c]; }
    void set(std::size_t r, std::size_t c, fe_t v) { e_[r * cols_ + c] = field_->check(v); }
    Fe at(std::size_t r, std::size_t c) const { return Fe(get(r, c), field_); }

    bool operator==(const MatrixGf& o) const;
    bool operator!=(const MatrixGf& o) const { return !(*this == o); }
    bool is_zero() const;

    MatrixGf operator+(const MatrixGf& o) const;
    MatrixGf operator-(const MatrixGf& o) const;
    MatrixGf operator*(const MatrixGf& o) const;

    MatrixGf transpose() const;
    MatrixGf scaled(fe_t s) const;
    // Column submatrix with columns taken in the given order (repeats allowed).
    MatrixGf select_columns(const std::vector<std::size_t>& cols) const;
    MatrixGf vstack(const MatrixGf& below) const;

    // Reduced row echelon form: leading 1 per nonzero row, pivot columns are
    // standard basis columns, zero rows last.
    Echelon rref() const;
    std::size_t rank() const;
    // Determinant; ShapeError on non-square input.
    Fe det() const;
    // Rows form a basis of the right kernel {x : M x^T = 0}; the result has
    // cols() - rank() rows.
    MatrixGf nullspace_basis() const;

    std::string str() const;

  private:
    void require_same_field(const MatrixGf& o) const;

    GfPtr field_;
    std::size_t rows_, cols_;
    std::vector<fe_t> e_;
};

struct Echelon {
    MatrixGf r;
    std::vector<std::size_t> pivots;  // strictly increasing column indices
};

}  // namespace subcode

#endif
