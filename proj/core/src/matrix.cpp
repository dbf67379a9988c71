#include "subcode/matrix.hpp"

#include <sstream>

namespace subcode {

MatrixGf::MatrixGf(GfPtr field, std::size_t rows, std::size_t cols)
    : field_(std::move(field)), rows_(rows), cols_(cols), e_(rows * cols, 0) {}

MatrixGf MatrixGf::identity(const GfPtr& field, std::size_t k) {
    MatrixGf m(field, k, k);
    for (std::size_t i = 0; i < k; ++i) m.e_[i * k + i] = 1;
    return m;
}

MatrixGf MatrixGf::from_rows(const GfPtr& field,
                             const std::vector<std::vector<unsigned>>& rows) {
    const std::size_t r = rows.size();
    const std::size_t c = r == 0 ? 0 : rows[0].size();
    MatrixGf m(field, r, c);
    for (std::size_t i = 0; i < r; ++i) {
        if (rows[i].size() != c) throw ShapeError("ragged row lengths");
        for (std::size_t j = 0; j < c; ++j) m.set(i, j, field->check(rows[i][j]));
    }
    return m;
}

void MatrixGf::require_same_field(const MatrixGf& o) const {
    if (field_.get() != o.field_.get())
        throw FieldMismatch("matrices over different fields");
}

bool MatrixGf::operator==(const MatrixGf& o) const {
    return field_.get() == o.field_.get() && rows_ == o.rows_ && cols_ == o.cols_ &&
           e_ == o.e_;
}

bool MatrixGf::is_zero() const {
    for (fe_t v : e_)
        if (v != 0) return false;
    return true;
}

MatrixGf MatrixGf::operator+(const MatrixGf& o) const {
    require_same_field(o);
    if (rows_ != o.rows_ || cols_ != o.cols_) throw ShapeError("shape mismatch in +");
    MatrixGf m(field_, rows_, cols_);
    for (std::size_t i = 0; i < e_.size(); ++i) m.e_[i] = field_->add(e_[i], o.e_[i]);
    return m;
}

MatrixGf MatrixGf::operator-(const MatrixGf& o) const {
    require_same_field(o);
    if (rows_ != o.rows_ || cols_ != o.cols_) throw ShapeError("shape mismatch in -");
    MatrixGf m(field_, rows_, cols_);
    for (std::size_t i = 0; i < e_.size(); ++i) m.e_[i] = field_->sub(e_[i], o.e_[i]);
    return m;
}

MatrixGf MatrixGf::operator*(const MatrixGf& o) const {
    require_same_field(o);
    if (cols_ != o.rows_) throw ShapeError("inner dimensions mismatch in *");
    MatrixGf m(field_, rows_, o.cols_);
    const Gf& f = *field_;
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            const fe_t a = get(i, k);
            if (a == 0) continue;
            for (std::size_t j = 0; j < o.cols_; ++j)
                m.e_[i * o.cols_ + j] =
                    f.add(m.e_[i * o.cols_ + j], f.mul(a, o.get(k, j)));
        }
    return m;
}

MatrixGf MatrixGf::transpose() const {
    MatrixGf m(field_, cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) m.e_[j * rows_ + i] = get(i, j);
    return m;
}

MatrixGf MatrixGf::scaled(fe_t s) const {
    MatrixGf m(field_, rows_, cols_);
    for (std::size_t i = 0; i < e_.size(); ++i) m.e_[i] = field_->mul(e_[i], s);
    return m;
}

MatrixGf MatrixGf::select_columns(const std::vector<std::size_t>& cols) const {
    for (std::size_t c : cols)
        if (c >= cols_) throw ShapeError("column index out of range");
    MatrixGf m(field_, rows_, cols.size());
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols.size(); ++j)
            m.e_[i * cols.size() + j] = get(i, cols[j]);
    return m;
}

MatrixGf MatrixGf::vstack(const MatrixGf& below) const {
    require_same_field(below);
    if (cols_ != below.cols_) throw ShapeError("column count mismatch in vstack");
    MatrixGf m(field_, rows_ + below.rows_, cols_);
    std::copy(e_.begin(), e_.end(), m.e_.begin());
    std::copy(below.e_.begin(), below.e_.end(), m.e_.begin() + std::ptrdiff_t(e_.size()));
    return m;
}

Echelon MatrixGf::rref() const {
    Echelon out{*this, {}};
    MatrixGf& r = out.r;
    const Gf& f = *field_;
    std::size_t row = 0;
    for (std::size_t col = 0; col < cols_ && row < rows_; ++col) {
        std::size_t piv = row;
        while (piv < rows_ && r.get(piv, col) == 0) ++piv;
        if (piv == rows_) continue;
        if (piv != row)
            for (std::size_t j = col; j < cols_; ++j) {
                const fe_t t = r.get(row, j);
                r.e_[row * cols_ + j] = r.get(piv, j);
                r.e_[piv * cols_ + j] = t;
            }
        const fe_t scale = f.inv(r.get(row, col));
        for (std::size_t j = col; j < cols_; ++j)
            r.e_[row * cols_ + j] = f.mul(scale, r.get(row, j));
        for (std::size_t i = 0; i < rows_; ++i) {
            if (i == row) continue;
            const fe_t factor = r.get(i, col);
            if (factor == 0) continue;
            for (std::size_t j = col; j < cols_; ++j)
                r.e_[i * cols_ + j] =
                    f.sub(r.get(i, j), f.mul(factor, r.get(row, j)));
        }
        out.pivots.push_back(col);
        ++row;
    }
    return out;
}

std::size_t MatrixGf::rank() const { return rref().pivots.size(); }

Fe MatrixGf::det() const {
    if (rows_ != cols_) throw ShapeError("determinant of non-square matrix");
    const Gf& f = *field_;
    MatrixGf a = *this;
    bool negate = false;
    fe_t d = 1;
    for (std::size_t col = 0; col < cols_; ++col) {
        std::size_t piv = col;
        while (piv < rows_ && a.get(piv, col) == 0) ++piv;
        if (piv == rows_) return Fe(0, field_);
        if (piv != col) {
            for (std::size_t j = col; j < cols_; ++j) {
                const fe_t t = a.get(col, j);
                a.e_[col * cols_ + j] = a.get(piv, j);
                a.e_[piv * cols_ + j] = t;
            }
            negate = !negate;
        }
        const fe_t lead = a.get(col, col);
        d = f.mul(d, lead);
        const fe_t li = f.inv(lead);
        for (std::size_t i = col + 1; i < rows_; ++i) {
            const fe_t factor = f.mul(a.get(i, col), li);
            if (factor == 0) continue;
            for (std::size_t j = col; j < cols_; ++j)
                a.e_[i * cols_ + j] = f.sub(a.get(i, j), f.mul(factor, a.get(col, j)));
        }
    }
    return Fe(negate ? f.neg(d) : d, field_);
}

MatrixGf MatrixGf::nullspace_basis() const {
    const Echelon e = rref();
    const Gf& f = *field_;
    std::vector<std::size_t> free_cols;
    {
        std::size_t pi = 0;
        for (std::size_t c = 0; c < cols_; ++c) {
            if (pi < e.pivots.size() && e.pivots[pi] == c)
                ++pi;
            else
                free_cols.push_back(c);
        }
    }
    MatrixGf basis(field_, free_cols.size(), cols_);
    for (std::size_t k = 0; k < free_cols.size(); ++k) {
        const std::size_t fc = free_cols[k];
        basis.e_[k * cols_ + fc] = 1;
        for (std::size_t i = 0; i < e.pivots.size(); ++i)
            basis.e_[k * cols_ + e.pivots[i]] = f.neg(e.r.get(i, fc));
    }
    return basis;
}

std::string MatrixGf::str() const {
    std::ostringstream os;
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = 0; j < cols_; ++j) {
            if (j > 0) os << ' ';
            os << unsigned(get(i, j));
        }
        os << '\n';
    }
    return os.str();
}

}  // namespace subcode
