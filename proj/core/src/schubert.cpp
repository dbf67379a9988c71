#include "subcode/schubert.hpp"

#include <algorithm>
#include <limits>
#include <sstream>

#include "subcode/detail/combi.hpp"

namespace subcode {

namespace {
constexpr std::size_t npos = std::numeric_limits<std::size_t>::max();
}

CellTuple CellTuple::from_zero_based(std::vector<std::size_t> indices, std::size_t n) {
    if (n == 0) throw ParamError("ambient dimension must be positive");
    if (indices.empty() || indices.size() > n)
        throw ParamError("tuple length must be in [1, n]");
    for (std::size_t i = 0; i < indices.size(); ++i) {
        if (indices[i] >= n) throw ParamError("tuple index out of range");
        if (i > 0 && indices[i - 1] >= indices[i])
            throw ParamError("tuple indices must be strictly increasing");
    }
    return CellTuple(std::move(indices), n);
}

CellTuple CellTuple::from_one_based(const std::vector<std::size_t>& indices, std::size_t n) {
    std::vector<std::size_t> zb;
    zb.reserve(indices.size());
    for (std::size_t a : indices) {
        if (a == 0) throw ParamError("1-based index cannot be 0");
        zb.push_back(a - 1);
    }
    return from_zero_based(std::move(zb), n);
}

std::vector<std::size_t> CellTuple::one_based() const {
    std::vector<std::size_t> out(idx_);
    for (std::size_t& a : out) ++a;
    return out;
}

bool CellTuple::operator<(const CellTuple& o) const {
    if (n_ != o.n_) return n_ < o.n_;
    if (idx_.size() != o.idx_.size()) return idx_.size() < o.idx_.size();
    return idx_ < o.idx_;
}

std::string CellTuple::str() const {
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < idx_.size(); ++i) {
        if (i > 0) os << ',';
        os << idx_[i] + 1;
    }
    os << ')';
    return os.str();
}

FerrersPattern::FerrersPattern(std::size_t rows, std::size_t cols,
                               std::vector<std::pair<std::size_t, std::size_t>> free_positions)
    : rows_(rows), cols_(cols), free_(std::move(free_positions)), mask_(rows * cols, 0) {
    std::sort(free_.begin(), free_.end());
    free_.erase(std::unique(free_.begin(), free_.end()), free_.end());
    for (const auto& [r, c] : free_) {
        if (r >= rows_ || c >= cols_) throw ParamError("free position outside the box");
        mask_[r * cols_ + c] = 1;
    }
}

FerrersPattern FerrersPattern::full(std::size_t rows, std::size_t cols) {
    std::vector<std::pair<std::size_t, std::size_t>> all;
    all.reserve(rows * cols);
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c) all.emplace_back(r, c);
    return FerrersPattern(rows, cols, std::move(all));
}

std::vector<std::size_t> FerrersPattern::row_counts() const {
    std::vector<std::size_t> counts(rows_, 0);
    for (const auto& [r, c] : free_) ++counts[r];
    return counts;
}

std::string FerrersPattern::str() const {
    std::ostringstream os;
    for (std::size_t r = 0; r < rows_; ++r) {
        for (std::size_t c = 0; c < cols_; ++c) os << (is_free(r, c) ? '*' : '.');
        os << '\n';
    }
    return os.str();
}

ProfileVector::ProfileVector(std::vector<std::uint8_t> bits) : bits_(std::move(bits)) {
    if (bits_.empty()) throw ParamError("profile vector must have positive length");
    for (std::uint8_t b : bits_)
        if (b > 1) throw ParamError("profile vector entries must be bits");
}

ProfileVector ProfileVector::from_string(const std::string& s) {
    std::vector<std::uint8_t> bits;
    bits.reserve(s.size());
    for (char ch : s) {
        if (ch != '0' && ch != '1') throw ParamError("profile string must be over {0,1}");
        bits.push_back(std::uint8_t(ch - '0'));
    }
    return ProfileVector(std::move(bits));
}

ProfileVector ProfileVector::from_support(const CellTuple& t) {
    std::vector<std::uint8_t> bits(t.n(), 0);
    for (std::size_t i : t.indices()) bits[i] = 1;
    return ProfileVector(std::move(bits));
}

std::size_t ProfileVector::weight() const {
    std::size_t w = 0;
    for (std::uint8_t b : bits_) w += b;
    return w;
}

CellTuple ProfileVector::support() const {
    std::vector<std::size_t> idx;
    for (std::size_t i = 0; i < bits_.size(); ++i)
        if (bits_[i]) idx.push_back(i);
    if (idx.empty()) throw EmptyProfile("zero profile vector has no support");
    return CellTuple::from_zero_based(std::move(idx), bits_.size());
}

std::string ProfileVector::str() const {
    std::string s;
    for (std::uint8_t b : bits_) s.push_back(char('0' + b));
    return s;
}

ProfileMatrix::ProfileMatrix(CellTuple pivots, FerrersPattern dots)
    : pivots_(std::move(pivots)), dots_(std::move(dots)), box_col_(pivots_.n(), npos) {
    std::size_t c = 0;
    std::size_t pi = 0;
    const auto& idx = pivots_.indices();
    for (std::size_t j = 0; j < pivots_.n(); ++j) {
        if (pi < idx.size() && idx[pi] == j)
            ++pi;
        else
            box_col_[j] = c++;
    }
}

char ProfileMatrix::entry(std::size_t r, std::size_t c) const {
    const auto& idx = pivots_.indices();
    if (box_col_[c] == npos) {
        auto it = std::lower_bound(idx.begin(), idx.end(), c);
        return std::size_t(it - idx.begin()) == r ? '1' : '0';
    }
    return dots_.is_free(r, box_col_[c]) ? '*' : '0';
}

std::string ProfileMatrix::str() const {
    std::ostringstream os;
    for (std::size_t r = 0; r < rows(); ++r) {
        for (std::size_t c = 0; c < cols(); ++c) {
            if (c > 0) os << ' ';
            os << entry(r, c);
        }
        os << '\n';
    }
    return os.str();
}

CellTuple cell_of(const Subspace& s) {
    return CellTuple::from_zero_based(s.pivots(), s.ambient());
}

std::size_t cell_dimension(const CellTuple& t) {
    // n*d - sum of 1-based indices - C(d,2)
    const std::size_t n = t.n(), d = t.length();
    std::size_t sum = 0;
    for (std::size_t i : t.indices()) sum += i + 1;
    return n * d - sum - d * (d - 1) / 2;
}

MatrixGf cell_matrix(const CellTuple& t, const GfPtr& field) {
    MatrixGf m(field, t.length(), t.n());
    for (std::size_t i = 0; i < t.length(); ++i) m.set(i, t.indices()[i], 1);
    return m;
}

CellTuple complement(const CellTuple& t) {
    if (t.length() == t.n())
        throw EmptyComplement("full tuple has an empty complement");
    std::vector<std::size_t> out;
    out.reserve(t.n() - t.length());
    std::size_t pi = 0;
    const auto& idx = t.indices();
    for (std::size_t j = 0; j < t.n(); ++j) {
        if (pi < idx.size() && idx[pi] == j)
            ++pi;
        else
            out.push_back(j);
    }
    return CellTuple::from_zero_based(std::move(out), t.n());
}

FerrersPattern asterisk_pattern(const CellTuple& t) {
    const std::size_t d = t.length(), n = t.n();
    std::vector<std::pair<std::size_t, std::size_t>> free_positions;
    if (d < n) {
        const CellTuple comp = complement(t);
        for (std::size_t i = 0; i < d; ++i)
            for (std::size_t c = 0; c < comp.length(); ++c)
                if (comp.indices()[c] > t.indices()[i]) free_positions.emplace_back(i, c);
    }
    return FerrersPattern(d, n - d, std::move(free_positions));
}

ProfileMatrix profile_matrix(const ProfileVector& v) {
    if (v.weight() == 0) throw EmptyProfile("zero profile vector");
    CellTuple t = v.support();
    FerrersPattern dots = asterisk_pattern(t);
    return ProfileMatrix(std::move(t), std::move(dots));
}

std::vector<CellTuple> enumerate_cells(std::size_t n) {
    if (n == 0) throw ParamError("ambient dimension must be positive");
    std::vector<CellTuple> out;
    for (std::size_t d = 1; d <= n; ++d) {
        std::vector<std::size_t> c = combi::first_combination(d);
        do {
            out.push_back(CellTuple::from_zero_based(c, n));
        } while (combi::next_combination(c, n));
    }
    return out;
}

CellTuple trailing_one_tuple(const Subspace& s) {
    const std::size_t n = s.ambient();
    std::vector<std::size_t> rev(n);
    for (std::size_t j = 0; j < n; ++j) rev[j] = n - 1 - j;
    const Subspace reversed = Subspace::row_space(s.basis().select_columns(rev));
    std::vector<std::size_t> out;
    out.reserve(reversed.pivots().size());
    for (auto it = reversed.pivots().rbegin(); it != reversed.pivots().rend(); ++it)
        out.push_back(n - 1 - *it);
    return CellTuple::from_zero_based(std::move(out), n);
}

std::size_t trailing_cell_dimension(const CellTuple& t) {
    const std::size_t d = t.length();
    std::size_t sum = 0;
    for (std::size_t i : t.indices()) sum += i + 1;
    return sum - d * (d + 1) / 2;
}

}  // namespace subcode
