#include "subcode/pluecker.hpp"

#include <algorithm>
#include <random>

#include "subcode/detail/combi.hpp"

namespace subcode {

namespace {

// Sorts the index sequence, counting inversions; returns false on a repeat.
bool sort_with_sign(std::vector<std::size_t>& idx, bool& negate) {
    std::size_t inversions = 0;
    for (std::size_t i = 1; i < idx.size(); ++i)
        for (std::size_t j = i; j > 0 && idx[j - 1] >= idx[j]; --j) {
            if (idx[j - 1] == idx[j]) return false;
            std::swap(idx[j - 1], idx[j]);
            ++inversions;
        }
    negate = (inversions % 2) != 0;
    return true;
}

}  // namespace

PlueckerVector::PlueckerVector(GfPtr field, std::size_t ambient, std::size_t dim,
                               std::vector<fe_t> coords)
    : field_(std::move(field)), ambient_(ambient), dim_(dim), coords_(std::move(coords)) {
    if (dim_ == 0 || dim_ > ambient_) throw ParamError("tuple length out of range");
    if (coords_.size() != combi::binomial(ambient_, dim_))
        throw ParamError("coordinate count must be C(ambient, dim)");
    bool nonzero = false;
    for (fe_t v : coords_) {
        field_->check(v);
        nonzero = nonzero || v != 0;
    }
    if (!nonzero) throw ParamError("all coordinates are zero");
}

Fe PlueckerVector::coordinate(const std::vector<std::size_t>& indices) const {
    if (indices.size() != dim_) throw ParamError("index sequence has wrong length");
    for (std::size_t i : indices)
        if (i >= ambient_) throw ParamError("index out of range");
    std::vector<std::size_t> sorted(indices);
    bool negate = false;
    if (!sort_with_sign(sorted, negate)) return Fe(0, field_);
    const fe_t v = coords_[combi::lex_rank(sorted, ambient_)];
    return Fe(negate ? field_->neg(v) : v, field_);
}

std::vector<std::vector<std::size_t>> PlueckerVector::tuples() const {
    std::vector<std::vector<std::size_t>> out;
    out.reserve(coords_.size());
    std::vector<std::size_t> c = combi::first_combination(dim_);
    do {
        out.push_back(c);
    } while (combi::next_combination(c, ambient_));
    return out;
}

PlueckerVector PlueckerVector::normalized() const {
    std::size_t first = 0;
    while (coords_[first] == 0) ++first;
    const fe_t scale = field_->inv(coords_[first]);
    std::vector<fe_t> out(coords_);
    for (fe_t& v : out) v = field_->mul(v, scale);
    return PlueckerVector(field_, ambient_, dim_, std::move(out));
}

bool PlueckerVector::projectively_equal(const PlueckerVector& o) const {
    if (field_.get() != o.field_.get() || ambient_ != o.ambient_ || dim_ != o.dim_)
        return false;
    return normalized().coords_ == o.normalized().coords_;
}

PlueckerVector pluecker_coordinates(const Subspace& s) {
    const std::size_t n = s.ambient(), d = s.dim();
    std::vector<fe_t> coords;
    coords.reserve(combi::binomial(n, d));
    std::vector<std::size_t> c = combi::first_combination(d);
    do {
        coords.push_back(s.basis().select_columns(c).det().value());
    } while (combi::next_combination(c, n));
    return PlueckerVector(s.field(), n, d, std::move(coords));
}

namespace {

// One exchange relation: sum over a of (-1)^a D(j, k_a) D(k \ k_a).
bool relation_holds(const PlueckerVector& p, const std::vector<std::size_t>& j,
                    const std::vector<std::size_t>& k) {
    const GfPtr& f = p.field();
    Fe acc(0, f);
    std::vector<std::size_t> left(j);
    left.push_back(0);
    std::vector<std::size_t> right(k.size() - 1);
    for (std::size_t a = 0; a < k.size(); ++a) {
        left.back() = k[a];
        std::size_t w = 0;
        for (std::size_t t = 0; t < k.size(); ++t)
            if (t != a) right[w++] = k[t];
        Fe term = p.coordinate(left) * p.coordinate(right);
        acc = (a % 2 == 0) ? acc + term : acc - term;
    }
    return acc.is_zero();
}

}  // namespace

bool check_quadratic_relations(const PlueckerVector& p, std::size_t full_check_limit,
                               std::size_t sample_count) {
    const std::size_t n = p.ambient(), d = p.dim();
    if (d + 1 > n) return true;  // no (d+1)-tuples exist
    if (p.coordinate_count() <= full_check_limit) {
        std::vector<std::size_t> j =
            d >= 1 ? combi::first_combination(d - 1) : std::vector<std::size_t>{};
        do {
            std::vector<std::size_t> k = combi::first_combination(d + 1);
            do {
                if (!relation_holds(p, j, k)) return false;
            } while (combi::next_combination(k, n));
        } while (combi::next_combination(j, n));
        return true;
    }
    // Sampled check, deterministic seed so runs are reproducible.
    std::mt19937_64 rng(0x5eed5eedULL ^ (std::uint64_t(n) << 32) ^ d);
    std::uniform_int_distribution<std::size_t> pick(0, n - 1);
    for (std::size_t it = 0; it < sample_count; ++it) {
        std::vector<std::size_t> j, k;
        auto draw = [&](std::size_t count, std::vector<std::size_t>& out) {
            while (out.size() < count) {
                const std::size_t v = pick(rng);
                if (std::find(out.begin(), out.end(), v) == out.end()) out.push_back(v);
            }
            std::sort(out.begin(), out.end());
        };
        draw(d - 1, j);
        draw(d + 1, k);
        if (!relation_holds(p, j, k)) return false;
    }
    return true;
}

MatrixGf coordinate_matrix(const PlueckerVector& p, const std::vector<std::size_t>& k) {
    if (k.size() != p.dim()) throw ParamError("pivot tuple has wrong length");
    const Fe pivot = p.coordinate(k);
    if (pivot.is_zero()) throw PivotNotInvertible("pivot coordinate is zero");
    const Fe scale = pivot.inverse();
    MatrixGf m(p.field(), p.dim(), p.ambient());
    std::vector<std::size_t> query(k);
    for (std::size_t i = 0; i < p.dim(); ++i) {
        const std::size_t saved = query[i];
        for (std::size_t j = 0; j < p.ambient(); ++j) {
            query[i] = j;
            m.set(i, j, (p.coordinate(query) * scale).value());
        }
        query[i] = saved;
    }
    return m;
}

bool rref_coincidence(const Subspace& s) {
    return coordinate_matrix(pluecker_coordinates(s), s.pivots()) == s.basis();
}

}  // namespace subcode
