#include "subcode/codebuild.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "subcode/lifting.hpp"
#include "subcode/metrics.hpp"

namespace subcode {

const char* metric_name(Metric m) {
    return m == Metric::subspace ? "subspace" : "injection";
}

const char* rule_name(SelectionRule r) {
    switch (r) {
        case SelectionRule::strict: return "strict";
        case SelectionRule::paper_illustration: return "paper-illustration";
        case SelectionRule::dm: return "dm";
    }
    return "?";
}

long long choice_function(const CellTuple& t, unsigned delta_r) {
    if (delta_r < 1) throw ParamError("minimum rank must be at least 1");
    const long long d = (long long)t.length();
    const long long nd = (long long)t.n() - d;
    return (long long)cell_dimension(t) - std::max(d, nd) * (long long)(delta_r - 1);
}

long long kk_score(const ProfileVector& v, unsigned delta_r) {
    if (delta_r < 1) throw ParamError("minimum rank must be at least 1");
    const std::size_t n = v.length();
    const auto& bits = v.bits();
    long long sum = 0;
    long long ones_prefix = 0;
    for (std::size_t i = 0; i < n; ++i) {
        ones_prefix += bits[i];
        if (!bits[i]) sum += ones_prefix;  // complement(v)_i * sum_{j<=i} v_j
    }
    const long long wt = (long long)v.weight();
    if (wt == 0) throw EmptyProfile("zero profile vector");
    std::size_t first = 0;
    while (!bits[first]) ++first;
    const long long eta = (long long)n - (wt + (long long)(first + 1)) + 1;
    return sum - std::max(wt, eta) * (long long)(delta_r - 1);
}

namespace {

bool conflicts(Metric metric, SelectionRule rule, unsigned target, const CellTuple& a,
               const CellTuple& b, long long f_b, std::string* why) {
    const std::size_t delta = symmetric_distance(a, b);
    const std::size_t gap =
        a.length() > b.length() ? a.length() - b.length() : b.length() - a.length();
    bool hit = false;
    std::ostringstream os;
    if (rule == SelectionRule::dm) {
        const std::size_t dm = delta + gap;
        const std::size_t bound = metric == Metric::injection ? 2ull * target : target;
        hit = dm < bound;
        if (hit) os << "Dm" << a.str() << "=" << dm << "<" << bound;
    } else if (metric == Metric::subspace) {
        hit = delta < target;
        if (hit) os << "D" << a.str() << "=" << delta << "<" << target;
    } else {
        const std::size_t lhs = delta / 2 + gap / 2;
        hit = lhs < target;
        if (hit) os << "floor" << a.str() << "=" << lhs << "<" << target;
    }
    if (hit && rule == SelectionRule::paper_illustration && f_b <= 0) {
        // a cell that only ever contributes its base point is kept
        return false;
    }
    if (hit && why) *why = os.str();
    return hit;
}

}  // namespace

SelectionReport greedy_select(std::size_t n, Metric metric, unsigned target_distance,
                              unsigned delta_r, SelectionRule rule) {
    if (target_distance < 1) throw ParamError("target distance must be at least 1");
    SelectionReport rep;
    rep.n = n;
    rep.metric = metric;
    rep.target_distance = target_distance;
    rep.delta_r = delta_r;
    rep.rule = rule;

    const std::vector<CellTuple> cells = enumerate_cells(n);
    rep.rows.reserve(cells.size());
    for (const CellTuple& t : cells)
        rep.rows.push_back({t, choice_function(t, delta_r), -1, ""});

    std::vector<std::size_t> alive(cells.size());
    for (std::size_t i = 0; i < alive.size(); ++i) alive[i] = i;

    int pick = 0;
    while (!alive.empty()) {
        std::size_t best = alive[0];
        for (std::size_t i : alive)
            if (rep.rows[i].choice_value > rep.rows[best].choice_value) best = i;
        rep.rows[best].selected_rank = pick++;
        rep.selected.push_back(best);

        std::vector<std::size_t> keep;
        keep.reserve(alive.size());
        for (std::size_t i : alive) {
            if (i == best) continue;
            std::string why;
            if (conflicts(metric, rule, target_distance, rep.rows[best].tuple,
                          rep.rows[i].tuple, rep.rows[i].choice_value, &why)) {
                rep.rows[i].reason = why;
            } else {
                keep.push_back(i);
            }
        }
        alive.swap(keep);
    }
    return rep;
}

long double rate_lower_bound(const SelectionReport& report, unsigned q) {
    if (report.selected.empty()) throw ParamError("empty selection");
    if (q < 2) throw ParamError("field order must be at least 2");
    unsigned __int128 sum = 0;
    const long double log2q = std::log2((long double)q);
    for (std::size_t i : report.selected) {
        const long long f = std::max(report.rows[i].choice_value, 0LL);
        if ((long double)f * log2q > 120.0L)
            throw ParamError("rate sum exceeds the exact accumulator range");
        unsigned __int128 term = 1;
        for (long long e = 0; e < f; ++e) term *= q;
        const unsigned __int128 prev = sum;
        sum += term;
        if (sum < prev) throw ParamError("rate sum exceeds the exact accumulator range");
    }
    const long double hi = (long double)(std::uint64_t)(sum >> 64);
    const long double lo = (long double)(std::uint64_t)sum;
    const long double value = hi * 18446744073709551616.0L + lo;
    return std::log2(value) / log2q;
}

std::vector<Subspace> build_cell_code(const CellTuple& t, const LinearMatrixCode& g) {
    const std::size_t d = t.length(), n = t.n();
    if (g.rows() != d || g.cols() != n - d)
        throw ShapeError("codeword shape must be d x (n-d) for the cell");
    const FerrersPattern pattern = asterisk_pattern(t);
    for (const MatrixGf& b : g.basis())
        if (!fits(b, pattern))
            throw FitError("rank-metric code does not fit the cell's asterisks");

    const MatrixGf base = cell_matrix(t, g.field());
    const MatrixGf comp =
        d < n ? cell_matrix(complement(t), g.field()) : MatrixGf(g.field(), 0, n);

    const std::uint64_t count = g.size();
    std::vector<Subspace> out;
    out.reserve(count);
    for (std::uint64_t idx = 0; idx < count; ++idx) {
        const MatrixGf gw = g.span_element(idx);
        const MatrixGf basis = d < n ? base + gw * comp : base;
        out.push_back(Subspace::from_rref(basis, t.indices()));
    }
    return out;
}

std::size_t SubspaceCode::size() const {
    std::size_t total = 0;
    for (const CellBlock& c : cells) total += c.subspaces.size();
    return total;
}

unsigned within_cell_rank(Metric metric, unsigned target_distance, bool floor_rank) {
    if (target_distance < 1) throw ParamError("target distance must be at least 1");
    if (metric == Metric::injection) return target_distance;
    return std::max(1u, floor_rank ? target_distance / 2 : (target_distance + 1) / 2);
}

SubspaceCode build_from_selection(const GfPtr& field, const SelectionReport& rep,
                                  const BuildOptions& opts) {
    SubspaceCode code;
    code.n = rep.n;
    code.q = field->q();
    code.metric = rep.metric;
    code.target_distance = rep.target_distance;
    {
        std::ostringstream os;
        os << "n=" << rep.n << " q=" << field->q()
           << " metric=" << metric_name(rep.metric) << " target=" << rep.target_distance
           << " delta_r=" << rep.delta_r << " rule=" << rule_name(rep.rule);
        code.provenance = os.str();
    }

    std::uint64_t total = 0;
    for (std::size_t i : rep.selected) {
        const CellTuple& t = rep.rows[i].tuple;
        const long long f = rep.rows[i].choice_value;
        SubspaceCode::CellBlock block{t, f, {}};
        if (f > 0) {
            const LinearMatrixCode mrd =
                gabidulin_code(field, t.length(), rep.n - t.length(), rep.delta_r);
            const LinearMatrixCode sub = fdrm_subcode(mrd, asterisk_pattern(t));
            total += sub.size();
            if (total > opts.max_codewords)
                throw BudgetExceeded("construction exceeds the codeword budget");
            block.subspaces = build_cell_code(t, sub);
        } else {
            total += 1;
            if (total > opts.max_codewords)
                throw BudgetExceeded("construction exceeds the codeword budget");
            block.subspaces.push_back(
                Subspace::from_rref(cell_matrix(t, field), t.indices()));
        }
        code.cells.push_back(std::move(block));
    }
    return code;
}

SubspaceCode build_code(const GfPtr& field, std::size_t n, Metric metric,
                        unsigned target_distance, const BuildOptions& opts) {
    const unsigned delta_r = within_cell_rank(metric, target_distance, opts.floor_rank);
    const SelectionReport rep =
        greedy_select(n, metric, target_distance, delta_r, opts.rule);
    return build_from_selection(field, rep, opts);
}

VerifyResult verify_min_distance(const SubspaceCode& code, std::uint64_t budget) {
    std::vector<const Subspace*> all;
    for (const auto& cell : code.cells)
        for (const Subspace& s : cell.subspaces) all.push_back(&s);
    if (all.size() > budget)
        throw BudgetExceeded("too many codewords for pairwise verification");

    VerifyResult res;
    for (std::size_t i = 0; i < all.size() && res.ok; ++i)
        for (std::size_t j = i + 1; j < all.size(); ++j) {
            const std::size_t dist = code.metric == Metric::subspace
                                         ? subspace_distance(*all[i], *all[j])
                                         : injection_distance(*all[i], *all[j]);
            ++res.pair_count;
            if (!res.min_distance || dist < *res.min_distance) res.min_distance = dist;
            if (dist < code.target_distance) {
                res.ok = false;
                res.witness = {i, j};
                break;
            }
        }
    return res;
}

}  // namespace subcode
