#include <cmath>
#include <set>

#include "doctest.h"
#include "subcode/codebuild.hpp"
#include "subcode/metrics.hpp"
#include "test_util.hpp"

using namespace subcode;

TEST_SUITE_BEGIN("codebuild");

namespace {

CellTuple ob(std::vector<std::size_t> one_based, std::size_t n) {
    return CellTuple::from_one_based(std::move(one_based), n);
}

}  // namespace

TEST_CASE("choice_function on the illustration cells") {
    CHECK(choice_function(ob({1, 2}, 5), 2) == 3);
    CHECK(choice_function(ob({3, 4}, 5), 2) == -1);
    CHECK(choice_function(ob({1, 2, 3, 4, 5}, 5), 2) == -5);
}

TEST_CASE("kk_score") {
    SUBCASE("direct evaluations") {
        CHECK(kk_score(ProfileVector::from_string("11000"), 2) == 3);
        CHECK(kk_score(ProfileVector::from_string("00011"), 2) == -2);
        // same support through the tuple-based choice value differs via eta
        CHECK(choice_function(ob({4, 5}, 5), 2) == -3);
    }
    SUBCASE("the sum term equals the cell dimension for every profile, n <= 8") {
        for (std::size_t n = 1; n <= 8; ++n)
            for (const CellTuple& t : enumerate_cells(n)) {
                const ProfileVector v = ProfileVector::from_support(t);
                // delta_r = 1 kills the subtracted term in both scores
                CHECK(kk_score(v, 1) == (long long)cell_dimension(t));
                CHECK(choice_function(t, 1) == (long long)cell_dimension(t));
            }
    }
}

TEST_CASE("greedy_select, subspace metric, n = 5, d_min = 4") {
    SUBCASE("strict rule keeps (1,2) and (3,4) only") {
        const SelectionReport rep =
            greedy_select(5, Metric::subspace, 4, 2, SelectionRule::strict);
        REQUIRE(rep.selected.size() == 2);
        CHECK(rep.rows[rep.selected[0]].tuple == ob({1, 2}, 5));
        CHECK(rep.rows[rep.selected[0]].choice_value == 3);
        CHECK(rep.rows[rep.selected[1]].tuple == ob({3, 4}, 5));
        CHECK(rep.rows[rep.selected[1]].choice_value == -1);
        // the full space is discarded by the first pick
        for (const auto& row : rep.rows)
            if (row.tuple == ob({1, 2, 3, 4, 5}, 5)) {
                CHECK(row.selected_rank == -1);
                CHECK(row.choice_value == -5);
            }
    }
    SUBCASE("paper-illustration rule also keeps the full space") {
        const SelectionReport rep = greedy_select(5, Metric::subspace, 4, 2,
                                                  SelectionRule::paper_illustration);
        bool has12 = false, has34 = false, hasfull = false;
        for (std::size_t i : rep.selected) {
            const auto& row = rep.rows[i];
            if (row.tuple == ob({1, 2}, 5)) has12 = row.choice_value == 3;
            if (row.tuple == ob({3, 4}, 5)) has34 = row.choice_value == -1;
            if (row.tuple == ob({1, 2, 3, 4, 5}, 5)) hasfull = row.choice_value == -5;
        }
        CHECK(has12);
        CHECK(has34);
        CHECK(hasfull);
    }
    SUBCASE("d_min = 1 discards nothing") {
        const SelectionReport rep =
            greedy_select(5, Metric::subspace, 1, 1, SelectionRule::strict);
        CHECK(rep.selected.size() == 31);
    }
    SUBCASE("every enumerated tuple is either selected or carries a reason") {
        const SelectionReport rep = greedy_select(6, Metric::subspace, 4, 2);
        CHECK(rep.rows.size() == 63);
        std::size_t selected = 0;
        for (const auto& row : rep.rows) {
            if (row.selected_rank >= 0) {
                ++selected;
                CHECK(row.reason.empty());
            } else {
                CHECK(!row.reason.empty());
            }
        }
        CHECK(selected == rep.selected.size());
    }
}

TEST_CASE("greedy_select is deterministic") {
    const SelectionReport a = greedy_select(7, Metric::injection, 2, 2);
    const SelectionReport b = greedy_select(7, Metric::injection, 2, 2);
    REQUIRE(a.selected.size() == b.selected.size());
    for (std::size_t i = 0; i < a.selected.size(); ++i)
        CHECK(a.selected[i] == b.selected[i]);
}

TEST_CASE("first pick is the principal floor(n/2) tuple for odd n") {
    for (std::size_t n : {5u, 7u, 9u}) {
        const SelectionReport rep = greedy_select(n, Metric::subspace, 4, 2);
        REQUIRE(!rep.selected.empty());
        const CellTuple& first = rep.rows[rep.selected[0]].tuple;
        CHECK(first.length() == n / 2);
        for (std::size_t i = 0; i < first.length(); ++i) CHECK(first.indices()[i] == i);
    }
}

TEST_CASE("selected cells are pairwise compatible under their rule") {
    for (Metric metric : {Metric::subspace, Metric::injection}) {
        const unsigned target = metric == Metric::subspace ? 4 : 2;
        const SelectionReport rep = greedy_select(6, metric, target, 2);
        for (std::size_t a : rep.selected)
            for (std::size_t b : rep.selected) {
                if (a == b) continue;
                const auto& ta = rep.rows[a].tuple;
                const auto& tb = rep.rows[b].tuple;
                if (metric == Metric::subspace) {
                    CHECK(symmetric_distance(ta, tb) >= target);
                } else {
                    const std::size_t gap = ta.length() > tb.length()
                                                ? ta.length() - tb.length()
                                                : tb.length() - ta.length();
                    CHECK(symmetric_distance(ta, tb) / 2 + gap / 2 >= target);
                }
            }
    }
}

TEST_CASE("rate_lower_bound") {
    SUBCASE("the clamped illustration set gives log2(10)") {
        const SelectionReport rep = greedy_select(5, Metric::subspace, 4, 2,
                                                  SelectionRule::paper_illustration);
        // restrict to the three illustration cells
        SelectionReport sub = rep;
        sub.selected.clear();
        for (std::size_t i : rep.selected) {
            const auto& t = rep.rows[i].tuple;
            if (t == ob({1, 2}, 5) || t == ob({3, 4}, 5) || t == ob({1, 2, 3, 4, 5}, 5))
                sub.selected.push_back(i);
        }
        REQUIRE(sub.selected.size() == 3);
        CHECK(rate_lower_bound(sub, 2) == doctest::Approx(std::log2(10.0)).epsilon(1e-9));
    }
    SUBCASE("a single selected cell gives exactly its choice value") {
        SelectionReport rep = greedy_select(4, Metric::subspace, 4, 2);
        rep.selected.resize(1);
        const long long f = rep.rows[rep.selected[0]].choice_value;
        REQUIRE(f > 0);
        CHECK(rate_lower_bound(rep, 2) == doctest::Approx((double)f).epsilon(1e-9));
    }
}

TEST_CASE("build_cell_code") {
    auto f = Gf::get(2);
    SUBCASE("zero group gives the base point alone") {
        const CellTuple t = ob({1, 3}, 4);
        const LinearMatrixCode zero(f, 2, 2, {}, 1);
        const auto code = build_cell_code(t, zero);
        REQUIRE(code.size() == 1);
        CHECK(code[0].basis() == cell_matrix(t, f));
    }
    SUBCASE("principal 2x2 Gabidulin at delta 2: 4 subspaces, pairwise d_s = 4") {
        const CellTuple t = ob({1, 2}, 4);
        const auto code = build_cell_code(t, gabidulin_code(f, 2, 2, 2));
        REQUIRE(code.size() == 4);
        for (std::size_t i = 0; i < code.size(); ++i)
            for (std::size_t j = i + 1; j < code.size(); ++j)
                CHECK(subspace_distance(code[i], code[j]) == 4);
    }
    SUBCASE("cell code size is q^dim with all members in the cell") {
        const CellTuple t = ob({1, 3}, 5);
        const LinearMatrixCode mrd = gabidulin_code(f, 2, 3, 1);
        const LinearMatrixCode sub = fdrm_subcode(mrd, asterisk_pattern(t));
        const auto code = build_cell_code(t, sub);
        CHECK(code.size() == (1ull << sub.dim()));
        std::set<Subspace> dedup(code.begin(), code.end());
        CHECK(dedup.size() == code.size());
        for (const Subspace& s : code) CHECK(cell_of(s) == t);
    }
    SUBCASE("a group that does not fit the asterisks is rejected") {
        const CellTuple t = ob({2, 3}, 4);  // no dots in the first box column
        CHECK_THROWS_AS(build_cell_code(t, gabidulin_code(f, 2, 2, 2)), FitError);
    }
}

TEST_CASE("within-cell distance guarantee for every affordable cell, n <= 6") {
    auto f = Gf::get(2);
    for (std::size_t n = 4; n <= 6; ++n)
        for (const CellTuple& t : enumerate_cells(n)) {
            const std::size_t d = t.length();
            if (d == n) continue;
            for (unsigned delta : {1u, 2u}) {
                if (delta > std::min(d, n - d)) continue;
                const LinearMatrixCode mrd = gabidulin_code(f, d, n - d, delta);
                const LinearMatrixCode sub = fdrm_subcode(mrd, asterisk_pattern(t));
                if (sub.dim() > 9) continue;
                const auto code = build_cell_code(t, sub);
                for (std::size_t i = 0; i < code.size(); ++i)
                    for (std::size_t j = i + 1; j < code.size(); ++j)
                        CHECK(subspace_distance(code[i], code[j]) >= 2 * delta);
            }
        }
}

TEST_CASE("build_code") {
    auto f = Gf::get(2);
    SUBCASE("n = 4, subspace metric, d_min = 4, verified") {
        const SubspaceCode code = build_code(f, 4, Metric::subspace, 4);
        const VerifyResult res = verify_min_distance(code);
        CHECK(res.ok);
        REQUIRE(res.min_distance.has_value());
        CHECK(*res.min_distance >= 4);
    }
    SUBCASE("n = 5: the principal cell contributes 8 subspaces") {
        const SubspaceCode code = build_code(f, 5, Metric::subspace, 4);
        REQUIRE(!code.cells.empty());
        CHECK(code.cells[0].tuple == ob({1, 2}, 5));
        CHECK(code.cells[0].choice_value == 3);
        CHECK(code.cells[0].subspaces.size() == 8);
    }
    SUBCASE("injection metric with delta_min = 1 uses full-rectangle groups") {
        const SubspaceCode code = build_code(f, 4, Metric::injection, 1);
        const VerifyResult res = verify_min_distance(code);
        CHECK(res.ok);
    }
    SUBCASE("GF(4) build verifies too") {
        const SubspaceCode code = build_code(Gf::get(4), 5, Metric::subspace, 4);
        const VerifyResult res = verify_min_distance(code);
        CHECK(res.ok);
        REQUIRE(res.min_distance.has_value());
        CHECK(*res.min_distance >= 4);
    }
    SUBCASE("n = 2, d_min = 1 collects every subspace of GF(2)^2") {
        const SubspaceCode code = build_code(f, 2, Metric::subspace, 1);
        CHECK(code.cells.size() == 3);
        CHECK(code.size() == 4);  // three lines and the full plane
        std::set<Subspace> all;
        for (const auto& cell : code.cells)
            for (const Subspace& s : cell.subspaces) all.insert(s);
        CHECK(all.size() == testutil::all_subspaces(f, 2).size());
    }
    SUBCASE("floor-rank variant still meets d_min - 1 for odd targets") {
        BuildOptions opts;
        opts.floor_rank = true;
        const SubspaceCode code = build_code(f, 5, Metric::subspace, 3, opts);
        SubspaceCode relaxed = code;
        relaxed.target_distance = 2;
        CHECK(verify_min_distance(relaxed).ok);
    }
    SUBCASE("codeword budget guard") {
        BuildOptions opts;
        opts.max_codewords = 3;
        CHECK_THROWS_AS(build_code(f, 5, Metric::subspace, 4, opts), BudgetExceeded);
    }
}

TEST_CASE("verify_min_distance flags duplicates and short pairs") {
    auto f = Gf::get(2);
    SubspaceCode code;
    code.n = 3;
    code.q = 2;
    code.metric = Metric::subspace;
    code.target_distance = 2;
    const Subspace s = Subspace::row_space(MatrixGf::from_rows(f, {{1, 0, 0}}));
    code.cells.push_back({cell_of(s), 0, {s, s}});
    const VerifyResult res = verify_min_distance(code);
    CHECK_FALSE(res.ok);
    REQUIRE(res.witness.has_value());
    CHECK(res.witness->first == 0);
    CHECK(res.witness->second == 1);
    CHECK(*res.min_distance == 0);

    SUBCASE("singleton codes pass vacuously") {
        SubspaceCode single = code;
        single.cells[0].subspaces.pop_back();
        const VerifyResult ok = verify_min_distance(single);
        CHECK(ok.ok);
        CHECK_FALSE(ok.min_distance.has_value());
    }
    SUBCASE("budget") {
        CHECK_THROWS_AS(verify_min_distance(code, 1), BudgetExceeded);
    }
}

TEST_CASE("cross-cell distances respect the strict selection guarantee") {
    auto f = Gf::get(2);
    const SubspaceCode code = build_code(f, 6, Metric::subspace, 4);
    std::vector<std::pair<const Subspace*, const CellTuple*>> flat;
    for (const auto& cell : code.cells)
        for (const Subspace& s : cell.subspaces) flat.push_back({&s, &cell.tuple});
    for (std::size_t i = 0; i < flat.size(); ++i)
        for (std::size_t j = i + 1; j < flat.size(); ++j) {
            if (*flat[i].second == *flat[j].second) continue;
            CHECK(subspace_distance(*flat[i].first, *flat[j].first) >=
                  symmetric_distance(*flat[i].second, *flat[j].second));
        }
}

TEST_SUITE_END();
