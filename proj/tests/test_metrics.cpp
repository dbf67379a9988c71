#include <random>

#include "doctest.h"
#include "subcode/metrics.hpp"
#include "test_util.hpp"

using namespace subcode;

TEST_SUITE_BEGIN("metrics");

TEST_CASE("subspace_distance examples") {
    auto f = Gf::get(2);
    std::mt19937_64 rng(3);
    const Subspace u = testutil::random_subspace(f, 2, 5, rng);
    CHECK(subspace_distance(u, u) == 0);

    const Subspace e1 = Subspace::row_space(MatrixGf::from_rows(f, {{1, 0}}));
    const Subspace e2 = Subspace::row_space(MatrixGf::from_rows(f, {{0, 1}}));
    CHECK(subspace_distance(e1, e2) == 2);

    const Subspace full = Subspace::row_space(MatrixGf::identity(f, 5));
    CHECK(subspace_distance(u, full) == 3);
}

TEST_CASE("injection_distance examples and the linking identity") {
    auto f = Gf::get(2);
    std::mt19937_64 rng(5);
    const Subspace u = testutil::random_subspace(f, 2, 5, rng);
    CHECK(injection_distance(u, u) == 0);

    const Subspace full = Subspace::row_space(MatrixGf::identity(f, 5));
    CHECK(injection_distance(u, full) == 3);

    SUBCASE("2 d_I = d_s + |dim gap| on random pairs") {
        for (unsigned q : {2u, 3u}) {
            auto fq = Gf::get(q);
            for (int it = 0; it < 200; ++it) {
                const std::size_t du = 1 + rng() % 4, dv = 1 + rng() % 4;
                const Subspace a = testutil::random_subspace(fq, du, 5, rng);
                const Subspace b = testutil::random_subspace(fq, dv, 5, rng);
                const std::size_t gap = du > dv ? du - dv : dv - du;
                CHECK(2 * injection_distance(a, b) == subspace_distance(a, b) + gap);
                if (du == dv)
                    CHECK(injection_distance(a, b) == subspace_distance(a, b) / 2);
            }
        }
    }
}

TEST_CASE("ambient mismatch throws") {
    auto f = Gf::get(2);
    const Subspace a = Subspace::row_space(MatrixGf::from_rows(f, {{1, 0}}));
    const Subspace b = Subspace::row_space(MatrixGf::from_rows(f, {{1, 0, 0}}));
    CHECK_THROWS_AS(subspace_distance(a, b), AmbientMismatch);
    CHECK_THROWS_AS(injection_distance(a, b), AmbientMismatch);
}

TEST_CASE("symmetric and modified symmetric distance examples") {
    const auto t = [](std::vector<std::size_t> ob, std::size_t n) {
        return CellTuple::from_one_based(ob, n);
    };
    CHECK(symmetric_distance(t({1, 2}, 5), t({1, 2}, 5)) == 0);
    CHECK(symmetric_distance(t({1, 2}, 5), t({3, 4}, 5)) == 4);
    CHECK(symmetric_distance(t({1, 2}, 5), t({1, 2, 3, 4, 5}, 5)) == 3);
    CHECK(modified_symmetric_distance(t({1, 2}, 5), t({1, 2}, 5)) == 0);
    CHECK(modified_symmetric_distance(t({1, 2}, 5), t({1, 2, 3, 4, 5}, 5)) == 6);
}

TEST_CASE("modified symmetric distance is a metric, all tuple pairs n <= 6") {
    for (std::size_t n = 1; n <= 6; ++n) {
        const auto cells = enumerate_cells(n);
        for (std::size_t i = 0; i < cells.size(); ++i)
            for (std::size_t j = 0; j < cells.size(); ++j) {
                const std::size_t dij = modified_symmetric_distance(cells[i], cells[j]);
                CHECK(dij == modified_symmetric_distance(cells[j], cells[i]));
                CHECK((dij == 0) == (i == j));
            }
        // triangle inequality on every triple
        for (std::size_t i = 0; i < cells.size(); ++i)
            for (std::size_t j = 0; j < cells.size(); ++j)
                for (std::size_t k = 0; k < cells.size(); ++k)
                    CHECK(modified_symmetric_distance(cells[i], cells[k]) <=
                          modified_symmetric_distance(cells[i], cells[j]) +
                              modified_symmetric_distance(cells[j], cells[k]));
    }
}

TEST_CASE("subspace and injection distances are metrics over GF(2)^4") {
    auto f = Gf::get(2);
    const auto all = testutil::all_subspaces(f, 4);
    for (std::size_t i = 0; i < all.size(); ++i)
        for (std::size_t j = i; j < all.size(); ++j) {
            const std::size_t ds = subspace_distance(all[i], all[j]);
            const std::size_t di = injection_distance(all[i], all[j]);
            CHECK(ds == subspace_distance(all[j], all[i]));
            CHECK(di == injection_distance(all[j], all[i]));
            CHECK((ds == 0) == (all[i] == all[j]));
            CHECK((di == 0) == (all[i] == all[j]));
        }
    // triangle inequality, randomized triples to keep the cubic cost down
    std::mt19937_64 rng(7);
    for (int it = 0; it < 20000; ++it) {
        const Subspace& a = all[rng() % all.size()];
        const Subspace& b = all[rng() % all.size()];
        const Subspace& c = all[rng() % all.size()];
        CHECK(subspace_distance(a, c) <=
              subspace_distance(a, b) + subspace_distance(b, c));
        CHECK(injection_distance(a, c) <=
              injection_distance(a, b) + injection_distance(b, c));
    }
}

TEST_CASE("cell-tuple bounds hold for every pair of subspaces of GF(2)^4") {
    auto f = Gf::get(2);
    const auto all = testutil::all_subspaces(f, 4);
    for (std::size_t i = 0; i < all.size(); ++i)
        for (std::size_t j = 0; j < all.size(); ++j) {
            CHECK(check_distance_bounds(all[i], all[j]));
            // sharper companion bound: twice d_I dominates delta plus the gap
            const std::size_t delta =
                symmetric_distance(cell_of(all[i]), cell_of(all[j]));
            const std::size_t gap = all[i].dim() > all[j].dim()
                                        ? all[i].dim() - all[j].dim()
                                        : all[j].dim() - all[i].dim();
            CHECK(2 * injection_distance(all[i], all[j]) >= delta + gap);
        }
}

TEST_CASE("same-cell distinct subspaces have d_s >= 2 with a trivially true bound") {
    auto f = Gf::get(2);
    std::mt19937_64 rng(11);
    for (int it = 0; it < 100; ++it) {
        const Subspace a = testutil::random_subspace(f, 2, 5, rng);
        const Subspace b = testutil::random_subspace(f, 2, 5, rng);
        if (cell_of(a) != cell_of(b) || a == b) continue;
        CHECK(symmetric_distance(cell_of(a), cell_of(b)) == 0);
        CHECK(subspace_distance(a, b) >= 2);
    }
}

TEST_SUITE_END();
