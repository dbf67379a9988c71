#include <random>

#include "doctest.h"
#include "subcode/gf.hpp"

using namespace subcode;

TEST_SUITE_BEGIN("algebra");

TEST_CASE("field construction accepts prime powers only") {
    CHECK(Gf::get(2)->q() == 2);
    CHECK(Gf::get(3)->characteristic() == 3);
    CHECK(Gf::get(4)->degree() == 2);
    CHECK(Gf::get(8)->characteristic() == 2);
    CHECK(Gf::get(9)->degree() == 2);
    CHECK_THROWS_AS(Gf::get(6), ParamError);
    CHECK_THROWS_AS(Gf::get(12), ParamError);
    CHECK_THROWS_AS(Gf::get(1), ParamError);
    CHECK_THROWS_AS(Gf::get(257), ParamError);
}

TEST_CASE("instances are interned") {
    CHECK(Gf::get(4).get() == Gf::get(4).get());
    CHECK(Gf::get(2).get() != Gf::get(3).get());
}

TEST_CASE("GF(2): 1 + 1 = 0") {
    auto f = Gf::get(2);
    CHECK(f->add(1, 1) == 0);
}

TEST_CASE("GF(3): inv(2) = 2") {
    auto f = Gf::get(3);
    CHECK(f->inv(2) == 2);
}

TEST_CASE("GF(4) uses x^2 + x + 1 and x * x = x + 1") {
    auto f = Gf::get(4);
    REQUIRE(f->reduction_poly() == std::vector<unsigned>{1, 1, 1});
    // packed 2 is x, packed 3 is x + 1
    CHECK(f->mul(2, 2) == 3);
    CHECK(f->mul(2, 3) == 1);  // x(x+1) = x^2 + x = 1
}

TEST_CASE("inverse of zero throws") {
    CHECK_THROWS_AS(Gf::get(5)->inv(0), DivisionByZero);
}

TEST_CASE("mixed-field element arithmetic throws") {
    Fe a(1, Gf::get(2)), b(1, Gf::get(3));
    CHECK_THROWS_AS(a + b, FieldMismatch);
    CHECK_THROWS_AS(a * b, FieldMismatch);
}

TEST_CASE("field axioms, exhaustive for q <= 4") {
    for (unsigned q : {2u, 3u, 4u}) {
        auto f = Gf::get(q);
        for (unsigned a = 0; a < q; ++a) {
            CHECK(f->add(a, 0) == a);
            CHECK(f->mul(a, 1) == a);
            CHECK(f->add(a, f->neg(fe_t(a))) == 0);
            if (a != 0) CHECK(f->mul(a, f->inv(fe_t(a))) == 1);
            for (unsigned b = 0; b < q; ++b) {
                CHECK(f->add(a, b) == f->add(b, a));
                CHECK(f->mul(a, b) == f->mul(b, a));
                for (unsigned c = 0; c < q; ++c) {
                    CHECK(f->add(f->add(a, b), c) == f->add(a, f->add(b, c)));
                    CHECK(f->mul(f->mul(a, b), c) == f->mul(a, f->mul(b, c)));
                    CHECK(f->mul(a, f->add(b, c)) ==
                          f->add(f->mul(a, b), f->mul(a, c)));
                }
            }
        }
    }
}

TEST_CASE("field axioms, randomized for larger q") {
    std::mt19937_64 rng(7);
    for (unsigned q : {8u, 9u, 16u, 25u, 27u, 64u, 128u, 256u}) {
        auto f = Gf::get(q);
        std::uniform_int_distribution<unsigned> pick(0, q - 1);
        for (int it = 0; it < 500; ++it) {
            const fe_t a = fe_t(pick(rng)), b = fe_t(pick(rng)), c = fe_t(pick(rng));
            CHECK(f->add(f->add(a, b), c) == f->add(a, f->add(b, c)));
            CHECK(f->mul(f->mul(a, b), c) == f->mul(a, f->mul(b, c)));
            CHECK(f->mul(a, f->add(b, c)) == f->add(f->mul(a, b), f->mul(a, c)));
            if (a != 0) CHECK(f->mul(a, f->inv(a)) == 1);
        }
    }
}

TEST_CASE("packed coefficients round-trip") {
    auto f = Gf::get(9);
    for (unsigned a = 0; a < 9; ++a) {
        const auto c = f->coeffs(fe_t(a));
        REQUIRE(c.size() == 2);
        CHECK(f->from_coeffs(c) == a);
        CHECK(c[0] + 3 * c[1] == a);
    }
}

TEST_SUITE_END();
