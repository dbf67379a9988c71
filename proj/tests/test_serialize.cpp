#include "doctest.h"
#include "subcode/serialize.hpp"
#include "test_util.hpp"

using namespace subcode;

TEST_SUITE_BEGIN("serialize");

TEST_CASE("code dump round-trips and is byte-deterministic") {
    auto f = Gf::get(2);
    const SubspaceCode code = build_code(f, 5, Metric::subspace, 4);
    const std::string a = code_to_json(code);
    const std::string b = code_to_json(code);
    CHECK(a == b);

    const SubspaceCode back = code_from_json(a);
    CHECK(back.n == code.n);
    CHECK(back.q == code.q);
    CHECK(back.metric == code.metric);
    CHECK(back.target_distance == code.target_distance);
    REQUIRE(back.cells.size() == code.cells.size());
    for (std::size_t i = 0; i < code.cells.size(); ++i) {
        CHECK(back.cells[i].tuple == code.cells[i].tuple);
        CHECK(back.cells[i].choice_value == code.cells[i].choice_value);
        REQUIRE(back.cells[i].subspaces.size() == code.cells[i].subspaces.size());
        for (std::size_t j = 0; j < code.cells[i].subspaces.size(); ++j)
            CHECK(back.cells[i].subspaces[j] == code.cells[i].subspaces[j]);
    }
    CHECK(code_to_json(back) == a);
}

TEST_CASE("re-read dumps verify to the declared distance") {
    auto f = Gf::get(3);
    const SubspaceCode code = build_code(f, 4, Metric::injection, 2);
    const SubspaceCode back = code_from_json(code_to_json(code));
    const VerifyResult res = verify_min_distance(back);
    CHECK(res.ok);
}

TEST_CASE("malformed dumps are rejected") {
    CHECK_THROWS(code_from_json("{"));
    CHECK_THROWS_AS(code_from_json(R"({"n":3,"q":2,"metric":"nope",)"
                                   R"("target_distance":1,"cells":[]})"),
                    ParamError);
    // 4 entries in a 3-column dump is not a matrix
    CHECK_THROWS_AS(code_from_json(R"({"n":3,"q":2,"metric":"subspace",)"
                                   R"("target_distance":1,)"
                                   R"("cells":[{"tuple":[1],"F":0,)"
                                   R"("subspaces":[[1,0,0,1]]}]})"),
                    ParamError);
}

TEST_CASE("rank-metric code bases round-trip through JSON") {
    const LinearMatrixCode c = gabidulin_code(Gf::get(3), 2, 3, 2);
    const std::string text = matrix_code_to_json(c);
    const LinearMatrixCode back = matrix_code_from_json(text);
    CHECK(back.dim() == c.dim());
    CHECK(back.declared_min_rank() == c.declared_min_rank());
    for (std::size_t i = 0; i < c.dim(); ++i) CHECK(back.basis()[i] == c.basis()[i]);
    CHECK(matrix_code_to_json(back) == text);
    CHECK(min_rank_distance(back) == 2);
}

TEST_CASE("selection report CSV lists every tuple once") {
    const SelectionReport rep = greedy_select(5, Metric::subspace, 4, 2);
    const std::string csv = report_to_csv(rep);
    std::size_t lines = 0;
    for (char c : csv) lines += c == '\n';
    CHECK(lines == 31 + 1);  // header + one row per tuple
    CHECK(csv.find("\"1 2\",2,6,3,selected,\"pick 0\"") != std::string::npos);
    CHECK(csv.find("\"3 4\",2,2,-1,selected,\"pick 1\"") != std::string::npos);
    CHECK(csv.find("\"1 2 3 4 5\",5,0,-5,discarded") != std::string::npos);
}

TEST_CASE("cells listings") {
    const std::string csv = cells_to_csv(3);
    std::size_t lines = 0;
    for (char c : csv) lines += c == '\n';
    CHECK(lines == 7 + 1);
    CHECK(csv.find("\"1 2\",2,2,2") != std::string::npos);
    const std::string json = cells_to_json(2);
    CHECK(json.find("\"tuple\"") != std::string::npos);
}

TEST_CASE("matrix CSV parsing") {
    auto f = Gf::get(2);
    const MatrixGf m = matrix_from_csv(f, "1,1;1,1;0,1");
    CHECK(m == MatrixGf::from_rows(f, {{1, 1}, {1, 1}, {0, 1}}));
    CHECK_THROWS_AS(matrix_from_csv(f, "1,x"), ParamError);
    CHECK_THROWS_AS(matrix_from_csv(f, "1,1;1"), ShapeError);
    CHECK_THROWS_AS(matrix_from_csv(f, "2,0"), ParamError);  // out of range for GF(2)
}

TEST_SUITE_END();
