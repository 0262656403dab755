#include "doctest.h"

#include "rootorbits/json_io.hpp"

using namespace rootorbits;

TEST_CASE("the standard-type table regenerates exactly") {
    TableReport rep = regenerate_table1();
    for (const TableRowDiff& r : rep.rows) {
        INFO(r.label << ": " << r.detail);
        CHECK(r.match);
    }
    CHECK(rep.rows.size() == 10);
}

TEST_CASE("single golden mutations are detected (sample)") {
    int total = table1_entry_count();
    CHECK(total > 200);
    for (int idx : {0, total / 2, total - 1}) CHECK_FALSE(regenerate_table1(idx).all_match());
    CHECK_THROWS_AS(regenerate_table1(total), RootError);
}

TEST_CASE("matrix JSON input forms") {
    MatrixInput plain = parse_matrix_json("[[2,-2],[-2,2]]");
    CHECK(plain.matrix.rows == 2);
    CHECK(plain.matrix(0, 1) == -2);
    CHECK_FALSE(plain.aff.has_value());

    MatrixInput obj = parse_matrix_json(
        R"({"matrix": [[2,-2,0],[-1,2,-1],[0,-2,2]], "aff": 3, "label": "sample"})");
    CHECK(obj.matrix.rows == 3);
    CHECK(obj.aff == 2);  // stored 0-based
    CHECK(obj.label == "sample");

    CHECK_THROWS_AS(parse_matrix_json("[[2,-2],[-2]]"), RootError);
    CHECK_THROWS_AS(parse_matrix_json("{}"), RootError);
    CHECK_THROWS_AS(parse_matrix_json("[[2.5]]"), RootError);
}

TEST_CASE("serialization is deterministic and exact") {
    CartanData cd = builtin_system("D3(2)");
    AffineFrame fr = affine_frame(cd);
    CoxeterWord c = make_coxeter(cd, {0, 1, 2});
    GammaData gd = gamma_c(cd, fr, c);

    Json a = to_json(gd);
    Json b = to_json(gamma_c(cd, fr, c));
    CHECK(a.dump() == b.dump());
    CHECK(a["gamma"][1] == "1/2");  // exact fraction strings

    Json sys = to_json(cd, fr);
    CHECK(sys["aff"] == 3);  // 1-based on the wire
    CHECK(sys["delta"] == Json::array({1, 1, 1}));

    CHECK(word_to_json({0, 2, 1}) == Json::array({1, 3, 2}));

    // root sets go out sorted lexicographically
    TransversalInf tv = transversal_inf(cd, c);
    Json tj = to_json(tv);
    std::vector<IVec> expected = tv.out;
    std::sort(expected.begin(), expected.end());
    CHECK(tj["out"] == to_json(expected));

    UpsilonData ud = upsilon_fin(cd, fr, c, gd);
    Json uj = to_json(ud);
    CHECK(uj["omega"] == Json::array({Json::array({0, 1, 0})}));
    CHECK(uj["kappa_of"][0]["kappa"] == 2);

    VerifyReport rep = verify_theorem_aff(cd, fr, c);
    Json vj = to_json(rep);
    CHECK(vj["pass"] == true);
    CHECK(vj["checks"].size() == rep.checks.size());
}
