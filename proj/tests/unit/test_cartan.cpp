#include "doctest.h"

#include "rootorbits/cartan.hpp"
#include "rootorbits/rootspace.hpp"

using namespace rootorbits;

namespace {

IMat mat(std::vector<std::vector<Int>> rows) {
    IMat m((int)rows.size(), (int)rows[0].size());
    for (int i = 0; i < m.rows; ++i)
        for (int j = 0; j < m.cols; ++j) m(i, j) = rows[i][j];
    return m;
}

// Oracle for 2x2 definiteness: a symmetric 2x2 matrix is positive definite
// iff its determinant is positive and a diagonal entry is positive.
bool pd2_oracle(const IMat& K) {
    Int det = K(0, 0) * K(1, 1) - K(0, 1) * K(1, 0);
    return det > 0 && K(0, 0) > 0;
}

const IMat kD32 = mat({{2, -2, 0}, {-1, 2, -1}, {0, -2, 2}});

} // namespace

TEST_CASE("the worked rank-3 twisted example parses as affine with d=(1,2,1)") {
    CartanData cd = parse_cartan(kD32);
    CHECK(cd.typeclass == TypeClass::affine);
    CHECK(cd.d == std::vector<Int>{1, 2, 1});
}

TEST_CASE("1x1 and rank-2 classification") {
    CHECK(parse_cartan(mat({{2}})).typeclass == TypeClass::finite);

    // [[2,-1],[-3,2]] is finite G_2; oracle: exact 2x2 sign test
    CartanData g2 = parse_cartan(mat({{2, -1}, {-3, 2}}));
    CHECK(g2.typeclass == TypeClass::finite);
    CHECK(g2.d == std::vector<Int>{3, 1});
    IMat K(2, 2);
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) K(i, j) = g2.d[i] * g2.A(i, j);
    CHECK(pd2_oracle(K));

    CartanData a11 = parse_cartan(mat({{2, -2}, {-2, 2}}));
    CHECK(a11.typeclass == TypeClass::affine);
    IMat K2(2, 2);
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) K2(i, j) = a11.d[i] * a11.A(i, j);
    CHECK_FALSE(pd2_oracle(K2));
}

TEST_CASE("invalid generalized Cartan matrices are rejected") {
    CHECK_THROWS_AS(parse_cartan(mat({{3}})), RootError);
    CHECK_THROWS_AS(parse_cartan(mat({{2, 1}, {-1, 2}})), RootError);
    CHECK_THROWS_AS(parse_cartan(mat({{2, -1}, {0, 2}})), RootError);

    // inconsistent ratio cycle: the three edges force d_3 both = d_1/4 and = d_1
    IMat bad = mat({{2, -1, -1}, {-2, 2, -1}, {-1, -2, 2}});
    try {
        parse_cartan(bad);
        FAIL("expected NotSymmetrizable");
    } catch (const RootError& e) {
        CHECK(e.code() == Err::NotSymmetrizable);
    }
}

TEST_CASE("reducible matrices classify by component and never as affine") {
    CHECK(parse_cartan(mat({{2, 0}, {0, 2}})).typeclass == TypeClass::finite);
    // affine (+) finite direct sum is not affine under the irreducibility rule
    CartanData cd = parse_cartan(mat({{2, -2, 0}, {-2, 2, 0}, {0, 0, 2}}));
    CHECK(cd.typeclass == TypeClass::indefinite);
    CHECK_THROWS_AS(affine_frame(cd), RootError);
}

TEST_CASE("affine frame of the worked example") {
    CartanData cd = parse_cartan(kD32);
    AffineFrame fr = affine_frame(cd);
    CHECK(fr.delta == IVec{1, 1, 1});
    CHECK(fr.aff == 2);
    CHECK(fr.f == 1);
    CHECK(fr.theta == IVec{1, 1, 0});
    CHECK(fr.fin_indices == std::vector<int>{0, 1});
}

TEST_CASE("affine frame of small standard systems") {
    CartanData a11 = builtin_system("A(1)", 2);
    AffineFrame fr = affine_frame(a11);
    CHECK(fr.delta == IVec{1, 1});
    CHECK(fr.aff == 1);
    CHECK(fr.theta == IVec{1, 0});

    CartanData a41 = builtin_system("A(1)", 5);
    AffineFrame fr5 = affine_frame(a41);
    CHECK(fr5.delta == IVec{1, 1, 1, 1, 1});
    CHECK(fr5.f == 1);
    for (int i = 0; i < 5; ++i) {
        Int s = 0;
        for (int j = 0; j < 5; ++j) s += a41.A(i, j) * fr5.delta[j];
        CHECK(s == 0);
    }
}

TEST_CASE("invalid affine node override is rejected") {
    CartanData cd = parse_cartan(kD32);
    // deleting the middle node leaves A_1 x A_1, but theta is not a root there
    CHECK_THROWS_AS(affine_frame(cd, 1), RootError);
    CHECK(affine_frame(cd, 2).aff == 2);
    // the even twisted rank-2 type: only the node with mark 2 works
    CartanData a22 = builtin_system("A2(2)");
    CHECK(affine_frame(a22).aff == 1);
    CHECK(affine_frame(a22).f == 2);
    CHECK_THROWS_AS(affine_frame(a22, 0), RootError);
}

TEST_CASE("catalog labels") {
    CHECK(builtin_system("D2", 3).label == "D3(2) n=3");
    CHECK(builtin_system("D3(2)").A == kD32);
    CHECK(builtin_system("A(1)", 2).A == mat({{2, -2}, {-2, 2}}));
    CHECK(builtin_system("A1", 2).A == mat({{2, -2}, {-2, 2}}));
    CHECK(builtin_system("G(1)", 3).typeclass == TypeClass::affine);
    CHECK(builtin_system("G2(1)").A == mat({{2, -3, 0}, {-1, 2, -1}, {0, -1, 2}}));
    CHECK(builtin_system("B4(1)").n == 5);
    CHECK(builtin_system("A5(2)").n == 4);
    CHECK(builtin_system("A4(2)").n == 3);
    CHECK(builtin_system("E6(2)").n == 5);
    CHECK(builtin_system("D4(3)").n == 3);

    CHECK_THROWS_AS(builtin_system("Q", 3), RootError);
    CHECK_THROWS_AS(builtin_system("B(1)", 3), RootError);   // needs n >= 4
    CHECK_THROWS_AS(builtin_system("D", 3), RootError);      // finite D needs n >= 4
    CHECK_THROWS_AS(builtin_system("A(2)", 5), RootError);   // ambiguous without subscript
    CHECK_THROWS_AS(builtin_system("A(1)", 4, 9), RootError);
}

TEST_CASE("catalog-wide structural invariants") {
    for (const CatalogEntry& e : default_catalog()) {
        CartanData cd = builtin_system(e.label, e.n, e.k);
        INFO(cd.label);
        for (int i = 0; i < cd.n; ++i)
            for (int j = 0; j < cd.n; ++j) CHECK(cd.d[i] * cd.A(i, j) == cd.d[j] * cd.A(j, i));
        CHECK(parse_cartan(cd.A).typeclass == cd.typeclass);
        if (cd.typeclass != TypeClass::affine) continue;
        AffineFrame fr = affine_frame(cd);
        for (int i = 0; i < cd.n; ++i) {
            CHECK(fr.delta[i] > 0);
            Int s = 0;
            for (int j = 0; j < cd.n; ++j) s += cd.A(i, j) * fr.delta[j];
            CHECK(s == 0);
        }
        IMat sub(cd.n - 1, cd.n - 1);
        for (int i = 0, ri = 0; i < cd.n; ++i) {
            if (i == fr.aff) continue;
            for (int j = 0, rj = 0; j < cd.n; ++j) {
                if (j == fr.aff) continue;
                sub(ri, rj++) = cd.A(i, j);
            }
            ++ri;
        }
        CHECK(parse_cartan(sub).typeclass == TypeClass::finite);
        auto roots = finite_subsystem_positive_roots(cd, fr);
        CHECK(std::find(roots.begin(), roots.end(), fr.theta) != roots.end());
    }
}
