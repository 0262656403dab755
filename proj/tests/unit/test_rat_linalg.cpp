#include "doctest.h"

#include "rootorbits/linalg.hpp"

using namespace rootorbits;

TEST_CASE("rational arithmetic is exact and normalized") {
    CHECK(Rat(1, 2) + Rat(1, 3) == Rat(5, 6));
    CHECK(Rat(2, 4) == Rat(1, 2));
    CHECK(Rat(-1, -2) == Rat(1, 2));
    CHECK(Rat(1, -2).num() == -1);
    CHECK(Rat(3, 7) * Rat(7, 3) == Rat(1));
    CHECK(Rat(1, 3) - Rat(1, 3) == Rat(0));
    CHECK((Rat(5, 3) / Rat(10, 9)) == Rat(3, 2));
    CHECK(Rat(-7, 2) < Rat(0));
    CHECK(Rat(7, 2).str() == "7/2");
    CHECK(Rat(-4).str() == "-4");
    CHECK_THROWS_AS(Rat(1, 0), RootError);
}

TEST_CASE("rational ops do not silently wrap") {
    Rat big(INT64_MAX / 2, 1);
    CHECK_THROWS_AS(big * Rat(8), RootError);
}

TEST_CASE("matrix product uses the column-image convention") {
    // s_1, s_2 in A_2 by hand: images of basis vectors sit in the columns
    IMat a(2, 2), b(2, 2);
    a(0, 0) = -1; a(0, 1) = 1; a(1, 0) = 0; a(1, 1) = 1;   // s_1
    b(0, 0) = 1;  b(0, 1) = 0; b(1, 0) = 1; b(1, 1) = -1;  // s_2
    IMat c = a * b;
    IVec e2{0, 1};
    // c(alpha_2) = s_1(s_2(alpha_2)) = s_1(-alpha_2) = -alpha_1 - alpha_2
    CHECK(c * e2 == IVec{-1, -1});
}

TEST_CASE("rank and kernel via fraction-free elimination") {
    IMat m(3, 3);
    // rank 2 with kernel (1,1,1): rows sum to zero
    Int rows[3][3] = {{2, -2, 0}, {-1, 2, -1}, {0, -2, 2}};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) m(i, j) = rows[i][j];
    CHECK(rank(m) == 2);
    CHECK(kernel_primitive(m) == IVec{1, 1, 1});

    IMat id = IMat::identity(3);
    CHECK(rank(id) == 3);
    CHECK_THROWS_AS(kernel_primitive(id), RootError);
    CHECK(rank_of_power(m, 2) == 2);
}

TEST_CASE("positive definiteness by leading minors") {
    IMat pd(2, 2);
    pd(0, 0) = 2; pd(0, 1) = -1; pd(1, 0) = -1; pd(1, 1) = 2;
    CHECK(is_positive_definite(pd));
    IMat psd(2, 2);
    psd(0, 0) = 2; psd(0, 1) = -2; psd(1, 0) = -2; psd(1, 1) = 2;
    CHECK_FALSE(is_positive_definite(psd));
}

TEST_CASE("vector helpers") {
    CHECK(vec_sign(IVec{1, 0, 2}) == 1);
    CHECK(vec_sign(IVec{-1, 0, -2}) == -1);
    CHECK(vec_sign(IVec{1, -1, 0}) == 0);
    CHECK(vec_sign(IVec{0, 0}) == 0);
    CHECK(height(IVec{2, 1, 2}) == 5);
    CHECK(primitive_int_row(QVec{Rat(1), Rat(1, 2), Rat(0)}) == IVec{2, 1, 0});
    CHECK(primitive_int_row(QVec{Rat(-4), Rat(2), Rat(6)}) == IVec{-2, 1, 3});
}
