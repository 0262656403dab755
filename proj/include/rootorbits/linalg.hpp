#pragma once

#include <cstddef>
#include <vector>

#include "rootorbits/rat.hpp"

namespace rootorbits {

using IVec = std::vector<Int>;
using QVec = std::vector<Rat>;

// Dense row-major integer matrix.  Column j holds the image of the j-th
// basis vector, so composition reads left to right: (A*B)v = A(B(v)).
struct IMat {
    int rows = 0;
    int cols = 0;
    std::vector<Int> a;

    IMat() = default;
    IMat(int r, int c) : rows(r), cols(c), a((std::size_t)r * c, 0) {}

    static IMat identity(int n) {
        IMat m(n, n);
        for (int i = 0; i < n; ++i) m(i, i) = 1;
        return m;
    }

    Int& operator()(int i, int j) { return a[(std::size_t)i * cols + j]; }
    Int operator()(int i, int j) const { return a[(std::size_t)i * cols + j]; }

    friend bool operator==(const IMat& x, const IMat& y) {
        return x.rows == y.rows && x.cols == y.cols && x.a == y.a;
    }
};

IMat operator*(const IMat& x, const IMat& y);
IMat operator-(const IMat& x, const IMat& y);
IVec operator*(const IMat& m, const IVec& v);
QVec operator*(const IMat& m, const QVec& v);

// Allocation-free matrix-vector product for hot loops; out must not alias v.
void mul_into(const IMat& m, const IVec& v, IVec& out);

inline Int height(const IVec& v) {
    Int h = 0;
    for (Int x : v) h += x;
    return h;
}

// +1 all coordinates >= 0 (nonzero vector), -1 all <= 0, 0 mixed or zero.
int vec_sign(const IVec& v);

bool is_zero(const IVec& v);
IVec vec_add(const IVec& x, const IVec& y);
IVec vec_sub(const IVec& x, const IVec& y);
IVec vec_neg(const IVec& x);
IVec vec_scale(Int s, const IVec& x);
QVec to_qvec(const IVec& v);

// Dot product of an exact rational row functional with a vector.
Rat dot(const QVec& row, const IVec& v);
Rat dot(const QVec& row, const QVec& v);

// Scale a rational row to a primitive integer row with the same sign.
IVec primitive_int_row(const QVec& row);

struct IVecHash {
    std::size_t operator()(const IVec& v) const noexcept {
        std::size_t h = 1469598103934665603ull;
        for (Int x : v) {
            h ^= (std::size_t)x + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
        }
        return h;
    }
};

// Exact integer linear algebra (fraction-free elimination, arbitrary
// precision internally; no floating point).
int rank(const IMat& m);
Int determinant(const IMat& m);
int rank_of_power(const IMat& m, int e);
bool is_positive_definite(const IMat& sym);

// Primitive integer kernel vector of a matrix with nullity exactly one.
// Throws Err::SolveFailed otherwise.
IVec kernel_primitive(const IMat& m);

} // namespace rootorbits
