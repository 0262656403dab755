#include "rootorbits/linalg.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <numeric>

namespace rootorbits {

using Big = boost::multiprecision::cpp_int;

IMat operator*(const IMat& x, const IMat& y) {
    if (x.cols != y.rows) fail(Err::BadInput, "matrix shape mismatch");
    IMat r(x.rows, y.cols);
    for (int i = 0; i < x.rows; ++i)
        for (int k = 0; k < x.cols; ++k) {
            Int xik = x(i, k);
            if (xik == 0) continue;
            for (int j = 0; j < y.cols; ++j) r(i, j) += xik * y(k, j);
        }
    return r;
}

IMat operator-(const IMat& x, const IMat& y) {
    if (x.rows != y.rows || x.cols != y.cols) fail(Err::BadInput, "matrix shape mismatch");
    IMat r(x.rows, x.cols);
    for (std::size_t i = 0; i < x.a.size(); ++i) r.a[i] = x.a[i] - y.a[i];
    return r;
}

IVec operator*(const IMat& m, const IVec& v) {
    if (m.cols != (int)v.size()) fail(Err::BadInput, "matrix/vector shape mismatch");
    IVec r(m.rows, 0);
    for (int i = 0; i < m.rows; ++i) {
        Int s = 0;
        for (int j = 0; j < m.cols; ++j) s += m(i, j) * v[j];
        r[i] = s;
    }
    return r;
}

QVec operator*(const IMat& m, const QVec& v) {
    if (m.cols != (int)v.size()) fail(Err::BadInput, "matrix/vector shape mismatch");
    QVec r(m.rows, Rat(0));
    for (int i = 0; i < m.rows; ++i) {
        Rat s(0);
        for (int j = 0; j < m.cols; ++j) s += Rat(m(i, j)) * v[j];
        r[i] = s;
    }
    return r;
}

void mul_into(const IMat& m, const IVec& v, IVec& out) {
    out.resize(m.rows);
    for (int i = 0; i < m.rows; ++i) {
        Int s = 0;
        const Int* row = &m.a[(std::size_t)i * m.cols];
        for (int j = 0; j < m.cols; ++j) s += row[j] * v[j];
        out[i] = s;
    }
}

int vec_sign(const IVec& v) {
    bool pos = false, neg = false;
    for (Int x : v) {
        if (x > 0) pos = true;
        if (x < 0) neg = true;
    }
    if (pos && !neg) return 1;
    if (neg && !pos) return -1;
    return 0;
}

bool is_zero(const IVec& v) {
    return std::all_of(v.begin(), v.end(), [](Int x) { return x == 0; });
}

IVec vec_add(const IVec& x, const IVec& y) {
    IVec r(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) r[i] = x[i] + y[i];
    return r;
}

IVec vec_sub(const IVec& x, const IVec& y) {
    IVec r(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) r[i] = x[i] - y[i];
    return r;
}

IVec vec_neg(const IVec& x) {
    IVec r(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) r[i] = -x[i];
    return r;
}

IVec vec_scale(Int s, const IVec& x) {
    IVec r(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) r[i] = s * x[i];
    return r;
}

QVec to_qvec(const IVec& v) {
    QVec r(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) r[i] = Rat(v[i]);
    return r;
}

Rat dot(const QVec& row, const IVec& v) {
    Rat s(0);
    for (std::size_t i = 0; i < row.size(); ++i) s += row[i] * Rat(v[i]);
    return s;
}

Rat dot(const QVec& row, const QVec& v) {
    Rat s(0);
    for (std::size_t i = 0; i < row.size(); ++i) s += row[i] * v[i];
    return s;
}

IVec primitive_int_row(const QVec& row) {
    Int l = 1;
    for (const Rat& r : row) l = std::lcm(l, r.den());
    IVec out(row.size());
    Int g = 0;
    for (std::size_t i = 0; i < row.size(); ++i) {
        out[i] = row[i].num() * (l / row[i].den());
        g = std::gcd(g, out[i] < 0 ? -out[i] : out[i]);
    }
    if (g > 1)
        for (Int& x : out) x /= g;
    return out;
}

namespace {

struct BigMat {
    int rows, cols;
    std::vector<Big> a;
    BigMat(int r, int c) : rows(r), cols(c), a((std::size_t)r * c) {}
    Big& operator()(int i, int j) { return a[(std::size_t)i * cols + j]; }
    const Big& operator()(int i, int j) const { return a[(std::size_t)i * cols + j]; }
};

BigMat to_big(const IMat& m) {
    BigMat b(m.rows, m.cols);
    for (std::size_t i = 0; i < m.a.size(); ++i) b.a[i] = m.a[i];
    return b;
}

// Fraction-free (Bareiss) forward elimination with row and column tracking.
// Returns the rank; on exit the first `rank` pivot rows of m are in echelon
// form over the permuted columns colperm.
int bareiss_echelon(BigMat& m, std::vector<int>& colperm) {
    colperm.resize(m.cols);
    for (int j = 0; j < m.cols; ++j) colperm[j] = j;
    Big prev = 1;
    int r = 0;
    for (int k = 0; k < m.cols && r < m.rows; ++k) {
        int pi = -1, pj = -1;
        for (int j = k; j < m.cols && pi < 0; ++j)
            for (int i = r; i < m.rows; ++i)
                if (m(i, colperm[j]) != 0) {
                    pi = i;
                    pj = j;
                    break;
                }
        if (pi < 0) break;
        std::swap(colperm[k], colperm[pj]);
        if (pi != r)
            for (int j = 0; j < m.cols; ++j) std::swap(m(pi, j), m(r, j));
        const Big pivot = m(r, colperm[k]);
        for (int i = r + 1; i < m.rows; ++i) {
            for (int j = k + 1; j < m.cols; ++j) {
                Big v = m(i, colperm[j]) * pivot - m(i, colperm[k]) * m(r, colperm[j]);
                m(i, colperm[j]) = v / prev;
            }
            m(i, colperm[k]) = 0;
        }
        prev = pivot;
        ++r;
    }
    return r;
}

Big determinant_big(BigMat m) {
    if (m.rows != m.cols) fail(Err::BadInput, "determinant of non-square matrix");
    int n = m.rows;
    Big prev = 1;
    int sign = 1;
    for (int k = 0; k < n - 1; ++k) {
        if (m(k, k) == 0) {
            int p = -1;
            for (int i = k + 1; i < n; ++i)
                if (m(i, k) != 0) {
                    p = i;
                    break;
                }
            if (p < 0) return 0;
            for (int j = 0; j < n; ++j) std::swap(m(k, j), m(p, j));
            sign = -sign;
        }
        const Big pivot = m(k, k);
        for (int i = k + 1; i < n; ++i) {
            for (int j = k + 1; j < n; ++j)
                m(i, j) = (m(i, j) * pivot - m(i, k) * m(k, j)) / prev;
            m(i, k) = 0;
        }
        prev = pivot;
    }
    return sign > 0 ? m(n - 1, n - 1) : -m(n - 1, n - 1);
}

} // namespace

int rank(const IMat& m) {
    BigMat b = to_big(m);
    std::vector<int> colperm;
    return bareiss_echelon(b, colperm);
}

Int determinant(const IMat& m) {
    if (m.rows == 1) return m(0, 0);
    Big d = determinant_big(to_big(m));
    if (d > (std::numeric_limits<Int>::max)() || d < (std::numeric_limits<Int>::min)())
        fail(Err::Overflow, "determinant out of 64-bit range");
    return (Int)d;
}

int rank_of_power(const IMat& m, int e) {
    if (m.rows != m.cols) fail(Err::BadInput, "power of non-square matrix");
    int n = m.rows;
    BigMat acc(n, n);
    for (int i = 0; i < n; ++i) acc(i, i) = 1;
    BigMat base = to_big(m);
    for (int t = 0; t < e; ++t) {
        BigMat next(n, n);
        for (int i = 0; i < n; ++i)
            for (int k = 0; k < n; ++k) {
                if (acc(i, k) == 0) continue;
                for (int j = 0; j < n; ++j) next(i, j) += acc(i, k) * base(k, j);
            }
        acc = next;
    }
    std::vector<int> colperm;
    return bareiss_echelon(acc, colperm);
}

bool is_positive_definite(const IMat& sym) {
    if (sym.rows != sym.cols) fail(Err::BadInput, "definiteness of non-square matrix");
    for (int k = 1; k <= sym.rows; ++k) {
        BigMat lead(k, k);
        for (int i = 0; i < k; ++i)
            for (int j = 0; j < k; ++j) lead(i, j) = sym(i, j);
        if (determinant_big(lead) <= 0) return false;
    }
    return true;
}

IVec kernel_primitive(const IMat& m) {
    BigMat b = to_big(m);
    std::vector<int> colperm;
    int r = bareiss_echelon(b, colperm);
    if (r != m.cols - 1) fail(Err::SolveFailed, "kernel is not one-dimensional");

    // Back-substitute with the free column set to the running denominator,
    // keeping everything integral.
    std::vector<Big> x(m.cols, 0);
    int freecol = colperm[m.cols - 1];
    x[freecol] = 1;
    Big scale = 1;
    for (int i = r - 1; i >= 0; --i) {
        int pc = colperm[i];
        Big s = 0;
        for (int j = i + 1; j < m.cols; ++j) s += b(i, colperm[j]) * x[colperm[j]];
        Big pivot = b(i, pc);
        Big g = boost::multiprecision::gcd(boost::multiprecision::abs(s), boost::multiprecision::abs(pivot));
        if (g == 0) g = 1;
        Big mult = boost::multiprecision::abs(pivot) / g;
        if (mult != 1) {
            for (Big& v : x) v *= mult;
            scale *= mult;
            s *= mult;
        }
        x[pc] = -s / pivot;
    }
    Big g = 0;
    for (const Big& v : x) g = boost::multiprecision::gcd(g, boost::multiprecision::abs(v));
    if (g == 0) fail(Err::SolveFailed, "trivial kernel vector");
    IVec out(m.cols);
    for (int i = 0; i < m.cols; ++i) {
        Big v = x[i] / g;
        if (v > (std::numeric_limits<Int>::max)() || v < (std::numeric_limits<Int>::min)())
            fail(Err::Overflow, "kernel vector out of 64-bit range");
        out[i] = (Int)v;
    }
    return out;
}

} // namespace rootorbits
