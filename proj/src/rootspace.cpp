#include "rootorbits/rootspace.hpp"

#include <algorithm>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace rootorbits {

Rat FormK::value(const QVec& x, const QVec& y) const {
    Rat s(0);
    for (int i = 0; i < gram.rows; ++i) {
        if (x[i].is_zero()) continue;
        for (int j = 0; j < gram.cols; ++j) s += x[i] * Rat(gram(i, j)) * y[j];
    }
    return s;
}

Int FormK::value(const IVec& x, const IVec& y) const {
    Int s = 0;
    for (int i = 0; i < gram.rows; ++i) {
        if (x[i] == 0) continue;
        for (int j = 0; j < gram.cols; ++j) s += x[i] * gram(i, j) * y[j];
    }
    return s;
}

FormK form_K(const CartanData& cd) {
    FormK k;
    k.gram = IMat(cd.n, cd.n);
    for (int i = 0; i < cd.n; ++i)
        for (int j = 0; j < cd.n; ++j) k.gram(i, j) = cd.d[i] * cd.A(i, j);
    return k;
}

Rat FormOmega::value(const QVec& x, const QVec& y) const {
    Rat s(0);
    for (int i = 0; i < gram.rows; ++i) {
        if (x[i].is_zero()) continue;
        for (int j = 0; j < gram.cols; ++j) s += x[i] * Rat(gram(i, j)) * y[j];
    }
    return s;
}

Int FormOmega::value(const IVec& x, const IVec& y) const {
    Int s = 0;
    for (int i = 0; i < gram.rows; ++i) {
        if (x[i] == 0) continue;
        for (int j = 0; j < gram.cols; ++j) s += x[i] * gram(i, j) * y[j];
    }
    return s;
}

FormOmega form_omega(const CartanData& cd, const std::vector<int>& word) {
    if ((int)word.size() != cd.n) fail(Err::NotPermutation, "word must use every letter once");
    std::vector<int> pos(cd.n, -1);
    for (int p = 0; p < cd.n; ++p) {
        int letter = word[p];
        if (letter < 0 || letter >= cd.n || pos[letter] >= 0)
            fail(Err::NotPermutation, "word is not a permutation of the letters");
        pos[letter] = p;
    }
    FormOmega om;
    om.word = word;
    om.gram = IMat(cd.n, cd.n);
    // omega_c(alpha_i^vee, alpha_j) is a_ij, 0, -a_ij according to the
    // relative position of the letters in the word; rescale by d_i to get
    // the values on the alpha basis.
    for (int i = 0; i < cd.n; ++i)
        for (int j = 0; j < cd.n; ++j) {
            Int v = 0;
            if (pos[i] > pos[j]) v = cd.A(i, j);
            else if (pos[i] < pos[j]) v = -cd.A(i, j);
            om.gram(i, j) = cd.d[i] * v;
        }
    return om;
}

Rat coroot_pairing(const CartanData& cd, int i, const QVec& x) {
    Rat s(0);
    for (int j = 0; j < cd.n; ++j) s += Rat(cd.A(i, j)) * x[j];
    return s;
}

Int coroot_pairing(const CartanData& cd, int i, const IVec& x) {
    Int s = 0;
    for (int j = 0; j < cd.n; ++j) s += cd.A(i, j) * x[j];
    return s;
}

QVec reflect_simple(const CartanData& cd, int i, const QVec& x) {
    QVec r = x;
    r[i] -= coroot_pairing(cd, i, x);
    return r;
}

IVec reflect_simple(const CartanData& cd, int i, const IVec& x) {
    IVec r = x;
    r[i] -= coroot_pairing(cd, i, x);
    return r;
}

namespace {

// K(beta^vee, x) for a real root beta, guaranteed integral.
template <typename Vec>
auto coroot_pairing_root(const CartanData& cd, const FormK& K, const IVec& beta, Int norm,
                         const Vec& x) {
    // 2 K(beta, x) / K(beta, beta)
    if constexpr (std::is_same_v<Vec, IVec>) {
        Int twice = 2 * K.value(beta, x);
        if (twice % norm != 0) fail(Err::SolveFailed, "non-integral coroot pairing");
        return twice / norm;
    } else {
        Rat twice = Rat(2);
        Rat kv(0);
        for (int i = 0; i < cd.n; ++i) {
            if (beta[i] == 0) continue;
            for (int j = 0; j < cd.n; ++j) kv += Rat(beta[i] * K.gram(i, j)) * x[j];
        }
        return twice * kv / Rat(norm);
    }
}

} // namespace

QVec reflect_root(const CartanData& cd, const IVec& beta, const QVec& x) {
    FormK K = form_K(cd);
    Int norm = K.value(beta, beta);
    if (norm == 0) fail(Err::NotRealRoot, "K(beta,beta) = 0");
    Rat c = coroot_pairing_root(cd, K, beta, norm, x);
    QVec r = x;
    for (int i = 0; i < cd.n; ++i) r[i] -= c * Rat(beta[i]);
    return r;
}

IVec reflect_root(const CartanData& cd, const IVec& beta, const IVec& x) {
    FormK K = form_K(cd);
    Int norm = K.value(beta, beta);
    if (norm == 0) fail(Err::NotRealRoot, "K(beta,beta) = 0");
    Int c = coroot_pairing_root(cd, K, beta, norm, x);
    IVec r = x;
    for (int i = 0; i < cd.n; ++i) r[i] -= c * beta[i];
    return r;
}

IMat reflect_root_matrix(const CartanData& cd, const IVec& beta) {
    IMat m(cd.n, cd.n);
    for (int j = 0; j < cd.n; ++j) {
        IVec e(cd.n, 0);
        e[j] = 1;
        IVec img = reflect_root(cd, beta, e);
        for (int i = 0; i < cd.n; ++i) m(i, j) = img[i];
    }
    return m;
}

namespace {

// Level-synchronous BFS over positive real roots.  Candidate generation is
// the data-parallel part; deduplication happens once per level.
std::vector<IVec> positive_roots_bfs(const CartanData& cd, Int H, Exec exec) {
    RootSet seen;
    std::vector<IVec> frontier;
    for (int i = 0; i < cd.n; ++i) {
        IVec e(cd.n, 0);
        e[i] = 1;
        seen.insert(e);
        frontier.push_back(e);
    }
    std::vector<IVec> all(frontier);
    // Parallel candidate generation only pays off on wide frontiers.
    constexpr std::size_t kParallelThreshold = 256;
    while (!frontier.empty()) {
        std::vector<IVec> candidates;
        bool wide = exec == Exec::Parallel && frontier.size() >= kParallelThreshold;
        if (wide) {
            std::vector<std::vector<IVec>> local;
#ifdef _OPENMP
#pragma omp parallel
            {
#pragma omp single
                local.resize(omp_get_num_threads());
#pragma omp for schedule(static)
                for (std::ptrdiff_t idx = 0; idx < (std::ptrdiff_t)frontier.size(); ++idx) {
                    auto& out = local[omp_get_thread_num()];
                    for (int i = 0; i < cd.n; ++i) {
                        IVec w = reflect_simple(cd, i, frontier[idx]);
                        if (vec_sign(w) == 1 && height(w) <= H) out.push_back(std::move(w));
                    }
                }
            }
#else
            local.resize(1);
            for (const IVec& v : frontier)
                for (int i = 0; i < cd.n; ++i) {
                    IVec w = reflect_simple(cd, i, v);
                    if (vec_sign(w) == 1 && height(w) <= H) local[0].push_back(std::move(w));
                }
#endif
            for (auto& chunk : local)
                for (auto& w : chunk) candidates.push_back(std::move(w));
        } else {
            for (const IVec& v : frontier)
                for (int i = 0; i < cd.n; ++i) {
                    IVec w = reflect_simple(cd, i, v);
                    if (vec_sign(w) == 1 && height(w) <= H) candidates.push_back(std::move(w));
                }
        }
        std::vector<IVec> next;
        for (auto& w : candidates)
            if (seen.insert(w).second) {
                all.push_back(w);
                next.push_back(std::move(w));
            }
        frontier = std::move(next);
    }
    return all;
}

} // namespace

std::vector<IVec> enumerate_real_roots(const CartanData& cd, Int H, Exec exec) {
    if (H < 1) fail(Err::BoundTooSmall, "height bound must be >= 1");
    std::vector<IVec> pos = positive_roots_bfs(cd, H, exec);
    std::vector<IVec> all;
    all.reserve(2 * pos.size());
    for (const IVec& v : pos) {
        all.push_back(v);
        all.push_back(vec_neg(v));
    }
    std::sort(all.begin(), all.end());
    return all;
}

bool is_real_root(const CartanData& cd, const IVec& v, Int H) {
    Int h = height(v);
    if (h < -H || h > H) fail(Err::WindowExceeded, "vector height outside the enumeration window");
    IVec probe = v;
    if (vec_sign(probe) == -1) probe = vec_neg(probe);
    std::vector<IVec> pos = positive_roots_bfs(cd, H, Exec::Serial);
    return std::find(pos.begin(), pos.end(), probe) != pos.end();
}

std::vector<IVec> enumerate_all_roots_finite(const CartanData& cd) {
    if (cd.typeclass != TypeClass::finite)
        fail(Err::NotFiniteType, "closure enumeration requires finite type");
    // Height never exceeds n * max(d) * n in finite type; BFS terminates on
    // its own, the generous cap only guards against misuse.
    std::vector<IVec> pos = positive_roots_bfs(cd, 1'000'000, Exec::Serial);
    std::vector<IVec> all;
    for (const IVec& v : pos) {
        all.push_back(v);
        all.push_back(vec_neg(v));
    }
    std::sort(all.begin(), all.end());
    return all;
}

std::vector<IVec> finite_subsystem_positive_roots(const CartanData& cd, const AffineFrame& fr) {
    RootSet seen;
    std::vector<IVec> frontier;
    for (int i : fr.fin_indices) {
        IVec e(cd.n, 0);
        e[i] = 1;
        seen.insert(e);
        frontier.push_back(e);
    }
    std::vector<IVec> all(frontier);
    while (!frontier.empty()) {
        std::vector<IVec> next;
        for (const IVec& v : frontier)
            for (int i : fr.fin_indices) {
                IVec w = reflect_simple(cd, i, v);
                if (vec_sign(w) != 1) continue;
                if (seen.insert(w).second) {
                    all.push_back(w);
                    next.push_back(std::move(w));
                }
            }
        frontier = std::move(next);
    }
    std::sort(all.begin(), all.end());
    return all;
}

} // namespace rootorbits
