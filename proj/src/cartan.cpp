#include "rootorbits/cartan.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <set>
#include <unordered_set>

namespace rootorbits {

const char* typeclass_name(TypeClass t) {
    switch (t) {
        case TypeClass::finite: return "finite";
        case TypeClass::affine: return "affine";
        case TypeClass::indefinite: return "indefinite";
    }
    return "?";
}

std::vector<std::vector<int>> components(const CartanData& cd) {
    std::vector<int> comp(cd.n, -1);
    std::vector<std::vector<int>> out;
    for (int s = 0; s < cd.n; ++s) {
        if (comp[s] >= 0) continue;
        int id = (int)out.size();
        out.emplace_back();
        std::vector<int> stack{s};
        comp[s] = id;
        while (!stack.empty()) {
            int i = stack.back();
            stack.pop_back();
            out[id].push_back(i);
            for (int j = 0; j < cd.n; ++j)
                if (cd.adjacent(i, j) && comp[j] < 0) {
                    comp[j] = id;
                    stack.push_back(j);
                }
        }
        std::sort(out[id].begin(), out[id].end());
    }
    return out;
}

namespace {

void validate_gcm(const IMat& A) {
    if (A.rows != A.cols || A.rows < 1) fail(Err::NotGCM, "matrix must be square, n >= 1");
    for (int i = 0; i < A.rows; ++i) {
        if (A(i, i) != 2) fail(Err::NotGCM, "diagonal entry != 2");
        for (int j = 0; j < A.cols; ++j) {
            if (i == j) continue;
            if (A(i, j) > 0) fail(Err::NotGCM, "positive off-diagonal entry");
            if ((A(i, j) == 0) != (A(j, i) == 0)) fail(Err::NotGCM, "asymmetric zero pattern");
        }
    }
}

// Propagate d_i a_ij = d_j a_ji along the Dynkin graph; an inconsistent
// cycle means the matrix is not symmetrizable.  Components are normalized
// independently to minimal positive integers.
std::vector<Int> symmetrizers(const IMat& A) {
    int n = A.rows;
    std::vector<Rat> d(n, Rat(0));
    std::vector<Int> out(n, 0);
    std::vector<int> seen(n, 0);
    for (int s = 0; s < n; ++s) {
        if (seen[s]) continue;
        std::vector<int> compnodes;
        d[s] = Rat(1);
        seen[s] = 1;
        std::vector<int> stack{s};
        while (!stack.empty()) {
            int i = stack.back();
            stack.pop_back();
            compnodes.push_back(i);
            for (int j = 0; j < n; ++j) {
                if (j == i || A(i, j) == 0) continue;
                Rat dj = d[i] * Rat(A(i, j)) / Rat(A(j, i));
                if (seen[j]) {
                    if (d[j] != dj) fail(Err::NotSymmetrizable, "inconsistent ratio cycle");
                } else {
                    d[j] = dj;
                    seen[j] = 1;
                    stack.push_back(j);
                }
            }
        }
        Int l = 1;
        for (int i : compnodes) l = std::lcm(l, d[i].den());
        Int g = 0;
        for (int i : compnodes) g = std::gcd(g, d[i].num() * (l / d[i].den()));
        for (int i : compnodes) out[i] = d[i].num() * (l / d[i].den()) / g;
    }
    return out;
}

IMat symmetrized_form(const IMat& A, const std::vector<Int>& d) {
    IMat K(A.rows, A.cols);
    for (int i = 0; i < A.rows; ++i)
        for (int j = 0; j < A.cols; ++j) K(i, j) = d[i] * A(i, j);
    return K;
}

IMat delete_index(const IMat& m, int k) {
    IMat r(m.rows - 1, m.cols - 1);
    for (int i = 0, ri = 0; i < m.rows; ++i) {
        if (i == k) continue;
        for (int j = 0, rj = 0; j < m.cols; ++j) {
            if (j == k) continue;
            r(ri, rj) = m(i, j);
            ++rj;
        }
        ++ri;
    }
    return r;
}

TypeClass classify(const IMat& A, const std::vector<Int>& d) {
    IMat K = symmetrized_form(A, d);
    if (is_positive_definite(K)) return TypeClass::finite;
    if (A.rows >= 2 && rank(K) == A.rows - 1) {
        bool all_proper_pd = true;
        for (int i = 0; i < A.rows && all_proper_pd; ++i)
            all_proper_pd = is_positive_definite(delete_index(K, i));
        if (all_proper_pd) return TypeClass::affine;
    }
    return TypeClass::indefinite;
}

// Positive roots of the finite subsystem obtained by deleting `aff`,
// as full-length vectors with zero aff coordinate, up to the given height.
std::set<IVec> finite_positive_roots_capped(const IMat& A, int aff, Int hmax) {
    int n = A.rows;
    std::set<IVec> roots;
    std::vector<IVec> frontier;
    for (int i = 0; i < n; ++i) {
        if (i == aff) continue;
        IVec e(n, 0);
        e[i] = 1;
        roots.insert(e);
        frontier.push_back(e);
    }
    while (!frontier.empty()) {
        std::vector<IVec> next;
        for (const IVec& v : frontier) {
            for (int i = 0; i < n; ++i) {
                if (i == aff) continue;
                Int pair = 0;
                for (int j = 0; j < n; ++j) pair += A(i, j) * v[j];
                IVec w = v;
                w[i] -= pair;
                if (vec_sign(w) != 1 || height(w) > hmax) continue;
                if (roots.insert(w).second) next.push_back(w);
            }
        }
        frontier = std::move(next);
    }
    return roots;
}

} // namespace

CartanData parse_cartan(const IMat& A) {
    validate_gcm(A);
    CartanData cd;
    cd.n = A.rows;
    cd.A = A;
    cd.d = symmetrizers(A);
    cd.typeclass = classify(A, cd.d);
    return cd;
}

AffineFrame affine_frame(const CartanData& cd, std::optional<int> aff_choice) {
    if (cd.typeclass != TypeClass::affine) fail(Err::NotAffine, "affine_frame requires affine type");
    AffineFrame fr;
    fr.delta = kernel_primitive(cd.A);
    if (vec_sign(fr.delta) == -1) fr.delta = vec_neg(fr.delta);
    for (Int x : fr.delta)
        if (x <= 0) fail(Err::SolveFailed, "delta not strictly positive");

    auto valid_aff = [&](int i) -> bool {
        IMat sub = delete_index(cd.A, i);
        CartanData subcd = parse_cartan(sub);
        if (subcd.typeclass != TypeClass::finite) return false;
        IVec theta = fr.delta;
        theta[i] = 0;
        auto roots = finite_positive_roots_capped(cd.A, i, height(theta));
        return roots.count(theta) > 0;
    };

    int aff = -1;
    if (aff_choice) {
        if (*aff_choice < 0 || *aff_choice >= cd.n || !valid_aff(*aff_choice))
            fail(Err::InvalidAffChoice, "deleting the chosen index does not leave a valid finite frame");
        aff = *aff_choice;
    } else {
        for (int i = cd.n - 1; i >= 0; --i)
            if (valid_aff(i)) {
                aff = i;
                break;
            }
        if (aff < 0) fail(Err::SolveFailed, "no valid affine node");
    }
    fr.aff = aff;
    fr.f = fr.delta[aff];
    fr.theta = fr.delta;
    fr.theta[aff] = 0;
    for (int i = 0; i < cd.n; ++i)
        if (i != aff) fr.fin_indices.push_back(i);
    return fr;
}

namespace {

struct Bond {
    int i, j;
    Int aij, aji;
};

IMat from_bonds(int n, const std::vector<Bond>& bonds) {
    IMat A = IMat::identity(n);
    for (auto& e : A.a) e *= 2;
    for (const Bond& b : bonds) {
        A(b.i - 1, b.j - 1) = b.aij;
        A(b.j - 1, b.i - 1) = b.aji;
    }
    return A;
}

std::vector<Bond> path(int from, int to) {
    std::vector<Bond> b;
    for (int i = from; i < to; ++i) b.push_back({i, i + 1, -1, -1});
    return b;
}

void append(std::vector<Bond>& dst, const std::vector<Bond>& src) {
    dst.insert(dst.end(), src.begin(), src.end());
}

struct ParsedLabel {
    std::string family;  // A,B,C,D,E6,E7,E8,F4,G2
    int sup = 0;         // 0 = finite
    int sub = 0;         // 0 = unspecified
};

ParsedLabel parse_label(const std::string& raw) {
    std::string s;
    for (char c : raw)
        if (!std::isspace((unsigned char)c)) s += (char)std::toupper((unsigned char)c);
    ParsedLabel p;
    if (s.empty()) fail(Err::UnknownLabel, "empty label");
    std::size_t pos = 0;
    p.family += s[pos++];
    if ((p.family[0] == 'E' || p.family[0] == 'F' || p.family[0] == 'G') &&
        pos < s.size() && std::isdigit((unsigned char)s[pos])) {
        p.family += s[pos++];
    }
    // optional subscript digits (e.g. A5(2), B4(1), D3(2))
    std::string sub;
    while (pos < s.size() && std::isdigit((unsigned char)s[pos])) sub += s[pos++];
    if (pos < s.size() && s[pos] == '(') {
        ++pos;
        std::string sup;
        while (pos < s.size() && std::isdigit((unsigned char)s[pos])) sup += s[pos++];
        if (pos >= s.size() || s[pos] != ')' || sup.empty())
            fail(Err::UnknownLabel, "malformed superscript in label: " + raw);
        ++pos;
        p.sup = std::stoi(sup);
    } else if (!sub.empty() && (p.family[0] == 'A' || p.family[0] == 'B' ||
                                p.family[0] == 'C' || p.family[0] == 'D')) {
        // Shorthand D2 == D(2): a single trailing digit names the superscript.
        if (sub.size() == 1) {
            p.sup = sub[0] - '0';
            sub.clear();
        }
    }
    if (pos != s.size()) fail(Err::UnknownLabel, "trailing characters in label: " + raw);
    if (!sub.empty()) p.sub = std::stoi(sub);
    return p;
}

int rank_from_subscript(const ParsedLabel& p, const std::string& raw) {
    // Subscript conventions follow the usual affine type names: X_s^(r).
    if (p.sup == 1) return p.sub + 1;              // A4(1) -> n=5, B4(1) -> n=5
    if (p.family == "A" && p.sup == 2) {
        if (p.sub % 2 == 0) return p.sub / 2 + 1;  // A4(2) -> n=3
        return (p.sub + 1) / 2 + 1;                // A5(2) -> n=4
    }
    if (p.family == "D" && p.sup == 2) return p.sub;  // D3(2) -> n=3
    if (p.family == "D" && p.sup == 3) {
        if (p.sub != 4) fail(Err::UnknownLabel, "only D4(3) exists: " + raw);
        return 3;
    }
    fail(Err::UnknownLabel, "unsupported subscript in label: " + raw);
}

} // namespace

CartanData builtin_system(const std::string& label, int n, int k) {
    ParsedLabel p = parse_label(label);
    if (p.sub > 0) {
        int rank_n = rank_from_subscript(p, label);
        if (n > 0 && n != rank_n)
            fail(Err::UnknownLabel, "rank disagrees with subscript in " + label);
        n = rank_n;
    }
    std::vector<Bond> bonds;
    std::string canonical;
    bool want_affine = p.sup > 0;

    auto need_n = [&](int lo, int hi, const char* what) {
        if (n < lo || (hi > 0 && n > hi))
            fail(Err::RankOutOfRange, std::string(what) + " needs rank in [" +
                                          std::to_string(lo) + "," +
                                          (hi > 0 ? std::to_string(hi) : std::string("inf")) + "], got " +
                                          std::to_string(n));
    };
    auto fix_n = [&](int forced) {
        if (n == 0) n = forced;
        if (n != forced) fail(Err::RankOutOfRange, label + " has rank " + std::to_string(forced));
    };

    if (p.sup == 0) {
        if (p.family == "A") {
            need_n(1, 0, "finite A");
            bonds = path(1, n);
        } else if (p.family == "B") {
            need_n(2, 0, "finite B");
            bonds = path(1, n - 1);
            bonds.push_back({n - 1, n, -1, -2});
        } else if (p.family == "C") {
            need_n(2, 0, "finite C");
            bonds = path(1, n - 1);
            bonds.push_back({n - 1, n, -2, -1});
        } else if (p.family == "D") {
            need_n(4, 0, "finite D");
            bonds = path(1, n - 2);
            bonds.push_back({n - 2, n - 1, -1, -1});
            bonds.push_back({n - 2, n, -1, -1});
        } else if (p.family == "E6" || p.family == "E7" || p.family == "E8") {
            int rk = p.family[1] - '0';
            fix_n(rk);
            bonds = path(3, n);
            bonds.push_back({1, 3, -1, -1});
            bonds.push_back({2, 4, -1, -1});
        } else if (p.family == "F4") {
            fix_n(4);
            bonds = {{1, 2, -1, -1}, {2, 3, -1, -2}, {3, 4, -1, -1}};
        } else if (p.family == "G2") {
            fix_n(2);
            bonds = {{1, 2, -3, -1}};
        } else {
            fail(Err::UnknownLabel, "unknown finite family: " + label);
        }
        canonical = p.family;
    } else if (p.family == "A" && p.sup == 1) {
        need_n(2, 0, "A(1)");
        if (n == 2) {
            bonds = {{1, 2, -2, -2}};
        } else {
            if (k == 0) k = n - 1;
            if (k < 1 || k > n - 1) fail(Err::RankOutOfRange, "A(1) cycle labeling needs 1 <= k <= n-1");
            for (int i = 1; i <= n - 1; ++i)
                if (i != k) bonds.push_back({i, i + 1, -1, -1});
            bonds.push_back({1, k + 1, -1, -1});
            bonds.push_back({k, n, -1, -1});
        }
        canonical = "A(1)";
    } else if (p.family == "B" && p.sup == 1) {
        need_n(4, 0, "B(1)");
        bonds.push_back({1, 2, -2, -1});
        append(bonds, path(2, n - 2));
        bonds.push_back({n - 2, n - 1, -1, -1});
        bonds.push_back({n - 2, n, -1, -1});
        canonical = "B(1)";
    } else if (p.family == "C" && p.sup == 1) {
        need_n(3, 0, "C(1)");
        bonds.push_back({1, 2, -1, -2});
        append(bonds, path(2, n - 1));
        bonds.push_back({n - 1, n, -2, -1});
        canonical = "C(1)";
    } else if (p.family == "D" && p.sup == 1) {
        need_n(5, 0, "D(1)");
        bonds.push_back({1, 3, -1, -1});
        bonds.push_back({2, 3, -1, -1});
        append(bonds, path(3, n - 2));
        bonds.push_back({n - 2, n - 1, -1, -1});
        bonds.push_back({n - 2, n, -1, -1});
        canonical = "D(1)";
    } else if (p.family == "E6" && p.sup == 1) {
        fix_n(7);
        bonds = path(3, 7);
        bonds.push_back({2, 5, -1, -1});
        bonds.push_back({1, 2, -1, -1});
        canonical = "E6(1)";
    } else if (p.family == "E7" && p.sup == 1) {
        fix_n(8);
        bonds = path(2, 8);
        bonds.push_back({1, 5, -1, -1});
        canonical = "E7(1)";
    } else if (p.family == "E8" && p.sup == 1) {
        fix_n(9);
        bonds = path(2, 9);
        bonds.push_back({1, 4, -1, -1});
        canonical = "E8(1)";
    } else if (p.family == "F4" && p.sup == 1) {
        fix_n(5);
        bonds = {{1, 2, -1, -1}, {2, 3, -2, -1}, {3, 4, -1, -1}, {4, 5, -1, -1}};
        canonical = "F4(1)";
    } else if ((p.family == "G2" || p.family == "G") && p.sup == 1) {
        fix_n(3);
        bonds = {{1, 2, -3, -1}, {2, 3, -1, -1}};
        canonical = "G2(1)";
    } else if (p.family == "A" && p.sup == 2) {
        bool even;
        if (p.sub > 0) {
            even = p.sub % 2 == 0;
        } else {
            if (n >= 4)
                fail(Err::UnknownLabel,
                     "A(2) is ambiguous at rank >= 4; use a subscripted label such as A" +
                         std::to_string(2 * (n - 1)) + "(2) or A" + std::to_string(2 * n - 3) + "(2)");
            even = true;
        }
        if (even) {
            need_n(2, 0, "A_{2k}(2)");
            if (n == 2) {
                bonds = {{1, 2, -1, -4}};
            } else {
                bonds.push_back({1, 2, -1, -2});
                append(bonds, path(2, n - 1));
                bonds.push_back({n - 1, n, -1, -2});
            }
            canonical = "A" + std::to_string(2 * (n - 1)) + "(2)";
        } else {
            need_n(4, 0, "A_{2k-1}(2)");
            bonds.push_back({1, 2, -1, -2});
            append(bonds, path(2, n - 1));
            bonds.push_back({n - 2, n, -1, -1});
            canonical = "A" + std::to_string(2 * n - 3) + "(2)";
        }
    } else if (p.family == "D" && p.sup == 2) {
        need_n(3, 0, "D(2)");
        bonds.push_back({1, 2, -2, -1});
        append(bonds, path(2, n - 1));
        bonds.push_back({n - 1, n, -1, -2});
        canonical = "D" + std::to_string(n) + "(2)";
    } else if (p.family == "E6" && p.sup == 2) {
        fix_n(5);
        bonds = {{1, 2, -1, -1}, {2, 3, -1, -2}, {3, 4, -1, -1}, {4, 5, -1, -1}};
        canonical = "E6(2)";
    } else if (p.family == "D" && p.sup == 3) {
        fix_n(3);
        bonds = {{1, 2, -1, -3}, {2, 3, -1, -1}};
        canonical = "D4(3)";
    } else {
        fail(Err::UnknownLabel, "unknown label: " + label);
    }

    CartanData cd = parse_cartan(from_bonds(n, bonds));
    if (want_affine && cd.typeclass != TypeClass::affine)
        fail(Err::SolveFailed, "catalog entry failed affine classification: " + label);
    if (!want_affine && cd.typeclass != TypeClass::finite)
        fail(Err::SolveFailed, "catalog entry failed finite classification: " + label);
    cd.label = canonical + " n=" + std::to_string(n);
    if (canonical == "A(1)" && n >= 3) cd.label += " k=" + std::to_string(k == 0 ? n - 1 : k);
    return cd;
}

std::vector<CatalogEntry> default_catalog() {
    return {
        {"A(1)", 2, 0},  {"A(1)", 4, 2},  {"A(1)", 5, 2},  {"B(1)", 5, 0},
        {"C(1)", 4, 0},  {"D(1)", 5, 0},  {"E6(1)", 7, 0}, {"E7(1)", 8, 0},
        {"E8(1)", 9, 0}, {"F4(1)", 5, 0}, {"G2(1)", 3, 0}, {"A2(2)", 2, 0},
        {"A4(2)", 3, 0}, {"A5(2)", 4, 0}, {"D3(2)", 3, 0}, {"E6(2)", 5, 0},
        {"D4(3)", 3, 0}, {"A", 1, 0},     {"A", 2, 0},     {"A", 3, 0},
        {"A", 4, 0},     {"B", 2, 0},     {"B", 3, 0},     {"C", 3, 0},
        {"D", 4, 0},     {"G2", 2, 0},    {"F4", 4, 0},
    };
}

} // namespace rootorbits
