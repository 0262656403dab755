#include "rootorbits/weyl.hpp"

#include <algorithm>
#include <set>

#include "rootorbits/rootspace.hpp"

namespace rootorbits {

IMat simple_reflection_matrix(const CartanData& cd, int i) {
    IMat m = IMat::identity(cd.n);
    for (int j = 0; j < cd.n; ++j) m(i, j) -= cd.A(i, j);
    return m;
}

IMat word_action(const CartanData& cd, const std::vector<int>& word) {
    IMat m = IMat::identity(cd.n);
    for (int letter : word) m = m * simple_reflection_matrix(cd, letter);
    return m;
}

CoxeterWord make_coxeter(const CartanData& cd, const std::vector<int>& order) {
    if ((int)order.size() != cd.n) fail(Err::NotPermutation, "word length != rank");
    std::vector<int> seen(cd.n, 0);
    for (int letter : order) {
        if (letter < 0 || letter >= cd.n || seen[letter])
            fail(Err::NotPermutation, "word is not a permutation of the letters");
        seen[letter] = 1;
    }
    return CoxeterWord{order, word_action(cd, order)};
}

FactoredCoxeter factor_at_aff(const CoxeterWord& c, int aff) {
    FactoredCoxeter f;
    f.aff = aff;
    auto it = std::find(c.order.begin(), c.order.end(), aff);
    if (it == c.order.end()) fail(Err::BadInput, "aff letter does not occur in the word");
    f.left.assign(c.order.begin(), it);
    f.right.assign(it + 1, c.order.end());
    return f;
}

bool is_reduced(const CartanData& cd, const std::vector<int>& word) {
    std::set<IVec> prefix_roots;
    IMat p = IMat::identity(cd.n);
    for (int letter : word) {
        if (letter < 0 || letter >= cd.n) fail(Err::BadInput, "letter out of range");
        IVec e(cd.n, 0);
        e[letter] = 1;
        IVec root = p * e;
        if (vec_sign(root) != 1) return false;
        if (!prefix_roots.insert(root).second) return false;
        p = p * simple_reflection_matrix(cd, letter);
    }
    return true;
}

bool speyer_check(const CartanData& cd, const CoxeterWord& c, int k) {
    if (cd.typeclass == TypeClass::finite)
        fail(Err::FiniteType, "the reducedness theorem applies to infinite type only");
    if (components(cd).size() != 1)
        fail(Err::NotIrreducible, "the reducedness theorem applies to irreducible type only");
    std::vector<int> word;
    word.reserve((std::size_t)k * cd.n);
    for (int t = 0; t < k; ++t) word.insert(word.end(), c.order.begin(), c.order.end());
    return is_reduced(cd, word);
}

namespace {

std::vector<int> boundary_letters(const CartanData& cd, const CoxeterWord& c, bool from_front) {
    std::vector<int> out;
    std::vector<int> word = c.order;
    if (!from_front) std::reverse(word.begin(), word.end());
    for (std::size_t p = 0; p < word.size(); ++p) {
        bool commutes = true;
        for (std::size_t q = 0; q < p && commutes; ++q)
            commutes = !cd.adjacent(word[p], word[q]);
        if (commutes) out.push_back(word[p]);
    }
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace

std::vector<int> initial_letters(const CartanData& cd, const CoxeterWord& c) {
    return boundary_letters(cd, c, true);
}

std::vector<int> final_letters(const CartanData& cd, const CoxeterWord& c) {
    return boundary_letters(cd, c, false);
}

CoxeterWord source_sink_move(const CartanData& cd, const CoxeterWord& c, int s) {
    auto ini = initial_letters(cd, c);
    auto fin = final_letters(cd, c);
    bool is_ini = std::find(ini.begin(), ini.end(), s) != ini.end();
    bool is_fin = std::find(fin.begin(), fin.end(), s) != fin.end();
    if (!is_ini && !is_fin) fail(Err::NotInitialOrFinal, "letter is neither initial nor final");
    std::vector<int> word;
    for (int letter : c.order)
        if (letter != s) word.push_back(letter);
    if (is_ini) word.push_back(s);      // scs = (rest)s when c = s(rest)
    else word.insert(word.begin(), s);  // scs = s(rest) when c = (rest)s
    return make_coxeter(cd, word);
}

int a1n_class(const CartanData& cd, const CoxeterWord& c) {
    int n = cd.n;
    if (n < 3) fail(Err::NotTypeACycle, "cycle type needs rank >= 3");
    std::vector<std::vector<int>> nbr(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            if (cd.A(i, j) == 0) continue;
            if (cd.A(i, j) != -1 || cd.A(j, i) != -1)
                fail(Err::NotTypeACycle, "cycle type has single bonds only");
            nbr[i].push_back(j);
            nbr[j].push_back(i);
        }
    for (int i = 0; i < n; ++i)
        if (nbr[i].size() != 2) fail(Err::NotTypeACycle, "diagram is not a single cycle");

    std::vector<int> pos(n, -1);
    for (int p = 0; p < n; ++p) pos[c.order[p]] = p;

    // Walk the cycle starting at node 0 toward its smaller neighbor and
    // count edges whose word order agrees with the walk.
    int prev = 0;
    int cur = std::min(nbr[0][0], nbr[0][1]);
    int walked = 0;
    int forward = pos[0] < pos[cur] ? 1 : 0;
    ++walked;
    while (cur != 0) {
        int next = nbr[cur][0] == prev ? nbr[cur][1] : nbr[cur][0];
        if (pos[cur] < pos[next]) ++forward;
        ++walked;
        prev = cur;
        cur = next;
    }
    if (walked != n) fail(Err::NotTypeACycle, "diagram is not connected as one cycle");
    return forward;
}

std::vector<std::vector<int>> random_permutation_words(int n, int count, std::uint64_t seed) {
    std::uint64_t state = seed ? seed : 0x9e3779b97f4a7c15ull;
    auto next = [&state]() {
        state ^= state << 13;
        state ^= state >> 7;
        state ^= state << 17;
        return state;
    };
    std::vector<std::vector<int>> words;
    words.reserve(count);
    for (int t = 0; t < count; ++t) {
        std::vector<int> w(n);
        for (int i = 0; i < n; ++i) w[i] = i;
        for (int i = n - 1; i > 0; --i) std::swap(w[i], w[next() % (std::uint64_t)(i + 1)]);
        words.push_back(std::move(w));
    }
    return words;
}

} // namespace rootorbits
