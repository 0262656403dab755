#pragma once

#include <cstdint>
#include <vector>

#include "rootorbits/cartan.hpp"

namespace rootorbits {

// A Coxeter element presented as a permutation word (0-based letters) with
// its exact action matrix on the simple-root basis.
struct CoxeterWord {
    std::vector<int> order;
    IMat action;

    int n() const { return (int)order.size(); }
};

struct FactoredCoxeter {
    std::vector<int> left;   // letters before aff
    std::vector<int> right;  // letters after aff
    int aff = 0;
};

IMat simple_reflection_matrix(const CartanData& cd, int i);

// Action matrix of an arbitrary word, letters applied right to left:
// word_action({a,b})v = s_a(s_b(v)).
IMat word_action(const CartanData& cd, const std::vector<int>& word);

CoxeterWord make_coxeter(const CartanData& cd, const std::vector<int>& order);

FactoredCoxeter factor_at_aff(const CoxeterWord& c, int aff);

// Reduced-word test via prefix roots: the word is reduced iff the roots
// r_1...r_{i-1}(alpha_{r_i}) are distinct and all positive.
bool is_reduced(const CartanData& cd, const std::vector<int>& word);

// (s_1...s_n)^k must be reduced in infinite irreducible type.
bool speyer_check(const CartanData& cd, const CoxeterWord& c, int k);

std::vector<int> initial_letters(const CartanData& cd, const CoxeterWord& c);
std::vector<int> final_letters(const CartanData& cd, const CoxeterWord& c);

CoxeterWord source_sink_move(const CartanData& cd, const CoxeterWord& c, int s);

// Conjugacy-class invariant of a Coxeter word on an A(1)-type cycle: the
// number of cycle edges oriented with the canonical walk (from node 0
// toward its smaller-labeled neighbor) by word precedence.
int a1n_class(const CartanData& cd, const CoxeterWord& c);

// Deterministic pseudo-random permutation words (Fisher-Yates over a fixed
// xorshift generator, identical on every platform).
std::vector<std::vector<int>> random_permutation_words(int n, int count, std::uint64_t seed);

} // namespace rootorbits
