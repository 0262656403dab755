#pragma once

#include <optional>
#include <unordered_set>
#include <vector>

#include "rootorbits/cartan.hpp"

namespace rootorbits {

// Execution mode of the data-parallel kernels.  Serial is the reference
// implementation; Parallel uses OpenMP and must agree with it exactly.
enum class Exec { Serial, Parallel };

using RootSet = std::unordered_set<IVec, IVecHash>;

// Gram matrix of the symmetric form, gram(i,j) = K(alpha_i, alpha_j) = d_i a_ij.
struct FormK {
    IMat gram;

    Rat value(const QVec& x, const QVec& y) const;
    Int value(const IVec& x, const IVec& y) const;
};

FormK form_K(const CartanData& cd);

// Skew-symmetric form attached to a Coxeter word; gram(i,j) = omega_c(alpha_i, alpha_j).
struct FormOmega {
    std::vector<int> word;  // 0-based letters
    IMat gram;

    Rat value(const QVec& x, const QVec& y) const;
    Int value(const IVec& x, const IVec& y) const;
};

FormOmega form_omega(const CartanData& cd, const std::vector<int>& word);

// K(alpha_i^vee, x) = sum_j a_ij x_j.
Rat coroot_pairing(const CartanData& cd, int i, const QVec& x);
Int coroot_pairing(const CartanData& cd, int i, const IVec& x);

QVec reflect_simple(const CartanData& cd, int i, const QVec& x);
IVec reflect_simple(const CartanData& cd, int i, const IVec& x);

// Reflection in a real root beta: t_beta x = x - K(beta^vee, x) beta.
QVec reflect_root(const CartanData& cd, const IVec& beta, const QVec& x);
IVec reflect_root(const CartanData& cd, const IVec& beta, const IVec& x);

// Matrix of t_beta on the simple-root basis (always integer).
IMat reflect_root_matrix(const CartanData& cd, const IVec& beta);

// All real roots with |height| <= H, sorted lexicographically.
std::vector<IVec> enumerate_real_roots(const CartanData& cd, Int H, Exec exec = Exec::Parallel);

bool is_real_root(const CartanData& cd, const IVec& v, Int H);

// Every root of a finite-type system (no height bound; must terminate).
std::vector<IVec> enumerate_all_roots_finite(const CartanData& cd);

// Positive roots of the finite subsystem Phi_fin inside an affine system,
// embedded with zero aff coordinate.
std::vector<IVec> finite_subsystem_positive_roots(const CartanData& cd, const AffineFrame& fr);

} // namespace rootorbits
