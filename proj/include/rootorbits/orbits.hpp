#pragma once

#include <optional>
#include <string>

#include "rootorbits/spectral.hpp"

namespace rootorbits {

// The prefix-image transversals of the infinite orbits.
struct TransversalInf {
    std::vector<IVec> out;  // alpha_1, s_1 alpha_2, ...
    std::vector<IVec> in;   // alpha_n, s_n alpha_{n-1}, ...

    std::vector<IVec> all() const;
};

TransversalInf transversal_inf(const CartanData& cd, const CoxeterWord& c);

// Sign changes under one application of c or c^{-1} (the boundary events of
// infinite orbits).  forward = -c(beta) when c(beta) is negative, backward =
// -c^{-1}(beta) when c^{-1}(beta) is negative; membership in the expected
// transversal side is asserted.
struct SignChange {
    std::optional<IVec> forward;
    std::optional<IVec> backward;
};

SignChange sign_change(const CartanData& cd, const CoxeterWord& c, const TransversalInf& tv,
                       const IVec& beta);

enum class OrbitKind { finite, infinite };

struct OrbitReport {
    IVec seed;
    OrbitKind kind = OrbitKind::finite;
    bool imaginary = false;
    std::vector<IVec> members;  // finite: the whole orbit from the seed in
                                // c-order; infinite: the window c^m seed, |m| <= M
    int sign = 0;               // +1, -1, or 0 when the window mixes signs
    std::optional<IVec> transversal_hit;
    std::optional<Int> hit_power;  // k with c^k(seed) = hit
};

// Canonically ordered component of Upsilon_fin^c with its affinizing root.
struct UpsilonComponent {
    std::vector<IVec> chain;   // beta_1..beta_k, consecutive roots adjacent
    IVec beta0;                // c(beta_k); chain sum + beta0 = kappa * delta
    Int kappa = 0;
    std::vector<IVec> omega;   // beta_1, beta_1+beta_2, ..., the component's
                               // slice of the finite transversal
};

struct UpsilonData {
    std::vector<IVec> roots;              // Phi_fin intersect U_c, both signs
    std::vector<IVec> canonical_simples;  // positive roots not sums of two others
    std::vector<UpsilonComponent> components;
    std::vector<IVec> ordered_simples;    // concatenated component chains
    std::vector<IVec> omega;              // union of component omegas

    Int kappa_of(const IVec& beta) const;
};

UpsilonData upsilon_fin(const CartanData& cd, const AffineFrame& fr, const CoxeterWord& c,
                        const GammaData& gd);

OrbitReport classify_orbit(const CartanData& cd, const AffineFrame& fr, const CoxeterWord& c,
                           const GammaData& gd, const TransversalInf& tv, const IVec& seed, Int M,
                           const UpsilonData* ud = nullptr);

// Least k <= kmax with k*delta - beta a real root (membership by windowed
// enumeration, the definition route independent of the component sums).
Int kappa_bfs(const CartanData& cd, const AffineFrame& fr, const IVec& beta, Int kmax = 6);

std::vector<IVec> finite_transversal(const UpsilonData& ud, const AffineFrame& fr, Int mlo, Int mhi);

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail;
};

struct VerifyReport {
    std::string system;
    std::vector<int> word;  // 0-based
    std::vector<CheckResult> checks;

    bool all_pass() const;
};

struct VerifyOptions {
    Int M = 12;        // window for chain disjointness and separation signs
    Int mlo = -3;      // finite-transversal slice
    Int mhi = 3;
    Int H = 0;         // enumeration height bound; 0 = 3 height(delta) + 3
    Exec exec = Exec::Parallel;
};

VerifyReport verify_theorem_aff(const CartanData& cd, const AffineFrame& fr, const CoxeterWord& c,
                                const VerifyOptions& opt = {});

VerifyReport verify_theorem_fin(const CartanData& cd, const CoxeterWord& c);

// Exact eigenstructure identities for one (system, word) pair: the gamma
// defect, the two rank drops, the x_c/phi_c scaling, and gamma transport
// under every admissible source-sink move.
VerifyReport verify_spectral(const CartanData& cd, const AffineFrame& fr, const CoxeterWord& c);

} // namespace rootorbits
