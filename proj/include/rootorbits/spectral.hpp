#pragma once

#include "rootorbits/rootspace.hpp"
#include "rootorbits/weyl.hpp"

namespace rootorbits {

// A functional on V, stored as its exact row on the alpha basis and as its
// coordinates in the fundamental-weight basis (dual to the co-roots).
struct DualFunctional {
    QVec alpha_row;   // <xi, v> = alpha_row . v
    QVec rho_coords;  // xi = sum_i rho_coords[i] rho_i, rho_coords[i] = alpha_row[i] / d_i

    Rat eval(const QVec& v) const { return dot(alpha_row, v); }
    Rat eval(const IVec& v) const { return dot(alpha_row, v); }
};

// The generalized 1-eigenvector of an affine Coxeter element and the data
// hanging off it: (c - 1) gamma = delta, phi = K(gamma, .), and the order
// of c on the eigenvector hyperplane U_c = ker phi.
struct GammaData {
    QVec gamma;          // in V_fin, aff coordinate zero
    DualFunctional phi;
    IVec phi_int;        // primitive integer multiple of phi's row, same signs
    int order_on_Uc = 0;
};

GammaData gamma_c(const CartanData& cd, const AffineFrame& fr, const CoxeterWord& c);

bool in_Uc(const GammaData& gd, const QVec& v);
bool in_Uc(const GammaData& gd, const IVec& v);

// (algebraic, geometric) multiplicity of the eigenvalue 1, via exact ranks.
std::pair<int, int> one_multiplicities(const CartanData& cd, const CoxeterWord& c);

int order_on_Uc(const CartanData& cd, const IVec& phi_int, const CoxeterWord& c);

// The functional omega_c(delta, .), with its fundamental-weight expansion.
DualFunctional x_c(const CartanData& cd, const AffineFrame& fr, const CoxeterWord& c);

// The unique scalar lambda < 0 with x_c = lambda phi_c.
Rat verify_xc_phic(const GammaData& gd, const DualFunctional& xc);

// Predicted gamma_{scs} for a source-sink move: s gamma_c unless s is the
// affine letter, in which case t_theta gamma_c.
QVec gamma_transport(const CartanData& cd, const AffineFrame& fr, const GammaData& gd,
                     const CoxeterWord& c, int s);

// Action matrix of c_left t_theta c_right (integer, preserves V_fin).
IMat finite_part_action(const CartanData& cd, const AffineFrame& fr, const CoxeterWord& c);

} // namespace rootorbits
