#pragma once

#include <optional>
#include <string>
#include <vector>

#include "rootorbits/linalg.hpp"

namespace rootorbits {

enum class TypeClass { finite, affine, indefinite };

const char* typeclass_name(TypeClass t);

// A validated symmetrizable generalized Cartan matrix together with its
// minimal integer symmetrizers and exact type classification.
struct CartanData {
    int n = 0;
    IMat A;                  // a_ij, diagonal 2, off-diagonal <= 0
    std::vector<Int> d;      // positive integers, d_i a_ij = d_j a_ji, gcd 1 per component
    TypeClass typeclass = TypeClass::indefinite;
    std::string label;       // set for catalog entries

    bool adjacent(int i, int j) const { return i != j && A(i, j) != 0; }
};

// The affine scaffolding: delta spans the kernel of the symmetrized form,
// alpha_aff is the simple root whose removal leaves the finite subsystem.
struct AffineFrame {
    IVec delta;                    // primitive, strictly positive
    int aff = 0;                   // 0-based index
    Int f = 1;                     // [delta : alpha_aff]
    IVec theta;                    // delta - f * alpha_aff
    std::vector<int> fin_indices;  // {0..n-1} \ {aff}
};

CartanData parse_cartan(const IMat& A);

AffineFrame affine_frame(const CartanData& cd, std::optional<int> aff_choice = std::nullopt);

// Catalog systems.  Labels combine a family symbol with a parenthesized
// superscript, e.g. "A(1)", "D(2)", "E6(1)", "D4(3)".  Subscripted forms
// such as "A5(2)" or "B4(1)" encode the rank directly; otherwise the total
// rank is passed as n.  k selects the node labeling of the A(1) cycle
// (1 <= k <= n-1, default n-1, the standard cycle).
CartanData builtin_system(const std::string& label, int n = 0, int k = 0);

struct CatalogEntry {
    std::string label;
    int n;
    int k;
};

// Default systems exercised by `verify --all-catalog`: the standard affine
// types at their reference ranks, the twisted types at minimal rank, and a
// slate of finite types.
std::vector<CatalogEntry> default_catalog();

std::vector<std::vector<int>> components(const CartanData& cd);

} // namespace rootorbits
