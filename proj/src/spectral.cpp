#include "rootorbits/spectral.hpp"

#include <algorithm>
#include <numeric>

namespace rootorbits {

IMat finite_part_action(const CartanData& cd, const AffineFrame& fr, const CoxeterWord& c) {
    FactoredCoxeter f = factor_at_aff(c, fr.aff);
    IMat left = word_action(cd, f.left);
    IMat right = word_action(cd, f.right);
    return left * reflect_root_matrix(cd, fr.theta) * right;
}

GammaData gamma_c(const CartanData& cd, const AffineFrame& fr, const CoxeterWord& c) {
    if (cd.typeclass != TypeClass::affine) fail(Err::NotAffine, "gamma_c requires affine type");
    const int n = cd.n;
    IMat W = finite_part_action(cd, fr, c);

    // Fixed line of W inside V_fin.
    IMat M((int)fr.fin_indices.size(), (int)fr.fin_indices.size());
    for (int r = 0; r < M.rows; ++r)
        for (int s = 0; s < M.cols; ++s) {
            int i = fr.fin_indices[r], j = fr.fin_indices[s];
            M(r, s) = W(i, j) - (i == j ? 1 : 0);
        }
    IVec g0;
    if (M.rows == 0) fail(Err::NotAffine, "affine rank must be >= 2");
    if (M.rows == 1 && M(0, 0) == 0) {
        g0 = {1};
    } else {
        g0 = kernel_primitive(M);
    }
    IVec gfull(n, 0);
    for (int r = 0; r < (int)fr.fin_indices.size(); ++r) gfull[fr.fin_indices[r]] = g0[r];

    // Normalize so that K(theta^vee, c_right gamma) = 1.
    FactoredCoxeter f = factor_at_aff(c, fr.aff);
    IMat right = word_action(cd, f.right);
    FormK K = form_K(cd);
    Int norm = K.value(fr.theta, fr.theta);
    Int twice = 2 * K.value(fr.theta, right * gfull);
    if (twice == 0 || twice % norm != 0) fail(Err::SolveFailed, "cannot normalize gamma");
    Int scale = twice / norm;
    QVec gamma(n, Rat(0));
    for (int i = 0; i < n; ++i) gamma[i] = Rat(gfull[i], scale);

    // (c - 1) gamma = delta, verified before anything downstream trusts it.
    QVec diff = c.action * gamma;
    for (int i = 0; i < n; ++i) diff[i] -= gamma[i];
    for (int i = 0; i < n; ++i)
        if (diff[i] != Rat(fr.delta[i])) fail(Err::SolveFailed, "(c-1)gamma != delta");

    GammaData gd;
    gd.gamma = gamma;
    gd.phi.alpha_row.resize(n);
    gd.phi.rho_coords.resize(n);
    for (int j = 0; j < n; ++j) {
        Rat s(0);
        for (int i = 0; i < n; ++i) s += gamma[i] * Rat(K.gram(i, j));
        gd.phi.alpha_row[j] = s;
        gd.phi.rho_coords[j] = s / Rat(cd.d[j]);
    }
    gd.phi_int = primitive_int_row(gd.phi.alpha_row);
    gd.order_on_Uc = order_on_Uc(cd, gd.phi_int, c);
    return gd;
}

bool in_Uc(const GammaData& gd, const QVec& v) { return gd.phi.eval(v).is_zero(); }
bool in_Uc(const GammaData& gd, const IVec& v) { return gd.phi.eval(v).is_zero(); }

std::pair<int, int> one_multiplicities(const CartanData& cd, const CoxeterWord& c) {
    IMat CI = c.action - IMat::identity(cd.n);
    int geometric = cd.n - rank(CI);
    int algebraic = cd.n - rank_of_power(CI, cd.n);
    return {algebraic, geometric};
}

int order_on_Uc(const CartanData& cd, const IVec& phi_int, const CoxeterWord& c) {
    const int n = cd.n;
    int pivot = -1;
    for (int i = 0; i < n && pivot < 0; ++i)
        if (phi_int[i] != 0) pivot = i;
    if (pivot < 0) fail(Err::SolveFailed, "phi vanishes identically");

    // Integer basis of ker(phi): phi[pivot] e_i - phi[i] e_pivot.
    std::vector<IVec> basis;
    for (int i = 0; i < n; ++i) {
        if (i == pivot) continue;
        IVec v(n, 0);
        v[i] = phi_int[pivot];
        v[pivot] = -phi_int[i];
        basis.push_back(v);
    }

    Int bound = 2;
    for (Int t = 1; t <= 2 * n; ++t) bound = std::lcm(bound, t);
    bound *= 2;

    std::vector<IVec> cur = basis;
    for (Int k = 1; k <= bound; ++k) {
        bool fixed = true;
        for (std::size_t b = 0; b < cur.size(); ++b) {
            cur[b] = c.action * cur[b];
            if (cur[b] != basis[b]) fixed = false;
        }
        if (fixed) return (int)k;
    }
    fail(Err::OrderBoundExceeded, "U_c order exceeded its theoretical bound");
}

DualFunctional x_c(const CartanData& cd, const AffineFrame& fr, const CoxeterWord& c) {
    const int n = cd.n;
    FormOmega om = form_omega(cd, c.order);
    DualFunctional xc;
    xc.alpha_row.resize(n);
    xc.rho_coords.resize(n);
    for (int j = 0; j < n; ++j) {
        Int s = 0;
        for (int i = 0; i < n; ++i) s += fr.delta[i] * om.gram(i, j);
        xc.alpha_row[j] = Rat(s);
    }
    // Fundamental-weight expansion read off the word order directly; must
    // agree with the alpha row through the symmetrizers.
    std::vector<int> pos(n, 0);
    for (int p = 0; p < n; ++p) pos[c.order[p]] = p;
    for (int m = 0; m < n; ++m) {
        Int coeff = 0;
        for (int j = 0; j < n; ++j) {
            if (j == m) continue;
            int sgn = pos[j] > pos[m] ? 1 : -1;
            coeff += sgn * fr.delta[j] * cd.A(m, j);
        }
        xc.rho_coords[m] = Rat(coeff);
        if (Rat(coeff * cd.d[m]) != xc.alpha_row[m])
            fail(Err::SolveFailed, "x_c expansions disagree");
    }
    return xc;
}

Rat verify_xc_phic(const GammaData& gd, const DualFunctional& xc) {
    Rat lambda(0);
    bool found = false;
    for (std::size_t i = 0; i < xc.alpha_row.size(); ++i) {
        const Rat& p = gd.phi.alpha_row[i];
        const Rat& x = xc.alpha_row[i];
        if (p.is_zero()) {
            if (!x.is_zero()) fail(Err::NotProportional, "x_c not proportional to phi_c");
            continue;
        }
        Rat l = x / p;
        if (!found) {
            lambda = l;
            found = true;
        } else if (l != lambda) {
            fail(Err::NotProportional, "x_c not proportional to phi_c");
        }
    }
    if (!found || lambda.sign() >= 0) fail(Err::NotNegative, "scaling factor is not negative");
    return lambda;
}

QVec gamma_transport(const CartanData& cd, const AffineFrame& fr, const GammaData& gd,
                     const CoxeterWord& c, int s) {
    auto ini = initial_letters(cd, c);
    auto fin = final_letters(cd, c);
    bool ok = std::find(ini.begin(), ini.end(), s) != ini.end() ||
              std::find(fin.begin(), fin.end(), s) != fin.end();
    if (!ok) fail(Err::NotInitialOrFinal, "letter is neither initial nor final");
    if (s == fr.aff) return reflect_root(cd, fr.theta, gd.gamma);
    return reflect_simple(cd, s, gd.gamma);
}

} // namespace rootorbits
