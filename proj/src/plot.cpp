#include "rootorbits/plot.hpp"

#include <array>
#include <cmath>
#include <cstdio>
#include <map>

#include "rootorbits/rootspace.hpp"

namespace rootorbits {

namespace {

using P3 = std::array<double, 3>;
using P2 = std::array<double, 2>;

P3 normalize(P3 v) {
    double len = std::sqrt(v[0] * v[0] + v[1] * v[1] + v[2] * v[2]);
    return {v[0] / len, v[1] / len, v[2] / len};
}

double dot3(const P3& a, const P3& b) { return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]; }

std::string fmt(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3f", x);
    return buf;
}

} // namespace

std::string render_plot_svg(const CartanData& cd, const AffineFrame& fr, const CoxeterWord& c,
                            const GammaData& gd, Int H) {
    if (cd.n != 3) fail(Err::RankNot3, "the stereographic plot is defined for rank 3 only");
    if (H < 1) fail(Err::BoundTooSmall, "height bound must be >= 1");

    P3 pole = normalize({(double)fr.delta[0], (double)fr.delta[1], (double)fr.delta[2]});
    // orthonormal basis of the projection plane
    P3 seed = std::abs(pole[0]) < 0.9 ? P3{1, 0, 0} : P3{0, 1, 0};
    P3 e1{seed[0] - dot3(seed, pole) * pole[0], seed[1] - dot3(seed, pole) * pole[1],
          seed[2] - dot3(seed, pole) * pole[2]};
    e1 = normalize(e1);
    P3 e2{pole[1] * e1[2] - pole[2] * e1[1], pole[2] * e1[0] - pole[0] * e1[2],
          pole[0] * e1[1] - pole[1] * e1[0]};

    auto project = [&](const IVec& v) -> P2 {
        P3 p = normalize({(double)v[0], (double)v[1], (double)v[2]});
        double t = 1.0 - dot3(p, pole);
        P3 q{p[0] - dot3(p, pole) * pole[0], p[1] - dot3(p, pole) * pole[1],
             p[2] - dot3(p, pole) * pole[2]};
        return {dot3(q, e1) / t, dot3(q, e2) / t};
    };

    std::vector<IVec> roots;
    for (const IVec& v : enumerate_real_roots(cd, H, Exec::Serial))
        if (vec_sign(v) == 1) roots.push_back(v);

    std::map<IVec, P2> pos;
    double extent = 1.0;
    for (const IVec& v : roots) {
        P2 p = project(v);
        extent = std::max({extent, std::abs(p[0]), std::abs(p[1])});
        pos[v] = p;
    }
    const double size = 760.0, margin = 20.0;
    const double scale = (size / 2 - margin) / extent;
    auto X = [&](const P2& p) { return size / 2 + scale * p[0]; };
    auto Y = [&](const P2& p) { return size / 2 - scale * p[1]; };

    std::string svg;
    svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + fmt(size) + "\" height=\"" +
           fmt(size) + "\" viewBox=\"0 0 " + fmt(size) + " " + fmt(size) + "\">\n";
    svg += "<defs><marker id=\"arr\" markerWidth=\"8\" markerHeight=\"8\" refX=\"6\" refY=\"3\" "
           "orient=\"auto\"><path d=\"M0,0 L6,3 L0,6 z\" fill=\"#555\"/></marker></defs>\n";
    svg += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";

    // Span(Phi_fin): circle through three projected points of the V_fin unit circle.
    {
        int a = fr.fin_indices[0], b = fr.fin_indices[1];
        auto on_circle = [&](double t) -> P2 {
            // Euclidean unit circle inside V_fin (coordinate plane axes a, b)
            P3 p{0, 0, 0};
            p[a] = std::cos(t);
            p[b] = std::sin(t);
            double tt = 1.0 - dot3(p, pole);
            P3 q{p[0] - dot3(p, pole) * pole[0], p[1] - dot3(p, pole) * pole[1],
                 p[2] - dot3(p, pole) * pole[2]};
            return {dot3(q, e1) / tt, dot3(q, e2) / tt};
        };
        P2 p1 = on_circle(0.3), p2 = on_circle(2.5), p3 = on_circle(4.4);
        double ax = p1[0], ay = p1[1], bx = p2[0], by = p2[1], cx = p3[0], cy = p3[1];
        double dd = 2 * (ax * (by - cy) + bx * (cy - ay) + cx * (ay - by));
        double ux = ((ax * ax + ay * ay) * (by - cy) + (bx * bx + by * by) * (cy - ay) +
                     (cx * cx + cy * cy) * (ay - by)) /
                    dd;
        double uy = ((ax * ax + ay * ay) * (cx - bx) + (bx * bx + by * by) * (ax - cx) +
                     (cx * cx + cy * cy) * (bx - ax)) /
                    dd;
        double r = std::hypot(ax - ux, ay - uy);
        svg += "<circle cx=\"" + fmt(X({ux, uy})) + "\" cy=\"" + fmt(Y({ux, uy})) + "\" r=\"" +
               fmt(scale * r) + "\" fill=\"none\" stroke=\"#bbbbbb\" stroke-width=\"4\" "
               "opacity=\"0.6\"/>\n";
    }

    // U_c: the plane contains the pole, so its sphere circle projects to a line.
    {
        int pivot = -1;
        for (int i = 0; i < 3 && pivot < 0; ++i)
            if (gd.phi_int[i] != 0) pivot = i;
        IVec u(3, 0);
        int other = pivot == 0 ? 1 : 0;
        u[other] = gd.phi_int[pivot];
        u[pivot] = -gd.phi_int[other];
        // make sure u is not the delta direction itself
        if (u[0] * fr.delta[1] == u[1] * fr.delta[0] && u[1] * fr.delta[2] == u[2] * fr.delta[1]) {
            int third = 3 - pivot - other;
            u.assign(3, 0);
            u[third] = gd.phi_int[pivot];
            u[pivot] = -gd.phi_int[third];
        }
        P2 q1 = project(u);
        P2 q2 = project(vec_neg(u));
        double dx = q2[0] - q1[0], dy = q2[1] - q1[1];
        double len = std::hypot(dx, dy);
        dx /= len;
        dy /= len;
        double reach = 4 * extent;
        P2 a{q1[0] - reach * dx, q1[1] - reach * dy};
        P2 b{q1[0] + reach * dx, q1[1] + reach * dy};
        svg += "<line x1=\"" + fmt(X(a)) + "\" y1=\"" + fmt(Y(a)) + "\" x2=\"" + fmt(X(b)) +
               "\" y2=\"" + fmt(Y(b)) +
               "\" stroke=\"#e8c51d\" stroke-width=\"4\" opacity=\"0.8\"/>\n";
    }

    // arrows beta -> c(beta) between plotted roots
    for (const IVec& v : roots) {
        IVec w = c.action * v;
        auto it = pos.find(w);
        if (it == pos.end()) continue;
        const P2& p = pos[v];
        const P2& q = it->second;
        svg += "<line x1=\"" + fmt(X(p)) + "\" y1=\"" + fmt(Y(p)) + "\" x2=\"" + fmt(X(q)) +
               "\" y2=\"" + fmt(Y(q)) +
               "\" stroke=\"#555\" stroke-width=\"1.2\" marker-end=\"url(#arr)\"/>\n";
    }

    for (const IVec& v : roots) {
        const P2& p = pos[v];
        svg += "<circle cx=\"" + fmt(X(p)) + "\" cy=\"" + fmt(Y(p)) +
               "\" r=\"3\" fill=\"black\"/>\n";
    }
    svg += "</svg>\n";
    return svg;
}

} // namespace rootorbits
