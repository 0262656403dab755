#pragma once

#include <string>

#include "rootorbits/spectral.hpp"

namespace rootorbits {

// Stereographic picture of the positive roots of a rank-3 affine system:
// each root is sent along its ray to the unit sphere and projected from the
// delta direction.  Dots are roots, arrows the action of c, the straight
// line is the eigenvector hyperplane U_c, and the circle is Span(Phi_fin).
// Geometry uses the coordinate Euclidean structure for drawing only; all
// incidences shown are computed exactly upstream.
std::string render_plot_svg(const CartanData& cd, const AffineFrame& fr, const CoxeterWord& c,
                            const GammaData& gd, Int H);

} // namespace rootorbits
