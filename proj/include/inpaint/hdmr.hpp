#pragma once

#include <vector>

#include "inpaint/image.hpp"

namespace inpaint {

// Mean-based expansion of a plane into a grand mean, per-row and per-column
// effects, and a bivariate residual. The duplicated third axis (the image
// copied onto itself) contributes nothing by symmetry, so its components
// are zero by construction and kept only so the expansion is complete.
struct HdmrExpansion {
    double f0 = 0.0;
    std::vector<double> f_row;  // one entry per row (deviation from f0)
    std::vector<double> f_col;  // one entry per column
    double f_n[2] = {0.0, 0.0};           // duplicated axis: identically zero
    Plane f_xy;                           // residual; defined at known cells
    std::vector<double> f_xn, f_yn;       // zero by copy-symmetry
    std::vector<std::uint8_t> row_has_data, col_has_data;
};

// Mask-aware component means: every mean runs over known entries only.
// Errors on a fully-unknown row or column (hdmr_inpaint recovers those
// entries by spline instead).
HdmrExpansion hdmr_decompose(const Plane& p, const PixelMask& m);

// Missing univariate entries are filled by natural cubic spline over the
// axis index; missing residual cells by scattered cubic interpolation.
// Reconstruction is evaluated at unknown pixels only.
Plane hdmr_inpaint(const Plane& p, const PixelMask& m);

Image hdmr_inpaint_colour(const Image& img, const PixelMask& m);

// Natural cubic spline through (index, value) knots, linear beyond the
// end knots. Exposed for the univariate component fill and its tests.
std::vector<double> spline_fill(const std::vector<double>& values,
                                const std::vector<std::uint8_t>& has_value);

}  // namespace inpaint
