#pragma once

#include <array>

#include "inpaint/image.hpp"

namespace inpaint {

// Bicubic surface patch on the unit square:
//   p(x, y) = sum_{i,j=0..3} a_ij x^i y^j
struct BicubicPatch {
    std::array<double, 16> coeffs{};  // index i*4+j holds a_ij

    double a(int i, int j) const { return coeffs[i * 4 + j]; }
};

// Hermite-style fit from corner values and corner partial derivatives.
// Corners are ordered (0,0), (1,0), (0,1), (1,1).
BicubicPatch fit_bicubic_patch(const std::array<double, 4>& f,
                               const std::array<double, 4>& fx,
                               const std::array<double, 4>& fy,
                               const std::array<double, 4>& fxy);

double eval_bicubic(const BicubicPatch& p, double x, double y);

struct CubicOptions {
    int neighbors = 24;            // nearest known pixels per fit
    double cond_threshold = 1e10;  // degree fallback trigger
};

// Scattered-data cubic inpainting: each unknown pixel gets the value of a
// locally least-squares-fitted cubic surface over its nearest known pixels.
// Reads only originally-known pixels, so the result is order-independent.
Plane cubic_inpaint(const Plane& p, const PixelMask& m,
                    const CubicOptions& opt = {});

}  // namespace inpaint
