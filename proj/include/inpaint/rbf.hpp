#pragma once

#include <vector>

#include "inpaint/tiling.hpp"

namespace inpaint {

enum class RbfKernel { ThinPlate, Gaussian, Multiquadric };

struct RbfModel {
    RbfKernel kernel = RbfKernel::ThinPlate;
    double epsilon = 1.0;  // shape parameter, Gaussian/Multiquadric only
    std::vector<SamplePoint> centers;  // value field holds the training value
    std::vector<double> coeffs;        // one per center
    double poly_coeffs[3] = {0, 0, 0};  // affine augmentation c0 + c1 x + c2 y
};

// Interpolating RBF fit with affine augmentation: solves the symmetric
// bordered system so that evaluation reproduces every training value and
// the coefficients satisfy the polynomial side conditions.
// epsilon <= 0 selects the default: mean nearest-neighbor spacing.
RbfModel fit_rbf(const std::vector<SamplePoint>& points, RbfKernel kernel,
                 double epsilon = 0.0);

double eval_rbf(const RbfModel& model, double x, double y);

struct RbfOptions {
    RbfKernel kernel = RbfKernel::ThinPlate;
    double epsilon = 0.0;  // <= 0: mean nearest-neighbor spacing
};

// Same tile contract as kriging_inpaint: per-tile fit on known pixels,
// evaluation at the unknowns.
Plane rbf_inpaint(const Plane& p, const PixelMask& m, const TilingPolicy& policy,
                  const RbfOptions& opt = {});

}  // namespace inpaint
