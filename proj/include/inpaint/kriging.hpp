#pragma once

#include <vector>

#include "inpaint/tiling.hpp"

namespace inpaint {

enum class VariogramFamily { Spherical, Exponential, Gaussian };

struct VariogramModel {
    VariogramFamily family = VariogramFamily::Spherical;
    double nugget = 0.0;  // discontinuity at the origin, applies for h > 0
    double sill = 1.0;    // partial sill: gamma(h) -> nugget + sill as h grows
    double range = 1.0;   // pixels
    bool degenerate = false;

    // gamma(0) = 0 by definition; nondecreasing in h.
    double gamma(double h) const;
};

struct VariogramBin {
    double lag;
    double gamma;
    std::size_t pair_count;
};

// Isotropic empirical semivariance: per-bin gamma =
// sum of squared differences / (2 * pair count). Empty bins are omitted.
std::vector<VariogramBin> empirical_variogram(
    const std::vector<SamplePoint>& points, double max_lag, int n_bins);

// Weighted least squares (weights = pair counts) over (nugget, sill, range);
// coarse range grid refined by golden-section search.
VariogramModel fit_variogram_model(const std::vector<VariogramBin>& bins,
                                   VariogramFamily family, double max_lag);

struct KrigingWeights {
    std::vector<double> lambdas;  // one per known sample; sums to 1
    double lagrange_mult = 0.0;
};

// Ordinary-kriging weight solve: pairwise-gamma matrix bordered by the unit
// row/column for the sum-to-one constraint.
KrigingWeights kriging_weights(const std::vector<SamplePoint>& known,
                               double target_x, double target_y,
                               const VariogramModel& model);

struct KrigingOptions {
    VariogramFamily family = VariogramFamily::Spherical;
    int variogram_bins = 8;
};

Plane kriging_inpaint(const Plane& p, const PixelMask& m,
                      const TilingPolicy& policy, const KrigingOptions& opt = {});

}  // namespace inpaint
