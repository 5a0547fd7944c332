#pragma once

#include <functional>
#include <vector>

#include "inpaint/image.hpp"

namespace inpaint {

enum class TileRegime { Auto, Fixed, CenterCrop };

struct TilingPolicy {
    int tile_w = 16;
    int tile_h = 16;
    int min_known = 8;          // tiles grow by 4 px/side until satisfied
    TileRegime regime = TileRegime::Fixed;
    int crop_size = 90;         // CenterCrop only
    int max_points = 2000;      // cap on known samples per solve
};

struct SamplePoint {
    double x, y, value;
};

// Per-tile solver: given the known samples of a (possibly grown) tile and
// the target coordinates, produce one estimate per target.
using TileSolver = std::function<void(const std::vector<SamplePoint>& known,
                                      const std::vector<std::pair<int, int>>& targets,
                                      std::vector<double>& out)>;

// Runs a solver over the tile decomposition dictated by the policy.
// Tiles write disjoint pixel sets and read only original known pixels.
// Constant tiles short-circuit to the constant without invoking the solver.
Plane tile_inpaint(const Plane& p, const PixelMask& m, const TilingPolicy& policy,
                   const TileSolver& solver);

}  // namespace inpaint
