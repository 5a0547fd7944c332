#include "inpaint/tiling.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace inpaint {

namespace {

TileRect clamp_rect(int x0, int y0, int x1, int y1, int w, int h) {
    x0 = std::max(0, x0);
    y0 = std::max(0, y0);
    x1 = std::min(w, x1);
    y1 = std::min(h, y1);
    return {x0, y0, x1 - x0, y1 - y0};
}

std::size_t count_known_in(const PixelMask& m, const TileRect& r) {
    std::size_t n = 0;
    for (int y = r.y0; y < r.y0 + r.h; ++y)
        for (int x = r.x0; x < r.x0 + r.w; ++x) n += !m.at(x, y);
    return n;
}

void solve_rect(const Plane& p, const PixelMask& m, const TilingPolicy& policy,
                const TileSolver& solver, TileRect r, Plane& out) {
    std::vector<std::pair<int, int>> targets;
    for (int y = r.y0; y < r.y0 + r.h; ++y)
        for (int x = r.x0; x < r.x0 + r.w; ++x)
            if (m.at(x, y)) targets.emplace_back(x, y);
    if (targets.empty()) return;

    // Adaptive growth: 4 px per side until enough known samples.
    TileRect grown = r;
    while (count_known_in(m, grown) <
               static_cast<std::size_t>(policy.min_known) &&
           (grown.w < p.width || grown.h < p.height)) {
        grown = clamp_rect(grown.x0 - 4, grown.y0 - 4, grown.x0 + grown.w + 4,
                           grown.y0 + grown.h + 4, p.width, p.height);
    }
    if (count_known_in(m, grown) < static_cast<std::size_t>(policy.min_known))
        throw std::runtime_error(
            "tile_inpaint: tile growth exhausted without reaching min_known");

    std::vector<SamplePoint> known;
    known.reserve(count_known_in(m, grown));
    for (int y = grown.y0; y < grown.y0 + grown.h; ++y)
        for (int x = grown.x0; x < grown.x0 + grown.w; ++x)
            if (!m.at(x, y))
                known.push_back({static_cast<double>(x), static_cast<double>(y),
                                 p.at(x, y)});

    // Cap the sample count, keeping the points nearest the tile center.
    if (known.size() > static_cast<std::size_t>(policy.max_points)) {
        const double cx = grown.x0 + (grown.w - 1) / 2.0;
        const double cy = grown.y0 + (grown.h - 1) / 2.0;
        std::stable_sort(known.begin(), known.end(),
                         [&](const SamplePoint& a, const SamplePoint& b) {
                             const double da = (a.x - cx) * (a.x - cx) +
                                               (a.y - cy) * (a.y - cy);
                             const double db = (b.x - cx) * (b.x - cx) +
                                               (b.y - cy) * (b.y - cy);
                             if (da != db) return da < db;
                             if (a.y != b.y) return a.y < b.y;
                             return a.x < b.x;
                         });
        known.resize(policy.max_points);
    }

    // Constant tiles are exact for every method; skip the solver.
    bool constant = true;
    for (const auto& s : known)
        if (s.value != known[0].value) { constant = false; break; }
    std::vector<double> estimates(targets.size());
    if (constant) {
        std::fill(estimates.begin(), estimates.end(), known[0].value);
    } else {
        solver(known, targets, estimates);
    }
    for (std::size_t i = 0; i < targets.size(); ++i)
        out.at(targets[i].first, targets[i].second) = estimates[i];
}

}  // namespace

Plane tile_inpaint(const Plane& p, const PixelMask& m, const TilingPolicy& policy,
                   const TileSolver& solver) {
    if (p.width != m.width || p.height != m.height)
        throw std::invalid_argument("tile_inpaint: plane/mask dimension mismatch");
    Plane out = p;
    if (policy.regime == TileRegime::CenterCrop) {
        const int cs = std::min({policy.crop_size, p.width, p.height});
        const int x0 = (p.width - cs) / 2, y0 = (p.height - cs) / 2;
        solve_rect(p, m, policy, solver, {x0, y0, cs, cs}, out);
        // Unknowns outside the crop still need values.
        PixelMask rest = m;
        for (int y = y0; y < y0 + cs; ++y)
            for (int x = x0; x < x0 + cs; ++x) rest.set(x, y, false);
        if (rest.count_unknown() > 0) {
            TilingPolicy fixed = policy;
            fixed.regime = TileRegime::Fixed;
            Plane outer = tile_inpaint(p, rest, fixed, solver);
            for (int y = 0; y < p.height; ++y)
                for (int x = 0; x < p.width; ++x)
                    if (rest.at(x, y)) out.at(x, y) = outer.at(x, y);
        }
        return out;
    }
    const int tw = std::max(1, policy.tile_w), th = std::max(1, policy.tile_h);
    for (int ty = 0; ty < p.height; ty += th)
        for (int tx = 0; tx < p.width; tx += tw) {
            const TileRect r = clamp_rect(tx, ty, tx + tw, ty + th, p.width,
                                          p.height);
            solve_rect(p, m, policy, solver, r, out);
        }
    return out;
}

}  // namespace inpaint
