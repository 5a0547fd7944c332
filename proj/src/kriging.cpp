#include "inpaint/kriging.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace inpaint {

namespace {

double shape(VariogramFamily family, double t) {
    // Normalized transition: 0 at t = 0, ~1 at the (practical) range t = 1.
    if (t <= 0.0) return 0.0;
    switch (family) {
        case VariogramFamily::Spherical:
            return t >= 1.0 ? 1.0 : 1.5 * t - 0.5 * t * t * t;
        case VariogramFamily::Exponential:
            return 1.0 - std::exp(-3.0 * t);
        case VariogramFamily::Gaussian:
            return 1.0 - std::exp(-3.0 * t * t);
    }
    return 0.0;
}

void check_no_duplicates(const std::vector<SamplePoint>& pts) {
    std::vector<std::pair<double, double>> coords;
    coords.reserve(pts.size());
    for (const auto& p : pts) coords.emplace_back(p.x, p.y);
    std::sort(coords.begin(), coords.end());
    if (std::adjacent_find(coords.begin(), coords.end()) != coords.end())
        throw std::invalid_argument("kriging: duplicate sample coordinates");
}

// Bordered ordinary-kriging matrix: [Gamma 1; 1' 0], factored once per
// sample set so many targets can share it.
struct KrigingSystem {
    Eigen::MatrixXd A;
    Eigen::PartialPivLU<Eigen::MatrixXd> lu;
    const std::vector<SamplePoint>* known;
    const VariogramModel* model;
};

KrigingSystem build_system(const std::vector<SamplePoint>& known,
                           const VariogramModel& model) {
    const int n = static_cast<int>(known.size());
    KrigingSystem sys;
    sys.known = &known;
    sys.model = &model;
    sys.A = Eigen::MatrixXd::Zero(n + 1, n + 1);
    double abs_sum = 0.0;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            const double g = model.gamma(std::hypot(known[i].x - known[j].x,
                                                    known[i].y - known[j].y));
            sys.A(i, j) = g;
            sys.A(j, i) = g;
            abs_sum += 2.0 * std::abs(g);
        }
    for (int i = 0; i < n; ++i) {
        sys.A(i, n) = 1.0;
        sys.A(n, i) = 1.0;
    }
    sys.lu.compute(sys.A);
    if (sys.lu.rcond() < 1e-12) {
        // Ridge retry: scale by the mean magnitude of the gamma block
        // (its diagonal is zero by construction).
        double ridge = 1e-8 * abs_sum / std::max(1, n * n - n);
        if (ridge <= 0.0) ridge = 1e-8;
        for (int i = 0; i < n; ++i) sys.A(i, i) += ridge;
        sys.lu.compute(sys.A);
        if (sys.lu.rcond() < 1e-15)
            throw std::runtime_error("kriging system singular");
    }
    return sys;
}

Eigen::VectorXd solve_target(const KrigingSystem& sys, double tx, double ty) {
    const auto& known = *sys.known;
    const int n = static_cast<int>(known.size());
    Eigen::VectorXd rhs(n + 1);
    for (int i = 0; i < n; ++i)
        rhs(i) = sys.model->gamma(std::hypot(known[i].x - tx, known[i].y - ty));
    rhs(n) = 1.0;
    return sys.lu.solve(rhs);
}

// Weighted linear LS for (nugget, partial sill) at a fixed range; returns
// the weighted residual. Clamps nugget >= 0 and sill >= 1e-6.
double fit_linear_part(const std::vector<VariogramBin>& bins,
                       VariogramFamily family, double range, double& nugget,
                       double& sill) {
    double sw = 0, ss = 0, sss = 0, sg = 0, ssg = 0;
    for (const auto& b : bins) {
        const double w = static_cast<double>(b.pair_count);
        const double s = shape(family, b.lag / range);
        sw += w;
        ss += w * s;
        sss += w * s * s;
        sg += w * b.gamma;
        ssg += w * s * b.gamma;
    }
    const double det = sw * sss - ss * ss;
    if (std::abs(det) > 1e-12 * std::max(1.0, sw * sss)) {
        nugget = (sss * sg - ss * ssg) / det;
        sill = (sw * ssg - ss * sg) / det;
    } else {
        nugget = 0.0;
        sill = sss > 0 ? ssg / sss : 0.0;
    }
    if (nugget < 0.0) {
        nugget = 0.0;
        sill = sss > 0 ? ssg / sss : 0.0;
    }
    if (sill < 1e-6) sill = 1e-6;
    double resid = 0.0;
    for (const auto& b : bins) {
        const double d =
            nugget + sill * shape(family, b.lag / range) - b.gamma;
        resid += static_cast<double>(b.pair_count) * d * d;
    }
    return resid;
}

}  // namespace

double VariogramModel::gamma(double h) const {
    if (h <= 0.0) return 0.0;
    return nugget + sill * shape(family, h / range);
}

std::vector<VariogramBin> empirical_variogram(
    const std::vector<SamplePoint>& points, double max_lag, int n_bins) {
    if (points.size() < 2)
        throw std::invalid_argument("empirical_variogram: need at least 2 points");
    if (max_lag <= 0.0 || n_bins < 1)
        throw std::invalid_argument("empirical_variogram: bad max_lag/n_bins");
    std::vector<double> sq(n_bins, 0.0);
    std::vector<std::size_t> cnt(n_bins, 0);
    const double bin_w = max_lag / n_bins;
    const std::size_t n = points.size();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            const double h = std::hypot(points[i].x - points[j].x,
                                        points[i].y - points[j].y);
            if (h <= 0.0 || h > max_lag) continue;  // self-pairs excluded
            // half-open bins (lo, hi]: a lag exactly on an edge belongs below
            int b = static_cast<int>(std::ceil(h / bin_w)) - 1;
            if (b < 0) b = 0;
            if (b >= n_bins) b = n_bins - 1;
            const double d = points[i].value - points[j].value;
            sq[b] += d * d;
            ++cnt[b];
        }
    std::vector<VariogramBin> bins;
    for (int b = 0; b < n_bins; ++b)
        if (cnt[b] > 0)
            bins.push_back({(b + 0.5) * bin_w,
                            sq[b] / (2.0 * static_cast<double>(cnt[b])),
                            cnt[b]});
    return bins;
}

VariogramModel fit_variogram_model(const std::vector<VariogramBin>& bins,
                                   VariogramFamily family, double max_lag) {
    if (bins.size() < 3)
        throw std::invalid_argument("fit_variogram_model: need >= 3 bins");
    VariogramModel m;
    m.family = family;
    bool all_zero = true;
    for (const auto& b : bins) all_zero &= (b.gamma == 0.0);
    if (all_zero) {
        m.nugget = 0.0;
        m.sill = 1e-6;
        m.range = max_lag;
        m.degenerate = true;
        return m;
    }
    const double lo = 1.0, hi = 4.0 * max_lag;
    const int grid = 32;
    double best_r = lo, best_resid = std::numeric_limits<double>::infinity();
    for (int i = 0; i < grid; ++i) {
        const double r = lo * std::pow(hi / lo, static_cast<double>(i) / (grid - 1));
        double nug, sill;
        const double resid = fit_linear_part(bins, family, r, nug, sill);
        if (resid < best_resid) {
            best_resid = resid;
            best_r = r;
        }
    }
    // Golden-section refinement around the best grid cell.
    const double step = std::pow(hi / lo, 1.0 / (grid - 1));
    double a = std::max(lo, best_r / step), b = std::min(hi, best_r * step);
    const double gr = (std::sqrt(5.0) - 1.0) / 2.0;
    double c = b - gr * (b - a), d = a + gr * (b - a);
    double nug, sill;
    double fc = fit_linear_part(bins, family, c, nug, sill);
    double fd = fit_linear_part(bins, family, d, nug, sill);
    for (int it = 0; it < 80 && (b - a) > 1e-9 * b; ++it) {
        if (fc < fd) {
            b = d; d = c; fd = fc;
            c = b - gr * (b - a);
            fc = fit_linear_part(bins, family, c, nug, sill);
        } else {
            a = c; c = d; fc = fd;
            d = a + gr * (b - a);
            fd = fit_linear_part(bins, family, d, nug, sill);
        }
    }
    m.range = 0.5 * (a + b);
    fit_linear_part(bins, family, m.range, m.nugget, m.sill);
    return m;
}

KrigingWeights kriging_weights(const std::vector<SamplePoint>& known,
                               double target_x, double target_y,
                               const VariogramModel& model) {
    if (known.empty())
        throw std::invalid_argument("kriging_weights: need at least one point");
    check_no_duplicates(known);
    const int n = static_cast<int>(known.size());
    if (n == 1) return {{1.0}, 0.0};
    const KrigingSystem sys = build_system(known, model);
    const Eigen::VectorXd sol = solve_target(sys, target_x, target_y);
    KrigingWeights w;
    w.lambdas.assign(sol.data(), sol.data() + n);
    w.lagrange_mult = sol(n);
    return w;
}

Plane kriging_inpaint(const Plane& p, const PixelMask& m,
                      const TilingPolicy& policy, const KrigingOptions& opt) {
    auto solver = [&](const std::vector<SamplePoint>& known,
                      const std::vector<std::pair<int, int>>& targets,
                      std::vector<double>& out) {
        if (known.size() == 1) {
            std::fill(out.begin(), out.end(), known[0].value);
            return;
        }
        double w = 0, h = 0;
        double min_x = known[0].x, max_x = known[0].x;
        double min_y = known[0].y, max_y = known[0].y;
        for (const auto& s : known) {
            min_x = std::min(min_x, s.x); max_x = std::max(max_x, s.x);
            min_y = std::min(min_y, s.y); max_y = std::max(max_y, s.y);
        }
        w = max_x - min_x + 1; h = max_y - min_y + 1;
        const double max_lag = 0.5 * std::hypot(w, h);
        const auto bins = empirical_variogram(known, max_lag, opt.variogram_bins);
        VariogramModel model;
        if (bins.size() >= 3) {
            model = fit_variogram_model(bins, opt.family, max_lag);
        } else {
            // Too few populated bins to fit; fall back to a bare linear-ish
            // transition across the tile.
            model.family = opt.family;
            model.nugget = 0.0;
            model.sill = bins.empty() ? 1.0 : std::max(1e-6, bins.back().gamma);
            model.range = max_lag;
        }
        if (model.degenerate) {
            double mean = 0.0;
            for (const auto& s : known) mean += s.value;
            mean /= static_cast<double>(known.size());
            std::fill(out.begin(), out.end(), mean);
            return;
        }
        const KrigingSystem sys = build_system(known, model);
        const int n = static_cast<int>(known.size());
        for (std::size_t t = 0; t < targets.size(); ++t) {
            const Eigen::VectorXd sol =
                solve_target(sys, targets[t].first, targets[t].second);
            double est = 0.0;
            for (int i = 0; i < n; ++i) est += sol(i) * known[i].value;
            out[t] = est;
        }
    };
    return tile_inpaint(p, m, policy, solver);
}

}  // namespace inpaint
