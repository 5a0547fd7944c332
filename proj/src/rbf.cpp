#include "inpaint/rbf.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace inpaint {

namespace {

double phi(RbfKernel kernel, double r, double eps) {
    switch (kernel) {
        case RbfKernel::ThinPlate:
            return r > 0.0 ? r * r * std::log(r) : 0.0;
        case RbfKernel::Gaussian:
            return std::exp(-(r / eps) * (r / eps));
        case RbfKernel::Multiquadric:
            return std::sqrt(r * r + eps * eps);
    }
    return 0.0;
}

double mean_nn_spacing(const std::vector<SamplePoint>& pts) {
    // Brute force is fine at tile sizes; capped sets stay small.
    double sum = 0.0;
    for (std::size_t i = 0; i < pts.size(); ++i) {
        double best = std::numeric_limits<double>::infinity();
        for (std::size_t j = 0; j < pts.size(); ++j) {
            if (i == j) continue;
            const double d = std::hypot(pts[i].x - pts[j].x, pts[i].y - pts[j].y);
            best = std::min(best, d);
        }
        sum += best;
    }
    return sum / static_cast<double>(pts.size());
}

void check_points(const std::vector<SamplePoint>& pts) {
    if (pts.size() < 3)
        throw std::invalid_argument("fit_rbf: need at least 3 points");
    std::vector<std::pair<double, double>> coords;
    coords.reserve(pts.size());
    for (const auto& p : pts) coords.emplace_back(p.x, p.y);
    std::sort(coords.begin(), coords.end());
    if (std::adjacent_find(coords.begin(), coords.end()) != coords.end())
        throw std::invalid_argument("fit_rbf: duplicate sample coordinates");
}

}  // namespace

RbfModel fit_rbf(const std::vector<SamplePoint>& points, RbfKernel kernel,
                 double epsilon) {
    check_points(points);
    RbfModel model;
    model.kernel = kernel;
    model.epsilon = epsilon > 0.0 ? epsilon : std::max(1e-12, mean_nn_spacing(points));
    model.centers = points;

    const int n = static_cast<int>(points.size());
    Eigen::MatrixXd A = Eigen::MatrixXd::Zero(n + 3, n + 3);
    Eigen::VectorXd b = Eigen::VectorXd::Zero(n + 3);
    double abs_sum = 0.0;
    for (int i = 0; i < n; ++i) {
        for (int j = i; j < n; ++j) {
            const double r = std::hypot(points[i].x - points[j].x,
                                        points[i].y - points[j].y);
            const double v = phi(kernel, r, model.epsilon);
            A(i, j) = v;
            A(j, i) = v;
            abs_sum += (i == j ? 1.0 : 2.0) * std::abs(v);
        }
        A(i, n) = A(n, i) = 1.0;
        A(i, n + 1) = A(n + 1, i) = points[i].x;
        A(i, n + 2) = A(n + 2, i) = points[i].y;
        b(i) = points[i].value;
    }
    Eigen::PartialPivLU<Eigen::MatrixXd> lu(A);
    if (lu.rcond() < 1e-12) {
        double ridge = 1e-8 * abs_sum / (static_cast<double>(n) * n);
        if (ridge <= 0.0) ridge = 1e-8;
        for (int i = 0; i < n; ++i) A(i, i) += ridge;
        lu.compute(A);
        if (lu.rcond() < 1e-15)
            throw std::runtime_error("rbf system singular");
    }
    const Eigen::VectorXd sol = lu.solve(b);
    model.coeffs.assign(sol.data(), sol.data() + n);
    model.poly_coeffs[0] = sol(n);
    model.poly_coeffs[1] = sol(n + 1);
    model.poly_coeffs[2] = sol(n + 2);
    return model;
}

double eval_rbf(const RbfModel& model, double x, double y) {
    double v = model.poly_coeffs[0] + model.poly_coeffs[1] * x +
               model.poly_coeffs[2] * y;
    for (std::size_t i = 0; i < model.centers.size(); ++i) {
        const double r =
            std::hypot(x - model.centers[i].x, y - model.centers[i].y);
        v += model.coeffs[i] * phi(model.kernel, r, model.epsilon);
    }
    return v;
}

Plane rbf_inpaint(const Plane& p, const PixelMask& m, const TilingPolicy& policy,
                  const RbfOptions& opt) {
    auto solver = [&](const std::vector<SamplePoint>& known,
                      const std::vector<std::pair<int, int>>& targets,
                      std::vector<double>& out) {
        if (known.size() < 3) {
            double mean = 0.0;
            for (const auto& s : known) mean += s.value;
            mean /= static_cast<double>(known.size());
            std::fill(out.begin(), out.end(), mean);
            return;
        }
        const RbfModel model = fit_rbf(known, opt.kernel, opt.epsilon);
        for (std::size_t t = 0; t < targets.size(); ++t)
            out[t] = eval_rbf(model, targets[t].first, targets[t].second);
    };
    return tile_inpaint(p, m, policy, solver);
}

}  // namespace inpaint
