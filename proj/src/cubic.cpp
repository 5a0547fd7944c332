#include "inpaint/cubic.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <vector>

namespace inpaint {

namespace {

bool all_finite(const std::array<double, 4>& v) {
    for (double x : v)
        if (!std::isfinite(x)) return false;
    return true;
}

struct Neighbor {
    int x, y;
    double d2;
    bool operator<(const Neighbor& o) const {
        // Equidistant ties break to lower row, then lower column.
        if (d2 != o.d2) return d2 < o.d2;
        if (y != o.y) return y < o.y;
        return x < o.x;
    }
};

// Expanding Chebyshev-ring search for the k nearest known pixels.
std::vector<Neighbor> nearest_known(const PixelMask& m, int px, int py, int k) {
    std::vector<Neighbor> found;
    const int max_r = std::max(std::max(px, m.width - 1 - px),
                               std::max(py, m.height - 1 - py));
    double kth_best = std::numeric_limits<double>::infinity();
    for (int r = 0; r <= max_r; ++r) {
        // Once the ring's minimum possible distance exceeds the current
        // k-th best, no closer point can appear.
        if (found.size() >= static_cast<std::size_t>(k) &&
            static_cast<double>(r) * r > kth_best)
            break;
        const int x0 = px - r, x1 = px + r, y0 = py - r, y1 = py + r;
        auto visit = [&](int x, int y) {
            if (x < 0 || x >= m.width || y < 0 || y >= m.height) return;
            if (m.at(x, y)) return;
            const double dx = x - px, dy = y - py;
            found.push_back({x, y, dx * dx + dy * dy});
        };
        if (r == 0) {
            visit(px, py);
        } else {
            for (int x = x0; x <= x1; ++x) { visit(x, y0); visit(x, y1); }
            for (int y = y0 + 1; y <= y1 - 1; ++y) { visit(x0, y); visit(x1, y); }
        }
        if (found.size() >= static_cast<std::size_t>(k)) {
            std::nth_element(found.begin(), found.begin() + (k - 1), found.end());
            kth_best = found[k - 1].d2;
        }
    }
    std::sort(found.begin(), found.end());
    if (found.size() > static_cast<std::size_t>(k)) found.resize(k);
    return found;
}

// Least-squares fit of a tensor polynomial over [deg_lo, deg_hi] in local
// coordinates centered on the target; returns the value at the target and
// sets ok=false when every degree in the window is ill-conditioned.
double fit_and_eval(const Plane& p, const std::vector<Neighbor>& nb, int px,
                    int py, double cond_threshold, int deg_hi, int deg_lo,
                    bool& ok) {
    ok = true;
    double scale = 1.0;
    for (const auto& n : nb)
        scale = std::max({scale, std::abs(static_cast<double>(n.x - px)),
                          std::abs(static_cast<double>(n.y - py))});
    const int m = static_cast<int>(nb.size());
    for (int degree = deg_hi; degree >= deg_lo; --degree) {
        const int terms = (degree + 1) * (degree + 1);
        if (m < terms) continue;
        Eigen::MatrixXd A(m, terms);
        Eigen::VectorXd b(m);
        for (int r = 0; r < m; ++r) {
            const double u = (nb[r].x - px) / scale;
            const double v = (nb[r].y - py) / scale;
            int c = 0;
            double ui = 1.0;
            for (int i = 0; i <= degree; ++i) {
                double vj = 1.0;
                for (int j = 0; j <= degree; ++j) {
                    A(r, c++) = ui * vj;
                    vj *= v;
                }
                ui *= u;
            }
            b(r) = p.at(nb[r].x, nb[r].y);
        }
        Eigen::VectorXd col_norm(terms);
        for (int c = 0; c < terms; ++c) {
            col_norm(c) = A.col(c).norm();
            if (col_norm(c) <= 0.0) col_norm(c) = 1.0;
            A.col(c) /= col_norm(c);
        }
        Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(A);
        if (qr.rank() < terms) continue;
        const auto& R = qr.matrixR();
        double dmax = 0.0, dmin = std::numeric_limits<double>::infinity();
        for (int c = 0; c < terms; ++c) {
            const double d = std::abs(R(c, c));
            dmax = std::max(dmax, d);
            dmin = std::min(dmin, d);
        }
        if (dmin <= 0.0 || dmax / dmin > cond_threshold) continue;
        Eigen::VectorXd z = qr.solve(b);
        // Target sits at the local origin: only the constant term survives.
        return z(0) / col_norm(0);
    }
    ok = false;
    return p.at(nb[0].x, nb[0].y);  // nearest-neighbor fallback
}

// Full fallback chain for one pixel: cubic on the k nearest neighbors,
// cubic again on a doubled neighborhood if the local geometry was rank
// deficient, then decreasing degrees, then the nearest known value.
double inpaint_pixel(const Plane& p, const PixelMask& m, int px, int py,
                     const CubicOptions& opt) {
    const auto nb = nearest_known(m, px, py, opt.neighbors);
    bool ok = false;
    double v = fit_and_eval(p, nb, px, py, opt.cond_threshold, 3, 3, ok);
    if (ok) return v;
    const auto wide = nearest_known(m, px, py, 2 * opt.neighbors);
    if (wide.size() > nb.size()) {
        v = fit_and_eval(p, wide, px, py, opt.cond_threshold, 3, 3, ok);
        if (ok) return v;
    }
    const auto& best = wide.size() > nb.size() ? wide : nb;
    return fit_and_eval(p, best, px, py, opt.cond_threshold, 2, 1, ok);
}

}  // namespace

BicubicPatch fit_bicubic_patch(const std::array<double, 4>& f,
                               const std::array<double, 4>& fx,
                               const std::array<double, 4>& fy,
                               const std::array<double, 4>& fxy) {
    if (!all_finite(f) || !all_finite(fx) || !all_finite(fy) || !all_finite(fxy))
        throw std::invalid_argument("fit_bicubic_patch: non-finite input");
    const double cx[4] = {0, 1, 0, 1};
    const double cy[4] = {0, 0, 1, 1};
    Eigen::Matrix<double, 16, 16> A;
    Eigen::Matrix<double, 16, 1> b;
    for (int k = 0; k < 4; ++k) {
        const double x = cx[k], y = cy[k];
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j) {
                const int c = i * 4 + j;
                const double xi = std::pow(x, i), yj = std::pow(y, j);
                const double xi1 = i > 0 ? i * std::pow(x, i - 1) : 0.0;
                const double yj1 = j > 0 ? j * std::pow(y, j - 1) : 0.0;
                A(k, c) = xi * yj;            // value
                A(4 + k, c) = xi1 * yj;       // d/dx
                A(8 + k, c) = xi * yj1;       // d/dy
                A(12 + k, c) = xi1 * yj1;     // d2/dxdy
            }
        b(k) = f[k];
        b(4 + k) = fx[k];
        b(8 + k) = fy[k];
        b(12 + k) = fxy[k];
    }
    Eigen::Matrix<double, 16, 1> c = A.partialPivLu().solve(b);
    BicubicPatch patch;
    for (int i = 0; i < 16; ++i) patch.coeffs[i] = c(i);
    return patch;
}

double eval_bicubic(const BicubicPatch& p, double x, double y) {
    // Horner over x of Horner over y.
    double result = 0.0;
    for (int i = 3; i >= 0; --i) {
        double row = 0.0;
        for (int j = 3; j >= 0; --j) row = row * y + p.a(i, j);
        result = result * x + row;
    }
    return result;
}

Plane cubic_inpaint(const Plane& p, const PixelMask& m, const CubicOptions& opt) {
    if (p.width != m.width || p.height != m.height)
        throw std::invalid_argument("cubic_inpaint: plane/mask dimension mismatch");
    const std::size_t total = static_cast<std::size_t>(p.width) * p.height;
    const std::size_t unknown = m.count_unknown();
    if (total - unknown < 16)
        throw std::invalid_argument("cubic_inpaint: fewer than 16 known pixels");
    if (unknown == 0) return p;
    Plane out = p;
    for (int y = 0; y < p.height; ++y)
        for (int x = 0; x < p.width; ++x) {
            if (!m.at(x, y)) continue;
            out.at(x, y) = inpaint_pixel(p, m, x, y, opt);
        }
    return out;
}

}  // namespace inpaint
