#include "inpaint/metrics.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <vector>

namespace inpaint {

namespace {

constexpr int kWin = 11;
constexpr double kSigma = 1.5;
constexpr double kC1 = (0.01 * 255) * (0.01 * 255);
constexpr double kC2 = (0.03 * 255) * (0.03 * 255);

// Normalized 1-D Gaussian window taps.
const std::vector<double>& gauss_taps() {
    static const std::vector<double> taps = [] {
        std::vector<double> t(kWin);
        double sum = 0.0;
        for (int i = 0; i < kWin; ++i) {
            const double d = i - (kWin - 1) / 2.0;
            t[i] = std::exp(-d * d / (2.0 * kSigma * kSigma));
            sum += t[i];
        }
        for (auto& v : t) v /= sum;
        return t;
    }();
    return taps;
}

// Separable Gaussian filter, valid region only: output is
// (w - kWin + 1) x (h - kWin + 1).
Plane gauss_valid(const Plane& p) {
    const auto& g = gauss_taps();
    const int ow = p.width - kWin + 1, oh = p.height - kWin + 1;
    Plane tmp(ow, p.height);
    for (int y = 0; y < p.height; ++y)
        for (int x = 0; x < ow; ++x) {
            double s = 0.0;
            for (int k = 0; k < kWin; ++k) s += g[k] * p.at(x + k, y);
            tmp.at(x, y) = s;
        }
    Plane out(ow, oh);
    for (int y = 0; y < oh; ++y)
        for (int x = 0; x < ow; ++x) {
            double s = 0.0;
            for (int k = 0; k < kWin; ++k) s += g[k] * tmp.at(x, y + k);
            out.at(x, y) = s;
        }
    return out;
}

double ssim_plane(const Plane& a, const Plane& b) {
    const int w = a.width, h = a.height;
    Plane aa(w, h), bb(w, h), ab(w, h);
    for (int y = 0; y < h; ++y)
        for (int x = 0; x < w; ++x) {
            const double va = a.at(x, y), vb = b.at(x, y);
            aa.at(x, y) = va * va;
            bb.at(x, y) = vb * vb;
            ab.at(x, y) = va * vb;
        }
    const Plane mu_a = gauss_valid(a), mu_b = gauss_valid(b);
    const Plane m_aa = gauss_valid(aa), m_bb = gauss_valid(bb),
                m_ab = gauss_valid(ab);
    double sum = 0.0;
    const int ow = mu_a.width, oh = mu_a.height;
    for (int y = 0; y < oh; ++y)
        for (int x = 0; x < ow; ++x) {
            const double ma = mu_a.at(x, y), mb = mu_b.at(x, y);
            const double va = m_aa.at(x, y) - ma * ma;
            const double vb = m_bb.at(x, y) - mb * mb;
            const double cov = m_ab.at(x, y) - ma * mb;
            const double num = (2 * ma * mb + kC1) * (2 * cov + kC2);
            const double den = (ma * ma + mb * mb + kC1) * (va + vb + kC2);
            sum += num / den;
        }
    return sum / (static_cast<double>(ow) * oh);
}

void check_pair(const Image& a, const Image& b) {
    if (!a.same_shape(b))
        throw std::invalid_argument("metric: image dimension mismatch");
}

}  // namespace

double mse(const Image& a, const Image& b) {
    check_pair(a, b);
    double sum = 0.0;
    for (std::size_t i = 0; i < a.data.size(); ++i) {
        const double d = static_cast<double>(a.data[i]) - b.data[i];
        sum += d * d;
    }
    return sum / static_cast<double>(a.data.size());
}

double psnr_from_mse(double mse_value) {
    if (mse_value <= 0.0) return std::numeric_limits<double>::infinity();
    return 20.0 * std::log10(255.0 / std::sqrt(mse_value));
}

double psnr(const Image& a, const Image& b) { return psnr_from_mse(mse(a, b)); }

double ssim(const Image& a, const Image& b) {
    check_pair(a, b);
    if (a.width < kWin || a.height < kWin)
        throw std::invalid_argument("ssim: image smaller than the 11x11 window");
    const auto pa = split_channels(a), pb = split_channels(b);
    double sum = 0.0;
    for (std::size_t c = 0; c < pa.size(); ++c) sum += ssim_plane(pa[c], pb[c]);
    return sum / static_cast<double>(pa.size());
}

ScoreTriple score_images(const Image& a, const Image& b) {
    ScoreTriple t;
    t.mse = mse(a, b);
    t.psnr = psnr_from_mse(t.mse);
    t.ssim = ssim(a, b);
    return t;
}

}  // namespace inpaint
