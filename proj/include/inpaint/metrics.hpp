#pragma once

#include "inpaint/image.hpp"

namespace inpaint {

struct ScoreTriple {
    double psnr = 0.0;  // dB; +inf when images are identical
    double ssim = 0.0;
    double mse = 0.0;
};

// Mean squared error over all pixels and channels.
double mse(const Image& a, const Image& b);

// 20*log10(255/sqrt(mse)); +inf for identical images.
double psnr(const Image& a, const Image& b);
double psnr_from_mse(double mse_value);

// Mean local SSIM, 11x11 Gaussian window sigma 1.5, K1 = 0.01, K2 = 0.03,
// L = 255; RGB is the unweighted mean of per-channel SSIM.
double ssim(const Image& a, const Image& b);

ScoreTriple score_images(const Image& a, const Image& b);

}  // namespace inpaint
