#pragma once

#include <cstdint>
#include <vector>

namespace inpaint {

// Raster conventions used throughout: row-major storage, origin at the
// top-left corner, x = column index, y = row index. Intensities are 8-bit
// [0, 255] in Image; interpolation works on real-valued Plane data and
// quantizes once, at merge_channels.

struct Image {
    int width = 0;
    int height = 0;
    int channels = 0;  // 1 (grayscale) or 3 (RGB, interleaved)
    std::vector<std::uint8_t> data;

    Image() = default;
    Image(int w, int h, int c, std::uint8_t fill = 0);

    std::uint8_t at(int x, int y, int c) const {
        return data[(static_cast<std::size_t>(y) * width + x) * channels + c];
    }
    std::uint8_t& at(int x, int y, int c) {
        return data[(static_cast<std::size_t>(y) * width + x) * channels + c];
    }
    bool same_shape(const Image& o) const {
        return width == o.width && height == o.height && channels == o.channels;
    }
};

struct Plane {
    int width = 0;
    int height = 0;
    std::vector<double> values;

    Plane() = default;
    Plane(int w, int h, double fill = 0.0);

    double at(int x, int y) const {
        return values[static_cast<std::size_t>(y) * width + x];
    }
    double& at(int x, int y) {
        return values[static_cast<std::size_t>(y) * width + x];
    }
};

struct PixelMask {
    int width = 0;
    int height = 0;
    std::vector<std::uint8_t> unknown;  // nonzero = pixel must be reconstructed

    PixelMask() = default;
    PixelMask(int w, int h, bool fill = false);

    bool at(int x, int y) const {
        return unknown[static_cast<std::size_t>(y) * width + x] != 0;
    }
    void set(int x, int y, bool v) {
        unknown[static_cast<std::size_t>(y) * width + x] = v ? 1 : 0;
    }
    std::size_t count_unknown() const;
};

struct TileRect {
    int x0 = 0;
    int y0 = 0;
    int w = 0;
    int h = 0;
};

std::vector<Plane> split_channels(const Image& img);

// Rounds half-away-from-zero, then clamps to [0, 255].
Image merge_channels(const std::vector<Plane>& planes);

std::pair<Plane, PixelMask> extract_tile(const Plane& p, const PixelMask& m,
                                         const TileRect& r);

// Overwrites only pixels flagged unknown inside r; known pixels untouched.
Plane write_back_unknown(const Plane& dst, const Plane& tile,
                         const PixelMask& m, const TileRect& r);

std::uint8_t quantize_intensity(double v);

}  // namespace inpaint
