#include "inpaint/image.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>

namespace inpaint {

Image::Image(int w, int h, int c, std::uint8_t fill)
    : width(w), height(h), channels(c),
      data(static_cast<std::size_t>(w) * h * c, fill) {
    if (w <= 0 || h <= 0 || (c != 1 && c != 3))
        throw std::invalid_argument("Image: bad dimensions or channel count");
}

Plane::Plane(int w, int h, double fill)
    : width(w), height(h), values(static_cast<std::size_t>(w) * h, fill) {
    if (w <= 0 || h <= 0) throw std::invalid_argument("Plane: bad dimensions");
}

PixelMask::PixelMask(int w, int h, bool fill)
    : width(w), height(h),
      unknown(static_cast<std::size_t>(w) * h, fill ? 1 : 0) {
    if (w <= 0 || h <= 0) throw std::invalid_argument("PixelMask: bad dimensions");
}

std::size_t PixelMask::count_unknown() const {
    std::size_t n = 0;
    for (auto v : unknown) n += (v != 0);
    return n;
}

std::uint8_t quantize_intensity(double v) {
    double r = std::round(v);  // std::round is half-away-from-zero
    if (r < 0.0) r = 0.0;
    if (r > 255.0) r = 255.0;
    return static_cast<std::uint8_t>(r);
}

std::vector<Plane> split_channels(const Image& img) {
    std::vector<Plane> planes;
    planes.reserve(img.channels);
    for (int c = 0; c < img.channels; ++c) {
        Plane p(img.width, img.height);
        for (int y = 0; y < img.height; ++y)
            for (int x = 0; x < img.width; ++x)
                p.at(x, y) = img.at(x, y, c);
        planes.push_back(std::move(p));
    }
    return planes;
}

Image merge_channels(const std::vector<Plane>& planes) {
    if (planes.size() != 1 && planes.size() != 3)
        throw std::invalid_argument("merge_channels: plane count must be 1 or 3");
    const int w = planes[0].width, h = planes[0].height;
    for (const auto& p : planes)
        if (p.width != w || p.height != h)
            throw std::invalid_argument("merge_channels: plane dimension mismatch");
    Image img(w, h, static_cast<int>(planes.size()));
    for (int y = 0; y < h; ++y)
        for (int x = 0; x < w; ++x)
            for (int c = 0; c < img.channels; ++c)
                img.at(x, y, c) = quantize_intensity(planes[c].at(x, y));
    return img;
}

static void check_rect(const TileRect& r, int w, int h) {
    if (r.w <= 0 || r.h <= 0 || r.x0 < 0 || r.y0 < 0 || r.x0 + r.w > w ||
        r.y0 + r.h > h)
        throw std::invalid_argument("tile rect out of bounds");
}

std::pair<Plane, PixelMask> extract_tile(const Plane& p, const PixelMask& m,
                                         const TileRect& r) {
    if (p.width != m.width || p.height != m.height)
        throw std::invalid_argument("extract_tile: plane/mask dimension mismatch");
    check_rect(r, p.width, p.height);
    Plane tp(r.w, r.h);
    PixelMask tm(r.w, r.h);
    for (int y = 0; y < r.h; ++y)
        for (int x = 0; x < r.w; ++x) {
            tp.at(x, y) = p.at(r.x0 + x, r.y0 + y);
            tm.set(x, y, m.at(r.x0 + x, r.y0 + y));
        }
    return {std::move(tp), std::move(tm)};
}

Plane write_back_unknown(const Plane& dst, const Plane& tile,
                         const PixelMask& m, const TileRect& r) {
    if (dst.width != m.width || dst.height != m.height)
        throw std::invalid_argument("write_back_unknown: plane/mask mismatch");
    if (tile.width != r.w || tile.height != r.h)
        throw std::invalid_argument("write_back_unknown: tile/rect mismatch");
    check_rect(r, dst.width, dst.height);
    Plane out = dst;
    for (int y = 0; y < r.h; ++y)
        for (int x = 0; x < r.w; ++x)
            if (m.at(r.x0 + x, r.y0 + y))
                out.at(r.x0 + x, r.y0 + y) = tile.at(x, y);
    return out;
}

}  // namespace inpaint
