#include "inpaint/corruption.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "inpaint/rng.hpp"

namespace inpaint {

namespace {

// 5x7 uppercase bitmap font, one row per byte, 5 low bits used (MSB = left).
constexpr std::uint8_t kFont5x7[26][7] = {
    {0x0E, 0x11, 0x11, 0x1F, 0x11, 0x11, 0x11},  // A
    {0x1E, 0x11, 0x1E, 0x11, 0x11, 0x11, 0x1E},  // B
    {0x0E, 0x11, 0x10, 0x10, 0x10, 0x11, 0x0E},  // C
    {0x1E, 0x11, 0x11, 0x11, 0x11, 0x11, 0x1E},  // D
    {0x1F, 0x10, 0x1E, 0x10, 0x10, 0x10, 0x1F},  // E
    {0x1F, 0x10, 0x1E, 0x10, 0x10, 0x10, 0x10},  // F
    {0x0E, 0x11, 0x10, 0x17, 0x11, 0x11, 0x0F},  // G
    {0x11, 0x11, 0x1F, 0x11, 0x11, 0x11, 0x11},  // H
    {0x0E, 0x04, 0x04, 0x04, 0x04, 0x04, 0x0E},  // I
    {0x07, 0x02, 0x02, 0x02, 0x02, 0x12, 0x0C},  // J
    {0x11, 0x12, 0x14, 0x18, 0x14, 0x12, 0x11},  // K
    {0x10, 0x10, 0x10, 0x10, 0x10, 0x10, 0x1F},  // L
    {0x11, 0x1B, 0x15, 0x15, 0x11, 0x11, 0x11},  // M
    {0x11, 0x19, 0x15, 0x13, 0x11, 0x11, 0x11},  // N
    {0x0E, 0x11, 0x11, 0x11, 0x11, 0x11, 0x0E},  // O
    {0x1E, 0x11, 0x11, 0x1E, 0x10, 0x10, 0x10},  // P
    {0x0E, 0x11, 0x11, 0x11, 0x15, 0x12, 0x0D},  // Q
    {0x1E, 0x11, 0x11, 0x1E, 0x14, 0x12, 0x11},  // R
    {0x0F, 0x10, 0x10, 0x0E, 0x01, 0x01, 0x1E},  // S
    {0x1F, 0x04, 0x04, 0x04, 0x04, 0x04, 0x04},  // T
    {0x11, 0x11, 0x11, 0x11, 0x11, 0x11, 0x0E},  // U
    {0x11, 0x11, 0x11, 0x11, 0x11, 0x0A, 0x04},  // V
    {0x11, 0x11, 0x11, 0x15, 0x15, 0x1B, 0x11},  // W
    {0x11, 0x0A, 0x04, 0x04, 0x04, 0x0A, 0x11},  // X
    {0x11, 0x0A, 0x04, 0x04, 0x04, 0x04, 0x04},  // Y
    {0x1F, 0x01, 0x02, 0x04, 0x08, 0x10, 0x1F},  // Z
};

void stamp_disc(PixelMask& m, double cx, double cy, double radius) {
    const int x0 = std::max(0, static_cast<int>(std::floor(cx - radius)));
    const int x1 = std::min(m.width - 1, static_cast<int>(std::ceil(cx + radius)));
    const int y0 = std::max(0, static_cast<int>(std::floor(cy - radius)));
    const int y1 = std::min(m.height - 1, static_cast<int>(std::ceil(cy + radius)));
    const double r2 = radius * radius;
    for (int y = y0; y <= y1; ++y)
        for (int x = x0; x <= x1; ++x) {
            const double dx = x - cx, dy = y - cy;
            if (dx * dx + dy * dy <= r2) m.set(x, y, true);
        }
}

void stamp_segment(PixelMask& m, double x0, double y0, double x1, double y1,
                   int width) {
    const double len = std::hypot(x1 - x0, y1 - y0);
    const int steps = std::max(2, static_cast<int>(std::ceil(len * 2)));
    const double r = width * 0.5;
    for (int i = 0; i <= steps; ++i) {
        const double t = static_cast<double>(i) / steps;
        stamp_disc(m, x0 + t * (x1 - x0), y0 + t * (y1 - y0), r);
    }
}

void stamp_glyph(PixelMask& m, char ch, int px, int py, int scale) {
    if (ch < 'A' || ch > 'Z') return;  // space and unknowns leave a gap
    const std::uint8_t* rows = kFont5x7[ch - 'A'];
    for (int gy = 0; gy < 7; ++gy)
        for (int gx = 0; gx < 5; ++gx)
            if (rows[gy] & (1 << (4 - gx)))
                for (int sy = 0; sy < scale; ++sy)
                    for (int sx = 0; sx < scale; ++sx) {
                        const int x = px + gx * scale + sx;
                        const int y = py + gy * scale + sy;
                        if (x >= 0 && x < m.width && y >= 0 && y < m.height)
                            m.set(x, y, true);
                    }
}

void stamp_text_line(PixelMask& m, const std::string& text, int px, int py,
                     int scale) {
    int x = px;
    for (char ch : text) {
        stamp_glyph(m, ch, x, py, scale);
        x += 6 * scale;  // 5 columns + 1 gap
    }
}

PixelMask gen_salt_pepper(double density, int w, int h, std::uint64_t seed) {
    if (!(density > 0.0 && density < 1.0))
        throw std::invalid_argument("salt-pepper density must be in (0, 1)");
    const std::size_t n = static_cast<std::size_t>(w) * h;
    const std::size_t k =
        static_cast<std::size_t>(std::llround(density * static_cast<double>(n)));
    std::vector<std::uint32_t> idx(n);
    std::iota(idx.begin(), idx.end(), 0u);
    Rng rng(seed, "saltpepper-mask");
    // Partial Fisher-Yates: the first k entries are a uniform sample
    // without replacement.
    for (std::size_t i = 0; i < k; ++i) {
        const std::size_t j = i + rng.bounded(n - i);
        std::swap(idx[i], idx[j]);
    }
    PixelMask m(w, h);
    for (std::size_t i = 0; i < k; ++i) m.unknown[idx[i]] = 1;
    return m;
}

PixelMask gen_frame(int frame_size, int w, int h) {
    if (frame_size <= 0 || frame_size >= std::min(w, h))
        throw std::invalid_argument("frame_size must be positive and smaller than the image");
    PixelMask m(w, h);
    const int x0 = (w - frame_size) / 2;
    const int y0 = (h - frame_size) / 2;
    for (int y = y0; y < y0 + frame_size; ++y)
        for (int x = x0; x < x0 + frame_size; ++x) m.set(x, y, true);
    return m;
}

PixelMask gen_curve(int stroke_width, int w, int h, std::uint64_t seed) {
    PixelMask m(w, h);
    Rng rng(seed, "curve");
    auto jitter = [&](double v, double amp) {
        return v + (rng.unit() * 2.0 - 1.0) * amp;
    };
    // One cubic Bezier stroke spanning the image.
    const double px[4] = {jitter(0.10 * w, 0.04 * w), jitter(0.35 * w, 0.08 * w),
                          jitter(0.65 * w, 0.08 * w), jitter(0.90 * w, 0.04 * w)};
    const double py[4] = {jitter(0.75 * h, 0.08 * h), jitter(0.15 * h, 0.08 * h),
                          jitter(0.85 * h, 0.08 * h), jitter(0.25 * h, 0.08 * h)};
    const int steps = 4 * (w + h);
    const double r = stroke_width * 0.5;
    for (int i = 0; i <= steps; ++i) {
        const double t = static_cast<double>(i) / steps;
        const double u = 1.0 - t;
        const double bx = u * u * u * px[0] + 3 * u * u * t * px[1] +
                          3 * u * t * t * px[2] + t * t * t * px[3];
        const double by = u * u * u * py[0] + 3 * u * u * t * py[1] +
                          3 * u * t * t * py[2] + t * t * t * py[3];
        stamp_disc(m, bx, by, r);
    }
    return m;
}

PixelMask gen_text(bool dense, int w, int h) {
    PixelMask m(w, h);
    static const std::string lines[] = {
        "THE QUICK BROWN FOX", "JUMPS OVER THE LAZY", "DOG WHILE PACK MY",
        "BOX WITH FIVE DOZEN", "LIQUOR JUGS AND RUN", "VEXED ZEBRAS JUMP",
    };
    if (dense) {
        // 12-px glyphs (scale 2 of the 5x7 cell), tightly packed rows.
        const int scale = std::max(1, h / 128);
        const int line_h = 8 * scale;
        int row = 0;
        for (int y = scale; y + 7 * scale < h; y += line_h, ++row)
            stamp_text_line(m, lines[row % 6], scale, y, scale);
    } else {
        // A few lines at mixed sizes (roughly 12..19-px glyphs).
        const int base = std::max(1, h / 128);
        const int scales[3] = {base, base + base / 2 + 1, base + 1};
        int y = h / 8;
        for (int i = 0; i < 3 && y + 7 * scales[i] < h; ++i) {
            stamp_text_line(m, lines[2 * i], base, y, scales[i]);
            y += h / 4;
        }
    }
    return m;
}

PixelMask gen_scratches(int stroke_width, int w, int h) {
    PixelMask m(w, h);
    // Horizontal, vertical and oblique strokes.
    for (int i = 1; i <= 3; ++i)
        stamp_segment(m, 0, h * i / 4.0, w - 1, h * i / 4.0, stroke_width);
    for (int i = 1; i <= 3; ++i)
        stamp_segment(m, w * i / 4.0, 0, w * i / 4.0, h - 1, stroke_width);
    stamp_segment(m, 0, 0, w - 1, h - 1, stroke_width);
    stamp_segment(m, w - 1, 0, 0, h - 1, stroke_width);
    stamp_segment(m, 0, h / 2.0, w / 2.0, 0, stroke_width);
    stamp_segment(m, w / 2.0, h - 1.0, w - 1.0, h / 2.0, stroke_width);
    return m;
}

}  // namespace

PixelMask gen_mask(const CorruptionSpec& spec, int width, int height) {
    if (width <= 0 || height <= 0)
        throw std::invalid_argument("gen_mask: bad dimensions");
    if (spec.kind != CorruptionKind::SaltPepper &&
        (width < 64 || height < 64))
        throw std::invalid_argument("gen_mask: structural masks need >= 64x64");
    switch (spec.kind) {
        case CorruptionKind::SaltPepper:
            return gen_salt_pepper(spec.density, width, height, spec.seed);
        case CorruptionKind::Frame:
            return gen_frame(spec.frame_size, width, height);
        case CorruptionKind::Curve:
            return gen_curve(spec.stroke_width, width, height, spec.seed);
        case CorruptionKind::SparseText:
            return gen_text(false, width, height);
        case CorruptionKind::DenseText:
            return gen_text(true, width, height);
        case CorruptionKind::Scratches:
            return gen_scratches(spec.stroke_width, width, height);
    }
    throw std::logic_error("gen_mask: unknown kind");
}

Image apply_corruption(const Image& img, const PixelMask& m,
                       const CorruptionSpec& spec) {
    if (img.width != m.width || img.height != m.height)
        throw std::invalid_argument("apply_corruption: dimension mismatch");
    Image out = img;
    if (spec.kind == CorruptionKind::SaltPepper) {
        Rng rng(spec.seed, "saltpepper-values");
        for (int y = 0; y < img.height; ++y)
            for (int x = 0; x < img.width; ++x)
                if (m.at(x, y)) {
                    const std::uint8_t v = rng.coin() ? 255 : 0;
                    for (int c = 0; c < img.channels; ++c) out.at(x, y, c) = v;
                }
    } else {
        for (int y = 0; y < img.height; ++y)
            for (int x = 0; x < img.width; ++x)
                if (m.at(x, y))
                    for (int c = 0; c < img.channels; ++c) out.at(x, y, c) = 255;
    }
    return out;
}

PixelMask detect_unknown(const Image& original, const Image& corrupted) {
    if (!original.same_shape(corrupted))
        throw std::invalid_argument("detect_unknown: dimension mismatch");
    PixelMask m(original.width, original.height);
    for (int y = 0; y < original.height; ++y)
        for (int x = 0; x < original.width; ++x) {
            bool diff = false;
            for (int c = 0; c < original.channels; ++c)
                diff |= original.at(x, y, c) != corrupted.at(x, y, c);
            m.set(x, y, diff);
        }
    return m;
}

CorruptionSpec corruption_preset(const std::string& name, std::uint64_t seed) {
    CorruptionSpec s;
    s.seed = seed;
    if (name == "mask1") s.kind = CorruptionKind::Curve;
    else if (name == "mask2") s.kind = CorruptionKind::SparseText;
    else if (name == "mask3") s.kind = CorruptionKind::DenseText;
    else if (name == "mask4") s.kind = CorruptionKind::Scratches;
    else if (name == "mask5") s.kind = CorruptionKind::Frame;
    else if (name == "noise1") { s.kind = CorruptionKind::SaltPepper; s.density = 0.1; }
    else if (name == "noise2") { s.kind = CorruptionKind::SaltPepper; s.density = 0.3; }
    else if (name == "noise3") { s.kind = CorruptionKind::SaltPepper; s.density = 0.5; }
    else if (name == "noise4") { s.kind = CorruptionKind::SaltPepper; s.density = 0.7; }
    else if (name == "noise5") { s.kind = CorruptionKind::SaltPepper; s.density = 0.9; }
    else throw std::invalid_argument("unknown corruption preset: " + name);
    return s;
}

const char* corruption_kind_name(CorruptionKind k) {
    switch (k) {
        case CorruptionKind::Curve: return "curve";
        case CorruptionKind::SparseText: return "sparse_text";
        case CorruptionKind::DenseText: return "dense_text";
        case CorruptionKind::Scratches: return "scratches";
        case CorruptionKind::Frame: return "frame";
        case CorruptionKind::SaltPepper: return "salt_pepper";
    }
    return "?";
}

}  // namespace inpaint
