#pragma once

#include <cstdint>
#include <string>

#include "inpaint/image.hpp"

namespace inpaint {

enum class CorruptionKind {
    Curve,       // single pencil stroke (mask 1)
    SparseText,  // a few text lines (mask 2)
    DenseText,   // closely packed text lines (mask 3)
    Scratches,   // grid of oblique / horizontal / vertical strokes (mask 4)
    Frame,       // centered solid square block (mask 5)
    SaltPepper,  // impulse noise at a given density
};

struct CorruptionSpec {
    CorruptionKind kind = CorruptionKind::SaltPepper;
    double density = 0.1;   // SaltPepper only, in (0, 1)
    int frame_size = 40;    // Frame only
    int stroke_width = 4;   // Curve / Scratches
    std::uint64_t seed = 0;
};

// Deterministic for fixed (spec, width, height). SaltPepper marks exactly
// round(density * width * height) pixels, sampled without replacement from
// the pinned PRNG stream derived from spec.seed.
PixelMask gen_mask(const CorruptionSpec& spec, int width, int height);

// SaltPepper sets each masked pixel to 0 or 255 (same value on all channels
// of that pixel); structural kinds paint masked pixels white (255).
Image apply_corruption(const Image& img, const PixelMask& m,
                       const CorruptionSpec& spec);

// Marks a pixel unknown iff any channel differs between the two images.
// Misses corrupted pixels whose noise value coincides with the original;
// the bench harness therefore passes explicit masks instead.
PixelMask detect_unknown(const Image& original, const Image& corrupted);

// Canonical benchmark presets: "mask1".."mask5", "noise1".."noise5".
CorruptionSpec corruption_preset(const std::string& name, std::uint64_t seed);

const char* corruption_kind_name(CorruptionKind k);

}  // namespace inpaint
