#pragma once

#include <string>

#include "inpaint/image.hpp"

namespace inpaint {

// Lossless 8-bit raster I/O. Supported formats: PNG (gray / RGB),
// PGM (P5) and PPM (P6) binary. Format is detected from the file
// signature on read and from the extension on write.

Image read_raster(const std::string& path);
void write_raster(const Image& img, const std::string& path);

// Masks round-trip as 8-bit grayscale: 0 = known, 255 = unknown.
PixelMask read_mask(const std::string& path);
void write_mask(const PixelMask& m, const std::string& path);

}  // namespace inpaint
