#include "inpaint/raster_io.hpp"

#include <png.h>

#include <cstdio>
#include <cstring>
#include <fstream>
#include <memory>
#include <sstream>
#include <stdexcept>

namespace inpaint {

namespace {

[[noreturn]] void fail(const std::string& path, const std::string& what) {
    throw std::runtime_error(path + ": " + what);
}

struct FileCloser {
    void operator()(std::FILE* f) const { if (f) std::fclose(f); }
};
using FilePtr = std::unique_ptr<std::FILE, FileCloser>;

// ---- PNM (PGM P5 / PPM P6) ----

int pnm_token(std::istream& in) {
    // Skips whitespace and '#' comments between header fields.
    while (true) {
        int c = in.peek();
        if (c == '#') {
            std::string line;
            std::getline(in, line);
        } else if (std::isspace(c)) {
            in.get();
        } else {
            break;
        }
    }
    int v;
    in >> v;
    return in ? v : -1;
}

Image read_pnm(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) fail(path, "cannot open");
    char magic[2];
    in.read(magic, 2);
    int channels;
    if (magic[0] == 'P' && magic[1] == '5') channels = 1;
    else if (magic[0] == 'P' && magic[1] == '6') channels = 3;
    else fail(path, "malformed PNM header");
    const int w = pnm_token(in);
    const int h = pnm_token(in);
    const int maxval = pnm_token(in);
    if (w <= 0 || h <= 0) fail(path, "malformed PNM dimensions");
    if (maxval != 255) fail(path, "unsupported bit depth");
    in.get();  // single whitespace after maxval
    Image img(w, h, channels);
    in.read(reinterpret_cast<char*>(img.data.data()),
            static_cast<std::streamsize>(img.data.size()));
    if (in.gcount() != static_cast<std::streamsize>(img.data.size()))
        fail(path, "truncated PNM payload");
    return img;
}

void write_pnm(const Image& img, const std::string& path) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) fail(path, "cannot open for writing");
    out << (img.channels == 1 ? "P5" : "P6") << "\n"
        << img.width << " " << img.height << "\n255\n";
    out.write(reinterpret_cast<const char*>(img.data.data()),
              static_cast<std::streamsize>(img.data.size()));
    if (!out) fail(path, "write failed");
}

// ---- PNG via libpng ----

Image read_png(const std::string& path) {
    FilePtr fp(std::fopen(path.c_str(), "rb"));
    if (!fp) fail(path, "cannot open");
    png_structp png =
        png_create_read_struct(PNG_LIBPNG_VER_STRING, nullptr, nullptr, nullptr);
    png_infop info = png ? png_create_info_struct(png) : nullptr;
    if (!png || !info) {
        png_destroy_read_struct(&png, &info, nullptr);
        fail(path, "libpng init failed");
    }
    Image img;
    std::vector<png_bytep> rows;
    if (setjmp(png_jmpbuf(png))) {
        png_destroy_read_struct(&png, &info, nullptr);
        fail(path, "malformed PNG");
    }
    png_init_io(png, fp.get());
    png_read_info(png, info);

    const int bit_depth = png_get_bit_depth(png, info);
    if (bit_depth > 8) {
        png_destroy_read_struct(&png, &info, nullptr);
        fail(path, "unsupported bit depth");
    }
    const int color_type = png_get_color_type(png, info);
    if (color_type & PNG_COLOR_MASK_ALPHA) {
        png_destroy_read_struct(&png, &info, nullptr);
        fail(path, "alpha channels not supported");
    }
    if (color_type == PNG_COLOR_TYPE_PALETTE) png_set_palette_to_rgb(png);
    if (color_type == PNG_COLOR_TYPE_GRAY && bit_depth < 8)
        png_set_expand_gray_1_2_4_to_8(png);
    png_read_update_info(png, info);

    const int w = static_cast<int>(png_get_image_width(png, info));
    const int h = static_cast<int>(png_get_image_height(png, info));
    const int c = static_cast<int>(png_get_channels(png, info));
    if (c != 1 && c != 3) {
        png_destroy_read_struct(&png, &info, nullptr);
        fail(path, "unsupported channel count");
    }
    img = Image(w, h, c);
    rows.resize(h);
    for (int y = 0; y < h; ++y)
        rows[y] = img.data.data() + static_cast<std::size_t>(y) * w * c;
    png_read_image(png, rows.data());
    png_read_end(png, nullptr);
    png_destroy_read_struct(&png, &info, nullptr);
    return img;
}

void write_png(const Image& img, const std::string& path) {
    FilePtr fp(std::fopen(path.c_str(), "wb"));
    if (!fp) fail(path, "cannot open for writing");
    png_structp png =
        png_create_write_struct(PNG_LIBPNG_VER_STRING, nullptr, nullptr, nullptr);
    png_infop info = png ? png_create_info_struct(png) : nullptr;
    if (!png || !info) {
        png_destroy_write_struct(&png, &info);
        fail(path, "libpng init failed");
    }
    if (setjmp(png_jmpbuf(png))) {
        png_destroy_write_struct(&png, &info);
        fail(path, "PNG write failed");
    }
    png_init_io(png, fp.get());
    png_set_IHDR(png, info, img.width, img.height, 8,
                 img.channels == 1 ? PNG_COLOR_TYPE_GRAY : PNG_COLOR_TYPE_RGB,
                 PNG_INTERLACE_NONE, PNG_COMPRESSION_TYPE_DEFAULT,
                 PNG_FILTER_TYPE_DEFAULT);
    png_write_info(png, info);
    for (int y = 0; y < img.height; ++y)
        png_write_row(png, const_cast<png_bytep>(
                               img.data.data() +
                               static_cast<std::size_t>(y) * img.width *
                                   img.channels));
    png_write_end(png, nullptr);
    png_destroy_write_struct(&png, &info);
}

bool has_suffix(const std::string& s, const std::string& suf) {
    return s.size() >= suf.size() &&
           s.compare(s.size() - suf.size(), suf.size(), suf) == 0;
}

}  // namespace

Image read_raster(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) fail(path, "cannot open");
    unsigned char sig[8] = {};
    in.read(reinterpret_cast<char*>(sig), 8);
    in.close();
    if (sig[0] == 0x89 && sig[1] == 'P' && sig[2] == 'N' && sig[3] == 'G')
        return read_png(path);
    if (sig[0] == 'P' && (sig[1] == '5' || sig[1] == '6')) return read_pnm(path);
    fail(path, "unrecognized raster format");
}

void write_raster(const Image& img, const std::string& path) {
    if (has_suffix(path, ".pgm") || has_suffix(path, ".ppm") ||
        has_suffix(path, ".pnm")) {
        if (has_suffix(path, ".pgm") && img.channels != 1)
            fail(path, "PGM requires a grayscale image");
        if (has_suffix(path, ".ppm") && img.channels != 3)
            fail(path, "PPM requires an RGB image");
        write_pnm(img, path);
    } else if (has_suffix(path, ".png")) {
        write_png(img, path);
    } else {
        fail(path, "unrecognized output extension (use .png/.pgm/.ppm)");
    }
}

PixelMask read_mask(const std::string& path) {
    Image img = read_raster(path);
    PixelMask m(img.width, img.height);
    for (int y = 0; y < img.height; ++y)
        for (int x = 0; x < img.width; ++x) {
            bool u = false;
            for (int c = 0; c < img.channels; ++c) u |= img.at(x, y, c) != 0;
            m.set(x, y, u);
        }
    return m;
}

void write_mask(const PixelMask& m, const std::string& path) {
    Image img(m.width, m.height, 1);
    for (int y = 0; y < m.height; ++y)
        for (int x = 0; x < m.width; ++x)
            img.at(x, y, 0) = m.at(x, y) ? 255 : 0;
    write_raster(img, path);
}

}  // namespace inpaint
