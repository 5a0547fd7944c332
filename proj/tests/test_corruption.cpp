#include <doctest.h>

#include <cmath>

#include "inpaint/corruption.hpp"
#include "inpaint/rng.hpp"

using namespace inpaint;

TEST_CASE("salt-pepper mask has exact cardinality") {
    CorruptionSpec s;
    s.kind = CorruptionKind::SaltPepper;
    s.density = 0.5;
    s.seed = 11;
    const PixelMask m = gen_mask(s, 256, 256);
    CHECK(m.count_unknown() == 32768);

    // round(density * N) for arbitrary densities and dims
    Rng rng(3);
    for (int trial = 0; trial < 20; ++trial) {
        CorruptionSpec t = s;
        t.density = 0.01 + 0.98 * rng.unit();
        t.seed = rng.next();
        const int w = 16 + static_cast<int>(rng.bounded(100));
        const int h = 16 + static_cast<int>(rng.bounded(100));
        const PixelMask mm = gen_mask(t, w, h);
        const auto expected = static_cast<std::size_t>(
            std::llround(t.density * static_cast<double>(w) * h));
        CHECK(mm.count_unknown() == expected);
    }
}

TEST_CASE("frame mask is a centered block") {
    CorruptionSpec s;
    s.kind = CorruptionKind::Frame;
    s.frame_size = 40;
    const PixelMask m = gen_mask(s, 256, 256);
    CHECK(m.count_unknown() == 1600);
    for (int y = 108; y < 148; ++y)
        for (int x = 108; x < 148; ++x) REQUIRE(m.at(x, y));
    CHECK_FALSE(m.at(107, 128));
    CHECK_FALSE(m.at(148, 128));
}

TEST_CASE("gen_mask is deterministic") {
    for (const char* preset : {"mask1", "mask2", "mask3", "mask4", "noise5"}) {
        const CorruptionSpec s = corruption_preset(preset, 42);
        const PixelMask a = gen_mask(s, 128, 128);
        const PixelMask b = gen_mask(s, 128, 128);
        CHECK(a.unknown == b.unknown);
        CHECK(a.count_unknown() > 0);
    }
}

TEST_CASE("structural masks leave most pixels known") {
    for (const char* preset : {"mask1", "mask2", "mask3", "mask4", "mask5"}) {
        const CorruptionSpec s = corruption_preset(preset, 7);
        const PixelMask m = gen_mask(s, 256, 256);
        CHECK(m.count_unknown() > 100);
        CHECK(m.count_unknown() < 65536 / 2);
    }
}

TEST_CASE("gen_mask validation") {
    CorruptionSpec s;
    s.kind = CorruptionKind::SaltPepper;
    s.density = 0.0;
    CHECK_THROWS(gen_mask(s, 64, 64));
    s.density = 1.0;
    CHECK_THROWS(gen_mask(s, 64, 64));
    s.kind = CorruptionKind::Frame;
    s.frame_size = 64;
    CHECK_THROWS(gen_mask(s, 64, 64));
    s.kind = CorruptionKind::Curve;
    CHECK_THROWS(gen_mask(s, 32, 32));  // structural kinds need room
}

TEST_CASE("apply_corruption") {
    Image img(64, 64, 1, 128);
    SUBCASE("all-false mask is a no-op") {
        PixelMask m(64, 64);
        CorruptionSpec s;
        s.kind = CorruptionKind::SaltPepper;
        const Image out = apply_corruption(img, m, s);
        CHECK(out.data == img.data);
    }
    SUBCASE("salt-pepper writes extremes only") {
        CorruptionSpec s;
        s.kind = CorruptionKind::SaltPepper;
        s.density = 0.4;
        s.seed = 5;
        const PixelMask m = gen_mask(s, 64, 64);
        const Image out = apply_corruption(img, m, s);
        int zeros = 0, full = 0;
        for (int y = 0; y < 64; ++y)
            for (int x = 0; x < 64; ++x) {
                if (m.at(x, y)) {
                    const bool extreme =
                        out.at(x, y, 0) == 0 || out.at(x, y, 0) == 255;
                    REQUIRE(extreme);
                    zeros += out.at(x, y, 0) == 0;
                    full += out.at(x, y, 0) == 255;
                } else {
                    REQUIRE(out.at(x, y, 0) == 128);
                }
            }
        CHECK(zeros > 0);
        CHECK(full > 0);
    }
    SUBCASE("salt-pepper hits all channels of a pixel identically") {
        Image rgb(64, 64, 3, 100);
        CorruptionSpec s;
        s.kind = CorruptionKind::SaltPepper;
        s.density = 0.3;
        s.seed = 9;
        const PixelMask m = gen_mask(s, 64, 64);
        const Image out = apply_corruption(rgb, m, s);
        for (int y = 0; y < 64; ++y)
            for (int x = 0; x < 64; ++x)
                if (m.at(x, y)) {
                    REQUIRE(out.at(x, y, 0) == out.at(x, y, 1));
                    REQUIRE(out.at(x, y, 1) == out.at(x, y, 2));
                }
    }
    SUBCASE("structural kinds paint white") {
        const CorruptionSpec s = corruption_preset("mask5", 0);
        const PixelMask m = gen_mask(s, 64 + 64, 128);
        const Image big(128, 128, 1, 50);
        const Image out = apply_corruption(big, m, s);
        for (int y = 0; y < 128; ++y)
            for (int x = 0; x < 128; ++x)
                REQUIRE(out.at(x, y, 0) == (m.at(x, y) ? 255 : 50));
    }
}

TEST_CASE("detect_unknown") {
    Image a(8, 8, 3, 10);
    SUBCASE("identical images give an empty mask") {
        CHECK(detect_unknown(a, a).count_unknown() == 0);
    }
    SUBCASE("one changed channel marks exactly that pixel") {
        Image b = a;
        b.at(3, 5, 1) = 11;
        const PixelMask m = detect_unknown(a, b);
        CHECK(m.count_unknown() == 1);
        CHECK(m.at(3, 5));
    }
    SUBCASE("coincident noise values are missed, by definition") {
        // already-white image: the white frame overlay is invisible
        const CorruptionSpec s = corruption_preset("mask5", 0);
        const PixelMask m = gen_mask(s, 128, 128);
        const Image white(128, 128, 1, 255);
        const Image corrupted = apply_corruption(white, m, s);
        CHECK(detect_unknown(white, corrupted).count_unknown() == 0);
    }
    SUBCASE("frame detection is a subset of the mask") {
        Image img(128, 128, 1, 90);
        const CorruptionSpec s = corruption_preset("mask5", 1);
        const PixelMask m = gen_mask(s, 128, 128);
        const Image corrupted = apply_corruption(img, m, s);
        const PixelMask detected = detect_unknown(img, corrupted);
        for (int y = 0; y < 128; ++y)
            for (int x = 0; x < 128; ++x)
                if (detected.at(x, y)) REQUIRE(m.at(x, y));
        // no original pixel was 255, so detection is exact here
        CHECK(detected.count_unknown() == m.count_unknown());
    }
}

TEST_CASE("corruption presets match the benchmark grid") {
    CHECK(corruption_preset("noise1", 0).density == doctest::Approx(0.1));
    CHECK(corruption_preset("noise4", 0).density == doctest::Approx(0.7));
    CHECK(corruption_preset("mask5", 0).kind == CorruptionKind::Frame);
    CHECK(corruption_preset("mask5", 0).frame_size == 40);
    CHECK_THROWS(corruption_preset("mask9", 0));
}
