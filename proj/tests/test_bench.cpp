#include <doctest.h>

#include <cmath>
#include <limits>

#include "inpaint/bench.hpp"
#include "support/synthetic.hpp"

using namespace inpaint;

TEST_CASE("method names round-trip") {
    for (Method m : {Method::Cubic, Method::Kriging, Method::Rbf, Method::Hdmr})
        CHECK(method_from_name(method_name(m)) == m);
    CHECK(std::string(method_name(Method::Cubic)) == "cubic");
    CHECK(std::string(method_name(Method::Hdmr)) == "hdmr");
    CHECK_THROWS(method_from_name("bilinear"));
}

TEST_CASE("default tiling policy follows the corruption") {
    SUBCASE("structural masks use 16x16 fixed tiles") {
        for (const char* name : {"mask1", "mask2", "mask3", "mask4"}) {
            const TilingPolicy p = default_policy(corruption_preset(name, 0));
            CHECK(p.regime == TileRegime::Fixed);
            CHECK(p.tile_w == 16);
            CHECK(p.tile_h == 16);
        }
    }
    SUBCASE("noise up to 70% uses 8x8") {
        for (const char* name : {"noise1", "noise2", "noise3", "noise4"}) {
            const TilingPolicy p = default_policy(corruption_preset(name, 0));
            CHECK(p.tile_w == 8);
            CHECK(p.tile_h == 8);
        }
    }
    SUBCASE("90% noise grows to 16x16") {
        const TilingPolicy p = default_policy(corruption_preset("noise5", 0));
        CHECK(p.tile_w == 16);
        CHECK(p.tile_h == 16);
    }
    SUBCASE("the frame uses the 90x90 centered crop") {
        const TilingPolicy p = default_policy(corruption_preset("mask5", 0));
        CHECK(p.regime == TileRegime::CenterCrop);
        CHECK(p.crop_size == 90);
    }
}

TEST_CASE("run_case scores a light-noise reconstruction sensibly") {
    const Image img = synthetic::make_image(0, 128);
    BenchCase c;
    c.image_id = "hills";
    c.corruption_id = "noise1";
    c.corruption = corruption_preset("noise1", 99);
    c.method = Method::Cubic;
    c.policy = default_policy(c.corruption);
    const ScoreRecord r = run_case(img, c);
    CHECK(r.error.empty());
    CHECK(r.scores.psnr > 30.0);
    CHECK(r.scores.ssim > 0.9);
    CHECK(r.scores.mse < 70.0);
    CHECK(r.wall_time_s >= 0.0);
}

TEST_CASE("run_case is deterministic") {
    const Image img = synthetic::make_image(1, 96);
    BenchCase c;
    c.image_id = "waves";
    c.corruption_id = "noise2";
    c.corruption = corruption_preset("noise2", 7);
    c.method = Method::Hdmr;
    c.policy = default_policy(c.corruption);
    const ScoreRecord a = run_case(img, c);
    const ScoreRecord b = run_case(img, c);
    CHECK(a.scores.psnr == b.scores.psnr);
    CHECK(a.scores.ssim == b.scores.ssim);
    CHECK(a.scores.mse == b.scores.mse);
}

TEST_CASE("run_suite shares one mask per (image, corruption) across methods") {
    const std::vector<SuiteImage> images = {{"waves", synthetic::make_image(1, 96)}};
    const BenchmarkReport rep =
        run_suite(images, {"noise3"}, {Method::Cubic, Method::Rbf}, 5);
    REQUIRE(rep.rows.size() == 2);
    CHECK(rep.rows[0].bench_case.seed == rep.rows[1].bench_case.seed);
    CHECK(rep.rows[0].bench_case.method == Method::Cubic);
    CHECK(rep.rows[1].bench_case.method == Method::Rbf);
    for (const auto& r : rep.rows) CHECK(r.error.empty());
}

TEST_CASE("run_suite covers the full grid and survives bad cases") {
    // 8x8 image: too small for SSIM's window, so every case fails but the
    // suite still reports the complete cartesian product.
    const std::vector<SuiteImage> images = {
        {"ok", synthetic::make_image(2, 96)}, {"tiny", synthetic::make_image(2, 8)}};
    const BenchmarkReport rep = run_suite(images, {"noise1", "noise2"},
                                          {Method::Cubic, Method::Hdmr}, 3);
    REQUIRE(rep.rows.size() == 8);
    int failures = 0;
    for (const auto& r : rep.rows) {
        if (r.bench_case.image_id == "tiny") {
            CHECK_FALSE(r.error.empty());
            ++failures;
        } else {
            CHECK(r.error.empty());
        }
    }
    CHECK(failures == 4);
}

TEST_CASE("mark_best flags row-group winners") {
    BenchmarkReport rep;
    auto add = [&](const char* img, Method m, double psnr, double ssim,
                   double mse) {
        ScoreRecord r;
        r.bench_case.image_id = img;
        r.bench_case.corruption_id = "noise1";
        r.bench_case.method = m;
        r.scores = {psnr, ssim, mse};
        rep.rows.push_back(r);
    };
    add("a", Method::Cubic, 30, 0.9, 60);
    add("a", Method::Kriging, 32, 0.8, 40);
    add("b", Method::Cubic, 20, 0.7, 600);
    add("b", Method::Kriging, 20, 0.6, 700);
    const auto best = mark_best(rep);
    REQUIRE(best.size() == 4);
    CHECK_FALSE(best[0][0]); CHECK(best[0][1]); CHECK_FALSE(best[0][2]);
    CHECK(best[1][0]); CHECK_FALSE(best[1][1]); CHECK(best[1][2]);
    // tie on psnr in group b: both flagged
    CHECK(best[2][0]); CHECK(best[3][0]);
    CHECK(best[2][1]); CHECK_FALSE(best[3][1]);
    CHECK(best[2][2]); CHECK_FALSE(best[3][2]);
}

TEST_CASE("csv round-trip preserves the report") {
    const std::vector<SuiteImage> images = {{"vignette", synthetic::make_image(4, 96)}};
    const BenchmarkReport rep =
        run_suite(images, {"noise1"}, {Method::Cubic, Method::Hdmr}, 1);
    const std::string csv = report_to_csv(rep);
    CHECK(csv.rfind("image,corruption,method,psnr,ssim,mse,wall_time_s,error",
                    0) == 0);
    const BenchmarkReport back = report_from_csv(csv);
    REQUIRE(back.rows.size() == rep.rows.size());
    for (std::size_t i = 0; i < rep.rows.size(); ++i) {
        CHECK(back.rows[i].bench_case.image_id == rep.rows[i].bench_case.image_id);
        CHECK(back.rows[i].bench_case.method == rep.rows[i].bench_case.method);
        CHECK(back.rows[i].scores.psnr ==
              doctest::Approx(rep.rows[i].scores.psnr).epsilon(1e-5));
    }
}

TEST_CASE("csv serializes infinite psnr as inf") {
    ScoreRecord r;
    r.bench_case.image_id = "x";
    r.bench_case.corruption_id = "noise1";
    r.bench_case.method = Method::Cubic;
    r.scores = {std::numeric_limits<double>::infinity(), 1.0, 0.0};
    BenchmarkReport rep;
    rep.rows.push_back(r);
    const std::string csv = report_to_csv(rep);
    CHECK(csv.find(",inf,") != std::string::npos);
    const BenchmarkReport back = report_from_csv(csv);
    CHECK(std::isinf(back.rows[0].scores.psnr));
}

TEST_CASE("timing-off csv output is byte-identical across runs") {
    const std::vector<SuiteImage> images = {{"terrain", synthetic::make_image(3, 96)}};
    const BenchmarkReport a =
        run_suite(images, {"noise2"}, {Method::Cubic, Method::Kriging}, 9);
    const BenchmarkReport b =
        run_suite(images, {"noise2"}, {Method::Cubic, Method::Kriging}, 9);
    CHECK(report_to_csv(a, false) == report_to_csv(b, false));
}

TEST_CASE("markdown report contains the score table and spread summary") {
    const std::vector<SuiteImage> images = {{"hills", synthetic::make_image(0, 96)}};
    const BenchmarkReport rep =
        run_suite(images, {"noise1"}, {Method::Cubic, Method::Rbf}, 2);
    const std::string md = report_to_markdown(rep);
    CHECK(md.find("| hills ") != std::string::npos);
    CHECK(md.find("cubic") != std::string::npos);
    CHECK(md.find("**") != std::string::npos);  // at least one bolded winner
    CHECK(md.find("spread") != std::string::npos);
}

TEST_CASE("bench config parsing") {
    const std::string text =
        "# comment\n"
        "image = lena /tmp/lena.png\n"
        "image = house /tmp/house.png\n"
        "corruption = noise1\n"
        "corruption = mask5\n"
        "method = cubic\n"
        "method = hdmr\n"
        "seed = 77\n"
        "timing = off\n"
        "tile_size = 12\n"
        "min_known = 10\n"
        "rbf.kernel = gaussian\n"
        "rbf.epsilon = 2.5\n"
        "kriging.family = exponential\n"
        "cubic.neighbors = 30\n";
    const BenchConfig c = parse_bench_config(text);
    REQUIRE(c.images.size() == 2);
    CHECK(c.images[0].first == "lena");
    CHECK(c.images[0].second == "/tmp/lena.png");
    CHECK(c.corruptions == std::vector<std::string>{"noise1", "mask5"});
    REQUIRE(c.methods.size() == 2);
    CHECK(c.methods[1] == Method::Hdmr);
    CHECK(c.seed == 77);
    CHECK_FALSE(c.timing);
    CHECK(c.tile_size == 12);
    CHECK(c.min_known == 10);
    CHECK(c.options.rbf.kernel == RbfKernel::Gaussian);
    CHECK(c.options.rbf.epsilon == doctest::Approx(2.5));
    CHECK(c.options.kriging.family == VariogramFamily::Exponential);
    CHECK(c.options.cubic.neighbors == 30);
    CHECK_THROWS(parse_bench_config("bogus_key = 1\n"));
    CHECK_THROWS(parse_bench_config("method = sorcery\n"));
}
