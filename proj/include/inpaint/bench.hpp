#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "inpaint/corruption.hpp"
#include "inpaint/cubic.hpp"
#include "inpaint/kriging.hpp"
#include "inpaint/metrics.hpp"
#include "inpaint/rbf.hpp"
#include "inpaint/tiling.hpp"

namespace inpaint {

enum class Method { Cubic, Kriging, Rbf, Hdmr };

const char* method_name(Method m);
Method method_from_name(const std::string& name);

struct MethodOptions {
    CubicOptions cubic;
    KrigingOptions kriging;
    RbfOptions rbf;
};

struct BenchCase {
    std::string image_id;
    std::string corruption_id;  // preset name ("mask1".."noise5") or custom
    CorruptionSpec corruption;
    Method method = Method::Cubic;
    TilingPolicy policy;  // ignored by Cubic and Hdmr (whole-plane methods)
    std::uint64_t seed = 0;
};

struct ScoreRecord {
    BenchCase bench_case;
    ScoreTriple scores;
    double wall_time_s = 0.0;
    std::string error;  // empty on success
};

struct BenchmarkReport {
    std::vector<ScoreRecord> rows;
};

// Tile regime defaults: 16x16 for structural masks, 8x8 for noise up to
// 70%, 16x16 at 90%, and a 90x90 centered crop for the frame mask.
TilingPolicy default_policy(const CorruptionSpec& spec);

// Mask generation, corruption, per-channel inpainting with the explicit
// mask, merge, and scoring against the original. Deterministic for fixed
// inputs; failures are reported as an exception carrying case context.
ScoreRecord run_case(const Image& original, const BenchCase& bench_case,
                     const MethodOptions& opt = {});

struct SuiteImage {
    std::string id;
    Image image;
};

// Cartesian product of images x corruption presets x methods. Per-case
// seeds derive from the suite seed, the image id, and the corruption, so
// adding a method never perturbs another case's mask. Case failures are
// recorded as row-level errors and the suite continues.
BenchmarkReport run_suite(const std::vector<SuiteImage>& images,
                          const std::vector<std::string>& corruption_presets,
                          const std::vector<Method>& methods,
                          std::uint64_t suite_seed,
                          const MethodOptions& opt = {}, int tile_size = -1,
                          int min_known = -1);

// Winner flags per row: [0] highest PSNR, [1] highest SSIM, [2] lowest MSE
// within the row's (image, corruption) group. Ties are flagged jointly.
std::vector<std::array<bool, 3>> mark_best(const BenchmarkReport& report);

// Pinned CSV schema: image,corruption,method,psnr,ssim,mse,wall_time_s,error.
// PSNR +inf serializes as "inf". with_timing=false writes 0 wall times so
// repeated runs are byte-identical.
std::string report_to_csv(const BenchmarkReport& report, bool with_timing = true);
BenchmarkReport report_from_csv(const std::string& csv_text);

std::string report_to_markdown(const BenchmarkReport& report);

// Flat key-value harness config.
struct BenchConfig {
    std::vector<std::pair<std::string, std::string>> images;  // id, path
    std::vector<std::string> corruptions;                     // preset names
    std::vector<Method> methods;
    std::uint64_t seed = 0;
    bool timing = true;
    MethodOptions options;
    // Optional tiling overrides; negative = use per-corruption default.
    int tile_size = -1;
    int min_known = -1;
};

BenchConfig parse_bench_config(const std::string& text);
BenchConfig load_bench_config(const std::string& path);

}  // namespace inpaint
