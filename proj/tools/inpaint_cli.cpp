#include <CLI11.hpp>
#include <filesystem>
#include <fstream>
#include <iostream>

#include "inpaint/bench.hpp"
#include "inpaint/hdmr.hpp"
#include "inpaint/raster_io.hpp"

using namespace inpaint;

namespace {

CorruptionKind kind_from_name(const std::string& name) {
    if (name == "curve") return CorruptionKind::Curve;
    if (name == "sparse_text") return CorruptionKind::SparseText;
    if (name == "dense_text") return CorruptionKind::DenseText;
    if (name == "scratches") return CorruptionKind::Scratches;
    if (name == "frame") return CorruptionKind::Frame;
    if (name == "salt_pepper") return CorruptionKind::SaltPepper;
    throw CLI::ValidationError("--kind", "unknown corruption kind: " + name);
}

void write_text(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot open for writing: " + path);
    out << text;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Interpolation-based image inpainting benchmark harness"};
    app.require_subcommand(1);

    // corrupt
    auto* corrupt = app.add_subcommand("corrupt", "Generate a mask and corrupt an image");
    std::string c_in, c_kind = "salt_pepper", c_out_img, c_out_mask;
    double c_density = 0.1;
    int c_frame = 40, c_stroke = 4;
    std::uint64_t c_seed = 0;
    corrupt->add_option("input", c_in, "input raster")->required();
    corrupt->add_option("--kind", c_kind,
                        "curve|sparse_text|dense_text|scratches|frame|salt_pepper");
    corrupt->add_option("--density", c_density, "salt-pepper density in (0,1)");
    corrupt->add_option("--frame-size", c_frame, "frame block size in pixels");
    corrupt->add_option("--stroke-width", c_stroke, "stroke width in pixels");
    corrupt->add_option("--seed", c_seed, "PRNG seed");
    corrupt->add_option("--out-img", c_out_img, "corrupted image output")->required();
    corrupt->add_option("--out-mask", c_out_mask, "mask output (PNG, 255=unknown)")
        ->required();

    // inpaint
    auto* inpaint_cmd = app.add_subcommand("inpaint", "Reconstruct masked pixels");
    std::string i_in, i_mask, i_method = "cubic", i_out, i_kernel = "thinplate";
    int i_tile = -1, i_min_known = 8, i_crop = -1;
    inpaint_cmd->add_option("input", i_in, "corrupted raster")->required();
    inpaint_cmd->add_option("--mask", i_mask, "mask file (nonzero = unknown)")
        ->required();
    inpaint_cmd->add_option("--method", i_method, "cubic|kriging|rbf|hdmr");
    inpaint_cmd->add_option("--tile-size", i_tile, "tile size for kriging/rbf");
    inpaint_cmd->add_option("--min-known", i_min_known, "minimum known pixels per tile");
    inpaint_cmd->add_option("--center-crop", i_crop,
                            "solve a single centered crop of this size");
    inpaint_cmd->add_option("--kernel", i_kernel, "rbf kernel: thinplate|gaussian|multiquadric");
    inpaint_cmd->add_option("--out", i_out, "output raster")->required();

    // score
    auto* score = app.add_subcommand("score", "Print psnr,ssim,mse for two images");
    std::string s_a, s_b;
    score->add_option("a", s_a)->required();
    score->add_option("b", s_b)->required();

    // bench
    auto* bench = app.add_subcommand("bench", "Run a benchmark suite from a config");
    std::string b_config, b_out_dir = ".";
    bench->add_option("--config", b_config, "flat key-value config file")->required();
    bench->add_option("--out-dir", b_out_dir, "output directory");

    // report
    auto* report_cmd = app.add_subcommand("report", "Render a report CSV");
    std::string r_csv, r_format = "markdown";
    report_cmd->add_option("csv", r_csv, "report CSV")->required();
    report_cmd->add_option("--format", r_format, "markdown|csv");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        if (*corrupt) {
            const Image img = read_raster(c_in);
            CorruptionSpec spec;
            spec.kind = kind_from_name(c_kind);
            spec.density = c_density;
            spec.frame_size = c_frame;
            spec.stroke_width = c_stroke;
            spec.seed = c_seed;
            const PixelMask m = gen_mask(spec, img.width, img.height);
            write_raster(apply_corruption(img, m, spec), c_out_img);
            write_mask(m, c_out_mask);
        } else if (*inpaint_cmd) {
            const Image img = read_raster(i_in);
            const PixelMask m = read_mask(i_mask);
            const Method method = method_from_name(i_method);
            MethodOptions opt;
            opt.rbf.kernel = i_kernel == "gaussian" ? RbfKernel::Gaussian
                             : i_kernel == "multiquadric" ? RbfKernel::Multiquadric
                                                          : RbfKernel::ThinPlate;
            TilingPolicy policy;
            if (i_crop > 0) {
                policy.regime = TileRegime::CenterCrop;
                policy.crop_size = i_crop;
            }
            if (i_tile > 0) policy.tile_w = policy.tile_h = i_tile;
            policy.min_known = i_min_known;
            const auto planes = split_channels(img);
            std::vector<Plane> filled;
            for (const auto& p : planes) {
                switch (method) {
                    case Method::Cubic:
                        filled.push_back(cubic_inpaint(p, m, opt.cubic));
                        break;
                    case Method::Kriging:
                        filled.push_back(kriging_inpaint(p, m, policy, opt.kriging));
                        break;
                    case Method::Rbf:
                        filled.push_back(rbf_inpaint(p, m, policy, opt.rbf));
                        break;
                    case Method::Hdmr:
                        filled.push_back(hdmr_inpaint(p, m));
                        break;
                }
            }
            write_raster(merge_channels(filled), i_out);
        } else if (*score) {
            const ScoreTriple t = score_images(read_raster(s_a), read_raster(s_b));
            std::cout << (std::isinf(t.psnr) ? std::string("inf")
                                             : std::to_string(t.psnr))
                      << "," << t.ssim << "," << t.mse << "\n";
        } else if (*bench) {
            const BenchConfig cfg = load_bench_config(b_config);
            if (cfg.images.empty() || cfg.corruptions.empty() || cfg.methods.empty())
                throw std::runtime_error(
                    "config needs at least one image, corruption, and method");
            std::vector<SuiteImage> images;
            for (const auto& [id, path] : cfg.images)
                images.push_back({id, read_raster(path)});
            const BenchmarkReport report =
                run_suite(images, cfg.corruptions, cfg.methods, cfg.seed,
                          cfg.options, cfg.tile_size, cfg.min_known);
            std::filesystem::create_directories(b_out_dir);
            write_text(b_out_dir + "/report.csv",
                       report_to_csv(report, cfg.timing));
            write_text(b_out_dir + "/report.md", report_to_markdown(report));
            int failures = 0;
            for (const auto& r : report.rows)
                if (!r.error.empty()) {
                    std::cerr << "FAILED " << r.error << "\n";
                    ++failures;
                }
            if (failures > 0) return 2;
        } else if (*report_cmd) {
            std::ifstream in(r_csv, std::ios::binary);
            if (!in) throw std::runtime_error("cannot open: " + r_csv);
            std::ostringstream ss;
            ss << in.rdbuf();
            const BenchmarkReport report = report_from_csv(ss.str());
            if (r_format == "markdown")
                std::cout << report_to_markdown(report);
            else if (r_format == "csv")
                std::cout << report_to_csv(report);
            else
                throw std::runtime_error("unknown format: " + r_format);
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
