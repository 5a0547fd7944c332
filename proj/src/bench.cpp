#include "inpaint/bench.hpp"

#include <algorithm>
#include <cctype>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <map>
#include <sstream>
#include <stdexcept>

#include "inpaint/hdmr.hpp"
#include "inpaint/raster_io.hpp"
#include "inpaint/rng.hpp"
#include "inpaint/stats.hpp"

namespace inpaint {

const char* method_name(Method m) {
    switch (m) {
        case Method::Cubic: return "cubic";
        case Method::Kriging: return "kriging";
        case Method::Rbf: return "rbf";
        case Method::Hdmr: return "hdmr";
    }
    return "?";
}

Method method_from_name(const std::string& name) {
    if (name == "cubic") return Method::Cubic;
    if (name == "kriging") return Method::Kriging;
    if (name == "rbf") return Method::Rbf;
    if (name == "hdmr") return Method::Hdmr;
    throw std::invalid_argument("unknown method: " + name);
}

TilingPolicy default_policy(const CorruptionSpec& spec) {
    TilingPolicy p;
    if (spec.kind == CorruptionKind::Frame) {
        p.regime = TileRegime::CenterCrop;
        p.crop_size = 90;
        p.tile_w = p.tile_h = 16;
    } else if (spec.kind == CorruptionKind::SaltPepper) {
        p.regime = TileRegime::Fixed;
        const int t = spec.density > 0.75 ? 16 : 8;
        p.tile_w = p.tile_h = t;
    } else {
        p.regime = TileRegime::Fixed;
        p.tile_w = p.tile_h = 16;
    }
    return p;
}

namespace {

Plane inpaint_plane(Method method, const Plane& p, const PixelMask& m,
                    const TilingPolicy& policy, const MethodOptions& opt) {
    switch (method) {
        case Method::Cubic: return cubic_inpaint(p, m, opt.cubic);
        case Method::Kriging: return kriging_inpaint(p, m, policy, opt.kriging);
        case Method::Rbf: return rbf_inpaint(p, m, policy, opt.rbf);
        case Method::Hdmr: return hdmr_inpaint(p, m);
    }
    throw std::logic_error("inpaint_plane: unknown method");
}

std::string format_metric(double v) {
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.6f", v);
    return buf;
}

double parse_metric(const std::string& s) {
    if (s == "inf") return std::numeric_limits<double>::infinity();
    if (s == "-inf") return -std::numeric_limits<double>::infinity();
    return std::stod(s);
}

}  // namespace

ScoreRecord run_case(const Image& original, const BenchCase& bench_case,
                     const MethodOptions& opt) {
    const auto attach = [&](const std::string& what) {
        return "case " + bench_case.image_id + "/" + bench_case.corruption_id +
               "/" + method_name(bench_case.method) + ": " + what;
    };
    try {
        const auto t0 = std::chrono::steady_clock::now();
        CorruptionSpec spec = bench_case.corruption;
        spec.seed = bench_case.seed;
        const PixelMask mask = gen_mask(spec, original.width, original.height);
        const std::size_t unknown = mask.count_unknown();
        if (unknown >= static_cast<std::size_t>(original.width) * original.height)
            throw std::runtime_error("mask leaves no known pixels");
        const Image corrupted = apply_corruption(original, mask, spec);
        const auto planes = split_channels(corrupted);
        std::vector<Plane> filled;
        filled.reserve(planes.size());
        for (const auto& p : planes)
            filled.push_back(
                inpaint_plane(bench_case.method, p, mask, bench_case.policy, opt));
        const Image result = merge_channels(filled);
        ScoreRecord rec;
        rec.bench_case = bench_case;
        rec.scores = score_images(original, result);
        rec.wall_time_s =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
                .count();
        return rec;
    } catch (const std::exception& e) {
        throw std::runtime_error(attach(e.what()));
    }
}

BenchmarkReport run_suite(const std::vector<SuiteImage>& images,
                          const std::vector<std::string>& corruption_presets,
                          const std::vector<Method>& methods,
                          std::uint64_t suite_seed, const MethodOptions& opt,
                          int tile_size, int min_known) {
    if (images.empty() || corruption_presets.empty() || methods.empty())
        throw std::invalid_argument("run_suite: empty input list");
    BenchmarkReport report;
    for (const auto& img : images)
        for (const auto& preset : corruption_presets) {
            CorruptionSpec spec = corruption_preset(preset, 0);
            char tag[160];
            std::snprintf(tag, sizeof(tag), "%s|%s|%.4f", img.id.c_str(),
                          corruption_kind_name(spec.kind), spec.density);
            const std::uint64_t case_seed = derive_seed(suite_seed, tag);
            for (Method method : methods) {
                BenchCase c;
                c.image_id = img.id;
                c.corruption_id = preset;
                c.corruption = spec;
                c.method = method;
                c.policy = default_policy(spec);
                if (tile_size > 0) c.policy.tile_w = c.policy.tile_h = tile_size;
                if (min_known > 0) c.policy.min_known = min_known;
                c.seed = case_seed;
                try {
                    report.rows.push_back(run_case(img.image, c, opt));
                } catch (const std::exception& e) {
                    ScoreRecord rec;
                    rec.bench_case = c;
                    rec.error = e.what();
                    report.rows.push_back(std::move(rec));
                }
            }
        }
    return report;
}

std::vector<std::array<bool, 3>> mark_best(const BenchmarkReport& report) {
    std::vector<std::array<bool, 3>> flags(report.rows.size(),
                                           {false, false, false});
    std::map<std::pair<std::string, std::string>, std::vector<std::size_t>> groups;
    for (std::size_t i = 0; i < report.rows.size(); ++i) {
        const auto& r = report.rows[i];
        if (!r.error.empty()) continue;
        groups[{r.bench_case.image_id, r.bench_case.corruption_id}].push_back(i);
    }
    for (const auto& [key, idx] : groups) {
        double best_psnr = -1, best_ssim = -1,
               best_mse = std::numeric_limits<double>::infinity();
        for (auto i : idx) {
            best_psnr = std::max(best_psnr, report.rows[i].scores.psnr);
            best_ssim = std::max(best_ssim, report.rows[i].scores.ssim);
            best_mse = std::min(best_mse, report.rows[i].scores.mse);
        }
        for (auto i : idx) {
            flags[i][0] = report.rows[i].scores.psnr == best_psnr;
            flags[i][1] = report.rows[i].scores.ssim == best_ssim;
            flags[i][2] = report.rows[i].scores.mse == best_mse;
        }
    }
    return flags;
}

std::string report_to_csv(const BenchmarkReport& report, bool with_timing) {
    std::string out = "image,corruption,method,psnr,ssim,mse,wall_time_s,error\n";
    for (const auto& r : report.rows) {
        out += r.bench_case.image_id + "," + r.bench_case.corruption_id + "," +
               method_name(r.bench_case.method) + ",";
        if (r.error.empty()) {
            out += format_metric(r.scores.psnr) + "," +
                   format_metric(r.scores.ssim) + "," +
                   format_metric(r.scores.mse) + ",";
            out += format_metric(with_timing ? r.wall_time_s : 0.0) + ",";
        } else {
            out += ",,,,";
        }
        std::string err = r.error;
        std::replace(err.begin(), err.end(), ',', ';');
        std::replace(err.begin(), err.end(), '\n', ' ');
        out += err + "\n";
    }
    return out;
}

BenchmarkReport report_from_csv(const std::string& csv_text) {
    BenchmarkReport report;
    std::istringstream in(csv_text);
    std::string line;
    if (!std::getline(in, line) ||
        line != "image,corruption,method,psnr,ssim,mse,wall_time_s,error")
        throw std::runtime_error("report_from_csv: bad header");
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::vector<std::string> fields;
        std::size_t pos = 0;
        for (int i = 0; i < 7; ++i) {
            const auto comma = line.find(',', pos);
            if (comma == std::string::npos)
                throw std::runtime_error("report_from_csv: short row");
            fields.push_back(line.substr(pos, comma - pos));
            pos = comma + 1;
        }
        fields.push_back(line.substr(pos));
        ScoreRecord rec;
        rec.bench_case.image_id = fields[0];
        rec.bench_case.corruption_id = fields[1];
        rec.bench_case.method = method_from_name(fields[2]);
        rec.error = fields[7];
        if (rec.error.empty()) {
            rec.scores.psnr = parse_metric(fields[3]);
            rec.scores.ssim = parse_metric(fields[4]);
            rec.scores.mse = parse_metric(fields[5]);
            rec.wall_time_s = parse_metric(fields[6]);
        }
        report.rows.push_back(std::move(rec));
    }
    return report;
}

std::string report_to_markdown(const BenchmarkReport& report) {
    const auto flags = mark_best(report);
    std::ostringstream out;
    out << "| image | corruption | method | PSNR (dB) | SSIM | MSE |\n";
    out << "|---|---|---|---|---|---|\n";
    for (std::size_t i = 0; i < report.rows.size(); ++i) {
        const auto& r = report.rows[i];
        out << "| " << r.bench_case.image_id << " | "
            << r.bench_case.corruption_id << " | "
            << method_name(r.bench_case.method) << " | ";
        if (!r.error.empty()) {
            out << "error | error | " << r.error << " |\n";
            continue;
        }
        auto cell = [&](double v, bool best) {
            return best ? "**" + format_metric(v) + "**" : format_metric(v);
        };
        out << cell(r.scores.psnr, flags[i][0]) << " | "
            << cell(r.scores.ssim, flags[i][1]) << " | "
            << cell(r.scores.mse, flags[i][2]) << " |\n";
    }
    // Per-row percent spreads across methods (the bar-chart data).
    std::map<std::pair<std::string, std::string>,
             std::pair<std::vector<double>, std::vector<double>>> groups;
    for (const auto& r : report.rows) {
        if (!r.error.empty()) continue;
        auto& g = groups[{r.bench_case.image_id, r.bench_case.corruption_id}];
        if (std::isfinite(r.scores.psnr)) g.first.push_back(r.scores.psnr);
        g.second.push_back(r.scores.ssim);
    }
    out << "\n| image | corruption | PSNR spread % | SSIM spread % |\n";
    out << "|---|---|---|---|\n";
    for (const auto& [key, g] : groups) {
        out << "| " << key.first << " | " << key.second << " | ";
        if (g.first.size() >= 2)
            out << format_metric(percent_spread(g.first));
        else
            out << "n/a";
        out << " | ";
        if (g.second.size() >= 2)
            out << format_metric(percent_spread(g.second));
        else
            out << "n/a";
        out << " |\n";
    }
    return out.str();
}

BenchConfig parse_bench_config(const std::string& text) {
    BenchConfig cfg;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        const auto eq = line.find('=');
        if (eq == std::string::npos) {
            bool blank = true;
            for (char c : line) blank &= std::isspace(static_cast<unsigned char>(c));
            if (blank) continue;
            throw std::runtime_error("config line " + std::to_string(lineno) +
                                     ": expected key = value");
        }
        auto trim = [](std::string s) {
            const auto b = s.find_first_not_of(" \t\r");
            const auto e = s.find_last_not_of(" \t\r");
            return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
        };
        const std::string key = trim(line.substr(0, eq));
        const std::string val = trim(line.substr(eq + 1));
        if (key == "image") {
            // "image = <id> <path>"
            const auto sp = val.find_first_of(" \t");
            if (sp == std::string::npos)
                throw std::runtime_error("config: image needs '<id> <path>'");
            cfg.images.emplace_back(trim(val.substr(0, sp)), trim(val.substr(sp)));
        } else if (key == "corruption") {
            cfg.corruptions.push_back(val);
        } else if (key == "method") {
            cfg.methods.push_back(method_from_name(val));
        } else if (key == "seed") {
            cfg.seed = std::stoull(val);
        } else if (key == "timing") {
            cfg.timing = (val == "on" || val == "true" || val == "1");
        } else if (key == "tile_size") {
            cfg.tile_size = std::stoi(val);
        } else if (key == "min_known") {
            cfg.min_known = std::stoi(val);
        } else if (key == "rbf.kernel") {
            if (val == "thinplate") cfg.options.rbf.kernel = RbfKernel::ThinPlate;
            else if (val == "gaussian") cfg.options.rbf.kernel = RbfKernel::Gaussian;
            else if (val == "multiquadric")
                cfg.options.rbf.kernel = RbfKernel::Multiquadric;
            else throw std::runtime_error("config: unknown rbf.kernel " + val);
        } else if (key == "rbf.epsilon") {
            cfg.options.rbf.epsilon = std::stod(val);
        } else if (key == "kriging.family") {
            if (val == "spherical")
                cfg.options.kriging.family = VariogramFamily::Spherical;
            else if (val == "exponential")
                cfg.options.kriging.family = VariogramFamily::Exponential;
            else if (val == "gaussian")
                cfg.options.kriging.family = VariogramFamily::Gaussian;
            else throw std::runtime_error("config: unknown kriging.family " + val);
        } else if (key == "cubic.neighbors") {
            cfg.options.cubic.neighbors = std::stoi(val);
        } else {
            throw std::runtime_error("config: unknown key " + key);
        }
    }
    return cfg;
}

BenchConfig load_bench_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open config: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_bench_config(ss.str());
}

}  // namespace inpaint
