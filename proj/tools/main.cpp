#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "dctfuse/bench.hpp"
#include "dctfuse/blur.hpp"
#include "dctfuse/fusion.hpp"
#include "dctfuse/image_io.hpp"
#include "dctfuse/selfcheck.hpp"

namespace fs = std::filesystem;

namespace {

const std::map<std::string, dctfuse::FusionMetric> kMetricNames{
    {"eol", dctfuse::FusionMetric::kEol},
    {"vol", dctfuse::FusionMetric::kVol},
    {"variance", dctfuse::FusionMetric::kVariance},
    {"average", dctfuse::FusionMetric::kAverage},
};

const std::map<std::string, dctfuse::TiePolicy> kTieNames{
    {"average", dctfuse::TiePolicy::kAverage},
    {"first", dctfuse::TiePolicy::kFirst},
};

const std::map<std::string, dctfuse::BlurSide> kSideNames{
    {"left", dctfuse::BlurSide::kLeft},
    {"right", dctfuse::BlurSide::kRight},
};

// Decision map rendered as gray levels: source index k of N maps to
// round(255*k/(N-1)) (first source black, last white), ties to 128.
dctfuse::GrayRaster render_map(const dctfuse::DecisionMap& map, int sources) {
    dctfuse::GrayRaster img(map.cols(), map.rows());
    for (int r = 0; r < map.rows(); ++r) {
        for (int c = 0; c < map.cols(); ++c) {
            const auto label = map.at(r, c);
            if (label == dctfuse::DecisionMap::kTie) {
                img.at(c, r) = 128;
            } else {
                img.at(c, r) =
                    dctfuse::quantize_sample(255.0 * label / std::max(1, sources - 1));
            }
        }
    }
    return img;
}

int run_fuse(const std::vector<std::string>& inputs, const std::string& output,
             const std::string& metric, bool cv, int cv_window, const std::string& tie,
             const std::string& map_path) {
    dctfuse::FusionConfig cfg;
    cfg.metric = kMetricNames.at(metric);
    cfg.cv_enabled = cv;
    cfg.cv_window = cv_window;
    cfg.tie_policy = kTieNames.at(tie);

    std::vector<dctfuse::GrayRaster> images;
    images.reserve(inputs.size());
    for (const std::string& path : inputs) images.push_back(dctfuse::load_image(path));

    const dctfuse::FusionResult result = dctfuse::fuse(images, cfg);
    dctfuse::save_image(result.image, output);

    if (!map_path.empty()) {
        if (result.map) {
            dctfuse::save_image(render_map(*result.map, static_cast<int>(images.size())),
                                map_path);
        } else {
            std::cerr << "warning: --method average selects no blocks; no decision map written\n";
        }
    }
    return 0;
}

int run_blurgen(const std::string& input, const std::string& output, int mask,
                const std::string& side) {
    const dctfuse::GrayRaster image = dctfuse::load_image(input);
    const dctfuse::BlurSpec spec{kSideNames.at(side), mask};
    dctfuse::save_image(dctfuse::synthetic_blur(image, spec), output);
    return 0;
}

int run_bench(const std::string& dir, const std::string& report_path) {
    std::vector<fs::path> files;
    for (const auto& entry : fs::directory_iterator(dir))
        if (entry.is_regular_file()) files.push_back(entry.path());
    std::sort(files.begin(), files.end());

    std::vector<dctfuse::GrayRaster> sources;
    for (const fs::path& p : files) {
        const std::string ext = p.extension().string();
        if (ext == ".pgm" || ext == ".ppm" || ext == ".png" || ext == ".jpg" ||
            ext == ".jpeg")
            sources.push_back(dctfuse::load_image(p.string()));
    }
    if (sources.empty()) {
        std::cerr << "error: no readable images in " << dir << "\n";
        return 1;
    }

    const auto pairs = dctfuse::make_pairs(sources);
    const auto rows = dctfuse::run_benchmark(pairs, dctfuse::benchmark_method_grid());
    const std::string csv = dctfuse::benchmark_csv(rows);

    const fs::path target(report_path);
    fs::path tmp = target;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::trunc);
        if (!out) {
            std::cerr << "error: cannot write " << report_path << "\n";
            return 1;
        }
        out << csv;
    }
    fs::rename(tmp, target);

    std::cout << "images: " << sources.size() << ", pairs: " << pairs.size() << "\n"
              << csv;
    return 0;
}

int run_selfcheck(int blocks, std::uint64_t seed, double tol) {
    const dctfuse::SelfCheckReport report =
        dctfuse::run_selfcheck({blocks, seed, tol});
    std::cout << describe(report);
    return report.passed ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Multi-focus image fusion on 8x8 DCT blocks"};
    app.require_subcommand(1);

    // fuse
    std::vector<std::string> fuse_inputs;
    std::string fuse_output, fuse_metric = "vol", fuse_tie = "average", fuse_map;
    bool fuse_cv = false;
    int fuse_cv_window = 5;
    CLI::App* fuse_cmd = app.add_subcommand("fuse", "Fuse two or more aligned images");
    fuse_cmd->add_option("inputs", fuse_inputs, "Input images (PGM/PPM/PNG/JPEG)")
        ->required()
        ->expected(2, -1);
    fuse_cmd->add_option("-o,--output", fuse_output, "Fused output (PGM)")->required();
    fuse_cmd->add_option("--method", fuse_metric, "Block selection metric")
        ->check(CLI::IsMember({"eol", "vol", "variance", "average"}))
        ->capture_default_str();
    fuse_cmd->add_flag("--cv", fuse_cv, "Apply consistency verification");
    fuse_cmd->add_option("--cv-window", fuse_cv_window, "Majority filter window (odd, >= 3)")
        ->capture_default_str();
    fuse_cmd->add_option("--tie", fuse_tie, "Tie handling for equal scores")
        ->check(CLI::IsMember({"average", "first"}))
        ->capture_default_str();
    fuse_cmd->add_option("--map", fuse_map, "Also write the decision map (PGM)");

    // blurgen
    std::string blur_input, blur_output, blur_side;
    int blur_mask = 0;
    CLI::App* blur_cmd = app.add_subcommand("blurgen", "Blur one half of an image");
    blur_cmd->add_option("input", blur_input, "Input image")->required();
    blur_cmd->add_option("--mask", blur_mask, "Averaging mask size")
        ->check(CLI::IsMember({5, 9}))
        ->required();
    blur_cmd->add_option("--side", blur_side, "Half to blur")
        ->check(CLI::IsMember({"left", "right"}))
        ->required();
    blur_cmd->add_option("-o,--output", blur_output, "Output image (PGM)")->required();

    // bench
    std::string bench_dir, bench_report;
    CLI::App* bench_cmd =
        app.add_subcommand("bench", "Half-blur benchmark over a directory of images");
    bench_cmd->add_option("--dir", bench_dir, "Directory of source images")
        ->required()
        ->check(CLI::ExistingDirectory);
    bench_cmd->add_option("--report", bench_report, "Output CSV path")->required();

    // selfcheck
    int check_blocks = 10000;
    std::uint64_t check_seed = 42;
    double check_tol = 1e-6;
    CLI::App* check_cmd =
        app.add_subcommand("selfcheck", "Verify DCT-domain identities on random blocks");
    check_cmd->add_option("--blocks", check_blocks, "Number of random blocks")
        ->capture_default_str();
    check_cmd->add_option("--seed", check_seed, "RNG seed")->capture_default_str();
    check_cmd->add_option("--tol", check_tol, "Relative tolerance for focus measures")
        ->capture_default_str();

    CLI11_PARSE(app, argc, argv);

    try {
        if (fuse_cmd->parsed())
            return run_fuse(fuse_inputs, fuse_output, fuse_metric, fuse_cv,
                            fuse_cv_window, fuse_tie, fuse_map);
        if (blur_cmd->parsed())
            return run_blurgen(blur_input, blur_output, blur_mask, blur_side);
        if (bench_cmd->parsed()) return run_bench(bench_dir, bench_report);
        if (check_cmd->parsed())
            return run_selfcheck(check_blocks, check_seed, check_tol);
    } catch (const std::exception& err) {
        std::cerr << "error: " << err.what() << "\n";
        return 1;
    }
    return 0;
}
