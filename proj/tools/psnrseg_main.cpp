#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "psnrseg/harness.hpp"
#include "psnrseg/noise.hpp"

namespace {

using namespace psnrseg;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitDataset = 2;
constexpr int kExitNumeric = 3;

const std::map<std::string, PsnrVariant> kVariants{
    {"standard", PsnrVariant::Standard},
    {"as-written", PsnrVariant::AsWritten},
};
const std::map<std::string, Alternative> kAlternatives{
    {"less", Alternative::Less},
    {"greater", Alternative::Greater},
    {"two-sided", Alternative::TwoSided},
};

void print_test_report(const char* label, const TestReport& r) {
    std::printf("%s: %s statistic=%.6g df=%.6g", label, to_string(r.test_name),
                r.statistic, r.df1);
    if (r.has_df2())
        std::printf("/%.6g", r.df2);
    std::printf(" p=%.6g ci=[%.7g, %.7g] -> %s\n", r.p_value, r.ci_low, r.ci_high,
                r.reject_null ? "reject null" : "keep null");
}

void print_summary(const char* label, const SampleSummary& s) {
    std::printf("%s: n=%zu", label, s.n);
    if (s.n >= 1)
        std::printf(" mean=%.6f", s.mean);
    if (s.n >= 2)
        std::printf(" var=%.6f", s.variance);
    std::printf(" excluded_inf=%zu\n", s.excluded_infinite);
}

void print_analysis(const Analysis& a) {
    print_summary("P ", a.p_summary);
    print_summary("P'", a.p_prime_summary);
    if (a.f_report)
        print_test_report("variance gate", *a.f_report);
    if (a.mean_report)
        print_test_report("mean test", *a.mean_report);
    std::printf("verdict: %s (%s)\n", to_string(a.verdict), a.verdict_reason.c_str());
}

int run_command(int argc, char** argv) {
    CLI::App app{"PSNR-as-segmentation-quality experiment toolkit"};
    app.require_subcommand(1);

    ExperimentConfig cfg;
    std::string variant = "standard";
    std::string alternative = "less";

    auto* run = app.add_subcommand("run", "run the full experiment over a dataset");
    run->add_option("--dataset", cfg.dataset_root,
                    "dataset root containing images/ and groundtruth/")
        ->required();
    run->add_option("--density", cfg.noise_density, "salt-and-pepper density")
        ->check(CLI::Range(0.0, 1.0))
        ->capture_default_str();
    run->add_option("--seed", cfg.seed, "experiment seed")->capture_default_str();
    run->add_option("--alpha", cfg.alpha, "significance level")
        ->check(CLI::Range(std::nextafter(0.0, 1.0), std::nextafter(1.0, 0.0)))
        ->capture_default_str();
    run->add_option("--variant", variant, "psnr formula")
        ->check(CLI::IsMember(kVariants))
        ->capture_default_str();
    run->add_option("--threshold", cfg.binarize_threshold,
                    "binarization threshold for the filled mask")
        ->check(CLI::Range(0, 255))
        ->capture_default_str();
    run->add_option("--alternative", alternative, "mean-test alternative")
        ->check(CLI::IsMember(kAlternatives))
        ->capture_default_str();
    run->add_option("--out", cfg.output_dir, "output directory for reports")
        ->required();

    std::string img_path, mask_path;
    auto* psnr_cmd = app.add_subcommand("psnr", "psnr between an image and a mask");
    psnr_cmd->add_option("image", img_path, "source image (PNM)")->required();
    psnr_cmd->add_option("mask", mask_path, "comparison image (PNM)")->required();
    psnr_cmd->add_option("--variant", variant, "psnr formula")
        ->check(CLI::IsMember(kVariants))
        ->capture_default_str();

    std::string gt_path, out_path;
    FillConfig fill;
    auto* fill_cmd =
        app.add_subcommand("fill", "fill closed ground-truth contours with white");
    fill_cmd->add_option("groundtruth", gt_path, "contour image (PNM)")->required();
    fill_cmd->add_option("output", out_path, "output PGM (P5)")->required();
    fill_cmd->add_option("--contour-threshold", fill.contour_threshold,
                         "contour classification threshold")
        ->check(CLI::Range(0, 255))
        ->capture_default_str();
    fill_cmd->add_flag("--invert", fill.invert_contours,
                       "contour pixels lie below the threshold");

    NoiseConfig noise;
    std::string noise_in, noise_out;
    auto* noise_cmd =
        app.add_subcommand("noise", "salt-and-pepper degradation of a binary mask");
    noise_cmd->add_option("mask", noise_in, "binary mask (PNM, values 0/255)")
        ->required();
    noise_cmd->add_option("output", noise_out, "output PGM (P5)")->required();
    noise_cmd->add_option("--density", noise.density, "noise density")
        ->check(CLI::Range(0.0, 1.0))
        ->required();
    noise_cmd->add_option("--seed", noise.seed, "noise seed")->required();

    std::string csv_path;
    double alpha = 0.05;
    auto* stats_cmd =
        app.add_subcommand("stats", "re-run the hypothesis tests from a samples.csv");
    stats_cmd->add_option("--csv", csv_path, "samples.csv produced by `run`")
        ->required();
    stats_cmd->add_option("--alpha", alpha, "significance level")
        ->check(CLI::Range(std::nextafter(0.0, 1.0), std::nextafter(1.0, 0.0)))
        ->capture_default_str();
    stats_cmd->add_option("--alternative", alternative, "mean-test alternative")
        ->check(CLI::IsMember(kAlternatives))
        ->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    cfg.psnr_variant = kVariants.at(variant);
    cfg.alternative = kAlternatives.at(alternative);

    if (run->parsed()) {
        const ExperimentReport report = run_experiment(cfg);
        for (const auto& warning : report.warnings)
            std::fprintf(stderr, "warning: %s\n", warning.c_str());
        std::printf("pairs processed: %zu\n", report.per_image.size());
        print_analysis(report.analysis);
        std::printf("reports written to %s\n", cfg.output_dir.string().c_str());
    } else if (psnr_cmd->parsed()) {
        const double v =
            psnr(read_pnm_file(img_path), read_pnm_file(mask_path), cfg.psnr_variant);
        if (std::isinf(v))
            std::printf("inf\n");
        else
            std::printf("%.6f\n", v);
    } else if (fill_cmd->parsed()) {
        write_pnm_file(fill_ground_truth(read_pnm_file(gt_path), fill),
                       PnmFormat::P5, out_path);
    } else if (noise_cmd->parsed()) {
        const BinaryMask mask = as_binary(read_pnm_file(noise_in));
        write_pnm_file(salt_pepper(mask, noise).image(), PnmFormat::P5, noise_out);
    } else if (stats_cmd->parsed()) {
        std::ifstream in(csv_path, std::ios::binary);
        if (!in)
            throw DatasetError("cannot open " + csv_path);
        std::stringstream buffer;
        buffer << in.rdbuf();
        const auto rows = parse_samples_csv(buffer.str());
        std::vector<double> p, pp;
        for (const auto& row : rows) {
            p.push_back(row.psnr_clean);
            pp.push_back(row.psnr_noisy);
        }
        print_analysis(analyze_samples(p, pp, alpha, kAlternatives.at(alternative)));
    }
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    try {
        return run_command(argc, argv);
    } catch (const NumericError& e) {
        std::fprintf(stderr, "numeric error: %s\n", e.what());
        return kExitNumeric;
    } catch (const PnmError& e) {
        std::fprintf(stderr, "input error: %s\n", e.what());
        return kExitDataset;
    } catch (const DatasetError& e) {
        std::fprintf(stderr, "dataset error: %s\n", e.what());
        return kExitDataset;
    } catch (const std::filesystem::filesystem_error& e) {
        std::fprintf(stderr, "dataset error: %s\n", e.what());
        return kExitDataset;
    } catch (const std::invalid_argument& e) {
        std::fprintf(stderr, "usage error: %s\n", e.what());
        return kExitUsage;
    }
}
