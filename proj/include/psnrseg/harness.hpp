#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "psnrseg/maskgen.hpp"
#include "psnrseg/metrics.hpp"
#include "psnrseg/stats.hpp"

namespace psnrseg {

struct DatasetEntry {
    std::string id; // filename stem, unique within the dataset
    std::filesystem::path image_path;
    std::filesystem::path gt_path;
};

struct ExperimentConfig {
    std::filesystem::path dataset_root;
    double noise_density = 0.5;
    std::uint64_t seed = 1;
    PsnrVariant psnr_variant = PsnrVariant::Standard;
    double alpha = 0.05;
    int binarize_threshold = 127;
    FillConfig fill;
    Alternative alternative = Alternative::Less;
    std::filesystem::path output_dir;
};

struct PerImageResult {
    std::string id;
    double psnr_clean = 0.0;
    double psnr_noisy = 0.0;
};

struct SampleSummary {
    std::size_t n = 0;
    double mean = 0.0;     // meaningful only when n >= 1
    double variance = 0.0; // meaningful only when n >= 2
    std::size_t excluded_infinite = 0;
};

enum class Verdict { MetricConsistent, MetricParadoxical, Inconclusive };

/// Statistical stage of an experiment: summaries, the F-test gate, the
/// selected mean test, density curves and the verdict. Optional members are
/// absent when the inputs were too degenerate to test.
struct Analysis {
    SampleSummary p_summary;
    SampleSummary p_prime_summary;
    std::optional<TestReport> f_report;
    std::optional<TestName> chosen_mean_test;
    std::optional<TestReport> mean_report;
    std::optional<DensityCurve> density_p;
    std::optional<DensityCurve> density_p_prime;
    Verdict verdict = Verdict::Inconclusive;
    std::string verdict_reason;
};

struct ExperimentReport {
    std::vector<PerImageResult> per_image; // sorted by id
    Analysis analysis;
    std::vector<std::string> warnings;
};

/// FNV-1a 64-bit hash; per-image noise seeds are experiment_seed ^ fnv1a64(id)
/// so scheduling order can never change results.
std::uint64_t fnv1a64(std::string_view s);

/// Pairs <root>/images/* with <root>/groundtruth/* by filename stem, sorted
/// by id. Unpaired files are reported through `warnings`; an empty pairing
/// throws DatasetError naming both directory listings.
std::vector<DatasetEntry> scan_dataset(const std::filesystem::path& root,
                                       std::vector<std::string>* warnings = nullptr);

/// One image through the pipeline: B = binarize(fill(G)), B' = salt_pepper(B),
/// returns (psnr(I,B), psnr(I,B')).
std::pair<double, double> process_entry(const DatasetEntry& entry,
                                        const ExperimentConfig& cfg);

/// The statistical tail of the experiment, reusable on raw PSNR sets (the
/// `stats` subcommand re-enters here from a samples.csv). Values may contain
/// +infinity; these are excluded with counts recorded in the summaries.
Analysis analyze_samples(const std::vector<double>& p,
                         const std::vector<double>& p_prime, double alpha,
                         Alternative alternative);

/// Full experiment over a dataset. Deterministic given the config and the
/// dataset bytes. Writes artifacts to cfg.output_dir when it is nonempty.
ExperimentReport run_experiment(const ExperimentConfig& cfg);

/// Emits samples.csv, report.json, density_p.tsv and density_pprime.tsv.
void write_reports(const ExperimentReport& report, const ExperimentConfig& cfg,
                   const std::filesystem::path& dir);

/// samples.csv body: header `id,psnr_clean,psnr_noisy`, 6-decimal floats,
/// infinities spelled `inf`.
std::string format_samples_csv(const std::vector<PerImageResult>& rows);
std::vector<PerImageResult> parse_samples_csv(const std::string& text);

/// report.json body (keys: config, p_summary, p_prime_summary, f_test,
/// mean_test, verdict). Infinities serialize as the strings "inf"/"-inf".
std::string format_report_json(const ExperimentReport& report,
                               const ExperimentConfig& cfg);

/// Two tab-separated columns x<TAB>density, one row per grid point.
std::string format_density_tsv(const DensityCurve& curve);

const char* to_string(Verdict v);
const char* to_string(TestName t);
const char* to_string(Alternative a);
const char* to_string(PsnrVariant v);

} // namespace psnrseg
