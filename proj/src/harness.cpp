#include "psnrseg/harness.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <map>
#include <sstream>

#include <json.hpp>

#include "psnrseg/noise.hpp"

namespace psnrseg {

namespace fs = std::filesystem;
using ordered_json = nlohmann::ordered_json;

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

bool pnm_extension(const fs::path& p) {
    const auto ext = p.extension().string();
    return ext == ".pgm" || ext == ".ppm" || ext == ".pnm";
}

std::map<std::string, fs::path> list_pnm_stems(const fs::path& dir,
                                               std::vector<std::string>* warnings) {
    std::map<std::string, fs::path> stems;
    for (const auto& entry : fs::directory_iterator(dir)) {
        if (!entry.is_regular_file() || !pnm_extension(entry.path()))
            continue;
        const std::string stem = entry.path().stem().string();
        auto [it, inserted] = stems.emplace(stem, entry.path());
        if (!inserted && warnings)
            warnings->push_back("ambiguous stem '" + stem + "': keeping " +
                                it->second.filename().string() + ", ignoring " +
                                entry.path().filename().string());
    }
    return stems;
}

std::string summarize_listing(const std::map<std::string, fs::path>& stems) {
    std::string out = "[" + std::to_string(stems.size()) + " file(s)";
    std::size_t shown = 0;
    for (const auto& [stem, path] : stems) {
        out += shown == 0 ? ": " : ", ";
        out += path.filename().string();
        if (++shown == 8 && stems.size() > 8) {
            out += ", ...";
            break;
        }
    }
    return out + "]";
}

std::string format_psnr(double v) {
    if (std::isinf(v))
        return v > 0 ? "inf" : "-inf";
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.6f", v);
    return buf;
}

// JSON has no infinities; follow the CSV convention and spell them out.
ordered_json json_real(double v) {
    if (std::isnan(v)) return nullptr;
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    return v;
}

ordered_json summary_json(const SampleSummary& s) {
    ordered_json j;
    j["n"] = s.n;
    j["mean"] = s.n >= 1 ? json_real(s.mean) : ordered_json(nullptr);
    j["variance"] = s.n >= 2 ? json_real(s.variance) : ordered_json(nullptr);
    j["excluded_infinite_count"] = s.excluded_infinite;
    return j;
}

ordered_json test_report_json(const std::optional<TestReport>& maybe) {
    if (!maybe)
        return nullptr;
    const TestReport& r = *maybe;
    ordered_json j;
    j["test_name"] = to_string(r.test_name);
    j["statistic"] = json_real(r.statistic);
    j["df1"] = json_real(r.df1);
    j["df2"] = r.has_df2() ? json_real(r.df2) : ordered_json(nullptr);
    j["p_value"] = json_real(r.p_value);
    j["ci_low"] = json_real(r.ci_low);
    j["ci_high"] = json_real(r.ci_high);
    j["alpha"] = json_real(r.alpha);
    j["mean_x"] = json_real(r.mean_x);
    j["mean_y"] = json_real(r.mean_y);
    j["alternative"] = to_string(r.alternative);
    j["reject_null"] = r.reject_null;
    return j;
}

SampleSummary summarize(const std::vector<double>& finite, std::size_t excluded) {
    SampleSummary s;
    s.n = finite.size();
    s.excluded_infinite = excluded;
    if (finite.size() >= 2) {
        SampleSet set(finite);
        s.mean = set.mean();
        s.variance = set.variance();
    } else if (finite.size() == 1) {
        s.mean = finite[0];
    }
    return s;
}

void write_text_file(const fs::path& path, const std::string& body) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out)
        throw DatasetError("cannot write " + path.string());
    out.write(body.data(), static_cast<std::streamsize>(body.size()));
    if (!out)
        throw DatasetError("write failed for " + path.string());
}

} // namespace

const char* to_string(Verdict v) {
    switch (v) {
    case Verdict::MetricConsistent: return "MetricConsistent";
    case Verdict::MetricParadoxical: return "MetricParadoxical";
    case Verdict::Inconclusive: return "Inconclusive";
    }
    return "?";
}

const char* to_string(TestName t) {
    switch (t) {
    case TestName::FisherF: return "FisherF";
    case TestName::StudentT: return "StudentT";
    case TestName::WelchT: return "WelchT";
    }
    return "?";
}

const char* to_string(Alternative a) {
    switch (a) {
    case Alternative::TwoSided: return "TwoSided";
    case Alternative::Less: return "Less";
    case Alternative::Greater: return "Greater";
    }
    return "?";
}

const char* to_string(PsnrVariant v) {
    return v == PsnrVariant::Standard ? "Standard" : "AsWritten";
}

std::uint64_t fnv1a64(std::string_view s) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (const char c : s) {
        h ^= static_cast<unsigned char>(c);
        h *= 0x100000001b3ULL;
    }
    return h;
}

std::vector<DatasetEntry> scan_dataset(const fs::path& root,
                                       std::vector<std::string>* warnings) {
    const fs::path images_dir = root / "images";
    const fs::path gt_dir = root / "groundtruth";
    if (!fs::is_directory(images_dir) || !fs::is_directory(gt_dir))
        throw DatasetError("dataset root " + root.string() +
                           " must contain images/ and groundtruth/ directories");

    const auto images = list_pnm_stems(images_dir, warnings);
    const auto gts = list_pnm_stems(gt_dir, warnings);

    std::vector<DatasetEntry> entries;
    for (const auto& [stem, img_path] : images) {
        const auto gt = gts.find(stem);
        if (gt == gts.end()) {
            if (warnings)
                warnings->push_back("no ground truth for image '" + stem + "'");
            continue;
        }
        entries.push_back({stem, img_path, gt->second});
    }
    for (const auto& [stem, gt_path] : gts) {
        if (!images.contains(stem) && warnings)
            warnings->push_back("no image for ground truth '" + stem + "'");
    }

    if (entries.empty())
        throw DatasetError("no image/ground-truth pairs: " + images_dir.string() +
                           " " + summarize_listing(images) + ", " + gt_dir.string() +
                           " " + summarize_listing(gts));

    // std::map iteration already yields lexicographic stem order.
    return entries;
}

std::pair<double, double> process_entry(const DatasetEntry& entry,
                                        const ExperimentConfig& cfg) {
    const GrayImage source = read_pnm_file(entry.image_path);
    const GrayImage gt = read_pnm_file(entry.gt_path);
    if (!source.same_shape(gt))
        throw DatasetError("dimension mismatch for '" + entry.id + "': image " +
                           std::to_string(source.width) + "x" +
                           std::to_string(source.height) + " vs ground truth " +
                           std::to_string(gt.width) + "x" + std::to_string(gt.height));

    const BinaryMask ideal =
        binarize(fill_ground_truth(gt, cfg.fill), cfg.binarize_threshold);
    const NoiseConfig noise{cfg.noise_density, cfg.seed ^ fnv1a64(entry.id)};
    const BinaryMask degraded = salt_pepper(ideal, noise);

    return {psnr(source, ideal.image(), cfg.psnr_variant),
            psnr(source, degraded.image(), cfg.psnr_variant)};
}

Analysis analyze_samples(const std::vector<double>& p,
                         const std::vector<double>& p_prime, double alpha,
                         Alternative alternative) {
    Analysis a;

    std::vector<double> px, py;
    std::size_t ex = 0, ey = 0;
    for (const double v : p)
        std::isfinite(v) ? px.push_back(v) : static_cast<void>(++ex);
    for (const double v : p_prime)
        std::isfinite(v) ? py.push_back(v) : static_cast<void>(++ey);

    a.p_summary = summarize(px, ex);
    a.p_prime_summary = summarize(py, ey);

    if (px.size() < 2 || py.size() < 2) {
        a.verdict_reason = "fewer than 2 finite samples in " +
                           std::string(px.size() < 2 ? "P" : "P'");
        return a;
    }

    const SampleSet sp(px);
    const SampleSet spp(py);

    try {
        a.f_report = f_test(sp, spp, alpha);
    } catch (const NumericError& e) {
        a.verdict_reason = std::string("variance test failed: ") + e.what();
        return a;
    }

    // The decision gate: homogeneous variances admit Student, otherwise Welch.
    a.chosen_mean_test =
        a.f_report->reject_null ? TestName::WelchT : TestName::StudentT;
    try {
        a.mean_report = *a.chosen_mean_test == TestName::WelchT
                            ? welch_t_test(sp, spp, alpha, alternative)
                            : student_t_test(sp, spp, alpha, alternative);
    } catch (const NumericError& e) {
        a.verdict_reason = std::string("mean test failed: ") + e.what();
        return a;
    }

    try {
        a.density_p = kde(sp);
    } catch (const NumericError&) {
    }
    try {
        a.density_p_prime = kde(spp);
    } catch (const NumericError&) {
    }

    // MetricParadoxical exactly when the reported test rejects with the
    // degraded set on top. A Less alternative can never reject in the
    // consistent direction, so that verdict falls back to the complementary
    // one-sided probability.
    const TestReport& m = *a.mean_report;
    const bool p_prime_higher = m.mean_y > m.mean_x;
    if (m.reject_null && p_prime_higher) {
        a.verdict = Verdict::MetricParadoxical;
        a.verdict_reason = "degraded masks scored significantly higher PSNR "
                           "(mean P' > mean P)";
    } else if ((m.reject_null && m.mean_x > m.mean_y) ||
               (alternative == Alternative::Less && 1.0 - m.p_value < alpha &&
                m.mean_x > m.mean_y)) {
        a.verdict = Verdict::MetricConsistent;
        a.verdict_reason = "ideal masks scored significantly higher PSNR "
                           "(mean P > mean P')";
    } else {
        a.verdict = Verdict::Inconclusive;
        a.verdict_reason = "no significant difference between P and P' at alpha=" +
                           std::to_string(alpha);
    }
    return a;
}

ExperimentReport run_experiment(const ExperimentConfig& cfg) {
    ExperimentReport report;
    auto entries = scan_dataset(cfg.dataset_root, &report.warnings);
    if (entries.size() < 2)
        throw DatasetError("experiment needs at least 2 dataset pairs, found " +
                           std::to_string(entries.size()));

    for (const auto& entry : entries) {
        try {
            const auto [clean, noisy] = process_entry(entry, cfg);
            report.per_image.push_back({entry.id, clean, noisy});
        } catch (const std::runtime_error& e) {
            report.warnings.push_back("skipped '" + entry.id + "': " + e.what());
        }
    }

    std::vector<double> p, pp;
    p.reserve(report.per_image.size());
    pp.reserve(report.per_image.size());
    for (const auto& row : report.per_image) {
        p.push_back(row.psnr_clean);
        pp.push_back(row.psnr_noisy);
    }
    report.analysis = analyze_samples(p, pp, cfg.alpha, cfg.alternative);

    if (!cfg.output_dir.empty())
        write_reports(report, cfg, cfg.output_dir);
    return report;
}

std::string format_samples_csv(const std::vector<PerImageResult>& rows) {
    std::string out = "id,psnr_clean,psnr_noisy\n";
    for (const auto& row : rows)
        out += row.id + "," + format_psnr(row.psnr_clean) + "," +
               format_psnr(row.psnr_noisy) + "\n";
    return out;
}

std::vector<PerImageResult> parse_samples_csv(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    if (!std::getline(in, line) || line != "id,psnr_clean,psnr_noisy")
        throw DatasetError("samples csv: missing or unexpected header");

    std::vector<PerImageResult> rows;
    std::size_t lineno = 1;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty())
            continue;
        const auto c1 = line.find(',');
        const auto c2 = line.find(',', c1 == std::string::npos ? c1 : c1 + 1);
        if (c1 == std::string::npos || c2 == std::string::npos)
            throw DatasetError("samples csv: bad row at line " + std::to_string(lineno));
        auto number = [&](std::string field) -> double {
            if (field == "inf") return kInf;
            if (field == "-inf") return -kInf;
            std::size_t used = 0;
            const double v = std::stod(field, &used);
            if (used != field.size())
                throw DatasetError("samples csv: bad number '" + field +
                                   "' at line " + std::to_string(lineno));
            return v;
        };
        rows.push_back({line.substr(0, c1), number(line.substr(c1 + 1, c2 - c1 - 1)),
                        number(line.substr(c2 + 1))});
    }
    return rows;
}

std::string format_report_json(const ExperimentReport& report,
                               const ExperimentConfig& cfg) {
    ordered_json j;
    ordered_json config;
    config["dataset_root"] = cfg.dataset_root.string();
    config["noise_density"] = cfg.noise_density;
    config["seed"] = cfg.seed;
    config["psnr_variant"] = to_string(cfg.psnr_variant);
    config["alpha"] = cfg.alpha;
    config["binarize_threshold"] = cfg.binarize_threshold;
    config["fill"] = {{"contour_threshold", cfg.fill.contour_threshold},
                      {"invert_contours", cfg.fill.invert_contours},
                      {"binarize_threshold", cfg.fill.binarize_threshold}};
    config["alternative"] = to_string(cfg.alternative);
    config["output_dir"] = cfg.output_dir.string();

    j["config"] = std::move(config);
    j["p_summary"] = summary_json(report.analysis.p_summary);
    j["p_prime_summary"] = summary_json(report.analysis.p_prime_summary);
    j["f_test"] = test_report_json(report.analysis.f_report);
    j["mean_test"] = test_report_json(report.analysis.mean_report);
    j["verdict"] = to_string(report.analysis.verdict);
    return j.dump(2) + "\n";
}

std::string format_density_tsv(const DensityCurve& curve) {
    std::string out;
    char buf[80];
    for (std::size_t i = 0; i < curve.grid.size(); ++i) {
        std::snprintf(buf, sizeof(buf), "%.9g\t%.9g\n", curve.grid[i],
                      curve.density[i]);
        out += buf;
    }
    return out;
}

void write_reports(const ExperimentReport& report, const ExperimentConfig& cfg,
                   const fs::path& dir) {
    std::error_code ec;
    fs::create_directories(dir, ec);
    if (ec)
        throw DatasetError("cannot create output directory " + dir.string() + ": " +
                           ec.message());

    write_text_file(dir / "samples.csv", format_samples_csv(report.per_image));
    write_text_file(dir / "report.json", format_report_json(report, cfg));
    const auto& dp = report.analysis.density_p;
    const auto& dpp = report.analysis.density_p_prime;
    write_text_file(dir / "density_p.tsv",
                    dp ? format_density_tsv(*dp) : std::string());
    write_text_file(dir / "density_pprime.tsv",
                    dpp ? format_density_tsv(*dpp) : std::string());
}

} // namespace psnrseg
