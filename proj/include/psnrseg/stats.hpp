#pragma once

#include <cstddef>
#include <vector>

#include "psnrseg/errors.hpp"

namespace psnrseg {

/// Ordered list of finite reals, n >= 2. Infinite measurements must be
/// filtered out (and counted) before construction.
class SampleSet {
public:
    explicit SampleSet(std::vector<double> values);

    std::size_t size() const { return values_.size(); }
    const std::vector<double>& values() const { return values_; }
    double mean() const { return mean_; }
    /// Unbiased sample variance (n-1 denominator), corrected two-pass.
    double variance() const { return variance_; }
    double min() const { return min_; }
    double max() const { return max_; }

private:
    std::vector<double> values_;
    double mean_ = 0.0;
    double variance_ = 0.0;
    double min_ = 0.0;
    double max_ = 0.0;
};

enum class TestName { FisherF, StudentT, WelchT };
enum class Alternative { TwoSided, Less, Greater };

struct TestReport {
    TestName test_name = TestName::FisherF;
    double statistic = 0.0;
    double df1 = 0.0;
    double df2 = -1.0; // < 0 means absent (one-df tests)
    double p_value = 1.0;
    double ci_low = 0.0;  // may be -infinity
    double ci_high = 0.0; // may be +infinity
    double alpha = 0.05;
    double mean_x = 0.0;
    double mean_y = 0.0;
    Alternative alternative = Alternative::TwoSided;
    bool reject_null = false;

    bool has_df2() const { return df2 >= 0.0; }
};

/// Fisher's variance-ratio test, F = var(x)/var(y), two-sided p by doubling
/// the smaller tail. Confidence interval follows R's var.test:
/// [F/qf(1-alpha/2, d1, d2), F/qf(alpha/2, d1, d2)].
TestReport f_test(const SampleSet& x, const SampleSet& y, double alpha);

/// Welch's two-sample t-test with Welch-Satterthwaite degrees of freedom.
/// Alternative Less tests mean(x) < mean(y); its interval is
/// (-inf, diff + qt(1-alpha, df)*se], matching R's t.test.
TestReport welch_t_test(const SampleSet& x, const SampleSet& y, double alpha,
                        Alternative alternative = Alternative::TwoSided);

/// Pooled-variance two-sample t-test, df = n_x + n_y - 2.
TestReport student_t_test(const SampleSet& x, const SampleSet& y, double alpha,
                          Alternative alternative = Alternative::TwoSided);

inline constexpr int kDensityGridSize = 512;

struct DensityCurve {
    std::vector<double> grid;    // 512 ascending points
    std::vector<double> density; // nonnegative, trapezoid integral ~ 1
    double bandwidth = 0.0;
};

/// Gaussian kernel density estimate. Bandwidth is the rule-of-thumb
/// 0.9 * min(sd, IQR/1.34) * n^(-1/5) (R's bw.nrd0, type-7 quantiles, with
/// the same fallback to sd when the IQR is degenerate); the grid spans
/// [min - 3h, max + 3h] with 512 points.
DensityCurve kde(const SampleSet& s);

} // namespace psnrseg
