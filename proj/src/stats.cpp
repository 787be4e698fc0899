#include "psnrseg/stats.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "psnrseg/special.hpp"

namespace psnrseg {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kSqrt2Pi = 2.50662827463100050242;

// R type-7 quantile on a sorted vector: h = (n-1)p, linear interpolation.
double quantile_type7(const std::vector<double>& sorted, double p) {
    const std::size_t n = sorted.size();
    const double h = static_cast<double>(n - 1) * p;
    const std::size_t lo = static_cast<std::size_t>(h);
    if (lo + 1 >= n) return sorted.back();
    return sorted[lo] + (h - lo) * (sorted[lo + 1] - sorted[lo]);
}

// Shared p-value / confidence-interval conventions of the t family (R t.test).
TestReport t_family_report(TestName name, double t, double df, double se,
                           double mean_x, double mean_y, double alpha,
                           Alternative alternative) {
    const double diff = mean_x - mean_y;
    TestReport r;
    r.test_name = name;
    r.statistic = t;
    r.df1 = df;
    r.alpha = alpha;
    r.mean_x = mean_x;
    r.mean_y = mean_y;
    r.alternative = alternative;
    switch (alternative) {
    case Alternative::TwoSided:
        r.p_value = std::min(1.0, 2.0 * t_cdf(-std::fabs(t), df));
        r.ci_low = diff - t_quantile(1.0 - alpha / 2.0, df) * se;
        r.ci_high = diff + t_quantile(1.0 - alpha / 2.0, df) * se;
        break;
    case Alternative::Less:
        r.p_value = t_cdf(t, df);
        r.ci_low = -kInf;
        r.ci_high = diff + t_quantile(1.0 - alpha, df) * se;
        break;
    case Alternative::Greater:
        // 1 - t_cdf(t) by symmetry, without the cancellation in deep tails
        r.p_value = t_cdf(-t, df);
        r.ci_low = diff - t_quantile(1.0 - alpha, df) * se;
        r.ci_high = kInf;
        break;
    }
    r.reject_null = r.p_value < alpha;
    return r;
}

void check_alpha(double alpha) {
    if (!(alpha > 0.0 && alpha < 1.0))
        throw NumericError("significance level must be in (0, 1), got " +
                           std::to_string(alpha));
}

} // namespace

SampleSet::SampleSet(std::vector<double> values) : values_(std::move(values)) {
    const std::size_t n = values_.size();
    if (n < 2)
        throw NumericError("sample set needs at least 2 values, got " +
                           std::to_string(n));
    for (std::size_t i = 0; i < n; ++i)
        if (!std::isfinite(values_[i]))
            throw NumericError("sample set has non-finite value at index " +
                               std::to_string(i));

    double sum = 0.0;
    min_ = max_ = values_[0];
    for (const double v : values_) {
        sum += v;
        min_ = std::min(min_, v);
        max_ = std::max(max_, v);
    }
    mean_ = sum / static_cast<double>(n);

    // Corrected two-pass: the linear term cancels first-pass rounding.
    double sum_sq = 0.0;
    double sum_lin = 0.0;
    for (const double v : values_) {
        const double d = v - mean_;
        sum_sq += d * d;
        sum_lin += d;
    }
    variance_ = (sum_sq - sum_lin * sum_lin / static_cast<double>(n)) /
                static_cast<double>(n - 1);
}

TestReport f_test(const SampleSet& x, const SampleSet& y, double alpha) {
    check_alpha(alpha);
    const double vy = y.variance();
    if (vy == 0.0)
        throw NumericError("F test undefined: zero variance in the second sample");

    const double f = x.variance() / vy;
    const double d1 = static_cast<double>(x.size() - 1);
    const double d2 = static_cast<double>(y.size() - 1);
    const double lower = f_cdf(f, d1, d2);
    // Upper tail through the I_x(a,b) = 1 - I_{1-x}(b,a) symmetry; the
    // direct 1 - cdf would underflow to 0 for extreme ratios.
    const double upper =
        f == 0.0 ? 1.0 : inc_beta(0.5 * d2, 0.5 * d1, d2 / (d1 * f + d2));

    TestReport r;
    r.test_name = TestName::FisherF;
    r.statistic = f;
    r.df1 = d1;
    r.df2 = d2;
    r.alpha = alpha;
    r.mean_x = x.mean();
    r.mean_y = y.mean();
    r.alternative = Alternative::TwoSided;
    r.p_value = std::min(1.0, 2.0 * std::min(lower, upper));
    // R var.test interval: estimate / qf at both tails, df order (d1, d2).
    r.ci_low = f / f_quantile(1.0 - alpha / 2.0, d1, d2);
    r.ci_high = f / f_quantile(alpha / 2.0, d1, d2);
    r.reject_null = r.p_value < alpha;
    return r;
}

TestReport welch_t_test(const SampleSet& x, const SampleSet& y, double alpha,
                        Alternative alternative) {
    check_alpha(alpha);
    const double nx = static_cast<double>(x.size());
    const double ny = static_cast<double>(y.size());
    const double ax = x.variance() / nx;
    const double ay = y.variance() / ny;
    const double se = std::sqrt(ax + ay);
    if (se == 0.0)
        throw NumericError("Welch test undefined: zero pooled standard error");

    const double t = (x.mean() - y.mean()) / se;
    // Welch-Satterthwaite degrees of freedom.
    const double df =
        (ax + ay) * (ax + ay) / (ax * ax / (nx - 1.0) + ay * ay / (ny - 1.0));
    return t_family_report(TestName::WelchT, t, df, se, x.mean(), y.mean(), alpha,
                           alternative);
}

TestReport student_t_test(const SampleSet& x, const SampleSet& y, double alpha,
                          Alternative alternative) {
    check_alpha(alpha);
    const double nx = static_cast<double>(x.size());
    const double ny = static_cast<double>(y.size());
    const double df = nx + ny - 2.0;
    const double pooled =
        ((nx - 1.0) * x.variance() + (ny - 1.0) * y.variance()) / df;
    const double se = std::sqrt(pooled * (1.0 / nx + 1.0 / ny));
    if (se == 0.0)
        throw NumericError("Student test undefined: zero pooled variance");

    const double t = (x.mean() - y.mean()) / se;
    return t_family_report(TestName::StudentT, t, df, se, x.mean(), y.mean(), alpha,
                           alternative);
}

DensityCurve kde(const SampleSet& s) {
    std::vector<double> sorted(s.values());
    std::sort(sorted.begin(), sorted.end());

    const double sd = std::sqrt(s.variance());
    const double iqr = quantile_type7(sorted, 0.75) - quantile_type7(sorted, 0.25);
    double spread = std::min(sd, iqr / 1.34);
    if (spread == 0.0) spread = sd; // bw.nrd0 fallback for degenerate IQR
    if (spread <= 0.0)
        throw NumericError("kde requires nonzero spread");

    const double h =
        0.9 * spread * std::pow(static_cast<double>(s.size()), -0.2);
    const double lo = sorted.front() - 3.0 * h;
    const double hi = sorted.back() + 3.0 * h;
    const double step = (hi - lo) / static_cast<double>(kDensityGridSize - 1);

    DensityCurve curve;
    curve.bandwidth = h;
    curve.grid.resize(kDensityGridSize);
    curve.density.resize(kDensityGridSize);
    const double norm = 1.0 / (static_cast<double>(s.size()) * h * kSqrt2Pi);
    for (int i = 0; i < kDensityGridSize; ++i) {
        const double x = lo + step * i;
        double acc = 0.0;
        for (const double v : sorted) {
            const double z = (x - v) / h;
            acc += std::exp(-0.5 * z * z);
        }
        curve.grid[i] = x;
        curve.density[i] = acc * norm;
    }
    return curve;
}

} // namespace psnrseg
