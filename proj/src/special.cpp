#include "psnrseg/special.hpp"

#include <cmath>
#include <string>

#include "psnrseg/errors.hpp"

namespace psnrseg {

namespace {

// Lanczos g=7, 9-term coefficients.
constexpr double kLanczos[9] = {
    0.99999999999980993,
    676.5203681218851,
    -1259.1392167224028,
    771.32342877765313,
    -176.61502916214059,
    12.507343278686905,
    -0.13857109526572012,
    9.9843695780195716e-6,
    1.5056327351493116e-7,
};
constexpr double kLnSqrt2Pi = 0.91893853320467274178;
constexpr double kPi = 3.14159265358979323846;

constexpr int kBetaMaxIter = 300;
constexpr double kBetaEps = 3e-16;
constexpr double kTiny = 1e-300;

// Modified Lentz evaluation of the incomplete-beta continued fraction,
// valid (and fast) for x < (a+1)/(a+b+2).
double beta_cf(double a, double b, double x) {
    const double qab = a + b;
    const double qap = a + 1.0;
    const double qam = a - 1.0;
    double c = 1.0;
    double d = 1.0 - qab * x / qap;
    if (std::fabs(d) < kTiny) d = kTiny;
    d = 1.0 / d;
    double h = d;
    for (int m = 1; m <= kBetaMaxIter; ++m) {
        const int m2 = 2 * m;
        double aa = m * (b - m) * x / ((qam + m2) * (a + m2));
        d = 1.0 + aa * d;
        if (std::fabs(d) < kTiny) d = kTiny;
        c = 1.0 + aa / c;
        if (std::fabs(c) < kTiny) c = kTiny;
        d = 1.0 / d;
        h *= d * c;
        aa = -(a + m) * (qab + m) * x / ((a + m2) * (qap + m2));
        d = 1.0 + aa * d;
        if (std::fabs(d) < kTiny) d = kTiny;
        c = 1.0 + aa / c;
        if (std::fabs(c) < kTiny) c = kTiny;
        d = 1.0 / d;
        const double delta = d * c;
        h *= delta;
        if (std::fabs(delta - 1.0) < kBetaEps)
            return h;
    }
    throw NumericError("incomplete beta did not converge: a=" + std::to_string(a) +
                       " b=" + std::to_string(b) + " x=" + std::to_string(x));
}

double t_pdf(double t, double df) {
    const double ln = ln_gamma((df + 1.0) / 2.0) - ln_gamma(df / 2.0) -
                      0.5 * std::log(df * kPi) -
                      (df + 1.0) / 2.0 * std::log1p(t * t / df);
    return std::exp(ln);
}

double f_pdf(double x, double d1, double d2) {
    if (x <= 0.0) return 0.0;
    const double ln = 0.5 * d1 * std::log(d1 / d2) + (0.5 * d1 - 1.0) * std::log(x) -
                      0.5 * (d1 + d2) * std::log1p(d1 * x / d2) -
                      (ln_gamma(0.5 * d1) + ln_gamma(0.5 * d2) - ln_gamma(0.5 * (d1 + d2)));
    return std::exp(ln);
}

// Generic inverse-CDF: expand a bracket, bisect, then Newton-polish.
template <typename Cdf, typename Pdf>
double invert_cdf(double p, double lo, double hi, Cdf cdf, Pdf pdf, const char* name) {
    // hi moves right until the target probability is enclosed.
    int expansions = 0;
    while (cdf(hi) < p) {
        lo = hi;
        hi *= 2.0;
        if (++expansions > 80)
            throw NumericError(std::string(name) + ": failed to bracket p=" +
                               std::to_string(p));
    }
    for (int i = 0; i < 90; ++i) {
        const double mid = 0.5 * (lo + hi);
        if (mid <= lo || mid >= hi) break; // interval exhausted
        (cdf(mid) < p ? lo : hi) = mid;
    }
    double x = 0.5 * (lo + hi);
    for (int i = 0; i < 6; ++i) {
        const double err = cdf(x) - p;
        if (std::fabs(err) < 1e-14) break;
        const double slope = pdf(x);
        if (slope <= 0.0) break;
        const double step = err / slope;
        const double next = x - step;
        if (next <= lo || next >= hi) break; // keep the bisection bracket
        x = next;
    }
    if (std::fabs(cdf(x) - p) > 1e-10)
        throw NumericError(std::string(name) + ": no convergence at p=" +
                           std::to_string(p));
    return x;
}

} // namespace

double ln_gamma(double x) {
    if (!(x > 0.0))
        throw NumericError("ln_gamma requires x > 0, got " + std::to_string(x));
    if (x < 0.5) // reflection: Gamma(x) Gamma(1-x) = pi / sin(pi x)
        return std::log(kPi / std::sin(kPi * x)) - ln_gamma(1.0 - x);
    x -= 1.0;
    double acc = kLanczos[0];
    const double t = x + 7.5;
    for (int i = 1; i < 9; ++i)
        acc += kLanczos[i] / (x + i);
    return kLnSqrt2Pi + (x + 0.5) * std::log(t) - t + std::log(acc);
}

double inc_beta(double a, double b, double x) {
    if (!(a > 0.0) || !(b > 0.0))
        throw NumericError("inc_beta requires a, b > 0");
    if (!(x >= 0.0 && x <= 1.0))
        throw NumericError("inc_beta requires x in [0, 1], got " + std::to_string(x));
    if (x == 0.0) return 0.0;
    if (x == 1.0) return 1.0;

    const double ln_front = ln_gamma(a + b) - ln_gamma(a) - ln_gamma(b) +
                            a * std::log(x) + b * std::log1p(-x);
    const double front = std::exp(ln_front);
    if (x < (a + 1.0) / (a + b + 2.0))
        return front * beta_cf(a, b, x) / a;
    return 1.0 - front * beta_cf(b, a, 1.0 - x) / b;
}

double t_cdf(double t, double df) {
    if (!(df > 0.0))
        throw NumericError("t_cdf requires df > 0, got " + std::to_string(df));
    if (t == 0.0) return 0.5;
    const double x = df / (df + t * t);
    const double tail = 0.5 * inc_beta(0.5 * df, 0.5, x);
    return t < 0.0 ? tail : 1.0 - tail;
}

double f_cdf(double x, double d1, double d2) {
    if (!(d1 > 0.0) || !(d2 > 0.0))
        throw NumericError("f_cdf requires positive degrees of freedom");
    if (!(x >= 0.0))
        throw NumericError("f_cdf requires x >= 0, got " + std::to_string(x));
    if (x == 0.0) return 0.0;
    return inc_beta(0.5 * d1, 0.5 * d2, d1 * x / (d1 * x + d2));
}

double t_quantile(double p, double df) {
    if (!(df > 0.0))
        throw NumericError("t_quantile requires df > 0");
    if (!(p > 0.0 && p < 1.0))
        throw NumericError("t_quantile requires p in (0, 1), got " + std::to_string(p));
    if (p == 0.5) return 0.0;
    // Invert the upper half and mirror: quantile(p) = -quantile(1-p).
    const double pp = p > 0.5 ? p : 1.0 - p;
    const double q = invert_cdf(
        pp, 0.0, 1.0, [df](double t) { return t_cdf(t, df); },
        [df](double t) { return t_pdf(t, df); }, "t_quantile");
    return p > 0.5 ? q : -q;
}

double f_quantile(double p, double d1, double d2) {
    if (!(d1 > 0.0) || !(d2 > 0.0))
        throw NumericError("f_quantile requires positive degrees of freedom");
    if (!(p > 0.0 && p < 1.0))
        throw NumericError("f_quantile requires p in (0, 1), got " + std::to_string(p));
    return invert_cdf(
        p, 0.0, 1.0, [d1, d2](double x) { return f_cdf(x, d1, d2); },
        [d1, d2](double x) { return f_pdf(x, d1, d2); }, "f_quantile");
}

} // namespace psnrseg
