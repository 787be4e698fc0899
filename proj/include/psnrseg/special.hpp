#pragma once

namespace psnrseg {

/// log(Gamma(x)) for x > 0, Lanczos approximation (g=7, 9 terms).
/// Relative error below 1e-10 on [0.5, 1000].
double ln_gamma(double x);

/// Regularized incomplete beta I_x(a, b), evaluated with the modified Lentz
/// continued fraction; the symmetry I_x(a,b) = 1 - I_{1-x}(b,a) is applied
/// when x > (a+1)/(a+b+2) to keep the fraction in its fast-converging range.
double inc_beta(double a, double b, double x);

/// Student t cumulative distribution function.
double t_cdf(double t, double df);

/// Fisher F cumulative distribution function.
double f_cdf(double x, double d1, double d2);

/// Inverse of t_cdf in t; bisection bracket plus Newton polish,
/// |t_cdf(result) - p| < 1e-10.
double t_quantile(double p, double df);

/// Inverse of f_cdf in x, same scheme and tolerance as t_quantile.
double f_quantile(double p, double d1, double d2);

} // namespace psnrseg
