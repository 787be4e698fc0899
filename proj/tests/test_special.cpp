#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include "psnrseg/errors.hpp"
#include "psnrseg/noise.hpp"
#include "psnrseg/special.hpp"

using namespace psnrseg;
using Catch::Approx;

TEST_CASE("ln_gamma fixed points and identities") {
    CHECK(ln_gamma(1.0) == Approx(0.0).margin(1e-14));
    CHECK(ln_gamma(2.0) == Approx(0.0).margin(1e-14));
    CHECK(ln_gamma(0.5) == Approx(0.5723649429247001).epsilon(1e-12)); // ln(sqrt(pi))
    CHECK(ln_gamma(5.0) == Approx(std::log(24.0)).epsilon(1e-12));
    CHECK_THROWS_AS(ln_gamma(0.0), NumericError);
    CHECK_THROWS_AS(ln_gamma(-1.5), NumericError);
}

TEST_CASE("ln_gamma tracks the library gamma within 1e-10 on [0.5, 1000]") {
    // std::lgamma is the independent reference here.
    for (int i = 0; i <= 2000; ++i) {
        const double x = 0.5 + (1000.0 - 0.5) * i / 2000.0;
        const double ref = std::lgamma(x);
        const double tol = 1e-10 * std::max(1.0, std::fabs(ref));
        CHECK(std::fabs(ln_gamma(x) - ref) <= tol);
    }
    // below the Lanczos shift: reflection path
    CHECK(ln_gamma(0.1) == Approx(std::lgamma(0.1)).epsilon(1e-10));
}

TEST_CASE("inc_beta endpoint and closed-form values") {
    CHECK(inc_beta(2.5, 3.5, 0.0) == 0.0);
    CHECK(inc_beta(2.5, 3.5, 1.0) == 1.0);
    // I_x(1,1) = x (uniform)
    for (const double x : {0.0, 0.125, 0.5, 0.97, 1.0})
        CHECK(inc_beta(1.0, 1.0, x) == Approx(x).margin(1e-14));
    CHECK(inc_beta(2.0, 2.0, 0.5) == Approx(0.5).margin(1e-14));
    CHECK_THROWS_AS(inc_beta(0.0, 1.0, 0.5), NumericError);
    CHECK_THROWS_AS(inc_beta(1.0, 1.0, 1.5), NumericError);
}

TEST_CASE("inc_beta symmetry identity on random triples") {
    SplitMix64 rng(424242);
    for (int i = 0; i < 1000; ++i) {
        const double a = 0.5 + 49.5 * rng.next_double();
        const double b = 0.5 + 49.5 * rng.next_double();
        const double x = rng.next_double();
        CHECK(inc_beta(a, b, x) + inc_beta(b, a, 1.0 - x) == Approx(1.0).margin(1e-10));
    }
}

TEST_CASE("t_cdf fixed points, symmetry and monotonicity") {
    CHECK(t_cdf(0.0, 1.0) == 0.5);
    CHECK(t_cdf(0.0, 526.607) == 0.5);
    for (const double df : {1.0, 4.0, 37.5, 299.0}) {
        for (const double t : {0.2, 1.0, 2.75, 6.0})
            CHECK(t_cdf(t, df) + t_cdf(-t, df) == Approx(1.0).margin(1e-13));
        double prev = 0.0;
        for (double t = -8.0; t <= 8.0; t += 0.5) {
            const double c = t_cdf(t, df);
            CHECK(c >= prev);
            prev = c;
        }
    }
    CHECK_THROWS_AS(t_cdf(1.0, 0.0), NumericError);
}

TEST_CASE("t_cdf reference values") {
    // reference: R / scipy.stats.t.cdf
    CHECK(t_cdf(1.0, 5.0) == Approx(0.8183912661754387).epsilon(1e-12));
    CHECK(t_cdf(-2.75, 17.3) == Approx(0.0067562592572292125).epsilon(1e-11));
    CHECK(t_cdf(-7.6524, 526.607) == Approx(4.735278811392678e-14).epsilon(1e-9));
}

TEST_CASE("f_cdf fixed points and reference values") {
    CHECK(f_cdf(0.0, 3.0, 7.0) == 0.0);
    for (const double d : {1.0, 2.0, 5.0, 40.0, 299.0, 1000.0})
        CHECK(f_cdf(1.0, d, d) == Approx(0.5).margin(1e-12));

    // reference: R / scipy.stats.f.cdf
    CHECK(f_cdf(3.5, 10.0, 20.0) == Approx(0.9917696591707106).epsilon(1e-12));
    CHECK(f_cdf(0.25, 4.0, 9.0) == Approx(0.09747488781613395).epsilon(1e-11));
    CHECK(f_cdf(0.4617745, 299.0, 299.0) ==
          Approx(2.1324512415450016e-11).epsilon(1e-9));
    CHECK(2.0 * f_cdf(0.4618, 299.0, 299.0) ==
          Approx(4.27815055402947e-11).epsilon(1e-9));

    double prev = 0.0;
    for (double x = 0.0; x <= 10.0; x += 0.25) {
        const double c = f_cdf(x, 6.0, 11.0);
        CHECK(c >= prev);
        prev = c;
    }
    CHECK_THROWS_AS(f_cdf(-1.0, 3.0, 3.0), NumericError);
    CHECK_THROWS_AS(f_cdf(1.0, 0.0, 3.0), NumericError);
}

TEST_CASE("t_quantile fixed points and reference values") {
    CHECK(t_quantile(0.5, 11.0) == 0.0);
    CHECK(t_quantile(0.975, 10000.0) == Approx(1.960201239890626).margin(1e-8));
    CHECK(t_quantile(0.9, 7.0) == Approx(1.4149239276488585).margin(1e-9));
    CHECK(t_quantile(0.025, 299.0) == Approx(-1.9679296690653623).margin(1e-9));
    for (const double p : {0.01, 0.2, 0.65, 0.99})
        CHECK(t_quantile(p, 13.0) == Approx(-t_quantile(1.0 - p, 13.0)).margin(1e-10));
    CHECK_THROWS_AS(t_quantile(0.0, 5.0), NumericError);
    CHECK_THROWS_AS(t_quantile(1.0, 5.0), NumericError);
}

TEST_CASE("f_quantile fixed points and reference values") {
    for (const double d : {2.0, 9.0, 299.0})
        CHECK(f_quantile(0.5, d, d) == Approx(1.0).margin(1e-10));
    CHECK(f_quantile(0.3, 12.0, 8.0) == Approx(0.7293151466670661).margin(1e-9));
    CHECK(f_quantile(0.95, 299.0, 299.0) == Approx(1.2099167425932442).margin(1e-9));
    CHECK(f_quantile(0.975, 299.0, 299.0) == Approx(1.2549906264237356).margin(1e-9));

    // reciprocal identity
    for (const double p : {0.05, 0.3, 0.8})
        CHECK(f_quantile(p, 7.0, 12.0) ==
              Approx(1.0 / f_quantile(1.0 - p, 12.0, 7.0)).epsilon(1e-10));
}

TEST_CASE("quantile then cdf is the identity") {
    for (const double df : {2.0, 8.0, 120.0})
        for (const double p : {0.001, 0.1, 0.37, 0.5, 0.9, 0.999})
            CHECK(t_cdf(t_quantile(p, df), df) == Approx(p).margin(1e-10));
    for (const double p : {0.02, 0.44, 0.71, 0.98})
        CHECK(f_cdf(f_quantile(p, 9.0, 15.0), 9.0, 15.0) == Approx(p).margin(1e-10));
}

TEST_CASE("cdf then quantile recovers the point") {
    for (const double df : {1.0, 6.0, 80.0, 600.0})
        for (const double t : {-6.0, -2.1, -0.4, 0.3, 1.7, 5.5})
            CHECK(t_quantile(t_cdf(t, df), df) == Approx(t).margin(1e-8));
    for (const double x : {0.05, 0.4, 1.0, 2.6, 9.0})
        CHECK(f_quantile(f_cdf(x, 5.0, 11.0), 5.0, 11.0) == Approx(x).margin(1e-8));
}
