#include <doctest.h>

#include <cmath>
#include <initializer_list>
#include <memory>
#include <stdexcept>
#include <vector>

#include "eollw/eollg.hpp"
#include "eollw/stats.hpp"
#include "oracles.hpp"

using namespace eollw;

namespace {

std::shared_ptr<const Baseline> weibull(double shape, double scale) {
  return std::make_shared<WeibullBaseline>(shape, scale);
}

std::shared_ptr<const Baseline> gumbel() {
  return std::make_shared<GumbelMinBaseline>();
}

}  // namespace

TEST_SUITE("distcore") {

TEST_CASE("parameter validation") {
  CHECK_THROWS_AS(EollG(0.0, 1.0, weibull(1, 1)), std::invalid_argument);
  CHECK_THROWS_AS(EollG(1.0, -2.0, weibull(1, 1)), std::invalid_argument);
  CHECK_THROWS_AS(EollG(1.0, 1.0, nullptr), std::invalid_argument);
  CHECK_THROWS_AS(WeibullBaseline(0.0, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(WeibullBaseline(1.0, 0.0), std::invalid_argument);
}

TEST_CASE("unit shapes reduce to the baseline") {
  // Exponential check at a frozen point plus a relative sweep.
  const EollG expo(1.0, 1.0, weibull(1.0, 1.0));
  CHECK(expo.pdf(1.0) == doctest::Approx(std::exp(-1.0)).epsilon(1e-12));
  CHECK(expo.survival(1.0) == doctest::Approx(std::exp(-1.0)).epsilon(1e-12));
  CHECK(expo.cdf(std::log(2.0)) == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(expo.quantile(0.5) == doctest::Approx(std::log(2.0)).epsilon(1e-12));

  const auto wb = weibull(1.7, 0.8);
  const EollG gw(1.0, 1.0, wb);
  for (double x : {0.05, 0.3, 1.0, 2.5}) {
    CHECK(gw.pdf(x) == doctest::Approx(wb->density(x)).epsilon(1e-12));
    CHECK(gw.cdf(x) == doctest::Approx(wb->cdf(x)).epsilon(1e-12));
  }
  const auto gm = gumbel();
  const EollG gg(1.0, 1.0, gm);
  for (double x : {-3.0, -0.5, 0.0, 1.0}) {
    CHECK(gg.pdf(x) == doctest::Approx(gm->density(x)).epsilon(1e-12));
    CHECK(gg.cdf(x) == doctest::Approx(gm->cdf(x)).epsilon(1e-12));
  }
}

TEST_CASE("pdf integrates to one") {
  // Single published-style parameter point first, then the full grid.
  {
    const EollG d(0.3, 1.5, weibull(2.9, 1.2));
    const double total =
        oracle::integrate_to_inf([&](double x) { return d.pdf(x); }, 0.0);
    CHECK(total == doctest::Approx(1.0).epsilon(1e-8));
  }
  for (double a : {0.3, 1.0, 2.0}) {
    for (double b : {0.3, 1.0, 2.0}) {
      const EollG dw(a, b, weibull(1.4, 0.9));
      const double tw =
          oracle::integrate_to_inf([&](double x) { return dw.pdf(x); }, 0.0);
      CHECK_MESSAGE(tw == doctest::Approx(1.0).epsilon(1e-8),
                    "weibull baseline a=", a, " b=", b);
      const EollG dg(a, b, gumbel());
      const double tg =
          oracle::integrate_real_line([&](double x) { return dg.pdf(x); });
      CHECK_MESSAGE(tg == doctest::Approx(1.0).epsilon(1e-8),
                    "gumbel baseline a=", a, " b=", b);
    }
  }
}

TEST_CASE("pdf is the derivative of the cdf") {
  const EollG d(2.0, 0.5, weibull(1.0, 1.0));
  for (double x : {0.2, 0.7, 1.3, 2.4}) {
    const double fd =
        oracle::derivative([&](double t) { return d.cdf(t); }, x, 1e-5);
    CHECK(d.pdf(x) == doctest::Approx(fd).epsilon(1e-6));
  }
}

TEST_CASE("cdf against a quadrature oracle") {
  const EollG d(0.5, 0.9, weibull(1.0, 1.0));
  const double numeric =
      oracle::integrate([&](double x) { return d.pdf(x); }, 0.0, 1.0);
  CHECK(d.cdf(1.0) == doctest::Approx(numeric).epsilon(1e-8));
}

TEST_CASE("cdf handles off-support and NaN inputs") {
  const EollG d(0.7, 1.3, weibull(2.0, 1.0));
  CHECK(d.cdf(-1.0) == 0.0);
  CHECK(d.cdf(0.0) == 0.0);
  CHECK(d.survival(-1.0) == 1.0);
  CHECK(std::isnan(d.cdf(std::numeric_limits<double>::quiet_NaN())));
  CHECK_THROWS_AS(d.pdf(std::numeric_limits<double>::quiet_NaN()),
                  std::domain_error);
}

TEST_CASE("survival is the complement and is monotone") {
  const EollG d(0.3, 1.5, weibull(1.4, 0.9));
  double prev = 1.0;
  for (int i = 0; i < 1000; ++i) {
    const double x = 1e-3 * std::pow(1.02, i);  // covers ~ 1e-3 .. 4e5
    const double s = d.survival(x);
    CHECK(s + d.cdf(x) == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(s <= prev + 1e-15);
    prev = s;
  }
}

TEST_CASE("hazard closed form equals pdf over survival") {
  const EollG constant(1.0, 1.0, weibull(1.0, 1.0));
  for (double x : {0.01, 0.5, 1.0, 5.0, 20.0}) {
    CHECK(constant.hazard(x) == doctest::Approx(1.0).epsilon(1e-12));
  }
  const EollG d(0.1, 2.0, weibull(3.0, 1.0));
  for (double x : {0.3, 0.8, 1.1, 1.6}) {
    CHECK(d.hazard(x) ==
          doctest::Approx(d.pdf(x) / d.survival(x)).epsilon(1e-10));
  }
  const EollG heavy(2.0, 1.5, weibull(0.2, 2.0));
  for (double x = 0.5; x <= 10.0; x += 0.5) {
    const double h = heavy.hazard(x);
    CHECK(std::isfinite(h));
    CHECK(h > 0.0);
    CHECK(h == doctest::Approx(heavy.pdf(x) / heavy.survival(x)).epsilon(1e-10));
  }
}

TEST_CASE("hazard survives survival underflow") {
  // Deep right tail: survival underflows to 0 but the closed form stays
  // finite until the baseline hazard itself overflows.
  const EollG d(1.0, 1.0, weibull(1.0, 1.0));
  CHECK(d.survival(800.0) == 0.0);
  CHECK(d.hazard(800.0) == doctest::Approx(1.0).epsilon(1e-10));
}

TEST_CASE("quantile round-trips through the cdf") {
  CHECK(EollG(1.0, 1.0, weibull(1, 1)).quantile(0.5) ==
        doctest::Approx(std::log(2.0)).epsilon(1e-12));
  for (double a : {0.3, 1.0, 2.0}) {
    for (double b : {0.3, 1.0, 2.0}) {
      const EollG d(a, b, weibull(1.4, 0.9));
      for (double u = 0.01; u < 1.0; u += 0.07) {
        CHECK(d.cdf(d.quantile(u)) == doctest::Approx(u).epsilon(1e-10));
      }
      for (double u : {1e-4, 1e-3, 0.5, 1.0 - 1e-3, 1.0 - 1e-4}) {
        CHECK(d.cdf(d.quantile(u)) == doctest::Approx(u).epsilon(1e-10));
      }
    }
  }
  const EollG d(0.8, 1.2, weibull(2.0, 1.0));
  CHECK_THROWS_AS(d.quantile(0.0), std::domain_error);
  CHECK_THROWS_AS(d.quantile(1.0), std::domain_error);
  CHECK_THROWS_AS(d.quantile(-0.2), std::domain_error);
  CHECK_THROWS_AS(d.quantile(std::numeric_limits<double>::quiet_NaN()),
                  std::domain_error);
}

TEST_CASE("representation variate quantile") {
  const RepresentationVariate unit{1.0, 1.0};
  CHECK(unit.quantile(0.5) == doctest::Approx(1.0).epsilon(1e-14));
  for (double a : {0.5, 1.0, 2.0}) {
    for (double b : {0.9, 1.0, 1.7}) {
      const RepresentationVariate v{a, b};
      for (double u : {0.05, 0.25, 0.5, 0.9, 0.99}) {
        CHECK(v.cdf(v.quantile(u)) == doctest::Approx(u).epsilon(1e-12));
      }
    }
  }
  // Cross-check one closed-form inverse against bisection on the cdf.
  const RepresentationVariate v{0.5, 0.9};
  const double q = v.quantile(0.9);
  const double root = oracle::bisect(
      [&](double t) { return v.cdf(t) - 0.9; }, 1e-6, 1e9, 1e-13);
  CHECK(q == doctest::Approx(root).epsilon(1e-9));
}

TEST_CASE("representation route equals direct quantile") {
  // Identity between the closed-form inverse cdf and the heavy-tailed
  // representation, plus the reciprocal-variate route through 1/T.
  const EollG simple(1.0, 1.0, weibull(1, 1));
  CHECK(simple.quantile_via_representation(0.5) ==
        doctest::Approx(std::log(2.0)).epsilon(1e-12));
  for (double a : {0.5, 1.0, 2.0}) {
    for (double b : {0.9, 1.0, 1.7}) {
      const EollG d(a, b, weibull(1.3, 0.8));
      const RepresentationVariate v{a, b};
      for (int i = 1; i <= 9; ++i) {
        const double u = i / 10.0;
        const double direct = d.quantile(u);
        CHECK(d.quantile_via_representation(u) ==
              doctest::Approx(direct).epsilon(1e-12));
        // Reciprocal route: with R = 1/T, G^-1(1/(1+R)) is the same point.
        const double r = 1.0 / v.quantile(u);
        const double via_r = d.baseline().quantile(1.0 / (1.0 + r));
        CHECK(via_r == doctest::Approx(direct).epsilon(1e-12));
      }
    }
  }
  CHECK(EollG(0.5, 0.9, weibull(1, 1)).quantile(0.25) ==
        doctest::Approx(
            EollG(0.5, 0.9, weibull(1, 1)).quantile_via_representation(0.25))
            .epsilon(1e-12));
}

TEST_CASE("sampling") {
  const EollG expo(1.0, 1.0, weibull(1, 1));
  CHECK_THROWS_AS(expo.sample(0, 1), std::invalid_argument);

  // Determinism and the two sampler routes.
  const auto s1 = expo.sample(100, 42);
  const auto s2 = expo.sample(100, 42);
  CHECK(s1 == s2);

  const std::size_t n = 10000;
  auto draws = expo.sample(n, 20260822);
  const double d_exp =
      ks_statistic(draws, [](double x) { return -std::expm1(-x); });
  CHECK(d_exp < 1.63 / std::sqrt(static_cast<double>(n)));

  const EollG g(0.5, 0.9, weibull(1, 1));
  auto draws2 = g.sample_via_representation(n, 7);
  const double d_g = ks_statistic(draws2, [&](double x) { return g.cdf(x); });
  CHECK(d_g < 0.02);
}

TEST_CASE("origin limits of the density") {
  // ab < 1/alpha: the density blows up at the origin.
  CHECK(EollG(0.5, 0.9, weibull(1.0, 1.0)).pdf(1e-8) > 1e3);
  // ab > 1/alpha: it vanishes.
  CHECK(EollG(2.0, 1.0, weibull(1.0, 1.0)).pdf(1e-8) < 1e-3);
  // ab = 1/alpha: finite positive limit. At lambda = 1 the limit is 1
  // regardless of how (a, b, alpha) split the product.
  CHECK(EollG(1.0, 1.0, weibull(1.0, 1.0)).pdf(1e-6) ==
        doctest::Approx(1.0).epsilon(1e-3));
  CHECK(EollG(0.5, 1.0, weibull(2.0, 1.0)).pdf(1e-6) ==
        doctest::Approx(1.0).epsilon(1e-3));
  // General scale: f ~ ab*alpha*lambda^(-alpha*ab)*x^(alpha*ab-1), so at
  // alpha*ab = 1 the limit is 1/lambda.
  CHECK(EollG(0.5, 1.0, weibull(2.0, 2.0)).pdf(1e-6) ==
        doctest::Approx(0.5).epsilon(1e-3));
}

TEST_CASE("log forms stay finite deep in the tails") {
  const EollG d(2.0, 1.0, weibull(1.0, 1.0));  // ab > 1/alpha
  CHECK(std::isfinite(d.log_pdf(1e-300)));
  CHECK(std::isfinite(d.log_cdf(1e-300)));
  CHECK(std::isfinite(d.log_survival(500.0)));
  CHECK(d.log_survival(500.0) < -900.0);  // far below double underflow
}

}  // TEST_SUITE
