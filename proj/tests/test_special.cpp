#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>
#include <vector>

#include "doctest.h"
#include "kinbound/errors.hpp"
#include "kinbound/special.hpp"

using kinbound::DomainError;
using kinbound::special::airy_ai;
using kinbound::special::airy_ai_prime;
using kinbound::special::airy_zero;
using kinbound::special::lambert_w0;

namespace {

// Oracle 1: solve w e^w = z by plain bisection, nothing shared with the
// library's Halley iteration.
double w0_bisect(double z) {
  double lo = -1.0, hi = 710.0;
  for (int i = 0; i < 200; ++i) {
    const double mid = 0.5 * (lo + hi);
    if (mid == lo || mid == hi) break;
    (mid * std::exp(mid) - z > 0.0 ? hi : lo) = mid;
  }
  return 0.5 * (lo + hi);
}

// Oracle 2: integrate u'' = x u leftward from x = 10 with RK4. Any
// initial data with a decaying component converges onto the Ai direction
// going left, so the zeros of u are the zeros of Ai. Zeros are extracted
// from each bracketing step by bisection on the cubic Hermite interpolant.
std::vector<double> airy_zeros_by_integration(double x_end, double h) {
  double x = 10.0;
  double u = 1.0, v = -std::sqrt(10.0);  // asymptotic slope u'/u ~ -sqrt(x)
  std::vector<double> zeros;
  const auto fv = [](double xx, double uu) { return xx * uu; };
  while (x > x_end) {
    const double x0 = x, u0 = u, v0 = v;
    // One RK4 step of size -h for (u' = v, v' = x u).
    const double k1u = v0, k1v = fv(x0, u0);
    const double k2u = v0 - 0.5 * h * k1v, k2v = fv(x0 - 0.5 * h, u0 - 0.5 * h * k1u);
    const double k3u = v0 - 0.5 * h * k2v, k3v = fv(x0 - 0.5 * h, u0 - 0.5 * h * k2u);
    const double k4u = v0 - h * k3v, k4v = fv(x0 - h, u0 - h * k3u);
    u = u0 - h / 6.0 * (k1u + 2 * k2u + 2 * k3u + k4u);
    v = v0 - h / 6.0 * (k1v + 2 * k2v + 2 * k3v + k4v);
    x = x0 - h;
    if ((u > 0.0) != (u0 > 0.0)) {
      // Cubic Hermite on [x, x0] using values and slopes at both ends.
      const auto hermite = [&](double t) {  // t in [0,1], t=0 at x0
        const double t2 = t * t, t3 = t2 * t;
        return (2 * t3 - 3 * t2 + 1) * u0 + (t3 - 2 * t2 + t) * (-h) * v0 +
               (-2 * t3 + 3 * t2) * u + (t3 - t2) * (-h) * v;
      };
      double lo = 0.0, hi = 1.0;
      for (int i = 0; i < 60; ++i) {
        const double mid = 0.5 * (lo + hi);
        ((hermite(mid) > 0.0) == (u0 > 0.0) ? lo : hi) = mid;
      }
      zeros.push_back(x0 - h * 0.5 * (lo + hi));
    }
  }
  return zeros;
}

}  // namespace

TEST_CASE("lambert w at reference points") {
  CHECK(lambert_w0(0.0) == 0.0);
  CHECK(lambert_w0(std::exp(1.0)) == doctest::Approx(1.0).epsilon(1e-14));
  // Independent bisection oracle at z = 1 (the omega constant).
  const double w1 = w0_bisect(1.0);
  CHECK(lambert_w0(1.0) == doctest::Approx(w1).epsilon(1e-13));
  CHECK(lambert_w0(1.0) == doctest::Approx(0.5671432904097838729999687).epsilon(1e-14));
  CHECK(lambert_w0(0.75) == doctest::Approx(w0_bisect(0.75)).epsilon(1e-13));
  CHECK(lambert_w0(0.75) == doctest::Approx(0.4691502106949882333).epsilon(1e-14));
  CHECK(lambert_w0(1.5) == doctest::Approx(0.7258613577662262570).epsilon(1e-14));
  // Branch point.
  CHECK(lambert_w0(-std::exp(-1.0)) == doctest::Approx(-1.0).epsilon(1e-6));
}

TEST_CASE("lambert w residual and monotonicity on a log-spaced sweep") {
  // 1000 points accumulating toward the branch point and spanning up to 1e6.
  const double branch = -std::exp(-1.0);
  double prev_w = -1.0;
  for (int i = 0; i < 1000; ++i) {
    const double t = -12.0 + 12.0 * i / 999.0;  // log10 of distance from -1/e
    const double z = branch + (1e6 - branch) * std::pow(10.0, t);
    const double w = lambert_w0(z);
    CHECK(std::fabs(w * std::exp(w) - z) <= 1e-12 * (1.0 + std::fabs(z)));
    CHECK(w >= prev_w);
    prev_w = w;
  }
}

TEST_CASE("lambert w domain error") {
  CHECK_THROWS_AS(lambert_w0(-0.4), DomainError);
  CHECK_THROWS_AS(lambert_w0(-1.0), DomainError);
}

TEST_CASE("airy values") {
  // Ai(0) = 3^(-2/3)/Gamma(2/3); evaluate Gamma(2/3) = 3 int_0^inf
  // y exp(-y^3) dy independently by Simpson on the substituted integrand.
  const double h = 1e-3;
  const int n = 8000;  // upper limit y = 8, e^{-512} below underflow
  double simpson = 0.0;
  const auto f = [](double y) { return y * std::exp(-y * y * y); };
  for (int i = 0; i < n; i += 2)
    simpson += h / 3.0 * (f(i * h) + 4.0 * f((i + 1) * h) + f((i + 2) * h));
  const double gamma_two_thirds = 3.0 * simpson;
  CHECK(gamma_two_thirds == doctest::Approx(1.354117939426400417).epsilon(1e-10));
  const double ai0 = std::pow(3.0, -2.0 / 3.0) / gamma_two_thirds;
  CHECK(airy_ai(0.0) == doctest::Approx(ai0).epsilon(1e-10));
  CHECK(airy_ai(0.0) == doctest::Approx(0.3550280538878172).epsilon(1e-15));
  CHECK(airy_ai_prime(0.0) == doctest::Approx(-0.2588194037928068).epsilon(1e-15));
  // Decaying side: positive and already small at x = 8.
  CHECK(airy_ai(8.0) > 0.0);
  CHECK(airy_ai(8.0) < 1e-4);
  CHECK(airy_ai(8.0) == doctest::Approx(4.692207616e-8).epsilon(1e-6));
  CHECK_THROWS_AS(airy_ai(14.0), DomainError);
  CHECK_THROWS_AS(airy_ai(-14.0), DomainError);
}

TEST_CASE("airy derivative consistency") {
  for (double x : {-9.5, -5.0, -1.0, 0.7, 2.0, 6.0}) {
    const double h = 1e-5;
    const double fd = (airy_ai(x + h) - airy_ai(x - h)) / (2 * h);
    CHECK(airy_ai_prime(x) == doctest::Approx(fd).epsilon(1e-8));
  }
}

TEST_CASE("airy zeros against the ODE-integration oracle") {
  const auto zeros = airy_zeros_by_integration(-13.4, 1e-3);
  REQUIRE(zeros.size() >= 10);
  // alpha_0 and alpha_1 to 1e-8 against the independent integration.
  CHECK(std::fabs(airy_zero(0).alpha - zeros[0]) <= 1e-8);
  CHECK(std::fabs(airy_zero(1).alpha - zeros[1]) <= 1e-8);
  CHECK(airy_zero(0).alpha == doctest::Approx(-2.338107410459767).epsilon(1e-12));
  CHECK(airy_zero(1).alpha == doctest::Approx(-4.087949444130971).epsilon(1e-12));
}

TEST_CASE("airy zero invariants for n <= 9") {
  double prev = 0.0;
  for (int n = 0; n <= 9; ++n) {
    const auto z = airy_zero(n);
    CHECK(z.n == n);
    CHECK(z.alpha < prev);            // strictly decreasing
    CHECK(std::fabs(airy_ai(z.alpha)) <= 1e-10);  // residual under own evaluator
    prev = z.alpha;
  }
  CHECK_THROWS_AS(airy_zero(10), DomainError);
  CHECK_THROWS_AS(airy_zero(-1), DomainError);
}

TEST_CASE("airy zeros interlace with zeros of the derivative") {
  // Between consecutive zeros of Ai the derivative changes sign exactly
  // once, located by a sign scan of the series derivative.
  for (int n = 0; n < 9; ++n) {
    const double a = airy_zero(n + 1).alpha;
    const double b = airy_zero(n).alpha;
    int sign_changes = 0;
    const int steps = 200;
    double prev = airy_ai_prime(a + (b - a) * 1e-3);
    for (int i = 1; i <= steps; ++i) {
      const double x = a + (b - a) * (1e-3 + (1.0 - 2e-3) * i / steps);
      const double cur = airy_ai_prime(x);
      if ((cur > 0.0) != (prev > 0.0)) ++sign_changes;
      prev = cur;
    }
    CHECK(sign_changes == 1);
  }
}
