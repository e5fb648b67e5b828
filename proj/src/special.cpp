#include "kinbound/special.hpp"

#include <cmath>
#include <string>

#include "kinbound/errors.hpp"

namespace kinbound::special {

namespace {

// ---------------------------------------------------------------------
// Lambert W, principal branch.

double w0_seed(double z) {
  if (z > 0.0) return std::log1p(z);
  // Series about the branch point z = -1/e in powers of
  // p = sqrt(2(ez + 1)).
  const double p2 = 2.0 * (std::exp(1.0) * z + 1.0);
  if (p2 <= 0.0) return -1.0;
  const double p = std::sqrt(p2);
  return -1.0 + p - p2 / 3.0 + 11.0 / 72.0 * p * p2;
}

// ---------------------------------------------------------------------
// Double-double helpers for the Airy Maclaurin series. The series terms
// near the outer zeros grow to ~1e10 before cancelling down to O(0.1),
// so plain doubles lose ten digits; carrying ~32 digits through the term
// recurrence and the compensated sum keeps the evaluation at 1e-12.

struct dd {
  double hi;
  double lo;
};

dd two_sum(double a, double b) {
  const double s = a + b;
  const double bb = s - a;
  const double err = (a - (s - bb)) + (b - bb);
  return {s, err};
}

dd dd_add(dd a, dd b) {
  dd s = two_sum(a.hi, b.hi);
  const double lo = s.lo + a.lo + b.lo;
  return two_sum(s.hi, lo);
}

dd dd_mul_d(dd a, double b) {
  const double p = a.hi * b;
  const double err = std::fma(a.hi, b, -p);
  const double lo = err + a.lo * b;
  return two_sum(p, lo);
}

dd dd_div_d(dd a, double b) {
  const double q = a.hi / b;
  const double rem = std::fma(-q, b, a.hi) + a.lo;
  return two_sum(q, rem / b);
}

dd dd_from_prod(double a, double b) {
  const double p = a * b;
  return {p, std::fma(a, b, -p)};
}

constexpr double kAiryMaxX = 13.5;

// Boundary constants: c1 = Ai(0) = 3^(-2/3)/Gamma(2/3),
// c2 = -Ai'(0) = 3^(-1/3)/Gamma(1/3), stored to double-double accuracy.
constexpr dd kC1{0.3550280538878172, 2.05233632436212e-17};
constexpr dd kC2{0.2588194037928068, -2.522243111610832e-17};

// Evaluates Ai (want_prime = false) or Ai' (true) from the two Maclaurin
// series Ai = c1 f - c2 g, where f'' = x f, g'' = x g with
// f(0)=1, f'(0)=0 and g(0)=0, g'(0)=1.
double airy_series(double x, bool want_prime) {
  if (std::fabs(x) > kAiryMaxX)
    throw DomainError("airy_ai: |x| > " + std::to_string(kAiryMaxX) +
                      " is outside the series' validated range");
  const dd x2 = dd_from_prod(x, x);
  const dd x3 = dd_mul_d(x2, x);

  dd sum{0.0, 0.0};
  if (!want_prime) {
    // f terms a_k x^{3k}: a_{k+1} = a_k x^3 /((3k+2)(3k+3));
    // g terms b_k x^{3k+1}: b_{k+1} = b_k x^3 /((3k+3)(3k+4)).
    dd tf = dd_mul_d(kC1, 1.0);
    dd tg = dd_mul_d(kC2, -x);
    sum = dd_add(tf, tg);
    for (int k = 0; k < 240; ++k) {
      tf = dd_div_d(dd_add(dd_mul_d(tf, x3.hi), dd_mul_d(tf, x3.lo)),
                    double(3 * k + 2) * double(3 * k + 3));
      tg = dd_div_d(dd_add(dd_mul_d(tg, x3.hi), dd_mul_d(tg, x3.lo)),
                    double(3 * k + 3) * double(3 * k + 4));
      sum = dd_add(sum, dd_add(tf, tg));
      if (std::fabs(tf.hi) + std::fabs(tg.hi) <
          1e-26 * (std::fabs(sum.hi) + 1e-280))
        break;
    }
  } else {
    // f' terms start at 3 a_1 x^2 = x^2/2 with ratio
    // x^3 (k+1) / (k (3k+2)(3k+3)); g' terms start at 1 with ratio
    // x^3 / ((3k-2) 3k). All divisors must stay exact integers or the
    // double-double error bound is lost.
    dd tf = dd_div_d(dd_add(dd_mul_d(x2, kC1.hi), dd_mul_d(x2, kC1.lo)), 2.0);
    dd tg = dd_mul_d(kC2, -1.0);
    sum = dd_add(tf, tg);
    for (int k = 1; k < 240; ++k) {
      tf = dd_mul_d(dd_add(dd_mul_d(tf, x3.hi), dd_mul_d(tf, x3.lo)),
                    double(k + 1));
      tf = dd_div_d(tf, double(k) * double(3 * k + 2) * double(3 * k + 3));
      tg = dd_div_d(dd_add(dd_mul_d(tg, x3.hi), dd_mul_d(tg, x3.lo)),
                    double(3 * k - 2) * double(3 * k));
      sum = dd_add(sum, dd_add(tf, tg));
      if (std::fabs(tf.hi) + std::fabs(tg.hi) <
          1e-26 * (std::fabs(sum.hi) + 1e-280))
        break;
    }
  }
  return sum.hi + sum.lo;
}

}  // namespace

double lambert_w0(double z) {
  if (std::isnan(z)) throw DomainError("lambert_w0: NaN argument");
  const double branch = -std::exp(-1.0);
  if (z < branch) {
    if (z > branch * (1.0 + 1e-12))  // within rounding of the branch point
      return -1.0;
    throw DomainError("lambert_w0: argument below -1/e");
  }
  if (z == 0.0) return 0.0;

  double w = w0_seed(z);
  // Halley iteration on f(w) = w e^w - z.
  for (int iter = 0; iter < 60; ++iter) {
    const double ew = std::exp(w);
    const double f = w * ew - z;
    if (std::fabs(f) <= 1e-13 * (1.0 + std::fabs(z))) break;
    const double fp = ew * (1.0 + w);
    const double fpp = ew * (2.0 + w);
    const double dw = f / (fp - 0.5 * f * fpp / fp);
    w -= dw;
    if (w < -1.0) w = -1.0 + 1e-14;  // stay on the principal branch
    if (std::fabs(dw) <= 1e-16 * (1.0 + std::fabs(w))) break;
  }
  return w;
}

double airy_ai(double x) { return airy_series(x, false); }

double airy_ai_prime(double x) { return airy_series(x, true); }

AiryZero airy_zero(int n) {
  if (n < 0 || n > 9)
    throw DomainError("airy_zero: index must be in [0, 9]");
  // The first ten zeros all lie in (-13.1, -2.2) and are separated by
  // more than 0.9, so a fixed-step scan brackets each one exactly once.
  const double step = 0.05;
  int found = -1;
  double a = -2.0, b = 0.0;
  double fa = airy_ai(a);
  while (a > -13.2) {
    b = a - step;
    const double fb = airy_ai(b);
    if ((fa > 0.0) != (fb > 0.0)) {
      ++found;
      if (found == n) {
        // Bisection, then two Newton steps with the series derivative.
        double lo = b, hi = a, flo = fb;
        for (int i = 0; i < 80; ++i) {
          const double mid = 0.5 * (lo + hi);
          if (mid == lo || mid == hi) break;
          const double fm = airy_ai(mid);
          if ((fm > 0.0) == (flo > 0.0)) {
            lo = mid;
            flo = fm;
          } else {
            hi = mid;
          }
        }
        double z = 0.5 * (lo + hi);
        for (int i = 0; i < 2; ++i) z -= airy_ai(z) / airy_ai_prime(z);
        return {n, z};
      }
    }
    a = b;
    fa = fb;
  }
  throw ConvergenceError("airy_zero: scan failed to bracket the zero");
}

}  // namespace kinbound::special
