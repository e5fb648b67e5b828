#include "kinbound/classify.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "kinbound/errors.hpp"

namespace kinbound::classify {
namespace {

constexpr int kSamples = 400;
constexpr double kStep = 1e-4;   // relative second-difference step
constexpr double kTol = 1e-9;    // curvature threshold, relative to scale
constexpr double kMargin = 1e-3; // keeps stepped arguments inside the domain

struct Scan {
  Verdict verdict = Verdict::affine;
  int samples = 0;
  double max_violation = 0.0;
};

// Classify one transform from the signs of its centered second differences
// at the given abscissas (steps are relative, x (1 +- kStep)).
template <typename F>
Scan scan_curvature(F&& f, const std::vector<double>& xs) {
  Scan out;
  int convex = 0, concave = 0;
  for (double x : xs) {
    double mid, up, dn;
    try {
      mid = f(x);
      up = f(x * (1.0 + kStep));
      dn = f(x * (1.0 - kStep));
    } catch (const DomainError&) {
      continue;
    }
    if (!std::isfinite(mid) || !std::isfinite(up) || !std::isfinite(dn)) continue;
    double d2 = up - 2.0 * mid + dn;
    double scale = std::max(std::abs(mid), 1.0);
    if (d2 > kTol * scale) ++convex;
    else if (d2 < -kTol * scale) ++concave;
    out.max_violation = std::max(out.max_violation, std::abs(d2) / scale);
    ++out.samples;
  }
  if (out.samples < 16)
    throw DomainError("working domain is too small to sample curvature");
  if (convex > 0 && concave > 0) out.verdict = Verdict::mixed;
  else if (convex > 0) out.verdict = Verdict::convex;
  else if (concave > 0) out.verdict = Verdict::concave;
  else out.verdict = Verdict::affine;
  return out;
}

std::vector<double> log_grid(double lo, double hi) {
  std::vector<double> xs;
  xs.reserve(kSamples);
  for (int i = 0; i < kSamples; ++i)
    xs.push_back(lo * std::exp(std::log(hi / lo) * (i + 0.5) / kSamples));
  return xs;
}

std::pair<double, double> pick_range(std::pair<double, double> wanted, double lo,
                                     double hi) {
  if (wanted.first > 0.0 && wanted.second > wanted.first) return wanted;
  return {lo, hi};
}

}  // namespace

const char* bound_name(BoundClass b) {
  switch (b) {
    case BoundClass::lower:
      return "lower";
    case BoundClass::upper:
      return "upper";
    case BoundClass::exact:
      return "exact";
    case BoundClass::indeterminate:
      return "indeterminate";
  }
  return "indeterminate";
}

const char* verdict_name(Verdict v) {
  switch (v) {
    case Verdict::convex:
      return "convex";
    case Verdict::concave:
      return "concave";
    case Verdict::affine:
      return "affine";
    case Verdict::mixed:
      return "mixed";
  }
  return "mixed";
}

double h_of(const models::KineticModel& T, double s) {
  if (!(s > 0.0)) throw DomainError("h(s) requires s > 0");
  return T.T(std::sqrt(s));
}

double g_of(const models::PotentialModel& V, const models::AuxiliaryPowerLaw& aux,
            double y) {
  return V.V(aux.P_inv(y));
}

ConvexityReport analyze_h(const models::KineticModel& T,
                          std::pair<double, double> p_range) {
  auto [p_lo, p_hi] = pick_range(p_range, T.p_lo, T.p_hi);
  double s_lo = p_lo * p_lo * (1.0 + kMargin);
  double s_hi = p_hi * p_hi * (1.0 - kMargin);
  if (!(s_lo < s_hi))
    throw DomainError("working domain is too small to sample curvature");
  Scan scan = scan_curvature([&](double s) { return h_of(T, s); }, log_grid(s_lo, s_hi));
  return {'h', scan.verdict, scan.samples, scan.max_violation};
}

ConvexityReport analyze_g(const models::PotentialModel& V,
                          const models::AuxiliaryPowerLaw& aux,
                          std::pair<double, double> r_range) {
  auto [r_lo, r_hi] = pick_range(r_range, V.r_lo, V.r_hi);
  r_lo *= 1.0 + kMargin;
  r_hi *= 1.0 - kMargin;
  if (!(r_lo < r_hi))
    throw DomainError("working domain is too small to sample curvature");
  std::vector<double> ys;
  for (double r : log_grid(r_lo, r_hi)) ys.push_back(aux.P(r));
  Scan scan = scan_curvature([&](double y) { return g_of(V, aux, y); }, ys);
  return {'g', scan.verdict, scan.samples, scan.max_violation};
}

BoundClass classify_bound(const models::KineticModel& T,
                          const models::PotentialModel& V,
                          const models::AuxiliaryPowerLaw& aux,
                          std::pair<double, double> p_range,
                          std::pair<double, double> r_range) {
  Verdict h = analyze_h(T, p_range).verdict;
  Verdict g = analyze_g(V, aux, r_range).verdict;
  if (h == Verdict::affine && g == Verdict::affine) return BoundClass::exact;
  auto fits = [](Verdict v, Verdict want) {
    return v == want || v == Verdict::affine;
  };
  if (fits(h, Verdict::convex) && fits(g, Verdict::convex)) return BoundClass::lower;
  if (fits(h, Verdict::concave) && fits(g, Verdict::concave)) return BoundClass::upper;
  return BoundClass::indeterminate;
}

}  // namespace kinbound::classify
