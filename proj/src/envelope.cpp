#include "kinbound/envelope.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <string>
#include <vector>

#include "kinbound/errors.hpp"

namespace kinbound::envelope {
namespace {

constexpr int kScanPoints = 200;
constexpr int kConstSamples = 25;
constexpr double kConstSpread = 1e-12;
constexpr double kPinSlack = 1e-9;

double finite_or_throw(double v, const char* what) {
  if (!std::isfinite(v)) throw DomainError(std::string(what) + " is not finite");
  return v;
}

// Log-spaced interior sample, i in [0, count).
double log_point(double lo, double hi, int i, int count) {
  return lo * std::exp(std::log(hi / lo) * (i + 0.5) / count);
}

// A map is degenerate when its sampled range collapses; the midpoint sample
// is then the pinned parameter value.
struct MapProbe {
  bool constant = false;
  double pinned = 0.0;
};

MapProbe probe_map(const std::function<double(double)>& f, double lo, double hi) {
  double fmin = 0.0, fmax = 0.0;
  for (int i = 0; i < kConstSamples; ++i) {
    double v = f(log_point(lo, hi, i, kConstSamples));
    if (i == 0) fmin = fmax = v;
    fmin = std::min(fmin, v);
    fmax = std::max(fmax, v);
  }
  double scale = std::max(std::abs(fmin), std::abs(fmax));
  MapProbe out;
  out.constant = (fmax - fmin) <= kConstSpread * scale;
  out.pinned = f(std::sqrt(lo * hi));
  return out;
}

// Bracketed inversion of a continuous map on [lo, hi]: scan for sign changes
// of f - target, demand exactly one, bisect, then polish with secant steps.
double invert_map(const std::function<double(double)>& f, double lo, double hi,
                  double target, const char* name) {
  std::vector<std::pair<double, double>> brackets;
  double xp = 0.0, gp = 0.0;
  bool have_prev = false;
  for (int i = 0; i <= kScanPoints; ++i) {
    double x = lo * std::exp(std::log(hi / lo) * i / kScanPoints);
    double g;
    try {
      g = f(x) - target;
    } catch (const DomainError&) {
      have_prev = false;
      continue;
    }
    if (!std::isfinite(g)) {
      have_prev = false;
      continue;
    }
    if (g == 0.0) brackets.emplace_back(x, x);
    else if (have_prev && gp * g < 0.0) brackets.emplace_back(xp, x);
    xp = x;
    gp = g;
    have_prev = true;
  }
  if (brackets.empty())
    throw NoRootError(std::string(name) + ": target value is outside the sampled range");
  if (brackets.size() > 1) {
    std::vector<double> roots;
    for (auto& b : brackets) roots.push_back(0.5 * (b.first + b.second));
    throw AmbiguousRootError(
        std::string(name) + ": map is not monotone, several preimages exist",
        std::move(roots));
  }
  auto [a, b] = brackets.front();
  if (a == b) return a;
  double ga = f(a) - target;
  while (b - a > 1e-15 * b) {
    double m = 0.5 * (a + b);
    if (m <= a || m >= b) break;
    double gm = f(m) - target;
    if (ga * gm <= 0.0) b = m;
    else a = m, ga = gm;
  }
  return 0.5 * (a + b);
}

MapProbe probe_L(const models::KineticModel& T) {
  return probe_map([&](double p) { return p / T.dT(p); }, T.p_lo, T.p_hi);
}

MapProbe probe_K(const models::PotentialModel& V, const models::AuxiliaryPowerLaw& aux) {
  return probe_map([&](double r) { return V.dV(r) / aux.dP(r); }, V.r_lo, V.r_hi);
}

bool at_pin(double value, double pinned) {
  return std::abs(value - pinned) <= kPinSlack * std::max(std::abs(pinned), 1e-300);
}

// Kinetic part of the energy surface, T(J(nu)) - J(nu)^2/(2 nu); zero for a
// quadratic T at its pinned mass.
double kinetic_term(const models::KineticModel& T, double nu) {
  auto probe = probe_L(T);
  if (probe.constant) {
    if (at_pin(nu, probe.pinned)) return 0.0;
    throw DegenerateMapError("kinetic map is constant, nu is pinned", probe.pinned);
  }
  double J = invert_map([&](double p) { return p / T.dT(p); }, T.p_lo, T.p_hi, nu,
                        "map_J");
  return T.T(J) - J * J / (2.0 * nu);
}

// Potential part, V(I(rho)) - rho P(I(rho)); zero when V is proportional to P.
double potential_term(const models::PotentialModel& V,
                      const models::AuxiliaryPowerLaw& aux, double rho) {
  auto probe = probe_K(V, aux);
  if (probe.constant) {
    if (at_pin(rho, probe.pinned)) return 0.0;
    throw DegenerateMapError("potential map is constant, rho is pinned", probe.pinned);
  }
  double I = invert_map([&](double r) { return V.dV(r) / aux.dP(r); }, V.r_lo, V.r_hi,
                        rho, "map_I");
  return V.V(I) - rho * aux.P(I);
}

}  // namespace

RadialPoint solve_radius(const models::KineticModel& T, const models::PotentialModel& V,
                         double Q, RootPolicy policy) {
  if (!(Q > 0.0)) throw ConfigError("global quantum number Q must be positive");
  double lo = std::max(V.r_lo, Q / T.p_hi);
  double hi = std::min(V.r_hi, Q / T.p_lo);
  if (!(lo < hi))
    throw NoRootError("kinetic and potential working domains are incompatible");

  auto F = [&](double r) { return Q / r * T.dT(Q / r) - r * V.dV(r); };

  std::vector<std::pair<double, double>> brackets;
  double xp = 0.0, fp = 0.0;
  bool have_prev = false;
  for (int i = 0; i <= kScanPoints; ++i) {
    double x = lo * std::exp(std::log(hi / lo) * i / kScanPoints);
    double f;
    try {
      f = F(x);
    } catch (const DomainError&) {
      have_prev = false;
      continue;
    }
    if (!std::isfinite(f)) {
      have_prev = false;
      continue;
    }
    if (f == 0.0) brackets.emplace_back(x, x);
    else if (have_prev && fp * f < 0.0) brackets.emplace_back(xp, x);
    xp = x;
    fp = f;
    have_prev = true;
  }
  if (brackets.empty())
    throw NoRootError("stationarity equation has no sign change on the working domain");

  std::vector<double> roots;
  for (auto [a, b] : brackets) {
    if (a != b) {
      double fa = F(a);
      while (b - a > 1e-13 * b) {
        double m = 0.5 * (a + b);
        if (m <= a || m >= b) break;
        double fm = F(m);
        if (fa * fm <= 0.0) b = m;
        else a = m, fa = fm;
      }
    }
    double r = 0.5 * (a + b);
    for (int it = 0; it < 3; ++it) {
      double h = 1e-7 * r;
      double d = (F(r + h) - F(r - h)) / (2.0 * h);
      if (!std::isfinite(d) || d == 0.0) break;
      double next = r - F(r) / d;
      if (!std::isfinite(next) || next <= lo || next >= hi) break;
      r = next;
    }
    roots.push_back(r);
  }

  double r0 = 0.0;
  if (roots.size() == 1) r0 = roots.front();
  else if (policy == RootPolicy::smallest) r0 = roots.front();
  else if (policy == RootPolicy::largest) r0 = roots.back();
  else
    throw AmbiguousRootError(
        "stationarity equation has " + std::to_string(roots.size()) +
            " roots; pick a selection policy",
        std::move(roots));

  RadialPoint out;
  out.r0 = r0;
  out.p0 = Q / r0;
  out.E = finite_or_throw(T.T(out.p0) + V.V(r0), "stationary energy");
  out.residual = std::abs(out.p0 * T.dT(out.p0) - r0 * V.dV(r0));
  double scale = std::max(std::abs(r0 * V.dV(r0)), 1.0);
  if (out.residual > 1e-10 * scale)
    throw ConvergenceError("stationary point refinement missed the residual bound");
  return out;
}

EnvelopeSolution solve_envelope(const models::KineticModel& T,
                                const models::PotentialModel& V,
                                const models::AuxiliaryPowerLaw& aux,
                                const qnumbers::QuantumState& state,
                                RootPolicy policy) {
  RadialPoint rp = solve_radius(T, V, state.Q, policy);
  EnvelopeSolution sol;
  sol.r0 = rp.r0;
  sol.p0 = rp.p0;
  sol.E = rp.E;
  sol.residual = rp.residual;
  sol.nu0 = rp.p0 / T.dT(rp.p0);
  sol.rho0 = V.dV(rp.r0) / aux.dP(rp.r0);
  sol.bound = classify::classify_bound(T, V, aux);
  return sol;
}

double map_K(const models::PotentialModel& V, const models::AuxiliaryPowerLaw& aux,
             double r) {
  return finite_or_throw(V.dV(r) / aux.dP(r), "K(r)");
}

double map_L(const models::KineticModel& T, double p) {
  return finite_or_throw(p / T.dT(p), "L(p)");
}

double map_I(const models::PotentialModel& V, const models::AuxiliaryPowerLaw& aux,
             double rho) {
  auto probe = probe_K(V, aux);
  if (probe.constant)
    throw DegenerateMapError("potential is proportional to the power law, rho is pinned",
                             probe.pinned);
  return invert_map([&](double r) { return V.dV(r) / aux.dP(r); }, V.r_lo, V.r_hi, rho,
                    "map_I");
}

double map_J(const models::KineticModel& T, double nu) {
  auto probe = probe_L(T);
  if (probe.constant)
    throw DegenerateMapError("kinetic term is quadratic, nu is pinned", probe.pinned);
  return invert_map([&](double p) { return p / T.dT(p); }, T.p_lo, T.p_hi, nu, "map_J");
}

double epsilon_power_law(double nu, double rho, const models::AuxiliaryPowerLaw& aux,
                         double Q) {
  if (!(nu > 0.0 && rho > 0.0 && Q > 0.0))
    throw ConfigError("epsilon_power_law needs nu, rho, Q all positive");
  double lam = aux.lambda();
  return (lam + 2.0) / (2.0 * lam) *
         std::pow(std::abs(lam) * rho, 2.0 / (lam + 2.0)) *
         std::pow(Q * Q / nu, lam / (lam + 2.0));
}

double tilde_T(const models::KineticModel& T, double nu, double p) {
  auto probe = probe_L(T);
  if (probe.constant) {
    if (at_pin(nu, probe.pinned)) return T.T(p);
    throw DegenerateMapError("kinetic map is constant, nu is pinned", probe.pinned);
  }
  return p * p / (2.0 * nu) + kinetic_term(T, nu);
}

double tilde_V(const models::PotentialModel& V, const models::AuxiliaryPowerLaw& aux,
               double rho, double r) {
  auto probe = probe_K(V, aux);
  if (probe.constant) {
    if (at_pin(rho, probe.pinned)) return V.V(r);
    throw DegenerateMapError("potential map is constant, rho is pinned", probe.pinned);
  }
  return rho * aux.P(r) + potential_term(V, aux, rho);
}

double energy_surface(const models::KineticModel& T, const models::PotentialModel& V,
                      const models::AuxiliaryPowerLaw& aux, double Q, double nu,
                      double rho) {
  return kinetic_term(T, nu) + potential_term(V, aux, rho) +
         epsilon_power_law(nu, rho, aux, Q);
}

std::pair<double, double> stationarity_gradient(const models::KineticModel& T,
                                                const models::PotentialModel& V,
                                                const models::AuxiliaryPowerLaw& aux,
                                                double Q, const EnvelopeSolution& sol) {
  double scale = std::max(std::abs(sol.E), 1e-300);
  auto component = [&](bool along_nu) {
    double x0 = along_nu ? sol.nu0 : sol.rho0;
    double h = 1e-5 * x0;
    try {
      double up = along_nu ? energy_surface(T, V, aux, Q, x0 + h, sol.rho0)
                           : energy_surface(T, V, aux, Q, sol.nu0, x0 + h);
      double dn = along_nu ? energy_surface(T, V, aux, Q, x0 - h, sol.rho0)
                           : energy_surface(T, V, aux, Q, sol.nu0, x0 - h);
      return std::abs((up - dn) / (2.0 * h)) * x0 / scale;
    } catch (const DegenerateMapError&) {
      return 0.0;  // pinned direction, no freedom to vary
    }
  };
  return {component(true), component(false)};
}

MeanTargets hellmann_feynman_targets(const EnvelopeSolution& sol,
                                     const models::AuxiliaryPowerLaw& aux) {
  return {sol.p0 * sol.p0, std::pow(sol.r0, aux.lambda())};
}

}  // namespace kinbound::envelope
