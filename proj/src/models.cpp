#include "kinbound/models.hpp"

#include <cmath>
#include <limits>
#include <sstream>

#include "kinbound/errors.hpp"
#include "kinbound/expr.hpp"

namespace kinbound::models {

namespace {

// Construction-time consistency check: the claimed derivative must agree
// with a central finite difference at 50 log-spaced points, and must be
// strictly positive. The tolerance carries an explicit allowance for
// finite-difference rounding so flat functions with a large offset do not
// fail spuriously near the lower end of the interval.
void validate_pair(const std::function<double(double)>& f,
                   const std::function<double(double)>& df, double lo,
                   double hi, const std::string& tag) {
  if (!(lo > 0.0) || !(hi > lo))
    throw ModelError(tag + ": working domain must satisfy 0 < lo < hi");
  const double span = std::log(hi / lo);
  for (int i = 0; i < 50; ++i) {
    const double x = lo * std::exp(span * (i + 0.5) / 50.0);
    double fx, dfx, fp, fm;
    const double h = 1e-6 * x;
    try {
      fx = f(x);
      dfx = df(x);
      fp = f(x + h);
      fm = f(x - h);
    } catch (const DomainError& e) {
      throw ModelError(tag + ": evaluation failed inside the working domain at x=" +
                       std::to_string(x) + " (" + e.what() + ")");
    }
    if (!std::isfinite(fx) || !std::isfinite(dfx))
      throw ModelError(tag + ": non-finite value inside the working domain at x=" +
                       std::to_string(x));
    if (!(dfx > 0.0))
      throw ModelError(tag + ": derivative must be strictly positive on the working domain (x=" +
                       std::to_string(x) + ")");
    const double fd = (fp - fm) / (2.0 * h);
    const double eps = std::numeric_limits<double>::epsilon();
    const double noise = 100.0 * eps * (std::fabs(fp) + std::fabs(fm)) / (2.0 * h);
    if (std::fabs(fd - dfx) > 1e-6 * (1.0 + std::fabs(dfx)) + noise) {
      std::ostringstream msg;
      msg << tag << ": derivative disagrees with finite differences at x=" << x
          << " (claimed " << dfx << ", measured " << fd << ")";
      throw ModelError(msg.str());
    }
  }
}

void require_positive(double v, const char* what, const std::string& tag) {
  if (!(v > 0.0)) throw ModelError(tag + ": parameter " + what + " must be positive");
}

std::string fmt(double v) {
  std::ostringstream out;
  out << v;
  return out.str();
}

// Shrink the upper end of an expression model's domain until both the
// value and the derivative evaluate finitely there.
double fit_upper_end(const expr::Expr& f, const expr::Expr& df, double lo,
                     double hi, const std::string& tag) {
  for (int i = 0; i < 120; ++i) {
    if (hi <= 16.0 * lo)
      throw ModelError(tag + ": no usable working domain (evaluation fails everywhere)");
    try {
      (void)f(hi);
      (void)df(hi);
      return hi;
    } catch (const DomainError&) {
      hi *= 0.5;
    }
  }
  throw ModelError(tag + ": no usable working domain");
}

}  // namespace

AuxiliaryPowerLaw::AuxiliaryPowerLaw(double lambda) : lambda_(lambda) {
  if (!(lambda > -2.0) || lambda == 0.0)
    throw ModelError("auxiliary power law requires lambda > -2 and lambda != 0, got " +
                     fmt(lambda));
}

double AuxiliaryPowerLaw::P(double r) const { return sign() * std::pow(r, lambda_); }

double AuxiliaryPowerLaw::dP(double r) const {
  return std::fabs(lambda_) * std::pow(r, lambda_ - 1.0);
}

double AuxiliaryPowerLaw::P_inv(double y) const {
  const double t = sign() * y;
  if (!(t > 0.0))
    throw DomainError("power-law inverse: argument outside the range of P");
  return std::pow(t, 1.0 / lambda_);
}

KineticModel make_kinetic(std::function<double(double)> T,
                          std::function<double(double)> dT, std::string tag,
                          double p_lo, double p_hi) {
  validate_pair(T, dT, p_lo, p_hi, tag);
  return {std::move(T), std::move(dT), std::move(tag), p_lo, p_hi};
}

PotentialModel make_potential(std::function<double(double)> V,
                              std::function<double(double)> dV, std::string tag,
                              double r_lo, double r_hi) {
  validate_pair(V, dV, r_lo, r_hi, tag);
  return {std::move(V), std::move(dV), std::move(tag), r_lo, r_hi};
}

KineticModel catalog_kinetic(const std::string& name,
                             const std::vector<double>& params) {
  if (name == "quadratic") {
    if (params.size() != 1) throw ModelError("quadratic kinetic takes one parameter {m}");
    const double m = params[0];
    require_positive(m, "m", name);
    return make_kinetic([m](double p) { return p * p / (2.0 * m); },
                        [m](double p) { return p / m; },
                        "quadratic(m=" + fmt(m) + ")");
  }
  if (name == "relativistic") {
    if (params.empty() || params.size() > 2)
      throw ModelError("relativistic kinetic takes {m} or {m, sigma}");
    const double m = params[0];
    const double sigma = params.size() == 2 ? params[1] : 1.0;
    if (m < 0.0) throw ModelError("relativistic kinetic: m must be non-negative");
    require_positive(sigma, "sigma", name);
    return make_kinetic(
        [m, sigma](double p) { return sigma * std::hypot(p, m); },
        [m, sigma](double p) { return sigma * p / std::hypot(p, m); },
        "relativistic(m=" + fmt(m) + ",sigma=" + fmt(sigma) + ")");
  }
  if (name == "ultrarelativistic") {
    if (params.size() > 1) throw ModelError("ultrarelativistic kinetic takes {[sigma]}");
    const double sigma = params.empty() ? 1.0 : params[0];
    require_positive(sigma, "sigma", name);
    return make_kinetic([sigma](double p) { return sigma * p; },
                        [sigma](double) { return sigma; },
                        "ultrarelativistic(sigma=" + fmt(sigma) + ")");
  }
  if (name == "gaussian") {
    if (params.size() != 2) throw ModelError("gaussian kinetic takes {sigma, m}");
    const double sigma = params[0], m = params[1];
    require_positive(sigma, "sigma", name);
    require_positive(m, "m", name);
    // Cap the domain where exp(p^2/2m^2) reaches ~1e14 so evaluation
    // stays well inside double range.
    const double p_hi = m * std::sqrt(2.0 * std::log(1e14));
    return make_kinetic(
        [sigma, m](double p) { return sigma * m * std::exp(p * p / (2.0 * m * m)); },
        [sigma, m](double p) {
          return sigma / m * p * std::exp(p * p / (2.0 * m * m));
        },
        "gaussian(sigma=" + fmt(sigma) + ",m=" + fmt(m) + ")", 1e-8, p_hi);
  }
  throw ModelError("unknown kinetic model '" + name + "'");
}

PotentialModel catalog_potential(const std::string& name,
                                 const std::vector<double>& params) {
  if (name == "power") {
    if (params.size() != 2) throw ModelError("power potential takes {a, lambda}");
    const double a = params[0], lambda = params[1];
    require_positive(a, "a", name);
    AuxiliaryPowerLaw aux(lambda);  // validates lambda
    return make_potential([a, aux](double r) { return a * aux.P(r); },
                          [a, aux](double r) { return a * aux.dP(r); },
                          "power(a=" + fmt(a) + ",lambda=" + fmt(lambda) + ")");
  }
  if (name == "coulomb") {
    if (params.size() != 1) throw ModelError("coulomb potential takes {e2}");
    const double e2 = params[0];
    require_positive(e2, "e2", name);
    return make_potential([e2](double r) { return -e2 / r; },
                          [e2](double r) { return e2 / (r * r); },
                          "coulomb(e2=" + fmt(e2) + ")");
  }
  if (name == "linear") {
    if (params.size() != 1) throw ModelError("linear potential takes {a}");
    const double a = params[0];
    require_positive(a, "a", name);
    return make_potential([a](double r) { return a * r; },
                          [a](double) { return a; }, "linear(a=" + fmt(a) + ")");
  }
  if (name == "harmonic") {
    if (params.size() != 1) throw ModelError("harmonic potential takes {a}");
    const double a = params[0];
    require_positive(a, "a", name);
    return make_potential([a](double r) { return a * r * r; },
                          [a](double r) { return 2.0 * a * r; },
                          "harmonic(a=" + fmt(a) + ")");
  }
  throw ModelError("unknown potential model '" + name + "'");
}

KineticModel kinetic_from_expr(const std::string& source, double p_lo,
                               double p_hi) {
  const auto f = expr::Expr::parse(source, "p");
  const auto df = f.derivative();
  p_hi = fit_upper_end(f, df, p_lo, p_hi, "kinetic '" + source + "'");
  return make_kinetic([f](double p) { return f(p); },
                      [df](double p) { return df(p); }, "expr(" + source + ")",
                      p_lo, p_hi);
}

PotentialModel potential_from_expr(const std::string& source, double r_lo,
                                   double r_hi) {
  const auto f = expr::Expr::parse(source, "r");
  const auto df = f.derivative();
  r_hi = fit_upper_end(f, df, r_lo, r_hi, "potential '" + source + "'");
  return make_potential([f](double r) { return f(r); },
                        [df](double r) { return df(r); }, "expr(" + source + ")",
                        r_lo, r_hi);
}

KineticModel sum_kinetic(const KineticModel& a, const KineticModel& b) {
  const auto Ta = a.T, Tb = b.T, da = a.dT, db = b.dT;
  return make_kinetic([Ta, Tb](double p) { return Ta(p) + Tb(p); },
                      [da, db](double p) { return da(p) + db(p); },
                      a.tag + " + " + b.tag, std::max(a.p_lo, b.p_lo),
                      std::min(a.p_hi, b.p_hi));
}

}  // namespace kinbound::models
