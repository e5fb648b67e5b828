// Acceptance gate: one line per criterion, nonzero exit when any fails.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <exception>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "kinbound/classify.hpp"
#include "kinbound/envelope.hpp"
#include "kinbound/models.hpp"
#include "kinbound/oracle.hpp"
#include "kinbound/qnumbers.hpp"
#include "kinbound/special.hpp"
#include "kinbound/toy.hpp"

namespace {

using Clock = std::chrono::steady_clock;
using kinbound::models::AuxiliaryPowerLaw;
using kinbound::qnumbers::Provenance;
using kinbound::qnumbers::QuantumState;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::string num(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.3g", v);
  return buf;
}

int failures = 0;

void report(int idx, const char* label, const std::function<bool(std::string&)>& body) {
  std::string detail;
  bool ok = false;
  try {
    ok = body(detail);
  } catch (const std::exception& e) {
    detail = e.what();
    ok = false;
  }
  std::printf("[%s] %2d %s%s%s\n", ok ? "PASS" : "FAIL", idx, label,
              detail.empty() ? "" : ": ", detail.c_str());
  std::fflush(stdout);
  if (!ok) ++failures;
}

QuantumState state_q(double q) { return {0, 0, q, Provenance::numeric}; }

}  // namespace

int main() {
  const auto suite_start = Clock::now();

  const auto quadratic = kinbound::models::catalog_kinetic("quadratic", {1.0});
  const auto linear_T = kinbound::models::catalog_kinetic("ultrarelativistic", {1.0});
  const auto coulomb = kinbound::models::catalog_potential("coulomb", {1.0});
  const auto harmonic = kinbound::models::catalog_potential("harmonic", {1.0});
  const auto linear_V = kinbound::models::catalog_potential("linear", {1.0});
  const AuxiliaryPowerLaw aux_c(-1.0), aux_h(2.0), aux_l(1.0);

  report(1, "Coulomb and oscillator levels reproduced to 1e-12", [&](std::string& d) {
    const auto t0 = Clock::now();
    double worst = 0.0;
    bool exact = true;
    for (int n = 0; n <= 3; ++n)
      for (int l = 0; l <= 3; ++l) {
        const auto qc = *kinbound::qnumbers::q_exact(-1.0, n, l);
        const auto sc = kinbound::envelope::solve_envelope(quadratic, coulomb, aux_c, qc);
        worst = std::max(worst, std::abs(sc.E / (-0.5 / (qc.Q * qc.Q)) - 1.0));
        exact = exact && sc.bound == kinbound::classify::BoundClass::exact;
        const auto qh = *kinbound::qnumbers::q_exact(2.0, n, l);
        const auto sh = kinbound::envelope::solve_envelope(quadratic, harmonic, aux_h, qh);
        worst = std::max(worst, std::abs(sh.E / (std::sqrt(2.0) * qh.Q) - 1.0));
        exact = exact && sh.bound == kinbound::classify::BoundClass::exact;
      }
    const double dt = seconds_since(t0);
    d = "max rel err " + num(worst) + ", " + num(dt) + " s";
    return worst <= 1e-12 && exact && dt < 1.0;
  });

  report(2, "toy spectrum matches its closed form to 1e-10", [&](std::string& d) {
    const auto t0 = Clock::now();
    double worst = 0.0;
    bool lower = true;
    for (double k : {0.01, 0.1, 1.0, 10.0}) {
      const auto T = kinbound::toy::kinetic(k);
      for (double q : {1.5, 2.5, 3.5}) {
        const auto sol = kinbound::envelope::solve_envelope(T, harmonic, aux_h, state_q(q));
        worst = std::max(worst,
                         std::abs(sol.E / kinbound::toy::epsilon_app(k, q) - 1.0));
        lower = lower && sol.bound == kinbound::classify::BoundClass::lower;
      }
    }
    const double dt = seconds_since(t0);
    d = "max rel err " + num(worst) + ", " + num(dt) + " s";
    return worst <= 1e-10 && lower && dt < 1.0;
  });

  // Numeric toy spectra shared by the next three criteria. Key is the
  // coupling, value holds epsilon for states (0,0), (0,1), (1,0).
  std::map<double, std::vector<double>> numeric;
  std::string numeric_failure;
  double worst_estimate = 0.0;
  const auto grid_start = Clock::now();
  try {
    for (double k : {0.25, 0.5, 1.0, 2.0, 4.0}) {
      const auto T = kinbound::toy::kinetic(k);
      kinbound::oracle::OracleConfig cfg;
      cfg.tolerance = 1e-7;
      cfg.states = 2;
      const auto s0 = kinbound::oracle::solve_momentum_grid(T, k, 0, cfg);
      cfg.states = 1;
      const auto s1 = kinbound::oracle::solve_momentum_grid(T, k, 1, cfg);
      worst_estimate = std::max(
          {worst_estimate, s0.convergence_estimate, s1.convergence_estimate});
      numeric[k] = {s0.eigenvalues[0], s1.eigenvalues[0], s0.eigenvalues[1]};
    }
  } catch (const std::exception& e) {
    numeric_failure = e.what();
  }
  const double grid_time = seconds_since(grid_start);

  report(3, "stationary energies stay below grid spectra", [&](std::string& d) {
    if (!numeric_failure.empty()) {
      d = numeric_failure;
      return false;
    }
    double max_gap = 0.0, min_gap = 1e300;
    bool below = true;
    for (const auto& [k, eps] : numeric) {
      const double qs[3] = {1.5, 2.5, 3.5};
      for (int i = 0; i < 3; ++i) {
        const double gap = eps[i] - kinbound::toy::epsilon_app(k, qs[i]);
        below = below && gap >= -1e-6;
        max_gap = std::max(max_gap, gap);
        min_gap = std::min(min_gap, gap);
      }
    }
    d = "gap in [" + num(min_gap) + ", " + num(max_gap) + "], estimate " +
        num(worst_estimate) + ", " + num(grid_time) + " s";
    return below && worst_estimate <= 1e-6 && grid_time < 30.0;
  });

  report(4, "stationary energies beat the oscillator surrogate at strong coupling",
         [&](std::string& d) {
           if (!numeric_failure.empty()) {
             d = numeric_failure;
             return false;
           }
           bool closer = true;
           double margin = 1e300;
           for (double k : {1.0, 2.0, 4.0}) {
             const double qs[3] = {1.5, 2.5, 3.5};
             for (int i = 0; i < 3; ++i) {
               const double e = numeric.at(k)[i];
               const double da = std::abs(e - kinbound::toy::epsilon_app(k, qs[i]));
               const double dh = std::abs(e - kinbound::toy::epsilon_ho(k, qs[i]));
               closer = closer && da < dh;
               margin = std::min(margin, dh - da);
             }
           }
           d = "worst margin " + num(margin);
           return closer;
         });

  report(5, "weak coupling approaches the oscillator limit", [&](std::string& d) {
    const double k = 0.01;
    kinbound::oracle::OracleConfig cfg;
    cfg.tolerance = 1e-7;
    const auto s = kinbound::oracle::solve_momentum_grid(kinbound::toy::kinetic(k), k, 0, cfg);
    const double gap = std::abs(s.eigenvalues[0] - kinbound::toy::epsilon_ho(k, 1.5));
    d = "|numeric - oscillator| = " + num(gap);
    return gap <= 0.05;
  });

  report(6, "the energy surface is stationary at the solved point", [&](std::string& d) {
    const auto toy_T = kinbound::toy::kinetic(1.0);
    const auto sol_toy =
        kinbound::envelope::solve_envelope(toy_T, harmonic, aux_h, state_q(1.5));
    const auto g_toy = kinbound::envelope::stationarity_gradient(toy_T, harmonic, aux_h,
                                                                 1.5, sol_toy);
    const auto sol_ur =
        kinbound::envelope::solve_envelope(linear_T, harmonic, aux_h, state_q(1.5));
    const auto g_ur = kinbound::envelope::stationarity_gradient(linear_T, harmonic,
                                                                aux_h, 1.5, sol_ur);
    const double worst =
        std::max({g_toy.first, g_toy.second, g_ur.first, g_ur.second});
    d = "max |gradient| " + num(worst);
    return worst <= 1e-6;
  });

  report(7, "surface derivatives match spectral means", [&](std::string& d) {
    kinbound::oracle::OracleConfig cfg;
    cfg.tolerance = 1e-8;
    double worst = 0.0;
    const auto toy_T = kinbound::toy::kinetic(1.0);
    const auto sol_toy =
        kinbound::envelope::solve_envelope(toy_T, harmonic, aux_h, state_q(1.5));
    const auto want_toy = kinbound::envelope::hellmann_feynman_targets(sol_toy, aux_h);
    worst = std::max(worst,
                     std::abs(kinbound::oracle::expectation(
                                  kinbound::oracle::Observable::p_squared, sol_toy.nu0,
                                  sol_toy.rho0, aux_h, 0, 0, cfg) /
                                  want_toy.p_squared -
                              1.0));
    worst = std::max(worst,
                     std::abs(kinbound::oracle::expectation(
                                  kinbound::oracle::Observable::r_lambda, sol_toy.nu0,
                                  sol_toy.rho0, aux_h, 0, 0, cfg) /
                                  want_toy.r_lambda -
                              1.0));
    const auto sol_ho =
        kinbound::envelope::solve_envelope(quadratic, harmonic, aux_h, state_q(1.5));
    const auto want_ho = kinbound::envelope::hellmann_feynman_targets(sol_ho, aux_h);
    worst = std::max(worst,
                     std::abs(kinbound::oracle::expectation(
                                  kinbound::oracle::Observable::p_squared, sol_ho.nu0,
                                  sol_ho.rho0, aux_h, 0, 0, cfg) /
                                  want_ho.p_squared -
                              1.0));
    worst = std::max(worst,
                     std::abs(kinbound::oracle::expectation(
                                  kinbound::oracle::Observable::r_lambda, sol_ho.nu0,
                                  sol_ho.rho0, aux_h, 0, 0, cfg) /
                                  want_ho.r_lambda -
                              1.0));
    d = "max rel err " + num(worst);
    return worst <= 1e-5;
  });

  report(8, "special functions agree with independent integration", [&](std::string& d) {
    double worst_w = 0.0;
    for (int i = 0; i < 1000; ++i) {
      const double z = std::pow(10.0, -6.0 + 12.0 * i / 999.0);
      const double w = kinbound::special::lambert_w0(z);
      worst_w = std::max(worst_w,
                         std::abs(w * std::exp(w) - z) / (1.0 + std::abs(z)));
    }
    // Integrate y'' = x y down from x = 0 with the known values at the
    // origin, collecting the first two sign changes of y.
    double y = 0.35502805388781724, v = -0.25881940379280680;
    const double h = -1e-5;
    double x = 0.0;
    std::vector<double> roots;
    while (x > -6.0 && roots.size() < 2) {
      const double y0 = y;
      const double k1y = v, k1v = x * y;
      const double k2y = v + 0.5 * h * k1v, k2v = (x + 0.5 * h) * (y + 0.5 * h * k1y);
      const double k3y = v + 0.5 * h * k2v, k3v = (x + 0.5 * h) * (y + 0.5 * h * k2y);
      const double k4y = v + h * k3v, k4v = (x + h) * (y + h * k3y);
      y += h / 6.0 * (k1y + 2.0 * k2y + 2.0 * k3y + k4y);
      v += h / 6.0 * (k1v + 2.0 * k2v + 2.0 * k3v + k4v);
      const double x1 = x + h;
      if (y0 * y < 0.0) roots.push_back(x + h * y0 / (y0 - y));
      x = x1;
    }
    if (roots.size() < 2) {
      d = "integration found fewer than two roots";
      return false;
    }
    const double e0 = std::abs(kinbound::special::airy_zero(0).alpha - roots[0]);
    const double e1 = std::abs(kinbound::special::airy_zero(1).alpha - roots[1]);
    d = "W residual " + num(worst_w) + ", root errs " + num(e0) + ", " + num(e1);
    return worst_w <= 1e-12 && e0 <= 1e-8 && e1 <= 1e-8;
  });

  report(9, "numeric quantum numbers match the linear-confinement closed form",
         [&](std::string& d) {
           kinbound::oracle::OracleConfig cfg;
           cfg.tolerance = 1e-8;
           double worst = 0.0;
           for (int n = 0; n <= 2; ++n) {
             const double qe = kinbound::qnumbers::q_exact(1.0, n, 0)->Q;
             const double qn = kinbound::qnumbers::q_numeric(1.0, n, 0, cfg).Q;
             worst = std::max(worst, std::abs(qn / qe - 1.0));
           }
           d = "max rel err " + num(worst);
           return worst <= 1e-5;
         });

  report(10, "bound verdicts are consistent with reference spectra", [&](std::string& d) {
    using kinbound::classify::BoundClass;
    const auto toy_T = kinbound::toy::kinetic(1.0);
    bool verdicts =
        kinbound::classify::classify_bound(toy_T, harmonic, aux_h) == BoundClass::lower &&
        kinbound::classify::classify_bound(quadratic, coulomb, aux_c) == BoundClass::exact &&
        kinbound::classify::classify_bound(linear_T, harmonic, aux_h) == BoundClass::upper &&
        kinbound::classify::classify_bound(linear_T, linear_V, aux_l) == BoundClass::upper;
    if (!verdicts) {
      d = "catalog verdict mismatch";
      return false;
    }
    if (numeric.empty()) {
      d = "no grid spectra available";
      return false;
    }
    const double lower_gap =
        numeric.at(1.0)[0] - kinbound::toy::epsilon_app(1.0, 1.5);

    kinbound::oracle::OracleConfig cfg;
    cfg.tolerance = 1e-7;
    const auto basis = kinbound::oracle::solve_oscillator_basis(linear_T, harmonic, 0, cfg);
    const auto upper =
        kinbound::envelope::solve_envelope(linear_T, harmonic, aux_h, state_q(1.5));
    const double upper_gap = upper.E - basis.eigenvalues[0];

    const auto hydrogen =
        kinbound::envelope::solve_envelope(quadratic, coulomb, aux_c,
                                           *kinbound::qnumbers::q_exact(-1.0, 0, 0));
    const auto power = kinbound::oracle::solve_power_law(aux_c, 1.0, 0, cfg);
    const double exact_err = std::abs(hydrogen.E - power.eigenvalues[0]);

    d = "lower gap " + num(lower_gap) + ", upper gap " + num(upper_gap) +
        ", exact err " + num(exact_err);
    return lower_gap >= -1e-6 && upper_gap >= -1e-6 && exact_err <= 1e-6;
  });

  report(11, "the acceptance suite finishes under 60 s", [&](std::string& d) {
    const double dt = seconds_since(suite_start);
    d = num(dt) + " s";
    return dt < 60.0;
  });

  return failures == 0 ? 0 : 1;
}
