#include "kinbound/qnumbers.hpp"

#include <cmath>

#include "kinbound/errors.hpp"
#include "kinbound/models.hpp"
#include "kinbound/special.hpp"

namespace kinbound::qnumbers {

const char* provenance_name(Provenance p) {
  switch (p) {
    case Provenance::exact_coulomb:
      return "exact-coulomb";
    case Provenance::exact_harmonic:
      return "exact-harmonic";
    case Provenance::airy_linear:
      return "airy-linear";
    case Provenance::numeric:
      return "numeric";
  }
  return "numeric";
}

namespace {

void check_state(int n, int l) {
  if (n < 0 || l < 0)
    throw ConfigError("quantum numbers must satisfy n >= 0 and l >= 0");
}

}  // namespace

std::optional<QuantumState> q_exact(double lambda, int n, int l) {
  check_state(n, l);
  if (lambda == -1.0)
    return QuantumState{n, l, double(n + l + 1), Provenance::exact_coulomb};
  if (lambda == 2.0)
    return QuantumState{n, l, 2.0 * n + l + 1.5, Provenance::exact_harmonic};
  if (lambda == 1.0 && l == 0 && n <= 9) {
    // p^2/2 + r at l = 0 has eigenvalues -alpha_n 2^(-1/3); inverting the
    // power-law formula gives Q = 2 (-alpha_n / 3)^(3/2).
    double third = -special::airy_zero(n).alpha / 3.0;
    return QuantumState{n, l, 2.0 * std::pow(third, 1.5), Provenance::airy_linear};
  }
  return std::nullopt;
}

QuantumState q_numeric(double lambda, int n, int l, const oracle::OracleConfig& cfg) {
  check_state(n, l);
  models::AuxiliaryPowerLaw aux(lambda);
  oracle::OracleConfig run = cfg;
  if (run.states < n + 1) run.states = n + 1;
  double eps = oracle::solve_power_law(aux, 1.0, l, run).eigenvalues[size_t(n)];
  double base = 2.0 * lambda * eps /
                ((lambda + 2.0) * std::pow(std::abs(lambda), 2.0 / (lambda + 2.0)));
  if (!(base > 0.0))
    throw DomainError("power-law eigenvalue has the wrong sign for Q inversion");
  return QuantumState{n, l, std::pow(base, (lambda + 2.0) / (2.0 * lambda)),
                      Provenance::numeric};
}

}  // namespace kinbound::qnumbers
