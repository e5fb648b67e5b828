#ifndef KINBOUND_ORACLE_HPP
#define KINBOUND_ORACLE_HPP

#include <optional>
#include <string>
#include <vector>

#include "kinbound/models.hpp"

namespace kinbound::oracle {

enum class Backend { momentum_grid, oscillator_basis };

// size: grid points or basis dimension; 0 picks the backend default and
// lets the solver refine until the size-doubling change drops below
// tolerance. Explicit sizes must be at least 16. cutoff: grid extent or
// basis scale; 0 selects it automatically.
struct OracleConfig {
  Backend backend = Backend::momentum_grid;
  int size = 0;
  double cutoff = 0.0;
  int states = 1;
  double tolerance = 1e-6;
};

struct OracleSpectrum {
  int l = 0;
  std::vector<double> eigenvalues;
  double convergence_estimate = 0.0;
  std::string backend_used;
};

// Spectrum of T(p) + r^2 for arbitrary kinetic T, solved in momentum
// representation where r^2 acts as the radial Laplacian and T is a plain
// multiplication. growth_rate is k when T ~ exp(k p^2); it fixes the grid
// extent so the largest matrix entry stays near 1e12.
OracleSpectrum solve_momentum_grid(const models::KineticModel& T,
                                   std::optional<double> growth_rate, int l,
                                   const OracleConfig& cfg);

// Spectrum of T(p) + V(r) in a radial oscillator basis of scale b. The
// basis is self-reciprocal under the radial Fourier transform, so T enters
// through momentum-space quadrature and V through position-space
// quadrature. b comes from cfg.cutoff, or from a scan minimizing the
// ground state when cutoff is 0.
OracleSpectrum solve_oscillator_basis(const models::KineticModel& T,
                                      const models::PotentialModel& V, int l,
                                      const OracleConfig& cfg);

// Spectrum of p^2/2 + sgn(lambda) c r^lambda on a position-space grid.
OracleSpectrum solve_power_law(const models::AuxiliaryPowerLaw& aux, double c,
                               int l, const OracleConfig& cfg);

enum class Observable { p_squared, r_lambda };

// Expectation value of p^2 or r^lambda on the (n, l) eigenstate of
// p^2/(2 nu) + rho P(r), grid-refined with Richardson extrapolation until
// the value is stable to cfg.tolerance.
double expectation(Observable what, double nu, double rho,
                   const models::AuxiliaryPowerLaw& aux, int n, int l,
                   const OracleConfig& cfg);

// |<p T'(p)> - <r V'(r)>| on the (n, l) eigenstate of T + V. Quadratic T
// uses the position grid, quadratic V the momentum grid, anything else the
// oscillator basis.
double virial_residual(const models::KineticModel& T,
                       const models::PotentialModel& V, int n, int l,
                       const OracleConfig& cfg);

}  // namespace kinbound::oracle

#endif
