#ifndef KINBOUND_ENVELOPE_HPP
#define KINBOUND_ENVELOPE_HPP

#include <utility>

#include "kinbound/classify.hpp"
#include "kinbound/models.hpp"
#include "kinbound/qnumbers.hpp"

namespace kinbound::envelope {

// Root selection when the stationarity equation has several solutions on the
// working domain. `unique` demands exactly one and throws otherwise.
enum class RootPolicy { unique, smallest, largest };

// Stationary point of the scalar reduction
//   F(r) = (Q/r) T'(Q/r) - r V'(r) = 0,  p0 = Q/r0,  E = T(p0) + V(r0).
struct RadialPoint {
  double r0 = 0.0;
  double p0 = 0.0;
  double E = 0.0;
  double residual = 0.0;  // |p0 T'(p0) - r0 V'(r0)|
};

RadialPoint solve_radius(const models::KineticModel& T,
                         const models::PotentialModel& V, double Q,
                         RootPolicy policy = RootPolicy::unique);

// Full solution of the auxiliary-field system for H = T(p) + V(r): the
// radial stationary point plus the recovered auxiliary parameters
//   nu0 = p0 / T'(p0),  rho0 = V'(r0) / P'(r0),
// and the convexity-based bound character of E.
struct EnvelopeSolution {
  double r0 = 0.0;
  double p0 = 0.0;
  double nu0 = 0.0;
  double rho0 = 0.0;
  double E = 0.0;
  double residual = 0.0;
  classify::BoundClass bound = classify::BoundClass::indeterminate;
};

EnvelopeSolution solve_envelope(const models::KineticModel& T,
                                const models::PotentialModel& V,
                                const models::AuxiliaryPowerLaw& aux,
                                const qnumbers::QuantumState& state,
                                RootPolicy policy = RootPolicy::unique);

// Auxiliary maps K(r) = V'(r)/P'(r) and L(p) = p/T'(p) with their inverses
// I = K^-1 and J = L^-1 found by bracketed root search. A constant map
// (V proportional to P, or quadratic T) has no inverse; map_I and map_J then
// throw DegenerateMapError carrying the pinned parameter value.
double map_K(const models::PotentialModel& V, const models::AuxiliaryPowerLaw& aux,
             double r);
double map_L(const models::KineticModel& T, double p);
double map_I(const models::PotentialModel& V, const models::AuxiliaryPowerLaw& aux,
             double rho);
double map_J(const models::KineticModel& T, double nu);

// Eigenvalue of the auxiliary Hamiltonian p^2/(2 nu) + rho P(r):
//   ((lambda+2)/(2 lambda)) (|lambda| rho)^(2/(lambda+2)) (Q^2/nu)^(lambda/(lambda+2)).
double epsilon_power_law(double nu, double rho, const models::AuxiliaryPowerLaw& aux,
                         double Q);

// Tangent replacement operators evaluated pointwise:
//   tilde_T(p) = p^2/(2 nu) + T(J(nu)) - J(nu)^2/(2 nu)
//   tilde_V(r) = rho P(r) + V(I(rho)) - rho P(I(rho)).
// When the map is constant the operator coincides with the original and the
// parameter is pinned: the pinned value is accepted, others throw.
double tilde_T(const models::KineticModel& T, double nu, double p);
double tilde_V(const models::PotentialModel& V, const models::AuxiliaryPowerLaw& aux,
               double rho, double r);

// Energy surface whose stationary point reproduces solve_envelope:
//   E(nu, rho) = T(J) - J^2/(2 nu) + V(I) - rho P(I) + epsilon_power_law,
// with J = J(nu), I = I(rho). A degenerate direction contributes zero at its
// pinned parameter value and throws away from it.
double energy_surface(const models::KineticModel& T, const models::PotentialModel& V,
                      const models::AuxiliaryPowerLaw& aux, double Q, double nu,
                      double rho);

// Normalized central-difference gradient (relative step 1e-5) of the energy
// surface at (nu0, rho0): (|dE/dnu| nu0 / |E|, |dE/drho| rho0 / |E|).
// A pinned direction has no freedom and reports exactly zero.
std::pair<double, double> stationarity_gradient(const models::KineticModel& T,
                                                const models::PotentialModel& V,
                                                const models::AuxiliaryPowerLaw& aux,
                                                double Q, const EnvelopeSolution& sol);

// Mean values implied by the solution on the auxiliary eigenstate at
// (nu0, rho0): <p^2> = p0^2 and <r^lambda> = r0^lambda.
struct MeanTargets {
  double p_squared = 0.0;
  double r_lambda = 0.0;
};

MeanTargets hellmann_feynman_targets(const EnvelopeSolution& sol,
                                     const models::AuxiliaryPowerLaw& aux);

}  // namespace kinbound::envelope

#endif
