#ifndef KINBOUND_TOY_HPP
#define KINBOUND_TOY_HPP

#include "kinbound/models.hpp"

namespace kinbound::toy {

// Dimensionless reduction of H = sigma m exp(p^2/(2 m^2)) + a r^2 under
// x = sqrt(a/(sigma m)) r and q = sqrt(sigma m/a) p: dividing by sigma m
// leaves H_d = exp(k q^2) + x^2 with the single coupling k = a/(2 sigma m^3),
// and every energy obeys E = sigma m epsilon.
struct ToyParams {
  double sigma = 1.0;
  double m = 1.0;
  double a = 1.0;
  double k = 0.5;
};

ToyParams reduce(double sigma, double m, double a);

// Closed-form stationary energy of the dimensionless model: with
// z = sqrt(k) Q / 2, epsilon = exp(2 W0(z)) (1 + 2 W0(z)). It is a lower
// bound of the true dimensionless eigenvalue.
double epsilon_app(double k, double Q);

// Harmonic-limit energy 1 + 2 sqrt(k) Q; epsilon_app approaches it from
// above as k -> 0, with gap k Q^2/2 + O(k^2).
double epsilon_ho(double k, double Q);

// Dimensionful stationary energy, sigma m epsilon_app.
double energy_app(const ToyParams& par, double Q);

// Dimensionless kinetic model T(q) = exp(k q^2), capped where it is still
// comfortably representable, for feeding the generic solvers.
models::KineticModel kinetic(double k);

}  // namespace kinbound::toy

#endif
