#ifndef KINBOUND_MODELS_HPP
#define KINBOUND_MODELS_HPP

#include <functional>
#include <string>
#include <vector>

namespace kinbound::models {

// A kinetic term T(p) with its exact derivative, valid on the working
// interval (p_lo, p_hi). Construction validates that dT matches finite
// differences of T and that dT > 0 on the interval.
struct KineticModel {
  std::function<double(double)> T;
  std::function<double(double)> dT;
  std::string tag;
  double p_lo = 1e-8;
  double p_hi = 1e8;
};

// A central potential V(r) with its exact derivative; dV > 0 required
// (attractive, monotonically rising interactions).
struct PotentialModel {
  std::function<double(double)> V;
  std::function<double(double)> dV;
  std::string tag;
  double r_lo = 1e-8;
  double r_hi = 1e8;
};

// Auxiliary power-law potential P(r) = sgn(lambda) r^lambda, which is
// strictly increasing on r > 0 for every admissible lambda.
class AuxiliaryPowerLaw {
 public:
  // Requires lambda > -2 and lambda != 0.
  explicit AuxiliaryPowerLaw(double lambda);

  double lambda() const { return lambda_; }
  double sign() const { return lambda_ > 0 ? 1.0 : -1.0; }
  double P(double r) const;
  double dP(double r) const;     // |lambda| r^(lambda-1)
  double P_inv(double y) const;  // requires sgn(lambda) y > 0

 private:
  double lambda_;
};

// Validated construction from explicit callables. Throws ModelError if the
// derivative disagrees with finite differences of the value at 50 sampled
// points or is not strictly positive on the working interval.
KineticModel make_kinetic(std::function<double(double)> T,
                          std::function<double(double)> dT, std::string tag,
                          double p_lo = 1e-8, double p_hi = 1e8);
PotentialModel make_potential(std::function<double(double)> V,
                              std::function<double(double)> dV, std::string tag,
                              double r_lo = 1e-8, double r_hi = 1e8);

// Catalog models. Kinetic names: quadratic {m}, relativistic {m[, sigma]},
// ultrarelativistic {[sigma]}, gaussian {sigma, m}. Potential names:
// power {a, lambda}, coulomb {e2}, linear {a}, harmonic {a}.
KineticModel catalog_kinetic(const std::string& name,
                             const std::vector<double>& params);
PotentialModel catalog_potential(const std::string& name,
                                 const std::vector<double>& params);

// Models defined by expression source; the variable is "p" for kinetic
// terms and "r" for potentials. The derivative is obtained symbolically.
// The upper domain end is shrunk automatically if evaluation overflows.
KineticModel kinetic_from_expr(const std::string& source, double p_lo = 1e-8,
                               double p_hi = 1e8);
PotentialModel potential_from_expr(const std::string& source, double r_lo = 1e-8,
                                   double r_hi = 1e8);

// Total kinetic energy of two particles sharing one momentum modulus.
KineticModel sum_kinetic(const KineticModel& a, const KineticModel& b);

}  // namespace kinbound::models

#endif
