#include "kinbound/toy.hpp"

#include <cmath>

#include "kinbound/errors.hpp"
#include "kinbound/special.hpp"

namespace kinbound::toy {

ToyParams reduce(double sigma, double m, double a) {
  if (!(sigma > 0.0 && m > 0.0 && a > 0.0))
    throw ConfigError("toy parameters sigma, m, a must all be positive");
  return {sigma, m, a, a / (2.0 * sigma * m * m * m)};
}

double epsilon_app(double k, double Q) {
  if (!(k > 0.0 && Q > 0.0)) throw ConfigError("epsilon_app needs k > 0 and Q > 0");
  double w = special::lambert_w0(std::sqrt(k) * Q / 2.0);
  return std::exp(2.0 * w) * (1.0 + 2.0 * w);
}

double epsilon_ho(double k, double Q) {
  if (!(k > 0.0 && Q > 0.0)) throw ConfigError("epsilon_ho needs k > 0 and Q > 0");
  return 1.0 + 2.0 * std::sqrt(k) * Q;
}

double energy_app(const ToyParams& par, double Q) {
  return par.sigma * par.m * epsilon_app(par.k, Q);
}

models::KineticModel kinetic(double k) {
  if (!(k > 0.0)) throw ConfigError("toy coupling k must be positive");
  double p_hi = std::sqrt(std::log(1e13) / k);
  return models::make_kinetic(
      [k](double p) { return std::exp(k * p * p); },
      [k](double p) { return 2.0 * k * p * std::exp(k * p * p); }, "toy", 1e-8, p_hi);
}

}  // namespace kinbound::toy
