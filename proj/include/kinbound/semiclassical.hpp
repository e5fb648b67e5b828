#ifndef KINBOUND_SEMICLASSICAL_HPP
#define KINBOUND_SEMICLASSICAL_HPP

#include <optional>

#include "kinbound/envelope.hpp"
#include "kinbound/models.hpp"

namespace kinbound::semiclassical {

// Circular two-body orbit with a common momentum modulus p0: the particles
// sit at radii r1 + r2 = r0 rotating rigidly (v1/r1 = v2/r2) around the
// center of mass, bound by the central force F = V'(r0), with the orbital
// angular momentum quantized as r0 p0 = l + 1/2.
struct OrbitSolution {
  double r0 = 0.0;
  double p0 = 0.0;
  double r1 = 0.0;
  double r2 = 0.0;
  double v1 = 0.0;
  double v2 = 0.0;
  double F = 0.0;
  double m1eff = 0.0;
  double m2eff = 0.0;
  double E = 0.0;
  int l = 0;
};

// m_eff = p / T'(p): the mass for which p = m_eff v, with v = T'(p) the
// group velocity of the dispersion relation.
double effective_mass(const models::KineticModel& T, double p);

// Solves the orbit through the stationary radial system with T = T1 + T2 and
// Q = l + 1/2, then partitions radius and speed by v_i = T_i'(p0),
// r_i = r0 v_i / (v1 + v2). A one-body problem omits T2; then r2 = v2 = 0.
OrbitSolution solve_orbit(const models::KineticModel& T1,
                          const std::optional<models::KineticModel>& T2,
                          const models::PotentialModel& V, int l,
                          envelope::RootPolicy policy = envelope::RootPolicy::unique);

}  // namespace kinbound::semiclassical

#endif
