#include "kinbound/semiclassical.hpp"

#include <cmath>

#include "kinbound/errors.hpp"

namespace kinbound::semiclassical {

double effective_mass(const models::KineticModel& T, double p) {
  double v = T.dT(p);
  if (!(v > 0.0) || !std::isfinite(v))
    throw DomainError("dispersion slope vanishes, no effective mass");
  return p / v;
}

OrbitSolution solve_orbit(const models::KineticModel& T1,
                          const std::optional<models::KineticModel>& T2,
                          const models::PotentialModel& V, int l,
                          envelope::RootPolicy policy) {
  if (l < 0) throw ConfigError("orbital quantum number l must be non-negative");
  const models::KineticModel total = T2 ? models::sum_kinetic(T1, *T2) : T1;
  const double Q = l + 0.5;
  const auto point = envelope::solve_radius(total, V, Q, policy);

  OrbitSolution orbit;
  orbit.l = l;
  orbit.r0 = point.r0;
  orbit.p0 = point.p0;
  orbit.E = point.E;
  orbit.v1 = T1.dT(point.p0);
  orbit.v2 = T2 ? T2->dT(point.p0) : 0.0;
  const double vsum = orbit.v1 + orbit.v2;
  orbit.r1 = point.r0 * orbit.v1 / vsum;
  orbit.r2 = point.r0 * orbit.v2 / vsum;
  orbit.F = V.dV(point.r0);
  orbit.m1eff = effective_mass(T1, point.p0);
  orbit.m2eff = T2 ? effective_mass(*T2, point.p0) : 0.0;
  return orbit;
}

}  // namespace kinbound::semiclassical
