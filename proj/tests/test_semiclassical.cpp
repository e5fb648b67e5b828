#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>
#include <optional>

#include "doctest.h"
#include "kinbound/errors.hpp"
#include "kinbound/semiclassical.hpp"
#include "kinbound/toy.hpp"

using namespace kinbound;
using namespace kinbound::semiclassical;
using kinbound::models::catalog_kinetic;
using kinbound::models::catalog_potential;

TEST_CASE("effective mass follows the dispersion relation") {
  const auto quad = catalog_kinetic("quadratic", {3.0});
  CHECK(effective_mass(quad, 0.1) == doctest::Approx(3.0).epsilon(1e-14));
  CHECK(effective_mass(quad, 42.0) == doctest::Approx(3.0).epsilon(1e-14));

  const auto rel = catalog_kinetic("relativistic", {2.0});
  CHECK(effective_mass(rel, 1.0) == doctest::Approx(std::sqrt(5.0)).epsilon(1e-14));

  const auto toy = toy::kinetic(1.0);
  CHECK(effective_mass(toy, 0.7) ==
        doctest::Approx(std::exp(-0.49) / 2.0).epsilon(1e-14));
}

TEST_CASE("equal particles split the separation in half") {
  const auto part = catalog_kinetic("quadratic", {2.0});
  const auto V = catalog_potential("coulomb", {1.0});
  const auto orbit = solve_orbit(part, part, V, 0);
  const double Q = 0.5;
  CHECK(orbit.r1 == doctest::Approx(orbit.r2).epsilon(1e-14));
  CHECK(orbit.r1 + orbit.r2 == doctest::Approx(orbit.r0).epsilon(1e-14));
  CHECK(orbit.r0 == doctest::Approx(Q * Q).epsilon(1e-12));
  CHECK(orbit.E == doctest::Approx(-0.5 / (Q * Q)).epsilon(1e-12));
  CHECK(orbit.r0 * orbit.p0 == doctest::Approx(Q).epsilon(1e-12));
}

TEST_CASE("unequal masses sit at radii in inverse mass ratio") {
  const auto one = catalog_kinetic("quadratic", {1.0});
  const auto three = catalog_kinetic("quadratic", {3.0});
  const auto V = catalog_potential("harmonic", {1.0});
  const auto orbit = solve_orbit(one, three, V, 1);
  CHECK(orbit.r1 / orbit.r2 == doctest::Approx(3.0).epsilon(1e-12));
  CHECK(orbit.v1 / orbit.v2 == doctest::Approx(3.0).epsilon(1e-12));
  CHECK(orbit.r1 + orbit.r2 == doctest::Approx(orbit.r0).epsilon(1e-14));
  // rigid rotation: common angular velocity
  CHECK(orbit.v1 / orbit.r1 == doctest::Approx(orbit.v2 / orbit.r2).epsilon(1e-12));
}

TEST_CASE("force balance holds for both particles") {
  const auto a = catalog_kinetic("relativistic", {1.0});
  const auto b = catalog_kinetic("relativistic", {2.0});
  const auto V = catalog_potential("linear", {0.7});
  const auto orbit = solve_orbit(a, b, V, 2);
  CHECK(std::abs(orbit.F - V.dV(orbit.r0)) <= 1e-10 * std::abs(V.dV(orbit.r0)));
  CHECK(orbit.p0 * orbit.v1 / orbit.r1 ==
        doctest::Approx(orbit.F).epsilon(1e-10));
  CHECK(orbit.p0 * orbit.v2 / orbit.r2 ==
        doctest::Approx(orbit.F).epsilon(1e-10));
  CHECK(orbit.m1eff * orbit.v1 == doctest::Approx(orbit.p0).epsilon(1e-12));
  CHECK(orbit.m2eff * orbit.v2 == doctest::Approx(orbit.p0).epsilon(1e-12));
}

TEST_CASE("one-body orbits degenerate gracefully") {
  const auto T = catalog_kinetic("ultrarelativistic", {});
  const auto V = catalog_potential("linear", {1.0});
  const auto orbit = solve_orbit(T, std::nullopt, V, 2);
  const double Q = 2.5;
  CHECK(orbit.r0 == doctest::Approx(std::sqrt(Q)).epsilon(1e-12));
  CHECK(orbit.E == doctest::Approx(2.0 * std::sqrt(Q)).epsilon(1e-12));
  CHECK(orbit.r1 == doctest::Approx(orbit.r0).epsilon(1e-14));
  CHECK(orbit.r2 == 0.0);
  CHECK(orbit.v2 == 0.0);
  CHECK(orbit.m2eff == 0.0);
}

TEST_CASE("semiclassical and quantum quantizations differ only through Q") {
  const auto T = catalog_kinetic("ultrarelativistic", {});
  const auto V = catalog_potential("harmonic", {1.0});
  const auto orbit = solve_orbit(T, std::nullopt, V, 0);
  const models::AuxiliaryPowerLaw aux(2.0);
  const auto quantum =
      envelope::solve_envelope(T, V, aux, qnumbers::QuantumState{0, 0, 1.5});
  CHECK(orbit.E == doctest::Approx(3.0 * std::cbrt(0.25 / 4.0)).epsilon(1e-12));
  CHECK(orbit.E < quantum.E);
  CHECK_THROWS_AS(solve_orbit(T, std::nullopt, V, -1), ConfigError);
}
