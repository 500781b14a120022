#include <doctest.h>

#include <cmath>

#include "su11/core.hpp"
#include "su11/errors.hpp"
#include "su11/numerics.hpp"

using namespace su11;
using doctest::Approx;

namespace {
const EngineConfig kEngine(0.1, 1.0, 2.0, 0.01);
}

TEST_CASE("chi and theta at a reference point") {
  const InterferometerAngles a(2.0, 0.1);
  CHECK(chi_from(a) == Approx(0.36057837857760945363).epsilon(1e-14));
  CHECK(theta_from(a) == Approx(0.18608850778588118234).epsilon(1e-14));
  CHECK(n_out(0.0, chi_from(a)) == Approx(0.065715791537976917813).epsilon(1e-13));
}

TEST_CASE("cosh form of chi agrees with the half-angle form") {
  for (double zeta : {0.1, 1.0, 3.0}) {
    for (double phi : {0.2, 1.5, 3.0}) {
      const double c = (1.0 - std::cos(phi)) * std::cosh(zeta) * std::cosh(zeta) + std::cos(phi);
      CHECK(std::cosh(chi_from(InterferometerAngles(zeta, phi))) == Approx(c).epsilon(1e-13));
    }
  }
}

TEST_CASE("angles_from inverts chi_from/theta_from") {
  for (double zeta : {0.3, 1.0, 2.5}) {
    for (double phi : {0.05, 1.0, 2.9}) {
      const InterferometerAngles a(zeta, phi);
      const AnglesSolution s = angles_from(endpoints_from(a));
      CHECK_FALSE(s.identity_family);
      CHECK(s.angles.zeta() == Approx(zeta).epsilon(1e-9));
      CHECK(s.angles.phi() == Approx(phi).epsilon(1e-9));
    }
  }
}

TEST_CASE("identity family and degenerate phase") {
  CHECK_THROWS_AS(theta_from(InterferometerAngles(1.0, 0.0)), DegeneratePhaseError);
  const AnglesSolution s = angles_from(ProtocolEndpoints(0.0, 0.7));
  CHECK(s.identity_family);
  CHECK(s.angles.zeta() == 0.0);
}

TEST_CASE("no real zeta when tan theta is too small") {
  CHECK_THROWS_AS(angles_from(ProtocolEndpoints(2.0, 0.1)), NoSolutionError);
}

TEST_CASE("signed chi flips theta by pi") {
  const ProtocolEndpoints p = ProtocolEndpoints::from_signed(-0.5, 0.3);
  CHECK(p.chi() == Approx(0.5));
  CHECK(std::abs(numerics::wrap_pi(p.theta() - 0.3 - numerics::kPi)) < 1e-14);
}

TEST_CASE("engine range") {
  CHECK(chi_max(kEngine) == Approx(1.7521007629791203365).epsilon(1e-14));
  CHECK(phi_max(2.0, chi_max(kEngine)).phi_max == Approx(0.55436918844656984609).epsilon(1e-13));
  CHECK(phi_max(0.0, chi_max(kEngine)).full_range);
  CHECK_THROWS_AS(EngineConfig(1.0, 0.5, 2.0, 1.0), DomainError);
  CHECK_THROWS_AS(EngineConfig(0.1, 1.0, 1.0, 2.0), DomainError);
  CHECK_THROWS_AS(InterferometerAngles(-1.0, 0.1), DomainError);
}

TEST_CASE("swap exchanges frequencies and baths") {
  const EngineConfig s = kEngine.swapped();
  CHECK(s.omega1() == 1.0);
  CHECK(s.omega2() == 0.1);
  CHECK(s.coth_hot() == kEngine.coth_cold());
  CHECK(s.coth_cold() == kEngine.coth_hot());
}
