#include <doctest.h>

#include <cmath>

#include "su11/circuit.hpp"
#include "su11/errors.hpp"

using namespace su11;
using namespace su11::circuit;
using doctest::Approx;

TEST_CASE("Bogoliubov coefficients at reference rates") {
  struct Ref {
    double nu, re, im, beta2;
  };
  const Ref refs[] = {
      {0.5, -0.032467406778735139459, 0.10548554427044889816, 0.012036456273348461323},
      {2.0, -0.50831868971003989231, 0.028793060129057585977, 0.21359437401098345651},
      {20.0, -0.62534241067154190721, 0.000041156620072535285375, 0.30065793712319042094},
  };
  for (const Ref& r : refs) {
    const BogoliubovPair p = bogoliubov(1.0, 0.35, r.nu);
    const Coupling c = coupling_coefficients(p);
    CAPTURE(r.nu);
    CHECK(c.re_ab == Approx(r.re).epsilon(1e-10));
    CHECK(c.im_ab == Approx(r.im).epsilon(1e-8));
    CHECK(std::norm(p.beta) == Approx(r.beta2).epsilon(1e-10));
    CHECK(std::abs(p.identity_defect) < 1e-12);
    CHECK(std::abs(coupling_identity_defect(p)) < 1e-11);
  }
}

TEST_CASE("degenerate frequencies give the identity") {
  const BogoliubovPair p = bogoliubov(1.0, 1.0, 3.0);
  CHECK(p.alpha == std::complex<double>(1.0, 0.0));
  CHECK(p.beta == std::complex<double>(0.0, 0.0));
}

TEST_CASE("sum frequency convention violates the identity") {
  BogoliubovOptions opt;
  opt.convention = FrequencyConvention::sum;
  CHECK_THROWS_AS(bogoliubov(1.0, 0.35, 2.0, opt), IdentityViolationError);
  opt.verify = false;
  CHECK(std::abs(bogoliubov(1.0, 0.35, 2.0, opt).identity_defect) > 1e-3);
}

TEST_CASE("transmission-line frequencies") {
  const CircuitParams p;
  const AsymptoticFrequencies f = asymptotic_frequencies(p, Branch::expansion);
  CHECK(f.omega_i == Approx(128835690635.99541652).epsilon(1e-12));
  CHECK(f.omega_f == Approx(46857571931.899361529).epsilon(1e-12));
}

TEST_CASE("mapping to protocol endpoints") {
  const BogoliubovPair p = bogoliubov(1.0, 0.35, 20.0);
  const ProtocolEndpoints e = map_to_protocol(p, 0.0);
  CHECK(std::cosh(e.chi()) == Approx(1.0 + 2.0 * std::norm(p.beta)).epsilon(1e-12));
  CHECK_THROWS_AS(map_to_protocol(bogoliubov(1.0, 0.35, 0.5), 0.0), ImaginaryCouplingError);
}

TEST_CASE("scenario report") {
  const ScenarioReport r = circuit_scenario(CircuitParams{});
  CHECK(r.rows.size() == 512);
  CHECK(r.in_engine_regime);
  CHECK(r.expansion.chi == Approx(1.00964).epsilon(1e-5));
  CHECK(r.eta_norm == Approx(0.23706).epsilon(1e-4));
  CHECK(r.optimal_row >= 0);
  CHECK(r.best_match_row >= 0);
}
