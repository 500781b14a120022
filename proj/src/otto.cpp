#include "su11/otto.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "su11/errors.hpp"
#include "su11/numerics.hpp"

namespace su11 {

namespace {

void require_chi(double chi) {
  if (!(chi >= 0.0) || !std::isfinite(chi)) throw DomainError("chi must be finite and >= 0");
}

double coth_deviation(double beta_omega) {
  const double exact = numerics::coth(0.5 * beta_omega);
  return std::abs(exact - 2.0 / beta_omega) / exact;
}

}  // namespace

CycleEnergies stage_energies(const EngineConfig& config, double chi) {
  require_chi(chi);
  const double c = std::cosh(chi);
  const double cc = config.coth_cold();
  const double ch = config.coth_hot();
  return {config.omega1() * cc, config.omega2() * c * cc, config.omega2() * ch, config.omega1() * c * ch};
}

CycleReport works_and_heats(const EngineConfig& config, double chi) {
  const CycleEnergies e = stage_energies(config, chi);
  CycleReport r{};
  r.energies = e;
  r.w_ab = e.h_b - e.h_a;
  r.q_bc = e.h_c - e.h_b;
  r.w_cd = e.h_d - e.h_c;
  r.q_da = e.h_a - e.h_d;
  r.first_law_residual = r.w_ab + r.q_bc + r.w_cd + r.q_da;
  r.w_net = -(r.w_ab + r.w_cd);
  r.eta = r.w_net / r.q_bc;
  const FrictionSplit f = friction_work(config, chi);
  r.w_fric = f.w_fric;
  r.w_ad = f.w_ad;
  r.is_engine = r.w_net > 0.0 && r.q_bc > 0.0;
  return r;
}

double efficiency_closed_form(const EngineConfig& config, double chi) {
  require_chi(chi);
  const double c = std::cosh(chi);
  const double cc = config.coth_cold();
  const double ch = config.coth_hot();
  return 1.0 + config.omega1() * (cc - c * ch) / (config.omega2() * (ch - c * cc));
}

double efficiency(const EngineConfig& config, double chi) {
  const CycleReport r = works_and_heats(config, chi);
  if (!(r.q_bc > 0.0)) throw NotAnEngineError("no heat is absorbed from the hot bath");
  if (!(r.w_net > 0.0)) throw NotAnEngineError("the cycle produces no net work");
  return efficiency_closed_form(config, chi);
}

FrictionSplit friction_work(const EngineConfig& config, double chi) {
  require_chi(chi);
  const double s = std::sinh(0.5 * chi);
  const double ch = config.coth_hot();
  return {2.0 * config.omega1() * s * s * ch, (config.omega1() - config.omega2()) * ch};
}

RatioBound temperature_ratio_bound(const EngineConfig& config, double chi, double regime_tolerance) {
  require_chi(chi);
  const double w1 = config.omega1();
  const double w2 = config.omega2();
  const double c = std::cosh(chi);
  RatioBound b{};
  b.actual_ratio = config.t_hot() / config.t_cold();
  const double denom = w2 - w1 * c;
  b.required_ratio =
      denom > 0.0 ? (w2 / w1) * (w2 * c - w1) / denom : std::numeric_limits<double>::infinity();
  b.holds = b.actual_ratio > b.required_ratio;
  b.coth_deviation = std::max(coth_deviation(config.beta_cold() * w1), coth_deviation(config.beta_hot() * w2));
  b.regime_ok = b.coth_deviation <= regime_tolerance;
  if (!b.regime_ok) {
    b.warning = "high-temperature approximation coth(x/2) ~ 2/x is off by " +
                std::to_string(100.0 * b.coth_deviation) + "% for this configuration";
  }
  return b;
}

double carnot(const EngineConfig& config) { return 1.0 - config.t_cold() / config.t_hot(); }

double otto_ideal(const EngineConfig& config) { return 1.0 - config.omega1() / config.omega2(); }

}  // namespace su11
