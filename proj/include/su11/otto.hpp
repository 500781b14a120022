#pragma once

// Four-stroke cycle A -> B (compression, squeeze chi) -> C (hot bath) ->
// D (expansion, squeeze chi) -> A (cold bath). Works and heats are positive
// when energy flows into the working substance.

#include <string>

#include "su11/core.hpp"

namespace su11 {

struct CycleEnergies {
  double h_a;
  double h_b;
  double h_c;
  double h_d;
};

struct CycleReport {
  CycleEnergies energies;
  double w_ab;
  double q_bc;
  double w_cd;
  double q_da;
  double w_net;  // -(w_ab + w_cd), extracted work
  // -(w_ab + w_cd) / q_bc, evaluated whether or not the cycle is an engine.
  double eta;
  double w_fric;
  double w_ad;
  double first_law_residual;
  bool is_engine;
};

CycleEnergies stage_energies(const EngineConfig& config, double chi);

CycleReport works_and_heats(const EngineConfig& config, double chi);

// Throws NotAnEngineError unless q_bc > 0 and w_net > 0.
double efficiency(const EngineConfig& config, double chi);

// 1 + omega1 (c_c - cosh chi c_h) / (omega2 (c_h - cosh chi c_c)) without the
// engine check; equals 1 - omega1/omega2 at chi = 0.
double efficiency_closed_form(const EngineConfig& config, double chi);

struct FrictionSplit {
  double w_fric;  // 2 omega1 sinh^2(chi/2) c_h
  double w_ad;    // (omega1 - omega2) c_h
};

FrictionSplit friction_work(const EngineConfig& config, double chi);

struct RatioBound {
  bool holds;
  // (omega2/omega1)(omega2 cosh chi - omega1)/(omega2 - omega1 cosh chi); +inf at
  // and beyond the pole omega2 = omega1 cosh chi.
  double required_ratio;
  double actual_ratio;  // t_hot / t_cold
  // Largest relative deviation of coth(b w/2) from 2/(b w) over both strokes.
  double coth_deviation;
  bool regime_ok;
  std::string warning;
};

// High-temperature positive-work condition. Out-of-regime inputs get a warning,
// not an error.
RatioBound temperature_ratio_bound(const EngineConfig& config, double chi, double regime_tolerance = 0.05);

double carnot(const EngineConfig& config);
double otto_ideal(const EngineConfig& config);

}  // namespace su11
