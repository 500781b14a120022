#pragma once

// Phase sweeps at fixed zeta. Every point is independent; Execution::parallel
// splits the grid across OpenMP threads and writes each row in place, so the
// output is identical to the serial path.

#include <vector>

#include "su11/core.hpp"
#include "su11/execution.hpp"
#include "su11/metrology.hpp"

namespace su11 {

// `points` values evenly spaced on [lo, hi], both ends included.
std::vector<double> linear_grid(double lo, double hi, int points);

struct SensitivityRow {
  double phi;
  double chi;
  double delta_phi_n;
  double delta_phi_h;
  double snl;
  double norm_n;
  double norm_h;
  double eta;       // closed-form efficiency, negative past phi_max
  double eta_norm;  // eta / eta_carnot
  bool divergent;
};

std::vector<SensitivityRow> sensitivity_sweep(const EngineConfig& config, double zeta, const std::vector<double>& phis,
                                              DerivativeMode mode, Execution execution = Execution::parallel);

struct CycleRow {
  double phi;
  double zeta;
  double chi;
  double w_ab;
  double q_bc;
  double w_cd;
  double q_da;
  double w_net;
  double eta;
  double eta_norm;
  double w_fric;
};

std::vector<CycleRow> cycle_sweep(const EngineConfig& config, double zeta, const std::vector<double>& phis,
                                  Execution execution = Execution::parallel);

}  // namespace su11
