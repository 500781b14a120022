#pragma once

// Transmission line with a SQUID-tuned Josephson energy. A tanh ramp of the
// Josephson energy changes the mode frequency from omega_i to omega_f and
// creates pairs with Bogoliubov coefficients alpha, beta; the pair maps onto
// the squeezing chi of one adiabatic stroke.
//
// SI units at this boundary (H, F, J/F, rad/s, K); the engine inside uses
// hbar = k_B = 1 with the expansion-branch omega_i as the energy unit.

#include <complex>
#include <string>
#include <vector>

#include "su11/core.hpp"
#include "su11/metrology.hpp"

namespace su11::circuit {

inline constexpr double kHbar = 1.054571817e-34;       // J s
inline constexpr double kBoltzmann = 1.380649e-23;     // J / K
inline constexpr double kFluxQuantum = 2.067833848e-15;  // Wb

enum class Branch { compression, expansion };

const char* to_string(Branch branch);

struct CircuitParams {
  double inductance = 60e-12;   // H
  double capacitance = 0.4e-12;  // F
  double e0_over_c = 1e-9;      // J / F
  double a = 1.0;
  double b = 0.78;
  // Ramp rapidity. In units of the expansion-branch omega_i unless
  // nu_absolute, in which case rad/s.
  double nu = 20.0;
  bool nu_absolute = false;
  int n_cell = 100;
  int mode = 1;
  double flux_quantum = kFluxQuantum;
  double t_hot = 2.0;    // K
  double t_cold = 0.01;  // K

  // Throws DomainError on non-physical values (A > B >= 0, 1 <= j < N_cell, ...).
  void validate() const;
};

// E(t)/C = (E0/C)[A +- B tanh(nu t)], + for compression. t in seconds.
double josephson_energy_over_c(double t, const CircuitParams& params, Branch branch);

// omega_j = sqrt(4 sin^2(pi j / N_cell)/(L C) + (2 pi / Phi0)^2 E/C), rad/s.
double dispersion(int j, double e_over_c, const CircuitParams& params);

struct AsymptoticFrequencies {
  double omega_i;
  double omega_f;
};

AsymptoticFrequencies asymptotic_frequencies(const CircuitParams& params, Branch branch);

// Rapidity in rad/s.
double nu_absolute(const CircuitParams& params);

// half:    omega_+- = (omega_f +- omega_i) / 2 (satisfies |alpha|^2 - |beta|^2 = 1)
// sum:     omega_+ = omega_i + omega_f, omega_- = omega_f - omega_i
enum class FrequencyConvention { half, sum };

struct BogoliubovOptions {
  FrequencyConvention convention = FrequencyConvention::half;
  bool verify = true;
  double identity_tolerance = 1e-8;
};

struct BogoliubovPair {
  std::complex<double> alpha;
  std::complex<double> beta;
  double omega_i;
  double omega_f;
  double nu;
  double identity_defect;  // |alpha|^2 - |beta|^2 - 1
};

// Gamma quotients evaluated as exp(sum of log Gamma). omega_i == omega_f gives
// alpha = 1, beta = 0. Throws IdentityViolationError when verify is set and
// the identity defect exceeds the tolerance.
BogoliubovPair bogoliubov(double omega_i, double omega_f, double nu, const BogoliubovOptions& options = {});

struct Coupling {
  double re_ab;
  double im_ab;
};

Coupling coupling_coefficients(const BogoliubovPair& pair);

// (1 + 2|beta|^2)^2 - 4 Re{ab}^2 - 4 Im{ab}^2 - 1
double coupling_identity_defect(const BogoliubovPair& pair);

// cosh f_y = 1 + 2|beta|^2, sinh f_y = -2 Re{alpha beta}, theta = -omega_f t_f.
// chi = -f_y with the sign moved into theta. Throws ImaginaryCouplingError when
// |Im{alpha beta}| > tolerance. t_f is in the inverse unit of the pair frequencies.
ProtocolEndpoints map_to_protocol(const BogoliubovPair& pair, double t_f, double im_tolerance = 1e-3);

struct ScenarioOptions {
  int points = 512;
  DerivativeMode mode = DerivativeMode::chain;
  double im_tolerance = 1e-3;
  double target_eta_norm = 0.23;
  double target_dphi_norm = 0.56;
};

struct ScenarioRow {
  double t_f;    // s
  double theta;
  double zeta;
  double phi;
  double chi;
  double eta;
  double eta_norm;
  double dphi_h;
  double dphi_norm;
  std::string flags;  // "ok" or a '|'-joined list
};

struct BranchResult {
  Branch branch;
  AsymptoticFrequencies frequencies;
  BogoliubovPair pair;
  double chi;
};

struct ScenarioReport {
  BranchResult expansion;
  BranchResult compression;
  double energy_unit_kelvin;  // hbar omega_i(expansion) / k_B
  double nu_rad_per_s;
  // Engine in natural units: omega2 = 1 (expansion omega_i), omega1 = omega_f/omega_i.
  double omega1;
  double omega2;
  double t_hot;
  double t_cold;
  double eta_carnot;
  double chi_max;  // NaN when there is no engine regime
  bool in_engine_regime;
  std::vector<ScenarioRow> rows;
  int optimal_row;     // smallest dphi_norm, -1 if no valid row
  int best_match_row;  // closest (eta_norm, dphi_norm) to the targets, -1 if none
  double eta_norm;     // at optimal_row
  double dphi_norm;    // at optimal_row
  double deviation_eta;   // eta_norm - target
  double deviation_dphi;  // dphi_norm - target
  std::vector<std::string> notes;
};

ScenarioReport circuit_scenario(const CircuitParams& params, const ScenarioOptions& options = {});

}  // namespace su11::circuit
