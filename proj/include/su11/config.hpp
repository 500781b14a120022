#pragma once

// Scenario configuration, read from JSON. Unknown keys are fatal at every
// level. Keys carry their unit in the name where one applies (`_K`, `_H`, `_F`,
// `_J_per_F`); engine quantities are in natural units (hbar = k_B = 1, energies
// relative to omega2).

#include <filesystem>
#include <string>
#include <vector>

#include "su11/circuit.hpp"
#include "su11/core.hpp"
#include "su11/fock.hpp"
#include "su11/metrology.hpp"

namespace su11 {

struct EngineSection {
  double omega1 = 0.1;
  double omega2 = 1.0;
  double t_hot = 2.0;
  double t_cold = 0.01;

  EngineConfig engine() const { return EngineConfig(omega1, omega2, t_hot, t_cold); }
};

struct Figure3Section {
  std::vector<double> zetas{2.0, 3.0, 3.4, 4.0};
  int phi_points = 2000;
};

struct CycleSection {
  double zeta = 2.0;
  int phi_points = 2000;
};

struct OracleSection {
  int n_max = 120;
  std::vector<double> zetas{0.4, 0.8};
  std::vector<double> phis{0.3, 0.9, 2.0};
  std::vector<double> beta_omegas{0.5, 1.0};
  double omega_i = 1.0;
  double omega_f = 0.5;
  double equivalence_tolerance = 1e-8;
  double analytic_tolerance = 1e-7;
  double variance_rel_tolerance = 1e-6;
  int algebra_n_max = 30;
  double algebra_tolerance = 1e-12;
  fock::TruncationPolicy policy{};
};

struct Figure4Section {
  double omega_i = 1.0;
  double omega_f = 0.35;
  double nu_min = 0.5;
  double nu_max = 50.0;
  int nu_points = 200;  // log-spaced
};

struct CircuitSection {
  circuit::CircuitParams params{};
  int t_f_points = 512;
  double im_tolerance = 1e-3;
};

struct ScenarioConfig {
  EngineSection engine{};
  DerivativeMode derivative_mode = DerivativeMode::chain;
  Figure3Section figure3{};
  CycleSection cycle{};
  OracleSection oracle{};
  Figure4Section figure4{};
  CircuitSection circuit{};
  std::string output_dir = "out";
  bool plot_script = true;

  // Throws ConfigError (wrapping the module's own error text) on any violated
  // precondition.
  void validate() const;
};

// Throws ConfigError on malformed JSON, unknown keys, wrong types or invalid values.
ScenarioConfig parse_config(const std::string& json_text);
ScenarioConfig load_config(const std::filesystem::path& path);
std::string to_json(const ScenarioConfig& config);

}  // namespace su11
