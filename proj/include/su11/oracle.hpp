#pragma once

// Closed forms against the truncated Fock space. Every check becomes one row
// of the gate CSV: (quantity, analytic, oracle, abs_err, rel_err, n_max,
// leakage, tolerance, status).

#include <string>
#include <vector>

#include "su11/config.hpp"
#include "su11/execution.hpp"

namespace su11::oracle {

// hard: the check must pass (algebra, equivalence, closed forms the engine
// relies on). formula: a closed form under arbitration; a miss is a
// discrepancy, not a failure.
enum class CheckKind { hard, formula };

struct Check {
  std::string quantity;
  double analytic;
  double oracle;
  double abs_err;
  double rel_err;
  int n_max;
  double leakage;
  double tolerance;
  CheckKind kind;
  bool relative;  // compare rel_err (otherwise abs_err) with the tolerance
  bool passed;
};

Check make_check(std::string quantity, double analytic, double oracle, int n_max, double leakage, double tolerance,
                 CheckKind kind, bool relative = false);

// Commutators, Jacobi identity, Casimir commutation, Kz = (N+1)/2 and
// [Kz, N] = 0 on the interior block.
std::vector<Check> algebra_checks(int n_max, double tolerance, Execution execution);

// <N> and log Z of the thermal state for every beta*omega in the section.
std::vector<Check> thermal_checks(const OracleSection& section, Execution execution);

struct EquivalenceOptions {
  // Throw-on-leakage guard. Off, each point is still evaluated and its leakage
  // is recorded alongside the values.
  bool enforce_guard = true;
};

// Per (zeta, phi, beta*omega): <N> and <H> under the three unitary forms,
// pairwise, plus the analytic <N_out> and omega_f cosh(chi) coth(beta omega_i/2).
std::vector<Check> equivalence_checks(const OracleSection& section, Execution execution,
                                      const EquivalenceOptions& options = {});

// Variance formulas and both dN/dphi forms against the oracle at every grid
// point with zeta > 0.
std::vector<Check> arbitration_checks(const OracleSection& section, Execution execution);

// Doubles n_max at the first grid point and compares <N>, <H>.
std::vector<Check> convergence_checks(const OracleSection& section, Execution execution);

}  // namespace su11::oracle
