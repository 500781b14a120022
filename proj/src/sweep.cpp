#include "su11/sweep.hpp"

#include <omp.h>

#include "su11/errors.hpp"
#include "su11/otto.hpp"

namespace su11 {

namespace {

int g_threads = 0;

}  // namespace

void set_thread_count(int n) {
  g_threads = n > 0 ? n : 0;
  if (g_threads > 0) omp_set_num_threads(g_threads);
}

int thread_count() { return g_threads > 0 ? g_threads : omp_get_max_threads(); }

std::vector<double> linear_grid(double lo, double hi, int points) {
  if (points < 2) throw DomainError("a grid needs at least 2 points");
  std::vector<double> grid(points);
  for (int i = 0; i < points; ++i) grid[i] = lo + (hi - lo) * i / (points - 1);
  grid.back() = hi;
  return grid;
}

std::vector<SensitivityRow> sensitivity_sweep(const EngineConfig& config, double zeta, const std::vector<double>& phis,
                                              DerivativeMode mode, Execution execution) {
  // Anything that can throw is checked here; exceptions must not escape the
  // parallel region.
  snl(config, zeta);
  for (double phi : phis) InterferometerAngles(zeta, phi);
  std::vector<SensitivityRow> rows(phis.size());
  const double eta_c = carnot(config);
  const long n = static_cast<long>(phis.size());
  const bool par = execution == Execution::parallel;
#pragma omp parallel for schedule(static) if (par)
  for (long i = 0; i < n; ++i) {
    const double phi = phis[i];
    const SensitivityPoint p = sensitivity(config, zeta, phi, mode);
    const double chi = chi_from(InterferometerAngles(zeta, phi));
    const double eta = efficiency_closed_form(config, chi);
    rows[i] = {phi, chi, p.delta_phi_n, p.delta_phi_h, p.snl, p.norm_n, p.norm_h, eta, eta / eta_c, p.divergent};
  }
  return rows;
}

std::vector<CycleRow> cycle_sweep(const EngineConfig& config, double zeta, const std::vector<double>& phis,
                                  Execution execution) {
  for (double phi : phis) InterferometerAngles(zeta, phi);
  std::vector<CycleRow> rows(phis.size());
  const double eta_c = carnot(config);
  const long n = static_cast<long>(phis.size());
  const bool par = execution == Execution::parallel;
#pragma omp parallel for schedule(static) if (par)
  for (long i = 0; i < n; ++i) {
    const double phi = phis[i];
    const double chi = chi_from(InterferometerAngles(zeta, phi));
    const CycleReport r = works_and_heats(config, chi);
    rows[i] = {phi, zeta, chi, r.w_ab, r.q_bc, r.w_cd, r.q_da, r.w_net, r.eta, r.eta / eta_c, r.w_fric};
  }
  return rows;
}

}  // namespace su11
