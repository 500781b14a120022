#include "su11/metrology.hpp"

#include <cmath>
#include <limits>
#include <vector>

#include "su11/errors.hpp"
#include "su11/numerics.hpp"
#include "su11/otto.hpp"

namespace su11 {

using numerics::kPi;

const char* to_string(DerivativeMode mode) { return mode == DerivativeMode::paper ? "paper" : "chain"; }

const char* to_string(Observable observable) { return observable == Observable::number ? "number" : "energy"; }

DerivativeMode parse_derivative_mode(const std::string& text) {
  if (text == "paper") return DerivativeMode::paper;
  if (text == "chain") return DerivativeMode::chain;
  throw ConfigError("derivative mode must be 'paper' or 'chain', got '" + text + "'");
}

double variance_n(const EngineConfig& config, double chi) {
  const double ch = config.coth_hot();
  return 0.5 * (std::cosh(2.0 * chi) * ch * ch - 1.0);
}

double variance_h(const EngineConfig& config, double chi) {
  const double ch = config.coth_hot();
  const double w1 = config.omega1();
  return 2.0 * w1 * w1 * (variance_n(config, chi) + 0.25 * (ch * ch + 1.0));
}

double dn_dphi_paper(const EngineConfig& config, double zeta, double phi) {
  const double s = std::sinh(zeta);
  const double ch = config.coth_hot();
  return std::sin(phi) * s * s * ch * ch;
}

double dn_dphi_chain(const EngineConfig& config, double zeta, double phi) {
  // d/dphi [c_h cosh chi] with cosh chi = 1 + (1 - cos phi) sinh^2 zeta.
  const double s = std::sinh(zeta);
  return std::sin(phi) * s * s * config.coth_hot();
}

double dn_dphi(const EngineConfig& config, double zeta, double phi, DerivativeMode mode) {
  return mode == DerivativeMode::paper ? dn_dphi_paper(config, zeta, phi) : dn_dphi_chain(config, zeta, phi);
}

double number_after_expansion(const EngineConfig& config, double zeta, double phi) {
  return n_out(config.coth_hot() - 1.0, chi_from(InterferometerAngles(zeta, phi)));
}

PhaseError delta_phi(const EngineConfig& config, double zeta, double phi, Observable observable,
                     DerivativeMode mode) {
  const double chi = chi_from(InterferometerAngles(zeta, phi));
  double slope = std::abs(dn_dphi(config, zeta, phi, mode));
  double var = variance_n(config, chi);
  if (observable == Observable::energy) {
    slope *= config.omega1();
    var = variance_h(config, chi);
  }
  if (slope < 1e-300) return {std::numeric_limits<double>::infinity(), true};
  return {std::sqrt(var) / slope, false};
}

ShotNoise snl(const EngineConfig& config, double zeta) {
  const double n_phi = config.coth_hot() * std::cosh(zeta) - 1.0;
  if (!(n_phi > 0.0)) throw DomainError("no photons pass the phase shift (N_phi <= 0)");
  return {n_phi, 1.0 / std::sqrt(n_phi)};
}

SensitivityPoint sensitivity(const EngineConfig& config, double zeta, double phi, DerivativeMode mode) {
  const PhaseError n = delta_phi(config, zeta, phi, Observable::number, mode);
  const PhaseError h = delta_phi(config, zeta, phi, Observable::energy, mode);
  const double limit = snl(config, zeta).delta_phi;
  return {phi, n.value, h.value, limit, n.value / limit, h.value / limit, n.divergent || h.divergent};
}

namespace {

std::vector<double> scan_grid(const ScanOptions& options) {
  if (options.points < 3) throw DomainError("scan needs at least 3 points");
  std::vector<double> grid(options.points);
  const double a = options.phi_lo;
  const double b = kPi - options.phi_lo;
  for (int i = 0; i < options.points; ++i) grid[i] = a + (b - a) * i / (options.points - 1);
  return grid;
}

}  // namespace

SupersensitivityRange supersensitivity_range(const EngineConfig& config, double zeta, Observable observable,
                                             DerivativeMode mode, const ScanOptions& options) {
  SupersensitivityRange range;
  if (zeta == 0.0) return range;
  const double limit = snl(config, zeta).delta_phi;
  auto excess = [&](double phi) { return delta_phi(config, zeta, phi, observable, mode).value / limit - 1.0; };

  const std::vector<double> grid = scan_grid(options);
  std::vector<double> g(grid.size());
  for (std::size_t i = 0; i < grid.size(); ++i) g[i] = excess(grid[i]);

  int first = -1;
  int last = -1;
  int windows = 0;
  for (int i = 0; i < static_cast<int>(g.size()); ++i) {
    if (g[i] < 0.0) {
      if (first < 0) first = i;
      if (i == 0 || g[i - 1] >= 0.0) ++windows;
      last = i;
    }
  }
  if (first < 0) return range;

  range.empty = false;
  range.disjoint = windows > 1;
  range.lo = first == 0 ? grid[0] : numerics::bisect(excess, grid[first - 1], grid[first], options.resolution).x;
  range.hi = last + 1 == static_cast<int>(grid.size())
                 ? grid.back()
                 : numerics::bisect(excess, grid[last], grid[last + 1], options.resolution).x;
  return range;
}

SensitivityMinimum minimize_sensitivity(const EngineConfig& config, double zeta, Observable observable,
                                        DerivativeMode mode, const ScanOptions& options) {
  auto f = [&](double phi) { return delta_phi(config, zeta, phi, observable, mode).value; };
  const std::vector<double> grid = scan_grid(options);
  std::vector<double> v(grid.size());
  std::size_t best = 0;
  for (std::size_t i = 0; i < grid.size(); ++i) {
    v[i] = f(grid[i]);
    if (v[i] < v[best]) best = i;
  }

  SensitivityMinimum out{};
  out.scan_phi = grid[best];
  out.scan_value = v[best];

  for (std::size_t i = 1; i + 1 < grid.size(); ++i) {
    const bool local = v[i] < v[i - 1] && v[i] <= v[i + 1];
    const bool separate = i + 1 < best || i > best + 1;
    if (local && separate && v[i] <= 1.01 * v[best]) {
      out.non_unimodal = true;
      out.warning = "second local minimum at phi = " + std::to_string(grid[i]) + " within 1% of the best";
      break;
    }
  }

  const double a = grid[best == 0 ? 0 : best - 1];
  const double b = grid[best + 1 == grid.size() ? best : best + 1];
  const numerics::Minimum m = numerics::golden_section_minimize(f, a, b, options.tolerance);
  if (m.value <= out.scan_value) {
    out.phi_star = m.x;
    out.delta_phi_min = m.value;
  } else {
    out.phi_star = out.scan_phi;
    out.delta_phi_min = out.scan_value;
  }
  return out;
}

SnlSolution solve_zeta_snl(const EngineConfig& config, Observable observable, DerivativeMode mode,
                           const SnlOptions& options) {
  auto gap = [&](double zeta) {
    return minimize_sensitivity(config, zeta, observable, mode, options.scan).delta_phi_min / snl(config, zeta).delta_phi -
           1.0;
  };
  const numerics::Root root = numerics::bisect(gap, options.zeta_lo, options.zeta_hi, options.tolerance);
  const SensitivityMinimum m = minimize_sensitivity(config, root.x, observable, mode, options.scan);

  SnlSolution s{};
  s.zeta_snl = root.x;
  s.phi_snl = m.phi_star;
  s.chi_snl = chi_from(InterferometerAngles(root.x, m.phi_star));
  s.eta_snl = efficiency(config, s.chi_snl);
  s.delta_phi_min = m.delta_phi_min;
  s.snl = snl(config, root.x).delta_phi;
  s.iterations = root.iterations;
  return s;
}

}  // namespace su11
