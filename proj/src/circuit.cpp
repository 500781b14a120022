#include "su11/circuit.hpp"

#include <cmath>
#include <limits>

#include "su11/errors.hpp"
#include "su11/numerics.hpp"
#include "su11/otto.hpp"
#include "su11/special.hpp"

namespace su11::circuit {

using numerics::kPi;
using cplx = std::complex<double>;

const char* to_string(Branch branch) { return branch == Branch::compression ? "compression" : "expansion"; }

void CircuitParams::validate() const {
  auto positive = [](double v, const char* name) {
    if (!std::isfinite(v) || v <= 0.0) throw DomainError(std::string(name) + " must be positive");
  };
  positive(inductance, "inductance");
  positive(capacitance, "capacitance");
  positive(e0_over_c, "e0_over_c");
  positive(nu, "nu");
  positive(flux_quantum, "flux_quantum");
  positive(t_hot, "t_hot");
  positive(t_cold, "t_cold");
  if (!(b >= 0.0) || !(a > b)) throw DomainError("Josephson constants need A > B >= 0");
  if (n_cell < 2) throw DomainError("n_cell must be >= 2");
  if (mode < 1 || mode >= n_cell) {
    throw DomainError("mode index j = " + std::to_string(mode) + " outside 1 <= j < N_cell = " +
                      std::to_string(n_cell));
  }
}

double josephson_energy_over_c(double t, const CircuitParams& params, Branch branch) {
  const double sign = branch == Branch::compression ? 1.0 : -1.0;
  return params.e0_over_c * (params.a + sign * params.b * std::tanh(nu_absolute(params) * t));
}

double dispersion(int j, double e_over_c, const CircuitParams& params) {
  if (j < 0 || j >= params.n_cell) throw DomainError("mode index outside 0 <= j < N_cell");
  if (e_over_c < 0.0) throw DomainError("Josephson energy must be >= 0");
  // k_j dx / 2 = pi j / N_cell: the cell length drops out.
  const double s = std::sin(kPi * j / params.n_cell);
  const double g = 2.0 * kPi / params.flux_quantum;
  return std::sqrt(4.0 * s * s / (params.inductance * params.capacitance) + g * g * e_over_c);
}

AsymptoticFrequencies asymptotic_frequencies(const CircuitParams& params, Branch branch) {
  const double low = dispersion(params.mode, params.e0_over_c * (params.a - params.b), params);
  const double high = dispersion(params.mode, params.e0_over_c * (params.a + params.b), params);
  // Expansion: E runs from E0(A + B) down to E0(A - B); compression the reverse.
  if (branch == Branch::expansion) return {high, low};
  return {low, high};
}

double nu_absolute(const CircuitParams& params) {
  if (params.nu_absolute) return params.nu;
  return params.nu * asymptotic_frequencies(params, Branch::expansion).omega_i;
}

BogoliubovPair bogoliubov(double omega_i, double omega_f, double nu, const BogoliubovOptions& options) {
  for (double v : {omega_i, omega_f, nu}) {
    if (!std::isfinite(v) || v <= 0.0) throw DomainError("bogoliubov needs positive omega_i, omega_f, nu");
  }
  BogoliubovPair p{cplx(1.0), cplx(0.0), omega_i, omega_f, nu, 0.0};
  if (std::abs(omega_f - omega_i) <= 1e-14 * std::max(omega_i, omega_f)) return p;

  const bool half = options.convention == FrequencyConvention::half;
  const double w_plus = half ? 0.5 * (omega_f + omega_i) : omega_f + omega_i;
  const double w_minus = half ? 0.5 * (omega_f - omega_i) : omega_f - omega_i;
  const cplx i(0.0, 1.0);
  const double a = omega_i / nu;
  const double f = omega_f / nu;
  const double pl = w_plus / nu;
  const double mi = w_minus / nu;

  const cplx common = 0.5 * std::log(omega_f / omega_i) + complex_log_gamma(1.0 - i * a);
  const cplx log_alpha = common + complex_log_gamma(-i * f) - complex_log_gamma(-i * pl) - complex_log_gamma(1.0 - i * pl);
  const cplx log_beta = common + complex_log_gamma(i * f) - complex_log_gamma(i * mi) - complex_log_gamma(1.0 + i * mi);
  p.alpha = std::exp(log_alpha);
  p.beta = std::exp(log_beta);
  p.identity_defect = std::norm(p.alpha) - std::norm(p.beta) - 1.0;
  if (options.verify && !(std::abs(p.identity_defect) <= options.identity_tolerance)) {
    throw IdentityViolationError("|alpha|^2 - |beta|^2 - 1 = " + std::to_string(p.identity_defect), p.identity_defect);
  }
  return p;
}

Coupling coupling_coefficients(const BogoliubovPair& pair) {
  const cplx ab = pair.alpha * pair.beta;
  return {ab.real(), ab.imag()};
}

double coupling_identity_defect(const BogoliubovPair& pair) {
  const Coupling c = coupling_coefficients(pair);
  const double ch = 1.0 + 2.0 * std::norm(pair.beta);
  return ch * ch - 4.0 * c.re_ab * c.re_ab - 4.0 * c.im_ab * c.im_ab - 1.0;
}

ProtocolEndpoints map_to_protocol(const BogoliubovPair& pair, double t_f, double im_tolerance) {
  const Coupling c = coupling_coefficients(pair);
  if (std::abs(c.im_ab) > im_tolerance) {
    throw ImaginaryCouplingError("Im{alpha beta} = " + std::to_string(c.im_ab) + " exceeds " +
                                     std::to_string(im_tolerance) + "; the endpoint Hamiltonian has no real form",
                                 std::abs(c.im_ab));
  }
  const double magnitude = numerics::acosh_clamped(1.0 + 2.0 * std::norm(pair.beta));
  const double f_y = -2.0 * c.re_ab < 0.0 ? -magnitude : magnitude;
  const double theta = numerics::wrap_pi(-pair.omega_f * t_f);
  return ProtocolEndpoints::from_signed(-f_y, theta);
}

namespace {

BranchResult run_branch(const CircuitParams& params, Branch branch, double nu) {
  const AsymptoticFrequencies w = asymptotic_frequencies(params, branch);
  const BogoliubovPair pair = bogoliubov(w.omega_i, w.omega_f, nu);
  return {branch, w, pair, numerics::acosh_clamped(1.0 + 2.0 * std::norm(pair.beta))};
}

void add_flag(std::string& flags, const char* flag) {
  if (flags == "ok") flags.clear();
  if (!flags.empty()) flags += '|';
  flags += flag;
}

}  // namespace

ScenarioReport circuit_scenario(const CircuitParams& params, const ScenarioOptions& options) {
  params.validate();
  if (options.points < 1) throw DomainError("scenario needs at least one t_f point");
  constexpr double nan = std::numeric_limits<double>::quiet_NaN();

  ScenarioReport r{};
  r.nu_rad_per_s = nu_absolute(params);
  r.expansion = run_branch(params, Branch::expansion, r.nu_rad_per_s);
  r.compression = run_branch(params, Branch::compression, r.nu_rad_per_s);

  const double unit = r.expansion.frequencies.omega_i;
  r.energy_unit_kelvin = kHbar * unit / kBoltzmann;
  r.omega2 = 1.0;
  r.omega1 = r.expansion.frequencies.omega_f / unit;
  r.t_hot = params.t_hot / r.energy_unit_kelvin;
  r.t_cold = params.t_cold / r.energy_unit_kelvin;
  const EngineConfig config = EngineConfig::relaxed(r.omega1, r.omega2, r.t_hot, r.t_cold);
  r.eta_carnot = carnot(config);
  r.chi_max = nan;
  try {
    r.chi_max = chi_max(config);
  } catch (const NoEngineRegimeError&) {
    r.notes.emplace_back("no squeezing gives positive work for these frequencies and temperatures");
  }
  const double chi = r.expansion.chi;
  r.in_engine_regime = std::isfinite(r.chi_max) && chi < r.chi_max;

  if (params.b == 0.0) r.notes.emplace_back("B = 0: static line, no pair creation and no friction");
  if (std::abs(r.compression.chi - chi) > 1e-12 * std::max(1.0, chi)) {
    r.notes.emplace_back("compression and expansion squeezings differ by " +
                         std::to_string(std::abs(r.compression.chi - chi)) + "; the expansion value is used");
  }

  const double period = 2.0 * kPi / r.expansion.frequencies.omega_f;
  const double eta_c = r.eta_carnot;
  r.rows.reserve(options.points);
  for (int k = 0; k < options.points; ++k) {
    ScenarioRow row{period * k / options.points, nan, nan, nan, chi, nan, nan, nan, nan, "ok"};
    try {
      const ProtocolEndpoints ep = map_to_protocol(r.expansion.pair, row.t_f, options.im_tolerance);
      row.theta = ep.theta();
      row.chi = ep.chi();
      row.eta = efficiency_closed_form(config, ep.chi());
      row.eta_norm = eta_c > 0.0 ? row.eta / eta_c : nan;
      const AnglesSolution sol = angles_from(ep);
      if (sol.identity_family) add_flag(row.flags, "identity");
      row.zeta = sol.angles.zeta();
      row.phi = sol.angles.phi();
      const PhaseError e = delta_phi(config, row.zeta, row.phi, Observable::energy, options.mode);
      row.dphi_h = e.value;
      row.dphi_norm = e.value / snl(config, row.zeta).delta_phi;
      if (e.divergent) add_flag(row.flags, "divergent");
    } catch (const ImaginaryCouplingError&) {
      add_flag(row.flags, "imaginary_coupling");
    } catch (const NoSolutionError&) {
      add_flag(row.flags, "no_solution");
    } catch (const Error&) {
      add_flag(row.flags, "error");
    }
    if (!r.in_engine_regime) add_flag(row.flags, "not_engine");
    r.rows.push_back(std::move(row));
  }

  r.optimal_row = -1;
  r.best_match_row = -1;
  double best_dphi = std::numeric_limits<double>::infinity();
  double best_distance = std::numeric_limits<double>::infinity();
  for (int k = 0; k < static_cast<int>(r.rows.size()); ++k) {
    const ScenarioRow& row = r.rows[k];
    if (!std::isfinite(row.dphi_norm) || !std::isfinite(row.eta_norm)) continue;
    if (row.dphi_norm < best_dphi) {
      best_dphi = row.dphi_norm;
      r.optimal_row = k;
    }
    const double distance = std::hypot(row.eta_norm - options.target_eta_norm, row.dphi_norm - options.target_dphi_norm);
    if (distance < best_distance) {
      best_distance = distance;
      r.best_match_row = k;
    }
  }
  if (r.optimal_row >= 0) {
    r.eta_norm = r.rows[r.optimal_row].eta_norm;
    r.dphi_norm = r.rows[r.optimal_row].dphi_norm;
  } else {
    r.eta_norm = nan;
    r.dphi_norm = nan;
    r.notes.emplace_back("no t_f point maps to a valid (zeta, phi)");
  }
  r.deviation_eta = r.eta_norm - options.target_eta_norm;
  r.deviation_dphi = r.dphi_norm - options.target_dphi_norm;
  return r;
}

}  // namespace su11::circuit
