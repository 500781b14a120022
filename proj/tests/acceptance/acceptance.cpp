// Acceptance runner. `acceptance --criterion N` runs one criterion, no argument
// runs all ten. One PASS/FAIL line per criterion, details indented below it.

#include <CLI11.hpp>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "su11/circuit.hpp"
#include "su11/commands.hpp"
#include "su11/core.hpp"
#include "su11/metrology.hpp"
#include "su11/numerics.hpp"
#include "su11/oracle.hpp"
#include "su11/otto.hpp"
#include "su11/sweep.hpp"

namespace fs = std::filesystem;
using namespace su11;

namespace {

struct Outcome {
  bool pass = true;
  std::vector<std::string> details;

  void expect(bool ok, const std::string& what) {
    if (!ok) pass = false;
    details.push_back(std::string(ok ? "ok   " : "MISS ") + what);
  }
  void info(const std::string& what) { details.push_back("     " + what); }
};

std::string fmt(const char* f, double a) {
  char buf[128];
  std::snprintf(buf, sizeof buf, f, a);
  return buf;
}

std::string fmt2(const char* f, double a, double b) {
  char buf[192];
  std::snprintf(buf, sizeof buf, f, a, b);
  return buf;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

const EngineConfig kEngine(0.1, 1.0, 2.0, 0.01);

Outcome criterion1() {
  Outcome o;
  const auto t0 = std::chrono::steady_clock::now();
  const SnlSolution s = solve_zeta_snl(kEngine, Observable::energy, DerivativeMode::paper);
  const double t = seconds_since(t0);
  o.expect(std::abs(s.zeta_snl - 3.4) <= 0.1, fmt("paper mode zeta_snl = %.6g (target 3.4 +- 0.1)", s.zeta_snl));
  o.expect(std::abs(s.eta_snl - 0.705) <= 0.01, fmt("paper mode eta_snl = %.6g (target 0.705 +- 0.01)", s.eta_snl));
  o.expect(t < 5.0, fmt("runtime %.3g s (< 5 s)", t));
  const SnlSolution c = solve_zeta_snl(kEngine, Observable::energy, DerivativeMode::chain);
  o.info(fmt2("chain mode for comparison: zeta_snl = %.6g, eta_snl = %.6g", c.zeta_snl, c.eta_snl));
  return o;
}

Outcome criterion2() {
  Outcome o;
  const double eta0 = efficiency(kEngine, 0.0);
  const double eta_c = carnot(kEngine);
  o.expect(std::abs(eta0 - 0.9) <= 1e-12, fmt("eta(phi=0) = %.17g", eta0));
  o.expect(std::abs(eta_c - 0.995) <= 1e-12, fmt("eta_C = %.17g", eta_c));
  return o;
}

Outcome criterion3() {
  Outcome o;
  const auto t0 = std::chrono::steady_clock::now();
  const ScanOptions scan;
  const std::vector<double> phis = linear_grid(scan.phi_lo, numerics::kPi - scan.phi_lo, 2000);
  const double cmax = chi_max(kEngine);
  std::map<double, std::pair<SupersensitivityRange, SupersensitivityRange>> ranges;
  for (double zeta : {2.0, 3.0, 3.4, 4.0}) {
    (void)sensitivity_sweep(kEngine, zeta, phis, DerivativeMode::chain, Execution::parallel);
    ranges[zeta] = {supersensitivity_range(kEngine, zeta, Observable::number, DerivativeMode::chain, scan),
                    supersensitivity_range(kEngine, zeta, Observable::energy, DerivativeMode::chain, scan)};

    const double pmax = phi_max(zeta, cmax).phi_max;
    bool monotone = true;
    double prev = std::numeric_limits<double>::infinity();
    for (double phi : phis) {
      if (phi >= pmax) break;
      const double eta = efficiency_closed_form(kEngine, chi_from(InterferometerAngles(zeta, phi)));
      if (!(eta < prev)) monotone = false;
      prev = eta;
    }
    const double at_max = efficiency_closed_form(kEngine, chi_from(InterferometerAngles(zeta, pmax)));
    o.expect(monotone, fmt("zeta=%g: eta strictly decreasing on [phi_lo, phi_max)", zeta));
    o.expect(std::abs(at_max) <= 1e-9, fmt2("zeta=%g: eta(phi_max) = %.3g", zeta, at_max));
  }
  const double t = seconds_since(t0);
  const auto& [n2, h2] = ranges[2.0];
  const auto& [n4, h4] = ranges[4.0];
  o.expect(h2.empty, "zeta=2: energy supersensitivity range empty");
  o.expect(!n4.empty && !h4.empty,
           fmt2("zeta=4: number range [%.6g, %.6g] non-empty", n4.lo, n4.hi) +
               fmt2(", energy range [%.6g, %.6g] non-empty", h4.lo, h4.hi));
  o.expect(!n4.empty && !h4.empty && n4.lo <= h4.lo && h4.hi <= n4.hi, "zeta=4: number range contains energy range");
  o.expect(t < 30.0, fmt("runtime %.3g s for four panels at 2000 points (< 30 s)", t));
  o.info("derivative mode: chain");
  return o;
}

Outcome criterion4() {
  Outcome o;
  OracleSection s;
  s.n_max = 120;
  s.zetas = {0.4, 0.8, 1.2};
  s.phis = {0.3, 0.9, 2.0};
  s.beta_omegas = {0.25, 0.5, 1.0};
  const auto t0 = std::chrono::steady_clock::now();
  const std::vector<oracle::Check> checks = oracle::equivalence_checks(s, Execution::parallel, {false});
  const double t = seconds_since(t0);
  // Worst miss per grid point.
  std::map<std::string, const oracle::Check*> worst;
  int failed = 0;
  for (const auto& c : checks) {
    if (c.passed) continue;
    ++failed;
    const std::string point = c.quantity.substr(c.quantity.find('['));
    auto& w = worst[point];
    if (!w || c.abs_err / c.tolerance > w->abs_err / w->tolerance) w = &c;
  }
  int beyond_guard = 0;
  for (const auto& [point, c] : worst) beyond_guard += c->leakage > s.policy.squeeze_leakage;
  o.info(std::to_string(worst.size()) + " of 27 points miss; " + std::to_string(beyond_guard) +
         " of them push more than " + fmt("%.0e", s.policy.squeeze_leakage) + " onto the truncation edge");
  for (const auto& [point, c] : worst) {
    char buf[256];
    std::snprintf(buf, sizeof buf, "%s worst %s err %.3g > %.3g, leakage %.3g", point.c_str(),
                  c->quantity.substr(0, c->quantity.find('[')).c_str(), c->abs_err, c->tolerance, c->leakage);
    o.info(buf);
  }
  o.expect(failed == 0, std::to_string(checks.size() - failed) + "/" + std::to_string(checks.size()) +
                            " equivalence and analytic checks pass at n_max = 120");
  o.expect(t < 60.0, fmt("runtime %.3g s (< 60 s)", t));
  return o;
}

Outcome criterion5() {
  Outcome o;
  for (const auto& c : oracle::algebra_checks(30, 1e-12, Execution::parallel)) {
    o.expect(c.passed, c.quantity + fmt(" residual %.3g", c.abs_err));
  }
  return o;
}

Outcome criterion6() {
  Outcome o;
  std::mt19937_64 rng(20240611);
  std::uniform_real_distribution<double> u01(0.0, 1.0);
  double first_law = 0.0, split = 0.0, zero = 0.0, exchange = 0.0;
  int engines = 0;
  for (int k = 0; k < 1000; ++k) {
    const double omega2 = 0.5 + 1.5 * u01(rng);
    const double omega1 = omega2 * (0.05 + 0.9 * u01(rng));
    const double t_cold = 0.01 + 0.99 * u01(rng);
    const double t_hot = t_cold * (1.5 + 20.0 * u01(rng));
    const EngineConfig cfg(omega1, omega2, t_hot, t_cold);
    const double chi = 3.0 * u01(rng);
    const CycleReport r = works_and_heats(cfg, chi);
    first_law = std::max(first_law, std::abs(r.first_law_residual));
    split = std::max(split, std::abs(r.w_cd - (r.w_ad + r.w_fric)));
    exchange = std::max(exchange, std::abs(r.w_ab - works_and_heats(cfg.swapped(), chi).w_cd));
    try {
      const double cm = chi_max(cfg);
      zero = std::max(zero, std::abs(works_and_heats(cfg, cm).w_net));
      ++engines;
    } catch (const Error&) {
    }
  }
  o.expect(first_law <= 1e-10, fmt("first law: max |W_AB + Q_BC + W_CD + Q_DA| = %.3g", first_law));
  o.expect(split <= 1e-12, fmt("W_CD = W_ad + W_fric: max |residual| = %.3g", split));
  o.expect(zero <= 1e-9, fmt("w_net(chi_max): max |w_net| = %.3g", zero) + " over " + std::to_string(engines) +
                             " configurations");
  o.expect(exchange <= 1e-12, fmt("exchange W_AB(cfg) = W_CD(swapped cfg): max |residual| = %.3g",
                                  exchange));
  return o;
}

Outcome criterion7(const fs::path& scratch) {
  Outcome o;
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> zd(0.5, 4.0), pd(0.1, 3.0);
  double worst = 0.0;
  for (int k = 0; k < 20; ++k) {
    const double zeta = zd(rng), phi = pd(rng);
    const double h = 1e-5 * std::max(1.0, phi);
    const double fd = (number_after_expansion(kEngine, zeta, phi + h) - number_after_expansion(kEngine, zeta, phi - h)) /
                      (2.0 * h);
    const double an = dn_dphi_chain(kEngine, zeta, phi);
    worst = std::max(worst, std::abs(an - fd) / std::abs(fd));
  }
  o.expect(worst <= 1e-6, fmt("dn_dphi_chain vs central difference, 20 points: max rel err %.3g", worst));

  RunContext ctx;
  ctx.config.oracle.zetas = {0.4, 0.8};
  ctx.config.oracle.phis = {0.9};
  ctx.config.oracle.beta_omegas = {0.5};
  ctx.config.plot_script = false;
  ctx.out_dir = scratch / "oracle";
  fs::create_directories(ctx.out_dir);
  const RunReport r = cmd_oracle(ctx);
  std::string paper_line;
  for (const auto& [k, v] : r.headline) {
    if (k.find("paper form") != std::string::npos) paper_line = k + ": " + v;
  }
  o.expect(!paper_line.empty(), "oracle report records the paper form: " + paper_line);
  o.expect(r.exit_status() == 2, "oracle gate exit status " + std::to_string(r.exit_status()) +
                                     " (2 = formula discrepancy only)");
  return o;
}

Outcome criterion8() {
  Outcome o;
  const Figure4Section f;
  double worst = 0.0;
  std::vector<std::pair<double, double>> tail;
  const double ratio = std::log(f.nu_max / f.nu_min);
  for (int k = 0; k < f.nu_points; ++k) {
    const double nu = k + 1 == f.nu_points ? f.nu_max : f.nu_min * std::exp(ratio * k / (f.nu_points - 1));
    const circuit::BogoliubovPair p = circuit::bogoliubov(f.omega_i, f.omega_f, nu);
    worst = std::max(worst, std::abs(p.identity_defect));
    if (nu >= 10.0) tail.emplace_back(nu, std::abs(circuit::coupling_coefficients(p).im_ab));
  }
  bool monotone = true;
  for (std::size_t k = 1; k < tail.size(); ++k) monotone = monotone && tail[k].second < tail[k - 1].second;
  const double im5 = std::abs(circuit::coupling_coefficients(circuit::bogoliubov(1.0, 0.35, 5.0)).im_ab);
  const double im50 = std::abs(circuit::coupling_coefficients(circuit::bogoliubov(1.0, 0.35, 50.0)).im_ab);
  o.expect(worst <= 1e-10, fmt("|alpha|^2 - |beta|^2 - 1: max %.3g over the sweep", worst));
  o.expect(monotone, "|Im{alpha beta}| strictly decreasing for nu >= 10 (" + std::to_string(tail.size()) + " points)");
  o.expect(im50 < 0.1 * im5, fmt2("|Im{alpha beta}|(50) = %.4g < 0.1 x |Im{alpha beta}|(5) = %.4g", im50, 0.1 * im5));
  return o;
}

Outcome criterion9() {
  Outcome o;
  const auto t0 = std::chrono::steady_clock::now();
  const circuit::ScenarioReport r = circuit::circuit_scenario(circuit::CircuitParams{}, circuit::ScenarioOptions{});
  const double t = seconds_since(t0);
  o.expect(std::isfinite(r.eta_norm) && r.eta_norm > 0.0 && r.eta_norm < 1.0, fmt("eta_norm = %.6g in (0, 1)", r.eta_norm));
  o.expect(std::isfinite(r.dphi_norm) && r.dphi_norm > 0.0, fmt("dphi_norm = %.6g > 0", r.dphi_norm));
  o.expect(std::isfinite(r.deviation_eta) && std::isfinite(r.deviation_dphi),
           fmt2("deviation from (0.23, 0.56) reported: (%.4g, %.4g)", r.deviation_eta, r.deviation_dphi));
  o.expect(r.best_match_row >= 0 && r.optimal_row >= 0, "optimal and best-match rows present");
  o.expect(t < 20.0, fmt("runtime %.3g s (< 20 s)", t));
  return o;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

Outcome criterion10(const fs::path& scratch) {
  Outcome o;
  using Cmd = std::function<RunReport(const RunContext&)>;
  const std::vector<std::pair<std::string, Cmd>> commands = {
      {"figure3", cmd_figure3}, {"figure4", cmd_figure4}, {"snl", cmd_snl},
      {"circuit", cmd_circuit}, {"cycle", cmd_cycle},     {"oracle", cmd_oracle},
  };
  for (const auto& [name, run] : commands) {
    fs::path dirs[2] = {scratch / "det_a" / name, scratch / "det_b" / name};
    for (const auto& d : dirs) {
      fs::remove_all(d);
      fs::create_directories(d);
      RunContext ctx;
      ctx.out_dir = d;
      RunReport r = run(ctx);
      write_summary(ctx, r);
    }
    int files = 0;
    bool same = true;
    for (const auto& e : fs::directory_iterator(dirs[0])) {
      if (e.path().extension() != ".csv") continue;
      ++files;
      const fs::path other = dirs[1] / e.path().filename();
      same = same && fs::exists(other) && slurp(e.path()) == slurp(other);
    }
    o.expect(same && files > 0, name + ": " + std::to_string(files) + " CSV file(s) byte-identical across two runs");
  }
  return o;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"acceptance criteria"};
  int only = 0;
  app.add_option("--criterion", only, "run one criterion (1-10)")->check(CLI::Range(1, 10));
  CLI11_PARSE(app, argc, argv);

  const fs::path scratch = fs::temp_directory_path() / "su11_acceptance";
  fs::create_directories(scratch);

  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"shot-noise squeezing, coth^2 derivative mode", criterion1},
      {"efficiency anchors", criterion2},
      {"sensitivity panels, qualitative", criterion3},
      {"unitary equivalence against the Fock oracle", criterion4},
      {"su(1,1) algebra on interior blocks", criterion5},
      {"cycle identities on a random grid", criterion6},
      {"derivative arbitration", [&] { return criterion7(scratch); }},
      {"Bogoliubov identity and coupling trend", criterion8},
      {"circuit scenario report", criterion9},
      {"determinism of every command", [&] { return criterion10(scratch); }},
  };

  bool all = true;
  for (std::size_t k = 0; k < criteria.size(); ++k) {
    const int id = static_cast<int>(k) + 1;
    if (only != 0 && only != id) continue;
    Outcome o;
    const auto t0 = std::chrono::steady_clock::now();
    try {
      o = criteria[k].second();
    } catch (const std::exception& e) {
      o.expect(false, std::string("threw: ") + e.what());
    }
    std::printf("criterion %d: %s %s (%.2f s)\n", id, o.pass ? "PASS" : "FAIL", criteria[k].first.c_str(),
                seconds_since(t0));
    for (const auto& d : o.details) std::printf("    %s\n", d.c_str());
    std::fflush(stdout);
    all = all && o.pass;
  }
  return all ? 0 : 1;
}
