#include "su11/commands.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

#include "su11/circuit.hpp"
#include "su11/csv.hpp"
#include "su11/errors.hpp"
#include "su11/metrology.hpp"
#include "su11/numerics.hpp"
#include "su11/otto.hpp"
#include "su11/sweep.hpp"

namespace su11 {

using csv::format_double;

void RunReport::add(const std::string& name, double value) { headline.emplace_back(name, format_double(value)); }

void RunReport::add(const std::string& name, const std::string& value) { headline.emplace_back(name, value); }

int RunReport::exit_status() const {
  if (!failures.empty()) return 1;
  if (!discrepancies.empty()) return 2;
  return 0;
}

std::string RunReport::render() const {
  std::ostringstream out;
  out << "# " << command << "\n";
  for (const auto& a : assumptions) out << "# assumption: " << a << "\n";
  for (const auto& [k, v] : headline) out << k << ": " << v << "\n";
  for (const auto& n : notes) out << "note: " << n << "\n";
  for (const auto& d : discrepancies) {
    out << "discrepancy: " << d.quantity << " formula=" << format_double(d.formula)
        << " reference=" << format_double(d.reference) << " tolerance=" << format_double(d.tolerance) << " ("
        << d.note << ")\n";
  }
  for (const auto& f : failures) out << "FAILURE: " << f << "\n";
  for (const auto& p : files) out << "wrote: " << p.filename().string() << "\n";
  out << "status: " << exit_status() << "\n";
  return out.str();
}

void write_summary(const RunContext& ctx, RunReport& report) {
  const auto path = ctx.out_dir / (report.command + "_summary.txt");
  report.files.push_back(path);
  csv::write_text_atomic(path, report.render());
}

namespace {

std::string zeta_tag(double zeta) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%g", zeta);
  return buf;
}

std::string range_text(const SupersensitivityRange& r) {
  if (r.empty) return "empty";
  return "[" + format_double(r.lo) + ", " + format_double(r.hi) + "]" + (r.disjoint ? " (hull of several windows)" : "");
}

std::vector<std::string> engine_assumptions(const ScenarioConfig& c) {
  return {
      "hbar = k_B = 1; energies and temperatures in units of omega2",
      "expansion input is the hot thermal state at omega2: N_in + 1 = coth(omega2 / (2 T_h))",
      "sensitivities normalised by the shot-noise limit 1/sqrt(N_phi), N_phi = (N_in + 1) cosh(zeta) - 1",
      std::string("derivative mode: ") + to_string(c.derivative_mode),
  };
}

// Optional helper script: plots every CSV column against the first.
constexpr const char* kPlotScript = R"(#!/usr/bin/env python3
import csv, sys
import matplotlib
matplotlib.use("Agg")
import matplotlib.pyplot as plt

for path in sys.argv[1:]:
    with open(path) as f:
        rows = list(csv.reader(f))
    header, body = rows[0], rows[1:]
    x = [float(r[0]) for r in body]
    fig, ax = plt.subplots()
    for j in range(1, len(header)):
        try:
            y = [float(r[j]) for r in body]
        except ValueError:
            continue
        ax.plot(x, y, label=header[j])
    ax.set_xlabel(header[0])
    ax.legend(fontsize="small")
    fig.savefig(path.rsplit(".", 1)[0] + ".png", dpi=120)
)";

void maybe_plot_script(const RunContext& ctx, RunReport& report) {
  if (!ctx.config.plot_script) return;
  const auto path = ctx.out_dir / "plot_csv.py";
  csv::write_text_atomic(path, kPlotScript);
  report.files.push_back(path);
}

}  // namespace

RunReport cmd_convert(const ConvertRequest& r) {
  RunReport report;
  report.command = "convert";
  const bool forward = r.zeta && r.phi;
  const bool inverse = r.chi && r.theta;
  if (forward == inverse) throw DomainError("convert needs either --zeta and --phi or --chi and --theta");

  if (forward) {
    const InterferometerAngles a(*r.zeta, *r.phi);
    report.add("zeta", a.zeta());
    report.add("phi", a.phi());
    const double chi = chi_from(a);
    report.add("chi", chi);
    if (a.phi() == 0.0 || a.zeta() == 0.0) {
      report.notes.push_back("identity transformation: chi = 0 and theta only fixes a phase");
    }
    if (a.phi() == 0.0) return report;
    const double theta = theta_from(a);
    report.add("theta", theta);
    if (chi > 0.0) {
      const AnglesSolution back = angles_from(ProtocolEndpoints(chi, theta));
      report.add("round_trip_zeta", back.angles.zeta());
      report.add("round_trip_phi", back.angles.phi());
      report.add("round_trip_residual", back.residual);
    }
    return report;
  }

  const ProtocolEndpoints ep = ProtocolEndpoints::from_signed(*r.chi, *r.theta);
  report.add("chi", ep.chi());
  report.add("theta", ep.theta());
  const AnglesSolution s = angles_from(ep);
  if (s.identity_family) report.notes.push_back("chi = 0: identity; minimal-zeta member of the family returned");
  report.add("zeta", s.angles.zeta());
  report.add("phi", s.angles.phi());
  report.add("residual", s.residual);
  report.add("iterations", std::to_string(s.iterations));
  return report;
}

RunReport cmd_figure3(const RunContext& ctx) {
  const ScenarioConfig& c = ctx.config;
  const EngineConfig engine = c.engine.engine();
  RunReport report;
  report.command = "figure3";
  report.assumptions = engine_assumptions(c);

  const double eta_c = carnot(engine);
  const double eta_o = otto_ideal(engine);
  const double eta0 = efficiency(engine, 0.0);
  const double cmax = chi_max(engine);
  report.add("eta_otto", eta_o);
  report.add("eta_carnot", eta_c);
  report.add("eta(phi=0)", eta0);
  report.add("eta(phi=0)/eta_carnot", eta0 / eta_c);
  report.add("chi_max", cmax);

  ScanOptions scan;
  scan.points = c.figure3.phi_points;
  const std::vector<double> phis = linear_grid(scan.phi_lo, numerics::kPi - scan.phi_lo, scan.points);

  for (double zeta : c.figure3.zetas) {
    const std::string z = zeta_tag(zeta);
    const std::vector<SensitivityRow> rows = sensitivity_sweep(engine, zeta, phis, c.derivative_mode, ctx.execution);
    csv::Table t({"phi", "delta_phi_n", "delta_phi_h", "snl", "norm_n", "norm_h", "eta", "eta_norm", "derivative_mode"});
    for (const auto& r : rows) {
      t.add_row({r.phi, r.delta_phi_n, r.delta_phi_h, r.snl, r.norm_n, r.norm_h, r.eta, r.eta_norm,
                 std::string(to_string(c.derivative_mode))});
    }
    const auto path = ctx.out_dir / ("figure3_zeta_" + z + ".csv");
    csv::write_table(path, t);
    report.files.push_back(path);

    const double snl_z = snl(engine, zeta).delta_phi;
    const SensitivityMinimum mn = minimize_sensitivity(engine, zeta, Observable::number, c.derivative_mode, scan);
    const SensitivityMinimum mh = minimize_sensitivity(engine, zeta, Observable::energy, c.derivative_mode, scan);
    const SupersensitivityRange rn = supersensitivity_range(engine, zeta, Observable::number, c.derivative_mode, scan);
    const SupersensitivityRange rh = supersensitivity_range(engine, zeta, Observable::energy, c.derivative_mode, scan);
    const PhaseLimit lim = phi_max(zeta, cmax);

    // First sign change of eta on the grid, interpolated.
    double zero = std::nan("");
    for (std::size_t i = 1; i < rows.size(); ++i) {
      if (rows[i - 1].eta > 0.0 && rows[i].eta <= 0.0) {
        const double f = rows[i - 1].eta / (rows[i - 1].eta - rows[i].eta);
        zero = rows[i - 1].phi + f * (rows[i].phi - rows[i - 1].phi);
        break;
      }
    }
    const std::string p = "zeta=" + z + " ";
    report.add(p + "snl", snl_z);
    report.add(p + "min norm_n", mn.delta_phi_min / snl_z);
    report.add(p + "min norm_h", mh.delta_phi_min / snl_z);
    report.add(p + "phi at min norm_h", mh.phi_star);
    report.add(p + "supersensitivity number", range_text(rn));
    report.add(p + "supersensitivity energy", range_text(rh));
    report.add(p + "phi_max", lim.full_range ? std::string("full range") : format_double(lim.phi_max));
    report.add(p + "eta zero crossing on grid", zero);
    if (mn.non_unimodal) report.notes.push_back(p + "number: " + mn.warning);
    if (mh.non_unimodal) report.notes.push_back(p + "energy: " + mh.warning);
  }
  maybe_plot_script(ctx, report);
  return report;
}

RunReport cmd_cycle(const RunContext& ctx) {
  const ScenarioConfig& c = ctx.config;
  const EngineConfig engine = c.engine.engine();
  RunReport report;
  report.command = "cycle";
  report.assumptions = {"hbar = k_B = 1; works and heats positive into the working substance"};

  const double zeta = c.cycle.zeta;
  const std::vector<double> phis = linear_grid(0.0, numerics::kPi, c.cycle.phi_points);
  const std::vector<CycleRow> rows = cycle_sweep(engine, zeta, phis, ctx.execution);
  csv::Table t({"phi", "zeta", "chi", "w_ab", "q_bc", "w_cd", "q_da", "w_net", "eta", "eta_norm", "w_fric"});
  for (const auto& r : rows) {
    t.add_row({r.phi, r.zeta, r.chi, r.w_ab, r.q_bc, r.w_cd, r.q_da, r.w_net, r.eta, r.eta_norm, r.w_fric});
  }
  const auto path = ctx.out_dir / ("cycle_zeta_" + zeta_tag(zeta) + ".csv");
  csv::write_table(path, t);
  report.files.push_back(path);

  const double cmax = chi_max(engine);
  const CycleReport r0 = works_and_heats(engine, 0.0);
  const RatioBound bound = temperature_ratio_bound(engine, 0.0);
  report.add("eta_otto", otto_ideal(engine));
  report.add("eta_carnot", carnot(engine));
  report.add("chi_max", cmax);
  report.add("phi_max(zeta)", zeta > 0.0 ? phi_max(zeta, cmax).phi_max : numerics::kPi);
  report.add("w_net(chi=0)", r0.w_net);
  report.add("w_net(chi_max)", works_and_heats(engine, cmax).w_net);
  report.add("temperature ratio bound at chi=0", bound.holds ? std::string("holds") : std::string("violated"));
  if (!bound.regime_ok) report.notes.push_back(bound.warning);
  maybe_plot_script(ctx, report);
  return report;
}

RunReport cmd_snl(const RunContext& ctx) {
  const ScenarioConfig& c = ctx.config;
  const EngineConfig engine = c.engine.engine();
  RunReport report;
  report.command = "snl";
  report.assumptions = engine_assumptions(c);

  csv::Table t({"observable", "derivative_mode", "zeta_snl", "phi_snl", "chi_snl", "eta_snl", "eta_norm",
                "delta_phi_min", "snl", "status"});
  const double eta_c = carnot(engine);
  for (Observable obs : {Observable::energy, Observable::number}) {
    for (DerivativeMode mode : {DerivativeMode::paper, DerivativeMode::chain}) {
      const std::string key = std::string(to_string(obs)) + "/" + to_string(mode);
      try {
        const SnlSolution s = solve_zeta_snl(engine, obs, mode);
        t.add_row({std::string(to_string(obs)), std::string(to_string(mode)), s.zeta_snl, s.phi_snl, s.chi_snl,
                   s.eta_snl, s.eta_snl / eta_c, s.delta_phi_min, s.snl, std::string("ok")});
        report.add(key + " zeta_snl", s.zeta_snl);
        report.add(key + " eta_snl", s.eta_snl);
        if (obs == Observable::energy && mode == c.derivative_mode) {
          const std::vector<std::pair<std::string, std::string>> lead = {
              {"zeta_snl", format_double(s.zeta_snl)}, {"phi_snl", format_double(s.phi_snl)},
              {"chi_snl", format_double(s.chi_snl)}, {"eta_snl", format_double(s.eta_snl)}};
          report.headline.insert(report.headline.begin(), lead.begin(), lead.end());
        }
      } catch (const Error& e) {
        const double nan = std::nan("");
        t.add_row({std::string(to_string(obs)), std::string(to_string(mode)), nan, nan, nan, nan, nan, nan, nan,
                   std::string("error: ") + e.what()});
        report.add(key, std::string("no solution: ") + e.what());
        if (obs == Observable::energy && mode == c.derivative_mode) report.failures.push_back(key + ": " + e.what());
      }
    }
  }
  const auto path = ctx.out_dir / "snl_solutions.csv";
  csv::write_table(path, t);
  report.files.push_back(path);
  return report;
}

RunReport cmd_figure4(const RunContext& ctx) {
  const Figure4Section& f = ctx.config.figure4;
  RunReport report;
  report.command = "figure4";
  report.assumptions = {"frequencies in units of omega_i",
                        "omega_+- = (omega_f +- omega_i) / 2 in the Gamma-function coefficients"};

  csv::Table t({"nu", "re_alphabeta", "im_alphabeta", "abs_beta_sq", "identity_defect"});
  double worst = 0.0;
  const double ratio = std::log(f.nu_max / f.nu_min);
  for (int k = 0; k < f.nu_points; ++k) {
    const double nu = k + 1 == f.nu_points ? f.nu_max : f.nu_min * std::exp(ratio * k / (f.nu_points - 1));
    const circuit::BogoliubovPair p = circuit::bogoliubov(f.omega_i, f.omega_f, nu);
    const circuit::Coupling cc = circuit::coupling_coefficients(p);
    worst = std::max(worst, std::abs(p.identity_defect));
    t.add_row({nu, cc.re_ab, cc.im_ab, std::norm(p.beta), p.identity_defect});
  }
  const auto path = ctx.out_dir / "figure4.csv";
  csv::write_table(path, t);
  report.files.push_back(path);

  const circuit::Coupling degenerate =
      circuit::coupling_coefficients(circuit::bogoliubov(f.omega_i, f.omega_i, f.nu_min));
  report.add("max |identity defect|", worst);
  report.add("omega_f = omega_i: Re{alpha beta}", degenerate.re_ab);
  report.add("omega_f = omega_i: Im{alpha beta}", degenerate.im_ab);
  if (worst > 1e-10) report.failures.push_back("|alpha|^2 - |beta|^2 = 1 violated by " + format_double(worst));
  maybe_plot_script(ctx, report);
  return report;
}

RunReport cmd_circuit(const RunContext& ctx) {
  const CircuitSection& cs = ctx.config.circuit;
  RunReport report;
  report.command = "circuit";
  circuit::ScenarioOptions opt;
  opt.points = cs.t_f_points;
  opt.mode = ctx.config.derivative_mode;
  opt.im_tolerance = cs.im_tolerance;
  const circuit::ScenarioReport r = circuit::circuit_scenario(cs.params, opt);

  report.assumptions = {
      "mode index j = " + std::to_string(cs.params.mode),
      std::string("nu in ") + (cs.params.nu_absolute ? "rad/s" : "units of the expansion-branch omega_i"),
      "natural units: energy unit hbar omega_i(expansion) = " + format_double(r.energy_unit_kelvin) + " K",
      "kelvin to natural: T / " + format_double(r.energy_unit_kelvin) + "; natural to kelvin: T * " +
          format_double(r.energy_unit_kelvin),
      "theta = -omega_f t_f over one period of omega_f (expansion branch), " + std::to_string(cs.t_f_points) +
          " points",
      std::string("derivative mode: ") + to_string(ctx.config.derivative_mode),
  };

  csv::Table t({"t_f", "theta", "zeta", "phi", "chi", "eta", "eta_norm", "dphi_h", "dphi_norm", "flags"});
  for (const auto& row : r.rows) {
    t.add_row({row.t_f, row.theta, row.zeta, row.phi, row.chi, row.eta, row.eta_norm, row.dphi_h, row.dphi_norm,
               row.flags});
  }
  const auto path = ctx.out_dir / "circuit_scenario.csv";
  csv::write_table(path, t);
  report.files.push_back(path);

  for (const circuit::BranchResult* b : {&r.expansion, &r.compression}) {
    const std::string p = std::string(circuit::to_string(b->branch)) + " ";
    report.add(p + "omega_i [rad/s]", b->frequencies.omega_i);
    report.add(p + "omega_f [rad/s]", b->frequencies.omega_f);
    report.add(p + "|beta|^2", std::norm(b->pair.beta));
    const circuit::Coupling cc = circuit::coupling_coefficients(b->pair);
    report.add(p + "Re{alpha beta}", cc.re_ab);
    report.add(p + "Im{alpha beta}", cc.im_ab);
    report.add(p + "chi", b->chi);
  }
  report.add("nu [rad/s]", r.nu_rad_per_s);
  report.add("omega1 (natural)", r.omega1);
  report.add("T_h (natural)", r.t_hot);
  report.add("T_c (natural)", r.t_cold);
  report.add("eta_carnot", r.eta_carnot);
  report.add("chi_max", r.chi_max);
  report.add("engine regime", r.in_engine_regime ? std::string("yes") : std::string("no"));
  report.add("eta_norm at sensitivity optimum", r.eta_norm);
  report.add("dphi_norm at sensitivity optimum", r.dphi_norm);
  report.add("deviation eta_norm - 0.23", r.deviation_eta);
  report.add("deviation dphi_norm - 0.56", r.deviation_dphi);
  if (r.optimal_row >= 0) report.add("t_f at sensitivity optimum [s]", r.rows[r.optimal_row].t_f);
  if (r.best_match_row >= 0) {
    const auto& b = r.rows[r.best_match_row];
    report.add("best match t_f [s]", b.t_f);
    report.add("best match eta_norm", b.eta_norm);
    report.add("best match dphi_norm", b.dphi_norm);
  }
  report.notes = r.notes;
  const bool ok = std::isfinite(r.eta_norm) && r.eta_norm > 0.0 && r.eta_norm < 1.0 && r.dphi_norm > 0.0;
  if (!ok && cs.params.b != 0.0) report.failures.push_back("scenario produced no finite efficiency/sensitivity pair");
  maybe_plot_script(ctx, report);
  return report;
}

}  // namespace su11
