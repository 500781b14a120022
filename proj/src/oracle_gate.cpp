#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdio>
#include <limits>
#include <map>
#include <optional>

#include <Eigen/Sparse>

#include "su11/commands.hpp"
#include "su11/csv.hpp"
#include "su11/errors.hpp"
#include "su11/fock.hpp"
#include "su11/metrology.hpp"
#include "su11/numerics.hpp"
#include "su11/oracle.hpp"

namespace su11::oracle {

using fock::Complex;
using fock::FockWorkspace;
using fock::OperatorMatrix;
using fock::ThermalState;

namespace {

std::string point_label(double zeta, double phi, double beta_omega) {
  char buf[96];
  std::snprintf(buf, sizeof buf, "[zeta=%g,phi=%g,beta_omega=%g]", zeta, phi, beta_omega);
  return buf;
}

// Same engine bookkeeping as metrology: the input is thermal at omega2 = omega_i
// and the energy observable is read out at omega1 = omega_f.
EngineConfig arbitration_config(const OracleSection& s, double beta_omega) {
  const double t_hot = s.omega_i / beta_omega;
  return EngineConfig::relaxed(s.omega_f, s.omega_i, t_hot, 0.5 * t_hot);
}

OperatorMatrix energy_operator(const FockWorkspace& ws, double omega) {
  return OperatorMatrix::diagonal(ws, [omega](int n1, int n2) { return Complex(omega * (n1 + n2 + 1)); });
}

// Casimir commutators in extended precision. The Casimir has entries of order
// n_max^4 / 4, so at double precision one ulp of an entry already sits near
// 1e-12; long double pushes that floor a few digits down.
struct CasimirResiduals {
  double kx, ky, kz;
};

CasimirResiduals casimir_residuals(int n_max) {
  using C = std::complex<long double>;
  using Sp = Eigen::SparseMatrix<C>;
  const int side = n_max + 1;
  const int dim = side * side;
  auto idx = [side](int n1, int n2) { return n1 * side + n2; };
  std::vector<Eigen::Triplet<C>> tl, tz;
  for (int n1 = 0; n1 <= n_max; ++n1) {
    for (int n2 = 0; n2 <= n_max; ++n2) {
      tz.emplace_back(idx(n1, n2), idx(n1, n2), C(0.5L * (n1 + n2 + 1)));
      if (n1 > 0 && n2 > 0) tl.emplace_back(idx(n1 - 1, n2 - 1), idx(n1, n2), C(std::sqrt((long double)n1 * n2)));
    }
  }
  Sp l(dim, dim), kz(dim, dim);
  l.setFromTriplets(tl.begin(), tl.end());
  kz.setFromTriplets(tz.begin(), tz.end());
  const Sp lt = Sp(l.adjoint());
  const Sp kx = C(0.5L) * (l + lt);
  const Sp ky = C(0.0L, 0.5L) * (l - lt);
  const Sp cas = Sp(kz * kz) - Sp(kx * kx) - Sp(ky * ky);
  auto residual = [&](const Sp& k) {
    const Sp comm = Sp(cas * k) - Sp(k * cas);
    long double worst = 0.0L;
    for (int col = 0; col < comm.outerSize(); ++col) {
      for (Sp::InnerIterator it(comm, col); it; ++it) {
        const int r = static_cast<int>(it.row()), c = static_cast<int>(it.col());
        if (r / side == n_max || r % side == n_max || c / side == n_max || c % side == n_max) continue;
        worst = std::max(worst, std::abs(it.value()));
      }
    }
    return static_cast<double>(worst);
  };
  return {residual(kx), residual(ky), residual(kz)};
}

}  // namespace

Check make_check(std::string quantity, double analytic, double oracle, int n_max, double leakage, double tolerance,
                 CheckKind kind, bool relative) {
  Check c{std::move(quantity), analytic, oracle, 0.0, 0.0, n_max, leakage, tolerance, kind, relative, false};
  c.abs_err = std::abs(oracle - analytic);
  c.rel_err = analytic != 0.0 ? c.abs_err / std::abs(analytic) : c.abs_err;
  const double err = relative ? c.rel_err : c.abs_err;
  c.passed = std::isfinite(err) && err <= tolerance;
  return c;
}

std::vector<Check> algebra_checks(int n_max, double tolerance, Execution execution) {
  const FockWorkspace ws(n_max, execution);
  const fock::Generators g = fock::build_generators(ws);
  const Complex i(0.0, 1.0);
  using fock::commutator;
  using fock::interior_max_abs;
  std::vector<Check> out;
  auto add = [&](const char* name, double residual) {
    out.push_back(make_check(name, 0.0, residual, n_max, 0.0, tolerance, CheckKind::hard));
  };
  add("algebra:[Kx,Ky]+iKz", interior_max_abs(commutator(g.kx, g.ky) + i * g.kz));
  add("algebra:[Ky,Kz]-iKx", interior_max_abs(commutator(g.ky, g.kz) - i * g.kx));
  add("algebra:[Kz,Kx]-iKy", interior_max_abs(commutator(g.kz, g.kx) - i * g.ky));
  add("algebra:jacobi", interior_max_abs(commutator(g.kx, commutator(g.ky, g.kz)) +
                                         commutator(g.ky, commutator(g.kz, g.kx)) +
                                         commutator(g.kz, commutator(g.kx, g.ky))));
  const CasimirResiduals cr = casimir_residuals(n_max);
  add("algebra:[K2,Kx]", cr.kx);
  add("algebra:[K2,Ky]", cr.ky);
  add("algebra:[K2,Kz]", cr.kz);
  add("algebra:Kz-(N+1)/2", fock::max_abs(g.kz - Complex(0.5) * (g.n + OperatorMatrix::identity(ws))));
  add("algebra:[Kz,N]", fock::max_abs(commutator(g.kz, g.n)));
  add("algebra:hermitian(Kx,Ky,Kz)",
      std::max({g.kx.hermiticity_defect(), g.ky.hermiticity_defect(), g.kz.hermiticity_defect()}));
  return out;
}

std::vector<Check> thermal_checks(const OracleSection& s, Execution execution) {
  const FockWorkspace ws(s.n_max, execution);
  const fock::Generators g = fock::build_generators(ws);
  std::vector<Check> out;
  for (double bw : s.beta_omegas) {
    const std::string tag = "[beta_omega=" + csv::format_double(bw) + "]";
    try {
      const ThermalState rho = fock::thermal_state(ws, bw / s.omega_i, s.omega_i, s.policy);
      out.push_back(make_check("thermal:<N>" + tag, numerics::coth(0.5 * bw) - 1.0, fock::expect(g.n, rho), s.n_max,
                               rho.leakage(), s.analytic_tolerance, CheckKind::hard));
      out.push_back(make_check("thermal:trace" + tag, 1.0, rho.trace(), s.n_max, rho.leakage(), 1e-10,
                               CheckKind::hard));
      // Direct retained sum of exp(-beta omega (n1 + n2 + 1)).
      double direct = 0.0;
      for (int n1 = 0; n1 <= s.n_max; ++n1) {
        for (int n2 = 0; n2 <= s.n_max; ++n2) direct += std::exp(-bw * (n1 + n2 + 1));
      }
      out.push_back(make_check("thermal:logZ" + tag, rho.log_partition_function(), std::log(direct), s.n_max,
                               rho.leakage(), 1e-10, CheckKind::hard));
    } catch (const TruncationError& e) {
      out.push_back(make_check("thermal:truncation" + tag, 0.0, e.leakage(), s.n_max, e.leakage(),
                               s.policy.thermal_leakage, CheckKind::hard));
    }
  }
  return out;
}

std::vector<Check> equivalence_checks(const OracleSection& s, Execution execution, const EquivalenceOptions& options) {
  const FockWorkspace ws(s.n_max, execution);
  const fock::Generators g = fock::build_generators(ws);
  const OperatorMatrix h_out = energy_operator(ws, s.omega_f);
  std::vector<Check> out;

  for (double bw : s.beta_omegas) {
    std::optional<ThermalState> rho;
    try {
      rho.emplace(fock::thermal_state(ws, bw / s.omega_i, s.omega_i, s.policy));
    } catch (const TruncationError& e) {
      out.push_back(make_check("equivalence:thermal_truncation[beta_omega=" + csv::format_double(bw) + "]", 0.0,
                               e.leakage(), s.n_max, e.leakage(), s.policy.thermal_leakage, CheckKind::hard));
      continue;
    }
    const double coth_i = numerics::coth(0.5 * bw);
    for (double zeta : s.zetas) {
      for (double phi : s.phis) {
        const std::string tag = point_label(zeta, phi, bw);
        const InterferometerAngles angles(zeta, phi);
        const double chi = chi_from(angles);
        const double theta = theta_from(angles);
        // Unenforced, the guard still records intermediate-stage leakage.
        const fock::LeakageGuard guard{
            &*rho, options.enforce_guard ? s.policy.squeeze_leakage : std::numeric_limits<double>::infinity()};

        std::vector<OperatorMatrix> u;
        try {
          u.push_back(fock::unitary_product(angles, ws, guard));
          u.push_back(fock::unitary_equiv(ProtocolEndpoints(chi, theta), ws, guard));
          u.push_back(fock::evolution_endpoint(-chi, -theta, ws, guard));
        } catch (const TruncationError& e) {
          out.push_back(make_check("equivalence:guard" + tag, 0.0, e.leakage(), s.n_max, e.leakage(),
                                   s.policy.squeeze_leakage, CheckKind::hard));
          continue;
        }
        double leak = 0.0;
        double unitarity = 0.0;
        for (const auto& m : u) {
          leak = std::max({leak, m.leakage(), fock::edge_leakage(m, *rho)});
          unitarity = std::max(unitarity, m.unitarity_defect());
        }

        const char* names[3] = {"un1", "un2", "tiev"};
        double mn[3];
        double mh[3];
        double imag = 0.0;
        for (int k = 0; k < 3; ++k) {
          const fock::Moments a = fock::evolved_moments(u[k], g.n, *rho);
          const fock::Moments b = fock::evolved_moments(u[k], h_out, *rho);
          mn[k] = a.mean;
          mh[k] = b.mean;
          imag = std::max({imag, a.imag_residue, b.imag_residue});
        }
        for (int a = 0; a < 3; ++a) {
          for (int b = a + 1; b < 3; ++b) {
            const std::string pair = std::string(names[a]) + "-" + names[b];
            out.push_back(make_check("equivalence:<N>:" + pair + tag, mn[a], mn[b], s.n_max, leak,
                                     s.equivalence_tolerance, CheckKind::hard));
            out.push_back(make_check("equivalence:<H>:" + pair + tag, mh[a], mh[b], s.n_max, leak,
                                     s.equivalence_tolerance, CheckKind::hard));
          }
        }
        const double h_analytic = s.omega_f * std::cosh(chi) * coth_i;
        out.push_back(make_check("analytic:<N_out>" + tag, n_out(coth_i - 1.0, chi), mn[1], s.n_max, leak,
                                 s.analytic_tolerance, CheckKind::hard));
        for (int k = 0; k < 3; ++k) {
          out.push_back(make_check(std::string("analytic:<H>:") + names[k] + tag, h_analytic, mh[k], s.n_max, leak,
                                   s.analytic_tolerance, CheckKind::hard));
        }
        const OperatorMatrix h_final = fock::hamiltonian_final(s.omega_f, -chi, ws);
        out.push_back(make_check("analytic:<H_f>" + tag, h_analytic, fock::expect(h_final, *rho), s.n_max, leak,
                                 s.analytic_tolerance, CheckKind::hard));
        out.push_back(make_check("oracle:unitarity" + tag, 0.0, unitarity, s.n_max, leak, 1e-10, CheckKind::hard));
        out.push_back(make_check("oracle:imag_residue" + tag, 0.0, imag, s.n_max, leak, 1e-10, CheckKind::hard));
      }
    }
  }
  return out;
}

std::vector<Check> arbitration_checks(const OracleSection& s, Execution execution) {
  const FockWorkspace ws(s.n_max, execution);
  const fock::Generators g = fock::build_generators(ws);
  const OperatorMatrix h_out = energy_operator(ws, s.omega_f);
  constexpr double step = 1e-4;
  std::vector<Check> out;

  for (double bw : s.beta_omegas) {
    std::optional<ThermalState> rho;
    try {
      rho.emplace(fock::thermal_state(ws, bw / s.omega_i, s.omega_i, s.policy));
    } catch (const TruncationError&) {
      continue;  // already reported by the equivalence checks
    }
    const EngineConfig config = arbitration_config(s, bw);
    for (double zeta : s.zetas) {
      if (zeta == 0.0) continue;
      for (double phi : s.phis) {
        const std::string tag = point_label(zeta, phi, bw);
        const InterferometerAngles angles(zeta, phi);
        const double chi = chi_from(angles);
        const OperatorMatrix u = fock::unitary_equiv(endpoints_from(angles), ws);
        const double leak = fock::edge_leakage(u, *rho);

        out.push_back(make_check("formula:var_N" + tag, variance_n(config, chi),
                                 fock::evolved_moments(u, g.n, *rho).variance, s.n_max, leak,
                                 s.variance_rel_tolerance, CheckKind::formula, true));
        out.push_back(make_check("formula:var_H" + tag, variance_h(config, chi),
                                 fock::evolved_moments(u, h_out, *rho).variance, s.n_max, leak,
                                 s.variance_rel_tolerance, CheckKind::formula, true));

        const double up = fock::evolved_moments(fock::unitary_product(InterferometerAngles(zeta, phi + step), ws),
                                                g.n, *rho).mean;
        const double down = fock::evolved_moments(fock::unitary_product(InterferometerAngles(zeta, phi - step), ws),
                                                  g.n, *rho).mean;
        const double slope = (up - down) / (2.0 * step);
        out.push_back(make_check("formula:dN/dphi:chain" + tag, dn_dphi_chain(config, zeta, phi), slope, s.n_max, leak,
                                 s.variance_rel_tolerance, CheckKind::formula, true));
        out.push_back(make_check("formula:dN/dphi:paper" + tag, dn_dphi_paper(config, zeta, phi), slope, s.n_max, leak,
                                 s.variance_rel_tolerance, CheckKind::formula, true));
      }
    }
  }
  return out;
}

std::vector<Check> convergence_checks(const OracleSection& s, Execution execution) {
  std::vector<Check> out;
  if (s.zetas.empty() || s.phis.empty() || s.beta_omegas.empty()) return out;
  const double zeta = s.zetas.front();
  const double phi = s.phis.front();
  const double bw = s.beta_omegas.front();
  const std::string tag = point_label(zeta, phi, bw);
  const InterferometerAngles angles(zeta, phi);
  double n[2];
  double h[2];
  double leak = 0.0;
  try {
    for (int k = 0; k < 2; ++k) {
      const FockWorkspace ws(s.n_max * (k + 1), execution);
      const ThermalState rho = fock::thermal_state(ws, bw / s.omega_i, s.omega_i, s.policy);
      const OperatorMatrix u = fock::unitary_equiv(endpoints_from(angles), ws);
      leak = std::max(leak, fock::edge_leakage(u, rho));
      n[k] = fock::evolved_moments(u, fock::build_generators(ws).n, rho).mean;
      h[k] = fock::evolved_moments(u, energy_operator(ws, s.omega_f), rho).mean;
    }
  } catch (const TruncationError& e) {
    out.push_back(make_check("convergence:truncation" + tag, 0.0, e.leakage(), s.n_max, e.leakage(),
                             s.policy.thermal_leakage, CheckKind::hard));
    return out;
  }
  out.push_back(make_check("convergence:<N>:2n_max" + tag, n[0], n[1], s.n_max, leak, 1e-8, CheckKind::hard));
  out.push_back(make_check("convergence:<H>:2n_max" + tag, h[0], h[1], s.n_max, leak, 1e-8, CheckKind::hard));
  return out;
}

}  // namespace su11::oracle

namespace su11 {

RunReport cmd_oracle(const RunContext& ctx) {
  using namespace oracle;
  const OracleSection& s = ctx.config.oracle;
  RunReport report;
  report.command = "oracle";
  report.assumptions = {
      "truncated two-mode Fock space, per-mode cutoff n_max; blocks by n1 - n2",
      "input state thermal at omega_i; <H> is omega_f (N + 1) in the Heisenberg picture",
      "guard: squeezed population on the truncation edge <= squeeze_leakage, else hard failure",
  };

  std::vector<Check> checks = algebra_checks(s.algebra_n_max, s.algebra_tolerance, ctx.execution);
  for (auto part : {thermal_checks(s, ctx.execution), equivalence_checks(s, ctx.execution),
                    arbitration_checks(s, ctx.execution), convergence_checks(s, ctx.execution)}) {
    checks.insert(checks.end(), part.begin(), part.end());
  }

  csv::Table table({"quantity", "analytic", "oracle", "abs_err", "rel_err", "n_max", "leakage", "tolerance", "status"});
  int passed = 0;
  // Worst miss per formula family, reported once each.
  std::map<std::string, const Check*> worst;
  for (const Check& c : checks) {
    const char* status = c.passed ? "pass" : (c.kind == CheckKind::hard ? "fail" : "discrepancy");
    table.add_row({c.quantity, c.analytic, c.oracle, c.abs_err, c.rel_err, static_cast<long long>(c.n_max), c.leakage,
                   c.tolerance, std::string(status)});
    if (c.passed) {
      ++passed;
    } else if (c.kind == CheckKind::hard) {
      report.failures.push_back(c.quantity + ": |" + csv::format_double(c.oracle) + " - " +
                                csv::format_double(c.analytic) + "| exceeds " + csv::format_double(c.tolerance));
    } else {
      const std::string family = c.quantity.substr(0, c.quantity.find('['));
      const double err = c.relative ? c.rel_err : c.abs_err;
      auto it = worst.find(family);
      if (it == worst.end() || err > (it->second->relative ? it->second->rel_err : it->second->abs_err)) {
        worst[family] = &c;
      }
    }
  }
  for (const auto& [family, c] : worst) {
    int misses = 0;
    for (const Check& other : checks) {
      if (!other.passed && other.quantity.rfind(family + "[", 0) == 0) ++misses;
    }
    report.discrepancies.push_back({c->quantity, c->analytic, c->oracle, c->tolerance,
                                    family + " disagrees with the oracle at " + std::to_string(misses) +
                                        " grid point(s); worst shown"});
  }
  for (const char* form : {"chain", "paper"}) {
    const std::string prefix = std::string("formula:dN/dphi:") + form + "[";
    int total = 0;
    int agree = 0;
    for (const Check& c : checks) {
      if (c.quantity.rfind(prefix, 0) != 0) continue;
      ++total;
      agree += c.passed ? 1 : 0;
    }
    report.add(std::string("dN/dphi ") + form + " form agrees with oracle slope",
               std::to_string(agree) + "/" + std::to_string(total) + " points");
  }

  const auto path = ctx.out_dir / "oracle_checks.csv";
  csv::write_table(path, table);
  report.files.push_back(path);
  report.add("checks", std::to_string(checks.size()));
  report.add("passed", std::to_string(passed));
  report.add("hard_failures", std::to_string(report.failures.size()));
  report.add("formula_discrepancies", std::to_string(report.discrepancies.size()));
  report.add("n_max", std::to_string(s.n_max));
  return report;
}

}  // namespace su11
