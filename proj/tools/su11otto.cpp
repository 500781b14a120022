#include <CLI11.hpp>

#include <cstdio>
#include <filesystem>
#include <functional>
#include <iostream>
#include <optional>

#include "su11/commands.hpp"
#include "su11/config.hpp"
#include "su11/errors.hpp"
#include "su11/execution.hpp"

namespace {

struct Globals {
  std::string config_path;
  std::string out_dir;
  std::string derivative_mode;
  int threads = 0;
};

su11::RunContext make_context(const Globals& g) {
  su11::RunContext ctx;
  if (!g.config_path.empty()) ctx.config = su11::load_config(g.config_path);
  if (!g.derivative_mode.empty()) ctx.config.derivative_mode = su11::parse_derivative_mode(g.derivative_mode);
  if (!g.out_dir.empty()) ctx.config.output_dir = g.out_dir;
  ctx.config.validate();
  if (g.threads < 0) throw su11::ConfigError("--threads must be >= 0");
  su11::set_thread_count(g.threads);
  // One thread means the serial reference path, not a one-member team.
  ctx.execution = g.threads == 1 ? su11::Execution::serial : su11::Execution::parallel;
  ctx.out_dir = ctx.config.output_dir;
  std::filesystem::create_directories(ctx.out_dir);
  return ctx;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"su(1,1) quantum Otto engine and interferometric thermometry toolkit"};
  app.require_subcommand(1);
  app.fallthrough();

  Globals g;
  app.add_option("--config", g.config_path, "JSON scenario file")->check(CLI::ExistingFile);
  app.add_option("--out", g.out_dir, "output directory (overrides the config)");
  app.add_option("--derivative-mode", g.derivative_mode, "dN/dphi form: paper or chain")
      ->check(CLI::IsMember({"paper", "chain"}));
  app.add_option("--threads", g.threads, "OpenMP threads; 1 selects the serial path, 0 keeps the default");

  su11::ConvertRequest conv;
  auto* convert = app.add_subcommand("convert", "map (zeta, phi) <-> (chi, theta)");
  convert->add_option("--zeta", conv.zeta);
  convert->add_option("--phi", conv.phi);
  convert->add_option("--chi", conv.chi, "signed squeeze; a negative value flips theta by pi");
  convert->add_option("--theta", conv.theta);

  using Cmd = std::function<su11::RunReport(const su11::RunContext&)>;
  std::vector<std::pair<CLI::App*, Cmd>> commands = {
      {app.add_subcommand("figure3", "sensitivity and efficiency versus phi"), su11::cmd_figure3},
      {app.add_subcommand("figure4", "Bogoliubov coupling versus modulation rate"), su11::cmd_figure4},
      {app.add_subcommand("snl", "squeezing at which the shot-noise limit is reached"), su11::cmd_snl},
      {app.add_subcommand("circuit", "Josephson metamaterial scenario"), su11::cmd_circuit},
      {app.add_subcommand("oracle", "closed forms against the truncated Fock space"), su11::cmd_oracle},
      {app.add_subcommand("cycle", "works, heats and efficiency along phi"), su11::cmd_cycle},
  };

  CLI11_PARSE(app, argc, argv);

  try {
    if (convert->parsed()) {
      const su11::RunReport report = su11::cmd_convert(conv);
      std::cout << report.render();
      return report.exit_status();
    }
    su11::RunContext ctx = make_context(g);
    for (auto& [sub, run] : commands) {
      if (!sub->parsed()) continue;
      su11::RunReport report = run(ctx);
      su11::write_summary(ctx, report);
      std::cout << report.render();
      return report.exit_status();
    }
  } catch (const su11::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}
