#pragma once

#include <filesystem>
#include <optional>

#include "su11/config.hpp"
#include "su11/execution.hpp"
#include "su11/report.hpp"

namespace su11 {

struct RunContext {
  ScenarioConfig config;
  std::filesystem::path out_dir;
  Execution execution = Execution::parallel;
};

// Either (zeta, phi) or (chi, theta).
struct ConvertRequest {
  std::optional<double> zeta;
  std::optional<double> phi;
  std::optional<double> chi;
  std::optional<double> theta;
};

RunReport cmd_convert(const ConvertRequest& request);
RunReport cmd_figure3(const RunContext& ctx);
RunReport cmd_figure4(const RunContext& ctx);
RunReport cmd_snl(const RunContext& ctx);
RunReport cmd_circuit(const RunContext& ctx);
RunReport cmd_cycle(const RunContext& ctx);
RunReport cmd_oracle(const RunContext& ctx);

// Writes `<out>/<command>_summary.txt` from the rendered report.
void write_summary(const RunContext& ctx, RunReport& report);

}  // namespace su11
