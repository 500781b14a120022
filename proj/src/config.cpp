#include "su11/config.hpp"

#include <fstream>
#include <functional>
#include <set>
#include <sstream>

#include "json.hpp"
#include "su11/errors.hpp"

namespace su11 {

using nlohmann::json;

namespace {

// Walks one JSON object, remembering which keys were read so leftovers can be
// rejected.
class Section {
 public:
  Section(const json& j, std::string where) : j_(j), where_(std::move(where)) {
    if (!j_.is_object()) throw ConfigError(where_ + " must be an object");
  }

  template <class T>
  void read(const char* key, T& out) {
    if (!j_.contains(key)) return;
    seen_.insert(key);
    try {
      out = j_.at(key).get<T>();
    } catch (const json::exception& e) {
      throw ConfigError(where_ + "." + key + ": " + e.what());
    }
  }

  void section(const char* key, const std::function<void(Section&)>& body) {
    if (!j_.contains(key)) return;
    seen_.insert(key);
    Section s(j_.at(key), where_ + "." + key);
    body(s);
    s.finish();
  }

  void finish() const {
    for (auto it = j_.begin(); it != j_.end(); ++it) {
      if (!seen_.count(it.key())) throw ConfigError("unknown key " + where_ + "." + it.key());
    }
  }

 private:
  const json& j_;
  std::string where_;
  std::set<std::string> seen_;
};

void check(bool ok, const std::string& what) {
  if (!ok) throw ConfigError(what);
}

}  // namespace

void ScenarioConfig::validate() const {
  try {
    const EngineConfig e = engine.engine();
    chi_max(e);
  } catch (const Error& err) {
    throw ConfigError(std::string("engine: ") + err.what());
  }
  check(!figure3.zetas.empty(), "figure3.zetas must not be empty");
  for (double z : figure3.zetas) check(z > 0.0, "figure3.zetas must be > 0");
  check(figure3.phi_points >= 3, "figure3.phi_points must be >= 3");
  check(cycle.zeta >= 0.0, "cycle.zeta must be >= 0");
  check(cycle.phi_points >= 2, "cycle.phi_points must be >= 2");

  check(oracle.n_max >= 1, "oracle.n_max must be >= 1");
  check(oracle.algebra_n_max >= 2, "oracle.algebra_n_max must be >= 2");
  for (double z : oracle.zetas) check(z >= 0.0, "oracle.zetas must be >= 0");
  for (double b : oracle.beta_omegas) check(b > 0.0, "oracle.beta_omegas must be > 0");
  check(oracle.omega_i > 0.0 && oracle.omega_f > 0.0, "oracle frequencies must be > 0");
  for (double t : {oracle.equivalence_tolerance, oracle.analytic_tolerance, oracle.variance_rel_tolerance,
                   oracle.algebra_tolerance, oracle.policy.thermal_leakage, oracle.policy.edge_occupancy,
                   oracle.policy.squeeze_leakage}) {
    check(t > 0.0, "oracle tolerances must be > 0");
  }

  check(figure4.omega_i > 0.0 && figure4.omega_f > 0.0, "figure4 frequencies must be > 0");
  check(figure4.nu_min > 0.0 && figure4.nu_max > figure4.nu_min, "figure4 needs 0 < nu_min < nu_max");
  check(figure4.nu_points >= 2, "figure4.nu_points must be >= 2");

  try {
    circuit.params.validate();
  } catch (const Error& err) {
    throw ConfigError(std::string("circuit: ") + err.what());
  }
  check(circuit.t_f_points >= 1, "circuit.t_f_points must be >= 1");
  check(circuit.im_tolerance > 0.0, "circuit.im_tolerance must be > 0");
  check(!output_dir.empty(), "output_dir must not be empty");
}

ScenarioConfig parse_config(const std::string& json_text) {
  json root;
  try {
    root = json::parse(json_text);
  } catch (const json::exception& e) {
    throw ConfigError(std::string("config is not valid JSON: ") + e.what());
  }

  ScenarioConfig c;
  Section top(root, "config");
  top.section("engine", [&](Section& s) {
    s.read("omega1", c.engine.omega1);
    s.read("omega2", c.engine.omega2);
    s.read("t_hot", c.engine.t_hot);
    s.read("t_cold", c.engine.t_cold);
  });
  std::string mode = to_string(c.derivative_mode);
  top.read("derivative_mode", mode);
  c.derivative_mode = parse_derivative_mode(mode);
  top.section("figure3", [&](Section& s) {
    s.read("zetas", c.figure3.zetas);
    s.read("phi_points", c.figure3.phi_points);
  });
  top.section("cycle", [&](Section& s) {
    s.read("zeta", c.cycle.zeta);
    s.read("phi_points", c.cycle.phi_points);
  });
  top.section("oracle", [&](Section& s) {
    s.read("n_max", c.oracle.n_max);
    s.read("zetas", c.oracle.zetas);
    s.read("phis", c.oracle.phis);
    s.read("beta_omegas", c.oracle.beta_omegas);
    s.read("omega_i", c.oracle.omega_i);
    s.read("omega_f", c.oracle.omega_f);
    s.read("equivalence_tolerance", c.oracle.equivalence_tolerance);
    s.read("analytic_tolerance", c.oracle.analytic_tolerance);
    s.read("variance_rel_tolerance", c.oracle.variance_rel_tolerance);
    s.read("algebra_n_max", c.oracle.algebra_n_max);
    s.read("algebra_tolerance", c.oracle.algebra_tolerance);
    s.read("thermal_leakage", c.oracle.policy.thermal_leakage);
    s.read("edge_occupancy", c.oracle.policy.edge_occupancy);
    s.read("squeeze_leakage", c.oracle.policy.squeeze_leakage);
  });
  top.section("figure4", [&](Section& s) {
    s.read("omega_i", c.figure4.omega_i);
    s.read("omega_f", c.figure4.omega_f);
    s.read("nu_min", c.figure4.nu_min);
    s.read("nu_max", c.figure4.nu_max);
    s.read("nu_points", c.figure4.nu_points);
  });
  top.section("circuit", [&](Section& s) {
    auto& p = c.circuit.params;
    s.read("inductance_H", p.inductance);
    s.read("capacitance_F", p.capacitance);
    s.read("e0_over_c_J_per_F", p.e0_over_c);
    s.read("A", p.a);
    s.read("B", p.b);
    s.read("nu", p.nu);
    std::string nu_units = p.nu_absolute ? "rad_per_s" : "omega_i";
    s.read("nu_units", nu_units);
    if (nu_units != "omega_i" && nu_units != "rad_per_s") {
      throw ConfigError("circuit.nu_units must be 'omega_i' or 'rad_per_s'");
    }
    p.nu_absolute = nu_units == "rad_per_s";
    s.read("n_cell", p.n_cell);
    s.read("mode_index", p.mode);
    s.read("flux_quantum_Wb", p.flux_quantum);
    s.read("t_hot_K", p.t_hot);
    s.read("t_cold_K", p.t_cold);
    s.read("t_f_points", c.circuit.t_f_points);
    s.read("im_tolerance", c.circuit.im_tolerance);
  });
  top.read("output_dir", c.output_dir);
  top.read("plot_script", c.plot_script);
  top.finish();

  c.validate();
  return c;
}

ScenarioConfig load_config(const std::filesystem::path& path) {
  std::ifstream f(path);
  if (!f) throw ConfigError("cannot read config " + path.string());
  std::stringstream buf;
  buf << f.rdbuf();
  return parse_config(buf.str());
}

std::string to_json(const ScenarioConfig& c) {
  const auto& p = c.circuit.params;
  json j;
  j["engine"] = {{"omega1", c.engine.omega1},
                 {"omega2", c.engine.omega2},
                 {"t_hot", c.engine.t_hot},
                 {"t_cold", c.engine.t_cold}};
  j["derivative_mode"] = to_string(c.derivative_mode);
  j["figure3"] = {{"zetas", c.figure3.zetas}, {"phi_points", c.figure3.phi_points}};
  j["cycle"] = {{"zeta", c.cycle.zeta}, {"phi_points", c.cycle.phi_points}};
  j["oracle"] = {{"n_max", c.oracle.n_max},
                 {"zetas", c.oracle.zetas},
                 {"phis", c.oracle.phis},
                 {"beta_omegas", c.oracle.beta_omegas},
                 {"omega_i", c.oracle.omega_i},
                 {"omega_f", c.oracle.omega_f},
                 {"equivalence_tolerance", c.oracle.equivalence_tolerance},
                 {"analytic_tolerance", c.oracle.analytic_tolerance},
                 {"variance_rel_tolerance", c.oracle.variance_rel_tolerance},
                 {"algebra_n_max", c.oracle.algebra_n_max},
                 {"algebra_tolerance", c.oracle.algebra_tolerance},
                 {"thermal_leakage", c.oracle.policy.thermal_leakage},
                 {"edge_occupancy", c.oracle.policy.edge_occupancy},
                 {"squeeze_leakage", c.oracle.policy.squeeze_leakage}};
  j["figure4"] = {{"omega_i", c.figure4.omega_i},
                  {"omega_f", c.figure4.omega_f},
                  {"nu_min", c.figure4.nu_min},
                  {"nu_max", c.figure4.nu_max},
                  {"nu_points", c.figure4.nu_points}};
  j["circuit"] = {{"inductance_H", p.inductance},
                  {"capacitance_F", p.capacitance},
                  {"e0_over_c_J_per_F", p.e0_over_c},
                  {"A", p.a},
                  {"B", p.b},
                  {"nu", p.nu},
                  {"nu_units", p.nu_absolute ? "rad_per_s" : "omega_i"},
                  {"n_cell", p.n_cell},
                  {"mode_index", p.mode},
                  {"flux_quantum_Wb", p.flux_quantum},
                  {"t_hot_K", p.t_hot},
                  {"t_cold_K", p.t_cold},
                  {"t_f_points", c.circuit.t_f_points},
                  {"im_tolerance", c.circuit.im_tolerance}};
  j["output_dir"] = c.output_dir;
  j["plot_script"] = c.plot_script;
  return j.dump(2) + "\n";
}

}  // namespace su11
