#include "qadsim/cli/run_config.hpp"

#include <fstream>

#include "qadsim/decision/report.hpp"
#include "qadsim/error.hpp"

namespace qadsim::cli {

using nlohmann::json;

void RunConfig::validate() const {
  decision.validate();
  if (T < 0.0) throw ConfigError("T must be positive");
  if (bound < 0) throw ConfigError("bound must be non-negative");
  if (grid_size < 2) throw ConfigError("grid size must be at least 2");
  if (levels < 2) throw ConfigError("levels must be at least 2");
  if (record_grid < 2) throw ConfigError("record grid must be at least 2");
  if (sample_shots == 0) throw ConfigError("shots must be at least 1");
  if (!extrapolation_steps.empty() && extrapolation_steps.size() < 3) {
    throw ConfigError("extrapolation needs at least 3 step sizes");
  }
}

json to_json(const RunConfig& c) {
  return {{"equation", c.equation},
          {"decision", to_json(c.decision)},
          {"cutoffs", c.cutoffs},
          {"T", c.T},
          {"extrapolation_steps", c.extrapolation_steps},
          {"bound", c.bound},
          {"grid_size", c.grid_size},
          {"levels", c.levels},
          {"gap_tolerance", c.gap_tolerance},
          {"record_grid", c.record_grid},
          {"sample_shots", c.sample_shots},
          {"dump_probabilities", c.dump_probabilities},
          {"out_dir", c.out_dir},
          {"reproducible", c.reproducible}};
}

RunConfig run_config_from_json(const json& j, RunConfig c) {
  if (!j.is_object()) throw ConfigError("config must be a JSON object");
  const json known = to_json(RunConfig{});
  for (const auto& item : j.items()) {
    if (!known.contains(item.key())) throw ConfigError("unknown config key '" + item.key() + "'");
  }
  try {
    if (j.contains("equation")) c.equation = j["equation"].get<std::string>();
    if (j.contains("decision")) c.decision = decision_config_from_json(j["decision"], c.decision);
    if (j.contains("cutoffs")) c.cutoffs = j["cutoffs"].get<std::vector<std::int64_t>>();
    if (j.contains("T")) c.T = j["T"].get<double>();
    if (j.contains("extrapolation_steps")) {
      c.extrapolation_steps = j["extrapolation_steps"].get<std::vector<double>>();
    }
    if (j.contains("bound")) c.bound = j["bound"].get<std::int64_t>();
    if (j.contains("grid_size")) c.grid_size = j["grid_size"].get<std::size_t>();
    if (j.contains("levels")) c.levels = j["levels"].get<std::size_t>();
    if (j.contains("gap_tolerance")) c.gap_tolerance = j["gap_tolerance"].get<double>();
    if (j.contains("record_grid")) c.record_grid = j["record_grid"].get<std::size_t>();
    if (j.contains("sample_shots")) c.sample_shots = j["sample_shots"].get<std::uint64_t>();
    if (j.contains("dump_probabilities")) c.dump_probabilities = j["dump_probabilities"].get<bool>();
    if (j.contains("out_dir")) c.out_dir = j["out_dir"].get<std::string>();
    if (j.contains("reproducible")) c.reproducible = j["reproducible"].get<bool>();
  } catch (const json::exception& e) {
    throw ConfigError(std::string("invalid config: ") + e.what());
  }
  return c;
}

RunConfig load_run_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file " + path);
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw ConfigError("config file " + path + " is not valid JSON: " + e.what());
  }
  return run_config_from_json(j);
}

}  // namespace qadsim::cli
