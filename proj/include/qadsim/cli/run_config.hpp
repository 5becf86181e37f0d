#ifndef QADSIM_CLI_RUN_CONFIG_HPP
#define QADSIM_CLI_RUN_CONFIG_HPP

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "qadsim/decision/decide.hpp"

namespace qadsim::cli {

/// Everything a CLI run depends on. Reports embed it verbatim.
struct RunConfig {
  std::string equation;
  DecisionConfig decision;
  std::vector<std::int64_t> cutoffs;        // sweep
  double T = 0.0;                           // evolve/sample; 0 means T0
  std::vector<double> extrapolation_steps;  // evolve; empty disables
  std::int64_t bound = 10;                  // oracle
  std::size_t grid_size = 101;
  std::size_t levels = 4;
  double gap_tolerance = 1e-9;
  std::size_t record_grid = 101;
  std::uint64_t sample_shots = 10000;
  bool dump_probabilities = false;
  std::string out_dir = "out";
  bool reproducible = false;

  double run_time() const { return T > 0.0 ? T : decision.T0; }
  void validate() const;
};

nlohmann::json to_json(const RunConfig& config);
RunConfig run_config_from_json(const nlohmann::json& j, RunConfig base = {});
RunConfig load_run_config(const std::string& path);

}  // namespace qadsim::cli

#endif  // QADSIM_CLI_RUN_CONFIG_HPP
