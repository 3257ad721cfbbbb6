#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "freqlab/grid.hpp"
#include "json.hpp"

namespace freqlab {

/// Configuration problems exit with status 2 (runtime errors use 3).
struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct RadiiSpec {
  double min = 0.15;
  double max = 0.45;
  int count = 13;
};

struct SolveSection {
  std::string boundary_case;  // builtin case supplying boundary data and V
  double tol = 1e-12;
  int max_iters = 4000;
};

/// One experiment: a case, a grid, a radius window, and a set of checks.
/// Unknown keys in the config file are errors (no silent typo tolerance).
struct ExperimentConfig {
  std::string case_name;
  int dim = 2;
  int points_per_axis = 65;
  double extent = 0.5;
  double alpha = -1.0;  // < 0 means use the selected alpha = sup|grad V|
  Point center{};
  RadiiSpec radii;
  std::vector<std::string> checks;
  std::map<std::string, double> budgets;  // per-check overrides
  std::string output_dir = "out";
  unsigned seed = 1;
  int sample_count = 8;  // changing-center samples
  std::optional<SolveSection> solve;
};

/// Check names accepted in the "checks" list.
const std::vector<std::string>& known_checks();

ExperimentConfig parse_config(const nlohmann::json& j);
ExperimentConfig load_config(const std::string& path);

/// Structural validation beyond parsing (radii fit the grid, checks known).
void validate_config(const ExperimentConfig& cfg);

}  // namespace freqlab
