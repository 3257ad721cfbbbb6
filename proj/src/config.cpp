#include "freqlab/config.hpp"

#include <algorithm>
#include <fstream>

namespace freqlab {

namespace {

void reject_unknown_keys(const nlohmann::json& j, const std::vector<std::string>& allowed,
                         const std::string& where) {
  for (auto it = j.begin(); it != j.end(); ++it)
    if (std::find(allowed.begin(), allowed.end(), it.key()) == allowed.end())
      throw ConfigError("unknown key '" + it.key() + "' in " + where);
}

template <typename T>
void read(const nlohmann::json& j, const char* key, T& out) {
  if (j.contains(key)) out = j.at(key).get<T>();
}

}  // namespace

const std::vector<std::string>& known_checks() {
  static const std::vector<std::string> names = {
      "residuals",   "h-prime",       "i-prime",     "cancellations",
      "monotonicity", "doubling",     "changing-center", "caccioppoli",
      "sup-bound",   "order",         "theorem-bound",   "frequency-scaling"};
  return names;
}

ExperimentConfig parse_config(const nlohmann::json& j) {
  if (!j.is_object()) throw ConfigError("config root must be an object");
  reject_unknown_keys(j,
                      {"case", "dim", "points_per_axis", "extent", "alpha", "center",
                       "radii", "checks", "budgets", "output_dir", "seed", "sample_count",
                       "solve"},
                      "config");
  ExperimentConfig cfg;
  try {
    read(j, "case", cfg.case_name);
    read(j, "dim", cfg.dim);
    read(j, "points_per_axis", cfg.points_per_axis);
    read(j, "extent", cfg.extent);
    read(j, "alpha", cfg.alpha);
    if (j.contains("center")) {
      auto c = j.at("center").get<std::vector<double>>();
      if (c.size() > 3) throw ConfigError("center has more than 3 components");
      for (std::size_t k = 0; k < c.size(); ++k) cfg.center[k] = c[k];
    }
    if (j.contains("radii")) {
      const auto& r = j.at("radii");
      reject_unknown_keys(r, {"min", "max", "count"}, "radii");
      read(r, "min", cfg.radii.min);
      read(r, "max", cfg.radii.max);
      read(r, "count", cfg.radii.count);
    }
    read(j, "checks", cfg.checks);
    if (j.contains("budgets"))
      cfg.budgets = j.at("budgets").get<std::map<std::string, double>>();
    read(j, "output_dir", cfg.output_dir);
    read(j, "seed", cfg.seed);
    read(j, "sample_count", cfg.sample_count);
    if (j.contains("solve")) {
      const auto& s = j.at("solve");
      reject_unknown_keys(s, {"boundary_case", "tol", "max_iters"}, "solve");
      SolveSection sec;
      read(s, "boundary_case", sec.boundary_case);
      read(s, "tol", sec.tol);
      read(s, "max_iters", sec.max_iters);
      cfg.solve = sec;
    }
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError(std::string("config parse error: ") + e.what());
  }
  return cfg;
}

ExperimentConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot read config file " + path);
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError(std::string("config is not valid JSON: ") + e.what());
  }
  return parse_config(j);
}

void validate_config(const ExperimentConfig& cfg) {
  if (cfg.case_name.empty() && !cfg.solve)
    throw ConfigError("config needs a 'case' or a 'solve' section");
  if (cfg.dim < 1 || cfg.dim > 3) throw ConfigError("dim must be 1, 2 or 3");
  if (cfg.points_per_axis < 17 || cfg.points_per_axis % 2 == 0)
    throw ConfigError("points_per_axis must be odd and >= 17");
  if (!(cfg.extent > 0)) throw ConfigError("extent must be positive");
  if (!(cfg.radii.min > 0) || !(cfg.radii.max > cfg.radii.min) || cfg.radii.count < 2)
    throw ConfigError("radii need 0 < min < max and count >= 2");
  const double h = 2.0 * cfg.extent / (cfg.points_per_axis - 1);
  double off = 0;
  for (int k = 0; k < cfg.dim; ++k) off = std::max(off, std::abs(cfg.center[k]));
  if (off + cfg.radii.max + 3.0 * h > cfg.extent)
    throw ConfigError("radii do not fit the grid (need center offset + max + 3h <= extent)");
  for (const auto& c : cfg.checks)
    if (std::find(known_checks().begin(), known_checks().end(), c) == known_checks().end())
      throw ConfigError("unknown check '" + c + "'");
  for (const auto& [k, v] : cfg.budgets) {
    if (std::find(known_checks().begin(), known_checks().end(), k) == known_checks().end())
      throw ConfigError("budget for unknown check '" + k + "'");
    if (!(v > 0)) throw ConfigError("budget for '" + k + "' must be positive");
  }
  if (cfg.sample_count < 1) throw ConfigError("sample_count must be >= 1");
}

}  // namespace freqlab
