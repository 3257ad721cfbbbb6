#pragma once

#include <string>
#include <vector>

#include "json.hpp"

namespace freqlab {

/// Outcome of one identity / inequality checker. For inequality checks,
/// implied_constant = lhs / rhs_without_constant (the smallest constant that
/// makes the inequality hold) and pass compares it against a configured
/// budget. Identity checks put the relative mismatch in implied_constant and
/// the tolerance in meta.
struct CheckReport {
  std::string name;
  double lhs = 0;
  double rhs_without_constant = 0;
  double implied_constant = 0;
  bool pass = true;
  nlohmann::json meta = nlohmann::json::object();
};

/// Shortest decimal string that round-trips the exact binary double.
std::string format_double(double x);

nlohmann::json to_json(const CheckReport& r);

void write_checks_json(const std::string& path, const std::vector<CheckReport>& reports);

/// Two-column whitespace-separated data file for external plotting tools.
void write_xy(const std::string& path, const std::vector<double>& x,
              const std::vector<double>& y);

}  // namespace freqlab
