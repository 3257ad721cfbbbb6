#include "freqlab/report.hpp"

#include <charconv>
#include <fstream>
#include <stdexcept>

namespace freqlab {

std::string format_double(double x) {
  char buf[40];
  auto res = std::to_chars(buf, buf + sizeof(buf), x);
  return std::string(buf, res.ptr);
}

nlohmann::json to_json(const CheckReport& r) {
  return nlohmann::json{{"name", r.name},
                        {"lhs", r.lhs},
                        {"rhs_without_constant", r.rhs_without_constant},
                        {"implied_constant", r.implied_constant},
                        {"pass", r.pass},
                        {"meta", r.meta}};
}

void write_checks_json(const std::string& path, const std::vector<CheckReport>& reports) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& r : reports) arr.push_back(to_json(r));
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << arr.dump(2) << "\n";
}

void write_xy(const std::string& path, const std::vector<double>& x,
              const std::vector<double>& y) {
  if (x.size() != y.size()) throw std::runtime_error("write_xy: length mismatch");
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  for (std::size_t i = 0; i < x.size(); ++i)
    out << format_double(x[i]) << " " << format_double(y[i]) << "\n";
}

}  // namespace freqlab
