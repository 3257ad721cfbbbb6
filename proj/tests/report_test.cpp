#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include "doctest.h"
#include "freqlab/report.hpp"
#include "freqlab/runner.hpp"
#include "freqlab/solutions.hpp"
#include "test_helpers.hpp"

using namespace freqlab;
namespace fs = std::filesystem;

namespace {

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  REQUIRE(in.good());
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST_CASE("format_double") {
  SUBCASE("shortest representation of simple values") {
    CHECK(format_double(0.5) == "0.5");
    CHECK(format_double(0.1) == "0.1");
    CHECK(format_double(1.0) == "1");
    CHECK(format_double(-2.25) == "-2.25");
    CHECK(format_double(0.0) == "0");
  }
  SUBCASE("round-trips arbitrary doubles exactly") {
    std::mt19937_64 rng(12345);
    std::uniform_real_distribution<double> dist(-1e6, 1e6);
    for (int i = 0; i < 1000; ++i) {
      const double x = dist(rng);
      CHECK(std::strtod(format_double(x).c_str(), nullptr) == x);
    }
    for (double x : {1e-300, 1e300, 1.0 / 3.0, M_PI}) {
      CHECK(std::strtod(format_double(x).c_str(), nullptr) == x);
    }
  }
}

TEST_CASE("to_json carries the full report shape") {
  CheckReport rep;
  rep.name = "demo";
  rep.lhs = 1.5;
  rep.rhs_without_constant = 3.0;
  rep.implied_constant = 0.5;
  rep.pass = true;
  rep.meta = {{"budget", 4.0}};
  nlohmann::json j = to_json(rep);
  CHECK(j.at("name") == "demo");
  CHECK(j.at("lhs") == 1.5);
  CHECK(j.at("rhs_without_constant") == 3.0);
  CHECK(j.at("implied_constant") == 0.5);
  CHECK(j.at("pass") == true);
  CHECK(j.at("meta").at("budget") == 4.0);
  CHECK(j.size() == 6);
}

TEST_CASE("write_checks_json produces a parseable array") {
  fs::path p = fs::temp_directory_path() / "freqlab_checks_test.json";
  CheckReport a;
  a.name = "first";
  CheckReport b;
  b.name = "second";
  b.pass = false;
  write_checks_json(p.string(), {a, b});
  nlohmann::json j = nlohmann::json::parse(slurp(p));
  REQUIRE(j.is_array());
  REQUIRE(j.size() == 2);
  CHECK(j[0].at("name") == "first");
  CHECK(j[1].at("pass") == false);
}

TEST_CASE("write_xy") {
  fs::path p = fs::temp_directory_path() / "freqlab_xy_test.dat";
  write_xy(p.string(), {0.25, 0.5}, {1.0, -3.5});
  CHECK(slurp(p) == "0.25 1\n0.5 -3.5\n");
  CHECK_THROWS(write_xy(p.string(), {1.0}, {}));
}

TEST_CASE("profile CSV: header and golden row for u = x1") {
  // closed forms on B(0, 1/2), alpha 0, d 2:
  //   H = pi r^4 / 4 = 0.0490874,  I1 = I_form1 = I_form2 = pi r^4 / 2,  N = 2
  LiftedSystem sys =
      freqlab::testing::expr_system(GridSpec{2, 1.0, 257}, [](const Point& z) { return z[0]; });
  FrequencyProfile prof = build_profile(sys, Point{}, {0.4, 0.45, 0.5});
  fs::path p = fs::temp_directory_path() / "freqlab_profile_test.csv";
  write_profile_csv(p.string(), prof);

  std::ifstream in(p);
  std::string header, line, row;
  std::getline(in, header);
  CHECK(header == "r,H,I1,I2,I3,I4,I5,I_form1,I_form2,h,N");
  while (std::getline(in, line)) row = line;  // keep the last data row (r = 0.5)
  std::replace(row.begin(), row.end(), ',', ' ');
  std::istringstream fields(row);
  double r, H, I1, I2, I3, I4, I5, F1, F2, h, N;
  fields >> r >> H >> I1 >> I2 >> I3 >> I4 >> I5 >> F1 >> F2 >> h >> N;
  CHECK(r == 0.5);
  CHECK(H == doctest::Approx(0.0490874).epsilon(2e-3));
  CHECK(I1 == doctest::Approx(0.0981748).epsilon(2e-3));
  CHECK(F1 == doctest::Approx(0.0981748).epsilon(2e-3));
  CHECK(F2 == doctest::Approx(0.0981748).epsilon(2e-3));
  CHECK(I2 == 0.0);
  CHECK(N == doctest::Approx(2.0).epsilon(0.01));
  (void)I3;
  (void)I4;
  (void)I5;
  (void)h;
}

TEST_CASE("write_field_dump round-trips the grid header and values") {
  GridSpec g{2, 0.5, 17};
  ScalarField f = sample(g, [](const Point& z) { return z[0] + 2.0 * z[1]; });
  fs::path p = fs::temp_directory_path() / "freqlab_dump_test.txt";
  write_field_dump(p.string(), f);
  std::ifstream in(p);
  std::string header;
  std::getline(in, header);
  CHECK(header == "2,17,0.5");
  std::size_t count = 0;
  std::string line;
  double first = 1e300;
  while (std::getline(in, line)) {
    if (count == 0) first = std::strtod(line.c_str(), nullptr);
    ++count;
  }
  CHECK(count == g.node_count());
  CHECK(first == f.values[0]);
}
