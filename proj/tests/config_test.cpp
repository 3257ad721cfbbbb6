#include <cstdio>
#include <filesystem>
#include <fstream>

#include "doctest.h"
#include "freqlab/config.hpp"
#include "freqlab/runner.hpp"

using namespace freqlab;
namespace fs = std::filesystem;

namespace {

nlohmann::json base_json() {
  return nlohmann::json{
      {"case", "harmonic_k1"}, {"dim", 2}, {"points_per_axis", 65}, {"extent", 0.5}};
}

fs::path fresh_dir(const char* tag) {
  fs::path p = fs::temp_directory_path() / (std::string("freqlab_test_") + tag);
  fs::remove_all(p);
  fs::create_directories(p);
  return p;
}

}  // namespace

TEST_CASE("parse_config") {
  SUBCASE("defaults") {
    ExperimentConfig cfg = parse_config(base_json());
    CHECK(cfg.case_name == "harmonic_k1");
    CHECK(cfg.radii.min == 0.15);
    CHECK(cfg.radii.max == 0.45);
    CHECK(cfg.radii.count == 13);
    CHECK(cfg.alpha == -1.0);
    CHECK(cfg.output_dir == "out");
    CHECK_FALSE(cfg.solve.has_value());
  }
  SUBCASE("unknown root key is rejected") {
    auto j = base_json();
    j["points_per_axes"] = 65;
    CHECK_THROWS_AS(parse_config(j), ConfigError);
  }
  SUBCASE("unknown radii key is rejected") {
    auto j = base_json();
    j["radii"] = {{"min", 0.1}, {"maximum", 0.4}};
    CHECK_THROWS_AS(parse_config(j), ConfigError);
  }
  SUBCASE("unknown solve key is rejected") {
    auto j = base_json();
    j["solve"] = {{"boundary_case", "harmonic_k2"}, {"iterations", 10}};
    CHECK_THROWS_AS(parse_config(j), ConfigError);
  }
  SUBCASE("wrong value type is a ConfigError, not a raw json exception") {
    auto j = base_json();
    j["dim"] = "two";
    CHECK_THROWS_AS(parse_config(j), ConfigError);
  }
  SUBCASE("center, checks, budgets, solve round-trip") {
    auto j = base_json();
    j["center"] = {0.1, -0.05};
    j["checks"] = {"h-prime", "doubling"};
    j["budgets"] = {{"doubling", 5.0}};
    j["solve"] = {{"boundary_case", "eigen_mu2"}, {"tol", 1e-10}, {"max_iters", 100}};
    ExperimentConfig cfg = parse_config(j);
    CHECK(cfg.center[0] == 0.1);
    CHECK(cfg.center[1] == -0.05);
    CHECK(cfg.checks == std::vector<std::string>{"h-prime", "doubling"});
    CHECK(cfg.budgets.at("doubling") == 5.0);
    REQUIRE(cfg.solve.has_value());
    CHECK(cfg.solve->boundary_case == "eigen_mu2");
    CHECK(cfg.solve->max_iters == 100);
  }
}

TEST_CASE("load_config") {
  fs::path dir = fresh_dir("load");
  SUBCASE("missing file") { CHECK_THROWS_AS(load_config((dir / "nope.json").string()), ConfigError); }
  SUBCASE("invalid JSON") {
    fs::path p = dir / "bad.json";
    std::ofstream(p) << "{not json";
    CHECK_THROWS_AS(load_config(p.string()), ConfigError);
  }
  SUBCASE("valid file") {
    fs::path p = dir / "ok.json";
    std::ofstream(p) << base_json().dump();
    CHECK(load_config(p.string()).case_name == "harmonic_k1");
  }
}

TEST_CASE("validate_config") {
  ExperimentConfig cfg = parse_config(base_json());
  SUBCASE("valid") { CHECK_NOTHROW(validate_config(cfg)); }
  SUBCASE("unknown check") {
    cfg.checks = {"h_prime"};  // underscores are not the accepted spelling
    CHECK_THROWS_AS(validate_config(cfg), ConfigError);
  }
  SUBCASE("radii must fit the usable grid") {
    cfg.radii.max = 0.49;
    CHECK_THROWS_AS(validate_config(cfg), ConfigError);
    cfg.radii.max = 0.45;
    cfg.center[0] = 0.2;
    CHECK_THROWS_AS(validate_config(cfg), ConfigError);
  }
  SUBCASE("budgets must be positive and for known checks") {
    cfg.budgets["doubling"] = -1.0;
    CHECK_THROWS_AS(validate_config(cfg), ConfigError);
    cfg.budgets.clear();
    cfg.budgets["dou"] = 1.0;
    CHECK_THROWS_AS(validate_config(cfg), ConfigError);
  }
  SUBCASE("grid constraints") {
    cfg.points_per_axis = 64;
    CHECK_THROWS_AS(validate_config(cfg), ConfigError);
    cfg.points_per_axis = 65;
    cfg.dim = 4;
    CHECK_THROWS_AS(validate_config(cfg), ConfigError);
  }
  SUBCASE("needs a case or a solve section") {
    cfg.case_name.clear();
    CHECK_THROWS_AS(validate_config(cfg), ConfigError);
  }
}

TEST_CASE("default_budget covers every known check") {
  for (const auto& name : known_checks()) CHECK(default_budget(name) > 0);
  CHECK(default_budget("order") == 0.05);
  CHECK(default_budget("cancellations") == 1e-12);
  CHECK_THROWS(default_budget("nope"));
}

TEST_CASE("run exit codes") {
  SUBCASE("passing checks exit 0 and write reports") {
    ExperimentConfig cfg = parse_config(base_json());
    cfg.checks = {"cancellations", "residuals", "monotonicity"};
    cfg.output_dir = fresh_dir("ok").string();
    CHECK(run(cfg, RunMode::Run) == 0);
    CHECK(fs::exists(fs::path(cfg.output_dir) / "checks.json"));
    CHECK(fs::exists(fs::path(cfg.output_dir) / "profile.csv"));
    CHECK(fs::exists(fs::path(cfg.output_dir) / "N_vs_r.dat"));
  }
  SUBCASE("failed check exits 1") {
    ExperimentConfig cfg = parse_config(base_json());
    cfg.checks = {"order"};
    cfg.budgets["order"] = 1e-15;  // no discrete measurement is this exact
    cfg.output_dir = fresh_dir("fail").string();
    CHECK(run(cfg, RunMode::Verify) == 1);
    CHECK(fs::exists(fs::path(cfg.output_dir) / "checks.json"));
  }
  SUBCASE("configuration problems exit 2") {
    ExperimentConfig cfg = parse_config(base_json());
    cfg.checks = {"no-such-check"};
    cfg.output_dir = fresh_dir("cfg").string();
    CHECK(run(cfg, RunMode::Verify) == 2);
  }
  SUBCASE("runtime failure on a trivial case exits 3") {
    ExperimentConfig cfg = parse_config(base_json());
    cfg.case_name = "zero";
    cfg.checks = {"h-prime"};
    cfg.output_dir = fresh_dir("zero").string();
    CHECK(run(cfg, RunMode::Verify) == 3);
  }
  SUBCASE("solve mode writes a field dump") {
    ExperimentConfig cfg = parse_config(base_json());
    cfg.case_name.clear();
    SolveSection s;
    s.boundary_case = "harmonic_k2";
    cfg.solve = s;
    cfg.output_dir = fresh_dir("solve").string();
    CHECK(run(cfg, RunMode::Solve) == 0);
    std::ifstream in(fs::path(cfg.output_dir) / "solution.txt");
    REQUIRE(in.good());
    std::string header;
    std::getline(in, header);
    CHECK(header == "2,65,0.5");
  }
}
