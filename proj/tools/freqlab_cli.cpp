// freqlab: config-driven checks for the lifted biharmonic frequency machinery.
//
// Verbs:
//   run <config>      full pipeline: profile, checks, report files
//   verify <config>   checks only
//   profile <config>  frequency CSV and plot data only
//   solve <config>    direct 2D solve, writes a field dump
//
// Exit codes: 0 all checks pass, 1 check failure, 2 config error, 3 runtime error.

#include <iostream>

#include "CLI11.hpp"
#include "freqlab/runner.hpp"

int main(int argc, char** argv) {
  CLI::App app{"numerical laboratory for biharmonic frequency functions"};
  app.require_subcommand(1);

  std::string config_path;
  freqlab::RunMode mode = freqlab::RunMode::Run;

  auto add_verb = [&](const char* name, const char* desc, freqlab::RunMode m) {
    CLI::App* sub = app.add_subcommand(name, desc);
    sub->add_option("config", config_path, "path to the JSON experiment config")->required();
    sub->callback([&mode, m]() { mode = m; });
    return sub;
  };
  add_verb("run", "full pipeline: profile, checks, reports", freqlab::RunMode::Run);
  add_verb("verify", "checks only", freqlab::RunMode::Verify);
  add_verb("profile", "frequency profile CSV only", freqlab::RunMode::Profile);
  add_verb("solve", "direct solve, field dump output", freqlab::RunMode::Solve);

  CLI11_PARSE(app, argc, argv);

  try {
    freqlab::ExperimentConfig cfg = freqlab::load_config(config_path);
    return freqlab::run(cfg, mode);
  } catch (const freqlab::ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
}
