#pragma once

#include "freqlab/config.hpp"
#include "freqlab/frequency.hpp"

namespace freqlab {

enum class RunMode {
  Run,      // full pipeline: profile + checks + all report files
  Verify,   // checks only (checks.json)
  Profile,  // frequency CSV and plot data only
  Solve,    // solver only, writes a field dump
};

/// Default pass budget for a check name (configs may override per check).
double default_budget(const std::string& check);

/// Executes the pipeline described by the config. Returns the process exit
/// code: 0 all requested checks pass, 1 some check failed, 2 configuration
/// error, 3 runtime error. Messages go to stderr; report files to
/// cfg.output_dir.
int run(const ExperimentConfig& cfg, RunMode mode);

/// Profile CSV with header r,H,I1,I2,I3,I4,I5,I_form1,I_form2,h,N and full
/// round-trip decimal formatting.
void write_profile_csv(const std::string& path, const FrequencyProfile& profile);

/// Field dump: header line dim,points_per_axis,extent then one node value per
/// line in row-major order, full-precision decimal.
void write_field_dump(const std::string& path, const ScalarField& field);

}  // namespace freqlab
