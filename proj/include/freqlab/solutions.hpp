#pragma once

#include <optional>
#include <string>

#include "freqlab/system.hpp"

namespace freqlab {

/// A closed-form test solution with analytic metadata. Direct cases (lift ==
/// false) are sampled on the analysis grid as-is; lifted cases sample
/// u(x) e^{sqrt(lambda) t} on a grid with one extra (trailing) t-axis.
struct CaseSpec {
  std::string name;
  int base_dim = 2;       // dimension the closed form is written in
  bool lift = false;
  FieldExpr u;
  PotentialSpec potential;
  double homogeneity = -1;    // degree k when u is homogeneous, else -1
  double mu = 0;              // eigenfunction parameter, 0 if n/a
  double expected_order = -1; // analytic vanishing order at the origin, -1 unknown
  bool satisfies_pde = true;  // whether bilap(u) = V u holds analytically
  unsigned seed = 0;          // for the random case
};

/// Errors: unknown name -> error listing the available cases.
CaseSpec builtin_case(const std::string& name);

std::vector<std::string> builtin_case_names();

/// Samples the case on the given grid (which must be base_dim + 1 dimensional
/// for lifted cases, or any dim >= what the closed form uses for direct ones)
/// and assembles the full system. alpha_override >= 0 replaces the selected
/// alpha = sup|grad V| for weight experiments.
LiftedSystem instantiate(const CaseSpec& spec, const GridSpec& grid,
                         double alpha_override = -1.0);

/// V = bilap_u / u where |u| >= floor; outside the mask V is set to 0 and the
/// valid() predicate is false (downstream balls must stay inside the mask).
/// Norms are sampled over the masked nodes of sample_grid and declared with a
/// 5% headroom. Errors: empty mask.
struct ManufacturedPotential {
  PotentialSpec potential;
  std::function<bool(const Point&)> valid;
};
ManufacturedPotential manufacture_potential(FieldExpr u, FieldExpr bilap_u, double floor,
                                            const GridSpec& sample_grid);

/// Direct 2D solve of bilap(u) = V u as the coupled second-order system
/// lap(u) = v, lap(v) = V u with (u, v) prescribed on the square boundary.
struct SolveConfig {
  GridSpec grid;             // dim must be 2
  FieldExpr boundary_u;      // u on boundary nodes
  FieldExpr boundary_lap_u;  // lap u on boundary nodes
  PotentialSpec potential;
  double tol = 1e-12;        // Krylov relative tolerance
  int max_iters = 4000;
};

/// Errors: non-convergence -> error carrying the residual history.
ScalarField solve_biharmonic(const SolveConfig& cfg);

/// Closed-form lap(u) of a builtin case (used for solver boundary data).
/// Errors: case without a closed-form Laplacian.
FieldExpr case_laplacian(const CaseSpec& spec);

}  // namespace freqlab
