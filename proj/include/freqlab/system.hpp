#pragma once

#include <vector>

#include "freqlab/lifting.hpp"

namespace freqlab {

/// The coupled second-order pair on the lifted grid: w = lap(u) - (lambda/2)u,
/// with gradients and the sampled potential cached for the quadrature layer.
/// Field margins: u has margin m, w and du have m+1, dw has m+2; quadrature
/// must respect quad_margin().
struct LiftedSystem {
  ScalarField u;                 // the (lifted) solution
  ScalarField w;                 // lap(u) - (lambda/2) u
  std::vector<ScalarField> du;   // grad u
  std::vector<ScalarField> dw;   // grad w
  ScalarField vpot;              // V sampled on the same grid
  PotentialSpec potential;
  LiftParams params;

  const GridSpec& grid() const { return u.grid; }
  int quad_margin() const { return dw.empty() ? u.margin + 2 : dw[0].margin; }
};

ScalarField compute_w(const ScalarField& u_tilde, const LiftParams& p);

/// Builds the full system (w, gradients, sampled V) from a lifted field.
LiftedSystem make_system(ScalarField u_tilde, const PotentialSpec& V, const LiftParams& p);

/// Residual of lap(w) - (3/2) lambda w = (V - lambda^2/4) u on the
/// doubly-interior region. Reports max |residual|, its constant against h^2
/// (implied_constant = max / h^2), pass iff that constant <= budget.
CheckReport residual_second(const LiftedSystem& sys, double budget);

/// Residual of lap(lap(u)) = 2 lambda lap(u) + (V - lambda^2) u, with the
/// composed discrete double Laplacian; same reporting convention.
CheckReport residual_biharmonic(const ScalarField& u_tilde, const PotentialSpec& V,
                                const LiftParams& p, double budget);

}  // namespace freqlab
