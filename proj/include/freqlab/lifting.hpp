#pragma once

#include <functional>

#include "freqlab/grid.hpp"
#include "freqlab/report.hpp"

namespace freqlab {

/// The potential V on the base domain, extended constantly in the lifted
/// t-direction (expressions simply ignore the extra coordinate). Declared
/// norms may exceed sampled norms: closed-form knowledge wins, sampled values
/// only validate.
struct PotentialSpec {
  FieldExpr value;                          // V(x)
  std::function<Point(const Point&)> grad;  // nullptr means identically zero
  double sup_norm = 0;                      // declared sup |V|
  double grad_sup_norm = 0;                 // declared sup |grad V|

  Point grad_at(const Point& p) const { return grad ? grad(p) : Point{}; }
};

PotentialSpec zero_potential();
PotentialSpec constant_potential(double c);

/// lambda = 2 sup|V|^{1/2}, sqrt(lambda) = sqrt(2) sup|V|^{1/4},
/// alpha = sup|grad V| (an override may replace it for experiments).
struct LiftParams {
  double lambda = 0;
  double alpha = 0;
  double sqrt_lambda = 0;
};

LiftParams select_params(const PotentialSpec& V);

/// Verifies sup |V - lambda^2/4| <= sup |grad V| by dense sampling over the
/// given grid (for constant V the left side is zero to round-off).
CheckReport check_potential_shift(const PotentialSpec& V, const LiftParams& p,
                                  const GridSpec& sample_grid, double tolerance = 1e-9);

/// u(x) e^{sqrt(lambda) t} on the lifted grid; the t = 0 slice equals u
/// exactly. The lifted grid must share extent and resolution with u's grid
/// and have one more dimension.
ScalarField lift_solution(const ScalarField& u, const LiftParams& p,
                          const GridSpec& lifted_grid);

}  // namespace freqlab
