#pragma once

#include "freqlab/frequency.hpp"

namespace freqlab {

/// Least-squares log-log fit of ball mass against radius:
/// order = (slope - d) / 2 for ambient dimension d.
struct OrderEstimate {
  Point point{};
  double slope = 0;
  double order = 0;
  double fit_residual = 0;  // max |log-mass residual| of the fit
  std::vector<double> radii_used;
};

/// Errors: "field vanishes beyond resolution" when the smallest ball carries
/// no mass. Scale-invariant: estimate_order(c * field) == estimate_order(field).
OrderEstimate estimate_order(const ScalarField& field, const Point& x0,
                             const std::vector<double>& radii);

/// Frequency-based order bound C (N(r_max) + grad_norm + 1)/(alpha + 1) + 2.
double order_from_frequency(const FrequencyProfile& profile, const LiftParams& p,
                            double grad_norm, double constant = 1.0);

/// Scaling bound constant * (sup|V|^{1/4} + sup|grad V| + 1).
double theorem_bound(const PotentialSpec& V, double constant);

}  // namespace freqlab
