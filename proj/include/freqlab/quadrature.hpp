#pragma once

#include <functional>
#include <vector>

#include "freqlab/system.hpp"

namespace freqlab {

/// Ball centered on the t = 0 slice of the lifted grid (for unlifted fields,
/// any center inside the box). The ball plus the stencil margin must fit
/// inside the grid box.
struct Ball {
  Point center{};
  double radius = 0;
};

/// One integrand in a shared ball sweep: integral of
/// integrand * (r^2 - |z - z0|^2)^exponent over the ball. Exponent 0 means a
/// plain (unweighted) sum, which uses the boundary-ramp rule described below.
struct BallTerm {
  double exponent = 0;
  std::function<double(std::size_t, const Point&)> integrand;
};

/// Midpoint-rule quadrature shared across any number of integrands in one
/// sweep. Node-inclusion rules:
///  - exponent > 0: strict inclusion |z - z0| < r; the weight vanishes on the
///    sphere, so the staircase error is O(h^2).
///  - exponent = 0: the indicator is replaced by the centered ramp
///    s = clamp((r - |z - z0|)/h + 1/2, 0, 1), the exact one-dimensional cell
///    overlap in the radial direction. This removes the O(h) staircase bias
///    of plain node counting while keeping the sum deterministic.
/// Summation is deterministic pairwise over the fixed row-major node order.
/// Errors: fewer than 2^dim interior nodes -> "ball under-resolved"; a
/// contributing node masked by `margin` -> "ball exceeds usable grid interior".
std::vector<double> ball_pass(const GridSpec& g, int margin, const Ball& ball,
                              const std::vector<BallTerm>& terms);

/// Single-integrand convenience wrapper (exponent 0 rule).
double integrate_ball(const GridSpec& g, int margin, const Ball& ball,
                      const std::function<double(std::size_t, const Point&)>& integrand);

/// All weighted integrals of one (system, ball) pair, computed in one sweep.
/// W below is (r^2 - |z - z0|^2).
struct WeightedIntegrals {
  double r = 0;
  double alpha = 0;
  double H = 0;        // int (u^2 + w^2) W^alpha
  double h_plain = 0;  // int (u^2 + w^2)
  double I1 = 0;       // int |grad u|^2 W^{alpha+1}
  double I2 = 0;       // int |grad w|^2 W^{alpha+1}
  double I3 = 0;       // (lambda/2)   int u^2 W^{alpha+1}
  double I4 = 0;       // (3 lambda/2) int w^2 W^{alpha+1}
  double I5 = 0;       // int (1 + V - lambda^2/4) u w W^{alpha+1}
  double I_form1 = 0;  // 2(alpha+1) int (u grad u + w grad w).(z - z0) W^alpha
  double I_form2 = 0;  // I1 + I2 + I3 + I4 + I5
};

WeightedIntegrals compute_integrals(const LiftedSystem& sys, const Ball& ball);

double compute_H(const LiftedSystem& sys, const Ball& ball);
double compute_h(const LiftedSystem& sys, const Ball& ball);
WeightedIntegrals compute_I(const LiftedSystem& sys, const Ball& ball);

}  // namespace freqlab
