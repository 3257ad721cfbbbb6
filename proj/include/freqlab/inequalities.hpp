#pragma once

#include "freqlab/frequency.hpp"

namespace freqlab {

/// Measured doubling exponent log(H(r2)/H(r1)) / log(r2/r1).
double doubling_exponent(const LiftedSystem& sys, const Point& center, double r1, double r2);

/// Doubling of H, upper and lower bound, reported as two records: the implied
/// C of H(r2) <= (r2/r1)^{(2a+d) + C(N(r2)+g+1)/(a+1)} H(r1), and the largest
/// admissible C^{-1} of the matching lower bound
/// H(r2) >= (r2/r1)^{(2a+d) + (C^{-1} N(r1) - g - 1)/(a+1)} H(r1).
std::vector<CheckReport> doubling_check(const LiftedSystem& sys, const Point& center,
                                        double r1, double r2, double budget);

/// Doubling of the plain mass h, upper bound
/// h(r2) <= (4/3)^a (2 r2/r1)^{d + C(N(2 r2)+g+1)/(a+1)} h(r1) and the lower
/// bound with (3/4)^a (r2/(2 r1))^{d + (C^{-1} N(2 r1) - g - 1)/(a+1)};
/// requires r2 > 2 r1 so both exponent bases exceed 1.
std::vector<CheckReport> h_doubling(const LiftedSystem& sys, const Point& center,
                                    double r1, double r2, double budget);

/// Changing the center: max over sampled centers z1 in B_{r/32}(z0) (Halton
/// sequence, snapped to grid nodes at t = 0) of
/// N(z1, r/8) / (g + (a+1)^2 + N(z0, 9r/16)); implied C reported.
CheckReport changing_center(const LiftedSystem& sys, const Point& z0, double r,
                            int sample_count, unsigned seed, double budget);

/// int_{B_r} w^2 <= C (lambda^2 + 1) r^{-4} int_{B_{2r}} u^2.
CheckReport caccioppoli_check(const LiftedSystem& sys, const Point& center, double r,
                              double budget);

/// sup_{B_r}|u| <= C (lambda^2 + 1 + g^{(n+2)/4}) r^{-d/2} ||u||_{L2(B_{2r})}
/// with n = d - 1 the base dimension.
CheckReport sup_bound_check(const LiftedSystem& sys, const Point& center, double r,
                            double budget);

}  // namespace freqlab
