#pragma once

#include "freqlab/quadrature.hpp"

namespace freqlab {

/// Per-radius weighted integrals at a fixed center, with N = I_form2 / H.
struct FrequencyProfile {
  Point center{};
  int dim = 0;  // ambient grid dimension of the underlying system
  std::vector<double> radii;    // strictly increasing
  std::vector<WeightedIntegrals> records;
  std::vector<double> N;

  std::size_t size() const { return radii.size(); }
};

/// count radii geometrically spaced from r_min to r_max inclusive.
std::vector<double> geometric_radii(double r_min, double r_max, int count);

/// Errors: H = 0 at some radius -> "trivial solution on ball".
FrequencyProfile build_profile(const LiftedSystem& sys, const Point& center,
                               const std::vector<double>& radii);

/// Derivative identity for H: dH/dr = (2 alpha + d)/r * H + I/((alpha+1) r),
/// with d the ambient grid dimension. dH/dr is estimated by a centered
/// log-log difference (exact on power laws; falls back to a nonuniform
/// three-point formula when the values are not all positive). Reports the
/// max relative mismatch over interior radii; pass iff <= tol.
CheckReport check_H_prime(const FrequencyProfile& profile, double tol);

/// All integrals of one radius of the derivative identity for I: the two
/// gradient-projection terms and every remainder term. Field names follow
/// the remainder grouping R1^1..R5^10 used in the identity's term list.
struct IPrimeTerms {
  double P_u = 0, P_w = 0;  // int (grad u . (z-z0))^2 W^alpha, same for w
  double R1_1 = 0, R1_2 = 0, R1_3 = 0, R1_4 = 0, R1_5 = 0;
  double R2_1 = 0, R2_2 = 0, R2_3 = 0, R2_4 = 0, R2_5 = 0, R2_6 = 0;
  double R3_1 = 0, R3_2 = 0, R3_3 = 0;
  double R4_1 = 0, R4_2 = 0, R4_3 = 0;
  double R5_1 = 0, R5_2 = 0, R5_3 = 0, R5_4 = 0, R5_5 = 0;
  double R5_6 = 0, R5_7 = 0, R5_8 = 0, R5_9 = 0, R5_10 = 0;

  double remainder_sum() const;
};

IPrimeTerms compute_iprime_terms(const LiftedSystem& sys, const Ball& ball);

/// Derivative identity for I: compares the finite difference of I against
/// (2 alpha + d)/r I + 4(alpha+1)/r (P_u + P_w) + (2/r)(I3 + I4 + I5) + sum R.
CheckReport check_I_prime(const FrequencyProfile& profile, const LiftedSystem& sys,
                          double tol);

/// The four structural cancellations R1^5 + R3^3, R1^4 + R3^2, R2^6 + R4^3,
/// R2^5 + R4^2; each pair is built from one shared discrete integral with
/// opposite signs, so the sums must vanish to round-off (<= 1e-12 relative).
CheckReport check_cancellations(const LiftedSystem& sys, const Ball& ball);

/// Smallest C >= 0 such that r -> e^{Cr} (N(r) + grad_norm + 1) is
/// nondecreasing across the sampled radii.
double fit_monotonicity_constant(const FrequencyProfile& profile, double grad_norm);

}  // namespace freqlab
