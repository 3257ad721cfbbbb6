#include "freqlab/frequency.hpp"

#include <cmath>
#include <stdexcept>

namespace freqlab {

namespace {

// Centered derivative estimate at interior index j. When the stencil values
// are all positive, differentiate log f against log r (exact on power laws,
// which is what H and I are to leading order); otherwise fall back to the
// nonuniform three-point formula.
double centered_derivative(const std::vector<double>& r, const std::vector<double>& f,
                           std::size_t j) {
  if (f[j - 1] > 0 && f[j] > 0 && f[j + 1] > 0) {
    const double slope = (std::log(f[j + 1]) - std::log(f[j - 1])) /
                         (std::log(r[j + 1]) - std::log(r[j - 1]));
    return slope * f[j] / r[j];
  }
  const double h1 = r[j] - r[j - 1], h2 = r[j + 1] - r[j];
  return -h2 / (h1 * (h1 + h2)) * f[j - 1] + (h2 - h1) / (h1 * h2) * f[j] +
         h1 / (h2 * (h1 + h2)) * f[j + 1];
}

double rel_mismatch(double a, double b) {
  const double denom = std::max(std::abs(a), std::abs(b));
  return denom > 0 ? std::abs(a - b) / denom : 0.0;
}

}  // namespace

std::vector<double> geometric_radii(double r_min, double r_max, int count) {
  if (!(r_min > 0) || !(r_max > r_min) || count < 2)
    throw std::runtime_error("geometric_radii: need 0 < r_min < r_max and count >= 2");
  std::vector<double> out(count);
  const double ratio = std::pow(r_max / r_min, 1.0 / (count - 1));
  for (int j = 0; j < count; ++j) out[j] = r_min * std::pow(ratio, j);
  out.back() = r_max;
  return out;
}

FrequencyProfile build_profile(const LiftedSystem& sys, const Point& center,
                               const std::vector<double>& radii) {
  for (std::size_t j = 1; j < radii.size(); ++j)
    if (!(radii[j] > radii[j - 1]))
      throw std::runtime_error("build_profile: radii must be strictly increasing");
  FrequencyProfile prof;
  prof.center = center;
  prof.dim = sys.grid().dim;
  prof.radii = radii;
  prof.records.reserve(radii.size());
  prof.N.reserve(radii.size());
  for (double r : radii) {
    WeightedIntegrals rec = compute_integrals(sys, Ball{center, r});
    if (!(rec.H > 0)) throw std::runtime_error("trivial solution on ball");
    prof.N.push_back(rec.I_form2 / rec.H);
    prof.records.push_back(rec);
  }
  return prof;
}

CheckReport check_H_prime(const FrequencyProfile& profile, double tol) {
  if (profile.size() < 3) throw std::runtime_error("check_H_prime: need >= 3 radii");
  const double alpha = profile.records[0].alpha;
  const int d = profile.dim;
  std::vector<double> H(profile.size());
  for (std::size_t j = 0; j < profile.size(); ++j) H[j] = profile.records[j].H;
  double worst = 0;
  std::size_t worst_j = 0;
  for (std::size_t j = 1; j + 1 < profile.size(); ++j) {
    const double r = profile.radii[j];
    const double lhs = centered_derivative(profile.radii, H, j);
    const double rhs =
        (2.0 * alpha + d) / r * H[j] + profile.records[j].I_form2 / ((alpha + 1.0) * r);
    const double m = rel_mismatch(lhs, rhs);
    if (m > worst) {
      worst = m;
      worst_j = j;
    }
  }
  CheckReport rep;
  rep.name = "h_prime_identity";
  rep.lhs = worst;
  rep.rhs_without_constant = tol;
  rep.implied_constant = worst;
  rep.pass = worst <= tol;
  rep.meta = {{"worst_radius", profile.radii[worst_j]}, {"tolerance", tol},
              {"radii", profile.radii.size()}};
  return rep;
}

double IPrimeTerms::remainder_sum() const {
  return R1_1 + R1_2 + R1_3 + R1_4 + R1_5 + R2_1 + R2_2 + R2_3 + R2_4 + R2_5 + R2_6 +
         R3_1 + R3_2 + R3_3 + R4_1 + R4_2 + R4_3 + R5_1 + R5_2 + R5_3 + R5_4 + R5_5 +
         R5_6 + R5_7 + R5_8 + R5_9 + R5_10;
}

IPrimeTerms compute_iprime_terms(const LiftedSystem& sys, const Ball& ball) {
  const GridSpec& g = sys.grid();
  const int dim = g.dim;
  const double alpha = sys.params.alpha;
  const double lambda = sys.params.lambda;
  const double shift = lambda * lambda / 4.0;
  const double r = ball.radius;
  const Point z0 = ball.center;
  const double* u = sys.u.values.data();
  const double* w = sys.w.values.data();
  const double* v = sys.vpot.values.data();
  const double* du[3] = {nullptr, nullptr, nullptr};
  const double* dw[3] = {nullptr, nullptr, nullptr};
  for (int k = 0; k < dim; ++k) {
    du[k] = sys.du[k].values.data();
    dw[k] = sys.dw[k].values.data();
  }
  const auto& pot = sys.potential;

  auto proj_u = [du, dim, z0](std::size_t i, const Point& z) {
    double s = 0;
    for (int k = 0; k < dim; ++k) s += du[k][i] * (z[k] - z0[k]);
    return s * s;
  };
  auto proj_w = [dw, dim, z0](std::size_t i, const Point& z) {
    double s = 0;
    for (int k = 0; k < dim; ++k) s += dw[k][i] * (z[k] - z0[k]);
    return s * s;
  };
  auto grad_dot = [du, dw, dim](std::size_t i) {
    double s = 0;
    for (int k = 0; k < dim; ++k) s += du[k][i] * dw[k][i];
    return s;
  };

  std::vector<BallTerm> terms{
      {alpha, proj_u},
      {alpha, proj_w},
      // uw grad V . (z - z0), weight alpha + 1
      {alpha + 1.0, [&pot, u, w, dim, z0](std::size_t i, const Point& z) {
         Point gv = pot.grad_at(z);
         double s = 0;
         for (int k = 0; k < dim; ++k) s += gv[k] * (z[k] - z0[k]);
         return u[i] * w[i] * s;
       }},
      // weight alpha + 2 from here on
      {alpha + 2.0, [w](std::size_t i, const Point&) { return w[i] * w[i]; }},       // A1
      {alpha + 2.0, [u, w](std::size_t i, const Point&) { return u[i] * w[i]; }},    // A2
      {alpha + 2.0, [&grad_dot](std::size_t i, const Point&) { return grad_dot(i); }},  // A3
      {alpha + 2.0, [du, dim](std::size_t i, const Point&) {
         double s = 0;
         for (int k = 0; k < dim; ++k) s += du[k][i] * du[k][i];
         return s;
       }},                                                                            // A4
      {alpha + 2.0, [u](std::size_t i, const Point&) { return u[i] * u[i]; }},        // A5
      {alpha + 2.0, [u, v, shift](std::size_t i, const Point&) {
         const double vs = v[i] - shift;
         return vs * vs * u[i] * u[i];
       }},                                                                            // A6
      {alpha + 2.0, [u, w, v, shift](std::size_t i, const Point&) {
         return (v[i] - shift) * u[i] * w[i];
       }},                                                                            // A7
      {alpha + 2.0, [&pot, u, dw, dim](std::size_t i, const Point& z) {
         Point gv = pot.grad_at(z);
         double s = 0;
         for (int k = 0; k < dim; ++k) s += gv[k] * dw[k][i];
         return u[i] * s;
       }},                                                                            // A8
      {alpha + 2.0, [&grad_dot, v, shift](std::size_t i, const Point&) {
         return (v[i] - shift) * grad_dot(i);
       }},                                                                            // A9
      {alpha + 2.0, [dw, dim](std::size_t i, const Point&) {
         double s = 0;
         for (int k = 0; k < dim; ++k) s += dw[k][i] * dw[k][i];
         return s;
       }},                                                                            // A10
      {alpha + 2.0, [u, v, shift](std::size_t i, const Point&) {
         return (v[i] - shift) * u[i] * u[i];
       }},                                                                            // A11
      {alpha + 2.0, [w, v, shift](std::size_t i, const Point&) {
         return (v[i] - shift) * w[i] * w[i];
       }},                                                                            // A12
      {alpha + 2.0, [&pot, u, w, du, dw, dim](std::size_t i, const Point& z) {
         Point gv = pot.grad_at(z);
         double s = 0;
         for (int k = 0; k < dim; ++k) s += (u[i] * dw[k][i] + w[i] * du[k][i]) * gv[k];
         return s;
       }},                                                                            // A13
  };
  auto vals = ball_pass(g, sys.quad_margin(), ball, terms);
  const double P_u = vals[0], P_w = vals[1], B1 = vals[2];
  const double A1 = vals[3], A2 = vals[4], A3 = vals[5], A4 = vals[6], A5 = vals[7],
               A6 = vals[8], A7 = vals[9], A8 = vals[10], A9 = vals[11], A10 = vals[12],
               A11 = vals[13], A12 = vals[14], A13 = vals[15];
  const double c2 = 1.0 / ((alpha + 2.0) * r);

  IPrimeTerms t;
  t.P_u = P_u;
  t.P_w = P_w;
  t.R1_1 = -c2 * A1;
  t.R1_2 = -c2 * lambda * A2;
  t.R1_3 = -c2 * A3;
  t.R1_4 = -0.5 * c2 * lambda * A4;
  t.R1_5 = -0.25 * c2 * lambda * lambda * A5;
  t.R2_1 = -c2 * A6;
  t.R2_2 = -3.0 * c2 * lambda * A7;
  t.R2_3 = -c2 * A8;
  t.R2_4 = -c2 * A9;
  t.R2_5 = -1.5 * c2 * lambda * A10;
  t.R2_6 = -2.25 * c2 * lambda * lambda * A1;
  t.R3_1 = 0.5 * c2 * lambda * A2;
  t.R3_2 = 0.5 * c2 * lambda * A4;
  t.R3_3 = 0.25 * c2 * lambda * lambda * A5;
  t.R4_1 = 1.5 * c2 * lambda * A7;
  t.R4_2 = 1.5 * c2 * lambda * A10;
  t.R4_3 = 2.25 * c2 * lambda * lambda * A1;
  t.R5_1 = B1 / r;
  t.R5_2 = 0.5 * c2 * A6;
  t.R5_3 = 0.5 * c2 * A11;
  t.R5_4 = c2 * lambda * A7;
  t.R5_5 = c2 * lambda * A2;
  t.R5_6 = 0.5 * c2 * A12;
  t.R5_7 = 0.5 * c2 * A1;
  t.R5_8 = c2 * A9;
  t.R5_9 = c2 * A3;
  t.R5_10 = 0.5 * c2 * A13;
  return t;
}

CheckReport check_I_prime(const FrequencyProfile& profile, const LiftedSystem& sys,
                          double tol) {
  if (profile.size() < 3) throw std::runtime_error("check_I_prime: need >= 3 radii");
  const double alpha = sys.params.alpha;
  const int d = profile.dim;
  std::vector<double> I(profile.size());
  for (std::size_t j = 0; j < profile.size(); ++j) I[j] = profile.records[j].I_form2;
  double worst = 0;
  std::size_t worst_j = 0;
  for (std::size_t j = 1; j + 1 < profile.size(); ++j) {
    const double r = profile.radii[j];
    const auto& rec = profile.records[j];
    const IPrimeTerms t = compute_iprime_terms(sys, Ball{profile.center, r});
    const double lhs = centered_derivative(profile.radii, I, j);
    const double rhs = (2.0 * alpha + d) / r * I[j] +
                       4.0 * (alpha + 1.0) / r * (t.P_u + t.P_w) +
                       2.0 / r * (rec.I3 + rec.I4 + rec.I5) + t.remainder_sum();
    const double m = rel_mismatch(lhs, rhs);
    if (m > worst) {
      worst = m;
      worst_j = j;
    }
  }
  CheckReport rep;
  rep.name = "i_prime_identity";
  rep.lhs = worst;
  rep.rhs_without_constant = tol;
  rep.implied_constant = worst;
  rep.pass = worst <= tol;
  rep.meta = {{"worst_radius", profile.radii[worst_j]}, {"tolerance", tol}};
  return rep;
}

CheckReport check_cancellations(const LiftedSystem& sys, const Ball& ball) {
  const IPrimeTerms t = compute_iprime_terms(sys, ball);
  const double pairs[4][2] = {{t.R1_5, t.R3_3}, {t.R1_4, t.R3_2},
                              {t.R2_6, t.R4_3}, {t.R2_5, t.R4_2}};
  const char* names[4] = {"R1_5+R3_3", "R1_4+R3_2", "R2_6+R4_3", "R2_5+R4_2"};
  double worst = 0;
  CheckReport rep;
  rep.name = "cancellations";
  for (int k = 0; k < 4; ++k) {
    const double scale = std::abs(pairs[k][0]) + std::abs(pairs[k][1]);
    const double rel = scale > 0 ? std::abs(pairs[k][0] + pairs[k][1]) / scale
                                 : std::abs(pairs[k][0] + pairs[k][1]);
    worst = std::max(worst, rel);
    rep.meta[names[k]] = {{"a", pairs[k][0]}, {"b", pairs[k][1]}, {"relative", rel}};
  }
  rep.lhs = worst;
  rep.rhs_without_constant = 1e-12;
  rep.implied_constant = worst;
  rep.pass = worst <= 1e-12;
  return rep;
}

double fit_monotonicity_constant(const FrequencyProfile& profile, double grad_norm) {
  if (profile.size() < 4)
    throw std::runtime_error("fit_monotonicity_constant: need >= 4 radii");
  double C = 0;
  for (std::size_t j = 0; j + 1 < profile.size(); ++j) {
    const double f0 = profile.N[j] + grad_norm + 1.0;
    const double f1 = profile.N[j + 1] + grad_norm + 1.0;
    if (f0 > 0 && f1 > 0)
      C = std::max(C, std::log(f0 / f1) / (profile.radii[j + 1] - profile.radii[j]));
  }
  return C;
}

}  // namespace freqlab
