#include "freqlab/vanishing.hpp"

#include <cmath>
#include <stdexcept>

namespace freqlab {

OrderEstimate estimate_order(const ScalarField& field, const Point& x0,
                             const std::vector<double>& radii) {
  if (radii.size() < 4) throw std::runtime_error("estimate_order: need >= 4 radii");
  const double* v = field.values.data();
  std::vector<double> log_r, log_mass;
  for (double r : radii) {
    const double mass = ball_pass(
        field.grid, field.margin, Ball{x0, r},
        {BallTerm{0.0, [v](std::size_t i, const Point&) { return v[i] * v[i]; }}})[0];
    if (!(mass > 0)) throw std::runtime_error("field vanishes beyond resolution");
    log_r.push_back(std::log(r));
    log_mass.push_back(std::log(mass));
  }
  // least-squares line log_mass = a + slope * log_r
  const std::size_t n = log_r.size();
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < n; ++i) {
    sx += log_r[i];
    sy += log_mass[i];
    sxx += log_r[i] * log_r[i];
    sxy += log_r[i] * log_mass[i];
  }
  const double slope = (n * sxy - sx * sy) / (n * sxx - sx * sx);
  const double intercept = (sy - slope * sx) / n;
  double resid = 0;
  for (std::size_t i = 0; i < n; ++i)
    resid = std::max(resid, std::abs(log_mass[i] - (intercept + slope * log_r[i])));

  OrderEstimate est;
  est.point = x0;
  est.slope = slope;
  est.order = 0.5 * (slope - field.grid.dim);
  est.fit_residual = resid;
  est.radii_used = radii;
  return est;
}

double order_from_frequency(const FrequencyProfile& profile, const LiftParams& p,
                            double grad_norm, double constant) {
  if (profile.size() == 0) throw std::runtime_error("order_from_frequency: empty profile");
  const double N_max_r = profile.N.back();
  return constant * (N_max_r + grad_norm + 1.0) / (p.alpha + 1.0) + 2.0;
}

double theorem_bound(const PotentialSpec& V, double constant) {
  if (!(constant > 0)) throw std::runtime_error("theorem_bound: constant must be positive");
  return constant * (std::pow(V.sup_norm, 0.25) + V.grad_sup_norm + 1.0);
}

}  // namespace freqlab
