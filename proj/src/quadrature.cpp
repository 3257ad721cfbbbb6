#include "freqlab/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "freqlab/sum.hpp"

namespace freqlab {

namespace {

// Index range [lo, hi] of nodes whose coordinate can touch the ball's ramp
// halo along one axis.
void axis_range(const GridSpec& g, double c, double reach, int& lo, int& hi) {
  const double h = g.spacing();
  lo = std::max(0, static_cast<int>(std::ceil((c - reach + g.extent) / h - 1e-12)));
  hi = std::min(g.points_per_axis - 1,
                static_cast<int>(std::floor((c + reach + g.extent) / h + 1e-12)));
}

double cell_volume(const GridSpec& g) {
  double v = 1;
  for (int k = 0; k < g.dim; ++k) v *= g.spacing();
  return v;
}

}  // namespace

std::vector<double> ball_pass(const GridSpec& g, int margin, const Ball& ball,
                              const std::vector<BallTerm>& terms) {
  const double r = ball.radius, h = g.spacing();
  if (!(r > 0)) throw std::runtime_error("ball radius must be positive");
  const double reach = r + 0.5 * h;  // ramp halo
  const double r2 = r * r;

  int lo[3] = {0, 0, 0}, hi[3] = {0, 0, 0};
  for (int k = 0; k < g.dim; ++k) axis_range(g, ball.center[k], reach, lo[k], hi[k]);
  const int mask_lo = margin, mask_hi = g.points_per_axis - 1 - margin;

  const std::size_t n = static_cast<std::size_t>(g.points_per_axis);
  std::size_t stride[3] = {1, 1, 1};
  if (g.dim == 2) stride[0] = n;
  if (g.dim == 3) {
    stride[0] = n * n;
    stride[1] = n;
  }

  std::vector<PairwiseAccumulator> acc(terms.size());
  std::size_t inside_count = 0;
  Point z{};
  const int lo1 = g.dim > 1 ? lo[1] : 0, hi1 = g.dim > 1 ? hi[1] : 0;
  const int lo2 = g.dim > 2 ? lo[2] : 0, hi2 = g.dim > 2 ? hi[2] : 0;

  for (int i0 = lo[0]; i0 <= hi[0]; ++i0) {
    z[0] = g.coord(i0);
    const double d0 = z[0] - ball.center[0];
    for (int i1 = lo1; i1 <= hi1; ++i1) {
      if (g.dim > 1) z[1] = g.coord(i1);
      const double d1 = g.dim > 1 ? z[1] - ball.center[1] : 0;
      const double d01 = d0 * d0 + d1 * d1;
      if (d01 > reach * reach) continue;
      for (int i2 = lo2; i2 <= hi2; ++i2) {
        if (g.dim > 2) z[2] = g.coord(i2);
        const double d2c = g.dim > 2 ? z[2] - ball.center[2] : 0;
        const double dist2 = d01 + d2c * d2c;
        if (dist2 > reach * reach) continue;
        const double dist = std::sqrt(dist2);
        const bool strictly_inside = dist2 < r2;
        const double ramp = std::clamp((r - dist) / h + 0.5, 0.0, 1.0);
        if (!strictly_inside && ramp <= 0.0) continue;
        // every contributing node must be unmasked
        if (i0 < mask_lo || i0 > mask_hi ||
            (g.dim > 1 && (i1 < mask_lo || i1 > mask_hi)) ||
            (g.dim > 2 && (i2 < mask_lo || i2 > mask_hi)))
          throw std::runtime_error("ball exceeds usable grid interior");
        if (strictly_inside) ++inside_count;
        const std::size_t idx = static_cast<std::size_t>(i0) * stride[0] +
                                static_cast<std::size_t>(i1) * stride[1] +
                                static_cast<std::size_t>(i2) * stride[2];
        const double W = r2 - dist2;
        for (std::size_t t = 0; t < terms.size(); ++t) {
          const double e = terms[t].exponent;
          double wgt;
          if (e == 0.0)
            wgt = ramp;
          else if (!strictly_inside)
            continue;
          else if (e == 1.0)
            wgt = W;
          else if (e == 2.0)
            wgt = W * W;
          else
            wgt = std::pow(W, e);
          acc[t].add(terms[t].integrand(idx, z) * wgt);
        }
      }
    }
  }

  if (inside_count < (static_cast<std::size_t>(1) << g.dim))
    throw std::runtime_error("ball under-resolved");

  const double vol = cell_volume(g);
  std::vector<double> out(terms.size());
  for (std::size_t t = 0; t < terms.size(); ++t) out[t] = acc[t].total() * vol;
  return out;
}

double integrate_ball(const GridSpec& g, int margin, const Ball& ball,
                      const std::function<double(std::size_t, const Point&)>& integrand) {
  return ball_pass(g, margin, ball, {BallTerm{0.0, integrand}})[0];
}

WeightedIntegrals compute_integrals(const LiftedSystem& sys, const Ball& ball) {
  const double alpha = sys.params.alpha;
  const double lambda = sys.params.lambda;
  const double shift = lambda * lambda / 4.0;
  const GridSpec& g = sys.grid();
  const int dim = g.dim;
  const double* u = sys.u.values.data();
  const double* w = sys.w.values.data();
  const double* v = sys.vpot.values.data();
  const double* du[3] = {nullptr, nullptr, nullptr};
  const double* dw[3] = {nullptr, nullptr, nullptr};
  for (int k = 0; k < dim; ++k) {
    du[k] = sys.du[k].values.data();
    dw[k] = sys.dw[k].values.data();
  }
  const Point z0 = ball.center;

  auto mass = [u, w](std::size_t i, const Point&) { return u[i] * u[i] + w[i] * w[i]; };
  auto grad_u_sq = [du, dim](std::size_t i, const Point&) {
    double s = 0;
    for (int k = 0; k < dim; ++k) s += du[k][i] * du[k][i];
    return s;
  };
  auto grad_w_sq = [dw, dim](std::size_t i, const Point&) {
    double s = 0;
    for (int k = 0; k < dim; ++k) s += dw[k][i] * dw[k][i];
    return s;
  };
  auto u_sq = [u](std::size_t i, const Point&) { return u[i] * u[i]; };
  auto w_sq = [w](std::size_t i, const Point&) { return w[i] * w[i]; };
  auto coupling = [u, w, v, shift](std::size_t i, const Point&) {
    return (1.0 + v[i] - shift) * u[i] * w[i];
  };
  auto radial = [u, w, du, dw, dim, z0](std::size_t i, const Point& z) {
    double s = 0;
    for (int k = 0; k < dim; ++k)
      s += (u[i] * du[k][i] + w[i] * dw[k][i]) * (z[k] - z0[k]);
    return s;
  };

  std::vector<BallTerm> terms{
      {alpha, mass},              // H
      {0.0, mass},                // h
      {alpha + 1.0, grad_u_sq},   // I1
      {alpha + 1.0, grad_w_sq},   // I2
      {alpha + 1.0, u_sq},        // I3 / (lambda/2)
      {alpha + 1.0, w_sq},        // I4 / (3 lambda/2)
      {alpha + 1.0, coupling},    // I5
      {alpha, radial},            // I_form1 / 2(alpha+1)
  };
  auto vals = ball_pass(g, sys.quad_margin(), ball, terms);

  WeightedIntegrals out;
  out.r = ball.radius;
  out.alpha = alpha;
  out.H = vals[0];
  out.h_plain = vals[1];
  out.I1 = vals[2];
  out.I2 = vals[3];
  out.I3 = 0.5 * lambda * vals[4];
  out.I4 = 1.5 * lambda * vals[5];
  out.I5 = vals[6];
  out.I_form1 = 2.0 * (alpha + 1.0) * vals[7];
  out.I_form2 = out.I1 + out.I2 + out.I3 + out.I4 + out.I5;
  return out;
}

double compute_H(const LiftedSystem& sys, const Ball& ball) {
  const double* u = sys.u.values.data();
  const double* w = sys.w.values.data();
  auto mass = [u, w](std::size_t i, const Point&) { return u[i] * u[i] + w[i] * w[i]; };
  return ball_pass(sys.grid(), sys.quad_margin(), ball, {BallTerm{sys.params.alpha, mass}})[0];
}

double compute_h(const LiftedSystem& sys, const Ball& ball) {
  const double* u = sys.u.values.data();
  const double* w = sys.w.values.data();
  auto mass = [u, w](std::size_t i, const Point&) { return u[i] * u[i] + w[i] * w[i]; };
  return ball_pass(sys.grid(), sys.quad_margin(), ball, {BallTerm{0.0, mass}})[0];
}

WeightedIntegrals compute_I(const LiftedSystem& sys, const Ball& ball) {
  return compute_integrals(sys, ball);
}

}  // namespace freqlab
