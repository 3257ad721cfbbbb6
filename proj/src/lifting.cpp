#include "freqlab/lifting.hpp"

#include <cmath>
#include <stdexcept>

namespace freqlab {

PotentialSpec zero_potential() { return PotentialSpec{[](const Point&) { return 0.0; }, nullptr, 0, 0}; }

PotentialSpec constant_potential(double c) {
  return PotentialSpec{[c](const Point&) { return c; }, nullptr, std::abs(c), 0};
}

LiftParams select_params(const PotentialSpec& V) {
  LiftParams p;
  p.lambda = 2.0 * std::sqrt(V.sup_norm);
  p.sqrt_lambda = std::sqrt(2.0) * std::pow(V.sup_norm, 0.25);
  p.alpha = V.grad_sup_norm;
  return p;
}

CheckReport check_potential_shift(const PotentialSpec& V, const LiftParams& p,
                                  const GridSpec& sample_grid, double tolerance) {
  double shift = p.lambda * p.lambda / 4.0;
  double worst = 0;
  for_each_node(sample_grid, [&](std::size_t, const std::array<int, 3>&, const Point& z) {
    worst = std::max(worst, std::abs(V.value(z) - shift));
  });
  CheckReport rep;
  rep.name = "potential_shift";
  rep.lhs = worst;
  rep.rhs_without_constant = V.grad_sup_norm;
  rep.implied_constant = V.grad_sup_norm > 0 ? worst / V.grad_sup_norm : worst;
  rep.pass = worst <= V.grad_sup_norm + tolerance;
  rep.meta = {{"lambda", p.lambda}, {"tolerance", tolerance}};
  return rep;
}

ScalarField lift_solution(const ScalarField& u, const LiftParams& p,
                          const GridSpec& lifted_grid) {
  const GridSpec& bg = u.grid;
  if (lifted_grid.dim != bg.dim + 1 || lifted_grid.extent != bg.extent ||
      lifted_grid.points_per_axis != bg.points_per_axis)
    throw std::runtime_error("lift_solution: lifted grid does not extend the base grid");
  validate(lifted_grid);
  ScalarField out;
  out.grid = lifted_grid;
  out.margin = u.margin;
  out.values.resize(lifted_grid.node_count());
  const int n = bg.dim;  // t is the last axis of the lifted grid
  const double sl = p.sqrt_lambda;
  for_each_node(lifted_grid, [&](std::size_t idx, const std::array<int, 3>& mi, const Point& z) {
    std::size_t base = 0;
    for (int k = 0; k < n; ++k) base = base * static_cast<std::size_t>(bg.points_per_axis) +
                                       static_cast<std::size_t>(mi[k]);
    out.values[idx] = u.values[base] * std::exp(sl * z[n]);
  });
  if (u.source) {
    FieldExpr src = u.source;
    out.source = [src, sl, n](const Point& z) { return src(z) * std::exp(sl * z[n]); };
  }
  return out;
}

}  // namespace freqlab
