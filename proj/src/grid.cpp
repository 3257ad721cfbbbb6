#include "freqlab/grid.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace freqlab {

std::size_t GridSpec::node_count() const {
  std::size_t n = 1;
  for (int k = 0; k < dim; ++k) n *= static_cast<std::size_t>(points_per_axis);
  return n;
}

void validate(const GridSpec& g) {
  if (g.dim < 1 || g.dim > 3)
    throw std::runtime_error("GridSpec: dim must be in [1,3], got " + std::to_string(g.dim));
  if (g.points_per_axis < 17 || g.points_per_axis % 2 == 0)
    throw std::runtime_error("GridSpec: points_per_axis must be odd and >= 17, got " +
                             std::to_string(g.points_per_axis));
  if (!(g.extent > 0.0)) throw std::runtime_error("GridSpec: extent must be positive");
}

bool ScalarField::index_valid(const std::array<int, 3>& i) const {
  for (int k = 0; k < grid.dim; ++k)
    if (i[k] < margin || i[k] > grid.points_per_axis - 1 - margin) return false;
  return true;
}

void for_each_node(const GridSpec& g,
                   const std::function<void(std::size_t, const std::array<int, 3>&,
                                            const Point&)>& f) {
  const int n = g.points_per_axis;
  const int n1 = g.dim > 1 ? n : 1;
  const int n2 = g.dim > 2 ? n : 1;
  std::size_t idx = 0;
  std::array<int, 3> mi{};
  Point p{};
  for (int i0 = 0; i0 < n; ++i0) {
    mi[0] = i0;
    p[0] = g.coord(i0);
    for (int i1 = 0; i1 < n1; ++i1) {
      mi[1] = i1;
      if (g.dim > 1) p[1] = g.coord(i1);
      for (int i2 = 0; i2 < n2; ++i2, ++idx) {
        mi[2] = i2;
        if (g.dim > 2) p[2] = g.coord(i2);
        f(idx, mi, p);
      }
    }
  }
}

ScalarField sample(const GridSpec& g, FieldExpr f) {
  validate(g);
  ScalarField out;
  out.grid = g;
  out.values.resize(g.node_count());
  out.source = f;
  for_each_node(g, [&](std::size_t idx, const std::array<int, 3>&, const Point& p) {
    out.values[idx] = f(p);
  });
  return out;
}

double sup_norm(const ScalarField& field, const Point& center, double radius) {
  const GridSpec& g = field.grid;
  if (radius > g.extent) throw std::runtime_error("sup_norm: radius exceeds grid extent");
  double best = -1.0;
  for_each_node(g, [&](std::size_t idx, const std::array<int, 3>& mi, const Point& p) {
    if (!field.index_valid(mi)) return;
    double d2 = 0;
    for (int k = 0; k < g.dim; ++k) d2 += (p[k] - center[k]) * (p[k] - center[k]);
    if (d2 <= radius * radius) best = std::max(best, std::abs(field.values[idx]));
  });
  if (best < 0) throw std::runtime_error("ball under-resolved");
  return best;
}

double sup_norm(const ScalarField& field, double radius) {
  return sup_norm(field, Point{}, radius);
}

}  // namespace freqlab
