#include "freqlab/fd.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace freqlab {

namespace {

std::array<std::size_t, 3> strides(const GridSpec& g) {
  const std::size_t n = static_cast<std::size_t>(g.points_per_axis);
  std::array<std::size_t, 3> s{1, 1, 1};
  if (g.dim == 1) s = {1, 0, 0};
  if (g.dim == 2) s = {n, 1, 0};
  if (g.dim == 3) s = {n * n, n, 1};
  return s;
}

void check_interior(const ScalarField& f) {
  const int interior = f.grid.points_per_axis - 2 * (f.margin + 1);
  if (interior < 3) throw std::runtime_error("field too small for another stencil layer");
}

template <typename F>
ScalarField derived(const ScalarField& f, F&& stencil) {
  check_interior(f);
  ScalarField out;
  out.grid = f.grid;
  out.margin = f.margin + 1;
  out.values.assign(f.values.size(), std::numeric_limits<double>::quiet_NaN());
  const auto st = strides(f.grid);
  const int n = f.grid.points_per_axis;
  const int lo = out.margin, hi = n - 1 - out.margin;
  const int lo1 = f.grid.dim > 1 ? lo : 0, hi1 = f.grid.dim > 1 ? hi : 0;
  const int lo2 = f.grid.dim > 2 ? lo : 0, hi2 = f.grid.dim > 2 ? hi : 0;
  for (int i0 = lo; i0 <= hi; ++i0)
    for (int i1 = lo1; i1 <= hi1; ++i1)
      for (int i2 = lo2; i2 <= hi2; ++i2) {
        const std::size_t idx = static_cast<std::size_t>(i0) * st[0] +
                                static_cast<std::size_t>(i1) * st[1] +
                                static_cast<std::size_t>(i2) * st[2];
        out.values[idx] = stencil(idx, st);
      }
  return out;
}

}  // namespace

ScalarField laplacian(const ScalarField& f) {
  const double h2 = f.grid.spacing() * f.grid.spacing();
  const int dim = f.grid.dim;
  const double* v = f.values.data();
  return derived(f, [v, h2, dim](std::size_t idx, const std::array<std::size_t, 3>& st) {
    double acc = 0;
    for (int k = 0; k < dim; ++k) acc += v[idx + st[k]] - 2.0 * v[idx] + v[idx - st[k]];
    return acc / h2;
  });
}

std::vector<ScalarField> gradient(const ScalarField& f) {
  const double two_h = 2.0 * f.grid.spacing();
  const double* v = f.values.data();
  std::vector<ScalarField> out;
  out.reserve(f.grid.dim);
  for (int k = 0; k < f.grid.dim; ++k) {
    out.push_back(derived(f, [v, two_h, k](std::size_t idx, const std::array<std::size_t, 3>& st) {
      return (v[idx + st[k]] - v[idx - st[k]]) / two_h;
    }));
  }
  return out;
}

}  // namespace freqlab
