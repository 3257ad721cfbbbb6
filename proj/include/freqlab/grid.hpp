#pragma once

#include <array>
#include <cstddef>
#include <functional>
#include <string>
#include <vector>

namespace freqlab {

/// A point in the (lifted) domain; only the first `dim` coordinates are used,
/// the rest are zero.
using Point = std::array<double, 3>;

/// Uniform tensor grid over the centered box [-extent, extent]^dim.
/// points_per_axis is odd so the origin is a grid node.
struct GridSpec {
  int dim = 2;
  double extent = 0.5;
  int points_per_axis = 65;

  double spacing() const { return 2.0 * extent / (points_per_axis - 1); }
  double coord(int i) const { return -extent + i * spacing(); }
  std::size_t node_count() const;
  bool operator==(const GridSpec&) const = default;
};

/// Throws std::runtime_error if the grid violates its invariants
/// (dim in [1,3], odd points_per_axis >= 17, positive spacing).
void validate(const GridSpec& g);

using FieldExpr = std::function<double(const Point&)>;

/// Scalar values on a grid. Nodes within `margin` layers of the box boundary
/// are masked (derived fields lose one layer per stencil application) and
/// hold NaN. Immutable by convention once built.
struct ScalarField {
  GridSpec grid;
  std::vector<double> values;
  int margin = 0;
  FieldExpr source;  // optional closed form the values were sampled from

  double at(std::size_t idx) const { return values[idx]; }
  bool index_valid(const std::array<int, 3>& i) const;
};

/// Samples a closed-form expression at every node.
ScalarField sample(const GridSpec& g, FieldExpr f);

/// Visits every node in row-major order: f(flat_index, multi_index, point).
void for_each_node(const GridSpec& g,
                   const std::function<void(std::size_t, const std::array<int, 3>&,
                                            const Point&)>& f);

/// max |value| over unmasked nodes with |z| <= radius (center origin) or
/// |z - center| <= radius. Throws "ball under-resolved" if no node qualifies.
double sup_norm(const ScalarField& field, double radius);
double sup_norm(const ScalarField& field, const Point& center, double radius);

}  // namespace freqlab
