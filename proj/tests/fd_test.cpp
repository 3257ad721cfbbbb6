#include <cmath>

#include "doctest.h"
#include "freqlab/fd.hpp"
#include "test_helpers.hpp"

using namespace freqlab;
using freqlab::testing::grid2;

namespace {

double max_valid_diff(const ScalarField& a, const std::function<double(const Point&)>& want) {
  double worst = 0;
  for_each_node(a.grid, [&](std::size_t idx, const std::array<int, 3>& mi, const Point& z) {
    if (!a.index_valid(mi)) return;
    worst = std::max(worst, std::abs(a.values[idx] - want(z)));
  });
  return worst;
}

}  // namespace

TEST_CASE("laplacian annihilates constants") {
  ScalarField f = sample(grid2(33), [](const Point&) { return 3.5; });
  CHECK(max_valid_diff(laplacian(f), [](const Point&) { return 0.0; }) < 1e-11);
}

TEST_CASE("laplacian exact on |z|^2") {
  ScalarField f2 = sample(grid2(33), [](const Point& z) { return z[0] * z[0] + z[1] * z[1]; });
  CHECK(max_valid_diff(laplacian(f2), [](const Point&) { return 4.0; }) < 1e-10);
  ScalarField f3 = sample(GridSpec{3, 0.5, 33}, [](const Point& z) {
    return z[0] * z[0] + z[1] * z[1] + z[2] * z[2];
  });
  CHECK(max_valid_diff(laplacian(f3), [](const Point&) { return 6.0; }) < 1e-10);
}

TEST_CASE("laplacian O(h^2) on sine product, error quarters when h halves") {
  auto expr = [](const Point& z) { return std::sin(2.0 * z[0]) * std::sin(2.0 * z[1]); };
  auto err_at = [&](int pp) {
    ScalarField f = sample(grid2(pp), expr);
    return max_valid_diff(laplacian(f),
                          [&](const Point& z) { return -8.0 * expr(z); });
  };
  const double e1 = err_at(65), e2 = err_at(129);
  CHECK(e1 < 1e-3);
  const double order = std::log2(e1 / e2);
  CHECK(order >= 1.9);  // refinement property
}

TEST_CASE("gradient exact on linears and quadratics") {
  ScalarField lin = sample(grid2(33), [](const Point& z) { return z[0]; });
  auto g1 = gradient(lin);
  CHECK(max_valid_diff(g1[0], [](const Point&) { return 1.0; }) < 1e-13);
  CHECK(max_valid_diff(g1[1], [](const Point&) { return 0.0; }) < 1e-13);

  ScalarField quad = sample(grid2(33), [](const Point& z) { return z[0] * z[0]; });
  auto g2 = gradient(quad);
  CHECK(max_valid_diff(g2[0], [](const Point& z) { return 2.0 * z[0]; }) < 1e-12);
  CHECK(max_valid_diff(g2[1], [](const Point&) { return 0.0; }) < 1e-12);

  ScalarField cst = sample(grid2(33), [](const Point&) { return 7.0; });
  auto g0 = gradient(cst);
  CHECK(max_valid_diff(g0[0], [](const Point&) { return 0.0; }) < 1e-11);
}

TEST_CASE("operators are linear") {
  GridSpec g = grid2(33);
  auto fe = [](const Point& z) { return std::sin(3.0 * z[0]) * z[1]; };
  auto ge = [](const Point& z) { return std::cos(2.0 * z[1]) + z[0] * z[0]; };
  ScalarField f = sample(g, fe), h = sample(g, ge);
  ScalarField combo = sample(g, [&](const Point& z) { return 2.0 * fe(z) - 3.0 * ge(z); });
  ScalarField lf = laplacian(f), lh = laplacian(h), lc = laplacian(combo);
  for_each_node(g, [&](std::size_t idx, const std::array<int, 3>& mi, const Point&) {
    if (!lc.index_valid(mi)) return;
    CHECK(lc.values[idx] ==
          doctest::Approx(2.0 * lf.values[idx] - 3.0 * lh.values[idx]).epsilon(1e-10));
  });
}

TEST_CASE("divergence of gradient matches laplacian where both stencils are exact") {
  // The composed central-difference divergence of the central-difference
  // gradient is a wide (2h) second-difference; it coincides with the compact
  // Laplacian exactly on per-axis polynomials of degree <= 3, and agrees to
  // O(h^2) on smooth fields.
  GridSpec g = grid2(33);
  ScalarField cubic = sample(g, [](const Point& z) {
    return z[0] * z[0] * z[0] - 3.0 * z[0] * z[1] * z[1] + z[1];
  });
  auto gr = gradient(cubic);
  ScalarField div_part0 = gradient(gr[0])[0];
  ScalarField div_part1 = gradient(gr[1])[1];
  ScalarField lap = laplacian(cubic);
  for_each_node(g, [&](std::size_t idx, const std::array<int, 3>& mi, const Point&) {
    if (!div_part0.index_valid(mi)) return;
    const double div = div_part0.values[idx] + div_part1.values[idx];
    CHECK(div == doctest::Approx(lap.values[idx]).epsilon(1e-9));
  });
}

TEST_CASE("derived fields mask one extra layer with NaN") {
  ScalarField f = sample(grid2(33), [](const Point& z) { return z[0]; });
  ScalarField l = laplacian(f);
  CHECK(l.margin == 1);
  CHECK(std::isnan(l.values[0]));  // corner node is masked
}
