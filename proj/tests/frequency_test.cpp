#include <cmath>

#include "doctest.h"
#include "freqlab/frequency.hpp"
#include "freqlab/solutions.hpp"
#include "test_helpers.hpp"

using namespace freqlab;
using freqlab::testing::expr_system;
using freqlab::testing::grid2;
using freqlab::testing::grid3;

namespace {

std::vector<double> ratio_radii(double r_min, double r_max, double ratio) {
  std::vector<double> out{r_min};
  while (out.back() * ratio <= r_max) out.push_back(out.back() * ratio);
  return out;
}

}  // namespace

TEST_CASE("geometric_radii spans the window inclusively") {
  auto r = geometric_radii(0.15, 0.45, 13);
  CHECK(r.size() == 13);
  CHECK(r.front() == doctest::Approx(0.15));
  CHECK(r.back() == doctest::Approx(0.45));
  for (std::size_t j = 1; j + 1 < r.size(); ++j)
    CHECK(r[j + 1] / r[j] == doctest::Approx(r[j] / r[j - 1]).epsilon(1e-12));
  CHECK_THROWS(geometric_radii(0.3, 0.2, 5));
}

TEST_CASE("build_profile") {
  SUBCASE("constant field: N = 0 at every radius") {
    LiftedSystem sys = expr_system(grid2(65), [](const Point&) { return 1.0; });
    FrequencyProfile prof = build_profile(sys, Point{}, geometric_radii(0.15, 0.45, 5));
    for (double n : prof.N) CHECK(std::abs(n) < 1e-10);
  }
  SUBCASE("u = x1: N = 2 (closed forms I = pi r^4/2, H = pi r^4/4)") {
    LiftedSystem sys = expr_system(grid2(129), [](const Point& z) { return z[0]; });
    FrequencyProfile prof = build_profile(sys, Point{}, geometric_radii(0.15, 0.45, 7));
    for (double n : prof.N) CHECK(n == doctest::Approx(2.0).epsilon(0.01));
  }
  SUBCASE("zero field is rejected") {
    LiftedSystem sys = expr_system(grid2(65), [](const Point&) { return 0.0; });
    CHECK_THROWS_WITH(build_profile(sys, Point{}, geometric_radii(0.15, 0.45, 5)),
                      "trivial solution on ball");
  }
  SUBCASE("radii must increase") {
    LiftedSystem sys = expr_system(grid2(65), [](const Point&) { return 1.0; });
    CHECK_THROWS(build_profile(sys, Point{}, {0.3, 0.2}));
  }
}

TEST_CASE("check_H_prime") {
  SUBCASE("u = x1: identity closed-form exact, discrete within 1%") {
    LiftedSystem sys = expr_system(grid2(129), [](const Point& z) { return z[0]; });
    FrequencyProfile prof =
        build_profile(sys, Point{}, ratio_radii(0.15, 0.45, 1.1));
    CheckReport rep = check_H_prime(prof, 0.01);
    CHECK(rep.pass);
  }
  SUBCASE("constant field: both sides reduce to (d + 2 alpha) H / r") {
    LiftedSystem sys =
        expr_system(grid2(129), [](const Point&) { return 1.0; }, zero_potential(), 1.0);
    FrequencyProfile prof = build_profile(sys, Point{}, ratio_radii(0.15, 0.45, 1.1));
    CheckReport rep = check_H_prime(prof, 0.01);
    CHECK(rep.pass);
  }
  SUBCASE("mismatch shrinks at order >= 1.9 when the radius step halves") {
    CaseSpec spec = builtin_case("harmonic_mixed");
    LiftedSystem sys = instantiate(spec, grid2(129), 2.0);
    auto mismatch = [&](double ratio) {
      FrequencyProfile prof = build_profile(sys, Point{}, ratio_radii(0.15, 0.45, ratio));
      return check_H_prime(prof, 1.0).lhs;
    };
    const double m1 = mismatch(1.1);
    const double m2 = mismatch(std::sqrt(1.1));  // halves the log-radius step
    CHECK(m1 < 0.01);
    CHECK(std::log2(m1 / m2) >= 1.9);
  }
}

TEST_CASE("check_I_prime") {
  SUBCASE("constant field: I identically 0 on both sides") {
    LiftedSystem sys = expr_system(grid2(65), [](const Point&) { return 1.0; });
    FrequencyProfile prof = build_profile(sys, Point{}, ratio_radii(0.2, 0.4, 1.1));
    CheckReport rep = check_I_prime(prof, sys, 0.02);
    CHECK(rep.pass);
  }
  SUBCASE("u = x1: closed-form identity (I' = 2 pi r^3)") {
    LiftedSystem sys = expr_system(grid2(129), [](const Point& z) { return z[0]; });
    FrequencyProfile prof = build_profile(sys, Point{}, ratio_radii(0.15, 0.45, 1.1));
    CheckReport rep = check_I_prime(prof, sys, 0.02);
    CHECK(rep.pass);
  }
  SUBCASE("eigenfunction lift passes at moderate resolution") {
    LiftedSystem sys = instantiate(builtin_case("eigen_mu2"), grid3(65));
    FrequencyProfile prof = build_profile(sys, Point{}, ratio_radii(0.15, 0.45, 1.1));
    CheckReport rep = check_I_prime(prof, sys, 0.02);
    CHECK(rep.pass);
  }
}

TEST_CASE("check_cancellations") {
  SUBCASE("lambda 0: all eight paired terms are individually zero") {
    LiftedSystem sys = expr_system(grid2(65), [](const Point& z) { return z[0] * z[1]; });
    CheckReport rep = check_cancellations(sys, Ball{Point{}, 0.4});
    CHECK(rep.pass);
    CHECK(rep.lhs == 0.0);
  }
  SUBCASE("eigenfunction lift: nonzero terms cancel to round-off") {
    LiftedSystem sys = instantiate(builtin_case("eigen_mu2"), grid3(65));
    IPrimeTerms t = compute_iprime_terms(sys, Ball{Point{}, 0.4});
    CHECK(t.R1_5 != 0.0);  // lambda = 16: the u^2 term is genuinely nonzero
    CHECK(t.R1_5 + t.R3_3 == 0.0);
    CHECK(check_cancellations(sys, Ball{Point{}, 0.4}).pass);
  }
  SUBCASE("random seeded field with lambda 2") {
    LiftedSystem sys = instantiate(builtin_case("random_bandlimited"), grid2(65));
    CheckReport rep = check_cancellations(sys, Ball{Point{}, 0.4});
    CHECK(rep.pass);
    CHECK(rep.lhs <= 1e-12);
  }
}

TEST_CASE("fit_monotonicity_constant") {
  SUBCASE("homogeneous harmonic: N constant, C = 0") {
    LiftedSystem sys = expr_system(grid2(129), [](const Point& z) { return z[0]; });
    FrequencyProfile prof = build_profile(sys, Point{}, geometric_radii(0.15, 0.45, 8));
    CHECK(fit_monotonicity_constant(prof, 0.0) < 0.05);
  }
  SUBCASE("constant field: N = 0, C = 0") {
    LiftedSystem sys = expr_system(grid2(65), [](const Point&) { return 1.0; });
    FrequencyProfile prof = build_profile(sys, Point{}, geometric_radii(0.15, 0.45, 8));
    CHECK(fit_monotonicity_constant(prof, 0.0) < 1e-8);
  }
  SUBCASE("thinning the radius list never increases the constant") {
    LiftedSystem sys = instantiate(builtin_case("random_bandlimited"), grid2(65));
    auto radii = geometric_radii(0.15, 0.45, 9);
    FrequencyProfile full = build_profile(sys, Point{}, radii);
    std::vector<double> half;
    for (std::size_t j = 0; j < radii.size(); j += 2) half.push_back(radii[j]);
    FrequencyProfile thin = build_profile(sys, Point{}, half);
    CHECK(fit_monotonicity_constant(thin, 0.0) <=
          fit_monotonicity_constant(full, 0.0) + 1e-12);
  }
}
