#include "freqlab/solutions.hpp"

#include <cmath>
#include <random>
#include <sstream>
#include <stdexcept>

#include <Eigen/IterativeLinearSolvers>
#include <Eigen/Sparse>

#include "freqlab/fd.hpp"

namespace freqlab {

namespace {

CaseSpec harmonic(const std::string& name, FieldExpr u, double k) {
  CaseSpec c;
  c.name = name;
  c.base_dim = 2;
  c.lift = false;
  c.u = std::move(u);
  c.potential = zero_potential();
  c.homogeneity = k;
  c.expected_order = k;
  return c;
}

CaseSpec eigen_case(int mu) {
  CaseSpec c;
  c.name = "eigen_mu" + std::to_string(mu);
  c.base_dim = 2;
  c.lift = true;
  const double m = mu;
  c.u = [m](const Point& z) { return std::sin(m * z[0]) * std::sin(m * z[1]); };
  c.potential = constant_potential(4.0 * m * m * m * m);
  c.mu = m;
  c.expected_order = 2;  // leading Taylor term mu^2 x1 x2
  return c;
}

FieldExpr random_bandlimited_expr(unsigned seed) {
  std::mt19937 rng(seed);
  std::uniform_real_distribution<double> amp(-1.0, 1.0);
  std::uniform_real_distribution<double> phase(0.0, 2.0 * M_PI);
  std::uniform_int_distribution<int> mode(-3, 3);
  struct Mode {
    double a, phi;
    double k[3];
  };
  std::vector<Mode> modes(8);
  for (auto& md : modes) {
    md.a = amp(rng);
    md.phi = phase(rng);
    for (double& kk : md.k) kk = 2.0 * mode(rng);
  }
  return [modes](const Point& z) {
    double s = 0;
    for (const auto& md : modes)
      s += md.a * std::cos(md.k[0] * z[0] + md.k[1] * z[1] + md.k[2] * z[2] + md.phi);
    return s;
  };
}

}  // namespace

std::vector<std::string> builtin_case_names() {
  return {"zero",        "constant",       "harmonic_k1",          "harmonic_k2",
          "harmonic_k3", "harmonic_mixed", "quartic_xsq",          "quartic_manufactured",
          "eigen_mu2",   "eigen_mu4",      "eigen_mu8",            "random_bandlimited"};
}

CaseSpec builtin_case(const std::string& name) {
  if (name == "zero") {
    CaseSpec c = harmonic("zero", [](const Point&) { return 0.0; }, -1);
    c.expected_order = -1;
    return c;
  }
  if (name == "constant")
    return harmonic("constant", [](const Point&) { return 1.0; }, 0);
  if (name == "harmonic_k1")
    return harmonic("harmonic_k1", [](const Point& z) { return z[0]; }, 1);
  if (name == "harmonic_k2")
    return harmonic("harmonic_k2", [](const Point& z) { return z[0] * z[0] - z[1] * z[1]; }, 2);
  if (name == "harmonic_k3")
    return harmonic("harmonic_k3",
                    [](const Point& z) { return z[0] * (z[0] * z[0] - 3.0 * z[1] * z[1]); }, 3);
  if (name == "harmonic_mixed") {
    CaseSpec c = harmonic(
        "harmonic_mixed",
        [](const Point& z) { return z[0] + 8.0 * z[0] * (z[0] * z[0] - 3.0 * z[1] * z[1]); },
        -1);
    c.expected_order = 1;
    return c;
  }
  if (name == "quartic_xsq") {
    // bilap(x1^2) = 0 = V u with V == 0, so this is an exact solution
    CaseSpec c = harmonic("quartic_xsq", [](const Point& z) { return z[0] * z[0]; }, 2);
    return c;
  }
  if (name == "quartic_manufactured") {
    CaseSpec c;
    c.name = "quartic_manufactured";
    c.base_dim = 2;
    c.lift = true;
    c.u = [](const Point& z) { return z[0] * z[0] * z[0] * z[0] + 1.0; };
    // bilap(x1^4 + 1) = 24, so V = 24/(x1^4 + 1) solves the equation exactly
    PotentialSpec V;
    V.value = [](const Point& z) {
      const double q = z[0] * z[0] * z[0] * z[0] + 1.0;
      return 24.0 / q;
    };
    V.grad = [](const Point& z) {
      const double q = z[0] * z[0] * z[0] * z[0] + 1.0;
      return Point{-96.0 * z[0] * z[0] * z[0] / (q * q), 0.0, 0.0};
    };
    V.sup_norm = 24.0;     // attained at x1 = 0
    V.grad_sup_norm = 12.0;  // declared headroom over the sampled max on |x1| <= 1/2
    c.potential = V;
    c.expected_order = 0;
    return c;
  }
  if (name == "eigen_mu2") return eigen_case(2);
  if (name == "eigen_mu4") return eigen_case(4);
  if (name == "eigen_mu8") return eigen_case(8);
  if (name == "random_bandlimited") {
    CaseSpec c;
    c.name = "random_bandlimited";
    c.base_dim = 2;
    c.lift = false;
    c.seed = 20240817;
    c.u = random_bandlimited_expr(c.seed);
    c.potential = constant_potential(1.0);  // gives lambda = 2 for structural checks
    c.satisfies_pde = false;
    return c;
  }
  std::ostringstream msg;
  msg << "unknown case '" << name << "'; available:";
  for (const auto& n : builtin_case_names()) msg << " " << n;
  throw std::runtime_error(msg.str());
}

LiftedSystem instantiate(const CaseSpec& spec, const GridSpec& grid,
                         double alpha_override) {
  validate(grid);
  LiftParams p = select_params(spec.potential);
  ScalarField u_tilde;
  if (spec.lift) {
    if (grid.dim != spec.base_dim + 1)
      throw std::runtime_error("instantiate: lifted case '" + spec.name + "' needs dim " +
                               std::to_string(spec.base_dim + 1));
    const FieldExpr base = spec.u;
    const double sl = p.sqrt_lambda;
    const int t_axis = spec.base_dim;
    u_tilde = sample(grid, [base, sl, t_axis](const Point& z) {
      return base(z) * std::exp(sl * z[t_axis]);
    });
  } else {
    u_tilde = sample(grid, spec.u);
  }
  if (alpha_override >= 0) p.alpha = alpha_override;
  return make_system(std::move(u_tilde), spec.potential, p);
}

ManufacturedPotential manufacture_potential(FieldExpr u, FieldExpr bilap_u, double floor,
                                            const GridSpec& sample_grid) {
  if (!(floor > 0)) throw std::runtime_error("manufacture_potential: floor must be positive");
  auto valid = [u, floor](const Point& z) { return std::abs(u(z)) >= floor; };
  FieldExpr value = [u, bilap_u, floor](const Point& z) {
    const double uv = u(z);
    return std::abs(uv) >= floor ? bilap_u(z) / uv : 0.0;
  };

  // sample norms over the masked region (gradient by small central differences)
  double sup = 0, gsup = 0;
  std::size_t masked = 0;
  const double eps = sample_grid.spacing();
  for_each_node(sample_grid, [&](std::size_t, const std::array<int, 3>&, const Point& z) {
    if (!valid(z)) return;
    ++masked;
    sup = std::max(sup, std::abs(value(z)));
    double g2 = 0;
    for (int k = 0; k < sample_grid.dim; ++k) {
      Point zp = z, zm = z;
      zp[k] += eps;
      zm[k] -= eps;
      if (!valid(zp) || !valid(zm)) continue;
      const double gk = (value(zp) - value(zm)) / (2.0 * eps);
      g2 += gk * gk;
    }
    gsup = std::max(gsup, std::sqrt(g2));
  });
  if (masked == 0) throw std::runtime_error("manufacture_potential: masked region is empty");

  ManufacturedPotential out;
  out.potential.value = value;
  out.potential.grad = nullptr;
  out.potential.sup_norm = 1.05 * sup;
  out.potential.grad_sup_norm = 1.05 * gsup;
  out.valid = valid;
  return out;
}

ScalarField solve_biharmonic(const SolveConfig& cfg) {
  validate(cfg.grid);
  if (cfg.grid.dim != 2) throw std::runtime_error("solve_biharmonic: grid dim must be 2");
  if (!(cfg.tol > 0)) throw std::runtime_error("solve_biharmonic: tolerance must be positive");
  const int n = cfg.grid.points_per_axis;
  const int m = n - 2;  // interior nodes per axis
  const double h2 = cfg.grid.spacing() * cfg.grid.spacing();
  const auto node = [n](int i, int j) { return i * n + j; };
  const auto uid = [m](int i, int j) { return (i - 1) * m + (j - 1); };
  const int M = m * m;

  std::vector<double> bu(static_cast<std::size_t>(n) * n, 0.0);
  std::vector<double> bv(static_cast<std::size_t>(n) * n, 0.0);
  std::vector<double> vpot(static_cast<std::size_t>(n) * n, 0.0);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const Point z{cfg.grid.coord(i), cfg.grid.coord(j), 0.0};
      vpot[node(i, j)] = cfg.potential.value(z);
      if (i == 0 || j == 0 || i == n - 1 || j == n - 1) {
        bu[node(i, j)] = cfg.boundary_u(z);
        bv[node(i, j)] = cfg.boundary_lap_u(z);
      }
    }

  // Unknown layout: [u interior (M), v interior (M)].
  // Row k in [0,M):   h^2 lap(u) - h^2 v = 0  (scaled by h^2 for conditioning)
  // Row k in [M,2M):  h^2 lap(v) - h^2 V u = 0
  Eigen::SparseMatrix<double> A(2 * M, 2 * M);
  Eigen::VectorXd rhs = Eigen::VectorXd::Zero(2 * M);
  std::vector<Eigen::Triplet<double>> trips;
  trips.reserve(static_cast<std::size_t>(12) * M);
  const int off[4][2] = {{1, 0}, {-1, 0}, {0, 1}, {0, -1}};
  for (int i = 1; i <= m; ++i)
    for (int j = 1; j <= m; ++j) {
      const int k = uid(i, j);
      trips.emplace_back(k, k, -4.0);
      trips.emplace_back(M + k, M + k, -4.0);
      trips.emplace_back(k, M + k, -h2);
      trips.emplace_back(M + k, k, -h2 * vpot[node(i, j)]);
      for (const auto& o : off) {
        const int ii = i + o[0], jj = j + o[1];
        if (ii >= 1 && ii <= m && jj >= 1 && jj <= m) {
          trips.emplace_back(k, uid(ii, jj), 1.0);
          trips.emplace_back(M + k, M + uid(ii, jj), 1.0);
        } else {
          rhs[k] -= bu[node(ii, jj)];
          rhs[M + k] -= bv[node(ii, jj)];
        }
      }
    }
  A.setFromTriplets(trips.begin(), trips.end());

  Eigen::BiCGSTAB<Eigen::SparseMatrix<double>, Eigen::IncompleteLUT<double>> solver;
  solver.preconditioner().setDroptol(1e-6);
  solver.preconditioner().setFillfactor(20);
  solver.compute(A);
  if (solver.info() != Eigen::Success)
    throw std::runtime_error("solve_biharmonic: preconditioner setup failed");

  // iterate in chunks so a failure can report the residual history
  const int chunks = 8;
  const int per_chunk = std::max(1, cfg.max_iters / chunks);
  solver.setTolerance(cfg.tol);
  Eigen::VectorXd x = Eigen::VectorXd::Zero(2 * M);
  std::vector<double> history;
  bool converged = false;
  for (int c = 0; c < chunks && !converged; ++c) {
    solver.setMaxIterations(per_chunk);
    x = solver.solveWithGuess(rhs, x);
    history.push_back(solver.error());
    converged = solver.info() == Eigen::Success;
  }
  if (!converged) {
    std::ostringstream msg;
    msg << "solve_biharmonic: no convergence after " << cfg.max_iters
        << " iterations; residual history:";
    for (double e : history) msg << " " << e;
    throw std::runtime_error(msg.str());
  }

  ScalarField out;
  out.grid = cfg.grid;
  out.margin = 0;
  out.values.resize(cfg.grid.node_count());
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      out.values[node(i, j)] =
          (i == 0 || j == 0 || i == n - 1 || j == n - 1) ? bu[node(i, j)] : x[uid(i, j)];
  return out;
}

FieldExpr case_laplacian(const CaseSpec& spec) {
  const std::string& n = spec.name;
  if (n == "zero" || n == "constant" || n == "harmonic_k1" || n == "harmonic_k2" ||
      n == "harmonic_k3" || n == "harmonic_mixed")
    return [](const Point&) { return 0.0; };
  if (n == "quartic_xsq") return [](const Point&) { return 2.0; };
  if (n == "quartic_manufactured")
    return [](const Point& z) { return 12.0 * z[0] * z[0]; };
  if (n.rfind("eigen_mu", 0) == 0) {
    const double m = spec.mu;
    const FieldExpr u = spec.u;
    return [m, u](const Point& z) { return -2.0 * m * m * u(z); };
  }
  throw std::runtime_error("case '" + n + "' has no closed-form Laplacian");
}

}  // namespace freqlab
