#include "fracdpg/verify.hpp"

#include "fracdpg/dpg_stepper.hpp"
#include "fracdpg/manufactured.hpp"
#include "fracdpg/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <random>
#include <sstream>

namespace fracdpg {

namespace {

std::string sci(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3e", v);
  return buf;
}

// int_{slab} t^p psi_b(tau) dt by Gauss-Jacobi on a slab starting at 0 and
// Gauss-Legendre elsewhere.
Eigen::VectorXd oracle_power_moments(double p, const Interval& slab, const TemporalBasis& basis) {
  const int m = basis.degree();
  const double k = slab.length();
  Eigen::VectorXd mu = Eigen::VectorXd::Zero(m);
  if (slab.left == 0.0) {
    const QuadratureRule rule = gauss_jacobi(8, p);
    for (std::size_t q = 0; q < rule.size(); ++q)
      for (int b = 0; b < m; ++b) mu(b) += rule.weights[q] * basis.test(b)(rule.nodes[q]);
    return mu * std::pow(k, p + 1.0);
  }
  const QuadratureRule& rule = gauss_legendre(kMaxGaussPoints);
  for (std::size_t q = 0; q < rule.size(); ++q) {
    const double w = rule.weights[q] * k * std::pow(slab.left + k * rule.nodes[q], p);
    for (int b = 0; b < m; ++b) mu(b) += w * basis.test(b)(rule.nodes[q]);
  }
  return mu;
}

}  // namespace

bool VerifyReport::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
}

std::string VerifyReport::to_text() const {
  std::ostringstream os;
  for (const CheckResult& c : checks) os << (c.passed ? "PASS " : "FAIL ") << c.name << ": " << c.detail << '\n';
  return os.str();
}

CheckResult check_semigroup(std::uint64_t seed, int samples) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> order(0.05, 0.95);
  std::uniform_real_distribution<double> power(0.0, 5.0);
  std::uniform_real_distribution<double> time(0.01, 2.0);
  double worst = 0.0;
  for (int i = 0; i < samples; ++i) {
    const double a = order(rng);
    const double b = order(rng);
    const double p = power(rng);
    const double t = time(rng);
    // I^a (I^b s^p) against I^(a+b) s^p.
    const double lhs = frac_integral_monomial(b, p, 1.0) * frac_integral_monomial(a, p + b, t);
    const double rhs = frac_integral_monomial(a + b, p, t);
    worst = std::max(worst, std::abs(lhs - rhs) / std::abs(rhs));
  }
  return {"kernel_semigroup", worst <= 1e-12, "max relative deviation " + sci(worst)};
}

CheckResult check_coercivity(std::uint64_t seed, int trials) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> slabs(1, 8);
  std::uniform_int_distribution<int> degree(1, 3);
  std::uniform_real_distribution<double> grading(1.0, 3.0);
  std::uniform_real_distribution<double> order(0.05, 0.95);
  std::normal_distribution<double> normal;
  double lowest = std::numeric_limits<double>::infinity();
  for (int trial = 0; trial < trials; ++trial) {
    const int n = slabs(rng);
    const int m = degree(rng);
    const TimeMesh mesh = TimeMesh::graded(grading(rng), n, 1.0);
    const FractionalParams params(order(rng));
    const TemporalBasis basis(m);
    std::vector<Interval> intervals;
    for (int j = 1; j <= n; ++j) intervals.push_back(mesh.slab(j));
    Eigen::MatrixXd coeffs(m + 1, n);
    double value_left = 0.0;  // v(0) = 0
    for (int j = 0; j < n; ++j) {
      coeffs(0, j) = value_left;
      for (int a = 1; a <= m; ++a) coeffs(a, j) = normal(rng);
      value_left = coeffs(0, j) + coeffs(1, j);
    }
    lowest = std::min(lowest, memory_quadratic_form(params, intervals, basis, coeffs));
  }
  return {"discrete_coercivity", lowest >= -1e-10,
          std::to_string(trials) + " draws, minimum " + sci(lowest)};
}

CheckResult check_mesh_bounds_suite() {
  int failures = 0;
  int total = 0;
  for (double gamma : {1.0, 1.4, 1.8, 2.0, 2.5, 3.0, 3.5, 4.2}) {
    for (int n : {10, 40, 160}) {
      ++total;
      if (!check_mesh_bounds(TimeMesh::graded(gamma, n, 1.0)).all_passed()) ++failures;
    }
  }
  return {"mesh_bounds", failures == 0, std::to_string(total) + " meshes, " + std::to_string(failures) + " failed"};
}

CheckResult check_ritz_idempotence(std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal;
  double worst = 0.0;
  for (int r = 1; r <= FESpace::kMaxDegree; ++r) {
    const FESpace space(7, r);
    const SpatialOperators ops = assemble_operators(space);
    Eigen::VectorXd c(space.dof_count());
    for (Eigen::Index i = 0; i < c.size(); ++i) c(i) = normal(rng);
    const double scale = c.cwiseAbs().maxCoeff();
    worst = std::max(worst, (ritz_project(space, ops, c) - c).cwiseAbs().maxCoeff() / scale);
    const Eigen::VectorXd again = ritz_project(space, [&](double x) { return evaluate(space, c, x); });
    worst = std::max(worst, (again - c).cwiseAbs().maxCoeff() / scale);
  }
  return {"ritz_idempotence", worst <= 1e-10, "max relative deviation " + sci(worst)};
}

CheckResult check_polynomial_exactness(std::uint64_t seed, int cases) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> slabs(1, 8);
  std::uniform_int_distribution<int> degree(1, 3);
  std::uniform_real_distribution<double> order(0.05, 0.95);
  std::normal_distribution<double> normal;
  const FESpace space(4, 2);
  const SpatialOperators ops = assemble_operators(space);
  double worst = 0.0;
  for (int i = 0; i < cases; ++i) {
    const int m = degree(rng);
    const int n = slabs(rng);
    const double gamma = (i % 2 == 0) ? 1.0 : 2.0;
    const double alpha = order(rng);
    // u(x,t) = sum_j t^j phi_j(x) with phi_j in the finite element space.
    std::vector<Eigen::VectorXd> phi;
    for (int j = 0; j <= m; ++j) {
      Eigen::VectorXd v(space.dof_count());
      for (Eigen::Index d = 0; d < v.size(); ++d) v(d) = normal(rng);
      phi.push_back(v);
    }
    ProblemSpec problem{FractionalParams(alpha)};
    problem.initial = [&space, &phi](double x) { return evaluate(space, phi[0], x); };
    problem.moments = [&](const Interval& slab, const FESpace&, const TemporalBasis& basis) {
      Eigen::MatrixXd f = Eigen::MatrixXd::Zero(space.dof_count(), basis.degree());
      for (int j = 0; j <= m; ++j) {
        const Eigen::VectorXd stiff = oracle_power_moments(j, slab, basis);
        for (int b = 0; b < basis.degree(); ++b) f.col(b) += stiff(b) * (ops.stiffness * phi[j]);
        if (j == 0) continue;
        // ^cD^{1-alpha} t^j = Gamma(j+1)/Gamma(j+alpha) t^(j-1+alpha)
        const double c = std::tgamma(j + 1.0) / std::tgamma(j + alpha);
        const Eigen::VectorXd mem = oracle_power_moments(j - 1.0 + alpha, slab, basis) * c;
        for (int b = 0; b < basis.degree(); ++b) f.col(b) += mem(b) * (ops.mass * phi[j]);
      }
      return f;
    };
    const TimeMesh mesh = TimeMesh::graded(gamma, n, 1.0);
    const Trajectory traj = solve(problem, mesh, space, m);
    for (int s = 0; s <= n; ++s) {
      const double t = mesh.points()[static_cast<std::size_t>(s)];
      Eigen::VectorXd exact = Eigen::VectorXd::Zero(space.dof_count());
      for (int j = 0; j <= m; ++j) exact += std::pow(t, j) * phi[j];
      const Eigen::VectorXd got = evaluate_at(traj, t);
      worst = std::max(worst, (got - exact).cwiseAbs().maxCoeff() / std::max(1.0, exact.cwiseAbs().maxCoeff()));
    }
  }
  return {"polynomial_exactness", worst <= 1e-10, std::to_string(cases) + " cases, max deviation " + sci(worst)};
}

CheckResult check_zero_data() {
  double worst = 0.0;
  const FESpace space(10, 2);
  for (int m = 1; m <= 3; ++m) {
    for (double gamma : {1.0, 2.5}) {
      const ProblemSpec problem{FractionalParams(0.4)};
      const Trajectory traj = solve(problem, TimeMesh::graded(gamma, 6, 1.0), space, m);
      for (const SlabSolution& s : traj.slabs) worst = std::max(worst, s.coeffs.cwiseAbs().maxCoeff());
    }
  }
  return {"zero_data", worst <= 1e-13, "max coefficient " + sci(worst)};
}

CheckResult check_stability(int example_id, int m) {
  const double alpha = (example_id == 1) ? 0.5 : 0.3;
  const ManufacturedCase mc = example(example_id, alpha);
  const ProblemSpec problem = mc.problem();
  const Trajectory traj = solve(problem, TimeMesh::graded(2.0, 16, 1.0), FESpace(20, 2), m);
  const StabilityResult st = stability_functional(traj, problem);
  const std::string name = "stability_" + mc.name + "_m" + std::to_string(m);
  if (!st.rhs()) return {name, false, "rhs unavailable"};
  const double rhs = *st.rhs();
  const bool ok = st.lhs() <= rhs * (1.0 + 1e-8) && st.memory >= -1e-10;
  return {name, ok, "lhs " + sci(st.lhs()) + " <= rhs " + sci(rhs)};
}

VerifyReport verify(const VerifyConfig& config) {
  VerifyReport report;
  report.checks.push_back(check_semigroup(config.seed));
  report.checks.push_back(check_coercivity(config.seed + 1, config.trials));
  report.checks.push_back(check_mesh_bounds_suite());
  report.checks.push_back(check_ritz_idempotence(config.seed + 2));
  report.checks.push_back(check_polynomial_exactness(config.seed + 3));
  report.checks.push_back(check_zero_data());
  for (int id : {1, 2})
    for (int m : {1, 2}) report.checks.push_back(check_stability(id, m));
  return report;
}

}  // namespace fracdpg
