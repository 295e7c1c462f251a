#include "fracdpg/dpg_stepper.hpp"

#include "fracdpg/quadrature.hpp"

#include <Eigen/LU>

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace fracdpg {

namespace {

int capped_points(int wanted) { return std::min(wanted, kMaxGaussPoints); }

double binomial(int n, int k) {
  double r = 1.0;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

// mu_b = int_{slab} t^beta psi_b((t - left)/k) dt.
Eigen::VectorXd power_moments(double beta, const Interval& slab, const TemporalBasis& basis, int min_points) {
  const int m = basis.degree();
  const double a = slab.left;
  const double k = slab.length();
  Eigen::VectorXd mu = Eigen::VectorXd::Zero(m);
  if (a < k) {
    // Closed form after expanding (t - a)^j; cancellation is bounded by 2^j here.
    const double b = slab.right;
    for (int row = 0; row < m; ++row) {
      const auto psi = basis.test(row).coefficients();
      double acc = 0.0;
      for (std::size_t j = 0; j < psi.size(); ++j) {
        const int jj = static_cast<int>(j);
        double inner = 0.0;
        for (int i = 0; i <= jj; ++i) {
          const double p = beta + i + 1.0;
          const double lower = (a == 0.0) ? 0.0 : std::pow(a, p);
          inner += binomial(jj, i) * std::pow(-a, jj - i) * (std::pow(b, p) - lower) / p;
        }
        acc += psi[j] * inner / std::pow(k, jj);
      }
      mu(row) = acc;
    }
    return mu;
  }
  const int points = capped_points(std::max(min_points, gauss_points_for_separation(a / k)));
  const QuadratureRule& rule = gauss_legendre(points);
  for (std::size_t q = 0; q < rule.size(); ++q) {
    const double tau = rule.nodes[q];
    const double w = rule.weights[q] * k * std::pow(a + k * tau, beta);
    for (int row = 0; row < m; ++row) mu(row) += w * basis.test(row)(tau);
  }
  return mu;
}

Eigen::MatrixXd dense(const Eigen::SparseMatrix<double>& s) { return Eigen::MatrixXd(s); }

// Per-solve state: spatial operators, forcing loads and the last slab factorisation.
class SlabStepper {
 public:
  SlabStepper(const ProblemSpec& problem, const FESpace& space, const TemporalBasis& basis, const QuadConfig& quad)
      : problem_(problem),
        space_(space),
        basis_(basis),
        quad_(quad),
        ops_(assemble_operators(space)),
        mass_(dense(ops_.mass)),
        stiffness_(dense(ops_.stiffness)) {
    for (const PowerTerm& term : problem.forcing_terms) {
      if (!(term.exponent > -1.0)) throw std::invalid_argument("PowerTerm: exponent must exceed -1");
      term_loads_.push_back(assemble_load(space, term.space));
    }
  }

  const SpatialOperators& operators() const { return ops_; }

  Eigen::VectorXd initial_coefficients() const {
    if (!problem_.initial) return Eigen::VectorXd::Zero(space_.dof_count());
    return ritz_project(space_, problem_.initial);
  }

  Eigen::MatrixXd forcing_moments(const Interval& slab) const {
    const int m = basis_.degree();
    if (problem_.moments) {
      Eigen::MatrixXd f = problem_.moments(slab, space_, basis_);
      if (f.rows() != space_.dof_count() || f.cols() != m)
        throw std::invalid_argument("ProblemSpec::moments: result must be dof x m");
      return f;
    }
    Eigen::MatrixXd f = Eigen::MatrixXd::Zero(space_.dof_count(), m);
    const int base_points = quad_.forcing_points > 0 ? quad_.forcing_points : 2 * (m + 2);
    for (std::size_t i = 0; i < term_loads_.size(); ++i) {
      const PowerTerm& term = problem_.forcing_terms[i];
      const Eigen::VectorXd mu = power_moments(term.exponent, slab, basis_, base_points) * term.coef;
      for (int b = 0; b < m; ++b) f.col(b) += mu(b) * term_loads_[i];
    }
    if (problem_.forcing) {
      const double k = slab.length();
      const bool first = slab.left == 0.0;
      QuadratureRule rule;
      std::optional<double> jacobi;
      if (first && quad_.first_slab_jacobi_exponent) {
        jacobi = *quad_.first_slab_jacobi_exponent;
        rule = gauss_jacobi(base_points, *jacobi);
      } else {
        int points = base_points;
        if (!first) points = std::max(points, gauss_points_for_separation(slab.left / k));
        rule = gauss_legendre(capped_points(points));
      }
      for (std::size_t q = 0; q < rule.size(); ++q) {
        const double tau = rule.nodes[q];
        const double t = slab.left + k * tau;
        double w = rule.weights[q] * k;
        if (jacobi) w /= std::pow(tau, *jacobi);
        const Eigen::VectorXd load = assemble_load(space_, [&](double x) { return problem_.forcing(x, t); });
        for (int b = 0; b < m; ++b) f.col(b) += w * basis_.test(b)(tau) * load;
      }
    }
    return f;
  }

  // history.col(b) = sum over earlier slabs j of sum_a H^{(n,j)}(b,a) (M c_a^{(j)}).
  Eigen::MatrixXd history(const std::vector<SlabSolution>& past, const std::vector<Eigen::MatrixXd>& mass_coeffs,
                          const Interval& slab) const {
    const int m = basis_.degree();
    Eigen::MatrixXd h = Eigen::MatrixXd::Zero(space_.dof_count(), m);
    for (std::size_t j = 0; j < past.size(); ++j) {
      const HistoryBlock block = history_block_disjoint(problem_.params, past[j].slab, slab, basis_, quad_.kernel);
      h.noalias() += mass_coeffs[j] * block.entries.transpose();
    }
    return h;
  }

  SlabSolution solve_slab(const Interval& slab, const Eigen::VectorXd& c0, const Eigen::MatrixXd& history) {
    const int m = basis_.degree();
    const int d = space_.dof_count();
    const double k = slab.length();
    const Eigen::MatrixXd& gram = basis_.gram();

    if (!lu_ || k != last_step_) {
      const HistoryBlock local = history_block_local(problem_.params, slab, basis_);
      Eigen::MatrixXd system(m * d, m * d);
      for (int b = 0; b < m; ++b)
        for (int a = 1; a <= m; ++a)
          system.block(b * d, (a - 1) * d, d, d) = local(b, a) * mass_ + (k * gram(b, a)) * stiffness_;
      lu_.emplace(system);
      last_step_ = k;
      if (!(lu_->rcond() > 1e-14)) {
        lu_.reset();
        throw std::runtime_error("advance_slab: singular slab system on (" + std::to_string(slab.left) + ", " +
                                 std::to_string(slab.right) +
                                 "); the discrete problem is uniquely solvable, so this is an assembly error");
      }
    }

    const Eigen::MatrixXd forcing = forcing_moments(slab);
    const Eigen::VectorXd a_c0 = ops_.stiffness * c0;
    Eigen::VectorXd rhs(m * d);
    for (int b = 0; b < m; ++b)
      rhs.segment(b * d, d) = forcing.col(b) - history.col(b) - (k * gram(b, 0)) * a_c0;
    const Eigen::VectorXd x = lu_->solve(rhs);
    if (!x.allFinite()) throw std::runtime_error("advance_slab: non-finite slab solution");

    SlabSolution out{slab, Eigen::MatrixXd(d, m + 1)};
    out.coeffs.col(0) = c0;
    for (int a = 1; a <= m; ++a) out.coeffs.col(a) = x.segment((a - 1) * d, d);
    return out;
  }

 private:
  const ProblemSpec& problem_;
  const FESpace& space_;
  const TemporalBasis& basis_;
  QuadConfig quad_;
  SpatialOperators ops_;
  Eigen::MatrixXd mass_;
  Eigen::MatrixXd stiffness_;
  std::vector<Eigen::VectorXd> term_loads_;
  std::optional<Eigen::PartialPivLU<Eigen::MatrixXd>> lu_;
  double last_step_ = 0.0;
};

void check_problem(const ProblemSpec& problem, const TimeMesh& mesh) {
  if (std::abs(mesh.final_time() - problem.final_time) > 1e-12 * problem.final_time)
    throw std::invalid_argument("solve: mesh final time does not match the problem");
  if (problem.initial && (std::abs(problem.initial(0.0)) > 1e-12 || std::abs(problem.initial(1.0)) > 1e-12))
    throw std::invalid_argument("solve: u0 must vanish on the boundary");
}

}  // namespace

SlabSolution advance_slab(const ProblemSpec& problem, const Trajectory& so_far, int n, const QuadConfig& quad) {
  if (n < 1 || n > so_far.mesh.slab_count()) throw std::out_of_range("advance_slab: slab index out of range");
  if (static_cast<int>(so_far.slabs.size()) < n - 1)
    throw std::invalid_argument("advance_slab: earlier slabs have not been solved");
  SlabStepper stepper(problem, so_far.space, so_far.basis, quad);
  const std::vector<SlabSolution> past(so_far.slabs.begin(), so_far.slabs.begin() + (n - 1));
  std::vector<Eigen::MatrixXd> mass_coeffs;
  for (const SlabSolution& s : past) mass_coeffs.push_back(stepper.operators().mass * s.coeffs);
  const Interval slab = so_far.mesh.slab(n);
  const Eigen::VectorXd c0 = (n == 1) ? stepper.initial_coefficients() : past.back().right_value();
  return stepper.solve_slab(slab, c0, stepper.history(past, mass_coeffs, slab));
}

Trajectory solve(const ProblemSpec& problem, const TimeMesh& mesh, const FESpace& space, int degree,
                 const QuadConfig& quad) {
  check_problem(problem, mesh);
  Trajectory traj{mesh, space, TemporalBasis(degree), {}};
  SlabStepper stepper(problem, traj.space, traj.basis, quad);
  std::vector<Eigen::MatrixXd> mass_coeffs;
  Eigen::VectorXd c0 = stepper.initial_coefficients();
  for (int n = 1; n <= mesh.slab_count(); ++n) {
    const Interval slab = mesh.slab(n);
    traj.slabs.push_back(stepper.solve_slab(slab, c0, stepper.history(traj.slabs, mass_coeffs, slab)));
    mass_coeffs.push_back(stepper.operators().mass * traj.slabs.back().coeffs);
    c0 = traj.slabs.back().right_value();
  }
  return traj;
}

Eigen::VectorXd evaluate_at(const Trajectory& trajectory, double t) {
  const auto pts = trajectory.mesh.points();
  if (!(t >= 0.0 && t <= pts.back())) throw std::domain_error("evaluate_at: t outside [0, T]");
  if (trajectory.slabs.size() != static_cast<std::size_t>(trajectory.mesh.slab_count()))
    throw std::invalid_argument("evaluate_at: trajectory is incomplete");
  const auto it = std::lower_bound(pts.begin() + 1, pts.end(), t);
  const auto n = static_cast<std::size_t>(it - pts.begin());
  const SlabSolution& s = trajectory.slabs[n - 1];
  const double tau = std::clamp((t - s.slab.left) / s.slab.length(), 0.0, 1.0);
  return s.coeffs * trajectory.basis.trial_values(t == s.slab.right ? 1.0 : tau);
}

Eigen::VectorXd caputo_apply(const Trajectory& trajectory, const FractionalParams& params, double t,
                             const KernelQuadrature& quad) {
  if (!(t > 0.0 && t <= trajectory.mesh.final_time())) throw std::domain_error("caputo_apply: t outside (0, T]");
  Eigen::VectorXd out = Eigen::VectorXd::Zero(trajectory.space.dof_count());
  for (const SlabSolution& s : trajectory.slabs) {
    if (s.slab.left >= t) break;
    out += s.coeffs * caputo_weights(params, s.slab, t, trajectory.basis, quad);
  }
  return out;
}

std::optional<double> StabilityResult::rhs() const {
  if (!forcing) return std::nullopt;
  return initial + *forcing;
}

double integrate_in_time(const TimeMesh& mesh, const std::function<double(double)>& g, int min_points) {
  double total = 0.0;
  for (int n = 1; n <= mesh.slab_count(); ++n) {
    const Interval slab = mesh.slab(n);
    const double k = slab.length();
    const QuadratureRule rule = (n == 1)
                                    ? graded_origin_rule(std::max(min_points, 20), 48)
                                    : gauss_legendre(capped_points(
                                          std::max(min_points, gauss_points_for_separation(slab.left / k))));
    for (std::size_t q = 0; q < rule.size(); ++q) total += rule.weights[q] * k * g(slab.left + k * rule.nodes[q]);
  }
  return total;
}

StabilityResult stability_functional(const Trajectory& trajectory, const ProblemSpec& problem,
                                     const KernelQuadrature& quad) {
  if (trajectory.slabs.size() != static_cast<std::size_t>(trajectory.mesh.slab_count()))
    throw std::invalid_argument("stability_functional: trajectory is incomplete");
  const FESpace& space = trajectory.space;
  const TemporalBasis& basis = trajectory.basis;
  const int m = basis.degree();
  const SpatialOperators ops = assemble_operators(space);

  StabilityResult result;
  std::vector<Eigen::MatrixXd> mass_coeffs;
  for (const SlabSolution& s : trajectory.slabs) mass_coeffs.push_back(ops.mass * s.coeffs);
  for (std::size_t n = 0; n < trajectory.slabs.size(); ++n) {
    const SlabSolution& s = trajectory.slabs[n];
    Eigen::MatrixXd memory = mass_coeffs[n] * history_block_local(problem.params, s.slab, basis).entries.transpose();
    for (std::size_t j = 0; j < n; ++j)
      memory += mass_coeffs[j] *
                history_block_disjoint(problem.params, trajectory.slabs[j].slab, s.slab, basis, quad).entries.transpose();
    // U_h' on the slab is sum_b (c_{b+1} / k) psi_b.
    for (int b = 0; b < m; ++b) result.memory += s.coeffs.col(b + 1).dot(memory.col(b)) / s.slab.length();
  }
  const Eigen::VectorXd u_end = trajectory.slabs.back().right_value();
  const Eigen::VectorXd u_start = trajectory.slabs.front().left_value();
  result.energy = u_end.dot(ops.stiffness * u_end);
  result.initial = u_start.dot(ops.stiffness * u_start);

  const bool pointwise_forcing = !problem.moments && (problem.forcing || !problem.forcing_terms.empty());
  if (problem.rl_forcing && pointwise_forcing) {
    const auto f = [&](double x, double t) {
      double v = problem.forcing ? problem.forcing(x, t) : 0.0;
      for (const PowerTerm& term : problem.forcing_terms) v += term.coef * std::pow(t, term.exponent) * term.space(x);
      return v;
    };
    const int points = space.degree() + 4;
    const double integral = integrate_in_time(trajectory.mesh, [&](double t) {
      return integrate(space, [&](double x) { return f(x, t) * problem.rl_forcing(x, t); }, points);
    });
    const double c = problem.params.c_alpha();
    result.forcing = integral / (c * c);
  }
  return result;
}

}  // namespace fracdpg
