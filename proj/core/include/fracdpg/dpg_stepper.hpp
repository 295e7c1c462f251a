#pragma once

#include "fracdpg/fem1d.hpp"
#include "fracdpg/fractional_kernel.hpp"
#include "fracdpg/temporal_basis.hpp"
#include "fracdpg/time_mesh.hpp"

#include <Eigen/Dense>

#include <functional>
#include <optional>
#include <vector>

namespace fracdpg {

using SpaceTimeFunction = std::function<double(double x, double t)>;

/// Temporal moments of the forcing on one slab: a dof x m matrix whose column
/// b holds int_{I_n} (f(t), phi_i) psi_b(t) dt over the interior basis phi_i.
using MomentFunction = std::function<Eigen::MatrixXd(const Interval& slab, const FESpace& space,
                                                     const TemporalBasis& basis)>;

/// Separable forcing term coef * t^exponent * g(x), exponent > -1.
struct PowerTerm {
  ScalarFunction space;
  double coef = 1.0;
  double exponent = 0.0;
};

struct QuadConfig {
  KernelQuadrature kernel;
  /// Gauss-Legendre points per slab for a general forcing f(x,t); 0 means 2(m+2).
  int forcing_points = 0;
  /// When set, a general forcing is integrated over the first slab with the
  /// Gauss-Jacobi rule for the weight tau^exponent (f / t^exponent should be smooth).
  std::optional<double> first_slab_jacobi_exponent;
};

/// Problem data. The forcing is the sum of `forcing` and `forcing_terms`,
/// unless `moments` is set, in which case it replaces both.
struct ProblemSpec {
  explicit ProblemSpec(FractionalParams p) : params(p) {}

  FractionalParams params;
  double final_time = 1.0;
  SpaceTimeFunction forcing;
  std::vector<PowerTerm> forcing_terms;
  MomentFunction moments;
  ScalarFunction initial;          ///< u0; empty means zero
  SpaceTimeFunction exact;         ///< optional
  SpaceTimeFunction rl_forcing;    ///< optional Riemann-Liouville derivative of order alpha of f
};

/// Solution on one slab: column a of `coeffs` is the spatial coefficient
/// vector multiplying the trial function phi_a.
struct SlabSolution {
  Interval slab;
  Eigen::MatrixXd coeffs;

  Eigen::VectorXd left_value() const { return coeffs.col(0); }
  Eigen::VectorXd right_value() const { return coeffs.col(0) + coeffs.col(1); }
};

struct Trajectory {
  TimeMesh mesh;
  FESpace space;
  TemporalBasis basis;
  std::vector<SlabSolution> slabs;

  int degree() const { return basis.degree(); }
};

/// Advances a partially solved trajectory by slab n (1-based); slabs 1..n-1
/// must already be present. Intended for single steps; solve() keeps the
/// history products cached across slabs.
SlabSolution advance_slab(const ProblemSpec& problem, const Trajectory& so_far, int n, const QuadConfig& quad = {});

/// Solves the whole time interval slab by slab, starting from the Ritz
/// projection of u0. Throws std::runtime_error if a slab system is singular.
Trajectory solve(const ProblemSpec& problem, const TimeMesh& mesh, const FESpace& space, int degree,
                 const QuadConfig& quad = {});

/// Spatial coefficients of U_h(t). At an interior knot the left slab is used.
/// Throws std::domain_error outside [0, T].
Eigen::VectorXd evaluate_at(const Trajectory& trajectory, double t);

/// Spatial coefficients of ^cD^{1-alpha} U_h at time t in (0, T].
Eigen::VectorXd caputo_apply(const Trajectory& trajectory, const FractionalParams& params, double t,
                             const KernelQuadrature& quad = {});

struct StabilityResult {
  double memory = 0.0;            ///< int_0^T (^cD^{1-alpha} U_h, U_h') dt
  double energy = 0.0;            ///< ||grad U_h(T)||^2
  double initial = 0.0;           ///< ||grad R_h u0||^2
  std::optional<double> forcing;  ///< int_0^T (f, ^RD^alpha f) dt / c_alpha^2

  double lhs() const { return memory + energy; }
  /// Empty when the problem carries no closed-form ^RD^alpha f.
  std::optional<double> rhs() const;
};

/// Both sides of the discrete stability inequality at t = T.
StabilityResult stability_functional(const Trajectory& trajectory, const ProblemSpec& problem,
                                     const KernelQuadrature& quad = {});

/// int_0^T g(t) dt slab by slab, with a geometrically graded rule on the first
/// slab so that integrable t^(-beta) behaviour at the origin is resolved.
double integrate_in_time(const TimeMesh& mesh, const std::function<double(double)>& g, int min_points = 8);

}  // namespace fracdpg
