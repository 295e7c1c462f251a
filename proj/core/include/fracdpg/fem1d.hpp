#pragma once

#include "fracdpg/polynomial.hpp"

#include <Eigen/Dense>
#include <Eigen/Sparse>

#include <functional>
#include <span>
#include <vector>

namespace fracdpg {

using ScalarFunction = std::function<double(double)>;

/// Continuous Lagrange finite elements of degree r on a uniform partition of
/// (0,1) into Nx intervals, with homogeneous Dirichlet conditions eliminated.
///
/// Global nodes are numbered left to right, g = e*r + l for local node l of
/// element e, giving Nx*r + 1 nodes; the interior degrees of freedom are
/// g = 1 .. Nx*r - 1 stored at index g - 1. Local nodes sit at the
/// Gauss-Lobatto points of each element.
class FESpace {
 public:
  static constexpr int kMaxDegree = 4;

  /// Throws std::invalid_argument unless Nx >= 2 and 1 <= r <= 4.
  FESpace(int element_count, int degree);

  int element_count() const { return element_count_; }
  int degree() const { return degree_; }
  double h() const { return h_; }
  int dof_count() const { return element_count_ * degree_ - 1; }
  int node_count() const { return element_count_ * degree_ + 1; }

  /// Local node positions in [0,1].
  std::span<const double> reference_nodes() const { return ref_nodes_; }
  double node_coordinate(int global_node) const;
  /// Interior dof index of local node l on element e, or -1 on the boundary.
  int dof_index(int element, int local) const;

  const Polynomial& shape(int local) const { return shape_[static_cast<std::size_t>(local)]; }
  const Polynomial& shape_derivative(int local) const { return shape_d1_[static_cast<std::size_t>(local)]; }
  const Polynomial& shape_second_derivative(int local) const { return shape_d2_[static_cast<std::size_t>(local)]; }

 private:
  int element_count_;
  int degree_;
  double h_;
  std::vector<double> ref_nodes_;
  std::vector<Polynomial> shape_;
  std::vector<Polynomial> shape_d1_;
  std::vector<Polynomial> shape_d2_;
};

/// Mass and stiffness matrices over the interior dofs (banded, bandwidth r).
struct SpatialOperators {
  Eigen::SparseMatrix<double> mass;
  Eigen::SparseMatrix<double> stiffness;
  int bandwidth = 0;
};

/// With `with_boundary` the matrices cover all Nx*r + 1 nodes instead.
Eigen::SparseMatrix<double> assemble_mass(const FESpace& space, bool with_boundary = false);
Eigen::SparseMatrix<double> assemble_stiffness(const FESpace& space, bool with_boundary = false);
SpatialOperators assemble_operators(const FESpace& space);

/// b_i = (f, phi_i) by Gauss-Legendre with `points` nodes per element
/// (default r + 4).
Eigen::VectorXd assemble_load(const FESpace& space, const ScalarFunction& f, int points = 0);

/// Ritz projection of v with v(0) = v(1) = 0: solves A c = b with
/// b_i = (v', phi_i'), evaluated elementwise by parts so only v is needed.
Eigen::VectorXd ritz_project(const FESpace& space, const ScalarFunction& v);
/// Ritz projection of a member of the space given by its coefficients.
Eigen::VectorXd ritz_project(const FESpace& space, const SpatialOperators& ops, const Eigen::VectorXd& coeffs);

/// Value of the finite element function at x in [0,1].
double evaluate(const FESpace& space, const Eigen::VectorXd& coeffs, double x);

/// Composite Gauss rule (default r + 1 points per element) for
/// ||U_h - u||_{L2(0,1)}.
double l2_norm_error(const FESpace& space, const Eigen::VectorXd& coeffs, const ScalarFunction& exact,
                     int points = 0);

/// Composite Gauss-Legendre integral of g over (0,1) on the element partition.
double integrate(const FESpace& space, const ScalarFunction& g, int points);

}  // namespace fracdpg
