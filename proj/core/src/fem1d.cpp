#include "fracdpg/fem1d.hpp"

#include "fracdpg/quadrature.hpp"

#include <Eigen/SparseCholesky>

#include <cmath>
#include <stdexcept>

namespace fracdpg {

namespace {

std::vector<double> lobatto_nodes(int r) {
  switch (r) {
    case 1:
      return {0.0, 1.0};
    case 2:
      return {0.0, 0.5, 1.0};
    case 3: {
      const double d = 0.5 / std::sqrt(5.0);
      return {0.0, 0.5 - d, 0.5 + d, 1.0};
    }
    case 4: {
      const double d = 0.5 * std::sqrt(3.0 / 7.0);
      return {0.0, 0.5 - d, 0.5, 0.5 + d, 1.0};
    }
    default:
      throw std::invalid_argument("lobatto_nodes: unsupported degree");
  }
}

Polynomial lagrange(const std::vector<double>& nodes, std::size_t i) {
  Polynomial p = Polynomial::constant(1.0);
  for (std::size_t j = 0; j < nodes.size(); ++j) {
    if (j == i) continue;
    const double denom = nodes[i] - nodes[j];
    p = p * Polynomial({-nodes[j] / denom, 1.0 / denom});
  }
  return p;
}

Eigen::SparseMatrix<double> assemble_bilinear(const FESpace& space, bool with_boundary, bool stiffness) {
  const int r = space.degree();
  const int n = with_boundary ? space.node_count() : space.dof_count();
  const QuadratureRule& rule = gauss_legendre(r + 1);
  const double h = space.h();

  // Element matrix is the same on every element of the uniform mesh.
  Eigen::MatrixXd local = Eigen::MatrixXd::Zero(r + 1, r + 1);
  for (std::size_t q = 0; q < rule.size(); ++q) {
    const double xi = rule.nodes[q];
    for (int i = 0; i <= r; ++i) {
      for (int j = 0; j <= r; ++j) {
        const double v = stiffness ? space.shape_derivative(i)(xi) * space.shape_derivative(j)(xi) / h
                                   : space.shape(i)(xi) * space.shape(j)(xi) * h;
        local(i, j) += rule.weights[q] * v;
      }
    }
  }

  std::vector<Eigen::Triplet<double>> triplets;
  triplets.reserve(static_cast<std::size_t>(space.element_count()) * (r + 1) * (r + 1));
  for (int e = 0; e < space.element_count(); ++e) {
    for (int i = 0; i <= r; ++i) {
      const int gi = with_boundary ? e * r + i : space.dof_index(e, i);
      if (gi < 0) continue;
      for (int j = 0; j <= r; ++j) {
        const int gj = with_boundary ? e * r + j : space.dof_index(e, j);
        if (gj < 0) continue;
        triplets.emplace_back(gi, gj, local(i, j));
      }
    }
  }
  Eigen::SparseMatrix<double> mat(n, n);
  mat.setFromTriplets(triplets.begin(), triplets.end());
  return mat;
}

int default_load_points(const FESpace& space, int points) { return points > 0 ? points : space.degree() + 4; }

}  // namespace

FESpace::FESpace(int element_count, int degree) : element_count_(element_count), degree_(degree) {
  if (element_count < 2) throw std::invalid_argument("FESpace: need at least two elements");
  if (degree < 1 || degree > kMaxDegree) throw std::invalid_argument("FESpace: degree must lie in [1, 4]");
  h_ = 1.0 / element_count;
  ref_nodes_ = lobatto_nodes(degree);
  for (std::size_t i = 0; i < ref_nodes_.size(); ++i) {
    shape_.push_back(lagrange(ref_nodes_, i));
    shape_d1_.push_back(shape_.back().derivative());
    shape_d2_.push_back(shape_d1_.back().derivative());
  }
}

double FESpace::node_coordinate(int global_node) const {
  const int e = std::min(global_node / degree_, element_count_ - 1);
  const int l = global_node - e * degree_;
  return (e + ref_nodes_[static_cast<std::size_t>(l)]) * h_;
}

int FESpace::dof_index(int element, int local) const {
  const int g = element * degree_ + local;
  if (g == 0 || g == node_count() - 1) return -1;
  return g - 1;
}

Eigen::SparseMatrix<double> assemble_mass(const FESpace& space, bool with_boundary) {
  return assemble_bilinear(space, with_boundary, false);
}

Eigen::SparseMatrix<double> assemble_stiffness(const FESpace& space, bool with_boundary) {
  return assemble_bilinear(space, with_boundary, true);
}

SpatialOperators assemble_operators(const FESpace& space) {
  return {assemble_mass(space), assemble_stiffness(space), space.degree()};
}

Eigen::VectorXd assemble_load(const FESpace& space, const ScalarFunction& f, int points) {
  const QuadratureRule& rule = gauss_legendre(default_load_points(space, points));
  const int r = space.degree();
  const double h = space.h();
  Eigen::VectorXd b = Eigen::VectorXd::Zero(space.dof_count());
  for (int e = 0; e < space.element_count(); ++e) {
    for (std::size_t q = 0; q < rule.size(); ++q) {
      const double xi = rule.nodes[q];
      const double fx = f((e + xi) * h) * rule.weights[q] * h;
      for (int l = 0; l <= r; ++l) {
        const int i = space.dof_index(e, l);
        if (i >= 0) b(i) += fx * space.shape(l)(xi);
      }
    }
  }
  return b;
}

Eigen::VectorXd ritz_project(const FESpace& space, const ScalarFunction& v) {
  if (std::abs(v(0.0)) > 1e-12 || std::abs(v(1.0)) > 1e-12)
    throw std::invalid_argument("ritz_project: function must vanish at x = 0 and x = 1");
  const int r = space.degree();
  const double h = space.h();
  const QuadratureRule& rule = gauss_legendre(r + 3);
  // (v', phi') over an element = [v phi']_{x_L}^{x_R} - (v, phi'').
  Eigen::VectorXd b = Eigen::VectorXd::Zero(space.dof_count());
  for (int e = 0; e < space.element_count(); ++e) {
    const double vl = v(e * h);
    const double vr = v((e + 1) * h);
    for (int l = 0; l <= r; ++l) {
      const int i = space.dof_index(e, l);
      if (i < 0) continue;
      double acc = (vr * space.shape_derivative(l)(1.0) - vl * space.shape_derivative(l)(0.0)) / h;
      for (std::size_t q = 0; q < rule.size(); ++q) {
        const double xi = rule.nodes[q];
        acc -= rule.weights[q] * v((e + xi) * h) * space.shape_second_derivative(l)(xi) / h;
      }
      b(i) += acc;
    }
  }
  Eigen::SimplicialLLT<Eigen::SparseMatrix<double>, Eigen::Lower, Eigen::NaturalOrdering<int>> chol(
      assemble_stiffness(space));
  if (chol.info() != Eigen::Success) throw std::runtime_error("ritz_project: stiffness factorisation failed");
  return chol.solve(b);
}

Eigen::VectorXd ritz_project(const FESpace& space, const SpatialOperators& ops, const Eigen::VectorXd& coeffs) {
  if (coeffs.size() != space.dof_count()) throw std::invalid_argument("ritz_project: coefficient size mismatch");
  Eigen::SimplicialLLT<Eigen::SparseMatrix<double>, Eigen::Lower, Eigen::NaturalOrdering<int>> chol(ops.stiffness);
  if (chol.info() != Eigen::Success) throw std::runtime_error("ritz_project: stiffness factorisation failed");
  return chol.solve(ops.stiffness * coeffs);
}

double evaluate(const FESpace& space, const Eigen::VectorXd& coeffs, double x) {
  if (!(x >= 0.0 && x <= 1.0)) throw std::domain_error("evaluate: x outside [0,1]");
  if (coeffs.size() != space.dof_count()) throw std::invalid_argument("evaluate: coefficient size mismatch");
  const int e = std::min(static_cast<int>(x / space.h()), space.element_count() - 1);
  const double xi = x / space.h() - e;
  double acc = 0.0;
  for (int l = 0; l <= space.degree(); ++l) {
    const int i = space.dof_index(e, l);
    if (i >= 0) acc += coeffs(i) * space.shape(l)(xi);
  }
  return acc;
}

double l2_norm_error(const FESpace& space, const Eigen::VectorXd& coeffs, const ScalarFunction& exact, int points) {
  if (coeffs.size() != space.dof_count()) throw std::invalid_argument("l2_norm_error: coefficient size mismatch");
  const QuadratureRule& rule = gauss_legendre(points > 0 ? points : space.degree() + 1);
  const int r = space.degree();
  const double h = space.h();
  double acc = 0.0;
  for (int e = 0; e < space.element_count(); ++e) {
    for (std::size_t q = 0; q < rule.size(); ++q) {
      const double xi = rule.nodes[q];
      double uh = 0.0;
      for (int l = 0; l <= r; ++l) {
        const int i = space.dof_index(e, l);
        if (i >= 0) uh += coeffs(i) * space.shape(l)(xi);
      }
      const double diff = uh - exact((e + xi) * h);
      acc += rule.weights[q] * h * diff * diff;
    }
  }
  return std::sqrt(acc);
}

double integrate(const FESpace& space, const ScalarFunction& g, int points) {
  const QuadratureRule& rule = gauss_legendre(points);
  const double h = space.h();
  double acc = 0.0;
  for (int e = 0; e < space.element_count(); ++e)
    for (std::size_t q = 0; q < rule.size(); ++q) acc += rule.weights[q] * h * g((e + rule.nodes[q]) * h);
  return acc;
}

}  // namespace fracdpg
