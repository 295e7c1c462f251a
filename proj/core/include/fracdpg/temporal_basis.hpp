#pragma once

#include "fracdpg/polynomial.hpp"

#include <Eigen/Dense>

#include <vector>

namespace fracdpg {

/// Reference-slab bases for the time discretisation of degree m, written in
/// the local variable tau = (t - t_{n-1}) / k_n in [0,1].
///
/// Test functions are the shifted Legendre polynomials psi_b, b = 0..m-1.
/// Trial functions are phi_0 = 1 and phi_a(tau) = int_0^tau psi_{a-1}, so
/// that phi_a(0) = 0 for a >= 1 and phi_a(1) = delta_{a1}. The slab value at
/// the left knot is therefore the coefficient c_0 and the value at the right
/// knot is c_0 + c_1, which makes inter-slab continuity a coefficient copy.
class TemporalBasis {
 public:
  static constexpr int kMaxDegree = 6;

  explicit TemporalBasis(int degree);

  int degree() const { return degree_; }
  int trial_count() const { return degree_ + 1; }
  int test_count() const { return degree_; }

  const Polynomial& trial(int a) const { return trial_[static_cast<std::size_t>(a)]; }
  /// d(phi_a)/d(tau); equals psi_{a-1} for a >= 1 and zero for a = 0.
  const Polynomial& trial_derivative(int a) const { return trial_deriv_[static_cast<std::size_t>(a)]; }
  const Polynomial& test(int b) const { return test_[static_cast<std::size_t>(b)]; }

  /// gram()(b, a) = int_0^1 phi_a psi_b dtau.
  const Eigen::MatrixXd& gram() const { return gram_; }

  /// Trial basis values at tau.
  Eigen::VectorXd trial_values(double tau) const;

 private:
  int degree_;
  std::vector<Polynomial> trial_;
  std::vector<Polynomial> trial_deriv_;
  std::vector<Polynomial> test_;
  Eigen::MatrixXd gram_;
};

}  // namespace fracdpg
