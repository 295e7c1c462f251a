#pragma once

#include <span>
#include <vector>

namespace fracdpg {

/// Dense univariate polynomial in the monomial basis, p(x) = sum_i c_i x^i.
///
/// Used for the reference-interval temporal bases and the per-element Lagrange
/// shape functions; degrees stay small (at most 6 in time, 4 in space), so the
/// monomial representation is well conditioned on [0,1].
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<double> coefficients);

  /// Shifted Legendre polynomial P_n(2x - 1), orthogonal on [0,1].
  static Polynomial shifted_legendre(int degree);
  static Polynomial constant(double value);

  int degree() const;
  double coefficient(int i) const;
  std::span<const double> coefficients() const { return coeffs_; }

  double operator()(double x) const;

  Polynomial derivative() const;
  /// Antiderivative that vanishes at x = 0.
  Polynomial antiderivative() const;
  /// Exact integral over [0,1].
  double integral01() const;

  Polynomial& operator+=(const Polynomial& other);
  Polynomial& operator*=(double scale);

  friend Polynomial operator+(Polynomial lhs, const Polynomial& rhs) {
    lhs += rhs;
    return lhs;
  }
  friend Polynomial operator*(Polynomial lhs, double scale) {
    lhs *= scale;
    return lhs;
  }
  friend Polynomial operator*(const Polynomial& lhs, const Polynomial& rhs);

 private:
  void trim();

  std::vector<double> coeffs_;
};

}  // namespace fracdpg
