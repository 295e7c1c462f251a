#pragma once

#include <vector>

namespace fracdpg {

/// Quadrature rule on the reference interval [0,1].
struct QuadratureRule {
  std::vector<double> nodes;
  std::vector<double> weights;

  std::size_t size() const { return nodes.size(); }
};

inline constexpr int kMaxGaussPoints = 64;

/// Gauss-Legendre rule with `points` nodes on [0,1] (cached; 1 <= points <= 64).
const QuadratureRule& gauss_legendre(int points);

/// Gauss-Jacobi rule on [0,1] for the weight x^exponent (exponent > -1):
/// sum_i w_i g(x_i) approximates int_0^1 x^exponent g(x) dx, exact for
/// polynomials g of degree <= 2*points - 1.
QuadratureRule gauss_jacobi(int points, double exponent);

/// Composite Gauss-Legendre rule geometrically graded towards x = 0, for
/// integrands with an integrable algebraic singularity at the origin.
QuadratureRule graded_origin_rule(int points_per_level, int levels, double ratio = 0.15);

/// Number of Gauss-Legendre points needed to integrate, to roughly `digits`
/// correct digits, a function analytic except at a singularity lying a
/// distance `separation` (in units of the interval length) beyond one end.
int gauss_points_for_separation(double separation, double digits = 17.0);

}  // namespace fracdpg
