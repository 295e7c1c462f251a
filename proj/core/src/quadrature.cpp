#include "fracdpg/quadrature.hpp"

#include <Eigen/Eigenvalues>

#include <array>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace fracdpg {

namespace {

QuadratureRule make_gauss_legendre(int n) {
  QuadratureRule rule;
  rule.nodes.resize(static_cast<std::size_t>(n));
  rule.weights.resize(static_cast<std::size_t>(n));
  // Newton iteration on P_n over [-1,1], then map to [0,1].
  for (int i = 0; i < (n + 1) / 2; ++i) {
    double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
    double dp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1.0;
      double p1 = x;
      for (int k = 2; k <= n; ++k) {
        const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      if (n == 1) p0 = 1.0;
      dp = n * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-16) break;
    }
    // Re-evaluate the derivative at the converged node.
    double p0 = 1.0;
    double p1 = x;
    for (int k = 2; k <= n; ++k) {
      const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
      p0 = p1;
      p1 = p2;
    }
    dp = (n == 1) ? 1.0 : n * (x * p1 - p0) / (x * x - 1.0);
    const double w = 2.0 / ((1.0 - x * x) * dp * dp);
    const auto lo = static_cast<std::size_t>(i);
    const auto hi = static_cast<std::size_t>(n - 1 - i);
    rule.nodes[lo] = 0.5 * (1.0 - x);
    rule.nodes[hi] = 0.5 * (1.0 + x);
    rule.weights[lo] = 0.5 * w;
    rule.weights[hi] = 0.5 * w;
  }
  return rule;
}

}  // namespace

const QuadratureRule& gauss_legendre(int points) {
  static const std::array<QuadratureRule, kMaxGaussPoints + 1> table = [] {
    std::array<QuadratureRule, kMaxGaussPoints + 1> t{};
    for (int n = 1; n <= kMaxGaussPoints; ++n) t[static_cast<std::size_t>(n)] = make_gauss_legendre(n);
    return t;
  }();
  if (points < 1 || points > kMaxGaussPoints)
    throw std::invalid_argument("gauss_legendre: point count out of range");
  return table[static_cast<std::size_t>(points)];
}

QuadratureRule gauss_jacobi(int points, double exponent) {
  if (points < 1) throw std::invalid_argument("gauss_jacobi: need at least one point");
  if (!(exponent > -1.0)) throw std::invalid_argument("gauss_jacobi: exponent must exceed -1");
  // Golub-Welsch for the Jacobi weight (1-x)^a (1+x)^b on [-1,1] with a = 0.
  const double a = 0.0;
  const double b = exponent;
  const int n = points;
  Eigen::MatrixXd jac = Eigen::MatrixXd::Zero(n, n);
  for (int k = 0; k < n; ++k) {
    const double s = 2.0 * k + a + b;
    jac(k, k) = (k == 0) ? (b - a) / (a + b + 2.0) : (b * b - a * a) / (s * (s + 2.0));
    if (k + 1 < n) {
      const double j = k + 1.0;
      const double sj = 2.0 * j + a + b;
      const double beta =
          4.0 * j * (j + a) * (j + b) * (j + a + b) / (sj * sj * (sj + 1.0) * (sj - 1.0));
      jac(k, k + 1) = jac(k + 1, k) = std::sqrt(beta);
    }
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(jac);
  if (eig.info() != Eigen::Success) throw std::runtime_error("gauss_jacobi: eigen solve failed");
  // mu0 = int_{-1}^{1} (1+x)^b dx; mapping x = 2t - 1 turns (1+x)^b dx into
  // 2^(b+1) t^b dt, which cancels against the 2^(b+1) in mu0.
  const double mu0_over_scale = 1.0 / (b + 1.0);
  QuadratureRule rule;
  rule.nodes.resize(static_cast<std::size_t>(n));
  rule.weights.resize(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) {
    const double v0 = eig.eigenvectors()(0, k);
    rule.nodes[static_cast<std::size_t>(k)] = 0.5 * (1.0 + eig.eigenvalues()(k));
    rule.weights[static_cast<std::size_t>(k)] = mu0_over_scale * v0 * v0;
  }
  return rule;
}

QuadratureRule graded_origin_rule(int points_per_level, int levels, double ratio) {
  if (levels < 1 || !(ratio > 0.0 && ratio < 1.0))
    throw std::invalid_argument("graded_origin_rule: bad grading");
  const QuadratureRule& base = gauss_legendre(points_per_level);
  QuadratureRule rule;
  double right = 1.0;
  for (int level = 0; level < levels; ++level) {
    const double left = right * ratio;
    const double width = right - left;
    for (std::size_t i = 0; i < base.size(); ++i) {
      rule.nodes.push_back(left + width * base.nodes[i]);
      rule.weights.push_back(width * base.weights[i]);
    }
    right = left;
  }
  return rule;
}

int gauss_points_for_separation(double separation, double digits) {
  if (!(separation > 0.0)) return kMaxGaussPoints + 1;
  // Bernstein ellipse through the singularity: x0 = 1 + 2*separation on the
  // canonical interval [-1,1]; the error decays like rho^(-2n).
  const double x0 = 1.0 + 2.0 * separation;
  const double rho = x0 + std::sqrt(x0 * x0 - 1.0);
  return static_cast<int>(std::ceil(digits / (2.0 * std::log10(rho))));
}

}  // namespace fracdpg
