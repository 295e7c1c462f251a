#include "fracdpg/fractional_kernel.hpp"

#include "fracdpg/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

namespace fracdpg {

FractionalParams::FractionalParams(double alpha) : alpha_(alpha) {
  if (!(alpha > 0.0 && alpha < 1.0))
    throw std::domain_error("FractionalParams: alpha must lie in (0,1)");
  c_alpha_ = std::cos(alpha * std::numbers::pi / 2.0);
  for (int i = 0; i <= kMaxOffset; ++i) {
    inv_gamma_ext_[static_cast<std::size_t>(i)] = 1.0L / std::tgamma(static_cast<long double>(alpha) + i);
    inv_gamma_[static_cast<std::size_t>(i)] = static_cast<double>(inv_gamma_ext_[static_cast<std::size_t>(i)]);
  }
}

double FractionalParams::omega(int offset, double t) const {
  const double order = alpha_ + offset;
  if (t <= 0.0) {
    if (t == 0.0 && order > 1.0) return 0.0;
    throw std::domain_error("FractionalParams::omega: argument outside the kernel support");
  }
  return std::pow(t, order - 1.0) * inverse_gamma(offset);
}

Interval::Interval(double left_, double right_) : left(left_), right(right_) {
  if (!(std::isfinite(left_) && std::isfinite(right_) && left_ < right_))
    throw std::invalid_argument("Interval: require finite left < right");
}

long double FractionalParams::omega_extended(int offset, long double t) const {
  const long double order = static_cast<long double>(alpha_) + offset;
  if (t <= 0.0L) {
    if (t == 0.0L && order > 1.0L) return 0.0L;
    throw std::domain_error("FractionalParams::omega: argument outside the kernel support");
  }
  return std::pow(t, order - 1.0L) * inv_gamma_ext_[static_cast<std::size_t>(offset)];
}

double weight(double mu, double t) {
  if (!(mu > 0.0)) throw std::domain_error("weight: order must be positive");
  if (!(t > 0.0)) throw std::domain_error("weight: t must be positive");
  return std::pow(t, mu - 1.0) / std::tgamma(mu);
}

double frac_integral_monomial(double alpha, double p, double t) {
  if (!(p > -1.0)) throw std::domain_error("frac_integral_monomial: p must exceed -1");
  if (!(t > 0.0)) throw std::domain_error("frac_integral_monomial: t must be positive");
  if (!(alpha > 0.0 && alpha <= 2.0)) throw std::domain_error("frac_integral_monomial: alpha must lie in (0,2]");
  return std::exp(std::lgamma(p + 1.0) - std::lgamma(p + 1.0 + alpha)) * std::pow(t, p + alpha);
}

namespace {

// coef * omega_{alpha+offset}(t - shift)
struct Atom {
  int offset;
  long double shift;
  long double coef;
};

// Inner integral int_a^b omega_alpha(t-s) p((s-a)/w) / w ds written as kernel
// atoms valid for t >= b, by repeated integration by parts in s.
void append_inner_exact(const Polynomial& p, long double a, long double b, std::vector<Atom>& atoms) {
  const long double w = b - a;
  Polynomial d = p;
  long double scale = 1.0L / w;
  for (int l = 0; l <= p.degree(); ++l) {
    atoms.push_back({1 + l, a, scale * d(0.0)});
    atoms.push_back({1 + l, b, -scale * d(1.0)});
    d = d.derivative();
    scale /= w;
  }
}

void append_inner_gauss(const Polynomial& p, long double a, long double b, int points, std::vector<Atom>& atoms) {
  const QuadratureRule& rule = gauss_legendre(points);
  const long double w = b - a;
  for (std::size_t i = 0; i < rule.size(); ++i)
    atoms.push_back({0, a + w * rule.nodes[i], rule.weights[i] * p(rule.nodes[i])});
}

// Closed-form atoms come in strongly cancelling pairs and are summed in
// extended precision; Gauss atoms are summed in double.
double eval_atoms(const FractionalParams& params, const std::vector<Atom>& atoms, double t, bool extended) {
  if (extended) {
    long double acc = 0.0L;
    for (const Atom& at : atoms) acc += at.coef * params.omega_extended(at.offset, t - at.shift);
    return static_cast<double>(acc);
  }
  double acc = 0.0;
  for (const Atom& at : atoms)
    acc += static_cast<double>(at.coef) * params.omega(at.offset, t - static_cast<double>(at.shift));
  return acc;
}

// int_0^1 psi(t) sum(atoms)(t) dt in closed form; every shift must be <= 0.
double outer_exact(const FractionalParams& params, const Polynomial& psi, const std::vector<Atom>& atoms) {
  std::vector<long double> d1;
  std::vector<long double> d0;
  Polynomial d = psi;
  for (int l = 0; l <= psi.degree(); ++l) {
    d1.push_back(d(1.0));
    d0.push_back(d(0.0));
    d = d.derivative();
  }
  long double acc = 0.0L;
  for (const Atom& at : atoms) {
    long double sign = 1.0L;
    long double term = 0.0L;
    for (std::size_t l = 0; l < d1.size(); ++l) {
      const int off = at.offset + 1 + static_cast<int>(l);
      term += sign * (params.omega_extended(off, 1.0L - at.shift) * d1[l] -
                      params.omega_extended(off, -at.shift) * d0[l]);
      sign = -sign;
    }
    acc += at.coef * term;
  }
  return static_cast<double>(acc);
}

enum class Direction { kExact, kGauss };

struct DirectionChoice {
  Direction how;
  int points;
};

DirectionChoice choose_direction(double gap_ratio, int degree, const KernelQuadrature& quad) {
  if (gap_ratio < quad.exact_below) return {Direction::kExact, 0};
  const int points = std::max(degree + quad.margin, gauss_points_for_separation(gap_ratio, quad.digits));
  if (points > std::min(quad.max_points, kMaxGaussPoints)) return {Direction::kExact, 0};
  return {Direction::kGauss, points};
}

// Evaluates a disjoint block in coordinates scaled by the target length, with
// the target mapped to [0,1]; the caller multiplies by k_n^alpha.
HistoryBlock disjoint_block(const FractionalParams& params, const Interval& source, const Interval& target,
                            const TemporalBasis& basis, DirectionChoice inner, DirectionChoice outer) {
  if (source.right > target.left)
    throw std::invalid_argument("history block: source slab must end before the target slab starts");
  const int m = basis.degree();
  const long double kn = static_cast<long double>(target.right) - target.left;
  const long double a = (static_cast<long double>(source.left) - target.left) / kn;
  const long double b = (static_cast<long double>(source.right) - target.left) / kn;

  HistoryBlock block{Eigen::MatrixXd::Zero(m, m + 1)};
  std::vector<Atom> atoms;
  std::vector<double> inner_at_nodes;
  for (int col = 1; col <= m; ++col) {
    atoms.clear();
    const Polynomial& p = basis.trial_derivative(col);
    if (inner.how == Direction::kExact)
      append_inner_exact(p, a, b, atoms);
    else
      append_inner_gauss(p, a, b, inner.points, atoms);

    if (outer.how == Direction::kExact) {
      for (int row = 0; row < m; ++row) block.entries(row, col) = outer_exact(params, basis.test(row), atoms);
    } else {
      const QuadratureRule& rule = gauss_legendre(outer.points);
      inner_at_nodes.resize(rule.size());
      for (std::size_t k = 0; k < rule.size(); ++k) inner_at_nodes[k] = eval_atoms(params, atoms, rule.nodes[k], inner.how == Direction::kExact);
      for (int row = 0; row < m; ++row) {
        double acc = 0.0;
        for (std::size_t k = 0; k < rule.size(); ++k)
          acc += rule.weights[k] * basis.test(row)(rule.nodes[k]) * inner_at_nodes[k];
        block.entries(row, col) = acc;
      }
    }
  }
  block.entries *= static_cast<double>(std::pow(kn, static_cast<long double>(params.alpha())));
  return block;
}

}  // namespace

HistoryBlock history_block_disjoint(const FractionalParams& params, const Interval& source,
                                    const Interval& target, const TemporalBasis& basis,
                                    const KernelQuadrature& quad) {
  const double gap = target.left - source.right;
  const int m = basis.degree();
  const DirectionChoice outer = choose_direction(gap / target.length(), m, quad);
  const DirectionChoice inner = choose_direction(gap / source.length(), m, quad);
  return disjoint_block(params, source, target, basis, inner, outer);
}

HistoryBlock history_block_disjoint_exact(const FractionalParams& params, const Interval& source,
                                          const Interval& target, const TemporalBasis& basis) {
  return disjoint_block(params, source, target, basis, {Direction::kExact, 0}, {Direction::kExact, 0});
}

HistoryBlock history_block_disjoint_quadrature(const FractionalParams& params, const Interval& source,
                                               const Interval& target, const TemporalBasis& basis,
                                               int points) {
  return disjoint_block(params, source, target, basis, {Direction::kGauss, points},
                        {Direction::kGauss, points});
}

HistoryBlock history_block_local(const FractionalParams& params, const Interval& slab,
                                 const TemporalBasis& basis) {
  const int m = basis.degree();
  const double alpha = params.alpha();
  HistoryBlock block{Eigen::MatrixXd::Zero(m, m + 1)};
  // Reference slab (0,1): int_0^1 psi_b(tau) sum_i p_i I^alpha[s^i](tau) dtau
  // with I^alpha[s^i](tau) = Gamma(i+1)/Gamma(i+1+alpha) tau^(i+alpha).
  for (int col = 1; col <= m; ++col) {
    const auto p = basis.trial_derivative(col).coefficients();
    for (int row = 0; row < m; ++row) {
      const auto psi = basis.test(row).coefficients();
      double acc = 0.0;
      for (std::size_t i = 0; i < p.size(); ++i) {
        const double ratio = std::tgamma(static_cast<double>(i) + 1.0) * params.inverse_gamma(static_cast<int>(i) + 1);
        for (std::size_t j = 0; j < psi.size(); ++j)
          acc += p[i] * psi[j] * ratio / (static_cast<double>(i + j) + alpha + 1.0);
      }
      block.entries(row, col) = acc;
    }
  }
  block.entries *= std::pow(slab.length(), alpha);
  return block;
}

Eigen::VectorXd caputo_weights(const FractionalParams& params, const Interval& source, double t,
                               const TemporalBasis& basis, const KernelQuadrature& quad) {
  const int m = basis.degree();
  Eigen::VectorXd w = Eigen::VectorXd::Zero(m + 1);
  if (t <= source.left) return w;
  const double k = source.length();
  const double tau = (t - source.left) / k;
  const double scale = std::pow(k, params.alpha() - 1.0);
  if (tau < 1.0) {
    for (int col = 1; col <= m; ++col) {
      const auto p = basis.trial_derivative(col).coefficients();
      double acc = 0.0;
      for (std::size_t i = 0; i < p.size(); ++i) {
        const double ratio = std::tgamma(static_cast<double>(i) + 1.0) * params.inverse_gamma(static_cast<int>(i) + 1);
        acc += p[i] * ratio * std::pow(tau, static_cast<double>(i) + params.alpha());
      }
      w(col) = scale * acc;
    }
    return w;
  }
  const DirectionChoice how = choose_direction(tau - 1.0, m, quad);
  std::vector<Atom> atoms;
  for (int col = 1; col <= m; ++col) {
    atoms.clear();
    if (how.how == Direction::kExact)
      append_inner_exact(basis.trial_derivative(col), 0.0, 1.0, atoms);
    else
      append_inner_gauss(basis.trial_derivative(col), 0.0, 1.0, how.points, atoms);
    w(col) = scale * eval_atoms(params, atoms, tau, how.how == Direction::kExact);
  }
  return w;
}

double memory_quadratic_form(const FractionalParams& params, std::span<const Interval> slabs,
                             const TemporalBasis& basis, const Eigen::MatrixXd& coeffs,
                             const KernelQuadrature& quad) {
  const int m = basis.degree();
  if (coeffs.rows() != m + 1 || coeffs.cols() != static_cast<Eigen::Index>(slabs.size()))
    throw std::invalid_argument("memory_quadratic_form: coefficient shape mismatch");
  double total = 0.0;
  for (std::size_t i = 0; i < slabs.size(); ++i) {
    // v' on slab i expanded in the test basis: e_b = c_{b+1} / k_i.
    const Eigen::VectorXd e = coeffs.col(static_cast<Eigen::Index>(i)).tail(m) / slabs[i].length();
    Eigen::VectorXd memory = Eigen::VectorXd::Zero(m);
    for (std::size_t j = 0; j <= i; ++j) {
      const HistoryBlock block = (j == i) ? history_block_local(params, slabs[i], basis)
                                          : history_block_disjoint(params, slabs[j], slabs[i], basis, quad);
      memory += block.entries * coeffs.col(static_cast<Eigen::Index>(j));
    }
    total += e.dot(memory);
  }
  return total;
}

}  // namespace fracdpg
