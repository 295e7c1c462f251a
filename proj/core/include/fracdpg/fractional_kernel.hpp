#pragma once

#include "fracdpg/temporal_basis.hpp"

#include <Eigen/Dense>

#include <array>
#include <span>

namespace fracdpg {

/// Fractional order alpha in (0,1) of the memory operator, together with the
/// coercivity constant c_alpha = cos(alpha*pi/2) and cached reciprocal Gamma
/// values for the kernel family omega_{alpha+i}.
class FractionalParams {
 public:
  static constexpr int kMaxOffset = 31;

  explicit FractionalParams(double alpha);

  double alpha() const { return alpha_; }
  double c_alpha() const { return c_alpha_; }

  /// omega_{alpha+offset}(t) = t^(alpha+offset-1) / Gamma(alpha+offset), for
  /// t >= 0. At t = 0 the value is 0 whenever alpha + offset > 1.
  double omega(int offset, double t) const;

  /// omega in extended precision, for the closed-form block formulas whose
  /// alternating sums cancel strongly.
  long double omega_extended(int offset, long double t) const;

  /// 1 / Gamma(alpha + offset).
  double inverse_gamma(int offset) const { return inv_gamma_[static_cast<std::size_t>(offset)]; }

 private:
  double alpha_;
  double c_alpha_;
  std::array<double, kMaxOffset + 1> inv_gamma_{};
  std::array<long double, kMaxOffset + 1> inv_gamma_ext_{};
};

/// Open time interval (left, right) with left < right.
struct Interval {
  Interval(double left, double right);

  double left;
  double right;

  double length() const { return right - left; }
};

/// Memory coupling between a source slab I_j and a target slab I_n:
/// entries(b, a) = int_{I_n} psi_b(t) int_{I_j} omega_alpha(t-s) phi_a'(s) ds dt,
/// an m x (m+1) matrix. For the self-coupling block (I_j = I_n) the inner
/// integral runs over (t_{n-1}, t) only.
struct HistoryBlock {
  Eigen::MatrixXd entries;

  int rows() const { return static_cast<int>(entries.rows()); }
  int cols() const { return static_cast<int>(entries.cols()); }
  double operator()(int b, int a) const { return entries(b, a); }
};

/// Controls the evaluation of disjoint history blocks. Each integration
/// direction is either done in closed form (when the gap between the slabs
/// is small relative to that direction's slab length) or by Gauss-Legendre
/// with a point count chosen from the gap.
struct KernelQuadrature {
  double exact_below = 0.5;  ///< closed form when gap / length < exact_below
  int margin = 4;            ///< Gauss points are never fewer than m + margin
  int max_points = 48;       ///< beyond this the closed form is used instead
  double digits = 17.0;      ///< target accuracy of the Gauss-Legendre rules
};

/// omega_mu(t) = t^(mu-1) / Gamma(mu). Throws std::domain_error unless mu > 0, t > 0.
double weight(double mu, double t);

/// Riemann-Liouville integral of order alpha of s^p evaluated at t:
/// Gamma(p+1)/Gamma(p+1+alpha) * t^(p+alpha). Requires p > -1, t > 0 and
/// 0 < alpha <= 2.
double frac_integral_monomial(double alpha, double p, double t);

/// Disjoint block (source entirely before target), evaluated with the
/// per-direction closed form / Gauss-Legendre selection of `quad`.
HistoryBlock history_block_disjoint(const FractionalParams& params, const Interval& source,
                                    const Interval& target, const TemporalBasis& basis,
                                    const KernelQuadrature& quad = {});

/// Disjoint block in closed form in both directions, via repeated integration
/// by parts against the antiderivatives omega_{alpha+1}, omega_{alpha+2}, ...
HistoryBlock history_block_disjoint_exact(const FractionalParams& params, const Interval& source,
                                          const Interval& target, const TemporalBasis& basis);

/// Disjoint block by tensor Gauss-Legendre quadrature with `points` nodes per
/// direction. Accurate only when the slabs are separated by a gap.
HistoryBlock history_block_disjoint_quadrature(const FractionalParams& params, const Interval& source,
                                               const Interval& target, const TemporalBasis& basis,
                                               int points);

/// Self-coupling block of a slab. The weakly singular inner integral is
/// evaluated exactly with the monomial rule; the result scales like k^alpha.
HistoryBlock history_block_local(const FractionalParams& params, const Interval& slab,
                                 const TemporalBasis& basis);

/// w_a = int_{I_j, s < t} omega_alpha(t-s) phi_a'(s) ds for every trial
/// function of the source slab; zero when t <= source.left.
Eigen::VectorXd caputo_weights(const FractionalParams& params, const Interval& source, double t,
                               const TemporalBasis& basis, const KernelQuadrature& quad = {});

/// Discrete memory form int_0^{t_n} (D^{1-alpha} v) v' dt for a scalar
/// piecewise polynomial v over consecutive slabs; column j of `coeffs` holds
/// the m+1 trial coefficients on slab j.
double memory_quadratic_form(const FractionalParams& params, std::span<const Interval> slabs,
                             const TemporalBasis& basis, const Eigen::MatrixXd& coeffs,
                             const KernelQuadrature& quad = {});

}  // namespace fracdpg
