#pragma once

// Brute-force reference values built on Boost quadrature, independent of the
// closed forms and rules used inside the library.

#include "fracdpg/fractional_kernel.hpp"
#include "fracdpg/temporal_basis.hpp"

#include <boost/math/quadrature/tanh_sinh.hpp>
#include <boost/math/special_functions/gamma.hpp>

#include <Eigen/Dense>

#include <cmath>

namespace oracle {

inline double omega(double alpha, double t) { return std::pow(t, alpha - 1.0) / boost::math::tgamma(alpha); }

inline constexpr double kTolerance = 1e-14;

inline boost::math::quadrature::tanh_sinh<double>& integrator() {
  static boost::math::quadrature::tanh_sinh<double> ts(10);
  return ts;
}

// int_{lo}^{hi} omega_alpha(t - s) g(s) ds with hi <= t, via s = t - u.
template <class G>
double kernel_integral(double alpha, double t, double lo, double hi, G g) {
  auto& ts = integrator();
  const double ulo = t - hi;
  const double uhi = t - lo;
  if (uhi <= ulo) return 0.0;
  // The complement argument gives the exact distance to the nearer endpoint,
  // so both u and s = t - u keep full relative precision near zero.
  return ts.integrate(
      [&](double u, double uc) {
        if (uc < 0.0) return omega(alpha, ulo - uc) * g(t - (ulo - uc));
        return omega(alpha, u) * g(lo + uc);
      },
      ulo, uhi, kTolerance);
}

// History block entries by nested tanh-sinh quadrature.
inline Eigen::MatrixXd history_block(double alpha, const fracdpg::Interval& source, const fracdpg::Interval& target,
                                     const fracdpg::TemporalBasis& basis) {
  auto& ts = integrator();
  const int m = basis.degree();
  const bool local = source.left == target.left;
  Eigen::MatrixXd out = Eigen::MatrixXd::Zero(m, m + 1);
  for (int a = 1; a <= m; ++a) {
    auto dphi = [&](double s) { return basis.trial_derivative(a)((s - source.left) / source.length()) / source.length(); };
    for (int b = 0; b < m; ++b) {
      auto outer = [&](double t) {
        const double hi = local ? t : source.right;
        return basis.test(b)((t - target.left) / target.length()) * kernel_integral(alpha, t, source.left, hi, dphi);
      };
      out(b, a) = ts.integrate(outer, target.left, target.right, kTolerance);
    }
  }
  return out;
}

}  // namespace oracle
