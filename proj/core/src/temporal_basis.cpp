#include "fracdpg/temporal_basis.hpp"

#include <stdexcept>

namespace fracdpg {

TemporalBasis::TemporalBasis(int degree) : degree_(degree) {
  if (degree < 1 || degree > kMaxDegree)
    throw std::invalid_argument("TemporalBasis: degree must lie in [1, 6]");
  for (int b = 0; b < degree; ++b) test_.push_back(Polynomial::shifted_legendre(b));
  trial_.push_back(Polynomial::constant(1.0));
  trial_deriv_.emplace_back();
  for (int a = 1; a <= degree; ++a) {
    trial_.push_back(test_[static_cast<std::size_t>(a - 1)].antiderivative());
    trial_deriv_.push_back(test_[static_cast<std::size_t>(a - 1)]);
  }
  gram_.resize(degree, degree + 1);
  for (int b = 0; b < degree; ++b)
    for (int a = 0; a <= degree; ++a) gram_(b, a) = (trial(a) * test(b)).integral01();
}

Eigen::VectorXd TemporalBasis::trial_values(double tau) const {
  Eigen::VectorXd v(trial_count());
  v(0) = 1.0;
  for (int a = 1; a <= degree_; ++a) {
    if (tau == 0.0) {
      v(a) = 0.0;
    } else if (tau == 1.0) {
      v(a) = (a == 1) ? 1.0 : 0.0;
    } else {
      v(a) = trial(a)(tau);
    }
  }
  return v;
}

}  // namespace fracdpg
