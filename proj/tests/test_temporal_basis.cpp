#include "fracdpg/temporal_basis.hpp"

#include <boost/math/quadrature/gauss.hpp>
#include <gtest/gtest.h>

using fracdpg::TemporalBasis;

TEST(TemporalBasis, EndpointValues) {
  for (int m = 1; m <= TemporalBasis::kMaxDegree; ++m) {
    const TemporalBasis basis(m);
    EXPECT_EQ(basis.trial_count(), m + 1);
    EXPECT_EQ(basis.test_count(), m);
    for (int a = 1; a <= m; ++a) {
      EXPECT_NEAR(basis.trial(a)(0.0), 0.0, 1e-15);
      EXPECT_NEAR(basis.trial(a)(1.0), a == 1 ? 1.0 : 0.0, 1e-13);
    }
    const Eigen::VectorXd left = basis.trial_values(0.0);
    const Eigen::VectorXd right = basis.trial_values(1.0);
    EXPECT_EQ(left(0), 1.0);
    EXPECT_EQ(right(1), 1.0);
    for (int a = 2; a <= m; ++a) EXPECT_EQ(right(a), 0.0);
  }
}

TEST(TemporalBasis, TrialDerivativeIsPreviousTestFunction) {
  const TemporalBasis basis(4);
  EXPECT_EQ(basis.trial_derivative(0)(0.4), 0.0);
  for (int a = 1; a <= 4; ++a)
    for (double x : {0.1, 0.6, 0.95})
      EXPECT_NEAR(basis.trial_derivative(a)(x), basis.test(a - 1)(x), 1e-14);
}

TEST(TemporalBasis, GramMatchesGaussOracle) {
  const TemporalBasis basis(5);
  for (int b = 0; b < 5; ++b)
    for (int a = 0; a <= 5; ++a) {
      const double ref = boost::math::quadrature::gauss<double, 10>::integrate(
          [&](double x) { return basis.trial(a)(x) * basis.test(b)(x); }, 0.0, 1.0);
      EXPECT_NEAR(basis.gram()(b, a), ref, 1e-12);
    }
}

TEST(TemporalBasis, GramFirstColumnsForDegreeOne) {
  const TemporalBasis basis(1);
  EXPECT_DOUBLE_EQ(basis.gram()(0, 0), 1.0);
  EXPECT_DOUBLE_EQ(basis.gram()(0, 1), 0.5);
}

TEST(TemporalBasis, RejectsUnsupportedDegrees) {
  EXPECT_THROW(TemporalBasis(0), std::invalid_argument);
  EXPECT_THROW(TemporalBasis(7), std::invalid_argument);
}
