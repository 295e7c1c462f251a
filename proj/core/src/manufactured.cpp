#include "fracdpg/manufactured.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace fracdpg {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kPi2 = kPi * kPi;

double sine(double x) { return std::sin(kPi * x); }

}  // namespace

ProblemSpec ManufacturedCase::problem() const {
  ProblemSpec p{params};
  p.final_time = 1.0;
  p.forcing_terms = forcing_terms;
  p.initial = initial;
  p.exact = exact;
  p.rl_forcing = rl_forcing;
  return p;
}

ManufacturedCase example1(double alpha) {
  const FractionalParams params(alpha);
  // ^cD^{1-alpha} t^(alpha+1) = Gamma(alpha+2)/Gamma(2 alpha+1) t^(2 alpha)
  const double c = std::tgamma(alpha + 2.0) / std::tgamma(2.0 * alpha + 1.0);
  const double g2 = std::tgamma(alpha + 2.0);
  ManufacturedCase mc{"example1", params};
  mc.exact = [alpha](double x, double t) { return std::pow(t, alpha + 1.0) * sine(x); };
  mc.caputo_term = [alpha, c](double x, double t) { return c * std::pow(t, 2.0 * alpha) * sine(x); };
  mc.forcing = [alpha, c](double x, double t) {
    return (c * std::pow(t, 2.0 * alpha) + kPi2 * std::pow(t, alpha + 1.0)) * sine(x);
  };
  mc.initial = [](double) { return 0.0; };
  mc.sigma = alpha + 1.0;
  mc.delta = alpha + 2.0;
  mc.forcing_terms = {{sine, c, 2.0 * alpha}, {sine, kPi2, alpha + 1.0}};
  mc.rl_forcing = [alpha, g2](double x, double t) {
    return ((alpha + 1.0) * std::pow(t, alpha) + kPi2 * g2 * t) * sine(x);
  };
  return mc;
}

ManufacturedCase example2(double alpha) {
  const FractionalParams params(alpha);
  // ^cD^{1-alpha} t^(1-alpha) = Gamma(2-alpha), constant in t.
  const double g = std::tgamma(2.0 - alpha);
  const double rl = g / std::tgamma(2.0 - 2.0 * alpha);
  ManufacturedCase mc{"example2", params};
  mc.exact = [alpha](double x, double t) { return std::pow(t, 1.0 - alpha) * sine(x); };
  mc.caputo_term = [g](double x, double) { return g * sine(x); };
  mc.forcing = [alpha, g](double x, double t) { return (g + kPi2 * std::pow(t, 1.0 - alpha)) * sine(x); };
  mc.initial = [](double) { return 0.0; };
  mc.sigma = 1.0 - alpha;
  mc.delta = 2.0 - alpha;
  mc.forcing_terms = {{sine, g, 0.0}, {sine, kPi2, 1.0 - alpha}};
  mc.rl_forcing = [alpha, rl](double x, double t) {
    return ((1.0 - alpha) * std::pow(t, -alpha) + kPi2 * rl * std::pow(t, 1.0 - 2.0 * alpha)) * sine(x);
  };
  return mc;
}

ManufacturedCase example(int id, double alpha) {
  switch (id) {
    case 1:
      return example1(alpha);
    case 2:
      return example2(alpha);
    default:
      throw std::invalid_argument("example: id must be 1 or 2");
  }
}

}  // namespace fracdpg
