#pragma once

#include "fracdpg/dpg_stepper.hpp"

#include <string>
#include <utility>
#include <vector>

namespace fracdpg {

/// Closed-form test problem on (0,1) x (0,1] with u = t^p sin(pi x).
///
/// `sigma` and `delta` are the temporal regularity exponents of u and u_xx:
/// ||d^q u / dt^q|| ~ t^(sigma - q) and ||d^q u_xx / dt^q|| ~ t^(delta - q - 2)
/// up to constants. They set the grading needed for optimal rates.
struct ManufacturedCase {
  ManufacturedCase(std::string name_, FractionalParams params_) : name(std::move(name_)), params(params_) {}

  std::string name;
  FractionalParams params;
  SpaceTimeFunction exact;
  SpaceTimeFunction forcing;
  SpaceTimeFunction caputo_term;  ///< ^cD^{1-alpha} u
  ScalarFunction initial;
  double sigma = 0.0;
  double delta = 0.0;
  std::vector<PowerTerm> forcing_terms;  ///< f split into separable power terms
  SpaceTimeFunction rl_forcing;          ///< ^RD^alpha f

  /// Problem with the forcing given as separable power terms (exact
  /// first-slab moments) and the closed-form ^RD^alpha f attached.
  ProblemSpec problem() const;
};

/// u = t^(alpha+1) sin(pi x).
ManufacturedCase example1(double alpha);
/// u = t^(1-alpha) sin(pi x).
ManufacturedCase example2(double alpha);
/// Dispatches on 1 or 2; throws std::invalid_argument otherwise.
ManufacturedCase example(int id, double alpha);

}  // namespace fracdpg
