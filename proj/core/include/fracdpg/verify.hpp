#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace fracdpg {

struct VerifyConfig {
  std::uint64_t seed = 20231;
  int trials = 1000;  ///< random draws for the coercivity sampling
};

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct VerifyReport {
  std::vector<CheckResult> checks;

  bool passed() const;
  /// One "PASS|FAIL name: detail" line per check.
  std::string to_text() const;
};

/// Runs the invariant suite: kernel semigroup, discrete coercivity, mesh
/// bounds, Ritz idempotence, polynomial exactness, zero data and the
/// stability inequality on both manufactured cases.
VerifyReport verify(const VerifyConfig& config = {});

// Individual checks, also used by the tests.
CheckResult check_semigroup(std::uint64_t seed, int samples = 200);
CheckResult check_coercivity(std::uint64_t seed, int trials);
CheckResult check_mesh_bounds_suite();
CheckResult check_ritz_idempotence(std::uint64_t seed);
CheckResult check_polynomial_exactness(std::uint64_t seed, int cases = 12);
CheckResult check_zero_data();
CheckResult check_stability(int example_id, int m);

}  // namespace fracdpg
