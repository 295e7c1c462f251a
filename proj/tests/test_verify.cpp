#include "fracdpg/verify.hpp"

#include <gtest/gtest.h>

using namespace fracdpg;

TEST(Verify, IndividualChecksPass) {
  EXPECT_TRUE(check_semigroup(1).passed);
  EXPECT_TRUE(check_coercivity(2, 100).passed);
  EXPECT_TRUE(check_mesh_bounds_suite().passed);
  EXPECT_TRUE(check_ritz_idempotence(3).passed);
  EXPECT_TRUE(check_polynomial_exactness(4).passed);
  EXPECT_TRUE(check_zero_data().passed);
  EXPECT_TRUE(check_stability(1, 1).passed);
  EXPECT_TRUE(check_stability(2, 2).passed);
}

TEST(Verify, FullSuiteReport) {
  const VerifyReport report = verify({99, 300});
  EXPECT_TRUE(report.passed()) << report.to_text();
  EXPECT_EQ(report.checks.size(), 10u);
  EXPECT_EQ(report.to_text().rfind("PASS kernel_semigroup", 0), 0u);
}

TEST(Verify, ReportFlagsFailures) {
  VerifyReport report;
  report.checks.push_back({"ok", true, ""});
  report.checks.push_back({"broken", false, "detail"});
  EXPECT_FALSE(report.passed());
  EXPECT_NE(report.to_text().find("FAIL broken: detail"), std::string::npos);
}
