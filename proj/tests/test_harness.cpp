#include "fracdpg/harness.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

using namespace fracdpg;

TEST(FineGrid, MidpointsOfTwoSlabs) {
  const TimeMesh mesh = TimeMesh::graded(2.0, 2, 1.0);
  const std::vector<double> g = fine_grid(mesh, 2);
  const std::vector<double> expected{0.0, 0.125, 0.25, 0.625, 1.0};
  ASSERT_EQ(g.size(), expected.size());
  for (std::size_t i = 0; i < g.size(); ++i) EXPECT_DOUBLE_EQ(g[i], expected[i]);
}

TEST(FineGrid, QEqualsOneGivesKnots) {
  const TimeMesh mesh = TimeMesh::graded(1.7, 6, 1.0);
  const std::vector<double> g = fine_grid(mesh, 1);
  ASSERT_EQ(g.size(), 7u);
  for (std::size_t i = 0; i < g.size(); ++i) EXPECT_EQ(g[i], mesh.points()[i]);
}

TEST(FineGrid, SizeOrderAndCoverage) {
  const std::vector<double> g = fine_grid(TimeMesh::graded(2.0, 5, 1.0), 10);
  ASSERT_EQ(g.size(), 51u);
  for (std::size_t i = 1; i < g.size(); ++i) EXPECT_LT(g[i - 1], g[i]);
  EXPECT_EQ(g.front(), 0.0);
  EXPECT_EQ(g.back(), 1.0);
  EXPECT_THROW(fine_grid(TimeMesh::graded(2.0, 5, 1.0), 0), std::invalid_argument);
}

TEST(ErrorNorm, ExactDiscreteFunctionGivesZero) {
  const FESpace space(5, 2);
  const TimeMesh mesh = TimeMesh::graded(1.5, 4, 1.0);
  const Eigen::VectorXd phi = Eigen::VectorXd::LinSpaced(space.dof_count(), -1.0, 2.0);
  Trajectory traj{mesh, space, TemporalBasis(1), {}};
  for (int n = 1; n <= 4; ++n) {
    const Interval s = mesh.slab(n);
    Eigen::MatrixXd c(space.dof_count(), 2);
    c.col(0) = s.left * phi;
    c.col(1) = s.length() * phi;
    traj.slabs.push_back({s, c});
  }
  const double err = error_norm(traj, [&](double x, double t) { return t * evaluate(space, phi, x); });
  EXPECT_LT(err, 1e-14);
}

TEST(Eoc, KnownRates) {
  const std::vector<double> e1{9.83e-4, 4.45e-4};
  const std::vector<double> n1{20, 40};
  EXPECT_NEAR(eoc(e1, n1)[0], 1.14, 5e-3);
  const std::vector<double> e2{1.0, 1.0 / 8.0};
  const std::vector<double> n2{10, 20};
  EXPECT_NEAR(eoc(e2, n2)[0], 3.0, 1e-14);
  const std::vector<double> e3{1.576e-4, 1.796e-5};
  EXPECT_NEAR(eoc(e3, n2)[0], 3.13, 5e-3);
}

TEST(Eoc, RejectsBadInput) {
  const std::vector<double> one{1.0};
  const std::vector<double> zero{1.0, 0.0};
  const std::vector<double> negative{-1.0, 0.5};
  const std::vector<double> res{1, 2};
  EXPECT_THROW(eoc(one, one), std::invalid_argument);
  EXPECT_THROW(eoc(zero, res), std::invalid_argument);
  EXPECT_THROW(eoc(negative, res), std::invalid_argument);
  EXPECT_THROW(eoc(res, one), std::invalid_argument);
}

TEST(Report, CsvLayout) {
  ConvergenceReport report;
  report.metadata = {{"alpha", "0.2"}, {"m", "1"}};
  report.rows = {{20, 1.5e-3, std::nullopt}, {40, 3.75e-4, 2.0}};
  EXPECT_EQ(report.to_csv(),
            "# alpha=0.2\n# m=1\nresolution,error,eoc\n20,1.500000e-03,\n40,3.750000e-04,2.0000\n");
  EXPECT_EQ(report.to_plot_data(), "# resolution error\n20 1.500000e-03\n40 3.750000e-04\n");
}

TEST(Report, WriteCreatesCsvAndPlotData) {
  ConvergenceReport report;
  report.rows = {{10, 1.0, std::nullopt}};
  const auto dir = std::filesystem::temp_directory_path() / "fracdpg_report_test";
  std::filesystem::create_directories(dir);
  report.write((dir / "study.csv").string());
  EXPECT_TRUE(std::filesystem::exists(dir / "study.csv"));
  EXPECT_TRUE(std::filesystem::exists(dir / "study.dat"));
  std::filesystem::remove_all(dir);
}

TEST(StudyTime, RatesAndTheoryFlags) {
  TimeStudyConfig cfg;
  cfg.gamma = 3.0;
  cfg.m = 1;
  cfg.N = {10, 20, 40};
  cfg.r = 3;
  cfg.Nx = 20;
  const ConvergenceReport report = study_time(example2(0.3), cfg);
  ASSERT_EQ(report.rows.size(), 3u);
  EXPECT_FALSE(report.rows[0].eoc.has_value());
  EXPECT_NEAR(*report.rows[2].eoc, 2.0, 0.15);
  ASSERT_TRUE(report.theory.has_value());
  EXPECT_TRUE(report.theory->strongly_graded);
  EXPECT_TRUE(report.theory->exceeds_proven);
  EXPECT_NEAR(report.theory->proven_order, 1.15, 1e-12);
  EXPECT_NEAR(report.theory->grading_threshold, 2.0 / 0.7, 1e-12);
  EXPECT_NE(report.to_csv().find("# exceeds_proven_order=yes"), std::string::npos);
  EXPECT_EQ(report.to_csv(), study_time(example2(0.3), cfg).to_csv());
}

TEST(StudyTime, FailingConfigurationIsNamed) {
  TimeStudyConfig cfg;
  cfg.N = {4, 0};
  cfg.r = 1;
  cfg.Nx = 4;
  try {
    study_time(example1(0.5), cfg);
    FAIL() << "expected an exception";
  } catch (const std::runtime_error& e) {
    EXPECT_NE(std::string(e.what()).find("N=0"), std::string::npos);
  }
}

TEST(StudySpace, LinearElementsConvergeAtOrderTwo) {
  SpaceStudyConfig cfg;
  cfg.r = 1;
  cfg.Nx = {10, 20};
  cfg.N = 20;
  const ConvergenceReport report = study_space(example1(0.5), cfg);
  EXPECT_NEAR(*report.rows[1].eoc, 2.0, 0.1);
  EXPECT_GT(report.rows[0].error, 5.638e-3 / 2.0);
  EXPECT_LT(report.rows[0].error, 5.638e-3 * 2.0);
  EXPECT_FALSE(report.theory.has_value());
}

TEST(Theory, ComparisonThresholds) {
  const TheoryComparison c = compare_with_theory(example1(0.2), 2.5, 2, 3.05);
  EXPECT_NEAR(c.grading_threshold, 2.5, 1e-12);
  EXPECT_TRUE(c.strongly_graded);
  EXPECT_TRUE(c.reaches_optimal);
  EXPECT_TRUE(c.exceeds_proven);
  EXPECT_NEAR(c.expected_order, 3.0, 1e-12);
  const TheoryComparison weak = compare_with_theory(example1(0.2), 1.0, 1, 1.17);
  EXPECT_FALSE(weak.strongly_graded);
  EXPECT_FALSE(weak.reaches_optimal);
  EXPECT_NEAR(weak.expected_order, 1.2, 1e-12);
}
