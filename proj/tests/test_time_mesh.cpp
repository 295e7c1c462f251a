#include "fracdpg/time_mesh.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <numeric>

using fracdpg::TimeMesh;

TEST(TimeMesh, UniformMesh) {
  const TimeMesh mesh = TimeMesh::graded(1.0, 4, 1.0);
  const std::vector<double> expected{0.0, 0.25, 0.5, 0.75, 1.0};
  ASSERT_EQ(mesh.points().size(), expected.size());
  for (std::size_t i = 0; i < expected.size(); ++i) EXPECT_DOUBLE_EQ(mesh.points()[i], expected[i]);
  EXPECT_EQ(mesh.slab_count(), 4);
  EXPECT_DOUBLE_EQ(mesh.base_step(), 0.25);
}

TEST(TimeMesh, QuadraticGrading) {
  const TimeMesh mesh = TimeMesh::graded(2.0, 2, 1.0);
  EXPECT_DOUBLE_EQ(mesh.points()[1], 0.25);
  EXPECT_EQ(mesh.points()[2], 1.0);
  EXPECT_DOUBLE_EQ(mesh.slab(2).left, 0.25);
  EXPECT_DOUBLE_EQ(mesh.step(2), 0.75);
}

TEST(TimeMesh, EndpointsExactAndStepsSum) {
  for (double gamma : {1.0, 1.8, 3.3, 4.2})
    for (double T : {0.5, 1.0, 3.0}) {
      const TimeMesh mesh = TimeMesh::graded(gamma, 37, T);
      EXPECT_EQ(mesh.points().front(), 0.0);
      EXPECT_EQ(mesh.points().back(), T);
      double sum = 0.0;
      for (int n = 1; n <= mesh.slab_count(); ++n) {
        EXPECT_GT(mesh.step(n), 0.0);
        sum += mesh.step(n);
      }
      EXPECT_NEAR(sum, T, 1e-14 * T);
    }
}

TEST(TimeMesh, RejectsBadParameters) {
  EXPECT_THROW(TimeMesh::graded(0.9, 4, 1.0), std::invalid_argument);
  EXPECT_THROW(TimeMesh::graded(2.0, 0, 1.0), std::invalid_argument);
  EXPECT_THROW(TimeMesh::graded(2.0, 4, 0.0), std::invalid_argument);
  EXPECT_THROW(TimeMesh::graded(2.0, 4, 1.0).slab(5), std::out_of_range);
  EXPECT_THROW(TimeMesh::graded(2.0, 4, 1.0).slab(0), std::out_of_range);
}

TEST(MeshBounds, UniformCollapses) {
  const auto report = check_mesh_bounds(TimeMesh::graded(1.0, 10, 1.0));
  EXPECT_TRUE(report.all_passed()) << report.summary();
  EXPECT_EQ(report.checks.size(), 9u);
}

TEST(MeshBounds, GrowthBoundAttainedWithEquality) {
  const TimeMesh mesh = TimeMesh::graded(2.0, 4, 1.0);
  EXPECT_DOUBLE_EQ(mesh.points()[2] / mesh.points()[1], 4.0);
  EXPECT_TRUE(check_mesh_bounds(mesh).all_passed());
}

TEST(MeshBounds, Gamma35N40) {
  const auto report = check_mesh_bounds(TimeMesh::graded(3.5, 40, 1.0));
  EXPECT_EQ(report.checks.size(), 39u);
  EXPECT_TRUE(report.all_passed()) << report.summary();
}

TEST(MeshBounds, AllGradingsAndSizes) {
  for (double gamma : {1.0, 1.4, 1.8, 2.0, 2.5, 3.0, 3.5, 4.2})
    for (int n : {10, 20, 40, 160}) {
      const auto report = check_mesh_bounds(TimeMesh::graded(gamma, n, 1.0));
      EXPECT_TRUE(report.all_passed()) << "gamma=" << gamma << " N=" << n << ": " << report.summary();
      EXPECT_TRUE(report.steps_nondecreasing);
    }
}

TEST(MeshBounds, IndependentRecomputation) {
  // Recompute the inequalities directly from (n k)^gamma without the mesh object.
  const double gamma = 1.8;
  const int N = 20;
  const double k = 1.0 / N;
  for (int n = 2; n <= N; ++n) {
    const double tn = std::pow(n * k, gamma);
    const double tn1 = std::pow((n - 1) * k, gamma);
    const double kn = tn - tn1;
    EXPECT_LE(tn, std::pow(2.0, gamma) * tn1);
    EXPECT_LE(gamma / std::pow(2.0, gamma - 1.0) * k * std::pow(tn, 1.0 - 1.0 / gamma), kn);
    EXPECT_LE(kn, gamma * k * std::pow(tn, 1.0 - 1.0 / gamma));
  }
}
