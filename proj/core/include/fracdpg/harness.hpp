#pragma once

#include "fracdpg/dpg_stepper.hpp"
#include "fracdpg/manufactured.hpp"

#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace fracdpg {

/// Union over all slabs of the q+1 equispaced points t_{j-1} + n k_j / q,
/// shared knots counted once; N q + 1 increasing points from 0 to T.
std::vector<double> fine_grid(const TimeMesh& mesh, int q);

/// max over the fine grid of ||U_h(t) - u(t)||_{L2(0,1)}.
double error_norm(const Trajectory& trajectory, const SpaceTimeFunction& exact, int q = 10);
double error_norm(const Trajectory& trajectory, const ManufacturedCase& mc, int q = 10);

/// rate_i = log(e_{i-1}/e_i) / log(res_i/res_{i-1}), i = 1..n-1.
/// Throws std::invalid_argument for fewer than two entries, mismatched sizes
/// or non-positive errors.
std::vector<double> eoc(std::span<const double> errors, std::span<const double> resolutions);

struct ConvergenceRow {
  int resolution = 0;
  double error = 0.0;
  std::optional<double> eoc;
};

/// Observed temporal rate against the proven and optimal orders.
struct TheoryComparison {
  double proven_order = 0.0;      ///< m + alpha/2
  double optimal_order = 0.0;     ///< m + 1
  double expected_order = 0.0;    ///< min(gamma sigma, m + 1)
  double grading_threshold = 0.0; ///< (m + 1) / sigma, the grading needed in practice
  double proven_threshold = 0.0;  ///< grading assumed by the error bound
  bool strongly_graded = false;   ///< gamma >= grading_threshold
  double final_eoc = 0.0;
  bool reaches_optimal = false;   ///< |final_eoc - (m+1)| <= 0.15
  bool exceeds_proven = false;    ///< final_eoc > m + alpha/2
};

struct ConvergenceReport {
  std::vector<std::pair<std::string, std::string>> metadata;
  std::vector<ConvergenceRow> rows;
  std::optional<TheoryComparison> theory;

  /// Metadata as "# key=value" lines, then "resolution,error,eoc" rows.
  std::string to_csv() const;
  /// Whitespace-delimited "resolution error" columns for log-log plotting.
  std::string to_plot_data() const;
  /// Writes the CSV to `path` and the plot data next to it (extension .dat).
  void write(const std::string& path) const;
};

struct SolveConfig {
  double gamma = 1.0;
  int m = 1;
  int N = 10;
  int r = 4;
  int Nx = 40;
  int q = 10;
  QuadConfig quad;
};

/// Solves one configuration and returns the fine-grid error.
double solve_error(const ManufacturedCase& mc, const SolveConfig& config);

struct TimeStudyConfig {
  double gamma = 1.0;
  int m = 1;
  std::vector<int> N;
  int r = 4;
  int Nx = 40;
  int q = 10;
  QuadConfig quad;
};

struct SpaceStudyConfig {
  int r = 1;
  std::vector<int> Nx;
  int m = 4;
  double gamma = 4.0;
  int N = 60;
  int q = 10;
  QuadConfig quad;
};

/// Temporal refinement study. Errors from the solver are rethrown as
/// std::runtime_error naming the failing N.
ConvergenceReport study_time(const ManufacturedCase& mc, const TimeStudyConfig& config);
ConvergenceReport study_space(const ManufacturedCase& mc, const SpaceStudyConfig& config);

TheoryComparison compare_with_theory(const ManufacturedCase& mc, double gamma, int m, double final_eoc);

}  // namespace fracdpg
