#pragma once

#include "fracdpg/fractional_kernel.hpp"

#include <span>
#include <string>
#include <vector>

namespace fracdpg {

/// Graded partition 0 = t_0 < t_1 < ... < t_N = T with t_n = (n k)^gamma and
/// k = T^(1/gamma) / N. Steps are nondecreasing; gamma = 1 is uniform.
class TimeMesh {
 public:
  /// Throws std::invalid_argument for gamma < 1, N < 1 or T <= 0.
  static TimeMesh graded(double gamma, int slab_count, double final_time);

  std::span<const double> points() const { return points_; }
  double gamma() const { return gamma_; }
  double final_time() const { return points_.back(); }
  int slab_count() const { return static_cast<int>(points_.size()) - 1; }
  /// Base step k = T^(1/gamma) / N.
  double base_step() const { return base_step_; }

  /// Slab I_n = (t_{n-1}, t_n) for 1 <= n <= N.
  Interval slab(int n) const;
  double step(int n) const { return points_[static_cast<std::size_t>(n)] - points_[static_cast<std::size_t>(n - 1)]; }

 private:
  TimeMesh(std::vector<double> points, double gamma, double base_step)
      : points_(std::move(points)), gamma_(gamma), base_step_(base_step) {}

  std::vector<double> points_;
  double gamma_;
  double base_step_;
};

struct MeshBoundCheck {
  int n;
  bool growth_ok;  ///< t_n <= 2^gamma t_{n-1}
  bool lower_ok;   ///< gamma / 2^(gamma-1) k t_n^(1-1/gamma) <= k_n
  bool upper_ok;   ///< k_n <= gamma k t_n^(1-1/gamma)

  bool passed() const { return growth_ok && lower_ok && upper_ok; }
};

struct MeshBoundsReport {
  bool steps_nondecreasing = true;
  std::vector<MeshBoundCheck> checks;  ///< one entry per n = 2..N

  bool all_passed() const;
  std::string summary() const;
};

/// Checks the graded-mesh step inequalities for n = 2..N with relative slack
/// `slack` for roundoff.
MeshBoundsReport check_mesh_bounds(const TimeMesh& mesh, double slack = 1e-12);

}  // namespace fracdpg
