#include "fracdpg/time_mesh.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace fracdpg {

TimeMesh TimeMesh::graded(double gamma, int slab_count, double final_time) {
  if (!(gamma >= 1.0)) throw std::invalid_argument("TimeMesh: grading exponent must be >= 1");
  if (slab_count < 1) throw std::invalid_argument("TimeMesh: need at least one slab");
  if (!(final_time > 0.0)) throw std::invalid_argument("TimeMesh: final time must be positive");
  const double k = std::pow(final_time, 1.0 / gamma) / slab_count;
  std::vector<double> pts(static_cast<std::size_t>(slab_count) + 1);
  pts[0] = 0.0;
  for (int n = 1; n < slab_count; ++n) pts[static_cast<std::size_t>(n)] = std::pow(n * k, gamma);
  pts.back() = final_time;
  return TimeMesh(std::move(pts), gamma, k);
}

Interval TimeMesh::slab(int n) const {
  if (n < 1 || n > slab_count()) throw std::out_of_range("TimeMesh::slab: index out of range");
  return {points_[static_cast<std::size_t>(n - 1)], points_[static_cast<std::size_t>(n)]};
}

bool MeshBoundsReport::all_passed() const {
  return steps_nondecreasing &&
         std::all_of(checks.begin(), checks.end(), [](const MeshBoundCheck& c) { return c.passed(); });
}

std::string MeshBoundsReport::summary() const {
  std::ostringstream os;
  const auto failed = std::count_if(checks.begin(), checks.end(), [](const MeshBoundCheck& c) { return !c.passed(); });
  os << checks.size() << " slab checks, " << failed << " failed";
  if (!steps_nondecreasing) os << ", steps not monotone";
  return os.str();
}

MeshBoundsReport check_mesh_bounds(const TimeMesh& mesh, double slack) {
  MeshBoundsReport report;
  const double g = mesh.gamma();
  const double k = mesh.base_step();
  const auto t = mesh.points();
  for (int n = 2; n <= mesh.slab_count(); ++n)
    if (mesh.step(n) < mesh.step(n - 1) * (1.0 - slack)) report.steps_nondecreasing = false;
  for (int n = 2; n <= mesh.slab_count(); ++n) {
    const double tn = t[static_cast<std::size_t>(n)];
    const double tn1 = t[static_cast<std::size_t>(n - 1)];
    const double kn = mesh.step(n);
    const double scale = k * std::pow(tn, 1.0 - 1.0 / g);
    MeshBoundCheck c{n, false, false, false};
    c.growth_ok = tn <= std::pow(2.0, g) * tn1 * (1.0 + slack);
    c.lower_ok = g / std::pow(2.0, g - 1.0) * scale <= kn * (1.0 + slack);
    c.upper_ok = kn <= g * scale * (1.0 + slack);
    report.checks.push_back(c);
  }
  return report;
}

}  // namespace fracdpg
