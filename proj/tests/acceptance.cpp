// Acceptance runner: one PASS/FAIL line per criterion, nonzero exit on failure.
#include "fracdpg/harness.hpp"
#include "fracdpg/manufactured.hpp"
#include "fracdpg/verify.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>
#include <string>
#include <vector>

using namespace fracdpg;

namespace {

int failures = 0;

void report(const std::string& id, bool ok, const std::string& detail) {
  std::printf("%s criterion %s: %s\n", ok ? "PASS" : "FAIL", id.c_str(), detail.c_str());
  std::fflush(stdout);
  if (!ok) ++failures;
}

std::string rates(const ConvergenceReport& r) {
  std::ostringstream os;
  os.precision(4);
  for (const ConvergenceRow& row : r.rows)
    if (row.eoc) os << ' ' << *row.eoc;
  return os.str();
}

// Checks EOC rows from index `first` (1-based row of the rate) onward.
bool rates_within(const ConvergenceReport& r, double lo, double hi, std::size_t first = 1) {
  for (std::size_t i = first; i < r.rows.size(); ++i)
    if (!r.rows[i].eoc || *r.rows[i].eoc < lo || *r.rows[i].eoc > hi) return false;
  return true;
}

bool errors_within_factor(const ConvergenceReport& r, const std::vector<double>& table, double factor) {
  if (r.rows.size() != table.size()) return false;
  for (std::size_t i = 0; i < table.size(); ++i) {
    const double ratio = r.rows[i].error / table[i];
    if (ratio > factor || ratio < 1.0 / factor) return false;
  }
  return true;
}

ConvergenceReport time_study(const ManufacturedCase& mc, double gamma, int m, std::vector<int> n) {
  TimeStudyConfig cfg;
  cfg.gamma = gamma;
  cfg.m = m;
  cfg.N = std::move(n);
  return study_time(mc, cfg);
}

ConvergenceReport space_study(int r) {
  SpaceStudyConfig cfg;
  cfg.r = r;
  cfg.Nx = {10, 20, 30, 40};
  return study_space(example1(0.5), cfg);
}

void theory_check(const std::string& id, const std::string& label, const ConvergenceReport& r) {
  const TheoryComparison& t = *r.theory;
  const std::string csv = r.to_csv();
  const bool flagged = csv.find("# reaches_optimal_order=yes") != std::string::npos &&
                       csv.find("# exceeds_proven_order=yes") != std::string::npos;
  std::ostringstream os;
  os.precision(4);
  os << label << " final EOC " << t.final_eoc << " vs optimal " << t.optimal_order << ", proven " << t.proven_order;
  report(id, t.strongly_graded && t.reaches_optimal && t.exceeds_proven && flagged, os.str());
}

}  // namespace

int main() {
  // Criterion 1: alpha = 0.2, Example 1.
  const ManufacturedCase ex1 = example1(0.2);
  const ConvergenceReport t1a = time_study(ex1, 1.8, 1, {20, 40, 80, 160});
  report("1a", rates_within(t1a, 1.85, 2.15, 2) && errors_within_factor(t1a, {2.67e-4, 6.66e-5, 1.66e-5, 4.01e-6}, 3.0),
         "m=1 gamma=1.8 EOC" + rates(t1a));
  const ConvergenceReport t1b = time_study(ex1, 1.0, 1, {20, 40, 80, 160});
  report("1b", rates_within(t1b, 1.05, 1.30) && errors_within_factor(t1b, {9.83e-4, 4.45e-4, 2.01e-4, 8.91e-5}, 3.0),
         "m=1 gamma=1 EOC" + rates(t1b));
  const ConvergenceReport t1c = time_study(ex1, 2.5, 2, {20, 40, 60, 80, 100});
  report("1c",
         rates_within(t1c, 2.9, 3.3) &&
             errors_within_factor(t1c, {2.91e-6, 3.13e-7, 8.77e-8, 3.59e-8, 1.81e-8}, 3.0),
         "m=2 gamma=2.5 EOC" + rates(t1c));

  // Criterion 2: alpha = 0.5, Example 1, spatial refinement.
  const ConvergenceReport s1 = space_study(1);
  const double ratio = s1.rows[0].error / 5.638e-3;
  report("2a", rates_within(s1, 1.9, 2.1) && ratio <= 2.0 && ratio >= 0.5,
         "r=1 EOC" + rates(s1) + ", error at Nx=10 " + std::to_string(s1.rows[0].error));
  const ConvergenceReport s2 = space_study(2);
  report("2b", rates_within(s2, 2.8, 3.3), "r=2 EOC" + rates(s2));
  const ConvergenceReport s3 = space_study(3);
  report("2c", rates_within(s3, 3.9, 4.2), "r=3 EOC" + rates(s3));

  // Criterion 3: alpha = 0.3, Example 2.
  const ManufacturedCase ex2 = example2(0.3);
  const ConvergenceReport t4a = time_study(ex2, 1.0, 1, {20, 40, 80, 160, 320});
  report("3a", rates_within(t4a, 0.6, 0.8), "m=1 gamma=1 EOC" + rates(t4a));
  const ConvergenceReport t4b = time_study(ex2, 3.0, 1, {20, 40, 80, 160, 320});
  report("3b", rates_within(t4b, 1.9, 2.1), "m=1 gamma=3 EOC" + rates(t4b));
  const ConvergenceReport t4c = time_study(ex2, 4.2, 2, {10, 20, 30, 40, 50});
  report("3c", rates_within(t4c, 3.0, 3.7), "m=2 gamma=4.2 EOC" + rates(t4c));

  // Criterion 4: strongly graded runs reach m+1 and beat the proven rate.
  theory_check("4a", "Example 1 m=1 gamma=1.8", t1a);
  theory_check("4b", "Example 1 m=2 gamma=2.5", t1c);
  theory_check("4c", "Example 2 m=1 gamma=3", t4b);

  // Criterion 5: invariant suite.
  const VerifyReport suite = verify({20231, 1000});
  for (const CheckResult& c : suite.checks) report("5 " + c.name, c.passed, c.detail);

  // Criterion 6: determinism of the study output.
  TimeStudyConfig det;
  det.gamma = 3.0;
  det.m = 1;
  det.N = {10, 20, 40};
  det.r = 2;
  det.Nx = 20;
  const std::string first = study_time(ex2, det).to_csv();
  const std::string second = study_time(ex2, det).to_csv();
  report("6", first == second, "repeated study-time CSV byte-identical (" + std::to_string(first.size()) + " bytes)");

  std::printf("%d failure(s)\n", failures);
  return failures == 0 ? 0 : 1;
}
