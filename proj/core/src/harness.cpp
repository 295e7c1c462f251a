#include "fracdpg/harness.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace fracdpg {

namespace {

std::string format(const char* fmt, double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, fmt, v);
  return buf;
}

std::string join(const std::vector<int>& values) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out += ' ';
    out += std::to_string(values[i]);
  }
  return out;
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

void add_quad_metadata(ConvergenceReport& report, const QuadConfig& quad) {
  report.metadata.emplace_back("kernel_exact_below", format("%g", quad.kernel.exact_below));
  report.metadata.emplace_back("kernel_max_points", std::to_string(quad.kernel.max_points));
  report.metadata.emplace_back("forcing", "power-terms");
}

void fill_rates(ConvergenceReport& report) {
  if (report.rows.size() < 2) return;
  std::vector<double> errors;
  std::vector<double> res;
  for (const ConvergenceRow& row : report.rows) {
    errors.push_back(row.error);
    res.push_back(row.resolution);
  }
  const std::vector<double> rates = eoc(errors, res);
  for (std::size_t i = 0; i < rates.size(); ++i) report.rows[i + 1].eoc = rates[i];
}

}  // namespace

std::vector<double> fine_grid(const TimeMesh& mesh, int q) {
  if (q < 1) throw std::invalid_argument("fine_grid: q must be positive");
  std::vector<double> grid;
  grid.reserve(static_cast<std::size_t>(mesh.slab_count()) * q + 1);
  for (int j = 1; j <= mesh.slab_count(); ++j) {
    const Interval s = mesh.slab(j);
    for (int n = 0; n < q; ++n) grid.push_back(s.left + n * s.length() / q);
  }
  grid.push_back(mesh.final_time());
  return grid;
}

double error_norm(const Trajectory& trajectory, const SpaceTimeFunction& exact, int q) {
  double worst = 0.0;
  for (double t : fine_grid(trajectory.mesh, q)) {
    const Eigen::VectorXd u = evaluate_at(trajectory, t);
    worst = std::max(worst, l2_norm_error(trajectory.space, u, [&](double x) { return exact(x, t); }));
  }
  return worst;
}

double error_norm(const Trajectory& trajectory, const ManufacturedCase& mc, int q) {
  return error_norm(trajectory, mc.exact, q);
}

std::vector<double> eoc(std::span<const double> errors, std::span<const double> resolutions) {
  if (errors.size() < 2) throw std::invalid_argument("eoc: need at least two entries");
  if (errors.size() != resolutions.size()) throw std::invalid_argument("eoc: size mismatch");
  for (double e : errors)
    if (!(e > 0.0)) throw std::invalid_argument("eoc: errors must be strictly positive");
  std::vector<double> rates;
  for (std::size_t i = 1; i < errors.size(); ++i)
    rates.push_back(std::log(errors[i - 1] / errors[i]) / std::log(resolutions[i] / resolutions[i - 1]));
  return rates;
}

std::string ConvergenceReport::to_csv() const {
  std::ostringstream os;
  for (const auto& [key, value] : metadata) os << "# " << key << '=' << value << '\n';
  os << "resolution,error,eoc\n";
  for (const ConvergenceRow& row : rows) {
    os << row.resolution << ',' << format("%.6e", row.error) << ',';
    if (row.eoc) os << format("%.4f", *row.eoc);
    os << '\n';
  }
  return os.str();
}

std::string ConvergenceReport::to_plot_data() const {
  std::ostringstream os;
  os << "# resolution error\n";
  for (const ConvergenceRow& row : rows) os << row.resolution << ' ' << format("%.6e", row.error) << '\n';
  return os.str();
}

void ConvergenceReport::write(const std::string& path) const {
  std::ofstream csv(path, std::ios::binary);
  if (!csv) throw std::runtime_error("cannot open " + path);
  csv << to_csv();
  std::string dat = path;
  const auto dot = dat.find_last_of('.');
  const auto slash = dat.find_last_of('/');
  if (dot != std::string::npos && (slash == std::string::npos || dot > slash)) dat.erase(dot);
  dat += ".dat";
  std::ofstream plot(dat, std::ios::binary);
  if (!plot) throw std::runtime_error("cannot open " + dat);
  plot << to_plot_data();
}

double solve_error(const ManufacturedCase& mc, const SolveConfig& config) {
  const ProblemSpec problem = mc.problem();
  const TimeMesh mesh = TimeMesh::graded(config.gamma, config.N, problem.final_time);
  const FESpace space(config.Nx, config.r);
  const Trajectory traj = solve(problem, mesh, space, config.m, config.quad);
  return error_norm(traj, mc, config.q);
}

TheoryComparison compare_with_theory(const ManufacturedCase& mc, double gamma, int m, double final_eoc) {
  const double alpha = mc.params.alpha();
  TheoryComparison c;
  c.proven_order = m + alpha / 2.0;
  c.optimal_order = m + 1.0;
  c.expected_order = std::min(gamma * mc.sigma, c.optimal_order);
  c.grading_threshold = (m + 1.0) / mc.sigma;
  c.proven_threshold = std::max((m + 1.0) / (mc.delta - 1.0), (2.0 * m + 1.0 + alpha) / (2.0 * mc.sigma + alpha - 1.0));
  c.strongly_graded = gamma >= c.grading_threshold;
  c.final_eoc = final_eoc;
  c.reaches_optimal = std::abs(final_eoc - c.optimal_order) <= 0.15;
  c.exceeds_proven = final_eoc > c.proven_order;
  return c;
}

ConvergenceReport study_time(const ManufacturedCase& mc, const TimeStudyConfig& config) {
  ConvergenceReport report;
  report.metadata = {{"study", "time"},
                     {"case", mc.name},
                     {"alpha", format("%g", mc.params.alpha())},
                     {"gamma", format("%g", config.gamma)},
                     {"m", std::to_string(config.m)},
                     {"r", std::to_string(config.r)},
                     {"Nx", std::to_string(config.Nx)},
                     {"q", std::to_string(config.q)},
                     {"N", join(config.N)}};
  add_quad_metadata(report, config.quad);
  for (int n : config.N) {
    SolveConfig sc{config.gamma, config.m, n, config.r, config.Nx, config.q, config.quad};
    try {
      report.rows.push_back({n, solve_error(mc, sc), std::nullopt});
    } catch (const std::exception& e) {
      throw std::runtime_error("study_time: N=" + std::to_string(n) + " failed: " + e.what());
    }
  }
  fill_rates(report);
  if (report.rows.size() >= 2) {
    const TheoryComparison c = compare_with_theory(mc, config.gamma, config.m, *report.rows.back().eoc);
    report.theory = c;
    report.metadata.emplace_back("proven_order", format("%.4f", c.proven_order));
    report.metadata.emplace_back("optimal_order", format("%.4f", c.optimal_order));
    report.metadata.emplace_back("expected_order", format("%.4f", c.expected_order));
    report.metadata.emplace_back("grading_threshold", format("%.4f", c.grading_threshold));
    report.metadata.emplace_back("proven_grading_threshold", format("%.4f", c.proven_threshold));
    report.metadata.emplace_back("strongly_graded", yes_no(c.strongly_graded));
    report.metadata.emplace_back("final_eoc", format("%.4f", c.final_eoc));
    report.metadata.emplace_back("reaches_optimal_order", yes_no(c.reaches_optimal));
    report.metadata.emplace_back("exceeds_proven_order", yes_no(c.exceeds_proven));
  }
  return report;
}

ConvergenceReport study_space(const ManufacturedCase& mc, const SpaceStudyConfig& config) {
  ConvergenceReport report;
  report.metadata = {{"study", "space"},
                     {"case", mc.name},
                     {"alpha", format("%g", mc.params.alpha())},
                     {"r", std::to_string(config.r)},
                     {"m", std::to_string(config.m)},
                     {"gamma", format("%g", config.gamma)},
                     {"N", std::to_string(config.N)},
                     {"q", std::to_string(config.q)},
                     {"Nx", join(config.Nx)},
                     {"optimal_order", std::to_string(config.r + 1)}};
  add_quad_metadata(report, config.quad);
  for (int nx : config.Nx) {
    SolveConfig sc{config.gamma, config.m, config.N, config.r, nx, config.q, config.quad};
    try {
      report.rows.push_back({nx, solve_error(mc, sc), std::nullopt});
    } catch (const std::exception& e) {
      throw std::runtime_error("study_space: Nx=" + std::to_string(nx) + " failed: " + e.what());
    }
  }
  fill_rates(report);
  return report;
}

}  // namespace fracdpg
