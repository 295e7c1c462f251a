#include "fracdpg/harness.hpp"
#include "fracdpg/verify.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <exception>
#include <iostream>

namespace {

struct CaseOptions {
  int example = 1;
  double alpha = 0.5;
  int q = 10;
  std::string out;
};

void add_case_options(CLI::App* cmd, CaseOptions& o) {
  cmd->add_option("--example", o.example, "Manufactured case (1 or 2)")->required()->check(CLI::IsMember({1, 2}));
  cmd->add_option("--alpha", o.alpha, "Fractional order in (0,1)")->required()->check(CLI::Range(0.0, 1.0));
  cmd->add_option("--q", o.q, "Fine-grid points per slab")->check(CLI::PositiveNumber);
}

void emit(const fracdpg::ConvergenceReport& report, const std::string& out) {
  if (out.empty()) {
    std::cout << report.to_csv();
  } else {
    report.write(out);
    std::cout << "wrote " << out << '\n';
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Time-stepping DPG / finite element solver for 1D time-fractional subdiffusion"};
  app.require_subcommand(1);

  CaseOptions solve_case;
  fracdpg::SolveConfig solve_cfg;
  auto* solve_cmd = app.add_subcommand("solve", "Solve one configuration and print the fine-grid error");
  add_case_options(solve_cmd, solve_case);
  solve_cmd->add_option("--gamma", solve_cfg.gamma, "Mesh grading exponent")->required()->check(CLI::Range(1.0, 20.0));
  solve_cmd->add_option("--m", solve_cfg.m, "Temporal degree")->required()->check(CLI::Range(1, 6));
  solve_cmd->add_option("--r", solve_cfg.r, "Spatial degree")->required()->check(CLI::Range(1, 4));
  solve_cmd->add_option("--N", solve_cfg.N, "Number of time slabs")->required()->check(CLI::PositiveNumber);
  solve_cmd->add_option("--Nx", solve_cfg.Nx, "Number of spatial elements")->required()->check(CLI::Range(2, 100000));
  solve_cmd->add_option("--out", solve_case.out, "Write a one-row CSV report here");

  CaseOptions time_case;
  fracdpg::TimeStudyConfig time_cfg;
  auto* time_cmd = app.add_subcommand("study-time", "Temporal convergence study");
  add_case_options(time_cmd, time_case);
  time_cmd->add_option("--gamma", time_cfg.gamma, "Mesh grading exponent")->required()->check(CLI::Range(1.0, 20.0));
  time_cmd->add_option("--m", time_cfg.m, "Temporal degree")->required()->check(CLI::Range(1, 6));
  time_cmd->add_option("--N", time_cfg.N, "Comma-separated slab counts")->required()->delimiter(',');
  time_cmd->add_option("--r", time_cfg.r, "Spatial degree")->check(CLI::Range(1, 4));
  time_cmd->add_option("--Nx", time_cfg.Nx, "Number of spatial elements")->check(CLI::Range(2, 100000));
  time_cmd->add_option("--out", time_case.out, "CSV output path (plot data goes next to it)")->required();

  CaseOptions space_case;
  fracdpg::SpaceStudyConfig space_cfg;
  auto* space_cmd = app.add_subcommand("study-space", "Spatial convergence study");
  add_case_options(space_cmd, space_case);
  space_cmd->add_option("--r", space_cfg.r, "Spatial degree")->required()->check(CLI::Range(1, 4));
  space_cmd->add_option("--Nx", space_cfg.Nx, "Comma-separated element counts")->required()->delimiter(',');
  space_cmd->add_option("--m", space_cfg.m, "Temporal degree")->required()->check(CLI::Range(1, 6));
  space_cmd->add_option("--gamma", space_cfg.gamma, "Mesh grading exponent")->required()->check(CLI::Range(1.0, 20.0));
  space_cmd->add_option("--N", space_cfg.N, "Number of time slabs")->required()->check(CLI::PositiveNumber);
  space_cmd->add_option("--out", space_case.out, "CSV output path (plot data goes next to it)")->required();

  fracdpg::VerifyConfig verify_cfg;
  auto* verify_cmd = app.add_subcommand("verify", "Run the invariant suite");
  verify_cmd->add_option("--seed", verify_cfg.seed, "Random seed");
  verify_cmd->add_option("--trials", verify_cfg.trials, "Coercivity draws")->check(CLI::PositiveNumber);

  CLI11_PARSE(app, argc, argv);

  try {
    if (*solve_cmd) {
      solve_cfg.q = solve_case.q;
      const auto mc = fracdpg::example(solve_case.example, solve_case.alpha);
      const double err = fracdpg::solve_error(mc, solve_cfg);
      std::printf("error %.6e\n", err);
      if (!solve_case.out.empty()) {
        fracdpg::ConvergenceReport report;
        report.metadata = {{"case", mc.name}};
        report.rows.push_back({solve_cfg.N, err, std::nullopt});
        report.write(solve_case.out);
      }
    } else if (*time_cmd) {
      time_cfg.q = time_case.q;
      const auto mc = fracdpg::example(time_case.example, time_case.alpha);
      emit(fracdpg::study_time(mc, time_cfg), time_case.out);
    } else if (*space_cmd) {
      space_cfg.q = space_case.q;
      const auto mc = fracdpg::example(space_case.example, space_case.alpha);
      emit(fracdpg::study_space(mc, space_cfg), space_case.out);
    } else if (*verify_cmd) {
      const fracdpg::VerifyReport report = fracdpg::verify(verify_cfg);
      std::cout << report.to_text();
      return report.passed() ? 0 : 1;
    }
  } catch (const std::exception& e) {
    std::cerr << "fracdpg: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
