// wigcs command-line front end. Talks to the library exclusively through the
// C interface in wigcs.h.

#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <memory>
#include <string>

#include <CLI11.hpp>

#include "wigcs.h"

namespace {

// exit codes: 0 success, 2 validation, 3 solver divergence, 4 I/O
int exit_code_for(wigcs_status st) {
  switch (st) {
    case WIGCS_OK: return 0;
    case WIGCS_ERR_DIVERGED: return 3;
    case WIGCS_ERR_IO: return 4;
    case WIGCS_ERR_INVALID_ARGUMENT:
    case WIGCS_ERR_DIMENSION:
    case WIGCS_ERR_NOT_HERMITIAN:
    case WIGCS_ERR_TOLERANCE:
    case WIGCS_ERR_RANK_DEFICIENT:
    case WIGCS_ERR_NO_SPARSE_SOLUTION: return 2;
    default: return 1;
  }
}

struct CliError {
  wigcs_status status;
};

void check(wigcs_status st) {
  if (st != WIGCS_OK) throw CliError{st};
}

using GridPtr = std::unique_ptr<wigcs_grid, decltype(&wigcs_grid_free)>;
using DensityPtr = std::unique_ptr<wigcs_density, decltype(&wigcs_density_free)>;
using MatrixPtr = std::unique_ptr<wigcs_matrix, decltype(&wigcs_matrix_free)>;
using MeasPtr = std::unique_ptr<wigcs_measurements, decltype(&wigcs_measurements_free)>;
using ReportPtr = std::unique_ptr<wigcs_report, decltype(&wigcs_report_free)>;

struct StateFlags {
  int d = 19;
  std::string state = "coherent";
  double amplitude = 1.472;
  double phase = 0.0;
  int level = 0;
  int rank = 0;  // 0: defaults to d
  std::uint64_t seed = 7;
};

struct SamplingFlags {
  std::string mode = "row-random";
  int rows = 285;
};

struct SolverFlags {
  std::string basis = "pixel";
  double mu = -1.0;
  double delta = -1.0;
  long max_iters = 20000;
  double tol = 1e-6;

  wigcs_solver_config config() const {
    wigcs_solver_config cfg;
    wigcs_solver_config_init(&cfg);
    cfg.mu_threshold = mu;
    cfg.delta_step = delta;
    cfg.max_iters = max_iters;
    cfg.residual_tol = tol;
    return cfg;
  }
};

void add_state_flags(CLI::App* cmd, StateFlags& f) {
  cmd->add_option("--d", f.d, "Hilbert-space dimension (odd; prime for tomography)");
  cmd->add_option("--state", f.state, "State kind")
      ->check(CLI::IsMember({"coherent", "fock", "mixed", "random"}));
  cmd->add_option("--amplitude", f.amplitude, "Coherent amplitude |alpha|");
  cmd->add_option("--phase", f.phase, "Coherent phase (radians)");
  cmd->add_option("--level", f.level, "Fock level");
  cmd->add_option("--rank", f.rank, "Rank of the random state (default d)");
  cmd->add_option("--seed", f.seed, "Seed for the random state and the sensing plan");
}

void add_sampling_flags(CLI::App* cmd, SamplingFlags& f) {
  cmd->add_option("--mode", f.mode, "Row sampling mode")
      ->check(CLI::IsMember({"row-random", "family-random"}));
  cmd->add_option("--rows", f.rows, "Number of measurement rows to keep");
}

void add_solver_flags(CLI::App* cmd, SolverFlags& f) {
  cmd->add_option("--basis", f.basis, "Sparsifying basis")
      ->check(CLI::IsMember({"pixel", "cosine"}));
  cmd->add_option("--mu", f.mu, "Shrinkage threshold (<= 0: auto)");
  cmd->add_option("--delta", f.delta, "Step size (<= 0: auto)");
  cmd->add_option("--max-iters", f.max_iters, "Iteration budget");
  cmd->add_option("--tol", f.tol, "Relative residual tolerance");
}

// Ground-truth grid for the requested state. Coherent states use the
// closed-form evaluation; the rest go through the density transform.
GridPtr make_truth(const StateFlags& f) {
  wigcs_grid* grid = nullptr;
  if (f.state == "coherent") {
    check(wigcs_coherent_wigner(f.d, f.amplitude, f.phase, &grid));
    return {grid, wigcs_grid_free};
  }
  wigcs_density* rho = nullptr;
  if (f.state == "fock") {
    check(wigcs_density_fock(f.d, f.level, &rho));
  } else if (f.state == "mixed") {
    check(wigcs_density_maximally_mixed(f.d, &rho));
  } else {
    check(wigcs_density_random(f.d, f.seed, f.rank > 0 ? f.rank : f.d, &rho));
  }
  DensityPtr rho_owner(rho, wigcs_density_free);
  check(wigcs_wigner_from_density(rho, &grid));
  return {grid, wigcs_grid_free};
}

void set_report_state(wigcs_report* rep, const StateFlags& f) {
  check(wigcs_report_set_state(rep, f.state.c_str(), f.amplitude, f.phase, f.level,
                               f.rank > 0 ? f.rank : f.d, f.seed));
}

int run_pipeline(const StateFlags& state, const SamplingFlags& sampling,
                 const SolverFlags& solver, const std::string& out_dir) {
  std::filesystem::create_directories(out_dir);
  const auto path = [&](const char* name) { return out_dir + "/" + name; };

  GridPtr truth = make_truth(state);
  check(wigcs_grid_write_csv(truth.get(), path("truth.csv").c_str()));
  check(wigcs_grid_write_pgm(truth.get(), path("truth.pgm").c_str()));

  wigcs_matrix* full = nullptr;
  check(wigcs_matrix_full(state.d, &full));
  MatrixPtr full_owner(full, wigcs_matrix_free);
  wigcs_matrix* sub = nullptr;
  check(wigcs_matrix_sample(full, sampling.mode.c_str(), sampling.rows, state.seed, &sub));
  MatrixPtr sub_owner(sub, wigcs_matrix_free);

  wigcs_measurements* mv = nullptr;
  check(wigcs_measure(truth.get(), sub, &mv));
  MeasPtr mv_owner(mv, wigcs_measurements_free);

  const wigcs_solver_config cfg = solver.config();
  wigcs_report* rep = nullptr;
  check(wigcs_reconstruct(mv, sub, solver.basis.c_str(), &cfg, &rep));
  ReportPtr rep_owner(rep, wigcs_report_free);
  set_report_state(rep, state);
  check(wigcs_report_attach_truth(rep, truth.get()));

  wigcs_grid* recovered = nullptr;
  check(wigcs_report_grid(rep, &recovered));
  GridPtr rec_owner(recovered, wigcs_grid_free);
  check(wigcs_grid_write_csv(recovered, path("recovered.csv").c_str()));
  check(wigcs_grid_write_pgm(recovered, path("recovered.pgm").c_str()));
  check(wigcs_report_write(rep, path("report.json").c_str()));
  std::printf("wrote %s/{truth,recovered}.{csv,pgm} and report.json\n", out_dir.c_str());
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"discrete Wigner-function tomography with sparse recovery"};
  app.require_subcommand(1);

  // generate
  auto* generate = app.add_subcommand("generate", "Write a state's Wigner grid (CSV + PGM)");
  StateFlags gen_state;
  std::string gen_csv = "truth.csv", gen_pgm = "truth.pgm";
  add_state_flags(generate, gen_state);
  generate->add_option("--out-csv", gen_csv, "Output grid CSV path");
  generate->add_option("--out-pgm", gen_pgm, "Output image path");

  // measure
  auto* measure = app.add_subcommand("measure", "Sample rows and measure line sums");
  StateFlags meas_state;
  SamplingFlags meas_sampling;
  std::string meas_grid_in, meas_out = "measurements.txt", meas_plan = "plan.txt";
  add_state_flags(measure, meas_state);
  add_sampling_flags(measure, meas_sampling);
  measure->add_option("--grid", meas_grid_in, "Measure this stored grid instead of a state");
  measure->add_option("--out-measurements", meas_out, "Output measurement file");
  measure->add_option("--out-plan", meas_plan, "Output plan file");

  // reconstruct
  auto* reconstruct = app.add_subcommand(
      "reconstruct", "Recover a grid from measurements (files or end-to-end)");
  StateFlags rec_state;
  SamplingFlags rec_sampling;
  SolverFlags rec_solver;
  std::string rec_plan_in, rec_meas_in;
  std::string rec_csv = "recovered.csv", rec_pgm = "recovered.pgm", rec_report = "report.json";
  add_state_flags(reconstruct, rec_state);
  add_sampling_flags(reconstruct, rec_sampling);
  add_solver_flags(reconstruct, rec_solver);
  reconstruct->add_option("--plan", rec_plan_in, "Stored plan file (with --measurements)");
  reconstruct->add_option("--measurements", rec_meas_in, "Stored measurement file");
  reconstruct->add_option("--out-csv", rec_csv, "Recovered grid CSV path");
  reconstruct->add_option("--out-pgm", rec_pgm, "Recovered image path");
  reconstruct->add_option("--out-report", rec_report, "Report JSON path");

  // compare
  auto* compare = app.add_subcommand("compare", "Error metrics between two grid CSVs");
  std::string cmp_truth, cmp_recovered, cmp_out = "metrics.json";
  compare->add_option("--truth", cmp_truth, "Ground-truth grid CSV")->required();
  compare->add_option("--recovered", cmp_recovered, "Recovered grid CSV")->required();
  compare->add_option("--out", cmp_out, "Output metrics JSON");

  // reproduce-fig1
  auto* fig1 = app.add_subcommand(
      "reproduce-fig1", "End-to-end run at d=19, |alpha|=1.472, 285 random rows");
  StateFlags fig1_state;  // defaults already match
  SamplingFlags fig1_sampling;
  SolverFlags fig1_solver;
  std::string fig1_out = "fig1";
  add_state_flags(fig1, fig1_state);
  add_sampling_flags(fig1, fig1_sampling);
  add_solver_flags(fig1, fig1_solver);
  fig1->add_option("--out", fig1_out, "Output directory");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    app.exit(e);
    return 2;
  }

  try {
    if (*generate) {
      GridPtr truth = make_truth(gen_state);
      check(wigcs_grid_write_csv(truth.get(), gen_csv.c_str()));
      check(wigcs_grid_write_pgm(truth.get(), gen_pgm.c_str()));
      std::printf("wrote %s and %s\n", gen_csv.c_str(), gen_pgm.c_str());
      return 0;
    }

    if (*measure) {
      GridPtr grid{nullptr, wigcs_grid_free};
      int d = meas_state.d;
      if (!meas_grid_in.empty()) {
        wigcs_grid* g = nullptr;
        check(wigcs_grid_read_csv(meas_grid_in.c_str(), &g));
        grid = GridPtr(g, wigcs_grid_free);
        check(wigcs_grid_dim(g, &d));
      } else {
        grid = make_truth(meas_state);
      }
      wigcs_matrix* full = nullptr;
      check(wigcs_matrix_full(d, &full));
      MatrixPtr full_owner(full, wigcs_matrix_free);
      wigcs_matrix* sub = nullptr;
      check(wigcs_matrix_sample(full, meas_sampling.mode.c_str(), meas_sampling.rows,
                                meas_state.seed, &sub));
      MatrixPtr sub_owner(sub, wigcs_matrix_free);
      wigcs_measurements* mv = nullptr;
      check(wigcs_measure(grid.get(), sub, &mv));
      MeasPtr mv_owner(mv, wigcs_measurements_free);
      check(wigcs_matrix_write_plan(sub, meas_plan.c_str()));
      check(wigcs_measurements_write(mv, d, meas_out.c_str()));
      std::printf("wrote %s and %s\n", meas_out.c_str(), meas_plan.c_str());
      return 0;
    }

    if (*reconstruct) {
      if (rec_plan_in.empty() != rec_meas_in.empty()) {
        std::fprintf(stderr, "error: --plan and --measurements must be given together\n");
        return 2;
      }
      const wigcs_solver_config cfg = rec_solver.config();
      if (!rec_plan_in.empty()) {
        // replay a stored experiment
        wigcs_matrix* sub = nullptr;
        check(wigcs_matrix_from_plan_file(rec_plan_in.c_str(), &sub));
        MatrixPtr sub_owner(sub, wigcs_matrix_free);
        wigcs_measurements* mv = nullptr;
        check(wigcs_measurements_read(rec_meas_in.c_str(), &mv));
        MeasPtr mv_owner(mv, wigcs_measurements_free);
        wigcs_report* rep = nullptr;
        check(wigcs_reconstruct(mv, sub, rec_solver.basis.c_str(), &cfg, &rep));
        ReportPtr rep_owner(rep, wigcs_report_free);
        wigcs_grid* recovered = nullptr;
        check(wigcs_report_grid(rep, &recovered));
        GridPtr rec_owner(recovered, wigcs_grid_free);
        check(wigcs_grid_write_csv(recovered, rec_csv.c_str()));
        check(wigcs_grid_write_pgm(recovered, rec_pgm.c_str()));
        check(wigcs_report_write(rep, rec_report.c_str()));
        std::printf("wrote %s, %s and %s\n", rec_csv.c_str(), rec_pgm.c_str(),
                    rec_report.c_str());
        return 0;
      }
      // end-to-end: state -> measure -> solve, with metrics against the truth
      GridPtr truth = make_truth(rec_state);
      wigcs_matrix* full = nullptr;
      check(wigcs_matrix_full(rec_state.d, &full));
      MatrixPtr full_owner(full, wigcs_matrix_free);
      wigcs_matrix* sub = nullptr;
      check(wigcs_matrix_sample(full, rec_sampling.mode.c_str(), rec_sampling.rows,
                                rec_state.seed, &sub));
      MatrixPtr sub_owner(sub, wigcs_matrix_free);
      wigcs_measurements* mv = nullptr;
      check(wigcs_measure(truth.get(), sub, &mv));
      MeasPtr mv_owner(mv, wigcs_measurements_free);
      wigcs_report* rep = nullptr;
      check(wigcs_reconstruct(mv, sub, rec_solver.basis.c_str(), &cfg, &rep));
      ReportPtr rep_owner(rep, wigcs_report_free);
      set_report_state(rep, rec_state);
      check(wigcs_report_attach_truth(rep, truth.get()));
      wigcs_grid* recovered = nullptr;
      check(wigcs_report_grid(rep, &recovered));
      GridPtr rec_owner(recovered, wigcs_grid_free);
      check(wigcs_grid_write_csv(recovered, rec_csv.c_str()));
      check(wigcs_grid_write_pgm(recovered, rec_pgm.c_str()));
      check(wigcs_report_write(rep, rec_report.c_str()));
      std::printf("wrote %s, %s and %s\n", rec_csv.c_str(), rec_pgm.c_str(),
                  rec_report.c_str());
      return 0;
    }

    if (*compare) {
      wigcs_grid* truth = nullptr;
      check(wigcs_grid_read_csv(cmp_truth.c_str(), &truth));
      GridPtr truth_owner(truth, wigcs_grid_free);
      wigcs_grid* recovered = nullptr;
      check(wigcs_grid_read_csv(cmp_recovered.c_str(), &recovered));
      GridPtr rec_owner(recovered, wigcs_grid_free);
      double rel = 0, mab = 0, jac = 0;
      check(wigcs_compare(truth, recovered, &rel, &mab, &jac));
      check(wigcs_compare_write(truth, recovered, cmp_out.c_str()));
      std::printf("relative_l2 %.6g  max_abs %.6g  support_jaccard %.6g -> %s\n", rel, mab,
                  jac, cmp_out.c_str());
      return 0;
    }

    if (*fig1) return run_pipeline(fig1_state, fig1_sampling, fig1_solver, fig1_out);
  } catch (const CliError& e) {
    std::fprintf(stderr, "error (%s): %s\n", wigcs_status_name(e.status), wigcs_last_error());
    return exit_code_for(e.status);
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  }
  return 2;
}
