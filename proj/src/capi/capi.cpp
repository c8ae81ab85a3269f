#include "wigcs.h"

#include <cstring>
#include <new>
#include <optional>
#include <string>

#include "core/error.hpp"
#include "core/io_metrics.hpp"
#include "core/phase_space.hpp"
#include "core/solver.hpp"
#include "core/states.hpp"
#include "core/tomography.hpp"

using namespace wigcs;

struct wigcs_density {
  DensityMatrix rho;
};

struct wigcs_grid {
  DiscreteWigner w;
};

struct wigcs_matrix {
  MeasurementMatrix m;
};

struct wigcs_measurements {
  MeasurementVector mv;
  int d = 0;
};

struct wigcs_report {
  ReconstructionReport rep;
  std::optional<StateSpec> state;
  std::optional<GridMetrics> metrics;
};

namespace {

thread_local std::string g_last_error;

wigcs_status status_of(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidArgument: return WIGCS_ERR_INVALID_ARGUMENT;
    case ErrorCode::Dimension: return WIGCS_ERR_DIMENSION;
    case ErrorCode::NotHermitian: return WIGCS_ERR_NOT_HERMITIAN;
    case ErrorCode::Tolerance: return WIGCS_ERR_TOLERANCE;
    case ErrorCode::Diverged: return WIGCS_ERR_DIVERGED;
    case ErrorCode::RankDeficient: return WIGCS_ERR_RANK_DEFICIENT;
    case ErrorCode::NoSparseSolution: return WIGCS_ERR_NO_SPARSE_SOLUTION;
    case ErrorCode::Io: return WIGCS_ERR_IO;
    case ErrorCode::Internal: return WIGCS_ERR_INTERNAL;
  }
  return WIGCS_ERR_INTERNAL;
}

// Runs the body, converting exceptions into statuses + last-error message.
template <typename Fn>
wigcs_status guarded(Fn&& fn) {
  try {
    fn();
    return WIGCS_OK;
  } catch (const Error& e) {
    g_last_error = e.what();
    return status_of(e.code());
  } catch (const std::bad_alloc&) {
    g_last_error = "out of memory";
    return WIGCS_ERR_INTERNAL;
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return WIGCS_ERR_INTERNAL;
  }
}

wigcs_status require(bool ok, const char* msg) {
  if (ok) return WIGCS_OK;
  g_last_error = msg;
  return WIGCS_ERR_INVALID_ARGUMENT;
}

}  // namespace

extern "C" {

const char* wigcs_version(void) { return "0.1.0"; }

const char* wigcs_status_name(wigcs_status status) {
  switch (status) {
    case WIGCS_OK: return "ok";
    case WIGCS_ERR_INVALID_ARGUMENT: return "invalid-argument";
    case WIGCS_ERR_DIMENSION: return "dimension";
    case WIGCS_ERR_NOT_HERMITIAN: return "not-hermitian";
    case WIGCS_ERR_TOLERANCE: return "tolerance";
    case WIGCS_ERR_DIVERGED: return "diverged";
    case WIGCS_ERR_RANK_DEFICIENT: return "rank-deficient";
    case WIGCS_ERR_NO_SPARSE_SOLUTION: return "no-sparse-solution";
    case WIGCS_ERR_IO: return "io";
    case WIGCS_ERR_INTERNAL: return "internal";
  }
  return "unknown";
}

const char* wigcs_last_error(void) { return g_last_error.c_str(); }

/* ---- states ------------------------------------------------------------ */

wigcs_status wigcs_density_fock(int d, int level, wigcs_density** out) {
  if (auto st = require(out != nullptr, "null output pointer")) return st;
  return guarded([&] { *out = new wigcs_density{fock_density(Dimension(d), level)}; });
}

wigcs_status wigcs_density_coherent(int d, double amplitude, double phase,
                                    wigcs_density** out) {
  if (auto st = require(out != nullptr, "null output pointer")) return st;
  return guarded(
      [&] { *out = new wigcs_density{coherent_density({Dimension(d), amplitude, phase})}; });
}

wigcs_status wigcs_density_maximally_mixed(int d, wigcs_density** out) {
  if (auto st = require(out != nullptr, "null output pointer")) return st;
  return guarded([&] { *out = new wigcs_density{maximally_mixed(Dimension(d))}; });
}

wigcs_status wigcs_density_random(int d, uint64_t seed, int rank, wigcs_density** out) {
  if (auto st = require(out != nullptr, "null output pointer")) return st;
  return guarded([&] { *out = new wigcs_density{random_density(Dimension(d), seed, rank)}; });
}

wigcs_status wigcs_density_dim(const wigcs_density* rho, int* d) {
  if (auto st = require(rho && d, "null argument")) return st;
  *d = rho->rho.dim().value();
  return WIGCS_OK;
}

wigcs_status wigcs_density_entry(const wigcs_density* rho, int a, int b, double* re,
                                 double* im) {
  if (auto st = require(rho && re && im, "null argument")) return st;
  const int d = rho->rho.dim().value();
  if (auto st = require(a >= 0 && a < d && b >= 0 && b < d, "index out of range")) return st;
  const Complex v = rho->rho(a, b);
  *re = v.real();
  *im = v.imag();
  return WIGCS_OK;
}

void wigcs_density_free(wigcs_density* rho) { delete rho; }

/* ---- grids -------------------------------------------------------------- */

wigcs_status wigcs_wigner_from_density(const wigcs_density* rho, wigcs_grid** out) {
  if (auto st = require(rho && out, "null argument")) return st;
  return guarded([&] { *out = new wigcs_grid{wigner_from_density(rho->rho)}; });
}

wigcs_status wigcs_density_from_wigner(const wigcs_grid* w, wigcs_density** out) {
  if (auto st = require(w && out, "null argument")) return st;
  return guarded([&] { *out = new wigcs_density{density_from_wigner(w->w)}; });
}

wigcs_status wigcs_coherent_wigner(int d, double amplitude, double phase, wigcs_grid** out) {
  if (auto st = require(out != nullptr, "null output pointer")) return st;
  return guarded([&] {
    *out = new wigcs_grid{coherent_wigner_closed_form({Dimension(d), amplitude, phase})};
  });
}

wigcs_status wigcs_grid_create(int d, const double* values, wigcs_grid** out) {
  if (auto st = require(values && out, "null argument")) return st;
  return guarded([&] {
    Dimension dim(d);
    RVector v = Eigen::Map<const RVector>(values, d * d);
    *out = new wigcs_grid{DiscreteWigner::from_raster(dim, v)};
  });
}

wigcs_status wigcs_grid_dim(const wigcs_grid* w, int* d) {
  if (auto st = require(w && d, "null argument")) return st;
  *d = w->w.dim().value();
  return WIGCS_OK;
}

wigcs_status wigcs_grid_values(const wigcs_grid* w, double* values) {
  if (auto st = require(w && values, "null argument")) return st;
  const RVector v = w->w.raster();
  std::memcpy(values, v.data(), sizeof(double) * static_cast<std::size_t>(v.size()));
  return WIGCS_OK;
}

wigcs_status wigcs_grid_write_csv(const wigcs_grid* w, const char* path) {
  if (auto st = require(w && path, "null argument")) return st;
  return guarded([&] { write_grid_csv(w->w, path); });
}

wigcs_status wigcs_grid_read_csv(const char* path, wigcs_grid** out) {
  if (auto st = require(path && out, "null argument")) return st;
  return guarded([&] { *out = new wigcs_grid{read_grid_csv(path)}; });
}

wigcs_status wigcs_grid_write_pgm(const wigcs_grid* w, const char* path) {
  if (auto st = require(w && path, "null argument")) return st;
  return guarded([&] { write_grid_pgm(w->w, path); });
}

void wigcs_grid_free(wigcs_grid* w) { delete w; }

/* ---- tomography ----------------------------------------------------------- */

wigcs_status wigcs_matrix_full(int d, wigcs_matrix** out) {
  if (auto st = require(out != nullptr, "null output pointer")) return st;
  return guarded([&] { *out = new wigcs_matrix{build_full_matrix(Dimension(d))}; });
}

wigcs_status wigcs_matrix_sample(const wigcs_matrix* full, const char* mode, int count,
                                 uint64_t seed, wigcs_matrix** out) {
  if (auto st = require(full && mode && out, "null argument")) return st;
  return guarded([&] {
    SensingPlan plan{parse_mode(mode), count, seed};
    *out = new wigcs_matrix{sample_rows(full->m, plan)};
  });
}

wigcs_status wigcs_matrix_select(const wigcs_matrix* full, const int* rows, int count,
                                 wigcs_matrix** out) {
  if (auto st = require(full && rows && out, "null argument")) return st;
  if (auto st = require(count > 0, "row count must be positive")) return st;
  return guarded([&] {
    std::vector<int> keep(rows, rows + count);
    *out = new wigcs_matrix{select_rows(full->m, keep)};
  });
}

wigcs_status wigcs_matrix_from_plan_file(const char* path, wigcs_matrix** out) {
  if (auto st = require(path && out, "null argument")) return st;
  return guarded([&] {
    LoadedPlan loaded = read_plan(path);
    auto full = build_full_matrix(Dimension(loaded.d));
    *out = new wigcs_matrix{select_rows(full, loaded.rows, loaded.plan)};
  });
}

wigcs_status wigcs_matrix_rows(const wigcs_matrix* m, int* rows) {
  if (auto st = require(m && rows, "null argument")) return st;
  *rows = m->m.rows();
  return WIGCS_OK;
}

wigcs_status wigcs_matrix_cols(const wigcs_matrix* m, int* cols) {
  if (auto st = require(m && cols, "null argument")) return st;
  *cols = m->m.cols();
  return WIGCS_OK;
}

wigcs_status wigcs_matrix_row_indices(const wigcs_matrix* m, int* indices) {
  if (auto st = require(m && indices, "null argument")) return st;
  const auto& r = m->m.row_indices();
  std::memcpy(indices, r.data(), sizeof(int) * r.size());
  return WIGCS_OK;
}

wigcs_status wigcs_matrix_dense(const wigcs_matrix* m, double* entries) {
  if (auto st = require(m && entries, "null argument")) return st;
  const RMatrix a = m->m.dense();
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      entries[static_cast<std::size_t>(i * a.cols() + j)] = a(i, j);
  return WIGCS_OK;
}

wigcs_status wigcs_matrix_write_plan(const wigcs_matrix* m, const char* path) {
  if (auto st = require(m && path, "null argument")) return st;
  return guarded([&] { write_plan(m->m.plan(), m->m.row_indices(), m->m.d(), path); });
}

void wigcs_matrix_free(wigcs_matrix* m) { delete m; }

wigcs_status wigcs_measure(const wigcs_grid* w, const wigcs_matrix* m,
                           wigcs_measurements** out) {
  if (auto st = require(w && m && out, "null argument")) return st;
  return guarded(
      [&] { *out = new wigcs_measurements{measure(w->w, m->m), w->w.dim().value()}; });
}

wigcs_status wigcs_measurements_count(const wigcs_measurements* mv, int* count) {
  if (auto st = require(mv && count, "null argument")) return st;
  *count = static_cast<int>(mv->mv.row_indices.size());
  return WIGCS_OK;
}

wigcs_status wigcs_measurements_values(const wigcs_measurements* mv, double* values) {
  if (auto st = require(mv && values, "null argument")) return st;
  std::memcpy(values, mv->mv.values.data(),
              sizeof(double) * static_cast<std::size_t>(mv->mv.values.size()));
  return WIGCS_OK;
}

wigcs_status wigcs_measurements_row_indices(const wigcs_measurements* mv, int* indices) {
  if (auto st = require(mv && indices, "null argument")) return st;
  std::memcpy(indices, mv->mv.row_indices.data(), sizeof(int) * mv->mv.row_indices.size());
  return WIGCS_OK;
}

wigcs_status wigcs_measurements_write(const wigcs_measurements* mv, int d, const char* path) {
  if (auto st = require(mv && path, "null argument")) return st;
  return guarded([&] { write_measurements(mv->mv, d, path); });
}

wigcs_status wigcs_measurements_read(const char* path, wigcs_measurements** out) {
  if (auto st = require(path && out, "null argument")) return st;
  return guarded([&] {
    LoadedMeasurements loaded = read_measurements(path);
    *out = new wigcs_measurements{std::move(loaded.mv), loaded.d};
  });
}

void wigcs_measurements_free(wigcs_measurements* mv) { delete mv; }

/* ---- reconstruction --------------------------------------------------------- */

void wigcs_solver_config_init(wigcs_solver_config* cfg) {
  if (!cfg) return;
  cfg->mu_threshold = -1.0;
  cfg->delta_step = -1.0;
  cfg->max_iters = 20000;
  cfg->residual_tol = 1e-6;
}

wigcs_status wigcs_reconstruct(const wigcs_measurements* mv, const wigcs_matrix* m,
                               const char* basis, const wigcs_solver_config* cfg,
                               wigcs_report** out) {
  if (auto st = require(mv && m && basis && out, "null argument")) return st;
  return guarded([&] {
    BregmanConfig bc;
    if (cfg) {
      bc.mu_threshold = cfg->mu_threshold;
      bc.delta_step = cfg->delta_step;
      bc.max_iters = cfg->max_iters;
      bc.residual_tol = cfg->residual_tol;
    }
    SparseBasis sb(parse_basis(basis), m->m.cols());
    *out = new wigcs_report{reconstruct(mv->mv, m->m, sb, bc), std::nullopt, std::nullopt};
  });
}

wigcs_status wigcs_report_grid(const wigcs_report* rep, wigcs_grid** out) {
  if (auto st = require(rep && out, "null argument")) return st;
  return guarded([&] { *out = new wigcs_grid{rep->rep.w_hat}; });
}

wigcs_status wigcs_report_iterations(const wigcs_report* rep, long* iterations) {
  if (auto st = require(rep && iterations, "null argument")) return st;
  *iterations = rep->rep.iterations;
  return WIGCS_OK;
}

wigcs_status wigcs_report_relative_residual(const wigcs_report* rep, double* value) {
  if (auto st = require(rep && value, "null argument")) return st;
  *value = rep->rep.relative_residual;
  return WIGCS_OK;
}

wigcs_status wigcs_report_converged(const wigcs_report* rep, int* converged) {
  if (auto st = require(rep && converged, "null argument")) return st;
  *converged = rep->rep.status == SolveStatus::Converged ? 1 : 0;
  return WIGCS_OK;
}

wigcs_status wigcs_report_set_state(wigcs_report* rep, const char* kind, double amplitude,
                                    double phase, int level, int rank, uint64_t seed) {
  if (auto st = require(rep && kind, "null argument")) return st;
  const std::string k = kind;
  if (auto st = require(k == "coherent" || k == "fock" || k == "mixed" || k == "random",
                        "unknown state kind"))
    return st;
  StateSpec spec;
  spec.kind = k;
  spec.amplitude = amplitude;
  spec.phase = phase;
  spec.level = level;
  spec.rank = rank;
  spec.seed = seed;
  rep->state = spec;
  return WIGCS_OK;
}

wigcs_status wigcs_report_attach_truth(wigcs_report* rep, const wigcs_grid* truth) {
  if (auto st = require(rep && truth, "null argument")) return st;
  return guarded([&] { rep->metrics = compare(truth->w, rep->rep.w_hat); });
}

wigcs_status wigcs_report_write(const wigcs_report* rep, const char* path) {
  if (auto st = require(rep && path, "null argument")) return st;
  return guarded([&] { write_report(rep->rep, rep->state, rep->metrics, path); });
}

void wigcs_report_free(wigcs_report* rep) { delete rep; }

/* ---- comparison --------------------------------------------------------------- */

wigcs_status wigcs_compare(const wigcs_grid* truth, const wigcs_grid* recovered,
                           double* relative_l2, double* max_abs, double* support_jaccard) {
  if (auto st = require(truth && recovered && relative_l2 && max_abs && support_jaccard,
                        "null argument"))
    return st;
  return guarded([&] {
    GridMetrics gm = compare(truth->w, recovered->w);
    *relative_l2 = gm.relative_l2;
    *max_abs = gm.max_abs;
    *support_jaccard = gm.support_jaccard;
  });
}

wigcs_status wigcs_compare_write(const wigcs_grid* truth, const wigcs_grid* recovered,
                                 const char* path) {
  if (auto st = require(truth && recovered && path, "null argument")) return st;
  return guarded([&] { write_metrics(compare(truth->w, recovered->w), path); });
}

} /* extern "C" */
