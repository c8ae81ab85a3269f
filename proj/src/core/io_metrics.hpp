#ifndef WIGCS_CORE_IO_METRICS_HPP
#define WIGCS_CORE_IO_METRICS_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "core/phase_space.hpp"
#include "core/solver.hpp"
#include "core/tomography.hpp"

namespace wigcs {

struct GridMetrics {
  double relative_l2 = 0.0;      // ||W_hat - W|| / ||W||
  double max_abs = 0.0;          // max |W_hat - W|
  double support_jaccard = 1.0;  // overlap of {|value| > 1e-6 * max|W|}
};

GridMetrics compare(const DiscreteWigner& w_true, const DiscreteWigner& w_hat);

// State parameters recorded in experiment reports; only the fields relevant
// to `kind` are serialized.
struct StateSpec {
  std::string kind;  // "coherent" | "fock" | "mixed" | "random"
  double amplitude = 0.0;
  double phase = 0.0;
  int level = 0;
  int rank = 0;
  std::uint64_t seed = 0;
};

// --- file formats (all emitters are deterministic byte-for-byte) ---------

// CSV grid: one line holding d, then d rows (index m) of d comma-separated
// values (index mu), 17 significant digits.
void write_grid_csv(const DiscreteWigner& w, const std::string& path);
DiscreteWigner read_grid_csv(const std::string& path);

// Binary 8-bit PGM (P5), d x d; the grid maximum maps to black. Constant
// grids map to mid-gray 128.
void write_grid_pgm(const DiscreteWigner& w, const std::string& path);

// Plain-text sensing plan: header (mode, count, seed, d) plus the sorted
// row-index list. Mode "explicit" marks selections without a seeded plan.
void write_plan(const std::optional<SensingPlan>& plan, const std::vector<int>& rows, int d,
                const std::string& path);

struct LoadedPlan {
  std::optional<SensingPlan> plan;
  std::vector<int> rows;
  int d = 0;
};

LoadedPlan read_plan(const std::string& path);

// Plain-text measurement vector: header (d, count) plus one
// "row-index value" line per kept row.
void write_measurements(const MeasurementVector& mv, int d, const std::string& path);

struct LoadedMeasurements {
  MeasurementVector mv;
  int d = 0;
};

LoadedMeasurements read_measurements(const std::string& path);

// JSON experiment report: dimension, state parameters, plan with explicit
// row indices, basis, solver configuration, iteration outcome, and metrics
// when a ground-truth grid was available.
void write_report(const ReconstructionReport& report, const std::optional<StateSpec>& state,
                  const std::optional<GridMetrics>& metrics, const std::string& path);

// Extracts the plan (and row list) embedded in a report file, so a stored
// report reproduces the exact experiment.
LoadedPlan read_plan_from_report(const std::string& path);

void write_metrics(const GridMetrics& metrics, const std::string& path);

std::string to_string(SamplingMode mode);
SamplingMode parse_mode(const std::string& text);

std::string to_string(SparseBasis::Kind kind);
SparseBasis::Kind parse_basis(const std::string& text);

}  // namespace wigcs

#endif
