#ifndef WIGCS_CORE_TOMOGRAPHY_HPP
#define WIGCS_CORE_TOMOGRAPHY_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "core/phase_space.hpp"

namespace wigcs {

// 1 iff k = 0 (mod a); correct for negative k.
int modular_kronecker(long long k, long long a);

// One discrete phase-space line: either the d points
// {(m, (mu0 - 2*m*tau) mod d)} of a sheared family, or a fixed-m column.
struct PhaseSpaceLine {
  enum class Family { Sheared, Vertical };
  Family family = Family::Sheared;
  int tau = 0;     // shear parameter, meaningful for Sheared only
  int offset = 0;  // mu0 for Sheared, m0 for Vertical

  // Raster column indices (column = m*d + mu) of the d points on the line.
  std::vector<int> points(int d) const;

  std::string label() const;
};

enum class SamplingMode { RowRandom, FamilyRandom };

struct SensingPlan {
  SamplingMode mode = SamplingMode::RowRandom;
  int count = 0;
  std::uint64_t seed = 0;
};

// Rows of the (d+1)*d x d^2 binary line-incidence matrix, either the full
// ordered set (tau = 0..d-1 with mu0 = 0..d-1 each, then the d vertical
// rows) or a subsampled subset that remembers its plan and full-matrix row
// indices. Rows are stored as point lists; dense() materialises them.
class MeasurementMatrix {
 public:
  int d() const { return dim_.value(); }
  Dimension dim() const { return dim_; }
  int rows() const { return static_cast<int>(row_indices_.size()); }
  int cols() const { return d() * d(); }

  const std::vector<int>& row_indices() const { return row_indices_; }
  const PhaseSpaceLine& line(int row) const { return lines_[static_cast<std::size_t>(row)]; }
  const std::vector<int>& row_points(int row) const {
    return points_[static_cast<std::size_t>(row)];
  }
  const std::optional<SensingPlan>& plan() const { return plan_; }

  RMatrix dense() const;

  // y = Phi * x and r -> Phi^T * r over raster vectors, in O(rows * d).
  RVector apply(const RVector& x) const;
  RVector apply_adjoint(const RVector& r) const;

  friend MeasurementMatrix build_full_matrix(Dimension dim);
  friend MeasurementMatrix sample_rows(const MeasurementMatrix& full, const SensingPlan& plan);
  friend MeasurementMatrix select_rows(const MeasurementMatrix& full,
                                       const std::vector<int>& rows,
                                       std::optional<SensingPlan> plan);

 private:
  explicit MeasurementMatrix(Dimension dim) : dim_(dim) {}

  Dimension dim_;
  std::vector<int> row_indices_;  // into the full row ordering
  std::vector<PhaseSpaceLine> lines_;
  std::vector<std::vector<int>> points_;
  std::optional<SensingPlan> plan_;
};

// All (d+1)*d lines; d must be an odd prime for the line set to be
// informationally complete (rank d^2).
MeasurementMatrix build_full_matrix(Dimension dim);

// Seeded row subsampling. RowRandom keeps `count` distinct rows drawn via a
// Fisher-Yates prefix; FamilyRandom keeps count/d whole families (count must
// be divisible by d). Kept rows are sorted by full-matrix index.
MeasurementMatrix sample_rows(const MeasurementMatrix& full, const SensingPlan& plan);

// Explicit row selection, e.g. when replaying a stored plan file.
MeasurementMatrix select_rows(const MeasurementMatrix& full, const std::vector<int>& rows,
                              std::optional<SensingPlan> plan = std::nullopt);

// Exact line sums pr(line) = sum of W over the line's points, one value per
// kept row, in row order.
struct MeasurementVector {
  std::vector<int> row_indices;
  RVector values;
};

MeasurementVector measure(const DiscreteWigner& w, const MeasurementMatrix& rows);

}  // namespace wigcs

#endif
