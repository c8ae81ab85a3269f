#include "core/tomography.hpp"

#include <algorithm>

#include "core/error.hpp"
#include "core/rng.hpp"

namespace wigcs {

int modular_kronecker(long long k, long long a) {
  if (a < 1) fail(ErrorCode::InvalidArgument, "modular_kronecker requires a >= 1");
  long long r = k % a;
  if (r < 0) r += a;
  return r == 0 ? 1 : 0;
}

std::vector<int> PhaseSpaceLine::points(int d) const {
  std::vector<int> cols(static_cast<std::size_t>(d));
  if (family == Family::Vertical) {
    for (int mu = 0; mu < d; ++mu) cols[static_cast<std::size_t>(mu)] = offset * d + mu;
  } else {
    for (int m = 0; m < d; ++m) {
      const int mu = ((offset - 2 * m * tau) % d + d) % d;
      cols[static_cast<std::size_t>(m)] = m * d + mu;
    }
  }
  return cols;
}

std::string PhaseSpaceLine::label() const {
  if (family == Family::Vertical) return "vertical m0=" + std::to_string(offset);
  return "sheared tau=" + std::to_string(tau) + " mu0=" + std::to_string(offset);
}

RMatrix MeasurementMatrix::dense() const {
  RMatrix a = RMatrix::Zero(rows(), cols());
  for (int r = 0; r < rows(); ++r)
    for (int c : points_[static_cast<std::size_t>(r)]) a(r, c) = 1.0;
  return a;
}

RVector MeasurementMatrix::apply(const RVector& x) const {
  if (x.size() != cols()) fail(ErrorCode::Dimension, "apply: raster vector has wrong length");
  RVector y(rows());
  for (int r = 0; r < rows(); ++r) {
    double acc = 0.0;
    for (int c : points_[static_cast<std::size_t>(r)]) acc += x(c);
    y(r) = acc;
  }
  return y;
}

RVector MeasurementMatrix::apply_adjoint(const RVector& r) const {
  if (r.size() != rows()) fail(ErrorCode::Dimension, "apply_adjoint: vector has wrong length");
  RVector x = RVector::Zero(cols());
  for (int i = 0; i < rows(); ++i)
    for (int c : points_[static_cast<std::size_t>(i)]) x(c) += r(i);
  return x;
}

MeasurementMatrix build_full_matrix(Dimension dim) {
  const int d = dim.value();
  if (!dim.is_prime())
    fail(ErrorCode::Dimension,
         "d = " + std::to_string(d) +
             " is not prime; the sheared line families are informationally "
             "complete only for odd prime d");
  MeasurementMatrix m(dim);
  m.row_indices_.reserve(static_cast<std::size_t>((d + 1) * d));
  m.lines_.reserve(static_cast<std::size_t>((d + 1) * d));
  m.points_.reserve(static_cast<std::size_t>((d + 1) * d));
  int row = 0;
  for (int tau = 0; tau < d; ++tau) {
    for (int mu0 = 0; mu0 < d; ++mu0, ++row) {
      PhaseSpaceLine line{PhaseSpaceLine::Family::Sheared, tau, mu0};
      m.row_indices_.push_back(row);
      m.points_.push_back(line.points(d));
      m.lines_.push_back(std::move(line));
    }
  }
  for (int m0 = 0; m0 < d; ++m0, ++row) {
    PhaseSpaceLine line{PhaseSpaceLine::Family::Vertical, 0, m0};
    m.row_indices_.push_back(row);
    m.points_.push_back(line.points(d));
    m.lines_.push_back(std::move(line));
  }
  return m;
}

MeasurementMatrix sample_rows(const MeasurementMatrix& full, const SensingPlan& plan) {
  const int d = full.d();
  const int total = full.rows();
  if (static_cast<int>(full.row_indices_.size()) != (d + 1) * d)
    fail(ErrorCode::InvalidArgument, "sample_rows expects the full measurement matrix");
  if (plan.count < 1 || plan.count > total)
    fail(ErrorCode::InvalidArgument,
         "plan count must be in [1, " + std::to_string(total) + "]");

  Rng rng(plan.seed);
  std::vector<int> keep;
  if (plan.mode == SamplingMode::RowRandom) {
    keep = shuffled_prefix(rng, total, plan.count);
  } else {
    if (plan.count % d != 0)
      fail(ErrorCode::InvalidArgument,
           "family-random count must be divisible by d = " + std::to_string(d));
    const int families = plan.count / d;
    for (int f : shuffled_prefix(rng, d + 1, families))
      for (int i = 0; i < d; ++i) keep.push_back(f * d + i);
  }
  std::sort(keep.begin(), keep.end());
  return select_rows(full, keep, plan);
}

MeasurementMatrix select_rows(const MeasurementMatrix& full, const std::vector<int>& rows,
                              std::optional<SensingPlan> plan) {
  MeasurementMatrix sub(full.dim());
  sub.plan_ = plan;
  sub.row_indices_.reserve(rows.size());
  sub.lines_.reserve(rows.size());
  sub.points_.reserve(rows.size());
  for (int r : rows) {
    if (r < 0 || r >= full.rows())
      fail(ErrorCode::InvalidArgument, "row index " + std::to_string(r) + " out of range");
    sub.row_indices_.push_back(full.row_indices_[static_cast<std::size_t>(r)]);
    sub.lines_.push_back(full.lines_[static_cast<std::size_t>(r)]);
    sub.points_.push_back(full.points_[static_cast<std::size_t>(r)]);
  }
  return sub;
}

MeasurementVector measure(const DiscreteWigner& w, const MeasurementMatrix& rows) {
  if (!(w.dim() == rows.dim())) fail(ErrorCode::Dimension, "measure: grid/matrix dimension mismatch");
  MeasurementVector out;
  out.row_indices = rows.row_indices();
  out.values = rows.apply(w.raster());
  return out;
}

}  // namespace wigcs
