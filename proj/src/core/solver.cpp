#include "core/solver.hpp"

#include <cmath>
#include <memory>
#include <numbers>
#include <string>

#include "core/error.hpp"
#include "core/rng.hpp"

namespace wigcs {

namespace {

// Auto threshold: mu = kAutoMuFactor * ||A^T y||_inf. The factor must stay
// well above 1: the iteration's limit minimizes mu*||u||_1 + ||u||^2/(2*delta)
// on the feasible set, so a small mu biases the solution away from the l1
// minimizer toward the least-norm one.
constexpr double kAutoMuFactor = 20.0;

constexpr std::uint64_t kPowerIterationSeed = 0x9e3779b97f4a7c15ULL;

}  // namespace

double shrink(double x, double t) {
  if (x > t) return x - t;
  if (x < -t) return x + t;
  return 0.0;
}

RVector shrink(const RVector& x, double t) {
  RVector out(x.size());
  for (Eigen::Index i = 0; i < x.size(); ++i) out(i) = shrink(x(i), t);
  return out;
}

LinearOperator LinearOperator::from_dense(RMatrix a) {
  auto m = std::make_shared<RMatrix>(std::move(a));
  LinearOperator op;
  op.rows = static_cast<int>(m->rows());
  op.cols = static_cast<int>(m->cols());
  op.apply = [m](const RVector& x) -> RVector { return (*m) * x; };
  op.apply_adjoint = [m](const RVector& r) -> RVector { return m->transpose() * r; };
  return op;
}

double spectral_norm_sq(const LinearOperator& op) {
  if (op.rows < 1 || op.cols < 1)
    fail(ErrorCode::InvalidArgument, "spectral_norm_sq requires a non-empty operator");
  Rng rng(kPowerIterationSeed);
  RVector b(op.cols);
  for (Eigen::Index i = 0; i < b.size(); ++i) b(i) = rng.normal();
  b.normalize();

  double prev = -1.0;
  for (int it = 0; it < 10000; ++it) {
    const RVector ab = op.apply(b);
    const double est = ab.squaredNorm();  // Rayleigh quotient of A^T A at unit b
    if (est == 0.0)
      fail(ErrorCode::InvalidArgument, "spectral_norm_sq of a zero operator");
    if (prev >= 0.0 && std::abs(est - prev) <= 1e-6 * est) return est;
    prev = est;
    RVector w = op.apply_adjoint(ab);
    const double wn = w.norm();
    if (wn == 0.0) fail(ErrorCode::InvalidArgument, "spectral_norm_sq of a zero operator");
    b = w / wn;
  }
  fail(ErrorCode::Internal, "spectral_norm_sq did not converge within 10000 iterations");
}

double spectral_norm_sq(const RMatrix& a) {
  return spectral_norm_sq(LinearOperator::from_dense(a));
}

SparseBasis::SparseBasis(Kind kind, int n) : kind_(kind), n_(n) {
  if (n < 1) fail(ErrorCode::InvalidArgument, "basis length must be positive");
  if (kind_ == Kind::Cosine) {
    analysis_.resize(n, n);
    const double c0 = std::sqrt(1.0 / n);
    const double ck = std::sqrt(2.0 / n);
    for (int k = 0; k < n; ++k)
      for (int j = 0; j < n; ++j)
        analysis_(k, j) =
            (k == 0 ? c0 : ck) * std::cos(std::numbers::pi * k * (2 * j + 1) / (2.0 * n));
  }
}

RVector SparseBasis::synthesize(const RVector& coeffs) const {
  if (coeffs.size() != n_) fail(ErrorCode::Dimension, "basis synthesize: wrong length");
  if (kind_ == Kind::Pixel) return coeffs;
  return analysis_.transpose() * coeffs;
}

RVector SparseBasis::analyze(const RVector& x) const {
  if (x.size() != n_) fail(ErrorCode::Dimension, "basis analyze: wrong length");
  if (kind_ == Kind::Pixel) return x;
  return analysis_ * x;
}

BregmanResult linearized_bregman(const LinearOperator& op, const RVector& y,
                                 const BregmanConfig& cfg) {
  if (y.size() != op.rows) fail(ErrorCode::Dimension, "linearized_bregman: rhs length mismatch");
  if (!(cfg.mu_threshold > 0.0) || !(cfg.delta_step > 0.0) || cfg.max_iters < 1 ||
      !(cfg.residual_tol >= 0.0))
    fail(ErrorCode::InvalidArgument, "linearized_bregman: invalid configuration");

  BregmanResult res;
  res.u = RVector::Zero(op.cols);
  const double ny = y.norm();
  if (ny == 0.0) {
    res.iterations = 1;
    return res;
  }

  RVector v = RVector::Zero(op.cols);
  long updates = 0;
  while (true) {
    const RVector r = y - op.apply(res.u);
    res.relative_residual = r.norm() / ny;
    if (res.relative_residual <= cfg.residual_tol) {
      res.iterations = updates;
      res.status = SolveStatus::Converged;
      return res;
    }
    if (updates >= cfg.max_iters) {
      res.iterations = updates;
      res.status = SolveStatus::MaxIters;
      return res;
    }
    v += op.apply_adjoint(r);
    res.u = cfg.delta_step * shrink(v, cfg.mu_threshold);
    ++updates;
    if (!res.u.allFinite())
      fail(ErrorCode::Diverged,
           "linearized_bregman produced a non-finite iterate at iteration " +
               std::to_string(updates),
           updates);
  }
}

namespace {

bool next_combination(std::vector<int>& c, int n) {
  const int k = static_cast<int>(c.size());
  for (int i = k - 1; i >= 0; --i) {
    if (c[static_cast<std::size_t>(i)] < n - k + i) {
      ++c[static_cast<std::size_t>(i)];
      for (int j = i + 1; j < k; ++j)
        c[static_cast<std::size_t>(j)] = c[static_cast<std::size_t>(j - 1)] + 1;
      return true;
    }
  }
  return false;
}

}  // namespace

RVector l1_oracle(const RMatrix& a, const RVector& y, int k_max) {
  const int n = static_cast<int>(a.cols());
  if (n > 24 || k_max > 3 || k_max < 0)
    fail(ErrorCode::InvalidArgument, "l1_oracle is limited to <= 24 columns and k_max <= 3");
  if (y.size() != a.rows()) fail(ErrorCode::Dimension, "l1_oracle: rhs length mismatch");

  const double ny = y.norm();
  RVector zero = RVector::Zero(n);
  if (ny == 0.0) return zero;

  const double feas_tol = 1e-9 * ny;
  bool found = false;
  double best_l1 = 0.0;
  RVector best = zero;

  for (int k = 1; k <= k_max; ++k) {
    std::vector<int> support(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) support[static_cast<std::size_t>(i)] = i;
    do {
      RMatrix sub(a.rows(), k);
      for (int i = 0; i < k; ++i) sub.col(i) = a.col(support[static_cast<std::size_t>(i)]);
      Eigen::ColPivHouseholderQR<RMatrix> qr(sub);
      const RVector coeff = qr.solve(y);
      if ((sub * coeff - y).norm() > feas_tol) continue;
      const double l1 = coeff.cwiseAbs().sum();
      if (!found || l1 < best_l1) {
        found = true;
        best_l1 = l1;
        best = zero;
        for (int i = 0; i < k; ++i) best(support[static_cast<std::size_t>(i)]) = coeff(i);
      }
    } while (next_combination(support, n));
  }
  if (!found)
    fail(ErrorCode::NoSparseSolution,
         "no support of size <= " + std::to_string(k_max) + " fits the data exactly");
  return best;
}

LeastSquaresResult least_squares_baseline(const RMatrix& a, const RVector& y) {
  if (y.size() != a.rows()) fail(ErrorCode::Dimension, "least_squares_baseline: rhs mismatch");
  Eigen::ColPivHouseholderQR<RMatrix> qr(a);
  if (qr.rank() < a.cols())
    fail(ErrorCode::RankDeficient,
         "matrix has numerical rank " + std::to_string(qr.rank()) + " < " +
             std::to_string(a.cols()) + " columns",
         qr.rank());
  LeastSquaresResult res;
  res.x = qr.solve(y);
  res.residual = (a * res.x - y).norm();
  return res;
}

ReconstructionReport reconstruct(const MeasurementVector& y, const MeasurementMatrix& rows,
                                 const SparseBasis& basis, const BregmanConfig& cfg) {
  if (static_cast<int>(y.values.size()) != rows.rows())
    fail(ErrorCode::Dimension, "reconstruct: measurement/matrix row mismatch");
  if (!y.row_indices.empty() && y.row_indices != rows.row_indices())
    fail(ErrorCode::Dimension,
         "reconstruct: measurement row indices do not match the sensing matrix");
  if (basis.size() != rows.cols())
    fail(ErrorCode::Dimension, "reconstruct: basis length must be d^2");

  LinearOperator op;
  op.rows = rows.rows();
  op.cols = rows.cols();
  op.apply = [&](const RVector& c) -> RVector { return rows.apply(basis.synthesize(c)); };
  op.apply_adjoint = [&](const RVector& r) -> RVector {
    return basis.analyze(rows.apply_adjoint(r));
  };

  BregmanConfig resolved = cfg;
  if (resolved.max_iters < 1) resolved.max_iters = 20000;
  if (!(resolved.residual_tol > 0.0)) resolved.residual_tol = 1e-6;
  if (!(resolved.delta_step > 0.0))
    resolved.delta_step = 1.8 / (1.01 * spectral_norm_sq(op));
  if (!(resolved.mu_threshold > 0.0)) {
    const double scale = op.apply_adjoint(y.values).cwiseAbs().maxCoeff();
    resolved.mu_threshold = scale > 0.0 ? kAutoMuFactor * scale : 1.0;
  }

  const BregmanResult sol = linearized_bregman(op, y.values, resolved);
  RVector w_raster = basis.synthesize(sol.u);
  if (!w_raster.allFinite())
    fail(ErrorCode::Diverged, "reconstruct produced a non-finite grid", sol.iterations);

  return ReconstructionReport{
      DiscreteWigner::from_raster(rows.dim(), w_raster),
      sol.u,
      sol.iterations,
      sol.relative_residual,
      sol.status,
      rows.plan(),
      rows.row_indices(),
      basis.kind(),
      resolved,
  };
}

}  // namespace wigcs
