#ifndef WIGCS_CORE_SOLVER_HPP
#define WIGCS_CORE_SOLVER_HPP

#include <functional>
#include <optional>
#include <vector>

#include "core/phase_space.hpp"
#include "core/tomography.hpp"

namespace wigcs {

// Soft threshold sign(x) * max(|x| - t, 0).
double shrink(double x, double t);
RVector shrink(const RVector& x, double t);

// Matrix-free operator; the solver only ever needs mat-vec and adjoint.
struct LinearOperator {
  int rows = 0;
  int cols = 0;
  std::function<RVector(const RVector&)> apply;
  std::function<RVector(const RVector&)> apply_adjoint;

  static LinearOperator from_dense(RMatrix a);
};

// Largest singular value squared, by power iteration on A^T A with a fixed
// seeded start vector, to relative tolerance 1e-6. Fails after 10000
// iterations without convergence.
double spectral_norm_sq(const LinearOperator& op);
double spectral_norm_sq(const RMatrix& a);

// Orthonormal sparsifying basis over the raster-ordered length-n vector:
// the pixel identity or the type-II discrete cosine transform.
class SparseBasis {
 public:
  enum class Kind { Pixel, Cosine };

  SparseBasis(Kind kind, int n);

  Kind kind() const { return kind_; }
  int size() const { return n_; }

  RVector synthesize(const RVector& coeffs) const;  // Psi x'
  RVector analyze(const RVector& x) const;          // Psi^T x

 private:
  Kind kind_;
  int n_;
  RMatrix analysis_;  // Cosine only
};

// Iteration parameters. Non-positive mu/delta request auto-configuration:
// delta = 1.8 / (1.01 * spectral_norm_sq(A)) and mu proportional to
// ||A^T y||_inf so the threshold tracks the data's scale.
struct BregmanConfig {
  double mu_threshold = -1.0;
  double delta_step = -1.0;
  long max_iters = 20000;
  double residual_tol = 1e-6;
};

enum class SolveStatus { Converged, MaxIters };

struct BregmanResult {
  RVector u;
  long iterations = 0;
  double relative_residual = 0.0;
  SolveStatus status = SolveStatus::Converged;
};

// v <- v + A^T(y - A u); u <- delta * shrink(v, mu), from zero, until the
// relative residual ||y - A u|| / ||y|| meets residual_tol or max_iters is
// reached. Non-finite iterates raise Diverged with the iteration number.
BregmanResult linearized_bregman(const LinearOperator& op, const RVector& y,
                                 const BregmanConfig& cfg);

// Exhaustive minimum-l1 search over supports of size <= k_max (toy scale:
// at most 24 columns, k_max <= 3). Keeps exactly-feasible candidates
// (residual <= 1e-9 ||y||) and breaks ties by smaller support, then
// lexicographic support order.
RVector l1_oracle(const RMatrix& a, const RVector& y, int k_max);

struct LeastSquaresResult {
  RVector x;
  double residual = 0.0;
};

// Full-column-rank least squares via rank-revealing QR; RankDeficient
// (with the numerical rank) otherwise.
LeastSquaresResult least_squares_baseline(const RMatrix& a, const RVector& y);

struct ReconstructionReport {
  DiscreteWigner w_hat;
  RVector coefficients;
  long iterations = 0;
  double relative_residual = 0.0;
  SolveStatus status = SolveStatus::Converged;
  std::optional<SensingPlan> plan;
  std::vector<int> row_indices;
  SparseBasis::Kind basis = SparseBasis::Kind::Pixel;
  BregmanConfig config;  // resolved values actually used
};

// Composes the sensing rows with the basis synthesis, solves for the sparse
// coefficients with linearized_bregman, and maps back to a Wigner grid.
ReconstructionReport reconstruct(const MeasurementVector& y, const MeasurementMatrix& rows,
                                 const SparseBasis& basis,
                                 const BregmanConfig& cfg = BregmanConfig{});

}  // namespace wigcs

#endif
