#ifndef WIGCS_CORE_PHASE_SPACE_HPP
#define WIGCS_CORE_PHASE_SPACE_HPP

#include <Eigen/Dense>
#include <complex>

namespace wigcs {

using Complex = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;
using RMatrix = Eigen::MatrixXd;
using RVector = Eigen::VectorXd;

// Hilbert-space dimension for the discrete phase space. Must be odd and >= 3
// so that the phase kernel sums cleanly and 2 is invertible mod d; the
// tomography layer additionally restricts to primes.
class Dimension {
 public:
  explicit Dimension(int d);

  int value() const { return d_; }
  bool is_prime() const;

  friend bool operator==(Dimension a, Dimension b) { return a.d_ == b.d_; }

 private:
  int d_;
};

// d x d Hermitian, unit-trace operator. Hermiticity and trace are enforced at
// construction; positive semidefiniteness is a separate explicit check so
// that intermediate linear-algebra outputs remain representable.
class DensityMatrix {
 public:
  static DensityMatrix from_entries(Dimension dim, CMatrix entries);

  Dimension dim() const { return dim_; }
  const CMatrix& entries() const { return entries_; }
  Complex operator()(int a, int b) const { return entries_(a, b); }

  double smallest_eigenvalue() const;
  bool is_positive_semidefinite(double tol = 1e-10) const {
    return smallest_eigenvalue() >= -tol;
  }

 private:
  DensityMatrix(Dimension dim, CMatrix entries)
      : dim_(dim), entries_(std::move(entries)) {}

  Dimension dim_;
  CMatrix entries_;
};

// Real d x d quasi-probability grid W(m, mu), m the number/spin label (row),
// mu the quantized phase label (column). Raster order of the flattened grid
// is column index = m*d + mu everywhere in this library.
class DiscreteWigner {
 public:
  DiscreteWigner(Dimension dim, RMatrix values);

  Dimension dim() const { return dim_; }
  const RMatrix& values() const { return values_; }
  double operator()(int m, int mu) const { return values_(m, mu); }

  RVector raster() const;
  static DiscreteWigner from_raster(Dimension dim, const RVector& v);

  double total() const { return values_.sum(); }

 private:
  Dimension dim_;
  RMatrix values_;
};

// W(m,mu) = (1/d) sum_n exp(-4*pi*i*mu*n/d) rho[(m-n) mod d][(m+n) mod d].
// Fails when the imaginary residue of the sums exceeds 1e-12.
DiscreteWigner wigner_from_density(const DensityMatrix& rho);

// Exact inverse of wigner_from_density for odd d.
DensityMatrix density_from_wigner(const DiscreteWigner& w);

// p[m] = sum_mu W(m, mu); equals diag(rho) for transform outputs.
RVector number_marginal(const DiscreteWigner& w);

}  // namespace wigcs

#endif
