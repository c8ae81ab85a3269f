#include "core/phase_space.hpp"

#include <cmath>
#include <numbers>
#include <string>
#include <vector>

#include "core/error.hpp"

namespace wigcs {

namespace {

constexpr double kHermitianTol = 1e-12;
constexpr double kTraceTol = 1e-12;
constexpr double kImagTol = 1e-12;

// exp(-2*pi*i*k/d) for k = 0..d-1; indexing by (2*mu*n) mod d keeps the
// kernel exactly periodic instead of accumulating large phase arguments.
std::vector<Complex> unit_roots_conj(int d) {
  std::vector<Complex> w(static_cast<std::size_t>(d));
  for (int k = 0; k < d; ++k) {
    const double a = -2.0 * std::numbers::pi * k / d;
    w[static_cast<std::size_t>(k)] = Complex(std::cos(a), std::sin(a));
  }
  return w;
}

}  // namespace

Dimension::Dimension(int d) : d_(d) {
  if (d < 3 || d % 2 == 0)
    fail(ErrorCode::Dimension,
         "dimension must be an odd integer >= 3, got " + std::to_string(d));
}

bool Dimension::is_prime() const {
  for (int p = 3; p * p <= d_; p += 2)
    if (d_ % p == 0) return false;
  return true;
}

DensityMatrix DensityMatrix::from_entries(Dimension dim, CMatrix entries) {
  const int d = dim.value();
  if (entries.rows() != d || entries.cols() != d)
    fail(ErrorCode::Dimension, "density matrix entries must be d x d");
  const double herm = (entries - entries.adjoint().eval()).cwiseAbs().maxCoeff();
  if (herm > kHermitianTol)
    fail(ErrorCode::NotHermitian,
         "density matrix is not Hermitian (residue " + std::to_string(herm) + ")");
  const double tr = std::abs(entries.trace() - Complex(1.0, 0.0));
  if (tr > kTraceTol)
    fail(ErrorCode::InvalidArgument,
         "density matrix trace differs from 1 by " + std::to_string(tr));
  return DensityMatrix(dim, std::move(entries));
}

double DensityMatrix::smallest_eigenvalue() const {
  Eigen::SelfAdjointEigenSolver<CMatrix> es(entries_, Eigen::EigenvaluesOnly);
  return es.eigenvalues().minCoeff();
}

DiscreteWigner::DiscreteWigner(Dimension dim, RMatrix values)
    : dim_(dim), values_(std::move(values)) {
  const int d = dim_.value();
  if (values_.rows() != d || values_.cols() != d)
    fail(ErrorCode::Dimension, "Wigner grid must be d x d");
}

RVector DiscreteWigner::raster() const {
  const int d = dim_.value();
  RVector v(d * d);
  for (int m = 0; m < d; ++m)
    for (int mu = 0; mu < d; ++mu) v(m * d + mu) = values_(m, mu);
  return v;
}

DiscreteWigner DiscreteWigner::from_raster(Dimension dim, const RVector& v) {
  const int d = dim.value();
  if (v.size() != d * d)
    fail(ErrorCode::Dimension, "raster vector must have length d^2");
  RMatrix values(d, d);
  for (int m = 0; m < d; ++m)
    for (int mu = 0; mu < d; ++mu) values(m, mu) = v(m * d + mu);
  return DiscreteWigner(dim, std::move(values));
}

DiscreteWigner wigner_from_density(const DensityMatrix& rho) {
  const int d = rho.dim().value();
  const auto w = unit_roots_conj(d);
  RMatrix values(d, d);
  double max_imag = 0.0;
  for (int m = 0; m < d; ++m) {
    for (int mu = 0; mu < d; ++mu) {
      Complex acc(0.0, 0.0);
      for (int n = 0; n < d; ++n) {
        const int a = ((m - n) % d + d) % d;
        const int b = (m + n) % d;
        acc += w[static_cast<std::size_t>((2 * mu * n) % d)] * rho(a, b);
      }
      acc /= static_cast<double>(d);
      max_imag = std::max(max_imag, std::abs(acc.imag()));
      values(m, mu) = acc.real();
    }
  }
  if (max_imag > kImagTol)
    fail(ErrorCode::Tolerance,
         "Wigner transform left an imaginary residue of " + std::to_string(max_imag));
  return DiscreteWigner(rho.dim(), std::move(values));
}

DensityMatrix density_from_wigner(const DiscreteWigner& w) {
  const int d = w.dim().value();
  const auto ph = unit_roots_conj(d);
  const int inv2 = (d + 1) / 2;  // 2 * inv2 = d + 1 = 1 (mod d)
  CMatrix entries(d, d);
  for (int a = 0; a < d; ++a) {
    for (int b = 0; b < d; ++b) {
      const int m = ((a + b) * inv2) % d;
      const int n = ((m - a) % d + d) % d;
      Complex acc(0.0, 0.0);
      for (int mu = 0; mu < d; ++mu)
        acc += std::conj(ph[static_cast<std::size_t>((2 * mu * n) % d)]) * w(m, mu);
      entries(a, b) = acc;
    }
  }
  return DensityMatrix::from_entries(w.dim(), std::move(entries));
}

RVector number_marginal(const DiscreteWigner& w) {
  return w.values().rowwise().sum();
}

}  // namespace wigcs
