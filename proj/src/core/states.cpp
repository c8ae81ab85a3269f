#include "core/states.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "core/error.hpp"
#include "core/rng.hpp"

namespace wigcs {

namespace {

double sign_of(double v) { return v > 0.0 ? 1.0 : (v < 0.0 ? -1.0 : 0.0); }

}  // namespace

double hermite_he(int n, double x) {
  if (n < 0) fail(ErrorCode::InvalidArgument, "hermite_he requires n >= 0");
  if (n == 0) return 1.0;
  double prev = 1.0;
  double cur = x;
  for (int j = 1; j < n; ++j) {
    const double next = x * cur - j * prev;
    prev = cur;
    cur = next;
  }
  return cur;
}

std::vector<double> hermite_roots(int order) {
  if (order < 1) fail(ErrorCode::InvalidArgument, "hermite_roots requires order >= 1");
  RVector diag = RVector::Zero(order);
  RVector sub(order > 1 ? order - 1 : 0);
  for (int k = 1; k < order; ++k) sub(k - 1) = std::sqrt(static_cast<double>(k));
  Eigen::SelfAdjointEigenSolver<RMatrix> es;
  es.computeFromTridiagonal(diag, sub, Eigen::EigenvaluesOnly);
  const RVector& ev = es.eigenvalues();  // ascending
  return std::vector<double>(ev.data(), ev.data() + order);
}

HermiteBasis HermiteBasis::build(int order) {
  HermiteBasis basis;
  basis.order = order;
  basis.roots = hermite_roots(order);
  basis.values.resize(order + 1, order);
  for (int k = 0; k < order; ++k) {
    const double x = basis.roots[static_cast<std::size_t>(k)];
    basis.values(0, k) = 1.0;
    basis.values(1, k) = x;
    for (int j = 1; j < order; ++j)
      basis.values(j + 1, k) = x * basis.values(j, k) - j * basis.values(j - 1, k);
  }
  return basis;
}

GKernel g_kernel(const HermiteBasis& basis, double amplitude, int m_index) {
  const int order = basis.order;  // d = s + 1
  const int s = order - 1;
  if (m_index < 0 || m_index > s)
    fail(ErrorCode::InvalidArgument, "g_kernel index out of range");

  // 2*log|He_s(x_r)|; He_s never vanishes at a root of He_{s+1} (interlacing).
  std::vector<double> log_hs_sq(static_cast<std::size_t>(order));
  for (int r = 0; r < order; ++r)
    log_hs_sq[static_cast<std::size_t>(r)] = 2.0 * std::log(std::abs(basis.values(s, r)));

  const double log_prefix =
      2.0 * std::lgamma(static_cast<double>(s) + 1.0) - 3.0 * std::log(static_cast<double>(order));

  GKernel g;
  g[0].assign(static_cast<std::size_t>(s + 1), Complex(0.0, 0.0));
  g[1].assign(static_cast<std::size_t>(s + 1), Complex(0.0, 0.0));

  for (int k = 0; k <= s; ++k) {
    const int eta = (k <= m_index) ? 0 : 1;
    const int j = m_index - k + eta * order;
    Complex acc(0.0, 0.0);
    for (int p = 0; p < order; ++p) {
      const double vk = basis.values(k, p);
      if (vk == 0.0) continue;
      const double lp = std::log(std::abs(vk)) - log_hs_sq[static_cast<std::size_t>(p)];
      for (int q = 0; q < order; ++q) {
        const double vj = basis.values(j, q);
        if (vj == 0.0) continue;
        const double log_mag = log_prefix + lp + std::log(std::abs(vj)) -
                               log_hs_sq[static_cast<std::size_t>(q)];
        const double ang = (basis.roots[static_cast<std::size_t>(q)] -
                            basis.roots[static_cast<std::size_t>(p)]) *
                           amplitude;
        const double mag = sign_of(vk) * sign_of(vj) * std::exp(log_mag);
        acc += mag * Complex(std::cos(ang), std::sin(ang));
      }
    }
    g[static_cast<std::size_t>(eta)][static_cast<std::size_t>(k)] = acc;
  }
  return g;
}

DiscreteWigner coherent_wigner_closed_form(const CoherentStateParams& params) {
  if (!(params.amplitude >= 0.0) || !std::isfinite(params.amplitude))
    fail(ErrorCode::InvalidArgument, "coherent-state amplitude must be finite and >= 0");
  const int d = params.dim.value();
  const int s = d - 1;
  const HermiteBasis basis = HermiteBasis::build(d);

  std::vector<double> log_fact(static_cast<std::size_t>(2 * d + 1));
  for (int n = 0; n <= 2 * d; ++n)
    log_fact[static_cast<std::size_t>(n)] = std::lgamma(static_cast<double>(n) + 1.0);

  RMatrix values(d, d);
  double max_imag = 0.0;
  for (int m = 0; m < d; ++m) {
    const int big_m = (2 * m) % d;
    const GKernel g = g_kernel(basis, params.amplitude, big_m);

    // Per-k weight and harmonic: the two k-ranges share one loop, with the
    // wrapped range (eta = 1) shifting both the factorial index and the
    // harmonic by d.
    std::vector<Complex> weight(static_cast<std::size_t>(s + 1));
    std::vector<int> freq(static_cast<std::size_t>(s + 1));
    for (int k = 0; k <= s; ++k) {
      const int eta = (k <= big_m) ? 0 : 1;
      const int j = big_m - k + eta * d;
      const double fac = std::exp(-0.5 * (log_fact[static_cast<std::size_t>(k)] +
                                          log_fact[static_cast<std::size_t>(j)]));
      weight[static_cast<std::size_t>(k)] =
          fac * g[static_cast<std::size_t>(eta)][static_cast<std::size_t>(k)];
      freq[static_cast<std::size_t>(k)] = 2 * k - big_m - eta * d;
    }

    for (int mu = 0; mu < d; ++mu) {
      // Phase direction of the mu harmonic matches the forward transform's
      // kernel sign; validated against the truncated-displacement route.
      const double theta =
          -2.0 * std::numbers::pi * mu / d - params.phase + std::numbers::pi / 2.0;
      Complex acc(0.0, 0.0);
      for (int k = 0; k <= s; ++k) {
        const double a = freq[static_cast<std::size_t>(k)] * theta;
        acc += Complex(std::cos(a), std::sin(a)) * weight[static_cast<std::size_t>(k)];
      }
      max_imag = std::max(max_imag, std::abs(acc.imag()));
      values(m, mu) = acc.real();
    }
  }
  if (max_imag > 1e-8)
    fail(ErrorCode::Tolerance,
         "closed-form coherent Wigner grid has imaginary residue " + std::to_string(max_imag));
  return DiscreteWigner(params.dim, std::move(values));
}

DensityMatrix coherent_density(const CoherentStateParams& params) {
  if (!(params.amplitude >= 0.0) || !std::isfinite(params.amplitude))
    fail(ErrorCode::InvalidArgument, "coherent-state amplitude must be finite and >= 0");
  const int d = params.dim.value();

  CMatrix lowering = CMatrix::Zero(d, d);
  for (int n = 1; n < d; ++n) lowering(n - 1, n) = std::sqrt(static_cast<double>(n));

  const Complex alpha = std::polar(params.amplitude, params.phase);
  const CMatrix generator = alpha * lowering.adjoint() - std::conj(alpha) * lowering;

  // The generator is anti-Hermitian, so -i*generator is Hermitian and the
  // displacement exp(generator) follows from its spectral decomposition.
  Eigen::SelfAdjointEigenSolver<CMatrix> es(Complex(0.0, -1.0) * generator);
  const CMatrix& u = es.eigenvectors();
  Eigen::VectorXcd column = u.adjoint().col(0);
  for (int i = 0; i < d; ++i)
    column(i) *= std::polar(1.0, es.eigenvalues()(i));
  Eigen::VectorXcd psi = u * column;
  psi.normalize();

  CMatrix entries(d, d);
  for (int a = 0; a < d; ++a)
    for (int b = 0; b < d; ++b) entries(a, b) = psi(a) * std::conj(psi(b));
  return DensityMatrix::from_entries(params.dim, std::move(entries));
}

DensityMatrix fock_density(Dimension dim, int level) {
  const int d = dim.value();
  if (level < 0 || level >= d)
    fail(ErrorCode::InvalidArgument,
         "Fock level " + std::to_string(level) + " out of range for d = " + std::to_string(d));
  CMatrix entries = CMatrix::Zero(d, d);
  entries(level, level) = Complex(1.0, 0.0);
  return DensityMatrix::from_entries(dim, std::move(entries));
}

DensityMatrix maximally_mixed(Dimension dim) {
  const int d = dim.value();
  CMatrix entries = CMatrix::Zero(d, d);
  for (int a = 0; a < d; ++a) entries(a, a) = Complex(1.0 / d, 0.0);
  return DensityMatrix::from_entries(dim, std::move(entries));
}

DensityMatrix random_density(Dimension dim, std::uint64_t seed, int rank) {
  const int d = dim.value();
  if (rank < 1 || rank > d)
    fail(ErrorCode::InvalidArgument, "random_density rank must be in [1, d]");
  Rng rng(seed);
  CMatrix g(d, rank);
  for (int a = 0; a < d; ++a)
    for (int r = 0; r < rank; ++r) {
      const double re = rng.normal();
      const double im = rng.normal();
      g(a, r) = Complex(re, im);
    }

  // Accumulate G*G^dag entrywise so the result is Hermitian to the last bit.
  CMatrix entries(d, d);
  double trace = 0.0;
  for (int a = 0; a < d; ++a) {
    for (int b = a; b < d; ++b) {
      Complex acc(0.0, 0.0);
      for (int r = 0; r < rank; ++r) acc += g(a, r) * std::conj(g(b, r));
      if (a == b) {
        entries(a, a) = Complex(acc.real(), 0.0);
        trace += acc.real();
      } else {
        entries(a, b) = acc;
        entries(b, a) = std::conj(acc);
      }
    }
  }
  entries /= trace;
  return DensityMatrix::from_entries(dim, std::move(entries));
}

}  // namespace wigcs
