#ifndef WIGCS_CORE_STATES_HPP
#define WIGCS_CORE_STATES_HPP

#include <array>
#include <cstdint>
#include <vector>

#include "core/phase_space.hpp"

namespace wigcs {

// Probabilists' Hermite polynomial He_n(x) by the three-term recurrence
// He_0 = 1, He_1 = x, He_{n+1} = x*He_n - n*He_{n-1}.
double hermite_he(int n, double x);

// All `order` real zeros of He_order, ascending, as eigenvalues of the
// symmetric tridiagonal Jacobi matrix with zero diagonal and off-diagonal
// sqrt(1), ..., sqrt(order-1).
std::vector<double> hermite_roots(int order);

// Roots of He_order together with the table He_j(x_k) for j in [0, order],
// precomputed once per dimension and shared read-only.
struct HermiteBasis {
  int order = 0;
  std::vector<double> roots;  // ascending
  RMatrix values;             // (order+1) x order, values(j, k) = He_j(x_k)

  static HermiteBasis build(int order);
};

struct CoherentStateParams {
  Dimension dim;
  double amplitude = 0.0;  // |alpha| >= 0
  double phase = 0.0;      // radians
};

// Double-sum kernel of the coherent-state closed form, G[eta][k] for
// eta in {0,1}; entries outside each eta's valid k range are zero.
// Accumulated as log-magnitude plus sign and unit phase, exponentiated once
// per (p,q) term, so the factorial/Hermite ratios never overflow.
using GKernel = std::array<std::vector<Complex>, 2>;
GKernel g_kernel(const HermiteBasis& basis, double amplitude, int m_index);

// Closed-form Wigner grid of the finite-dimensional coherent state
// ||alpha| e^{i phi}>_s with s = d-1. Fails loudly when the imaginary
// residue exceeds 1e-8 (signals a phase-convention mismatch).
DiscreteWigner coherent_wigner_closed_form(const CoherentStateParams& params);

// Truncated-displacement coherent state: exp(alpha*a^dag - conj(alpha)*a)
// applied to |0> in d levels, via spectral decomposition of the generator.
// Independent of the closed form above; the two are cross-checked in tests.
DensityMatrix coherent_density(const CoherentStateParams& params);

// |level><level|.
DensityMatrix fock_density(Dimension dim, int level);

// I/d.
DensityMatrix maximally_mixed(Dimension dim);

// G*G^dag / tr(G*G^dag) with G a d x rank matrix of seeded standard-normal
// real and imaginary parts; deterministic per seed.
DensityMatrix random_density(Dimension dim, std::uint64_t seed, int rank);

}  // namespace wigcs

#endif
