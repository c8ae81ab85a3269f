#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>

#include "core/error.hpp"
#include "core/phase_space.hpp"
#include "core/states.hpp"

using namespace wigcs;

namespace {

// Independent check value: He_5(x) = x^5 - 10 x^3 + 15 x.
double he5(double x) { return std::pow(x, 5) - 10 * std::pow(x, 3) + 15 * x; }

}  // namespace

TEST_CASE("hermite_he matches low-order closed forms") {
  CHECK(hermite_he(0, 1.7) == 1.0);
  CHECK(hermite_he(1, -2.5) == -2.5);
  CHECK(hermite_he(2, 2.0) == doctest::Approx(3.0));           // x^2 - 1
  CHECK(hermite_he(3, 2.0) == doctest::Approx(2.0));           // x^3 - 3x
  CHECK(hermite_he(5, 1.0) == doctest::Approx(he5(1.0)));      // = 6
  CHECK(hermite_he(5, 2.0) == doctest::Approx(he5(2.0)));      // = -18
  CHECK(hermite_he(5, -1.3) == doctest::Approx(he5(-1.3)).epsilon(1e-13));
  CHECK_THROWS_AS(hermite_he(-1, 0.0), Error);
}

TEST_CASE("hermite roots for tiny orders") {
  auto r1 = hermite_roots(1);
  REQUIRE(r1.size() == 1);
  CHECK(std::abs(r1[0]) < 1e-14);

  auto r2 = hermite_roots(2);
  REQUIRE(r2.size() == 2);
  CHECK(r2[0] == doctest::Approx(-1.0).epsilon(1e-12));
  CHECK(r2[1] == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("hermite roots: residual, symmetry and ordering at order 19") {
  const int n = 19;
  auto roots = hermite_roots(n);
  REQUIRE(roots.size() == static_cast<std::size_t>(n));
  for (int k = 0; k + 1 < n; ++k) CHECK(roots[k] < roots[k + 1]);
  for (int k = 0; k < n; ++k)
    CHECK(std::abs(roots[k] + roots[n - 1 - k]) < 1e-10);
  for (int k = 0; k < n; ++k) {
    const double x = roots[k];
    // local scale = |He_n'(x)| = n * |He_{n-1}(x)|, so the bound means the
    // root itself is placed to 1e-9
    const double scale = n * std::abs(hermite_he(n - 1, x));
    CHECK(std::abs(hermite_he(n, x)) <= 1e-9 * std::max(1.0, scale));
  }
}

TEST_CASE("hermite basis tabulates the recurrence") {
  auto basis = HermiteBasis::build(7);
  REQUIRE(basis.roots.size() == 7);
  CHECK(basis.values.rows() == 8);
  for (int j = 0; j <= 7; ++j)
    for (int k = 0; k < 7; ++k)
      CHECK(basis.values(j, k) == doctest::Approx(hermite_he(j, basis.roots[k])).epsilon(1e-12));
}

TEST_CASE("coherent kernel entries are finite at paper scale") {
  auto basis = HermiteBasis::build(19);
  for (int m_index = 0; m_index < 19; ++m_index) {
    auto g = g_kernel(basis, 1.472, m_index);
    for (const auto& row : g)
      for (const auto& v : row) {
        CHECK(std::isfinite(v.real()));
        CHECK(std::isfinite(v.imag()));
      }
  }
}

TEST_CASE("zero displacement gives the vacuum") {
  auto rho = coherent_density({Dimension(5), 0.0, 0.0});
  CHECK((rho.entries() - fock_density(Dimension(5), 0).entries()).cwiseAbs().maxCoeff() < 1e-14);

  auto w = coherent_wigner_closed_form({Dimension(5), 0.0, 1.3});
  auto vac = wigner_from_density(fock_density(Dimension(5), 0));
  CHECK((w.values() - vac.values()).cwiseAbs().maxCoeff() < 1e-8);
}

TEST_CASE("coherent density is a pure state") {
  auto rho = coherent_density({Dimension(19), 1.472, 0.7});
  Eigen::SelfAdjointEigenSolver<CMatrix> es(rho.entries(), Eigen::EigenvaluesOnly);
  const auto& ev = es.eigenvalues();  // ascending
  CHECK(ev(18) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(std::abs(ev(17)) < 1e-12);
  CHECK(rho.is_positive_semidefinite());
}

TEST_CASE("closed form agrees with the displacement route") {
  for (int d : {3, 5, 7}) {
    for (double amp : {0.0, 0.5, 1.472}) {
      for (double ph : {0.0, std::numbers::pi / 3}) {
        CoherentStateParams p{Dimension(d), amp, ph};
        auto direct = coherent_wigner_closed_form(p);
        auto via_rho = wigner_from_density(coherent_density(p));
        CHECK((direct.values() - via_rho.values()).cwiseAbs().maxCoeff() < 1e-8);
      }
    }
  }
}

TEST_CASE("closed-form grid is normalized with correct marginals") {
  CoherentStateParams p{Dimension(19), 1.472, 0.0};
  auto w = coherent_wigner_closed_form(p);
  CHECK(std::abs(w.total() - 1.0) < 1e-10);
  auto rho = coherent_density(p);
  auto marg = number_marginal(w);
  for (int m = 0; m < 19; ++m)
    CHECK(std::abs(marg(m) - rho(m, m).real()) < 1e-10);
}

TEST_CASE("fock states") {
  auto v = fock_density(Dimension(3), 0);
  CHECK(v(0, 0) == Complex(1.0, 0.0));
  CHECK(std::abs(v(1, 1)) == 0.0);

  auto top = fock_density(Dimension(5), 4);
  CHECK(top(4, 4) == Complex(1.0, 0.0));

  CHECK_THROWS_AS(fock_density(Dimension(5), 5), Error);
  CHECK_THROWS_AS(fock_density(Dimension(5), -1), Error);
}

TEST_CASE("random densities are deterministic, trace one and PSD") {
  Dimension d7(7);
  auto a = random_density(d7, 123, 7);
  auto b = random_density(d7, 123, 7);
  CHECK((a.entries() - b.entries()).cwiseAbs().maxCoeff() == 0.0);

  auto c = random_density(d7, 124, 7);
  CHECK((a.entries() - c.entries()).cwiseAbs().maxCoeff() > 0.0);

  CHECK(std::abs(a.entries().trace() - Complex(1.0, 0.0)) < 1e-12);
  CHECK(a.is_positive_semidefinite());

  // rank 1 => pure => tr(rho^2) = 1
  auto pure = random_density(d7, 5, 1);
  CHECK(std::abs((pure.entries() * pure.entries()).trace().real() - 1.0) < 1e-10);

  CHECK_THROWS_AS(random_density(d7, 1, 0), Error);
  CHECK_THROWS_AS(random_density(d7, 1, 8), Error);
}
