#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cmath>
#include <numbers>
#include <random>

#include "dilute1d/free_fermi.hpp"

using namespace dilute1d;

TEST_CASE("orbitals are orthonormal") {
  const fermi::FreeFermiBox box{6, 3.0};
  const int quad = 4000;
  for (int m = 1; m <= 6; ++m)
    for (int n = m; n <= 6; ++n) {
      double s = 0.0;
      for (int i = 0; i < quad; ++i) {
        const double x = (i + 0.5) * box.box_l / quad;
        s += box.orbital(m, x) * box.orbital(n, x);
      }
      s *= box.box_l / quad;
      CHECK(s == doctest::Approx(m == n ? 1.0 : 0.0).epsilon(1e-6));
    }
}

TEST_CASE("gamma1 diagonal integrates to N") {
  const fermi::FreeFermiBox box{5, 7.0};
  const int quad = 4000;
  double s = 0.0;
  for (int i = 0; i < quad; ++i) {
    const double x = (i + 0.5) * box.box_l / quad;
    s += box.gamma1(x, x);
  }
  s *= box.box_l / quad;
  CHECK(s == doctest::Approx(5.0).epsilon(1e-8));
}

TEST_CASE("closed-form ground energy") {
  // sum (n pi/L)^2 = (pi/L)^2 N(N+1)(2N+1)/6
  const double e = fermi::free_fermi_energy(4, 2.0);
  const double expect =
      std::pow(std::numbers::pi / 2.0, 2) * 4.0 * 5.0 * 9.0 / 6.0;
  CHECK(e == doctest::Approx(expect).epsilon(1e-13));
}

TEST_CASE("pair density: antisymmetry zeros and positivity") {
  const fermi::FreeFermiBox box{6, 6.0};
  std::mt19937 rng(1);
  std::uniform_real_distribution<double> u(0.0, 6.0);
  for (int i = 0; i < 200; ++i) {
    const double x = u(rng);
    const std::array<double, 2> same{x, x};
    CHECK(std::abs(fermi::reduced_density(box, same)) < 1e-12);
    const std::array<double, 2> pair{x, u(rng)};
    CHECK(fermi::reduced_density(box, pair) >= -1e-12);
  }
}

TEST_CASE("rdm symmetry under particle exchange") {
  const fermi::FreeFermiBox box{5, 5.0};
  const std::array<double, 2> xs{1.1, 2.3}, xs_swapped{2.3, 1.1};
  const std::array<double, 2> ys{0.7, 4.1}, ys_swapped{4.1, 0.7};
  const double a = fermi::rdm(box, xs, ys);
  CHECK(fermi::rdm(box, xs_swapped, ys_swapped) ==
        doctest::Approx(a).epsilon(1e-12));
  // single exchange flips the sign
  CHECK(fermi::rdm(box, xs_swapped, ys) == doctest::Approx(-a).epsilon(1e-12));
}

TEST_CASE("rho2 consistency with the 2x2 determinant") {
  const fermi::FreeFermiBox box{4, 4.0};
  const double x1 = 1.2, x2 = 2.9;
  const std::array<double, 2> xs{x1, x2};
  const double det = box.gamma1(x1, x1) * box.gamma1(x2, x2) -
                     box.gamma1(x1, x2) * box.gamma1(x2, x1);
  CHECK(fermi::reduced_density(box, xs) == doctest::Approx(det).epsilon(1e-12));
}

TEST_CASE("hard pair-density bound rho2 <= 8 pi^2 rho^4 (x1-x2)^2") {
  for (int n : {4, 8, 16}) {
    const fermi::FreeFermiBox box{n, static_cast<double>(n)};
    const auto rep = fermi::check_density_bounds(box, 5000, 0);
    CHECK(rep.max_ratio2 <= 1.0);
    CHECK(rep.max_ratio2 > 0.0);
    CHECK(rep.fitted_const3 > 0.0);
    CHECK(rep.fitted_const4 > 0.0);
  }
}

TEST_CASE("out-of-box points are rejected") {
  const fermi::FreeFermiBox box{4, 4.0};
  const std::array<double, 2> xs{-0.5, 1.0};
  CHECK_THROWS(fermi::reduced_density(box, xs));
}
