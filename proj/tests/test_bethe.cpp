#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>

#include "dilute1d/bethe.hpp"

using namespace dilute1d;

namespace {
constexpr double kPi2Over3 = std::numbers::pi * std::numbers::pi / 3.0;
}

TEST_CASE("lieb-liniger: density constraint and symmetry") {
  bethe::BetheGrids grids;
  const auto sol = bethe::solve_lieb_liniger(1.0, 2.0, grids);
  CHECK(sol.rho == doctest::Approx(1.0).epsilon(1e-7));
  CHECK(sol.residual < grids.fp_tol * 10);
  // f is even in k
  const std::size_t n = sol.f.size();
  for (std::size_t i = 0; i < n / 2; ++i)
    CHECK(sol.f[i] == doctest::Approx(sol.f[n - 1 - i]).epsilon(1e-9));
  // f >= 1/(2 pi): the kernel term is nonnegative
  for (double fv : sol.f) CHECK(fv >= 1.0 / (2.0 * std::numbers::pi) - 1e-12);
}

TEST_CASE("lieb-liniger: e(gamma) increases with gamma, capped by Tonks") {
  bethe::BetheGrids grids;
  double prev = 0.0;
  for (double c : {0.5, 1.0, 2.0, 5.0, 20.0, 200.0}) {
    const auto sol = bethe::solve_lieb_liniger(1.0, c, grids);
    CHECK(sol.e_density > prev);
    CHECK(sol.e_density < kPi2Over3 + 1e-6);
    prev = sol.e_density;
  }
}

TEST_CASE("lieb-liniger: Tonks limit") {
  bethe::BetheGrids grids;
  const auto sol = bethe::solve_lieb_liniger(1.0, 1e6, grids);
  CHECK(sol.e_density == doctest::Approx(kPi2Over3).epsilon(1e-4));
  // Q approaches pi rho
  CHECK(sol.q == doctest::Approx(std::numbers::pi).epsilon(1e-3));
}

TEST_CASE("lieb-liniger: scale covariance e(rho, c) = rho^3 e(1, c/rho)") {
  bethe::BetheGrids grids;
  const auto a = bethe::solve_lieb_liniger(1.0, 4.0, grids);
  const auto b = bethe::solve_lieb_liniger(2.0, 8.0, grids);
  CHECK(b.e_density == doctest::Approx(8.0 * a.e_density).epsilon(1e-6));
}

TEST_CASE("lieb-liniger: grid refinement is converged") {
  bethe::BetheGrids coarse;
  coarse.n_k = 128;
  bethe::BetheGrids fine;
  fine.n_k = 512;
  const auto a = bethe::solve_lieb_liniger(1.0, 3.0, coarse);
  const auto b = bethe::solve_lieb_liniger(1.0, 3.0, fine);
  CHECK(a.e_density == doctest::Approx(b.e_density).epsilon(1e-7));
}

TEST_CASE("yang-gaudin: balanced spin density M/L = rho/2") {
  bethe::BetheGrids grids;
  for (double c : {20.0, 100.0}) {
    const auto sol = bethe::solve_yang_gaudin(1.0, c, grids);
    CHECK(sol.rho == doctest::Approx(1.0).epsilon(1e-7));
    CHECK(sol.m_density == doctest::Approx(0.5).epsilon(2e-4));
    CHECK(sol.sigma_tail_ratio < 1e-3);
  }
}

TEST_CASE("yang-gaudin energy lies between Lieb-Liniger and free fermions") {
  // same c: attractive-free comparison, ll (all symmetric) <= yg <= tonks
  bethe::BetheGrids grids;
  const double c = 10.0;
  const auto ll = bethe::solve_lieb_liniger(1.0, c, grids);
  const auto yg = bethe::solve_yang_gaudin(1.0, c, grids);
  CHECK(yg.e_density > ll.e_density);
  CHECK(yg.e_density < kPi2Over3);
}

TEST_CASE("yang-gaudin: strong coupling matches the digamma expansion") {
  bethe::BetheGrids grids;
  const double c = 100.0;
  const auto sol = bethe::solve_yang_gaudin(1.0, c, grids);
  const double expect = kPi2Over3 * (1.0 - 4.0 * std::log(2.0) / c);
  CHECK(std::abs(sol.e_density - expect) <= 20.0 / (c * c) * kPi2Over3);
}

TEST_CASE("yang-gaudin: B_cut doubling does not move the answer") {
  bethe::BetheGrids grids;
  bethe::BetheGrids wide = grids;
  wide.b_cut_factor = 40.0;
  wide.n_lambda = 800;
  const auto a = bethe::solve_yang_gaudin(1.0, 20.0, grids);
  const auto b = bethe::solve_yang_gaudin(1.0, 20.0, wide);
  CHECK(a.e_density == doctest::Approx(b.e_density).epsilon(1e-6));
  CHECK(a.m_density == doctest::Approx(b.m_density).epsilon(1e-4));
}

TEST_CASE("neumann lower bound shape") {
  // finite-size correction only weakens the bound
  const double full = bethe::ll_neumann_lower_bound(100.0, 100.0, 5.0, 0.0);
  const double knocked = bethe::ll_neumann_lower_bound(100.0, 100.0, 5.0, 1.0);
  CHECK(knocked < full);
  CHECK(full == doctest::Approx(100.0 * kPi2Over3 * (1.0 - 4.0 / 5.0)));
}

TEST_CASE("invalid inputs rejected") {
  bethe::BetheGrids grids;
  CHECK_THROWS(bethe::solve_lieb_liniger(-1.0, 1.0, grids));
  CHECK_THROWS(bethe::solve_lieb_liniger(1.0, 0.0, grids));
  CHECK_THROWS(bethe::solve_yang_gaudin(1.0, -2.0, grids));
}
