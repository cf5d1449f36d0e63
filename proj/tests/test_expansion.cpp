#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>

#include "dilute1d/expansion.hpp"

using namespace dilute1d;

TEST_CASE("theorem1: leading term and correction wiring") {
  const auto rep = expansion::theorem1_energy(10.0, 1000.0, -0.5, 0.1, 0.3);
  CHECK(rep.rho == doctest::Approx(0.01));
  CHECK(rep.leading ==
        doctest::Approx(10.0 * std::numbers::pi * std::numbers::pi / 3.0 *
                        1e-4));
  const double corr = 2.0 * 0.01 * (-0.5 + (0.1 - (-0.5)) * 0.3);
  CHECK(rep.correction == doctest::Approx(corr).epsilon(1e-13));
  CHECK(rep.total_first_order ==
        doctest::Approx(rep.leading * (1.0 + corr)).epsilon(1e-13));
  CHECK(rep.valid);
}

TEST_CASE("theorem1: rescaling invariance") {
  // (N, L, a) -> (N, s L, s a) scales energies by s^-2 and the correction
  // term rho*a is invariant
  const double s = 3.0;
  const auto a = expansion::theorem1_energy(8.0, 100.0, -0.4, 0.05, 0.25);
  const auto b =
      expansion::theorem1_energy(8.0, s * 100.0, s * -0.4, s * 0.05, 0.25);
  CHECK(b.total_first_order ==
        doctest::Approx(a.total_first_order / (s * s)).epsilon(1e-12));
  CHECK(b.correction == doctest::Approx(a.correction).epsilon(1e-12));
}

TEST_CASE("theorem1: infinite a_e poisons the expansion") {
  const auto rep =
      expansion::theorem1_energy(10.0, 1000.0, 0.0, 0.0, 0.5, true);
  CHECK_FALSE(rep.valid);
  CHECK(rep.leading > 0.0);
}

TEST_CASE("theorem1: input validation") {
  CHECK_THROWS(expansion::theorem1_energy(0.5, 1.0, 0.0, 0.0, 0.5));
  CHECK_THROWS(expansion::theorem1_energy(2.0, 1.0, 0.0, 0.0, 1.5));
  CHECK_THROWS(expansion::theorem1_energy(2.0, 1.0, 0.5, 0.0, 0.5));
}

TEST_CASE("hard core: exact vs first order within the quadratic band") {
  for (double rho_a : {0.01, 0.02, 0.05}) {
    const auto cmp = expansion::hard_core_exact(10.0, 1000.0, rho_a / 0.01);
    CHECK(cmp.pass);
    CHECK(cmp.gap <= cmp.bound);
    CHECK(cmp.exact > cmp.first_order);  // geometric series has all-plus terms
  }
}

TEST_CASE("llh compare: margin positive for c > c', zero at c = c'") {
  double prev_margin = -1.0;
  for (double c : {2.0, 4.0, 8.0}) {
    const auto cmp = expansion::llh_compare(0.01, c, 1.0);
    CHECK(cmp.girardeau_regime);
    CHECK(cmp.margin > 0.0);
    CHECK(cmp.margin > prev_margin);  // margin grows with the mismatch
    prev_margin = cmp.margin;
  }
  const auto equal = expansion::llh_compare(0.01, 3.0, 3.0);
  CHECK(std::abs(equal.margin) < 1e-15);
  // closed forms at c=4, c'=1, rho=0.01
  const double ln2 = std::log(2.0);
  const auto cmp = expansion::llh_compare(0.01, 4.0, 1.0);
  CHECK(cmp.ours ==
        doctest::Approx(-0.04 * (ln2 + (1.0 - ln2) / 4.0)).epsilon(1e-13));
  CHECK(cmp.girardeau ==
        doctest::Approx(-0.04 / (4.0 * ln2 + (1.0 - ln2))).epsilon(1e-13));
}

TEST_CASE("yang-gaudin cross-check at strong coupling") {
  bethe::BetheGrids grids;
  const auto chk = expansion::yg_cross_check(1.0, 150.0, grids);
  CHECK(chk.a_e == doctest::Approx(-2.0 / 150.0).epsilon(1e-8));
  CHECK(std::abs(chk.a_o) < 1e-10);
  CHECK(chk.eps_spin ==
        doctest::Approx(1.0 - std::log(2.0)).epsilon(1e-12));
  CHECK(chk.pass);
}
