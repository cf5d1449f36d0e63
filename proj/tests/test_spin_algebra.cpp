#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <Eigen/Dense>

#include "dilute1d/spin_algebra.hpp"

using namespace dilute1d;
using Eigen::MatrixXd;

TEST_CASE("swap and projector identities for J = 1/2 .. 5/2") {
  for (int twice_j = 1; twice_j <= 5; ++twice_j) {
    const auto spin = spin::SpinLocalDim::from_twice_j(twice_j);
    const auto proj = spin::build_pair_projectors(spin);
    const int d2 = proj.d * proj.d;
    const MatrixXd id = MatrixXd::Identity(d2, d2);

    CHECK((proj.swap * proj.swap - id).cwiseAbs().maxCoeff() < 1e-14);
    CHECK((proj.p_sym + proj.p_asym - id).cwiseAbs().maxCoeff() < 1e-14);
    CHECK((proj.p_sym * proj.p_sym - proj.p_sym).cwiseAbs().maxCoeff() < 1e-13);
    CHECK((proj.p_asym * proj.p_asym - proj.p_asym).cwiseAbs().maxCoeff() <
          1e-13);
    CHECK((proj.p_sym * proj.p_asym).cwiseAbs().maxCoeff() < 1e-13);
    // rank of P_S is d(d+1)/2
    CHECK(proj.p_sym.trace() ==
          doctest::Approx(proj.d * (proj.d + 1) / 2.0).epsilon(1e-12));
  }
}

TEST_CASE("spin operators satisfy the su(2) commutator and Casimir") {
  for (int twice_j : {1, 2, 3}) {
    const auto spin = spin::SpinLocalDim::from_twice_j(twice_j);
    const auto ops = spin::build_spin_ops(spin);
    const double j = spin.j();
    // [Sx, iSy] = i Sz * i = -... work with real forms:
    // Sx (iSy) - (iSy) Sx = i [Sx, Sy] = i (i Sz) = -Sz
    const MatrixXd comm = ops.sx * ops.i_sy - ops.i_sy * ops.sx;
    CHECK((comm + ops.sz).cwiseAbs().maxCoeff() < 1e-13);
    // Casimir Sx^2 - (iSy)^2 + Sz^2 = J(J+1) I
    const MatrixXd cas =
        ops.sx * ops.sx - ops.i_sy * ops.i_sy + ops.sz * ops.sz;
    const MatrixXd expect =
        j * (j + 1.0) * MatrixXd::Identity(spin.d, spin.d);
    CHECK((cas - expect).cwiseAbs().maxCoeff() < 1e-12);
  }
}

TEST_CASE("spin-1/2 swap equals (1 + 4 S1.S2)/2") {
  const auto spin = spin::SpinLocalDim::from_twice_j(1);
  const auto proj = spin::build_pair_projectors(spin);
  const MatrixXd dot = spin::pair_spin_dot(spin);
  const MatrixXd expect =
      0.5 * (MatrixXd::Identity(4, 4) + 4.0 * dot);
  CHECK((proj.swap - expect).cwiseAbs().maxCoeff() < 1e-13);
}

TEST_CASE("pair spin dot commutes with the swap") {
  for (int twice_j : {1, 2}) {
    const auto spin = spin::SpinLocalDim::from_twice_j(twice_j);
    const auto proj = spin::build_pair_projectors(spin);
    const MatrixXd dot = spin::pair_spin_dot(spin);
    CHECK((dot * proj.swap - proj.swap * dot).cwiseAbs().maxCoeff() < 1e-12);
  }
}

TEST_CASE("couplings: Lai-Sutherland is P_S, LLH is the projector combination") {
  const auto spin = spin::SpinLocalDim::from_twice_j(1);
  const auto proj = spin::build_pair_projectors(spin);

  const auto ls = spin::build_coupling(spin::LaiSutherlandKind{}, proj);
  CHECK((ls.matrix - proj.p_sym).cwiseAbs().maxCoeff() < 1e-14);

  const double c = 4.0, cp = 1.0;
  const auto llh = spin::build_coupling(spin::LlhKind{c, cp}, proj);
  const MatrixXd expect = -(2.0 / cp) * proj.p_asym - (2.0 / c) * proj.p_sym;
  CHECK((llh.matrix - expect).cwiseAbs().maxCoeff() < 1e-13);
}

TEST_CASE("matrix couplings must be symmetric") {
  const auto spin = spin::SpinLocalDim::from_twice_j(1);
  const auto proj = spin::build_pair_projectors(spin);
  MatrixXd bad = MatrixXd::Zero(4, 4);
  bad(0, 1) = 1.0;
  CHECK_THROWS(spin::build_coupling(spin::MatrixKind{bad}, proj));
}
