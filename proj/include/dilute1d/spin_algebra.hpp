#ifndef DILUTE1D_SPIN_ALGEBRA_HPP
#define DILUTE1D_SPIN_ALGEBRA_HPP

#include <Eigen/Dense>
#include <stdexcept>
#include <variant>

namespace dilute1d::spin {

// Local spin degree of freedom: spin J with dimension d = 2J+1.
// J is stored as twice_j to keep half-integers exact.
struct SpinLocalDim {
  int twice_j;  // 2J, positive integer
  int d;        // 2J+1

  static SpinLocalDim from_twice_j(int twice_j);
  double j() const { return 0.5 * twice_j; }
};

// Pair-space (d^2 x d^2) swap operator and symmetric/antisymmetric
// projectors, in the lexicographic product basis |a> x |b| -> a*d+b.
struct PairProjectors {
  int d;
  Eigen::MatrixXd swap;  // |a,b> -> |b,a>
  Eigen::MatrixXd p_sym;
  Eigen::MatrixXd p_asym;
};

PairProjectors build_pair_projectors(const SpinLocalDim& spin);

// Spin operators for a single spin-J site. Sy is purely imaginary, so we
// expose i*Sy as a real matrix alongside Sx and Sz.
struct SpinOps {
  Eigen::MatrixXd sx;
  Eigen::MatrixXd i_sy;  // i * Sy, real antisymmetric
  Eigen::MatrixXd sz;
};

SpinOps build_spin_ops(const SpinLocalDim& spin);

// S1.S2 on the pair space (real since the two i*Sy factors contribute -1).
Eigen::MatrixXd pair_spin_dot(const SpinLocalDim& spin);

// Nearest-neighbour pair couplings.
struct LaiSutherlandKind {};
struct LlhKind {
  double c;        // symmetric-spin (triplet) coupling
  double c_prime;  // antisymmetric-spin (singlet) coupling
};
struct MatrixKind {
  Eigen::MatrixXd m;  // d^2 x d^2, symmetric
};
using CouplingKind = std::variant<LaiSutherlandKind, LlhKind, MatrixKind>;

struct PairCoupling {
  CouplingKind kind;
  Eigen::MatrixXd matrix;  // realized d^2 x d^2 symmetric matrix
};

PairCoupling build_coupling(const CouplingKind& kind,
                            const PairProjectors& proj);

}  // namespace dilute1d::spin

#endif
