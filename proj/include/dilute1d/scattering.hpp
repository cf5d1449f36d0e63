#ifndef DILUTE1D_SCATTERING_HPP
#define DILUTE1D_SCATTERING_HPP

#include <Eigen/Dense>
#include <vector>

#include "dilute1d/potential.hpp"

namespace dilute1d::scatter {

enum class Parity { Even, Odd };

// Boundary value of the matrix scattering solution at -R:
// Fermionic -> P_A - P_S, Bosonic -> P_S - P_A, Symmetric -> I.
enum class BcMode { Fermionic, Bosonic, Symmetric };

struct ScatteringScalarResult {
  Parity parity;
  double a = 0.0;          // scattering length
  bool a_infinite = false; // degenerate constant-solution channel, a = -inf
  double r = 0.0;
  std::vector<double> xs;  // tabulated solution grid
  std::vector<double> psi;
  std::vector<double> psi_prime;  // right-derivative at each node
  double slope_at_r = 0.0;        // psi'(R) = 1/(R - a)
  double energy = 0.0;            // 4/(R - a); 0 when a = -inf
  double tail_affine_residual = 0.0;
};

ScatteringScalarResult solve_scalar_scattering(const ScalarPotential& v,
                                               double R, Parity parity);

struct MatrixScatteringDiagnostics {
  double r_independence_residual = 0.0;
  double hermiticity_residual = 0.0;
  double block_residual = 0.0;
  double energy_identity_residual = 0.0;
  double extraction_disagreement = 0.0;  // slope vs tail affine fit
};

struct ScatteringMatrixResult {
  int dim = 1;
  BcMode bc = BcMode::Fermionic;
  double r = 0.0;
  Eigen::MatrixXd a_matrix;       // finite part of the scattering matrix
  Eigen::MatrixXd inf_projector;  // channels flagged a = -inf
  bool has_infinite = false;
  Eigen::MatrixXd slope;  // S = F0'(R) = (R - A)^{-1}, symmetrized
  std::vector<double> xs;
  std::vector<Eigen::MatrixXd> f0;
  std::vector<Eigen::MatrixXd> f0_prime;
  MatrixScatteringDiagnostics diagnostics;

  // Tabulated solution at arbitrary x by linear interpolation.
  Eigen::MatrixXd eval(double x) const;
};

ScatteringMatrixResult solve_matrix_scattering(const MatrixPotential& V,
                                               double R, BcMode bc,
                                               bool compute_diagnostics = true);

// || int 2 F'* F' + F* V F  -  4 (R-A)^{-1} || / || 4 (R-A)^{-1} ||
double scattering_energy_identity(const ScatteringMatrixResult& result,
                                  const MatrixPotential& V);

// Test function for the Dyson gap: a real polynomial on [-R, R].
struct Polynomial {
  std::vector<double> coeffs;  // coeffs[k] * x^k
  double eval(double x) const;
  double deriv(double x) const;
};

// LHS - RHS of the channel-resolved Dyson inequality:
// int |phi'|^2 + (1/2) v |phi|^2 - (1/(R-a)) (|phi(R)|^2 + |phi(-R)|^2),
// with a = a_e for the even channel and a_o for the odd channel.
double dyson_gap(const Polynomial& phi, Parity parity,
                 const ScalarPotential& v, double R);

// max over samples of |F_hc(x) xi|^2 - |F(x) xi|^2, hard core radius R0 of V.
double hard_core_pointwise_check(const MatrixPotential& V, double R,
                                 int n_samples, unsigned seed);

}  // namespace dilute1d::scatter

#endif
