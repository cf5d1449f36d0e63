#ifndef DILUTE1D_SPIN_CHAIN_HPP
#define DILUTE1D_SPIN_CHAIN_HPP

#include <cstdint>
#include <vector>

#include "dilute1d/spin_algebra.hpp"

namespace dilute1d::chain {

enum class Boundary { Periodic, Open };
enum class SolverKind { Dense, Lanczos, Auto };

struct LanczosOptions {
  int max_iter = 500;
  double tol = 1e-10;
  unsigned seed = 0;
};

struct SpinChainSpec {
  spin::SpinLocalDim spin_dim;
  int n_sites = 2;
  Boundary bc = Boundary::Periodic;
  spin::PairCoupling coupling;
  SolverKind solver = SolverKind::Auto;
  LanczosOptions lanczos;
  std::size_t dense_cap = 4096;          // dense solver only up to this dim
  std::size_t dim_cap = std::size_t(1) << 21;  // hard memory guard
};

struct SpinChainResult {
  double epsilon = 0.0;    // ground energy per site of (1/N) sum coupling
  double residual = 0.0;   // ||H x - E x|| / ||x||
  int iterations = 0;
  std::vector<double> ground_vector;  // non-unique when degenerate
};

// Apply (1/N) sum_i coupling^{i,i+1} without materializing the operator.
void apply_chain(const SpinChainSpec& spec, const double* in, double* out);

SpinChainResult ground_energy_per_site(const SpinChainSpec& spec);

// 1 - (1/(2J+1)) [psi(1) - psi(1/(2J+1))], the thermodynamic Lai-Sutherland
// energy per site.
double thermodynamic_energy_per_site(int twice_j);

struct SandwichRow {
  int n;
  double eps;
  double lower, upper;  // eps_inf -/+ 1/N
  bool pass;
};

std::vector<SandwichRow> finite_size_sandwich(int twice_j,
                                              const std::vector<int>& n_list,
                                              unsigned seed = 0);

// Ground energy per site of the Lieb-Liniger-Heisenberg chain
// -(1/N) sum (2/c') P_A + (2/c) P_S.
double llh_chain_energy(double c, double c_prime, int n_sites,
                        unsigned seed = 0);

}  // namespace dilute1d::chain

#endif
