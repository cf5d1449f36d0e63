#ifndef DILUTE1D_BETHE_HPP
#define DILUTE1D_BETHE_HPP

#include <cstddef>
#include <vector>

namespace dilute1d::bethe {

struct BetheGrids {
  std::size_t n_k = 256;       // charge-rapidity quadrature nodes
  std::size_t n_lambda = 400;  // spin-rapidity nodes (Yang-Gaudin)
  double b_cut_factor = 20.0;  // B_cut = b_cut_factor * max(c, Q)
  double damping = 0.5;
  double fp_tol = 1e-10;       // sup-norm fixed-point defect
  std::size_t max_sweeps = 100000;
  double rho_tol = 1e-8;       // outer Q-solve target on the density
};

struct BetheSolution {
  double q = 0.0;      // charge cutoff
  double b_cut = 0.0;  // spin cutoff (0 for Lieb-Liniger)
  std::vector<double> k_nodes, f;            // root density on [-Q, Q]
  std::vector<double> lambda_nodes, sigma;   // spin density (YG only)
  double rho = 0.0;        // int f
  double m_density = 0.0;  // int sigma
  double e_density = 0.0;  // int k^2 f
  std::size_t iterations = 0;
  double residual = 0.0;
  double sigma_tail_ratio = 0.0;  // sigma(B_cut)/max sigma, truncation monitor
};

// 2 pi f(k) = 1 + int_{-Q}^{Q} 2c f(k') / (c^2 + (k-k')^2) dk',
// with Q tuned by bisection so that int f = rho.
BetheSolution solve_lieb_liniger(double rho, double c, const BetheGrids& grids);

// Coupled charge/spin equations with the B = infinity ground state
// truncated at B_cut; int f = rho via the same outer bisection.
BetheSolution solve_yang_gaudin(double rho, double c, const BetheGrids& grids);

// (pi^2/3) N rho^2 (1 - 4 rho/c - kappa N^{-2/3}). kappa is a knob, not a
// paper constant.
double ll_neumann_lower_bound(double n, double box_l, double c,
                              double kappa = 1.0);

}  // namespace dilute1d::bethe

#endif
