#ifndef DILUTE1D_FREE_FERMI_HPP
#define DILUTE1D_FREE_FERMI_HPP

#include <span>
#include <vector>

namespace dilute1d::fermi {

// Spinless Dirichlet free Fermi ground state on [0, L] with N particles,
// orbitals sqrt(2/L) sin(n pi x / L), n = 1..N.
struct FreeFermiBox {
  int n_particles;
  double box_l;

  double rho() const { return n_particles / box_l; }
  double orbital(int n, double x) const;
  double gamma1(double x, double y) const;
};

// sum_{n<=N} (n pi / L)^2 = (pi^2/L^2) N(N+1)(2N+1)/6
double free_fermi_energy(int n_particles, double box_l);

// k-particle reduced density matrix gamma^(k)(xs; ys) as the k x k Wick
// determinant of gamma1; k <= 4.
double rdm(const FreeFermiBox& box, std::span<const double> xs,
           std::span<const double> ys);

// rho^(k)(xs) = gamma^(k)(xs; xs)
double reduced_density(const FreeFermiBox& box, std::span<const double> xs);

struct DensityBoundReport {
  // rho^(2)(x1,x2) / (8 pi^2 rho^4 (x1-x2)^2), max over samples;
  // the Lemma-style hard bound holds iff max_ratio2 <= 1
  double max_ratio2 = 0.0;
  // fitted constants for the rho^(3), rho^(4) shapes (reported, not asserted)
  double fitted_const3 = 0.0;
  double fitted_const4 = 0.0;
  int samples = 0;
};

DensityBoundReport check_density_bounds(const FreeFermiBox& box, int n_samples,
                                        unsigned seed);

}  // namespace dilute1d::fermi

#endif
