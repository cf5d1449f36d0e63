#ifndef DILUTE1D_POTENTIAL_HPP
#define DILUTE1D_POTENTIAL_HPP

#include <Eigen/Dense>
#include <string>
#include <vector>

namespace dilute1d::scatter {

// One Dirac atom of the measure: weight * delta(x - pos).
struct Atom {
  double x;
  double weight;  // >= 0
};

// Piecewise-linear tabulated density part, even in x. Empty means none.
struct TabulatedDensity {
  std::vector<double> xs;    // strictly increasing
  std::vector<double> vals;  // >= 0

  bool empty() const { return xs.empty(); }
  double eval(double x) const;
};

// Compactly supported positive scalar measure v on [-R0, R0]:
// Dirac atoms plus a tabulated density. hard_core models the solution
// pinned to zero on [-R0, R0] instead of a potential limit.
struct ScalarPotential {
  std::vector<Atom> atoms;  // sorted by x
  TabulatedDensity density;
  double support_radius = 0.0;  // R0
  bool hard_core = false;

  static ScalarPotential delta(double c);  // v = 2c delta_0
  static ScalarPotential double_delta(double c, double r0);
  static ScalarPotential hardcore(double a);

  void validate() const;  // evenness, positivity, support
};

struct MatrixAtom {
  double x;
  Eigen::MatrixXd weight;  // dim x dim, symmetric PSD
};

// Matrix-valued measure V = v*I + Vtilde on the pair-spin space,
// commuting with the swap (block-diagonal over P_S, P_A).
struct MatrixPotential {
  int dim = 1;  // (2J+1)^2
  std::vector<MatrixAtom> atoms;
  std::vector<double> density_xs;
  std::vector<Eigen::MatrixXd> density_vals;
  double support_radius = 0.0;
  bool hard_core = false;

  static MatrixPotential from_scalar(const ScalarPotential& v, int dim);
  // V = (2c' P_A + 2c P_S) delta_0 for local dimension d.
  static MatrixPotential llh_delta(double c, double c_prime, int d);
  static MatrixPotential hardcore(double a, int dim);

  Eigen::MatrixXd density_eval(double x) const;
  double total_variation_tilde() const;  // integral of ||Vtilde||
  void validate() const;  // PSD, swap-commuting, evenness
};

}  // namespace dilute1d::scatter

#endif
