#ifndef DILUTE1D_EXPANSION_HPP
#define DILUTE1D_EXPANSION_HPP

#include "dilute1d/bethe.hpp"

namespace dilute1d::expansion {

struct ExpansionReport {
  double n = 0.0, box_l = 0.0, rho = 0.0;
  double a_e = 0.0, a_o = 0.0;
  bool a_e_infinite = false;
  double eps_spin = 0.0;
  double leading = 0.0;            // N (pi^2/3) rho^2
  double correction = 0.0;         // 2 rho [a_e + (a_o - a_e) eps_spin]
  double total_first_order = 0.0;  // leading * (1 + correction)
  bool valid = false;  // false when a_e = -inf: infinite error term
  double smallness = 0.0;  // rho * max(a_o, |a_e|), diluteness flag input
};

ExpansionReport theorem1_energy(double n, double box_l, double a_e, double a_o,
                                double eps_spin, bool a_e_infinite = false);

struct HardCoreComparison {
  double exact = 0.0;      // N (pi^2/3) (N/(L-Na))^2
  double first_order = 0.0;
  double gap = 0.0;        // |exact - first_order|
  double bound = 0.0;      // 1.5 * 3 (rho a)^2 * leading
  bool pass = false;
};

HardCoreComparison hard_core_exact(double n, double box_l, double a);

struct LlhComparison {
  double ours = 0.0;       // 2 rho eps_LLH(c, c') closed form
  double girardeau = 0.0;  // -4 rho / (ln2 c + (1-ln2) c')
  double margin = 0.0;     // girardeau - ours, >= 0
  bool girardeau_regime = false;  // c > c' > 0
};

// Closed thermodynamic forms; a finite chain cross-check lives in spin_chain.
LlhComparison llh_compare(double rho, double c, double c_prime);

struct YgCrossCheck {
  double a_e = 0.0, a_o = 0.0, eps_spin = 0.0;
  double expansion_e = 0.0;  // per-volume first-order energy density
  double bethe_e = 0.0;
  double band = 0.0;  // 20 (rho/c)^2 (pi^2/3) rho^3, calibrated constant
  bool pass = false;
};

YgCrossCheck yg_cross_check(double rho, double c,
                            const bethe::BetheGrids& grids);

}  // namespace dilute1d::expansion

#endif
