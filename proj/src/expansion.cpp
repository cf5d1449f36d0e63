#include "dilute1d/expansion.hpp"

#include <cmath>
#include <stdexcept>

#include "dilute1d/scattering.hpp"
#include "dilute1d/spin_chain.hpp"

namespace dilute1d::expansion {

ExpansionReport theorem1_energy(double n, double box_l, double a_e, double a_o,
                                double eps_spin, bool a_e_infinite) {
  if (n < 1.0 || box_l <= 0.0)
    throw std::invalid_argument("theorem1: need N >= 1, L > 0");
  if (eps_spin < 0.0 || eps_spin > 1.0)
    throw std::invalid_argument("theorem1: eps_spin must lie in [0, 1]");
  if (!a_e_infinite && a_e > a_o)
    throw std::invalid_argument("theorem1: a_e <= a_o is required");

  ExpansionReport rep;
  rep.n = n;
  rep.box_l = box_l;
  rep.rho = n / box_l;
  rep.a_e = a_e;
  rep.a_o = a_o;
  rep.a_e_infinite = a_e_infinite;
  rep.eps_spin = eps_spin;
  rep.leading = n * (M_PI * M_PI / 3.0) * rep.rho * rep.rho;
  if (a_e_infinite) {
    // infinite error term: the gas cannot be considered dilute
    rep.valid = false;
    return rep;
  }
  rep.correction = 2.0 * rep.rho * (a_e + (a_o - a_e) * eps_spin);
  rep.total_first_order = rep.leading * (1.0 + rep.correction);
  rep.smallness = rep.rho * std::max(a_o, std::abs(a_e));
  rep.valid = true;
  return rep;
}

HardCoreComparison hard_core_exact(double n, double box_l, double a) {
  if (n * a >= box_l)
    throw std::invalid_argument("hard core: need N a < L");
  HardCoreComparison cmp;
  const double rho_free = n / (box_l - n * a);
  cmp.exact = n * (M_PI * M_PI / 3.0) * rho_free * rho_free;
  // a_e = a_o = a collapses the spin dependence
  const ExpansionReport rep = theorem1_energy(n, box_l, a, a, 0.5);
  cmp.first_order = rep.total_first_order;
  cmp.gap = std::abs(cmp.exact - cmp.first_order);
  const double rho_a = rep.rho * a;
  cmp.bound = 1.5 * 3.0 * rho_a * rho_a * rep.leading;
  cmp.pass = cmp.gap <= cmp.bound;
  return cmp;
}

LlhComparison llh_compare(double rho, double c, double c_prime) {
  if (c <= 0.0 || c_prime <= 0.0)
    throw std::invalid_argument("llh: couplings must be positive");
  const double ln2 = std::log(2.0);
  LlhComparison cmp;
  cmp.girardeau_regime = c > c_prime;
  const double eps_llh = -2.0 * (ln2 / c_prime + (1.0 - ln2) / c);
  cmp.ours = 2.0 * rho * eps_llh;
  cmp.girardeau = -4.0 * rho / (ln2 * c + (1.0 - ln2) * c_prime);
  cmp.margin = cmp.girardeau - cmp.ours;
  return cmp;
}

YgCrossCheck yg_cross_check(double rho, double c,
                            const bethe::BetheGrids& grids) {
  YgCrossCheck chk;
  const auto v = scatter::ScalarPotential::delta(c);
  const double R = 1.0;
  chk.a_e = scatter::solve_scalar_scattering(v, R, scatter::Parity::Even).a;
  chk.a_o = scatter::solve_scalar_scattering(v, R, scatter::Parity::Odd).a;
  chk.eps_spin = chain::thermodynamic_energy_per_site(1);  // J = 1/2

  const ExpansionReport rep =
      theorem1_energy(rho, 1.0, chk.a_e, chk.a_o, chk.eps_spin);
  chk.expansion_e = rep.total_first_order;  // per volume since L = 1

  const bethe::BetheSolution yg = bethe::solve_yang_gaudin(rho, c, grids);
  chk.bethe_e = yg.e_density;
  const double g = rho / c;
  chk.band = 20.0 * g * g * (M_PI * M_PI / 3.0) * rho * rho * rho;
  chk.pass = std::abs(chk.expansion_e - chk.bethe_e) <= chk.band;
  return chk;
}

}  // namespace dilute1d::expansion
