#include "dilute1d/acceptance.hpp"

#include <cmath>
#include <limits>
#include <random>
#include <sstream>

#include "dilute1d/bethe.hpp"
#include "dilute1d/expansion.hpp"
#include "dilute1d/free_fermi.hpp"
#include "dilute1d/io.hpp"
#include "dilute1d/scattering.hpp"
#include "dilute1d/spin_algebra.hpp"
#include "dilute1d/spin_chain.hpp"

namespace dilute1d::acceptance {

namespace {

using scatter::BcMode;
using scatter::MatrixPotential;
using scatter::Parity;
using scatter::ScalarPotential;

std::string fmt(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.3e", x);
  return buf;
}

struct Fixture {
  std::string name;
  MatrixPotential v;
  BcMode bc;
};

std::vector<Fixture> fixture_potentials() {
  std::vector<Fixture> f;
  f.push_back({"delta_c1",
               MatrixPotential::from_scalar(ScalarPotential::delta(1.0), 4),
               BcMode::Fermionic});
  f.push_back(
      {"double_delta_c2_r01",
       MatrixPotential::from_scalar(ScalarPotential::double_delta(2.0, 0.1), 4),
       BcMode::Fermionic});
  f.push_back({"llh_delta_c2_cp1", MatrixPotential::llh_delta(2.0, 1.0, 2),
               BcMode::Symmetric});
  f.push_back({"hard_core_005", MatrixPotential::hardcore(0.05, 4),
               BcMode::Fermionic});
  {
    // smooth even bump density on [-0.2, 0.2]
    ScalarPotential bump;
    bump.support_radius = 0.2;
    const int m = 41;
    for (int i = 0; i < m; ++i) {
      const double x = -0.2 + 0.4 * i / (m - 1);
      bump.density.xs.push_back(x);
      bump.density.vals.push_back(3.0 * (1.0 - (x / 0.2) * (x / 0.2)));
    }
    f.push_back({"bump_density", MatrixPotential::from_scalar(bump, 1),
                 BcMode::Symmetric});
  }
  return f;
}

CriterionResult c1_scattering_closed_forms() {
  CriterionResult r{1, "scattering closed forms (delta, double delta)"};
  double worst = 0.0;
  for (double c : {0.5, 1.0, 10.0, 100.0}) {
    const auto v = ScalarPotential::delta(c);
    const auto even = scatter::solve_scalar_scattering(v, 1.0, Parity::Even);
    const auto odd = scatter::solve_scalar_scattering(v, 1.0, Parity::Odd);
    worst = std::max(worst, std::abs(even.a - (-2.0 / c)));
    worst = std::max(worst, std::abs(odd.a - 0.0));
  }
  for (auto [c, r0] : {std::pair{2.0, 0.1}, std::pair{3.0, 0.2}}) {
    const auto v = ScalarPotential::double_delta(c, r0);
    const auto even = scatter::solve_scalar_scattering(v, 1.0, Parity::Even);
    const auto odd = scatter::solve_scalar_scattering(v, 1.0, Parity::Odd);
    worst = std::max(worst, std::abs(even.a - (r0 - 1.0 / c)));
    worst = std::max(worst, std::abs(odd.a - (r0 - r0 / (1.0 + r0 * c))));
  }
  r.pass = worst <= 1e-8;
  r.detail = "max |a - closed form| = " + fmt(worst);
  return r;
}

CriterionResult c2_matrix_reduction() {
  CriterionResult r{2, "matrix reduction A = a_e P_A + a_o P_S for V = vI"};
  double worst = 0.0;
  const auto v = ScalarPotential::double_delta(2.0, 0.1);
  const double a_e = scatter::solve_scalar_scattering(v, 1.0, Parity::Even).a;
  const double a_o = scatter::solve_scalar_scattering(v, 1.0, Parity::Odd).a;
  for (int twice_j : {1, 2}) {
    const auto spin_dim = spin::SpinLocalDim::from_twice_j(twice_j);
    const auto proj = spin::build_pair_projectors(spin_dim);
    const auto mv = MatrixPotential::from_scalar(v, spin_dim.d * spin_dim.d);
    const auto res = scatter::solve_matrix_scattering(mv, 1.0, BcMode::Fermionic);
    const Eigen::MatrixXd expect = a_e * proj.p_asym + a_o * proj.p_sym;
    worst = std::max(worst, (res.a_matrix - expect).cwiseAbs().maxCoeff());
  }
  r.pass = worst <= 1e-8;
  r.detail = "max entrywise deviation = " + fmt(worst);
  return r;
}

CriterionResult c3_energy_identity() {
  CriterionResult r{3, "scattering energy identity and R-independence"};
  double worst_energy = 0.0, worst_rind = 0.0;
  for (const auto& f : fixture_potentials()) {
    const auto res = scatter::solve_matrix_scattering(f.v, 1.0, f.bc);
    worst_energy =
        std::max(worst_energy, res.diagnostics.energy_identity_residual);
    worst_rind =
        std::max(worst_rind, res.diagnostics.r_independence_residual);
  }
  r.pass = worst_energy <= 1e-6 && worst_rind <= 1e-8;
  r.detail = "energy residual " + fmt(worst_energy) + ", R-independence " +
             fmt(worst_rind);
  return r;
}

scatter::Polynomial random_parity_poly(std::mt19937& rng, Parity parity) {
  std::uniform_real_distribution<double> uc(-1.0, 1.0);
  scatter::Polynomial p;
  p.coeffs.assign(7, 0.0);
  for (std::size_t k = parity == Parity::Even ? 0 : 1; k < 7; k += 2)
    p.coeffs[k] = uc(rng);
  return p;
}

CriterionResult c4_dyson(unsigned seed) {
  CriterionResult r{4, "Dyson gap nonnegative over random test functions"};
  const auto v = ScalarPotential::double_delta(2.0, 0.1);
  std::mt19937 rng(seed + 4);
  double min_gap = std::numeric_limits<double>::infinity();
  for (int i = 0; i < 200; ++i) {
    for (Parity parity : {Parity::Even, Parity::Odd}) {
      const auto phi = random_parity_poly(rng, parity);
      min_gap = std::min(min_gap, scatter::dyson_gap(phi, parity, v, 1.0));
    }
  }
  r.pass = min_gap >= -1e-8;
  r.detail = "min gap = " + fmt(min_gap);
  return r;
}

CriterionResult c5_hard_core_bound(unsigned seed) {
  CriterionResult r{5, "hard-core pointwise bound |F_hc xi| <= |F xi|"};
  double worst = -std::numeric_limits<double>::infinity();
  const std::vector<Fixture> fixtures = {
      {"hard_core_005", MatrixPotential::hardcore(0.05, 4), BcMode::Fermionic},
      {"double_delta",
       MatrixPotential::from_scalar(ScalarPotential::double_delta(2.0, 0.1), 4),
       BcMode::Fermionic},
      {"llh_delta", MatrixPotential::llh_delta(2.0, 1.0, 2),
       BcMode::Fermionic}};
  for (const auto& f : fixtures)
    worst = std::max(worst,
                     scatter::hard_core_pointwise_check(f.v, 1.0, 1000, seed + 5));
  r.pass = worst <= 1e-8;
  r.detail = "max violation = " + fmt(worst);
  return r;
}

CriterionResult c6_sandwich(unsigned seed) {
  CriterionResult r{6, "spin chain finite-size sandwich + Lanczos vs dense"};
  bool pass = true;
  std::ostringstream detail;
  for (auto [twice_j, ns] :
       {std::pair<int, std::vector<int>>{1, {4, 6, 8, 10, 12}},
        std::pair<int, std::vector<int>>{2, {4, 6, 8}}}) {
    for (const auto& row : chain::finite_size_sandwich(twice_j, ns, seed))
      pass = pass && row.pass;
  }
  // Lanczos vs dense where both run (d^N <= 4096)
  double worst_gap = 0.0;
  for (auto [twice_j, ns] : {std::pair<int, std::vector<int>>{1, {4, 8, 12}},
                             std::pair<int, std::vector<int>>{2, {4, 6}}}) {
    const auto spin_dim = spin::SpinLocalDim::from_twice_j(twice_j);
    const auto proj = spin::build_pair_projectors(spin_dim);
    for (int n : ns) {
      chain::SpinChainSpec spec;
      spec.spin_dim = spin_dim;
      spec.n_sites = n;
      spec.coupling = spin::build_coupling(spin::LaiSutherlandKind{}, proj);
      spec.lanczos.seed = seed;
      spec.solver = chain::SolverKind::Dense;
      const double dense = chain::ground_energy_per_site(spec).epsilon;
      spec.solver = chain::SolverKind::Lanczos;
      const double lcz = chain::ground_energy_per_site(spec).epsilon;
      worst_gap = std::max(worst_gap, std::abs(dense - lcz));
    }
  }
  pass = pass && worst_gap <= 1e-9;
  detail << "sandwich rows pass, |dense - lanczos| max = " << fmt(worst_gap);
  r.pass = pass;
  r.detail = detail.str();
  return r;
}

CriterionResult c7_small_chain() {
  CriterionResult r{7, "small-chain dense oracles eps(2)=0, eps(4)=1/4"};
  const auto spin_dim = spin::SpinLocalDim::from_twice_j(1);
  const auto proj = spin::build_pair_projectors(spin_dim);
  chain::SpinChainSpec spec;
  spec.spin_dim = spin_dim;
  spec.coupling = spin::build_coupling(spin::LaiSutherlandKind{}, proj);
  spec.solver = chain::SolverKind::Dense;
  spec.n_sites = 2;
  const double e2 = chain::ground_energy_per_site(spec).epsilon;
  spec.n_sites = 4;
  const double e4 = chain::ground_energy_per_site(spec).epsilon;
  const double worst = std::max(std::abs(e2), std::abs(e4 - 0.25));
  r.pass = worst <= 1e-10;
  r.detail = "eps(2) = " + fmt(e2) + ", eps(4) - 1/4 = " + fmt(e4 - 0.25);
  return r;
}

CriterionResult c8_llh_chain(unsigned seed) {
  CriterionResult r{8, "LLH chain vs thermodynamic closed form"};
  const double eps = chain::llh_chain_energy(4.0, 1.0, 12, seed);
  const double ln2 = std::log(2.0);
  const double target = -2.0 * (ln2 + (1.0 - ln2) / 4.0);
  const double gap = std::abs(eps - target);
  r.pass = gap <= 2.0 / 12.0;
  r.detail = "eps(12) = " + fmt(eps) + ", |gap| = " + fmt(gap);
  return r;
}

CriterionResult c9_lieb_liniger() {
  CriterionResult r{9, "Lieb-Liniger solver: Tonks limit and dilute band"};
  bethe::BetheGrids grids;
  const double pi2_3 = M_PI * M_PI / 3.0;
  bool pass = true;
  std::ostringstream detail;

  const auto tonks = bethe::solve_lieb_liniger(1.0, 1e6, grids);
  const double tonks_err = std::abs(tonks.e_density - pi2_3) / pi2_3;
  pass = pass && tonks_err <= 1e-4;
  detail << "tonks rel err " << fmt(tonks_err);

  for (double g : {0.005, 0.01, 0.02}) {
    const double c = 1.0 / g;  // rho = 1
    const auto sol = bethe::solve_lieb_liniger(1.0, c, grids);
    const double expect = pi2_3 * (1.0 - 4.0 * g);
    const double band = 20.0 * g * g * pi2_3;
    const double err = std::abs(sol.e_density - expect);
    pass = pass && err <= band;
    detail << ", g=" << g << " err/band " << fmt(err / band);
  }
  r.pass = pass;
  r.detail = detail.str();
  return r;
}

CriterionResult c10_yang_gaudin() {
  CriterionResult r{10, "Yang-Gaudin solver: M/L = rho/2 and dilute band"};
  bethe::BetheGrids grids;
  const double pi2_3 = M_PI * M_PI / 3.0;
  const double ln2 = std::log(2.0);
  bool pass = true;
  std::ostringstream detail;
  for (double g : {0.005, 0.01}) {
    const double c = 1.0 / g;  // rho = 1
    const auto sol = bethe::solve_yang_gaudin(1.0, c, grids);
    const double m_err = std::abs(sol.m_density - 0.5);
    const double expect = pi2_3 * (1.0 - 4.0 * ln2 * g);
    const double band = 20.0 * g * g * pi2_3;
    const double err = std::abs(sol.e_density - expect);
    pass = pass && m_err <= 1e-4 && err <= band;
    detail << "g=" << g << ": M/L err " << fmt(m_err) << ", e err/band "
           << fmt(err / band) << "; ";
  }
  r.pass = pass;
  r.detail = detail.str();
  return r;
}

CriterionResult c11_end_to_end() {
  CriterionResult r{11, "end-to-end: scattering + digamma vs Yang-Gaudin"};
  bethe::BetheGrids grids;
  bool pass = true;
  std::ostringstream detail;
  for (double c : {200.0, 100.0}) {
    const auto chk = expansion::yg_cross_check(1.0, c, grids);
    pass = pass && chk.pass;
    detail << "c=" << c << " |diff|/band "
           << fmt(std::abs(chk.expansion_e - chk.bethe_e) / chk.band) << "; ";
  }
  r.pass = pass;
  r.detail = detail.str();
  return r;
}

CriterionResult c12_hard_core_end_to_end() {
  CriterionResult r{12, "hard-core exact vs first-order expansion"};
  bool pass = true;
  std::ostringstream detail;
  for (double rho_a : {0.01, 0.02, 0.05}) {
    // N = 10, L = 1000, rho = 0.01, a = rho_a / rho
    const auto cmp = expansion::hard_core_exact(10.0, 1000.0, rho_a / 0.01);
    pass = pass && cmp.pass;
    detail << "rho*a=" << rho_a << " gap/bound " << fmt(cmp.gap / cmp.bound)
           << "; ";
  }
  r.pass = pass;
  r.detail = detail.str();
  return r;
}

CriterionResult c13_girardeau() {
  CriterionResult r{13, "Girardeau bound strictly improved for c > c'"};
  double min_margin = std::numeric_limits<double>::infinity();
  for (int i = 0; i < 20; ++i) {
    const double c = 1.5 + (10.0 - 1.5) * i / 19.0;
    for (int j = 0; j < 20; ++j) {
      const double cp = 0.5 + (c - 0.1 - 0.5) * j / 19.0;
      if (cp <= 0.0 || cp >= c) continue;
      min_margin =
          std::min(min_margin, expansion::llh_compare(0.01, c, cp).margin);
    }
  }
  const double equal_margin = std::abs(expansion::llh_compare(0.01, 3.0, 3.0).margin);
  r.pass = min_margin > 0.0 && equal_margin <= 1e-12;
  r.detail = "min margin " + fmt(min_margin) + ", margin at c=c' " +
             fmt(equal_margin);
  return r;
}

CriterionResult c14_free_fermi(unsigned seed) {
  CriterionResult r{14, "free-Fermi pair density bound rho2 <= 8 pi^2 rho^4 d^2"};
  double worst = 0.0;
  for (int n : {4, 8}) {
    const fermi::FreeFermiBox box{n, static_cast<double>(n)};
    const auto rep = fermi::check_density_bounds(box, 10000, seed + 14);
    worst = std::max(worst, rep.max_ratio2);
  }
  r.pass = worst <= 1.0;
  r.detail = "max ratio = " + fmt(worst);
  return r;
}

std::string determinism_report(unsigned seed) {
  nlohmann::ordered_json j;
  j["schema"] = io::kSchema;
  j["seed"] = seed;
  {
    const auto spin_dim = spin::SpinLocalDim::from_twice_j(1);
    const auto proj = spin::build_pair_projectors(spin_dim);
    chain::SpinChainSpec spec;
    spec.spin_dim = spin_dim;
    spec.n_sites = 8;
    spec.coupling = spin::build_coupling(spin::LaiSutherlandKind{}, proj);
    spec.solver = chain::SolverKind::Lanczos;
    spec.lanczos.seed = seed;
    j["chain_eps_8"] = chain::ground_energy_per_site(spec).epsilon;
  }
  {
    bethe::BetheGrids grids;
    j["ll_e_c50"] = bethe::solve_lieb_liniger(1.0, 50.0, grids).e_density;
  }
  {
    const auto v = ScalarPotential::double_delta(2.0, 0.1);
    j["dd_a_e"] = scatter::solve_scalar_scattering(v, 1.0, Parity::Even).a;
    std::mt19937 rng(seed);
    const auto phi = random_parity_poly(rng, Parity::Even);
    j["dyson_sample"] = scatter::dyson_gap(phi, Parity::Even, v, 1.0);
  }
  return io::dump_json(j);
}

CriterionResult c15_determinism(unsigned seed) {
  CriterionResult r{15, "byte-identical reports for a fixed seed"};
  const std::string a = determinism_report(seed);
  const std::string b = determinism_report(seed);
  r.pass = a == b;
  r.detail = r.pass ? "reports identical" : "reports differ";
  return r;
}

}  // namespace

std::vector<CriterionResult> run_all(unsigned seed) {
  std::vector<CriterionResult> out;
  out.push_back(c1_scattering_closed_forms());
  out.push_back(c2_matrix_reduction());
  out.push_back(c3_energy_identity());
  out.push_back(c4_dyson(seed));
  out.push_back(c5_hard_core_bound(seed));
  out.push_back(c6_sandwich(seed));
  out.push_back(c7_small_chain());
  out.push_back(c8_llh_chain(seed));
  out.push_back(c9_lieb_liniger());
  out.push_back(c10_yang_gaudin());
  out.push_back(c11_end_to_end());
  out.push_back(c12_hard_core_end_to_end());
  out.push_back(c13_girardeau());
  out.push_back(c14_free_fermi(seed));
  out.push_back(c15_determinism(seed));
  return out;
}

nlohmann::ordered_json report_json(const std::vector<CriterionResult>& results,
                                   unsigned seed) {
  nlohmann::ordered_json j;
  j["schema"] = io::kSchema;
  j["seed"] = seed;
  j["criteria"] = nlohmann::ordered_json::array();
  bool all = true;
  for (const auto& r : results) {
    nlohmann::ordered_json row;
    row["id"] = r.id;
    row["name"] = r.name;
    row["pass"] = r.pass;
    row["detail"] = r.detail;
    j["criteria"].push_back(row);
    all = all && r.pass;
  }
  j["all_pass"] = all;
  return j;
}

}  // namespace dilute1d::acceptance
