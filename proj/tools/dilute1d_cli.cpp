#include <CLI11.hpp>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <sstream>
#include <stdexcept>
#include <string>

#include "dilute1d/acceptance.hpp"
#include "dilute1d/bethe.hpp"
#include "dilute1d/expansion.hpp"
#include "dilute1d/free_fermi.hpp"
#include "dilute1d/io.hpp"
#include "dilute1d/scattering.hpp"
#include "dilute1d/spin_algebra.hpp"
#include "dilute1d/spin_chain.hpp"

namespace {

// exit codes: 0 ok, 2 config error, 3 solver non-convergence, 4 assertion
// failure (verify)
constexpr int kExitConfig = 2;
constexpr int kExitSolver = 3;
constexpr int kExitAssert = 4;

struct SolverError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

nlohmann::json load_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw CLI::ValidationError("input", "cannot open " + path);
  nlohmann::json j;
  in >> j;
  return j;
}

std::string fmt17(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

std::string to_csv(const nlohmann::ordered_json& j) {
  std::string head, row;
  for (auto it = j.begin(); it != j.end(); ++it) {
    if (!it.value().is_primitive()) continue;
    if (!head.empty()) {
      head += ",";
      row += ",";
    }
    head += it.key();
    if (it.value().is_number_float())
      row += fmt17(it.value().get<double>());
    else
      row += it.value().dump();
  }
  return head + "\n" + row + "\n";
}

void emit(const nlohmann::ordered_json& j, const std::string& output,
          const std::string& format) {
  const std::string text =
      format == "csv" ? to_csv(j) : dilute1d::io::dump_json(j);
  if (output.empty() || output == "-") {
    std::cout << text;
  } else {
    std::ofstream out(output);
    if (!out) throw CLI::ValidationError("output", "cannot write " + output);
    out << text;
  }
}

dilute1d::bethe::BetheGrids grids_from_env() {
  dilute1d::bethe::BetheGrids g;
  if (const char* profile = std::getenv("DILUTE1D_PROFILE");
      profile && std::string(profile) == "fast") {
    g.n_k = 128;
    g.n_lambda = 200;
  }
  return g;
}

nlohmann::ordered_json bethe_json(const dilute1d::bethe::BetheSolution& sol,
                                  bool yg) {
  nlohmann::ordered_json out;
  out["schema"] = dilute1d::io::kSchema;
  out["model"] = yg ? "yang-gaudin" : "lieb-liniger";
  out["Q"] = sol.q;
  if (yg) {
    out["B_cut"] = sol.b_cut;
    out["M_density"] = sol.m_density;
    out["sigma_tail_ratio"] = sol.sigma_tail_ratio;
  }
  out["rho"] = sol.rho;
  out["e_density"] = sol.e_density;
  out["iterations"] = sol.iterations;
  out["residual"] = sol.residual;
  return out;
}

int twice_j_from_flag(double j_flag) {
  const double twice = 2.0 * j_flag;
  const int twice_j = static_cast<int>(std::lround(twice));
  if (twice_j < 1 || std::abs(twice - twice_j) > 1e-12)
    throw CLI::ValidationError("--J", "J must be a positive half-integer");
  return twice_j;
}

}  // namespace

int main(int argc, char** argv) {
  using namespace dilute1d;

  CLI::App app{
      "dilute1d: scattering lengths, spin chains, Bethe-ansatz integral "
      "equations and the dilute energy expansion for 1d spin-J Fermi gases"};
  app.require_subcommand(1);

  std::string output, format = "json";
  unsigned seed = 0;
  app.add_option("-o,--output", output, "output file (default stdout)");
  app.add_option("--format", format, "json or csv")
      ->check(CLI::IsMember({"json", "csv"}));
  app.add_option("--seed", seed, "RNG seed (default 0, deterministic)");

  // scatter
  auto* scatter_cmd =
      app.add_subcommand("scatter", "scalar zero-energy scattering length");
  std::string scatter_input, parity_flag = "even";
  double radius = 1.0;
  scatter_cmd->add_option("--input", scatter_input, "potential JSON document")
      ->required();
  scatter_cmd->add_option("--parity", parity_flag, "even or odd")
      ->check(CLI::IsMember({"even", "odd"}));
  scatter_cmd->add_option("-R,--radius", radius, "matching radius R > R0");

  // scatter-matrix
  auto* smat_cmd = app.add_subcommand("scatter-matrix",
                                      "matrix scattering solution and A");
  std::string smat_input, bc_flag = "fermionic";
  smat_cmd->add_option("--input", smat_input, "potential JSON document")
      ->required();
  smat_cmd->add_option("--bc", bc_flag, "fermionic, bosonic or symmetric")
      ->check(CLI::IsMember({"fermionic", "bosonic", "symmetric"}));
  smat_cmd->add_option("-R,--radius", radius, "matching radius R > R0");

  // chain
  auto* chain_cmd =
      app.add_subcommand("chain", "spin chain ground energy per site");
  double j_flag = 0.5, llh_c = 1.0, llh_cp = 1.0;
  int n_sites = 4;
  std::string coupling_flag = "ls", chain_bc = "periodic",
              solver_flag = "auto";
  chain_cmd->add_option("--J", j_flag, "spin, half-integer");
  chain_cmd->add_option("--N", n_sites, "site count >= 2")->required();
  chain_cmd->add_option("--coupling", coupling_flag, "ls or llh")
      ->check(CLI::IsMember({"ls", "llh"}));
  chain_cmd->add_option("--c", llh_c, "LLH symmetric coupling");
  chain_cmd->add_option("--cprime", llh_cp, "LLH antisymmetric coupling");
  chain_cmd->add_option("--bc", chain_bc, "periodic or open")
      ->check(CLI::IsMember({"periodic", "open"}));
  chain_cmd->add_option("--solver", solver_flag, "dense, lanczos or auto")
      ->check(CLI::IsMember({"dense", "lanczos", "auto"}));

  // bethe-ll / bethe-yg
  auto* ll_cmd = app.add_subcommand("bethe-ll", "Lieb-Liniger ground state");
  auto* yg_cmd = app.add_subcommand("bethe-yg", "Yang-Gaudin ground state");
  double rho = 1.0, coupling_c = 1.0;
  for (auto* cmd : {ll_cmd, yg_cmd}) {
    cmd->add_option("--rho", rho, "particle density")->required();
    cmd->add_option("--c", coupling_c, "delta coupling > 0")->required();
  }

  // freefermi
  auto* ff_cmd =
      app.add_subcommand("freefermi", "free Fermi densities and bounds");
  int ff_n = 8, ff_samples = 10000;
  double ff_l = 8.0;
  ff_cmd->add_option("--N", ff_n, "particle number")->required();
  ff_cmd->add_option("--L", ff_l, "box length")->required();
  ff_cmd->add_option("--samples", ff_samples, "Monte Carlo sample count");

  // expand
  auto* expand_cmd =
      app.add_subcommand("expand", "first-order dilute energy expansion");
  std::string expand_input;
  double exp_n = 10.0, exp_l = 1000.0;
  expand_cmd->add_option("--input", expand_input, "potential JSON document")
      ->required();
  expand_cmd->add_option("--N", exp_n, "particle number")->required();
  expand_cmd->add_option("--L", exp_l, "box length")->required();
  expand_cmd->add_option("--J", j_flag, "spin, half-integer");
  expand_cmd->add_option("-R,--radius", radius, "scattering radius R > R0");

  // verify
  auto* verify_cmd =
      app.add_subcommand("verify", "run the full acceptance suite");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*scatter_cmd) {
      const auto v = io::scalar_potential_from_json(load_json(scatter_input));
      const auto parity =
          parity_flag == "even" ? scatter::Parity::Even : scatter::Parity::Odd;
      const auto res = scatter::solve_scalar_scattering(v, radius, parity);
      emit(io::scalar_result_to_json(res), output, format);
    } else if (*smat_cmd) {
      const auto v = io::matrix_potential_from_json(load_json(smat_input));
      const auto bc = bc_flag == "fermionic"  ? scatter::BcMode::Fermionic
                      : bc_flag == "bosonic" ? scatter::BcMode::Bosonic
                                             : scatter::BcMode::Symmetric;
      const auto res = scatter::solve_matrix_scattering(v, radius, bc);
      nlohmann::ordered_json out;
      out["schema"] = io::kSchema;
      out["bc"] = bc_flag;
      out["R"] = res.r;
      out["dim"] = res.dim;
      out["has_infinite_channel"] = res.has_infinite;
      auto matrix_to_json = [](const Eigen::MatrixXd& m) {
        nlohmann::ordered_json rows = nlohmann::ordered_json::array();
        for (int i = 0; i < m.rows(); ++i) {
          nlohmann::ordered_json row = nlohmann::ordered_json::array();
          for (int k = 0; k < m.cols(); ++k) row.push_back(m(i, k));
          rows.push_back(row);
        }
        return rows;
      };
      out["A"] = matrix_to_json(res.a_matrix);
      if (res.has_infinite)
        out["inf_projector"] = matrix_to_json(res.inf_projector);
      out["diagnostics"] = {
          {"r_independence_residual",
           res.diagnostics.r_independence_residual},
          {"hermiticity_residual", res.diagnostics.hermiticity_residual},
          {"block_residual", res.diagnostics.block_residual},
          {"energy_identity_residual",
           res.diagnostics.energy_identity_residual},
          {"extraction_disagreement",
           res.diagnostics.extraction_disagreement}};
      emit(out, output, format);
    } else if (*chain_cmd) {
      chain::SpinChainSpec spec;
      spec.spin_dim = spin::SpinLocalDim::from_twice_j(twice_j_from_flag(j_flag));
      spec.n_sites = n_sites;
      spec.bc = chain_bc == "open" ? chain::Boundary::Open
                                   : chain::Boundary::Periodic;
      const auto proj = spin::build_pair_projectors(spec.spin_dim);
      if (coupling_flag == "llh") {
        spec.coupling =
            spin::build_coupling(spin::LlhKind{llh_c, llh_cp}, proj);
      } else {
        spec.coupling = spin::build_coupling(spin::LaiSutherlandKind{}, proj);
      }
      spec.solver = solver_flag == "dense"     ? chain::SolverKind::Dense
                    : solver_flag == "lanczos" ? chain::SolverKind::Lanczos
                                               : chain::SolverKind::Auto;
      spec.lanczos.seed = seed;
      const auto res = chain::ground_energy_per_site(spec);
      if (res.residual > 1e-4)
        throw SolverError("eigensolver residual " + fmt17(res.residual));
      nlohmann::ordered_json out;
      out["schema"] = io::kSchema;
      out["J"] = j_flag;
      out["N"] = n_sites;
      out["coupling"] = coupling_flag;
      out["bc"] = chain_bc;
      out["epsilon"] = res.epsilon;
      out["residual"] = res.residual;
      out["iterations"] = res.iterations;
      if (coupling_flag == "ls") {
        out["epsilon_thermodynamic"] =
            chain::thermodynamic_energy_per_site(spec.spin_dim.twice_j);
        out["sandwich_lower"] = out["epsilon_thermodynamic"].get<double>() -
                                1.0 / n_sites;
        out["sandwich_upper"] = out["epsilon_thermodynamic"].get<double>() +
                                1.0 / n_sites;
      }
      emit(out, output, format);
    } else if (*ll_cmd || *yg_cmd) {
      const auto grids = grids_from_env();
      const bool yg = static_cast<bool>(*yg_cmd);
      const auto sol = yg ? bethe::solve_yang_gaudin(rho, coupling_c, grids)
                          : bethe::solve_lieb_liniger(rho, coupling_c, grids);
      if (sol.residual > grids.fp_tol * 10)
        throw SolverError("fixed point defect " + fmt17(sol.residual));
      emit(bethe_json(sol, yg), output, format);
    } else if (*ff_cmd) {
      const fermi::FreeFermiBox box{ff_n, ff_l};
      const auto rep = fermi::check_density_bounds(box, ff_samples, seed);
      nlohmann::ordered_json out;
      out["schema"] = io::kSchema;
      out["N"] = ff_n;
      out["L"] = ff_l;
      out["rho"] = box.rho();
      out["energy"] = fermi::free_fermi_energy(ff_n, ff_l);
      out["pair_bound_max_ratio"] = rep.max_ratio2;
      out["fitted_const3"] = rep.fitted_const3;
      out["fitted_const4"] = rep.fitted_const4;
      out["samples"] = rep.samples;
      emit(out, output, format);
    } else if (*expand_cmd) {
      const auto v = io::scalar_potential_from_json(load_json(expand_input));
      const auto even =
          scatter::solve_scalar_scattering(v, radius, scatter::Parity::Even);
      const auto odd =
          scatter::solve_scalar_scattering(v, radius, scatter::Parity::Odd);
      const int twice_j = twice_j_from_flag(j_flag);
      const double eps = chain::thermodynamic_energy_per_site(twice_j);
      const auto rep = expansion::theorem1_energy(exp_n, exp_l, even.a, odd.a,
                                                  eps, even.a_infinite);
      nlohmann::ordered_json out;
      out["schema"] = io::kSchema;
      out["N"] = exp_n;
      out["L"] = exp_l;
      out["rho"] = rep.rho;
      out["J"] = j_flag;
      if (rep.a_e_infinite)
        out["a_e"] = "-inf";
      else
        out["a_e"] = rep.a_e;
      out["a_o"] = rep.a_o;
      out["eps_spin"] = rep.eps_spin;
      out["leading"] = rep.leading;
      out["valid"] = rep.valid;
      if (rep.valid) {
        out["correction"] = rep.correction;
        out["total_first_order"] = rep.total_first_order;
        out["smallness"] = rep.smallness;
      }
      emit(out, output, format);
    } else if (*verify_cmd) {
      const auto results = acceptance::run_all(seed);
      bool all = true;
      for (const auto& r : results) {
        std::printf("[%s] %2d %s%s%s\n", r.pass ? "PASS" : "FAIL", r.id,
                    r.name.c_str(), r.detail.empty() ? "" : ": ",
                    r.detail.c_str());
        all = all && r.pass;
      }
      const auto report = acceptance::report_json(results, seed);
      if (!output.empty()) emit(report, output, "json");
      if (!all) return kExitAssert;
    }
  } catch (const CLI::ValidationError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const std::invalid_argument& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const SolverError& e) {
    std::cerr << "solver error: " << e.what() << "\n";
    return kExitSolver;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitSolver;
  }
  return 0;
}
