#include "dilute1d/spin_chain.hpp"

#include <lapacke.h>

#include <boost/math/special_functions/digamma.hpp>
#include <cmath>
#include <random>
#include <stdexcept>

#include "dilute1d/kernels.hpp"

namespace dilute1d::chain {

namespace {

std::size_t chain_dim(int d, int n_sites) {
  std::size_t dim = 1;
  for (int i = 0; i < n_sites; ++i) {
    if (dim > (std::size_t(1) << 40) / static_cast<std::size_t>(d))
      throw std::invalid_argument("spin chain: dimension overflow");
    dim *= static_cast<std::size_t>(d);
  }
  return dim;
}

// out += (1/N) M^{i,i+1} in, adjacent bond at site i (0-based).
void apply_adjacent_bond(const Eigen::MatrixXd& m, int d, int n_sites, int i,
                         double inv_n, const double* in, double* out) {
  const std::size_t ldim = chain_dim(d, i);
  const std::size_t rdim = chain_dim(d, n_sites - i - 2);
  const int dd = d * d;
  std::vector<double> pair_in(dd), pair_out(dd);
  for (std::size_t l = 0; l < ldim; ++l) {
    for (std::size_t r = 0; r < rdim; ++r) {
      const std::size_t base = (l * dd) * rdim + r;
      for (int p = 0; p < dd; ++p) pair_in[p] = in[base + p * rdim];
      for (int p = 0; p < dd; ++p) {
        double acc = 0.0;
        for (int q = 0; q < dd; ++q) acc += m(p, q) * pair_in[q];
        pair_out[p] = acc;
      }
      for (int p = 0; p < dd; ++p) out[base + p * rdim] += inv_n * pair_out[p];
    }
  }
}

// out += (1/N) M^{N-1,0} in, the periodic wrap bond. Pair basis index is
// a*d+b with a the spin at site N-1 and b the spin at site 0.
void apply_wrap_bond(const Eigen::MatrixXd& m, int d, int n_sites,
                     double inv_n, const double* in, double* out) {
  const std::size_t mdim = chain_dim(d, n_sites - 2);
  const std::size_t hi = mdim * static_cast<std::size_t>(d);
  const int dd = d * d;
  std::vector<double> pair_in(dd), pair_out(dd);
  for (std::size_t mid = 0; mid < mdim; ++mid) {
    for (int a = 0; a < d; ++a)
      for (int b = 0; b < d; ++b)
        pair_in[a * d + b] = in[static_cast<std::size_t>(b) * hi + mid * d + a];
    for (int p = 0; p < dd; ++p) {
      double acc = 0.0;
      for (int q = 0; q < dd; ++q) acc += m(p, q) * pair_in[q];
      pair_out[p] = acc;
    }
    for (int a = 0; a < d; ++a)
      for (int b = 0; b < d; ++b)
        out[static_cast<std::size_t>(b) * hi + mid * d + a] +=
            inv_n * pair_out[a * d + b];
  }
}

struct DenseResult {
  double e_min;
  std::vector<double> ground;
};

DenseResult dense_min_eig(const SpinChainSpec& spec, std::size_t dim) {
  std::vector<double> h(dim * dim, 0.0);
  std::vector<double> e(dim, 0.0);
  for (std::size_t j = 0; j < dim; ++j) {
    std::fill(e.begin(), e.end(), 0.0);
    e[j] = 1.0;
    apply_chain(spec, e.data(), h.data() + j * dim);
  }
  std::vector<double> w(dim);
  const lapack_int info = LAPACKE_dsyev(
      LAPACK_COL_MAJOR, 'V', 'L', static_cast<lapack_int>(dim), h.data(),
      static_cast<lapack_int>(dim), w.data());
  if (info != 0) throw std::runtime_error("dsyev failed");
  DenseResult res;
  res.e_min = w[0];
  res.ground.assign(h.begin(), h.begin() + static_cast<std::ptrdiff_t>(dim));
  return res;
}

struct LanczosResult {
  double e_min;
  std::vector<double> ground;
  int iterations;
  bool converged;
};

LanczosResult lanczos_min_eig(const SpinChainSpec& spec, std::size_t dim) {
  const LanczosOptions& opt = spec.lanczos;
  const int m_max =
      std::min<int>(opt.max_iter, static_cast<int>(dim));
  std::mt19937 rng(opt.seed);
  std::normal_distribution<double> gauss(0.0, 1.0);

  std::vector<std::vector<double>> basis;
  std::vector<double> alpha, beta;
  std::vector<double> v(dim), w(dim);
  for (auto& x : v) x = gauss(rng);
  {
    const double nrm = std::sqrt(kernels::dot(v.data(), v.data(), dim));
    kernels::scale(v.data(), 1.0 / nrm, dim);
  }

  double theta_prev = std::numeric_limits<double>::infinity();
  double theta = theta_prev;
  std::vector<double> ritz;  // tridiagonal eigvec for ground state
  int iters = 0;
  bool converged = false;

  for (int k = 0; k < m_max; ++k) {
    basis.push_back(v);
    std::fill(w.begin(), w.end(), 0.0);
    apply_chain(spec, v.data(), w.data());
    const double a = kernels::dot(w.data(), v.data(), dim);
    alpha.push_back(a);
    kernels::axpy(w.data(), -a, v.data(), dim);
    if (k > 0) kernels::axpy(w.data(), -beta.back(), basis[k - 1].data(), dim);
    // full reorthogonalization
    for (const auto& q : basis) {
      const double c = kernels::dot(w.data(), q.data(), dim);
      kernels::axpy(w.data(), -c, q.data(), dim);
    }

    // Ritz value from the current tridiagonal
    const int kk = k + 1;
    std::vector<double> diag(alpha), off(beta), z(kk * kk);
    off.resize(kk, 0.0);
    const lapack_int info =
        LAPACKE_dstev(LAPACK_COL_MAJOR, 'V', kk, diag.data(), off.data(),
                      z.data(), kk);
    if (info != 0) throw std::runtime_error("dstev failed");
    theta = diag[0];
    ritz.assign(z.begin(), z.begin() + kk);
    iters = kk;
    if (std::abs(theta - theta_prev) < opt.tol) {
      converged = true;
      break;
    }
    theta_prev = theta;

    const double b = std::sqrt(kernels::dot(w.data(), w.data(), dim));
    if (b < 1e-14) {  // invariant subspace exhausted
      converged = true;
      break;
    }
    beta.push_back(b);
    for (std::size_t i = 0; i < dim; ++i) v[i] = w[i] / b;
  }

  LanczosResult res;
  res.e_min = theta;
  res.iterations = iters;
  res.converged = converged;
  res.ground.assign(dim, 0.0);
  for (int k = 0; k < iters; ++k)
    kernels::axpy(res.ground.data(), ritz[k], basis[k].data(), dim);
  return res;
}

}  // namespace

void apply_chain(const SpinChainSpec& spec, const double* in, double* out) {
  const int d = spec.spin_dim.d;
  const int n = spec.n_sites;
  const double inv_n = 1.0 / static_cast<double>(n);
  const Eigen::MatrixXd& m = spec.coupling.matrix;
  for (int i = 0; i + 1 < n; ++i)
    apply_adjacent_bond(m, d, n, i, inv_n, in, out);
  if (spec.bc == Boundary::Periodic && n > 2)
    apply_wrap_bond(m, d, n, inv_n, in, out);
  else if (spec.bc == Boundary::Periodic && n == 2)
    apply_adjacent_bond(m, d, n, 0, inv_n, in, out);  // wrap doubles the bond
}

SpinChainResult ground_energy_per_site(const SpinChainSpec& spec) {
  if (spec.n_sites < 2)
    throw std::invalid_argument("spin chain: need at least 2 sites");
  const std::size_t dim = chain_dim(spec.spin_dim.d, spec.n_sites);
  if (dim > spec.dim_cap)
    throw std::invalid_argument("spin chain: dimension exceeds memory guard");

  SolverKind kind = spec.solver;
  if (kind == SolverKind::Auto)
    kind = dim <= spec.dense_cap ? SolverKind::Dense : SolverKind::Lanczos;
  if (kind == SolverKind::Dense && dim > spec.dense_cap)
    throw std::invalid_argument("spin chain: dense solver above dense_cap");

  SpinChainResult res;
  if (kind == SolverKind::Dense) {
    DenseResult d = dense_min_eig(spec, dim);
    res.epsilon = d.e_min;
    res.ground_vector = std::move(d.ground);
    res.iterations = 1;
  } else {
    LanczosResult l = lanczos_min_eig(spec, dim);
    if (!l.converged)
      throw std::runtime_error("spin chain: Lanczos did not converge");
    res.epsilon = l.e_min;
    res.ground_vector = std::move(l.ground);
    res.iterations = l.iterations;
  }

  // residual check on the returned vector
  std::vector<double> hx(dim, 0.0);
  apply_chain(spec, res.ground_vector.data(), hx.data());
  kernels::axpy(hx.data(), -res.epsilon, res.ground_vector.data(), dim);
  const double nrm = std::sqrt(kernels::dot(res.ground_vector.data(),
                                            res.ground_vector.data(), dim));
  res.residual = std::sqrt(kernels::dot(hx.data(), hx.data(), dim)) / nrm;
  return res;
}

double thermodynamic_energy_per_site(int twice_j) {
  if (twice_j < 1)
    throw std::invalid_argument("thermodynamic energy: need J >= 1/2");
  const double q = static_cast<double>(twice_j) + 1.0;  // 2J+1
  return 1.0 - (boost::math::digamma(1.0) - boost::math::digamma(1.0 / q)) / q;
}

std::vector<SandwichRow> finite_size_sandwich(int twice_j,
                                              const std::vector<int>& n_list,
                                              unsigned seed) {
  const auto spin_dim = spin::SpinLocalDim::from_twice_j(twice_j);
  const auto proj = spin::build_pair_projectors(spin_dim);
  const double eps_inf = thermodynamic_energy_per_site(twice_j);
  std::vector<SandwichRow> rows;
  for (int n : n_list) {
    SpinChainSpec spec;
    spec.spin_dim = spin_dim;
    spec.n_sites = n;
    spec.coupling = spin::build_coupling(spin::LaiSutherlandKind{}, proj);
    spec.lanczos.seed = seed;
    const SpinChainResult r = ground_energy_per_site(spec);
    SandwichRow row;
    row.n = n;
    row.eps = r.epsilon;
    row.lower = eps_inf - 1.0 / n;
    row.upper = eps_inf + 1.0 / n;
    row.pass = r.epsilon >= row.lower && r.epsilon <= row.upper;
    rows.push_back(row);
  }
  return rows;
}

double llh_chain_energy(double c, double c_prime, int n_sites, unsigned seed) {
  const auto spin_dim = spin::SpinLocalDim::from_twice_j(1);
  const auto proj = spin::build_pair_projectors(spin_dim);
  SpinChainSpec spec;
  spec.spin_dim = spin_dim;
  spec.n_sites = n_sites;
  spec.coupling = spin::build_coupling(spin::LlhKind{c, c_prime}, proj);
  spec.lanczos.seed = seed;
  return ground_energy_per_site(spec).epsilon;
}

}  // namespace dilute1d::chain
