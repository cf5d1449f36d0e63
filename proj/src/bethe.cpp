#include "dilute1d/bethe.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "dilute1d/kernels.hpp"
#include "dilute1d/quadrature.hpp"

namespace dilute1d::bethe {

namespace {

struct Grid {
  std::vector<double> x, w;
};

Grid make_grid(std::size_t n, double half_width) {
  const quad::Rule r = quad::gauss_legendre(n, -half_width, half_width);
  return Grid{r.x, r.w};
}

double integrate(const Grid& g, const std::vector<double>& f) {
  double acc = 0.0;
  for (std::size_t i = 0; i < g.x.size(); ++i) acc += g.w[i] * f[i];
  return acc;
}

// One damped sweep of the Lieb-Liniger equation at fixed Q; returns defect.
double ll_sweep(const Grid& g, double c, double damping,
                std::vector<double>& f, std::vector<double>& scratch) {
  const std::size_t n = g.x.size();
  std::vector<double>& wf = scratch;
  wf.resize(n);
  for (std::size_t j = 0; j < n; ++j) wf[j] = g.w[j] * f[j];
  std::vector<double> rhs(n, 1.0);
  kernels::lorentz_sweep(rhs.data(), g.x.data(), n, g.x.data(), wf.data(), n,
                         c, 2.0, 1.0);
  double defect = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double fnew = rhs[i] / (2.0 * M_PI);
    defect = std::max(defect, std::abs(fnew - f[i]));
    f[i] = (1.0 - damping) * f[i] + damping * fnew;
  }
  return defect;
}

struct InnerResult {
  double rho;
  std::size_t iterations;
  double residual;
};

InnerResult ll_inner(const Grid& g, double c, const BetheGrids& opt,
                     std::vector<double>& f) {
  std::vector<double> scratch;
  double defect = 0.0;
  std::size_t it = 0;
  for (; it < opt.max_sweeps; ++it) {
    defect = ll_sweep(g, c, opt.damping, f, scratch);
    if (defect <= opt.fp_tol) break;
  }
  if (defect > opt.fp_tol)
    throw std::runtime_error(
        "lieb-liniger: fixed point did not converge, defect " +
        std::to_string(defect));
  return {integrate(g, f), it + 1, defect};
}

// Joint damped sweep of the Yang-Gaudin pair at fixed Q; returns defect.
double yg_sweep(const Grid& gk, const Grid& gl, double c, double damping,
                std::vector<double>& f, std::vector<double>& sigma) {
  const std::size_t nk = gk.x.size(), nl = gl.x.size();
  std::vector<double> wf(nk), ws(nl);
  for (std::size_t j = 0; j < nk; ++j) wf[j] = gk.w[j] * f[j];
  for (std::size_t j = 0; j < nl; ++j) ws[j] = gl.w[j] * sigma[j];

  // sigma update: -2c/(c^2+u^2) self-term + 4c/(c^2+4u^2) charge source
  std::vector<double> rhs_s(nl, 0.0), neg(nl, 0.0);
  kernels::lorentz_sweep(neg.data(), gl.x.data(), nl, gl.x.data(), ws.data(),
                         nl, c, 2.0, 1.0);
  kernels::lorentz_sweep(rhs_s.data(), gl.x.data(), nl, gk.x.data(), wf.data(),
                         nk, c, 4.0, 2.0);
  // f update: 1 + 4c/(c^2+4u^2) spin source
  std::vector<double> rhs_f(nk, 1.0);
  kernels::lorentz_sweep(rhs_f.data(), gk.x.data(), nk, gl.x.data(), ws.data(),
                         nl, c, 4.0, 2.0);

  double defect = 0.0;
  for (std::size_t i = 0; i < nl; ++i) {
    const double snew = (rhs_s[i] - neg[i]) / (2.0 * M_PI);
    defect = std::max(defect, std::abs(snew - sigma[i]));
    sigma[i] = (1.0 - damping) * sigma[i] + damping * snew;
  }
  for (std::size_t i = 0; i < nk; ++i) {
    const double fnew = rhs_f[i] / (2.0 * M_PI);
    defect = std::max(defect, std::abs(fnew - f[i]));
    f[i] = (1.0 - damping) * f[i] + damping * fnew;
  }
  return defect;
}

InnerResult yg_inner(const Grid& gk, const Grid& gl, double c,
                     const BetheGrids& opt, std::vector<double>& f,
                     std::vector<double>& sigma) {
  double defect = 0.0;
  std::size_t it = 0;
  for (; it < opt.max_sweeps; ++it) {
    defect = yg_sweep(gk, gl, c, opt.damping, f, sigma);
    if (defect <= opt.fp_tol) break;
  }
  if (defect > opt.fp_tol)
    throw std::runtime_error(
        "yang-gaudin: fixed point did not converge, defect " +
        std::to_string(defect));
  return {integrate(gk, f), it + 1, defect};
}

// Outer solve: bisection on Q against int f = rho. density(Q) is monotone
// increasing; bracket is expanded before bisecting.
template <typename DensityAtQ>
double solve_for_q(double rho, const BetheGrids& opt, DensityAtQ density_at_q) {
  double q_hi = M_PI * rho;
  double d_hi = density_at_q(q_hi);
  int guard = 0;
  while (d_hi < rho) {
    q_hi *= 2.0;
    d_hi = density_at_q(q_hi);
    if (++guard > 60)
      throw std::runtime_error("bethe: failed to bracket Q from above");
  }
  double q_lo = q_hi * 0.5;
  double d_lo = density_at_q(q_lo);
  guard = 0;
  while (d_lo > rho) {
    q_lo *= 0.5;
    d_lo = density_at_q(q_lo);
    if (++guard > 120)
      throw std::runtime_error("bethe: failed to bracket Q from below");
  }
  for (int it = 0; it < 200; ++it) {
    const double q_mid = 0.5 * (q_lo + q_hi);
    const double d_mid = density_at_q(q_mid);
    if (std::abs(d_mid - rho) <= opt.rho_tol) return q_mid;
    if (d_mid < rho)
      q_lo = q_mid;
    else
      q_hi = q_mid;
  }
  throw std::runtime_error("bethe: Q bisection did not reach rho tolerance");
}

}  // namespace

BetheSolution solve_lieb_liniger(double rho, double c, const BetheGrids& grids) {
  if (rho <= 0.0 || c <= 0.0)
    throw std::invalid_argument("lieb-liniger: need rho > 0 and c > 0");
  if (grids.n_k < 64)
    throw std::invalid_argument("lieb-liniger: need at least 64 nodes");

  BetheSolution sol;
  std::vector<double> f;
  const double q_star = solve_for_q(rho, grids, [&](double q) {
    Grid g = make_grid(grids.n_k, q);
    f.assign(grids.n_k, 1.0 / (2.0 * M_PI));
    const InnerResult r = ll_inner(g, c, grids, f);
    sol.iterations += r.iterations;
    sol.residual = r.residual;
    return r.rho;
  });

  Grid g = make_grid(grids.n_k, q_star);
  f.assign(grids.n_k, 1.0 / (2.0 * M_PI));
  ll_inner(g, c, grids, f);
  sol.q = q_star;
  sol.k_nodes = g.x;
  sol.f = f;
  sol.rho = integrate(g, f);
  double e = 0.0;
  for (std::size_t i = 0; i < g.x.size(); ++i) e += g.w[i] * g.x[i] * g.x[i] * f[i];
  sol.e_density = e;
  return sol;
}

BetheSolution solve_yang_gaudin(double rho, double c, const BetheGrids& grids) {
  if (rho <= 0.0 || c <= 0.0)
    throw std::invalid_argument("yang-gaudin: need rho > 0 and c > 0");
  if (grids.n_k < 64 || grids.n_lambda < 64)
    throw std::invalid_argument("yang-gaudin: need at least 64 nodes");

  BetheSolution sol;
  std::vector<double> f, sigma;
  auto density_at_q = [&](double q) {
    const double b = grids.b_cut_factor * std::max(c, q);
    Grid gk = make_grid(grids.n_k, q);
    Grid gl = make_grid(grids.n_lambda, b);
    f.assign(grids.n_k, 1.0 / (2.0 * M_PI));
    sigma.assign(grids.n_lambda, 0.0);
    const InnerResult r = yg_inner(gk, gl, c, grids, f, sigma);
    sol.iterations += r.iterations;
    sol.residual = r.residual;
    sol.b_cut = b;
    return r.rho;
  };
  const double q_star = solve_for_q(rho, grids, density_at_q);
  density_at_q(q_star);

  Grid gk = make_grid(grids.n_k, q_star);
  Grid gl = make_grid(grids.n_lambda, sol.b_cut);
  sol.q = q_star;
  sol.k_nodes = gk.x;
  sol.f = f;
  sol.lambda_nodes = gl.x;
  sol.sigma = sigma;
  sol.rho = integrate(gk, f);
  sol.m_density = integrate(gl, sigma);
  double e = 0.0;
  for (std::size_t i = 0; i < gk.x.size(); ++i)
    e += gk.w[i] * gk.x[i] * gk.x[i] * f[i];
  sol.e_density = e;
  double smax = 0.0;
  for (double s : sigma) smax = std::max(smax, std::abs(s));
  sol.sigma_tail_ratio = smax > 0.0 ? std::abs(sigma.back()) / smax : 0.0;
  return sol;
}

double ll_neumann_lower_bound(double n, double box_l, double c, double kappa) {
  if (n < 1.0 || box_l <= 0.0)
    throw std::invalid_argument("neumann bound: need N >= 1, L > 0");
  const double rho = n / box_l;
  const double interaction = std::isinf(c) ? 0.0 : 4.0 * rho / c;
  return (M_PI * M_PI / 3.0) * n * rho * rho *
         (1.0 - interaction - kappa * std::pow(n, -2.0 / 3.0));
}

}  // namespace dilute1d::bethe
