#include "dilute1d/potential.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace dilute1d::scatter {

double TabulatedDensity::eval(double x) const {
  if (empty() || x < xs.front() || x > xs.back()) return 0.0;
  auto it = std::upper_bound(xs.begin(), xs.end(), x);
  if (it == xs.begin()) return vals.front();
  if (it == xs.end()) return vals.back();
  const std::size_t i = static_cast<std::size_t>(it - xs.begin());
  const double t = (x - xs[i - 1]) / (xs[i] - xs[i - 1]);
  return (1.0 - t) * vals[i - 1] + t * vals[i];
}

ScalarPotential ScalarPotential::delta(double c) {
  if (c <= 0.0) throw std::invalid_argument("delta potential: c must be > 0");
  ScalarPotential v;
  v.atoms = {{0.0, 2.0 * c}};
  v.support_radius = 0.0;
  return v;
}

ScalarPotential ScalarPotential::double_delta(double c, double r0) {
  if (c <= 0.0 || r0 < 0.0)
    throw std::invalid_argument("double delta: need c > 0, r0 >= 0");
  ScalarPotential v;
  if (r0 == 0.0)
    v.atoms = {{0.0, 4.0 * c}};
  else
    v.atoms = {{-r0, 2.0 * c}, {r0, 2.0 * c}};
  v.support_radius = r0;
  return v;
}

ScalarPotential ScalarPotential::hardcore(double a) {
  if (a < 0.0) throw std::invalid_argument("hard core: radius must be >= 0");
  ScalarPotential v;
  v.support_radius = a;
  v.hard_core = true;
  return v;
}

void ScalarPotential::validate() const {
  for (const auto& a : atoms) {
    if (a.weight < 0.0)
      throw std::invalid_argument("potential: negative atom weight");
    if (std::abs(a.x) > support_radius + 1e-12)
      throw std::invalid_argument("potential: atom outside support radius");
    if (a.x != 0.0) {
      // even measure: mirror atom with same weight must exist
      const bool found = std::any_of(atoms.begin(), atoms.end(), [&](const Atom& b) {
        return std::abs(b.x + a.x) < 1e-12 && std::abs(b.weight - a.weight) < 1e-12;
      });
      if (!found)
        throw std::invalid_argument("potential: atoms must come in +/- pairs");
    }
  }
  if (!density.empty()) {
    if (density.xs.size() != density.vals.size())
      throw std::invalid_argument("potential: density xs/vals length mismatch");
    for (std::size_t i = 0; i < density.xs.size(); ++i) {
      if (i > 0 && density.xs[i] <= density.xs[i - 1])
        throw std::invalid_argument("potential: density grid not increasing");
      if (density.vals[i] < 0.0)
        throw std::invalid_argument("potential: negative density value");
      if (std::abs(density.xs[i]) > support_radius + 1e-12)
        throw std::invalid_argument("potential: density outside support");
      if (std::abs(density.eval(-density.xs[i]) - density.vals[i]) > 1e-10)
        throw std::invalid_argument("potential: density not even");
    }
  }
  if (hard_core && (!atoms.empty() || !density.empty()))
    throw std::invalid_argument("hard core potential carries no other parts");
}

MatrixPotential MatrixPotential::from_scalar(const ScalarPotential& v, int dim) {
  MatrixPotential m;
  m.dim = dim;
  const Eigen::MatrixXd id = Eigen::MatrixXd::Identity(dim, dim);
  for (const auto& a : v.atoms) m.atoms.push_back({a.x, a.weight * id});
  if (!v.density.empty()) {
    m.density_xs = v.density.xs;
    for (double val : v.density.vals) m.density_vals.push_back(val * id);
  }
  m.support_radius = v.support_radius;
  m.hard_core = v.hard_core;
  return m;
}

MatrixPotential MatrixPotential::llh_delta(double c, double c_prime, int d) {
  if (c <= 0.0 || c_prime <= 0.0)
    throw std::invalid_argument("llh delta: couplings must be positive");
  const int dd = d * d;
  Eigen::MatrixXd swap = Eigen::MatrixXd::Zero(dd, dd);
  for (int a = 0; a < d; ++a)
    for (int b = 0; b < d; ++b) swap(b * d + a, a * d + b) = 1.0;
  const Eigen::MatrixXd id = Eigen::MatrixXd::Identity(dd, dd);
  const Eigen::MatrixXd ps = 0.5 * (id + swap);
  const Eigen::MatrixXd pa = 0.5 * (id - swap);
  MatrixPotential m;
  m.dim = dd;
  m.atoms = {{0.0, 2.0 * c_prime * pa + 2.0 * c * ps}};
  m.support_radius = 0.0;
  return m;
}

MatrixPotential MatrixPotential::hardcore(double a, int dim) {
  MatrixPotential m;
  m.dim = dim;
  m.support_radius = a;
  m.hard_core = true;
  return m;
}

Eigen::MatrixXd MatrixPotential::density_eval(double x) const {
  Eigen::MatrixXd out = Eigen::MatrixXd::Zero(dim, dim);
  if (density_xs.empty() || x < density_xs.front() || x > density_xs.back())
    return out;
  auto it = std::upper_bound(density_xs.begin(), density_xs.end(), x);
  if (it == density_xs.begin()) return density_vals.front();
  if (it == density_xs.end()) return density_vals.back();
  const std::size_t i = static_cast<std::size_t>(it - density_xs.begin());
  const double t = (x - density_xs[i - 1]) / (density_xs[i] - density_xs[i - 1]);
  return (1.0 - t) * density_vals[i - 1] + t * density_vals[i];
}

double MatrixPotential::total_variation_tilde() const {
  // Vtilde = V - (lowest eigenvalue scalar part); report sum over atoms of
  // the spectral norm of the traceless-in-blocks remainder. Used only as a
  // derived diagnostic scalar.
  double tv = 0.0;
  for (const auto& a : atoms) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(a.weight);
    const double lo = es.eigenvalues().minCoeff();
    tv += (a.weight - lo * Eigen::MatrixXd::Identity(dim, dim)).norm();
  }
  for (std::size_t i = 1; i < density_xs.size(); ++i) {
    const double h = density_xs[i] - density_xs[i - 1];
    const Eigen::MatrixXd mid = 0.5 * (density_vals[i] + density_vals[i - 1]);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(mid);
    const double lo = es.eigenvalues().minCoeff();
    tv += h * (mid - lo * Eigen::MatrixXd::Identity(dim, dim)).norm();
  }
  return tv;
}

void MatrixPotential::validate() const {
  const int d = static_cast<int>(std::lround(std::sqrt(double(dim))));
  if (d * d != dim)
    throw std::invalid_argument("matrix potential: dim must be a square");
  Eigen::MatrixXd swap = Eigen::MatrixXd::Zero(dim, dim);
  for (int a = 0; a < d; ++a)
    for (int b = 0; b < d; ++b) swap(b * d + a, a * d + b) = 1.0;

  auto check = [&](const Eigen::MatrixXd& w, const char* what) {
    if (w.rows() != dim || w.cols() != dim)
      throw std::invalid_argument("matrix potential: wrong block size");
    if ((w - w.transpose()).cwiseAbs().maxCoeff() > 1e-10)
      throw std::invalid_argument(std::string("matrix potential: ") + what +
                                  " not Hermitian");
    if ((w * swap - swap * w).cwiseAbs().maxCoeff() > 1e-10)
      throw std::invalid_argument(std::string("matrix potential: ") + what +
                                  " does not commute with swap");
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(w);
    if (es.eigenvalues().minCoeff() < -1e-10)
      throw std::invalid_argument(std::string("matrix potential: ") + what +
                                  " not positive semidefinite");
  };
  for (const auto& a : atoms) {
    if (std::abs(a.x) > support_radius + 1e-12)
      throw std::invalid_argument("matrix potential: atom outside support");
    check(a.weight, "atom");
    if (a.x != 0.0) {
      const bool found =
          std::any_of(atoms.begin(), atoms.end(), [&](const MatrixAtom& b) {
            return std::abs(b.x + a.x) < 1e-12 &&
                   (b.weight - a.weight).cwiseAbs().maxCoeff() < 1e-12;
          });
      if (!found)
        throw std::invalid_argument("matrix potential: atoms must be even");
    }
  }
  for (std::size_t i = 0; i < density_xs.size(); ++i)
    check(density_vals[i], "density node");
  if (hard_core && (!atoms.empty() || !density_xs.empty()))
    throw std::invalid_argument("hard core potential carries no other parts");
}

}  // namespace dilute1d::scatter
