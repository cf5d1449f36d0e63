#include "dilute1d/free_fermi.hpp"

#include <Eigen/Dense>
#include <cmath>
#include <random>
#include <stdexcept>

namespace dilute1d::fermi {

double FreeFermiBox::orbital(int n, double x) const {
  return std::sqrt(2.0 / box_l) * std::sin(n * M_PI * x / box_l);
}

double FreeFermiBox::gamma1(double x, double y) const {
  double acc = 0.0;
  for (int n = 1; n <= n_particles; ++n) acc += orbital(n, x) * orbital(n, y);
  return acc;
}

double free_fermi_energy(int n_particles, double box_l) {
  if (n_particles < 1 || box_l <= 0.0)
    throw std::invalid_argument("free fermi: need N >= 1, L > 0");
  const double n = n_particles;
  return (M_PI * M_PI / (box_l * box_l)) * n * (n + 1.0) * (2.0 * n + 1.0) / 6.0;
}

double rdm(const FreeFermiBox& box, std::span<const double> xs,
           std::span<const double> ys) {
  const std::size_t k = xs.size();
  if (k != ys.size() || k < 1 || k > 4)
    throw std::invalid_argument("rdm: need 1 <= k <= 4 with matching points");
  for (double x : xs)
    if (x < 0.0 || x > box.box_l)
      throw std::invalid_argument("rdm: point outside the box");
  for (double y : ys)
    if (y < 0.0 || y > box.box_l)
      throw std::invalid_argument("rdm: point outside the box");
  Eigen::MatrixXd m(k, k);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) m(i, j) = box.gamma1(xs[i], ys[j]);
  return m.determinant();
}

double reduced_density(const FreeFermiBox& box, std::span<const double> xs) {
  return rdm(box, xs, xs);
}

DensityBoundReport check_density_bounds(const FreeFermiBox& box, int n_samples,
                                        unsigned seed) {
  std::mt19937 rng(seed);
  std::uniform_real_distribution<double> ux(0.0, box.box_l);
  const double rho = box.rho();
  const double bound2 = 8.0 * M_PI * M_PI * std::pow(rho, 4);

  DensityBoundReport rep;
  rep.samples = n_samples;
  for (int s = 0; s < n_samples; ++s) {
    const double x1 = ux(rng), x2 = ux(rng);
    const double d12 = x1 - x2;
    if (d12 * d12 > 0.0) {
      const double r2 = reduced_density(box, std::array{x1, x2});
      rep.max_ratio2 = std::max(rep.max_ratio2, r2 / (bound2 * d12 * d12));
    }
    const double x3 = ux(rng), x4 = ux(rng);
    const double d23 = x2 - x3, d34 = x3 - x4;
    if (d12 != 0.0 && d23 != 0.0) {
      const double r3 = reduced_density(box, std::array{x1, x2, x3});
      rep.fitted_const3 = std::max(
          rep.fitted_const3,
          r3 / (std::pow(rho, 7) * d12 * d12 * d23 * d23));
    }
    if (d12 != 0.0 && d34 != 0.0) {
      const double r4 = reduced_density(box, std::array{x1, x2, x3, x4});
      rep.fitted_const4 = std::max(
          rep.fitted_const4,
          r4 / (std::pow(rho, 8) * d12 * d12 * d34 * d34));
    }
  }
  return rep;
}

}  // namespace dilute1d::fermi
