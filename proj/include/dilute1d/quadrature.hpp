#ifndef DILUTE1D_QUADRATURE_HPP
#define DILUTE1D_QUADRATURE_HPP

#include <cmath>
#include <cstddef>
#include <vector>

namespace dilute1d::quad {

struct Rule {
  std::vector<double> x;  // nodes on [-1, 1]
  std::vector<double> w;
};

// Gauss-Legendre nodes/weights by Newton iteration on P_n.
inline Rule gauss_legendre(std::size_t n) {
  Rule r;
  r.x.resize(n);
  r.w.resize(n);
  const std::size_t m = (n + 1) / 2;
  for (std::size_t i = 0; i < m; ++i) {
    double z = std::cos(M_PI * (static_cast<double>(i) + 0.75) /
                        (static_cast<double>(n) + 0.5));
    double pp = 0.0;
    for (int it = 0; it < 100; ++it) {
      double p0 = 1.0, p1 = 0.0;
      for (std::size_t j = 0; j < n; ++j) {
        const double p2 = p1;
        p1 = p0;
        p0 = ((2.0 * j + 1.0) * z * p1 - j * p2) / (j + 1.0);
      }
      pp = n * (z * p0 - p1) / (z * z - 1.0);
      const double z1 = z;
      z = z1 - p0 / pp;
      if (std::abs(z - z1) < 1e-15) break;
    }
    r.x[i] = -z;
    r.x[n - 1 - i] = z;
    r.w[i] = 2.0 / ((1.0 - z * z) * pp * pp);
    r.w[n - 1 - i] = r.w[i];
  }
  return r;
}

// Same rule mapped to [a, b].
inline Rule gauss_legendre(std::size_t n, double a, double b) {
  Rule r = gauss_legendre(n);
  const double mid = 0.5 * (a + b), half = 0.5 * (b - a);
  for (std::size_t i = 0; i < n; ++i) {
    r.x[i] = mid + half * r.x[i];
    r.w[i] *= half;
  }
  return r;
}

}  // namespace dilute1d::quad

#endif
