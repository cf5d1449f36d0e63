#include "dilute1d/kernels.hpp"

namespace dilute1d::kernels {

namespace {

void lorentz_sweep_scalar(double* y, const double* x, std::size_t nx,
                          const double* t, const double* w, std::size_t nt,
                          double c, double g, double s) {
  const double c2 = c * c;
  const double gc = g * c;
  for (std::size_t i = 0; i < nx; ++i) {
    double acc = 0.0;
    const double xi = x[i];
    for (std::size_t j = 0; j < nt; ++j) {
      const double u = s * (xi - t[j]);
      acc += w[j] * gc / (c2 + u * u);
    }
    y[i] += acc;
  }
}

double dot_scalar(const double* a, const double* b, std::size_t n) {
  double acc = 0.0;
  for (std::size_t i = 0; i < n; ++i) acc += a[i] * b[i];
  return acc;
}

void axpy_scalar(double* y, double alpha, const double* x, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) y[i] += alpha * x[i];
}

void scale_scalar(double* y, double alpha, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) y[i] *= alpha;
}

}  // namespace

const Dispatch& scalar_reference() {
  static const Dispatch d{lorentz_sweep_scalar, dot_scalar, axpy_scalar,
                          scale_scalar, "scalar"};
  return d;
}

}  // namespace dilute1d::kernels
