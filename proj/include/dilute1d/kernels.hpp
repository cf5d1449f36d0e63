#ifndef DILUTE1D_KERNELS_HPP
#define DILUTE1D_KERNELS_HPP

#include <cstddef>
#include <string>

namespace dilute1d::kernels {

// y[i] += sum_j w[j] * g*c / (c^2 + s^2*(x[i]-t[j])^2), the Lorentzian
// convolution sweep at the core of the Bethe fixed-point iterations.
// g and s absorb the two kernel shapes (2c/(c^2+u^2) and 4c/(c^2+4u^2)).
using lorentz_sweep_fn = void (*)(double* y, const double* x, std::size_t nx,
                                  const double* t, const double* w, std::size_t nt,
                                  double c, double g, double s);

// Dense-grid helpers used by the eigensolvers.
using dot_fn = double (*)(const double* a, const double* b, std::size_t n);
using axpy_fn = void (*)(double* y, double alpha, const double* x, std::size_t n);
using scale_fn = void (*)(double* y, double alpha, std::size_t n);

struct Dispatch {
  lorentz_sweep_fn lorentz_sweep;
  dot_fn dot;
  axpy_fn axpy;
  scale_fn scale;
  const char* name;
};

// Active implementation, chosen once at startup from CPU features.
// DILUTE1D_FORCE_SCALAR=1 in the environment pins the scalar reference.
const Dispatch& active();
const Dispatch& scalar_reference();
#ifdef DILUTE1D_HAVE_AVX2
const Dispatch& avx2();
#endif
#ifdef DILUTE1D_HAVE_NEON
const Dispatch& neon();
#endif

inline void lorentz_sweep(double* y, const double* x, std::size_t nx,
                          const double* t, const double* w, std::size_t nt,
                          double c, double g, double s) {
  active().lorentz_sweep(y, x, nx, t, w, nt, c, g, s);
}
inline double dot(const double* a, const double* b, std::size_t n) {
  return active().dot(a, b, n);
}
inline void axpy(double* y, double alpha, const double* x, std::size_t n) {
  active().axpy(y, alpha, x, n);
}
inline void scale(double* y, double alpha, std::size_t n) {
  active().scale(y, alpha, n);
}

}  // namespace dilute1d::kernels

#endif
