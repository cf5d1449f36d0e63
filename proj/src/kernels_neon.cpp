#include <arm_neon.h>

#include "dilute1d/kernels.hpp"

namespace dilute1d::kernels {

namespace {

void lorentz_sweep_neon(double* y, const double* x, std::size_t nx,
                        const double* t, const double* w, std::size_t nt,
                        double c, double g, double s) {
  const float64x2_t c2 = vdupq_n_f64(c * c);
  const float64x2_t gc = vdupq_n_f64(g * c);
  const float64x2_t sv = vdupq_n_f64(s);
  for (std::size_t i = 0; i < nx; ++i) {
    const float64x2_t xi = vdupq_n_f64(x[i]);
    float64x2_t acc = vdupq_n_f64(0.0);
    std::size_t j = 0;
    for (; j + 2 <= nt; j += 2) {
      const float64x2_t u = vmulq_f64(sv, vsubq_f64(xi, vld1q_f64(t + j)));
      const float64x2_t den = vfmaq_f64(c2, u, u);
      acc = vaddq_f64(acc, vdivq_f64(vmulq_f64(vld1q_f64(w + j), gc), den));
    }
    double r = vaddvq_f64(acc);
    const double cc = c * c, gcd = g * c;
    for (; j < nt; ++j) {
      const double u = s * (x[i] - t[j]);
      r += w[j] * gcd / (cc + u * u);
    }
    y[i] += r;
  }
}

double dot_neon(const double* a, const double* b, std::size_t n) {
  float64x2_t acc = vdupq_n_f64(0.0);
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2)
    acc = vfmaq_f64(acc, vld1q_f64(a + i), vld1q_f64(b + i));
  double r = vaddvq_f64(acc);
  for (; i < n; ++i) r += a[i] * b[i];
  return r;
}

void axpy_neon(double* y, double alpha, const double* x, std::size_t n) {
  const float64x2_t av = vdupq_n_f64(alpha);
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2)
    vst1q_f64(y + i, vfmaq_f64(vld1q_f64(y + i), av, vld1q_f64(x + i)));
  for (; i < n; ++i) y[i] += alpha * x[i];
}

void scale_neon(double* y, double alpha, std::size_t n) {
  const float64x2_t av = vdupq_n_f64(alpha);
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2)
    vst1q_f64(y + i, vmulq_f64(av, vld1q_f64(y + i)));
  for (; i < n; ++i) y[i] *= alpha;
}

}  // namespace

const Dispatch& neon() {
  static const Dispatch d{lorentz_sweep_neon, dot_neon, axpy_neon, scale_neon,
                          "neon"};
  return d;
}

}  // namespace dilute1d::kernels
