#include <immintrin.h>

#include "dilute1d/kernels.hpp"

namespace dilute1d::kernels {

namespace {

inline double hsum256(__m256d v) {
  __m128d lo = _mm256_castpd256_pd128(v);
  __m128d hi = _mm256_extractf128_pd(v, 1);
  lo = _mm_add_pd(lo, hi);
  __m128d sw = _mm_unpackhi_pd(lo, lo);
  return _mm_cvtsd_f64(_mm_add_sd(lo, sw));
}

void lorentz_sweep_avx2(double* y, const double* x, std::size_t nx,
                        const double* t, const double* w, std::size_t nt,
                        double c, double g, double s) {
  const __m256d c2 = _mm256_set1_pd(c * c);
  const __m256d gc = _mm256_set1_pd(g * c);
  const __m256d sv = _mm256_set1_pd(s);
  for (std::size_t i = 0; i < nx; ++i) {
    const __m256d xi = _mm256_set1_pd(x[i]);
    __m256d acc = _mm256_setzero_pd();
    std::size_t j = 0;
    for (; j + 4 <= nt; j += 4) {
      const __m256d tj = _mm256_loadu_pd(t + j);
      const __m256d wj = _mm256_loadu_pd(w + j);
      const __m256d u = _mm256_mul_pd(sv, _mm256_sub_pd(xi, tj));
      const __m256d den = _mm256_fmadd_pd(u, u, c2);
      acc = _mm256_add_pd(acc, _mm256_div_pd(_mm256_mul_pd(wj, gc), den));
    }
    double tail = 0.0;
    const double cc = c * c, gcd = g * c;
    for (; j < nt; ++j) {
      const double u = s * (x[i] - t[j]);
      tail += w[j] * gcd / (cc + u * u);
    }
    y[i] += hsum256(acc) + tail;
  }
}

double dot_avx2(const double* a, const double* b, std::size_t n) {
  __m256d acc = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4)
    acc = _mm256_fmadd_pd(_mm256_loadu_pd(a + i), _mm256_loadu_pd(b + i), acc);
  double r = hsum256(acc);
  for (; i < n; ++i) r += a[i] * b[i];
  return r;
}

void axpy_avx2(double* y, double alpha, const double* x, std::size_t n) {
  const __m256d av = _mm256_set1_pd(alpha);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    __m256d yi = _mm256_loadu_pd(y + i);
    yi = _mm256_fmadd_pd(av, _mm256_loadu_pd(x + i), yi);
    _mm256_storeu_pd(y + i, yi);
  }
  for (; i < n; ++i) y[i] += alpha * x[i];
}

void scale_avx2(double* y, double alpha, std::size_t n) {
  const __m256d av = _mm256_set1_pd(alpha);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4)
    _mm256_storeu_pd(y + i, _mm256_mul_pd(av, _mm256_loadu_pd(y + i)));
  for (; i < n; ++i) y[i] *= alpha;
}

}  // namespace

const Dispatch& avx2() {
  static const Dispatch d{lorentz_sweep_avx2, dot_avx2, axpy_avx2, scale_avx2,
                          "avx2"};
  return d;
}

}  // namespace dilute1d::kernels
