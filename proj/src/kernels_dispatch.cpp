#include <cstdlib>

#include "dilute1d/kernels.hpp"

namespace dilute1d::kernels {

namespace {

const Dispatch& select() {
  if (const char* env = std::getenv("DILUTE1D_FORCE_SCALAR");
      env && env[0] == '1')
    return scalar_reference();
#ifdef DILUTE1D_HAVE_AVX2
  if (__builtin_cpu_supports("avx2")) return avx2();
#endif
#ifdef DILUTE1D_HAVE_NEON
  return neon();
#endif
  return scalar_reference();
}

}  // namespace

const Dispatch& active() {
  static const Dispatch& d = select();
  return d;
}

}  // namespace dilute1d::kernels
