#include "qgame/kernels.hpp"

#if defined(__x86_64__) || defined(_M_X64)
#include <immintrin.h>
#define QGAME_HAVE_X86 1
#else
#define QGAME_HAVE_X86 0
#endif

namespace qgame::kernels::detail {

#if QGAME_HAVE_X86

// Same term grouping as the scalar kernel; FMA contraction changes the last
// few ulps only.
__attribute__((target("avx2,fma"))) void quadratic_values_avx2(
    const FormCoefficients& f, const double* w, const double* x, const double* y, const double* z,
    std::size_t n, double* out) {
  const __m256d c0 = _mm256_set1_pd(f.c[0]), c1 = _mm256_set1_pd(f.c[1]);
  const __m256d c2 = _mm256_set1_pd(f.c[2]), c3 = _mm256_set1_pd(f.c[3]);
  const __m256d c4 = _mm256_set1_pd(f.c[4]), c5 = _mm256_set1_pd(f.c[5]);
  const __m256d c6 = _mm256_set1_pd(f.c[6]), c7 = _mm256_set1_pd(f.c[7]);
  const __m256d c8 = _mm256_set1_pd(f.c[8]), c9 = _mm256_set1_pd(f.c[9]);

  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d a = _mm256_loadu_pd(w + i);
    const __m256d b = _mm256_loadu_pd(x + i);
    const __m256d d = _mm256_loadu_pd(y + i);
    const __m256d e = _mm256_loadu_pd(z + i);

    __m256d diag = _mm256_mul_pd(_mm256_mul_pd(c0, a), a);
    diag = _mm256_fmadd_pd(_mm256_mul_pd(c1, b), b, diag);
    diag = _mm256_fmadd_pd(_mm256_mul_pd(c2, d), d, diag);
    diag = _mm256_fmadd_pd(_mm256_mul_pd(c3, e), e, diag);

    __m256d ra = _mm256_mul_pd(c4, b);
    ra = _mm256_fmadd_pd(c5, d, ra);
    ra = _mm256_fmadd_pd(c6, e, ra);
    __m256d rb = _mm256_mul_pd(c7, d);
    rb = _mm256_fmadd_pd(c8, e, rb);

    __m256d off = _mm256_mul_pd(a, ra);
    off = _mm256_fmadd_pd(b, rb, off);
    off = _mm256_fmadd_pd(_mm256_mul_pd(c9, d), e, off);

    _mm256_storeu_pd(out + i, _mm256_add_pd(diag, off));
  }
  if (i < n) quadratic_values_scalar(f, w + i, x + i, y + i, z + i, n - i, out + i);
}

#else

void quadratic_values_avx2(const FormCoefficients& f, const double* w, const double* x,
                           const double* y, const double* z, std::size_t n, double* out) {
  quadratic_values_scalar(f, w, x, y, z, n, out);
}

#endif

}  // namespace qgame::kernels::detail
