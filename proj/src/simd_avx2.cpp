// Compiled with -mavx2 -mfma. Only reached through the dispatch table after
// a CPU feature check.

#include <immintrin.h>

#include "simd_impl.hpp"

namespace t3::simd::avx2 {

namespace {

inline double hsum(__m256d v) {
  __m128d lo = _mm256_castpd256_pd128(v);
  __m128d hi = _mm256_extractf128_pd(v, 1);
  lo = _mm_add_pd(lo, hi);
  __m128d sh = _mm_unpackhi_pd(lo, lo);
  return _mm_cvtsd_f64(_mm_add_sd(lo, sh));
}

// Lane mask with the first `n` (0..3) lanes enabled.
inline __m256i tail_mask(std::size_t n) {
  alignas(32) static const long long masks[4][4] = {
      {0, 0, 0, 0}, {-1, 0, 0, 0}, {-1, -1, 0, 0}, {-1, -1, -1, 0}};
  return _mm256_load_si256(reinterpret_cast<const __m256i*>(masks[n]));
}

}  // namespace

double dot(const double* a, const double* b, std::size_t n) {
  __m256d acc0 = _mm256_setzero_pd();
  __m256d acc1 = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 8 <= n; i += 8) {
    acc0 = _mm256_fmadd_pd(_mm256_loadu_pd(a + i), _mm256_loadu_pd(b + i), acc0);
    acc1 = _mm256_fmadd_pd(_mm256_loadu_pd(a + i + 4), _mm256_loadu_pd(b + i + 4), acc1);
  }
  for (; i + 4 <= n; i += 4) {
    acc0 = _mm256_fmadd_pd(_mm256_loadu_pd(a + i), _mm256_loadu_pd(b + i), acc0);
  }
  if (i < n) {
    const __m256i mask = tail_mask(n - i);
    acc1 = _mm256_fmadd_pd(_mm256_maskload_pd(a + i, mask), _mm256_maskload_pd(b + i, mask), acc1);
  }
  return hsum(_mm256_add_pd(acc0, acc1));
}

void weighted_rows(const double* m, const double* w, std::size_t rows, std::size_t cols,
                   double* out) {
  std::size_t c = 0;
  for (; c + 4 <= cols; c += 4) {
    __m256d acc = _mm256_setzero_pd();
    for (std::size_t r = 0; r < rows; ++r) {
      acc = _mm256_fmadd_pd(_mm256_set1_pd(w[r]), _mm256_loadu_pd(m + r * cols + c), acc);
    }
    _mm256_storeu_pd(out + c, acc);
  }
  if (c < cols) {
    const __m256i mask = tail_mask(cols - c);
    __m256d acc = _mm256_setzero_pd();
    for (std::size_t r = 0; r < rows; ++r) {
      acc = _mm256_fmadd_pd(_mm256_set1_pd(w[r]), _mm256_maskload_pd(m + r * cols + c, mask), acc);
    }
    _mm256_maskstore_pd(out + c, mask, acc);
  }
}

void row_dots(const double* m, const double* v, std::size_t rows, std::size_t cols, double* out) {
  for (std::size_t r = 0; r < rows; ++r) out[r] = dot(m + r * cols, v, cols);
}

}  // namespace t3::simd::avx2
