#include "simd_impl.hpp"

namespace t3::simd::scalar {

double dot(const double* a, const double* b, std::size_t n) {
  double s = 0.0;
  for (std::size_t i = 0; i < n; ++i) s += a[i] * b[i];
  return s;
}

void weighted_rows(const double* m, const double* w, std::size_t rows, std::size_t cols,
                   double* out) {
  for (std::size_t c = 0; c < cols; ++c) out[c] = 0.0;
  for (std::size_t r = 0; r < rows; ++r) {
    const double wr = w[r];
    const double* row = m + r * cols;
    for (std::size_t c = 0; c < cols; ++c) out[c] += wr * row[c];
  }
}

void row_dots(const double* m, const double* v, std::size_t rows, std::size_t cols, double* out) {
  for (std::size_t r = 0; r < rows; ++r) out[r] = dot(m + r * cols, v, cols);
}

}  // namespace t3::simd::scalar
