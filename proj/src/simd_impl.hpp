#pragma once

#include <cstddef>

namespace t3::simd::scalar {
double dot(const double* a, const double* b, std::size_t n);
void weighted_rows(const double* m, const double* w, std::size_t rows, std::size_t cols,
                   double* out);
void row_dots(const double* m, const double* v, std::size_t rows, std::size_t cols, double* out);
}  // namespace t3::simd::scalar

#if defined(T3_HAVE_AVX2)
namespace t3::simd::avx2 {
double dot(const double* a, const double* b, std::size_t n);
void weighted_rows(const double* m, const double* w, std::size_t rows, std::size_t cols,
                   double* out);
void row_dots(const double* m, const double* v, std::size_t rows, std::size_t cols, double* out);
}  // namespace t3::simd::avx2
#endif
