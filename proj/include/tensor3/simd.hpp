#pragma once

// Data-parallel inner kernels behind the contraction products.
//
// Every kernel has a scalar reference implementation and, on x86-64, an
// AVX2/FMA variant. The active table is picked once at startup from the
// CPU feature flags; setting T3_KERNELS=scalar in the environment forces
// the reference path. Both tables stay reachable so the variants can be
// checked against each other.

#include <cstddef>
#include <string_view>

namespace t3::simd {

enum class Isa { Scalar, Avx2 };

struct KernelTable {
  Isa isa;
  const char* name;

  /// sum_n a[n] * b[n]
  double (*dot)(const double* a, const double* b, std::size_t n);

  /// out[c] = sum_r w[r] * m[r * cols + c] for a row-major rows x cols
  /// matrix m. This is w^T M.
  void (*weighted_rows)(const double* m, const double* w, std::size_t rows, std::size_t cols,
                        double* out);

  /// out[r] = sum_c m[r * cols + c] * v[c]. This is M v.
  void (*row_dots)(const double* m, const double* v, std::size_t rows, std::size_t cols,
                   double* out);
};

const KernelTable& scalar_table() noexcept;

/// nullptr when the variant is not compiled in or the CPU lacks the
/// required features.
const KernelTable* avx2_table() noexcept;

/// The table used by the library.
const KernelTable& active() noexcept;

}  // namespace t3::simd
