#include "tensor3/simd.hpp"

#include <cstdlib>
#include <cstring>

#include "simd_impl.hpp"

namespace t3::simd {

namespace {

bool cpu_has_avx2() noexcept {
#if defined(T3_HAVE_AVX2) && (defined(__GNUC__) || defined(__clang__))
  return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
  return false;
#endif
}

const KernelTable* select() noexcept {
  const char* forced = std::getenv("T3_KERNELS");
  if (forced != nullptr && std::strcmp(forced, "scalar") == 0) return &scalar_table();
  if (const KernelTable* t = avx2_table()) return t;
  return &scalar_table();
}

}  // namespace

const KernelTable& scalar_table() noexcept {
  static const KernelTable table{Isa::Scalar, "scalar", &scalar::dot, &scalar::weighted_rows,
                                 &scalar::row_dots};
  return table;
}

const KernelTable* avx2_table() noexcept {
#if defined(T3_HAVE_AVX2)
  static const KernelTable table{Isa::Avx2, "avx2", &avx2::dot, &avx2::weighted_rows,
                                 &avx2::row_dots};
  return cpu_has_avx2() ? &table : nullptr;
#else
  return nullptr;
#endif
}

const KernelTable& active() noexcept {
  static const KernelTable* const table = select();
  return *table;
}

}  // namespace t3::simd
