#include <cstdlib>
#include <string_view>

#include "glay/kernels.hpp"

namespace glay::kernels {

#if defined(GLAY_HAVE_AVX2)
namespace detail {
const KernelTable* avx2_table();
}
#endif

const KernelTable* avx2_kernels() {
#if defined(GLAY_HAVE_AVX2)
  return __builtin_cpu_supports("avx2") ? detail::avx2_table() : nullptr;
#else
  return nullptr;
#endif
}

const KernelTable& active_kernels() {
  static const KernelTable* chosen = [] {
    if (const char* env = std::getenv("GLAY_SIMD"); env && std::string_view(env) == "scalar")
      return &scalar_kernels();
    if (const KernelTable* t = avx2_kernels()) return t;
    return &scalar_kernels();
  }();
  return *chosen;
}

}  // namespace glay::kernels
