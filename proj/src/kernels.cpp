#include "gradfrob/kernels.hpp"

#include <cassert>

namespace gradfrob::kernels {

namespace scalar {

void axpy_mod(std::span<std::uint32_t> y, std::span<const std::uint32_t> x, std::uint32_t a,
              std::uint32_t p) {
  assert(x.size() == y.size());
  const std::uint32_t ap = shoup_precompute(a, p);
  for (std::size_t i = 0; i < y.size(); ++i) {
    const auto q = static_cast<std::uint32_t>((std::uint64_t{ap} * x[i]) >> 32);
    std::uint32_t r = a * x[i] - q * p;
    if (r >= p) r -= p;
    std::uint32_t s = r + y[i];
    if (s >= p) s -= p;
    y[i] = s;
  }
}

void scale_mod(std::span<std::uint32_t> y, std::uint32_t a, std::uint32_t p) {
  const std::uint32_t ap = shoup_precompute(a, p);
  for (auto& v : y) {
    const auto q = static_cast<std::uint32_t>((std::uint64_t{ap} * v) >> 32);
    std::uint32_t r = a * v - q * p;
    if (r >= p) r -= p;
    v = r;
  }
}

}  // namespace scalar

bool avx2_available() noexcept {
#if defined(GRADFROB_HAVE_AVX2_KERNELS)
  static const bool supported = __builtin_cpu_supports("avx2");
  return supported;
#else
  return false;
#endif
}

const KernelTable& table_for(Isa isa) noexcept {
  static const KernelTable scalar_table{Isa::scalar, &scalar::axpy_mod, &scalar::scale_mod};
#if defined(GRADFROB_HAVE_AVX2_KERNELS)
  static const KernelTable avx2_table{Isa::avx2, &avx2::axpy_mod, &avx2::scale_mod};
  if (isa == Isa::avx2 && avx2_available()) return avx2_table;
#else
  (void)isa;
#endif
  return scalar_table;
}

const KernelTable& active() noexcept {
  static const KernelTable& best = table_for(avx2_available() ? Isa::avx2 : Isa::scalar);
  return best;
}

}  // namespace gradfrob::kernels
