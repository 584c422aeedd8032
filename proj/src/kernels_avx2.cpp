#include <immintrin.h>

#include "gradfrob/kernels.hpp"

namespace gradfrob::kernels::avx2 {

namespace {

// Lane-wise a*x mod p for x in [0, 2^32), given a' = floor(a*2^32/p).
inline __m256i mulmod_shoup(__m256i x, __m256i a, __m256i a_pre, __m256i p) {
  const __m256i prod_even = _mm256_mul_epu32(x, a_pre);
  const __m256i prod_odd = _mm256_mul_epu32(_mm256_srli_epi64(x, 32), a_pre);
  const __m256i q_even = _mm256_srli_epi64(prod_even, 32);
  const __m256i q = _mm256_blend_epi32(q_even, prod_odd, 0b10101010);
  __m256i r = _mm256_sub_epi32(_mm256_mullo_epi32(x, a), _mm256_mullo_epi32(q, p));
  // r in [0, 2p): r - p wraps above r exactly when r < p.
  return _mm256_min_epu32(r, _mm256_sub_epi32(r, p));
}

}  // namespace

void axpy_mod(std::span<std::uint32_t> y, std::span<const std::uint32_t> x, std::uint32_t a,
              std::uint32_t p) {
  const std::size_t n = y.size();
  const __m256i av = _mm256_set1_epi32(static_cast<int>(a));
  const __m256i apre = _mm256_set1_epi32(static_cast<int>(shoup_precompute(a, p)));
  const __m256i pv = _mm256_set1_epi32(static_cast<int>(p));
  std::size_t i = 0;
  for (; i + 8 <= n; i += 8) {
    const __m256i xv = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(x.data() + i));
    const __m256i yv = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(y.data() + i));
    const __m256i s = _mm256_add_epi32(mulmod_shoup(xv, av, apre, pv), yv);
    const __m256i out = _mm256_min_epu32(s, _mm256_sub_epi32(s, pv));
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(y.data() + i), out);
  }
  if (i < n) scalar::axpy_mod(y.subspan(i), x.subspan(i), a, p);
}

void scale_mod(std::span<std::uint32_t> y, std::uint32_t a, std::uint32_t p) {
  const std::size_t n = y.size();
  const __m256i av = _mm256_set1_epi32(static_cast<int>(a));
  const __m256i apre = _mm256_set1_epi32(static_cast<int>(shoup_precompute(a, p)));
  const __m256i pv = _mm256_set1_epi32(static_cast<int>(p));
  std::size_t i = 0;
  for (; i + 8 <= n; i += 8) {
    const __m256i yv = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(y.data() + i));
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(y.data() + i),
                        mulmod_shoup(yv, av, apre, pv));
  }
  if (i < n) scalar::scale_mod(y.subspan(i), a, p);
}

}  // namespace gradfrob::kernels::avx2
