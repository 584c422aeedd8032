#pragma once

// Row kernels for Gaussian elimination over F_p, p < 2^31. Entries are
// canonical residues in [0, p). Each kernel has a portable reference
// implementation and, on x86-64, an AVX2 variant chosen at runtime.
//
// Products are reduced with Shoup's precomputed-quotient trick: for a fixed
// multiplier a, a' = floor(a * 2^32 / p) gives q = (a' * x) >> 32 with
// a*x - q*p in [0, 2p), which needs only 32x32->64 multiplies.

#include <cstdint>
#include <span>

namespace gradfrob::kernels {

enum class Isa { scalar, avx2 };

/// y[i] <- (y[i] + a * x[i]) mod p. Requires x.size() == y.size(), a < p.
using AxpyFn = void (*)(std::span<std::uint32_t> y, std::span<const std::uint32_t> x,
                        std::uint32_t a, std::uint32_t p);
/// y[i] <- a * y[i] mod p.
using ScaleFn = void (*)(std::span<std::uint32_t> y, std::uint32_t a, std::uint32_t p);

struct KernelTable {
  Isa isa;
  AxpyFn axpy_mod;
  ScaleFn scale_mod;
};

/// floor(a * 2^32 / p).
inline std::uint32_t shoup_precompute(std::uint32_t a, std::uint32_t p) {
  return static_cast<std::uint32_t>((std::uint64_t{a} << 32) / p);
}

namespace scalar {
void axpy_mod(std::span<std::uint32_t> y, std::span<const std::uint32_t> x, std::uint32_t a,
              std::uint32_t p);
void scale_mod(std::span<std::uint32_t> y, std::uint32_t a, std::uint32_t p);
}  // namespace scalar

#if defined(GRADFROB_HAVE_AVX2_KERNELS)
namespace avx2 {
void axpy_mod(std::span<std::uint32_t> y, std::span<const std::uint32_t> x, std::uint32_t a,
              std::uint32_t p);
void scale_mod(std::span<std::uint32_t> y, std::uint32_t a, std::uint32_t p);
}  // namespace avx2
#endif

/// True when the AVX2 variants were compiled in and the CPU supports them.
bool avx2_available() noexcept;

/// Table for a specific ISA; falls back to scalar when unavailable.
const KernelTable& table_for(Isa isa) noexcept;

/// The table used by the elimination routines (best available ISA).
const KernelTable& active() noexcept;

}  // namespace gradfrob::kernels
