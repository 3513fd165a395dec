#pragma once

// Row kernels for dense GF(p) elimination. Every entry is a residue in [0, p)
// with p <= 7, stored one per byte. The scalar variant is the reference; the
// vector variants must agree with it bit for bit.

#include <cstddef>
#include <cstdint>
#include <string_view>

namespace h90::kernels {

enum class Isa { scalar, avx2, neon };

struct RowOps {
  Isa isa;
  /// dst[j] = dst[j] + coef * src[j]  (mod p)
  void (*axpy)(std::uint8_t* dst, const std::uint8_t* src, std::uint8_t coef, std::uint8_t p,
               std::size_t n);
  /// row[j] = coef * row[j]  (mod p)
  void (*scale)(std::uint8_t* row, std::uint8_t coef, std::uint8_t p, std::size_t n);
};

/// True when the variant was compiled in and the running CPU supports it.
bool available(Isa isa) noexcept;

/// Kernel table for a specific variant; throws h90::Error if unavailable.
const RowOps& ops_for(Isa isa);

/// The variant picked at startup: best available, unless the H90_ISA
/// environment variable names another one ("scalar", "avx2", "neon").
const RowOps& active() noexcept;

/// Override the active variant (tests, benchmarks). Not thread-safe.
void force(Isa isa);

std::string_view name(Isa isa) noexcept;

namespace detail {
extern const RowOps scalar_ops;
#if defined(H90_HAVE_AVX2)
extern const RowOps avx2_ops;
#endif
#if defined(H90_HAVE_NEON)
extern const RowOps neon_ops;
#endif
}  // namespace detail

}  // namespace h90::kernels
