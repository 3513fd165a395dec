#include "h90/kernels.hpp"

#if defined(H90_HAVE_AVX2)

#include <immintrin.h>

namespace h90::kernels::detail {

namespace {

// Multiplication by a fixed coefficient is a 16-entry byte table lookup,
// since every residue is below 16. The table is replicated into both
// 128-bit lanes because vpshufb shuffles per lane.
inline __m256i mul_table(std::uint8_t coef, std::uint8_t p) {
  alignas(32) std::uint8_t lut[32];
  for (int x = 0; x < 16; ++x) {
    lut[x] = static_cast<std::uint8_t>(x < p ? (coef * x) % p : 0);
    lut[x + 16] = lut[x];
  }
  return _mm256_load_si256(reinterpret_cast<const __m256i*>(lut));
}

// t < 2p, so t mod p = min(t, t - p) under unsigned wraparound.
inline __m256i reduce_once(__m256i t, __m256i vp) {
  return _mm256_min_epu8(t, _mm256_sub_epi8(t, vp));
}

void axpy_avx2(std::uint8_t* dst, const std::uint8_t* src, std::uint8_t coef, std::uint8_t p,
               std::size_t n) {
  const __m256i lut = mul_table(coef, p);
  const __m256i vp = _mm256_set1_epi8(static_cast<char>(p));
  std::size_t j = 0;
  for (; j + 32 <= n; j += 32) {
    __m256i s = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(src + j));
    __m256i d = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(dst + j));
    __m256i t = _mm256_add_epi8(d, _mm256_shuffle_epi8(lut, s));
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst + j), reduce_once(t, vp));
  }
  scalar_ops.axpy(dst + j, src + j, coef, p, n - j);
}

void scale_avx2(std::uint8_t* row, std::uint8_t coef, std::uint8_t p, std::size_t n) {
  const __m256i lut = mul_table(coef, p);
  std::size_t j = 0;
  for (; j + 32 <= n; j += 32) {
    __m256i r = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(row + j));
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(row + j), _mm256_shuffle_epi8(lut, r));
  }
  scalar_ops.scale(row + j, coef, p, n - j);
}

}  // namespace

const RowOps avx2_ops{Isa::avx2, &axpy_avx2, &scale_avx2};

}  // namespace h90::kernels::detail

#endif
