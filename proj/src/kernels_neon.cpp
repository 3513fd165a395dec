#include "h90/kernels.hpp"

#if defined(H90_HAVE_NEON)

#include <arm_neon.h>

namespace h90::kernels::detail {

namespace {

inline uint8x16_t mul_table(std::uint8_t coef, std::uint8_t p) {
  std::uint8_t lut[16];
  for (int x = 0; x < 16; ++x) lut[x] = static_cast<std::uint8_t>(x < p ? (coef * x) % p : 0);
  return vld1q_u8(lut);
}

void axpy_neon(std::uint8_t* dst, const std::uint8_t* src, std::uint8_t coef, std::uint8_t p,
               std::size_t n) {
  const uint8x16_t lut = mul_table(coef, p);
  const uint8x16_t vp = vdupq_n_u8(p);
  std::size_t j = 0;
  for (; j + 16 <= n; j += 16) {
    uint8x16_t t = vaddq_u8(vld1q_u8(dst + j), vqtbl1q_u8(lut, vld1q_u8(src + j)));
    vst1q_u8(dst + j, vminq_u8(t, vsubq_u8(t, vp)));
  }
  scalar_ops.axpy(dst + j, src + j, coef, p, n - j);
}

void scale_neon(std::uint8_t* row, std::uint8_t coef, std::uint8_t p, std::size_t n) {
  const uint8x16_t lut = mul_table(coef, p);
  std::size_t j = 0;
  for (; j + 16 <= n; j += 16) vst1q_u8(row + j, vqtbl1q_u8(lut, vld1q_u8(row + j)));
  scalar_ops.scale(row + j, coef, p, n - j);
}

}  // namespace

const RowOps neon_ops{Isa::neon, &axpy_neon, &scale_neon};

}  // namespace h90::kernels::detail

#endif
