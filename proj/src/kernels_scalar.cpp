#include "h90/kernels.hpp"

namespace h90::kernels::detail {

namespace {

void axpy_scalar(std::uint8_t* dst, const std::uint8_t* src, std::uint8_t coef, std::uint8_t p,
                 std::size_t n) {
  for (std::size_t j = 0; j < n; ++j)
    dst[j] = static_cast<std::uint8_t>((dst[j] + coef * src[j]) % p);
}

void scale_scalar(std::uint8_t* row, std::uint8_t coef, std::uint8_t p, std::size_t n) {
  for (std::size_t j = 0; j < n; ++j) row[j] = static_cast<std::uint8_t>((coef * row[j]) % p);
}

}  // namespace

const RowOps scalar_ops{Isa::scalar, &axpy_scalar, &scale_scalar};

}  // namespace h90::kernels::detail
