#include <cstdlib>
#include <string>

#include "h90/field.hpp"
#include "h90/kernels.hpp"

namespace h90::kernels {

namespace {

bool cpu_has_avx2() noexcept {
#if defined(H90_HAVE_AVX2) && (defined(__GNUC__) || defined(__clang__))
  return __builtin_cpu_supports("avx2");
#else
  return false;
#endif
}

const RowOps* pick_default() noexcept {
  if (const char* env = std::getenv("H90_ISA")) {
    std::string want(env);
    if (want == "scalar") return &detail::scalar_ops;
#if defined(H90_HAVE_AVX2)
    if (want == "avx2" && cpu_has_avx2()) return &detail::avx2_ops;
#endif
#if defined(H90_HAVE_NEON)
    if (want == "neon") return &detail::neon_ops;
#endif
  }
#if defined(H90_HAVE_AVX2)
  if (cpu_has_avx2()) return &detail::avx2_ops;
#endif
#if defined(H90_HAVE_NEON)
  return &detail::neon_ops;
#endif
  return &detail::scalar_ops;
}

const RowOps*& current() noexcept {
  static const RowOps* ops = pick_default();
  return ops;
}

}  // namespace

bool available(Isa isa) noexcept {
  switch (isa) {
    case Isa::scalar:
      return true;
    case Isa::avx2:
      return cpu_has_avx2();
    case Isa::neon:
#if defined(H90_HAVE_NEON)
      return true;
#else
      return false;
#endif
  }
  return false;
}

const RowOps& ops_for(Isa isa) {
  if (!available(isa)) throw Error("kernel variant " + std::string(name(isa)) + " unavailable");
  switch (isa) {
#if defined(H90_HAVE_AVX2)
    case Isa::avx2:
      return detail::avx2_ops;
#endif
#if defined(H90_HAVE_NEON)
    case Isa::neon:
      return detail::neon_ops;
#endif
    default:
      return detail::scalar_ops;
  }
}

const RowOps& active() noexcept { return *current(); }

void force(Isa isa) { current() = &ops_for(isa); }

std::string_view name(Isa isa) noexcept {
  switch (isa) {
    case Isa::scalar:
      return "scalar";
    case Isa::avx2:
      return "avx2";
    case Isa::neon:
      return "neon";
  }
  return "?";
}

}  // namespace h90::kernels
