#include <doctest.h>

#include <vector>

#include "h90/kernels.hpp"
#include "h90/matrix.hpp"
#include "h90/synthgen.hpp"

using namespace h90;
using namespace h90::kernels;

namespace {

std::vector<Isa> compiled_variants() {
  std::vector<Isa> out;
  for (Isa isa : {Isa::avx2, Isa::neon})
    if (available(isa)) out.push_back(isa);
  return out;
}

// Residues in [0, p) filling n bytes at an unaligned offset.
std::vector<std::uint8_t> random_row(Rng& rng, std::uint8_t p, std::size_t n) {
  std::vector<std::uint8_t> v(n);
  for (auto& e : v) e = static_cast<std::uint8_t>(rng.below(p));
  return v;
}

}  // namespace

TEST_SUITE("kernels") {

TEST_CASE("scalar is always available") {
  CHECK(available(Isa::scalar));
  CHECK(ops_for(Isa::scalar).isa == Isa::scalar);
  CHECK(name(Isa::scalar) == "scalar");
  CHECK(available(active().isa));
}

TEST_CASE("vector variants match scalar bit for bit") {
  const RowOps& ref = ops_for(Isa::scalar);
  Rng rng(2024);
  for (Isa isa : compiled_variants()) {
    INFO("variant " << name(isa));
    const RowOps& vec = ops_for(isa);
    for (std::uint8_t p : {2, 3, 5, 7}) {
      for (std::size_t n = 0; n <= 130; ++n) {
        for (std::size_t off : {0, 1, 3, 7}) {
          auto src = random_row(rng, p, n + off);
          auto dst = random_row(rng, p, n + off);
          auto coef = static_cast<std::uint8_t>(rng.below(p));
          auto a = dst, b = dst;
          ref.axpy(a.data() + off, src.data() + off, coef, p, n);
          vec.axpy(b.data() + off, src.data() + off, coef, p, n);
          REQUIRE(a == b);
          ref.scale(a.data() + off, coef, p, n);
          vec.scale(b.data() + off, coef, p, n);
          REQUIRE(a == b);
        }
      }
    }
  }
}

TEST_CASE("every coefficient and residue pair") {
  const RowOps& ref = ops_for(Isa::scalar);
  for (Isa isa : compiled_variants()) {
    const RowOps& vec = ops_for(isa);
    for (std::uint8_t p : {2, 3, 5, 7}) {
      std::vector<std::uint8_t> src, dst;
      for (int x = 0; x < p; ++x)
        for (int y = 0; y < p; ++y) {
          src.push_back(static_cast<std::uint8_t>(x));
          dst.push_back(static_cast<std::uint8_t>(y));
        }
      for (std::uint8_t c = 0; c < p; ++c) {
        auto a = dst, b = dst;
        ref.axpy(a.data(), src.data(), c, p, a.size());
        vec.axpy(b.data(), src.data(), c, p, b.size());
        CHECK(a == b);
        for (std::size_t j = 0; j < a.size(); ++j) CHECK(a[j] == (dst[j] + c * src[j]) % p);
      }
    }
  }
}

TEST_CASE("forcing a variant keeps elimination results") {
  Rng rng(5);
  Field f(5);
  std::vector<Matrix> ms;
  for (int t = 0; t < 20; ++t) ms.push_back(rng.matrix(f, 40, 70));
  Isa before = active().isa;
  force(Isa::scalar);
  std::vector<Matrix> ref;
  for (const auto& m : ms) ref.push_back(rref(m));
  for (Isa isa : compiled_variants()) {
    force(isa);
    for (std::size_t t = 0; t < ms.size(); ++t) CHECK(rref(ms[t]) == ref[t]);
  }
  force(before);
}

TEST_CASE("unavailable variants are rejected") {
  for (Isa isa : {Isa::avx2, Isa::neon})
    if (!available(isa)) {
      CHECK_THROWS_AS(ops_for(isa), Error);
      CHECK_THROWS_AS(force(isa), Error);
    }
}

}  // TEST_SUITE
