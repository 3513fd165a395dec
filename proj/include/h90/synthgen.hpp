#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "h90/model.hpp"

namespace h90 {

/// Per-trial seed: splitmix64 applied to seed + (trial + 1) * golden gamma.
std::uint64_t split_seed(std::uint64_t seed, std::uint64_t trial) noexcept;

/// Deterministic generator with a portable bounded draw (libstdc++ and libc++
/// distributions differ, so none are used).
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}
  std::uint64_t next() { return engine_(); }
  /// Uniform in [0, n); n > 0.
  std::uint64_t below(std::uint64_t n) { return engine_() % n; }
  bool coin() { return (engine_() >> 17) & 1; }
  Elem elem(const Field& f) { return static_cast<Elem>(below(static_cast<std::uint64_t>(f.p()))); }
  Vec vec(const Field& f, std::size_t n);
  Matrix matrix(const Field& f, std::size_t rows, std::size_t cols);
  Matrix invertible(const Field& f, std::size_t n);

 private:
  std::mt19937_64 engine_;
};

enum class GenMode { realizable, freeform };

struct GenSpec {
  int p = 2;
  GenMode mode = GenMode::realizable;
  /// Realizable block multiplicities of V_1, V_2, V_p. At p = 2, V_2 = V_p
  /// and m2 is counted with mp.
  std::size_t m1 = 0;
  std::size_t m2 = 0;
  std::size_t mp = 0;
  /// Freeform block sizes, each in [1, p].
  std::vector<int> block_sizes;
  /// Dimensions of K_a beyond the image of N on non-free generators. Only
  /// p = 2 realizable and freeform models may carry them.
  std::size_t extra_b_dim = 0;
  /// Rank of the part of i(B) outside (sigma-1)A; h90 holds iff it is 0.
  /// Drawn at random when unset.
  std::optional<std::size_t> i1_rank;
  /// Freeform only: dimension of K_xi (random subspace); drawn when unset.
  std::optional<std::size_t> k_xi_dim;
  /// Requested flags; the generator makes the matching inclusions hold.
  ModelFlags flags;
  /// Replace the Jordan bases of A and B by random ones.
  bool conjugate = true;
  std::uint64_t seed = 0;
  /// Freeform rejection budget.
  std::size_t budget = 100000;
};

/// Model satisfying A1-A8 built from blocks {1, 2, p}. Throws on unsatisfiable specs.
ExtensionModel gen_realizable(const GenSpec& spec);
/// Model satisfying A1-A5 and A8 with arbitrary block sizes; A6/A7 not enforced.
ExtensionModel gen_freeform(const GenSpec& spec);
/// Dispatch on spec.mode.
ExtensionModel generate(const GenSpec& spec);

/// Random spec with dim A <= max_dim_a (and at least 1). Block sizes are
/// drawn in [1, p] for freeform mode.
GenSpec random_spec(int p, GenMode mode, std::size_t max_dim_a, std::uint64_t seed);

// Oracles. Each recomputes its answer by brute-force enumeration and throws
// h90::Error ("oracle too large") past the enumeration bound.

/// Fails iff some Q in B has i(Q) != 0 with a sigma-stable complement in A,
/// searched over all subspaces Q of B and all subspaces P of A.
TheoremReport oracle_enumerate_summand_pairs(const ExtensionModel& m);
/// ker N = (sigma-1)A by listing both sets vector by vector.
TheoremReport oracle_exactness(const ExtensionModel& m);
/// Jordan profile from dim ker tau^k, counted by vector enumeration when
/// p^dim <= 2^16, else by a standalone elimination over plain integers.
JordanProfile oracle_decompose(const CyclicModule& a);

}  // namespace h90
