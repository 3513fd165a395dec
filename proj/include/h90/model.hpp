#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "h90/cyclic_module.hpp"

namespace h90 {

struct ModelFlags {
  /// p = 2: a is a sum of two squares in F, hence K_a lies in N(A).
  bool a_sum_two_squares = false;
  /// xi_p is a norm from E, hence K_xi lies in N(A). At p = 2 this is the
  /// same condition as a_sum_two_squares, so K_a lies in N(A) as well.
  bool xi_is_norm = false;
  friend bool operator==(const ModelFlags&, const ModelFlags&) = default;
};

/// A finite model of one degree of a cyclic extension E/F of degree p:
/// A stands for k_n E (an F_p[G]-module), B for k_n F, together with
/// restriction i: B -> A, corestriction N: A -> B, and the subspaces
/// K_a = {a} k_{n-1} F and K_xi = {xi_p} k_{n-1} F of B.
class ExtensionModel {
 public:
  /// Throws h90::Error on any dimension or field mismatch.
  ExtensionModel(CyclicModule a, std::size_t b_dim, Matrix i, Matrix n, Subspace k_a,
                 Subspace k_xi, ModelFlags flags = {}, std::string provenance = "synthetic");

  /// A = 0, B = 0.
  static ExtensionModel zero(Field f);

  const Field& field() const noexcept { return a_.field(); }
  int p() const noexcept { return a_.p(); }
  const CyclicModule& a() const noexcept { return a_; }
  std::size_t dim_a() const noexcept { return a_.dim(); }
  std::size_t dim_b() const noexcept { return b_dim_; }
  const Matrix& i() const noexcept { return i_; }
  const Matrix& n() const noexcept { return n_; }
  const Subspace& k_a() const noexcept { return k_a_; }
  const Subspace& k_xi() const noexcept { return k_xi_; }
  const ModelFlags& flags() const noexcept { return flags_; }
  const std::string& provenance() const noexcept { return provenance_; }

  /// N(A) as a subspace of B.
  Subspace norm_group() const { return image(n_); }
  /// i(U) for U a subspace of B.
  Subspace restrict_image(const Subspace& u) const { return u.image_under(i_); }

  ExtensionModel with_flags(ModelFlags flags) const;
  ExtensionModel with_provenance(std::string provenance) const;
  /// Same data with sigma replaced by sigma^c.
  ExtensionModel with_generator_power(int c) const;

 private:
  CyclicModule a_;
  std::size_t b_dim_;
  Matrix i_;
  Matrix n_;
  Subspace k_a_;
  Subspace k_xi_;
  ModelFlags flags_;
  std::string provenance_;
};

/// Componentwise direct sum. Throws on mismatched p.
ExtensionModel direct_sum(const ExtensionModel& m1, const ExtensionModel& m2);

enum class Verdict { pass, fail, skipped };
std::string_view to_string(Verdict v) noexcept;

/// Machine-readable outcome of one checker. A failing report always carries
/// at least one witness vector that can be re-checked with plain linear algebra.
struct TheoremReport {
  std::string checker;
  Verdict verdict = Verdict::pass;
  std::string detail;
  std::vector<Vec> witnesses;
  std::uint64_t fingerprint = 0;
  std::optional<int> degree;

  bool passed() const noexcept { return verdict == Verdict::pass; }
};

/// FNV-1a over the canonical serialization.
std::uint64_t fingerprint(const ExtensionModel& m);

// Axioms. A8 is the exactness ker N = (sigma-1)A + i(B); it is part of the
// base set alongside A1-A5.
enum class Axiom { A1, A2, A3, A4, A5, A6, A7, A8, FlagA, FlagXi };
std::string_view to_string(Axiom a) noexcept;

struct AxiomResult {
  Axiom axiom;
  bool holds;
  std::optional<Vec> witness;
};

/// Every axiom applicable to the model, in order. A6 appears only for p > 2,
/// A7 always (whether or not it is required), flag checks only when set.
std::vector<AxiomResult> check_axioms(const ExtensionModel& m);

/// Pass iff A1-A5 and A8 hold, A6 when p > 2, A7 when required, and the
/// semantic inclusion of every set flag.
TheoremReport validate_model(const ExtensionModel& m, bool require_a7 = false);
/// Whether the base axioms (A1-A5, A8) hold.
bool satisfies_base_axioms(const ExtensionModel& m);

// Theorem checkers. Each throws h90::Error when its precondition fails.
TheoremReport h90_holds(const ExtensionModel& m);
TheoremReport small_h90(const ExtensionModel& m);
TheoremReport criterion_p2(const ExtensionModel& m);
TheoremReport criterion_podd(const ExtensionModel& m);
TheoremReport cor_surjective_equiv(const ExtensionModel& m);
TheoremReport check_sigmamin1(const ExtensionModel& m);
TheoremReport check_length_lemma(const ExtensionModel& m, std::span<const Elem> y);
/// The conclusion for every element of length >= 2, decided on spanning sets.
TheoremReport check_length_lemma_bulk(const ExtensionModel& m);
TheoremReport summand_condition(const ExtensionModel& m);

struct RationalSummand {
  Subspace q;  // inside B
  Subspace p;  // inside A, sigma-stable, A = i(Q) + P directly
};
std::optional<RationalSummand> find_rational_summand(const ExtensionModel& m);

TheoremReport h1_implies_h90(const ExtensionModel& m);
TheoremReport hs_equivalences(const CyclicModule& a);
inline TheoremReport hs_equivalences(const ExtensionModel& m) { return hs_equivalences(m.a()); }

}  // namespace h90
