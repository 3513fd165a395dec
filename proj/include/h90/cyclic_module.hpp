#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "h90/subspace.hpp"

namespace h90 {

/// Block multiplicities of a module for G = <sigma> of order p: m(i) counts
/// the indecomposable summands V_i = F_p[G]/(sigma-1)^i, 1 <= i <= p.
class JordanProfile {
 public:
  explicit JordanProfile(int p) : counts_(static_cast<std::size_t>(p), 0) {}

  int p() const noexcept { return static_cast<int>(counts_.size()); }
  std::size_t m(int i) const { return counts_.at(static_cast<std::size_t>(i - 1)); }
  void set(int i, std::size_t count) { counts_.at(static_cast<std::size_t>(i - 1)) = count; }
  std::size_t dimension() const noexcept;
  std::size_t block_count() const noexcept;
  /// Block sizes in ascending order, each repeated by its multiplicity.
  std::vector<int> block_sizes() const;
  std::string to_string() const;

  friend bool operator==(const JordanProfile&, const JordanProfile&) = default;

 private:
  std::vector<std::size_t> counts_;
};

/// A Jordan basis for tau = sigma - 1. Columns of basis_change are grouped by
/// block in ascending block size; within a block they run g, tau g, ...,
/// tau^(i-1) g.
struct Decomposition {
  JordanProfile profile;
  std::vector<int> blocks;
  Matrix basis_change;
  /// Column index of the generator of each block.
  std::vector<std::size_t> generator_columns;
};

struct SemisimpleSplit {
  Subspace semisimple;  // S
  Subspace rest;        // T
};

struct FirstCohomology {
  std::size_t dim = 0;
  /// Coset representatives of ker(norm operator) modulo (sigma-1)M.
  std::vector<Vec> representatives;
};

struct ActionCheck {
  bool ok = true;
  std::string message;
};

/// Confirms sigma^p = 1. On failure the message names the order of sigma
/// when it is found within a small search, otherwise states non-invertibility.
ActionCheck validate_action(const Matrix& sigma);

/// Finite-dimensional F_p[G]-module for G cyclic of order p, given by the
/// matrix of a generator sigma.
class CyclicModule {
 public:
  /// Throws h90::Error unless sigma is square with sigma^p = 1.
  explicit CyclicModule(Matrix sigma);

  /// Direct sum of standard blocks V_i, in the order given.
  static CyclicModule standard(Field f, const std::vector<int>& block_sizes);
  static CyclicModule trivial(Field f, std::size_t dim);
  /// The regular representation F_p[G] (free of rank one).
  static CyclicModule regular(Field f);

  const Field& field() const noexcept { return sigma_.field(); }
  int p() const noexcept { return sigma_.p(); }
  std::size_t dim() const noexcept { return sigma_.rows(); }
  const Matrix& sigma() const noexcept { return sigma_; }
  const Matrix& tau() const noexcept { return tau_; }

  /// Matrix of (sigma - 1)^k.
  Matrix tau_power(std::size_t k) const;
  /// Matrix of 1 + sigma + ... + sigma^(p-1), which equals tau^(p-1).
  Matrix norm_operator() const { return tau_power(static_cast<std::size_t>(p() - 1)); }

  Subspace fixed_part() const;    // M^G = ker tau
  Subspace radical_part() const;  // tau M
  Subspace norm_image() const;    // tau^(p-1) M

  /// Largest t with tau^(t-1) y != 0. Throws on y = 0.
  int length(std::span<const Elem> y) const;

  /// Multiplicities from the rank sequence of tau alone.
  JordanProfile profile_from_ranks() const;
  Decomposition decompose() const;
  bool is_free() const;
  SemisimpleSplit split_semisimple() const;
  FirstCohomology h1() const;
  /// Whether the line through a nonzero fixed vector v is a V_1 direct summand.
  bool is_trivial_summand(std::span<const Elem> v) const;

  /// Same module with sigma replaced by sigma^c, c prime to p.
  CyclicModule with_generator_power(int c) const;
  /// The module transported along the basis change x -> P x.
  CyclicModule conjugated(const Matrix& p_change) const;
  static CyclicModule direct_sum(const CyclicModule& a, const CyclicModule& b);

 private:
  Matrix sigma_;
  Matrix tau_;
};

}  // namespace h90
