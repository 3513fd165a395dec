#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "h90/matrix.hpp"

namespace h90 {

/// Subspace of F_p^n held by its reduced row-echelon basis, so two subspaces
/// are equal exactly when their stored bases are identical.
class Subspace {
 public:
  /// The zero subspace of F_p^ambient.
  Subspace(Field f, std::size_t ambient);

  static Subspace span(Field f, std::size_t ambient, const std::vector<Vec>& vectors);
  /// Row space of m.
  static Subspace row_space(const Matrix& m);
  static Subspace full(Field f, std::size_t ambient);

  const Field& field() const noexcept { return basis_.field(); }
  std::size_t ambient() const noexcept { return basis_.cols(); }
  std::size_t dim() const noexcept { return basis_.rows(); }
  bool is_zero() const noexcept { return dim() == 0; }
  /// Canonical basis, one vector per row.
  const Matrix& basis() const noexcept { return basis_; }
  std::vector<Vec> basis_vectors() const;
  const std::vector<std::size_t>& pivots() const noexcept { return pivots_; }

  bool contains(std::span<const Elem> v) const;
  bool contains(const Subspace& other) const;

  Subspace operator+(const Subspace& other) const;
  /// Intersection, computed as the kernel of the stacked annihilator constraints.
  Subspace intersect(const Subspace& other) const;
  /// Vectors x with <x, u> = 0 for all u in this subspace.
  Subspace annihilator() const;
  /// Image under a linear map (columns = this ambient).
  Subspace image_under(const Matrix& map) const;
  /// Some vector of this subspace outside `other`, if any.
  std::optional<Vec> witness_outside(const Subspace& other) const;
  /// Vectors of `whole` that, together with this subspace, span whole + this.
  std::vector<Vec> extend_within(const Subspace& whole) const;

  friend bool operator==(const Subspace& a, const Subspace& b) noexcept {
    return a.basis_ == b.basis_;
  }

 private:
  explicit Subspace(Matrix canonical, std::vector<std::size_t> pivots);
  void require_same_ambient(const Subspace& other) const;

  Matrix basis_;
  std::vector<std::size_t> pivots_;
};

Subspace kernel(const Matrix& m);
/// Column space of m.
Subspace image(const Matrix& m);
/// {x : m x in target}.
Subspace preimage(const Matrix& m, const Subspace& target);

// Enumeration helpers back the brute-force oracles; they refuse inputs whose
// output would exceed kEnumerationLimit items.
inline constexpr std::size_t kEnumerationLimit = 1'000'000;

/// Calls `visit` on each of the p^dim(U) vectors of U exactly once.
void for_each_vector(const Subspace& u, const std::function<void(const Vec&)>& visit);
/// Every k-dimensional subspace of F_p^ambient, each exactly once.
std::vector<Subspace> enumerate_subspaces(Field f, std::size_t ambient, std::size_t k);
/// Every subspace of U, all dimensions.
std::vector<Subspace> enumerate_subspaces_of(const Subspace& u);
/// Number of k-dimensional subspaces of F_p^n, saturating at SIZE_MAX.
std::size_t gaussian_binomial(int p, std::size_t n, std::size_t k);

}  // namespace h90
