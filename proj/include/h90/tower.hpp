#pragma once

#include <optional>
#include <string>
#include <vector>

#include "h90/model.hpp"

namespace h90 {

/// A family of models indexed by degree n = 1..n_max, plus the cup-product
/// maps with the classes of a and xi_p. B_0 = k_0 F = F_p.
struct DegreeTower {
  std::string backend;
  int p = 2;
  int n_max = 0;
  /// Documented cohomological dimension of G_F(p); nullopt means infinite.
  std::optional<int> cd;
  /// models[n-1] is the degree-n model.
  std::vector<ExtensionModel> models;
  /// b_dims[n] = dim B_n for n = 0..n_max+1.
  std::vector<std::size_t> b_dims;
  /// cup_a[n-1]: B_{n-1} -> B_n for n = 1..n_max+1.
  std::vector<Matrix> cup_a;
  std::vector<Matrix> cup_xi;
  /// Element of A_1 representing the class of the p-th root of a.
  Vec root_class;
  std::vector<std::string> notes;

  const ExtensionModel& model(int n) const { return models.at(static_cast<std::size_t>(n - 1)); }
  const Matrix& cup_a_at(int n) const { return cup_a.at(static_cast<std::size_t>(n - 1)); }
  const Matrix& cup_xi_at(int n) const { return cup_xi.at(static_cast<std::size_t>(n - 1)); }
  std::string cd_string() const { return cd ? std::to_string(*cd) : "inf"; }
};

/// Structural consistency: K_a[n] = image cup_a[n], K_xi[n] = image cup_xi[n],
/// matching dimensions. Returns one report per degree.
std::vector<TheoremReport> check_tower_consistency(const DegreeTower& t);

/// The relation (sigma - 1) root_class = i(cup_xi[1](1)) in degree 1.
TheoremReport root_relation_check(const DegreeTower& t);

/// Forward direction for the stored cd: at every degree n >= cd up to n_max,
/// N is surjective and h90 holds. Skipped when cd is infinite or above n_max.
TheoremReport cd_forward_check(const DegreeTower& t);

/// Upward closure of the h90 verdict sequence over degrees 1..n_max.
TheoremReport hereditary_check(const DegreeTower& t);

/// p = 2: compares (H^1(G, A_n) = 0) with B_n = ann_n(a) (+) K_a[n], where
/// ann_n(a) = ker cup_a[n+1] and the sum must be direct and exhaust B_n.
TheoremReport hs_p2_ann_check(const DegreeTower& t, int n);

}  // namespace h90
