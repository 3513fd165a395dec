#pragma once

#include <cstdint>
#include <vector>

namespace h90 {

/// GF(ell^m) for small orders, elements encoded as integers whose base-ell
/// digits are polynomial coefficients. The modulus is chosen primitive, so
/// the element encoded as 1*x (= ell) generates the multiplicative group.
class GaloisField {
 public:
  using Element = std::uint32_t;

  /// Throws h90::Error unless ell is prime and ell^m <= 10^7.
  GaloisField(int ell, int m);

  int characteristic() const noexcept { return ell_; }
  int degree() const noexcept { return m_; }
  std::uint64_t order() const noexcept { return order_; }
  Element zero() const noexcept { return 0; }
  Element one() const noexcept { return 1; }
  /// The class of x, a primitive element.
  Element generator() const noexcept { return m_ == 1 ? primitive_root_ : static_cast<Element>(ell_); }
  Element from_int(long long v) const;

  Element add(Element a, Element b) const;
  Element mul(Element a, Element b) const;
  Element pow(Element a, std::uint64_t e) const;
  /// Multiplicative order of a nonzero element.
  std::uint64_t multiplicative_order(Element a) const;

 private:
  std::vector<int> digits(Element a) const;
  Element encode(const std::vector<int>& d) const;

  int ell_;
  int m_;
  std::uint64_t order_;
  std::vector<int> modulus_;  // monic, low degree first, size m+1
  Element primitive_root_ = 1;
  std::vector<std::uint64_t> group_order_primes_;
};

/// Prime factors of n (distinct, ascending).
std::vector<std::uint64_t> prime_factors(std::uint64_t n);
bool is_prime(std::uint64_t n);

}  // namespace h90
