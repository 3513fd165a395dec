#pragma once

// Independent Hilbert symbol for odd ell by congruence search: (a, b) = 1
// iff a x^2 + b y^2 = z^2 has a primitive solution mod ell^k, found as
// squares s1, s2, s3 with a s1 + b s2 = s3 and one of them the square of a
// unit. For valuations of a, b at most 1, k >= 3 makes every such solution
// lift by Hensel's lemma.

#include <cstdint>
#include <stdexcept>
#include <vector>

namespace h90::test {

class HilbertOracle {
 public:
  HilbertOracle(std::int64_t ell, int k) : ell_(ell) {
    if (ell % 2 == 0 || k < 3) throw std::invalid_argument("HilbertOracle: odd ell and k >= 3");
    mod_ = 1;
    for (int i = 0; i < k; ++i) mod_ *= ell;
    square_.assign(static_cast<std::size_t>(mod_), 0);
    unit_square_.assign(static_cast<std::size_t>(mod_), 0);
    for (std::int64_t x = 0; x < mod_; ++x) {
      auto s = static_cast<std::size_t>(x * x % mod_);
      square_[s] = 1;
      if (x % ell != 0) unit_square_[s] = 1;
    }
    for (std::int64_t s = 0; s < mod_; ++s)
      if (square_[static_cast<std::size_t>(s)]) squares_.push_back(s);
  }

  std::int64_t modulus() const { return mod_; }

  /// Symbol of two integers whose ell-adic valuations are 0 or 1.
  int symbol(long long a, long long b) const {
    std::int64_t ar = reduce(a), br = reduce(b);
    for (std::int64_t s1 : squares_) {
      std::int64_t as1 = ar * s1 % mod_;
      bool u1 = unit_square_[static_cast<std::size_t>(s1)];
      for (std::int64_t s2 : squares_) {
        auto s3 = static_cast<std::size_t>((as1 + br * s2) % mod_);
        if (!square_[s3]) continue;
        if (u1 || unit_square_[static_cast<std::size_t>(s2)] || unit_square_[s3]) return 1;
      }
    }
    return -1;
  }

 private:
  std::int64_t reduce(long long v) const { return ((v % mod_) + mod_) % mod_; }

  std::int64_t ell_;
  std::int64_t mod_;
  std::vector<char> square_;
  std::vector<char> unit_square_;
  std::vector<std::int64_t> squares_;
};

}  // namespace h90::test
