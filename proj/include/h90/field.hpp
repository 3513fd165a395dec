#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace h90 {

/// Base exception for every recoverable failure in the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

using Elem = std::uint8_t;
using Vec = std::vector<Elem>;

/// The prime field F_p. Only the small primes 2, 3, 5, 7 are accepted.
class Field {
 public:
  explicit Field(int p);

  int p() const noexcept { return p_; }
  Elem add(Elem a, Elem b) const noexcept { return static_cast<Elem>((a + b) % p_); }
  Elem sub(Elem a, Elem b) const noexcept { return static_cast<Elem>((a + p_ - b) % p_); }
  Elem mul(Elem a, Elem b) const noexcept { return static_cast<Elem>((a * b) % p_); }
  Elem neg(Elem a) const noexcept { return static_cast<Elem>((p_ - a) % p_); }
  Elem inv(Elem a) const;
  Elem reduce(long long v) const noexcept {
    long long r = v % p_;
    return static_cast<Elem>(r < 0 ? r + p_ : r);
  }

  friend bool operator==(const Field& a, const Field& b) noexcept { return a.p_ == b.p_; }

 private:
  int p_;
  Elem inverse_[8] = {};
};

bool is_supported_prime(int p) noexcept;

std::string to_string(const Vec& v);

}  // namespace h90
