#include "h90/galois_field.hpp"

#include <string>

#include "h90/field.hpp"

namespace h90 {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d) continue;
    out.push_back(d);
    while (n % d == 0) n /= d;
  }
  if (n > 1) out.push_back(n);
  return out;
}

GaloisField::GaloisField(int ell, int m) : ell_(ell), m_(m), order_(1) {
  if (ell < 2 || !is_prime(static_cast<std::uint64_t>(ell)))
    throw Error("GF: characteristic " + std::to_string(ell) + " is not prime");
  if (m < 1) throw Error("GF: degree must be positive");
  for (int k = 0; k < m; ++k) {
    order_ *= static_cast<std::uint64_t>(ell);
    if (order_ > 10'000'000) throw Error("GF: field order exceeds 10^7");
  }
  group_order_primes_ = prime_factors(order_ - 1);

  auto is_primitive = [&](Element g) {
    if (pow(g, order_ - 1) != 1) return false;
    for (auto r : group_order_primes_)
      if (pow(g, (order_ - 1) / r) == 1) return false;
    return true;
  };

  if (m == 1) {
    modulus_ = {0, 1};
    for (Element g = 1; g < order_; ++g)
      if (is_primitive(g)) {
        primitive_root_ = g;
        break;
      }
    return;
  }
  // Search monic moduli until x has order ell^m - 1; that makes the quotient
  // ring a field with x primitive.
  std::uint64_t tail_count = order_;
  for (std::uint64_t t = 0; t < tail_count; ++t) {
    std::vector<int> f(static_cast<std::size_t>(m) + 1, 0);
    std::uint64_t rest = t;
    for (int k = 0; k < m; ++k) {
      f[static_cast<std::size_t>(k)] = static_cast<int>(rest % static_cast<std::uint64_t>(ell));
      rest /= static_cast<std::uint64_t>(ell);
    }
    f[static_cast<std::size_t>(m)] = 1;
    if (f[0] == 0) continue;
    modulus_ = f;
    if (is_primitive(static_cast<Element>(ell))) return;
  }
  throw Error("GF: no primitive modulus found");
}

GaloisField::Element GaloisField::from_int(long long v) const {
  long long r = v % ell_;
  return static_cast<Element>(r < 0 ? r + ell_ : r);
}

std::vector<int> GaloisField::digits(Element a) const {
  std::vector<int> d(static_cast<std::size_t>(m_), 0);
  for (int k = 0; k < m_; ++k) {
    d[static_cast<std::size_t>(k)] = static_cast<int>(a % static_cast<Element>(ell_));
    a /= static_cast<Element>(ell_);
  }
  return d;
}

GaloisField::Element GaloisField::encode(const std::vector<int>& d) const {
  Element a = 0;
  for (int k = m_ - 1; k >= 0; --k) a = a * static_cast<Element>(ell_) + static_cast<Element>(d[static_cast<std::size_t>(k)]);
  return a;
}

GaloisField::Element GaloisField::add(Element a, Element b) const {
  auto da = digits(a), db = digits(b);
  for (std::size_t k = 0; k < da.size(); ++k) da[k] = (da[k] + db[k]) % ell_;
  return encode(da);
}

GaloisField::Element GaloisField::mul(Element a, Element b) const {
  if (m_ == 1)
    return static_cast<Element>((static_cast<std::uint64_t>(a) * b) % static_cast<std::uint64_t>(ell_));
  auto da = digits(a), db = digits(b);
  std::vector<int> prod(static_cast<std::size_t>(2 * m_ - 1), 0);
  for (int i = 0; i < m_; ++i)
    for (int j = 0; j < m_; ++j)
      prod[static_cast<std::size_t>(i + j)] =
          (prod[static_cast<std::size_t>(i + j)] + da[static_cast<std::size_t>(i)] * db[static_cast<std::size_t>(j)]) % ell_;
  for (int k = 2 * m_ - 2; k >= m_; --k) {
    int c = prod[static_cast<std::size_t>(k)];
    if (!c) continue;
    for (int j = 0; j <= m_; ++j) {
      auto idx = static_cast<std::size_t>(k - m_ + j);
      prod[idx] = ((prod[idx] - c * modulus_[static_cast<std::size_t>(j)]) % ell_ + ell_) % ell_;
    }
  }
  prod.resize(static_cast<std::size_t>(m_));
  return encode(prod);
}

GaloisField::Element GaloisField::pow(Element a, std::uint64_t e) const {
  Element result = 1, base = a;
  while (e) {
    if (e & 1) result = mul(result, base);
    e >>= 1;
    if (e) base = mul(base, base);
  }
  return result;
}

std::uint64_t GaloisField::multiplicative_order(Element a) const {
  if (a == 0) throw Error("GF: zero has no multiplicative order");
  std::uint64_t ord = order_ - 1;
  for (auto r : group_order_primes_)
    while (ord % r == 0 && pow(a, ord / r) == 1) ord /= r;
  return ord;
}

}  // namespace h90
