#include "h90/local_field.hpp"

#include <algorithm>
#include <sstream>
#include <tuple>

#include "h90/field.hpp"
#include "h90/galois_field.hpp"

namespace h90 {

namespace {

using u128 = unsigned __int128;

std::uint64_t ipow(std::uint64_t b, int e) {
  std::uint64_t r = 1;
  for (int k = 0; k < e; ++k) r *= b;
  return r;
}

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<u128>(a) * b % m);
}

std::int64_t inverse_mod(std::int64_t a, std::int64_t m) {
  std::int64_t g = m, x = 0, x1 = 1, a1 = ((a % m) + m) % m;
  while (a1) {
    std::int64_t q = g / a1;
    std::tie(g, a1) = std::make_pair(a1, g - q * a1);
    std::tie(x, x1) = std::make_pair(x1, x - q * x1);
  }
  if (g != 1) throw Error("inverse_mod: not invertible");
  return ((x % m) + m) % m;
}

void check_precision(std::int64_t ell, int precision) {
  if (ell < 2 || !is_prime(static_cast<std::uint64_t>(ell)))
    throw Error("local field: " + std::to_string(ell) + " is not prime");
  if (precision < 3) throw Error("local field: precision must be at least 3");
  long double bound = 1;
  for (int k = 0; k < precision; ++k) bound *= static_cast<long double>(ell);
  if (bound >= 4.0e18L) throw Error("local field: ell^precision does not fit in 62 bits");
}

}  // namespace

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t mod) {
  std::uint64_t r = 1 % mod;
  base %= mod;
  while (exp) {
    if (exp & 1) r = mulmod(r, base, mod);
    base = mulmod(base, base, mod);
    exp >>= 1;
  }
  return r;
}

int legendre(long long a, std::int64_t ell) {
  long long r = ((a % ell) + ell) % ell;
  if (r == 0) return 0;
  auto e = pow_mod(static_cast<std::uint64_t>(r), static_cast<std::uint64_t>((ell - 1) / 2),
                   static_cast<std::uint64_t>(ell));
  return e == 1 ? 1 : -1;
}

std::int64_t least_nonresidue(std::int64_t ell) {
  for (std::int64_t u = 2; u < ell; ++u)
    if (legendre(u, ell) == -1) return u;
  throw Error("no quadratic non-residue mod " + std::to_string(ell));
}

LocalFieldElement::LocalFieldElement(long long value, std::int64_t ell, int precision)
    : ell_(ell), precision_(precision) {
  check_precision(ell, precision);
  if (value == 0) throw Error("local field element from integer 0");
  long long v = value;
  int val = 0;
  while (v % ell == 0) {
    v /= ell;
    ++val;
  }
  valuation_ = val;
  auto m = static_cast<long long>(modulus());
  unit_ = static_cast<std::uint64_t>(((v % m) + m) % m);
}

LocalFieldElement LocalFieldElement::from_parts(std::int64_t ell, int valuation, std::uint64_t unit,
                                                int precision) {
  check_precision(ell, precision);
  LocalFieldElement e;
  e.ell_ = ell;
  e.valuation_ = valuation;
  e.precision_ = precision;
  e.unit_ = unit % e.modulus();
  if (e.unit_ % static_cast<std::uint64_t>(ell) == 0)
    throw Error("local field element: unit part divisible by ell");
  return e;
}

LocalFieldElement LocalFieldElement::zero_at(std::int64_t ell, int abs_valuation, int precision) {
  LocalFieldElement e;
  e.ell_ = ell;
  e.valuation_ = abs_valuation;
  e.precision_ = precision;
  e.unit_ = 0;
  e.zero_ = true;
  return e;
}

LocalFieldElement LocalFieldElement::zero(std::int64_t ell, int precision) {
  check_precision(ell, precision);
  return zero_at(ell, kExactZero, precision);
}

std::uint64_t LocalFieldElement::modulus() const {
  return ipow(static_cast<std::uint64_t>(ell_), precision_);
}

std::int64_t LocalFieldElement::unit_residue() const {
  if (zero_)
    throw Error("precision insufficient to decide the value (zero mod " + std::to_string(ell_) +
                "^" + std::to_string(valuation_) + "); raise k");
  return static_cast<std::int64_t>(unit_ % static_cast<std::uint64_t>(ell_));
}

LocalFieldElement LocalFieldElement::operator*(const LocalFieldElement& o) const {
  if (ell_ != o.ell_) throw Error("local field elements over different primes");
  int prec = std::min(precision_, o.precision_);
  if (zero_ || o.zero_) {
    int bound = std::min(kExactZero, valuation_ + o.valuation_);
    return zero_at(ell_, bound, prec);
  }
  LocalFieldElement r = zero_at(ell_, 0, prec);
  r.zero_ = false;
  r.valuation_ = valuation_ + o.valuation_;
  auto m = r.modulus();
  r.unit_ = mulmod(unit_ % m, o.unit_ % m, m);
  return r;
}

LocalFieldElement LocalFieldElement::operator-() const {
  LocalFieldElement r = *this;
  if (!zero_) r.unit_ = (modulus() - unit_) % modulus();
  return r;
}

LocalFieldElement LocalFieldElement::operator+(const LocalFieldElement& o) const {
  if (ell_ != o.ell_) throw Error("local field elements over different primes");
  const int prec = std::max(precision_, o.precision_);
  if (zero_ && o.zero_) return zero_at(ell_, std::min(valuation_, o.valuation_), prec);
  if (zero_ || o.zero_) {
    const LocalFieldElement& z = zero_ ? *this : o;
    const LocalFieldElement& x = zero_ ? o : *this;
    if (x.valuation_ >= z.valuation_) return zero_at(ell_, z.valuation_, prec);
    LocalFieldElement r = x;
    r.precision_ = std::min(x.precision_, z.valuation_ - x.valuation_);
    r.unit_ %= r.modulus();
    return r;
  }
  const int v = std::min(valuation_, o.valuation_);
  const int abs_prec = std::min(valuation_ + precision_, o.valuation_ + o.precision_);
  const int rel = abs_prec - v;
  const std::uint64_t m = ipow(static_cast<std::uint64_t>(ell_), rel);
  auto term = [&](const LocalFieldElement& t) -> std::uint64_t {
    int shift = t.valuation_ - v;
    if (shift >= rel) return 0;
    return mulmod(t.unit_ % m, ipow(static_cast<std::uint64_t>(ell_), shift) % m, m);
  };
  std::uint64_t s = (term(*this) + term(o)) % m;
  if (s == 0) return zero_at(ell_, abs_prec, prec);
  int j = 0;
  while (s % static_cast<std::uint64_t>(ell_) == 0) {
    s /= static_cast<std::uint64_t>(ell_);
    ++j;
  }
  LocalFieldElement r = zero_at(ell_, 0, rel - j);
  r.zero_ = false;
  r.valuation_ = v + j;
  r.unit_ = s % r.modulus();
  return r;
}

LocalFieldElement LocalFieldElement::inverse() const {
  if (zero_) throw Error("inverse of an element that is zero to precision; raise k");
  LocalFieldElement r = *this;
  r.valuation_ = -valuation_;
  r.unit_ = static_cast<std::uint64_t>(
      inverse_mod(static_cast<std::int64_t>(unit_), static_cast<std::int64_t>(modulus())));
  return r;
}

std::string LocalFieldElement::to_string() const {
  std::ostringstream os;
  if (zero_)
    os << "O(" << ell_ << "^" << valuation_ << ")";
  else
    os << ell_ << "^" << valuation_ << "*" << unit_ << " (mod " << ell_ << "^" << precision_ << ")";
  return os.str();
}

int hilbert_symbol(long long a, long long b, std::int64_t ell) {
  if (a == 0 || b == 0) throw Error("hilbert_symbol: zero argument");
  if (ell < 2 || !is_prime(static_cast<std::uint64_t>(ell)))
    throw Error("hilbert_symbol: ell must be prime");
  auto split = [&](long long x) {
    int v = 0;
    while (x % ell == 0) {
      x /= ell;
      ++v;
    }
    return std::make_pair(v, x);
  };
  auto [alpha, ua] = split(a);
  auto [beta, ub] = split(b);
  if (ell == 2) {
    auto m8 = [](long long x) { return ((x % 8) + 8) % 8; };
    long long u = m8(ua), v = m8(ub);
    int eps_u = static_cast<int>(((u - 1) / 2) % 2), eps_v = static_cast<int>(((v - 1) / 2) % 2);
    int om_u = static_cast<int>(((u * u - 1) / 8) % 2), om_v = static_cast<int>(((v * v - 1) / 8) % 2);
    int e = eps_u * eps_v + alpha * om_v + beta * om_u;
    return e % 2 ? -1 : 1;
  }
  int eps = static_cast<int>(((ell - 1) / 2) % 2);
  int sign = (alpha * beta * eps) % 2 ? -1 : 1;
  int la = legendre(ua, ell), lb = legendre(ub, ell);
  if (beta % 2) sign *= la;
  if (alpha % 2) sign *= lb;
  return sign;
}

int hilbert_symbol(const LocalFieldElement& a, const LocalFieldElement& b) {
  if (a.ell() != b.ell()) throw Error("hilbert_symbol: elements over different primes");
  if (a.is_zero() || b.is_zero()) throw Error("hilbert_symbol: zero argument");
  const std::int64_t ell = a.ell();
  if (ell == 2) throw Error("hilbert_symbol: 2-adic elements need the integer form");
  int alpha = a.valuation(), beta = b.valuation();
  int eps = static_cast<int>(((ell - 1) / 2) % 2);
  int sign = ((alpha * beta * eps) % 2 + 2) % 2 ? -1 : 1;
  if (beta % 2) sign *= legendre(a.unit_residue(), ell);
  if (alpha % 2) sign *= legendre(b.unit_residue(), ell);
  return sign;
}

SquareClass square_class(const LocalFieldElement& b) {
  if (b.ell() == 2) throw Error("square_class: only odd ell is supported");
  int unit_bit = legendre(b.unit_residue(), b.ell()) == -1 ? 1 : 0;
  return {unit_bit, ((b.valuation() % 2) + 2) % 2};
}

// ---------------------------------------------------------------------------

QuadraticExtension::QuadraticExtension(std::int64_t ell, const std::string& a_choice, int precision)
    : ell_(ell), precision_(precision), kind_(Kind::unramified), u_(0), a_(0), w_(1) {
  check_precision(ell, precision);
  if (ell == 2) throw Error("quadratic extension: ell must be odd");
  u_ = least_nonresidue(ell);
  if (a_choice == "u") {
    kind_ = Kind::unramified;
    a_ = u_;
  } else if (a_choice == "ell") {
    kind_ = Kind::ramified;
    a_ = ell;
    w_ = 1;
  } else if (a_choice == "u*ell" || a_choice == "uell") {
    kind_ = Kind::ramified;
    a_ = u_ * ell;
    w_ = u_;
  } else {
    throw Error("a_choice must be one of u, ell, u*ell (got '" + a_choice + "')");
  }
  if (kind_ == Kind::ramified) {
    e1_ = make(u_, 0);
  } else {
    for (std::int64_t y = 0; y < ell_ && !e1_; ++y)
      for (std::int64_t x = 0; x < ell_ && !e1_; ++x) {
        if (x == 0 && y == 0) continue;
        if (!residue_is_square({x, y})) e1_ = make(x, y);
      }
  }
}

QuadraticExtension::Element QuadraticExtension::embed(long long v) const { return make(v, 0); }

QuadraticExtension::Element QuadraticExtension::make(long long x, long long y) const {
  auto coord = [&](long long c) {
    return c == 0 ? LocalFieldElement::zero(ell_, precision_) : LocalFieldElement(c, ell_, precision_);
  };
  return {coord(x), coord(y)};
}

QuadraticExtension::Element QuadraticExtension::mul(const Element& s, const Element& t) const {
  LocalFieldElement a(a_, ell_, precision_);
  return {s.x * t.x + a * (s.y * t.y), s.x * t.y + s.y * t.x};
}

QuadraticExtension::Element QuadraticExtension::conjugate(const Element& s) const {
  return {s.x, -s.y};
}

LocalFieldElement QuadraticExtension::norm(const Element& s) const {
  LocalFieldElement a(a_, ell_, precision_);
  return s.x * s.x - a * (s.y * s.y);
}

QuadraticExtension::Element QuadraticExtension::uniformizer() const {
  return kind_ == Kind::unramified ? make(ell_, 0) : make(0, 1);
}

ResidueElement QuadraticExtension::residue_mul(const ResidueElement& a, const ResidueElement& b) const {
  // (a0 + a1 s)(b0 + b1 s) with s^2 = u
  return {mod_ell(a.r0 * b.r0 + u_ * mod_ell(a.r1 * b.r1)), mod_ell(a.r0 * b.r1 + a.r1 * b.r0)};
}

ResidueElement QuadraticExtension::residue_pow(ResidueElement a, std::uint64_t e) const {
  ResidueElement r{1, 0};
  while (e) {
    if (e & 1) r = residue_mul(r, a);
    a = residue_mul(a, a);
    e >>= 1;
  }
  return r;
}

bool QuadraticExtension::residue_is_square(const ResidueElement& r) const {
  if (kind_ == Kind::ramified) return legendre(r.r0, ell_) == 1;
  auto q = static_cast<std::uint64_t>(ell_ * ell_);
  auto e = residue_pow({mod_ell(r.r0), mod_ell(r.r1)}, (q - 1) / 2);
  return e.r0 == 1 && e.r1 == 0;
}

std::pair<int, ResidueElement> QuadraticExtension::valuation_and_residue(const Element& s) const {
  const auto& x = s.x;
  const auto& y = s.y;
  auto undecidable = [&]() {
    return Error("precision insufficient to decide the square class of an element of E; raise k");
  };
  if (x.is_zero() && y.is_zero()) throw undecidable();
  if (kind_ == Kind::unramified) {
    int v;
    if (x.is_zero()) {
      if (x.valuation() <= y.valuation()) throw undecidable();
      v = y.valuation();
    } else if (y.is_zero()) {
      if (y.valuation() <= x.valuation()) throw undecidable();
      v = x.valuation();
    } else {
      v = std::min(x.valuation(), y.valuation());
    }
    ResidueElement r;
    if (!x.is_zero() && x.valuation() == v) r.r0 = x.unit_residue();
    if (!y.is_zero() && y.valuation() == v) r.r1 = y.unit_residue();
    return {v, r};
  }
  // Ramified: v_E(x) = 2 v(x), v_E(y pi) = 2 v(y) + 1.
  const std::int64_t w_inv = inverse_mod(w_, ell_);
  auto scaled = [&](std::int64_t residue, int m) {
    std::int64_t f = static_cast<std::int64_t>(
        pow_mod(static_cast<std::uint64_t>(w_inv), static_cast<std::uint64_t>(std::max(m, 0)),
                static_cast<std::uint64_t>(ell_)));
    if (m < 0)
      f = static_cast<std::int64_t>(pow_mod(static_cast<std::uint64_t>(w_), static_cast<std::uint64_t>(-m),
                                            static_cast<std::uint64_t>(ell_)));
    return mod_ell(residue * f);
  };
  long long ex = 2LL * x.valuation(), ey = 2LL * y.valuation() + 1;
  bool use_x;
  if (x.is_zero()) {
    if (ex <= ey) throw undecidable();
    use_x = false;
  } else if (y.is_zero()) {
    if (ey <= ex) throw undecidable();
    use_x = true;
  } else {
    use_x = ex < ey;
  }
  if (use_x) return {static_cast<int>(ex), {scaled(x.unit_residue(), x.valuation()), 0}};
  return {static_cast<int>(ey), {scaled(y.unit_residue(), y.valuation()), 0}};
}

SquareClass QuadraticExtension::square_class(const Element& s) const {
  auto [v, r] = valuation_and_residue(s);
  return {residue_is_square(r) ? 0 : 1, ((v % 2) + 2) % 2};
}

int QuadraticExtension::symbol(const Element& s, const Element& t) const {
  auto [vs, rs] = valuation_and_residue(s);
  auto [vt, rt] = valuation_and_residue(t);
  const auto q = static_cast<std::uint64_t>(residue_field_size());
  auto rinv = [&](const ResidueElement& r) { return residue_pow(r, q - 2); };
  auto rpow = [&](const ResidueElement& r, int e) {
    return e >= 0 ? residue_pow(r, static_cast<std::uint64_t>(e))
                  : residue_pow(rinv(r), static_cast<std::uint64_t>(-e));
  };
  // Tame symbol (-1)^(vs vt) s^vt / t^vs, then its quadratic character.
  ResidueElement c = residue_mul(rpow(rs, vt), rpow(rt, -vs));
  if ((static_cast<long long>(vs) * vt) % 2) c = {mod_ell(-c.r0), mod_ell(-c.r1)};
  return residue_is_square(c) ? 1 : -1;
}

}  // namespace h90
