#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>

#include "h90/field.hpp"

namespace h90 {

/// Element of Q_ell at fixed relative precision: ell^valuation * unit, with
/// unit known modulo ell^precision. A value whose unit part cancels
/// completely becomes "zero to absolute precision": it is only known to have
/// valuation >= valuation().
class LocalFieldElement {
 public:
  /// Nonzero integer; throws on 0 or when ell^precision does not fit.
  LocalFieldElement(long long value, std::int64_t ell, int precision);

  static LocalFieldElement from_parts(std::int64_t ell, int valuation, std::uint64_t unit,
                                      int precision);
  /// Exact zero (valuation bound kExactZero).
  static LocalFieldElement zero(std::int64_t ell, int precision);
  static constexpr int kExactZero = 1 << 20;

  std::int64_t ell() const noexcept { return ell_; }
  /// Exact valuation, or the known lower bound when is_zero().
  int valuation() const noexcept { return valuation_; }
  std::uint64_t unit() const noexcept { return unit_; }
  int precision() const noexcept { return precision_; }
  bool is_zero() const noexcept { return zero_; }

  /// Residue of the unit part mod ell; throws when the value is zero to precision.
  std::int64_t unit_residue() const;

  LocalFieldElement operator*(const LocalFieldElement& o) const;
  LocalFieldElement operator+(const LocalFieldElement& o) const;
  LocalFieldElement operator-() const;
  LocalFieldElement operator-(const LocalFieldElement& o) const { return *this + (-o); }
  /// Multiplicative inverse of a nonzero element.
  LocalFieldElement inverse() const;

  std::string to_string() const;

 private:
  LocalFieldElement() = default;
  static LocalFieldElement zero_at(std::int64_t ell, int abs_valuation, int precision);
  std::uint64_t modulus() const;

  std::int64_t ell_ = 3;
  int valuation_ = 0;
  std::uint64_t unit_ = 1;
  int precision_ = 6;
  bool zero_ = false;
};

/// Legendre symbol (a / ell) in {-1, 0, 1} for an odd prime ell.
int legendre(long long a, std::int64_t ell);
std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t mod);

/// Hilbert symbol (a, b) over Q_ell. Odd ell uses the tame formula; ell = 2
/// uses the epsilon/omega formula on 2-adic unit parts. Throws on zero input.
int hilbert_symbol(long long a, long long b, std::int64_t ell);
int hilbert_symbol(const LocalFieldElement& a, const LocalFieldElement& b);

/// Square class of a nonzero element of Q_ell (ell odd) in the basis
/// {u, ell}, u the least quadratic non-residue: returns (unit bit, valuation bit).
struct SquareClass {
  int unit_bit = 0;
  int ell_bit = 0;
  friend bool operator==(const SquareClass&, const SquareClass&) = default;
};
SquareClass square_class(const LocalFieldElement& b);

std::int64_t least_nonresidue(std::int64_t ell);

/// Residue field element of E: r0 + r1 * s where s^2 = u (unramified case);
/// r1 = 0 when E is ramified.
struct ResidueElement {
  std::int64_t r0 = 0;
  std::int64_t r1 = 0;
};

/// The quadratic extension E = Q_ell(sqrt a), a in {u, ell, u*ell}, with
/// elements x + y sqrt(a).
class QuadraticExtension {
 public:
  enum class Kind { unramified, ramified };

  struct Element {
    LocalFieldElement x;
    LocalFieldElement y;
  };

  /// a_choice: "u", "ell" or "u*ell".
  QuadraticExtension(std::int64_t ell, const std::string& a_choice, int precision);

  std::int64_t ell() const noexcept { return ell_; }
  int precision() const noexcept { return precision_; }
  Kind kind() const noexcept { return kind_; }
  std::int64_t u() const noexcept { return u_; }
  std::int64_t a() const noexcept { return a_; }
  /// Residue field size of E.
  std::int64_t residue_field_size() const noexcept {
    return kind_ == Kind::unramified ? ell_ * ell_ : ell_;
  }

  Element embed(long long v) const;
  Element make(long long x, long long y) const;
  Element mul(const Element& s, const Element& t) const;
  Element conjugate(const Element& s) const;
  LocalFieldElement norm(const Element& s) const;

  /// Normalized valuation of E and the residue of s / pi^v. Throws
  /// "raise k" when the precision cannot decide.
  std::pair<int, ResidueElement> valuation_and_residue(const Element& s) const;
  /// Square class in the basis {e1 = non-square unit, e2 = uniformizer}.
  SquareClass square_class(const Element& s) const;
  /// Hilbert symbol of E (tame symbol, odd residue characteristic).
  int symbol(const Element& s, const Element& t) const;

  /// Basis representatives of E*/E*^2.
  Element nonsquare_unit() const { return *e1_; }
  Element uniformizer() const;

  bool residue_is_square(const ResidueElement& r) const;

 private:
  ResidueElement residue_mul(const ResidueElement& a, const ResidueElement& b) const;
  ResidueElement residue_pow(ResidueElement a, std::uint64_t e) const;
  std::int64_t mod_ell(std::int64_t v) const { return ((v % ell_) + ell_) % ell_; }

  std::int64_t ell_;
  int precision_;
  Kind kind_;
  std::int64_t u_;
  std::int64_t a_;
  std::int64_t w_;  // ramified: a = ell * w
  std::optional<Element> e1_;
};

}  // namespace h90
