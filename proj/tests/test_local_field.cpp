#include <doctest.h>

#include <set>

#include "h90/local_field.hpp"
#include "hilbert_oracle.hpp"

using namespace h90;

TEST_SUITE("local_field") {

TEST_CASE("legendre and least non-residue") {
  CHECK(legendre(2, 5) == -1);
  CHECK(legendre(4, 5) == 1);
  CHECK(legendre(10, 5) == 0);
  CHECK(legendre(-1, 13) == 1);
  CHECK(legendre(-1, 7) == -1);
  CHECK(least_nonresidue(5) == 2);
  CHECK(least_nonresidue(7) == 3);
  CHECK(least_nonresidue(17) == 3);
}

TEST_CASE("element arithmetic tracks valuation and unit") {
  LocalFieldElement a(50, 5, 6);
  CHECK(a.valuation() == 2);
  CHECK(a.unit() == 2);
  LocalFieldElement b(-3, 5, 6);
  auto prod = a * b;
  CHECK(prod.valuation() == 2);
  CHECK(prod.unit_residue() == 4);
  auto inv = b.inverse() * b;
  CHECK(inv.valuation() == 0);
  CHECK(inv.unit() == 1);
  auto sum = LocalFieldElement(7, 5, 6) + LocalFieldElement(-2, 5, 6);
  CHECK(sum.valuation() == 1);
  CHECK(sum.unit_residue() == 1);
  CHECK_THROWS_AS(LocalFieldElement(0, 5, 6), Error);
}

TEST_CASE("cancellation beyond precision asks for more precision") {
  // 1 + 5^6 and 1 agree to the stored precision, so their difference is undecidable.
  auto d = LocalFieldElement(1 + 15625, 5, 6) - LocalFieldElement(1, 5, 6);
  CHECK(d.is_zero());
  try {
    d.unit_residue();
    FAIL("no error");
  } catch (const Error& e) {
    CHECK(std::string(e.what()).find("raise k") != std::string::npos);
  }
  CHECK_THROWS_AS(hilbert_symbol(d, LocalFieldElement(2, 5, 6)), Error);
  CHECK_THROWS_AS(d.inverse(), Error);
  auto e = LocalFieldElement(1 + 15625, 5, 7) - LocalFieldElement(1, 5, 7);
  CHECK(e.valuation() == 6);
  CHECK(e.unit_residue() == 1);
}

TEST_CASE("integer symbol matches the congruence oracle") {
  struct Case {
    std::int64_t ell;
    int k;
  };
  for (Case c : {Case{3, 6}, Case{5, 6}, Case{13, 3}}) {
    test::HilbertOracle oracle(c.ell, c.k);
    std::int64_t u = least_nonresidue(c.ell);
    std::vector<long long> reps = {1, u, c.ell, u * c.ell, -1, -c.ell};
    for (long long a : reps)
      for (long long b : reps) {
        INFO("ell=" << c.ell << " a=" << a << " b=" << b);
        CHECK(hilbert_symbol(a, b, c.ell) == oracle.symbol(a, b));
        LocalFieldElement la(a, c.ell, 6), lb(b, c.ell, 6);
        CHECK(hilbert_symbol(la, lb) == hilbert_symbol(a, b, c.ell));
      }
  }
}

TEST_CASE("symbol laws") {
  for (std::int64_t ell : {2, 3, 5, 7, 11, 13}) {
    std::vector<long long> xs = {1, 2, 3, 5, 6, 7, 10, 11, 13, -1, -2, -3, 14, 15, 26, 39};
    for (long long a : xs)
      for (long long b : xs) {
        INFO("ell=" << ell << " a=" << a << " b=" << b);
        CHECK(hilbert_symbol(a, b, ell) == hilbert_symbol(b, a, ell));
        CHECK(hilbert_symbol(a, -a, ell) == 1);
        CHECK(hilbert_symbol(a, a * 4, ell) == hilbert_symbol(a, a, ell));
        for (long long c : {2LL, 3LL, -1LL, 5LL})
          CHECK(hilbert_symbol(a, b * c, ell) == hilbert_symbol(a, b, ell) * hilbert_symbol(a, c, ell));
      }
  }
  CHECK(hilbert_symbol(-1, -1, 2) == -1);
  CHECK(hilbert_symbol(2, 3, 2) == -1);
  CHECK(hilbert_symbol(2, 5, 2) == -1);
  CHECK(hilbert_symbol(3, 5, 2) == 1);
  CHECK_THROWS_AS(hilbert_symbol(0, 3, 5), Error);
}

TEST_CASE("norm group is the kernel of the symbol") {
  for (std::int64_t ell : {3, 5, 7}) {
    for (const char* choice : {"u", "ell", "u*ell"}) {
      QuadraticExtension e(ell, choice, 8);
      std::set<std::pair<int, int>> norms;
      for (long long x = -6; x <= 6; ++x)
        for (long long y = -6; y <= 6; ++y) {
          if (x == 0 && y == 0) continue;
          auto n = e.norm(e.make(x, y));
          auto c = square_class(n);
          norms.insert({c.unit_bit, c.ell_bit});
        }
      std::int64_t u = least_nonresidue(ell);
      std::set<std::pair<int, int>> kernel;
      for (int ub = 0; ub < 2; ++ub)
        for (int lb = 0; lb < 2; ++lb) {
          long long b = (ub ? u : 1) * (lb ? ell : 1);
          if (hilbert_symbol(e.a(), b, ell) == 1) kernel.insert({ub, lb});
        }
      INFO("ell=" << ell << " a=" << choice);
      CHECK(norms == kernel);
      CHECK(norms.size() == 2);
    }
  }
}

TEST_CASE("extension square classes and symbols") {
  QuadraticExtension e(5, "u", 6);
  CHECK(e.kind() == QuadraticExtension::Kind::unramified);
  CHECK(e.residue_field_size() == 25);
  auto five = e.embed(5);
  auto c = e.square_class(five);
  CHECK(c.unit_bit == 0);
  CHECK(c.ell_bit == 1);
  // Rational units are squares in the unramified extension.
  CHECK(e.square_class(e.embed(2)) == SquareClass{});
  CHECK(e.square_class(e.nonsquare_unit()) == SquareClass{1, 0});
  CHECK(e.square_class(e.uniformizer()) == SquareClass{0, 1});
  CHECK(e.symbol(e.nonsquare_unit(), e.uniformizer()) == -1);
  CHECK(e.symbol(e.embed(2), e.embed(5)) == 1);
  auto s = e.make(3, 1);
  CHECK(e.mul(s, e.conjugate(s)).y.is_zero());

  QuadraticExtension r(7, "ell", 6);
  CHECK(r.kind() == QuadraticExtension::Kind::ramified);
  CHECK(r.residue_field_size() == 7);
  CHECK(r.valuation_and_residue(r.make(0, 1)).first == 1);
  CHECK_THROWS_AS(QuadraticExtension(5, "v", 6), Error);
}

}  // TEST_SUITE
