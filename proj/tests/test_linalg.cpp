#include <doctest.h>

#include <set>

#include "h90/subspace.hpp"
#include "h90/synthgen.hpp"

using namespace h90;

namespace {

// Every vector of F_p^n, for brute-force comparisons.
std::vector<Vec> all_vectors(int p, std::size_t n) {
  std::vector<Vec> out;
  Vec v(n, 0);
  while (true) {
    out.push_back(v);
    std::size_t k = 0;
    while (k < n && ++v[k] == p) v[k++] = 0;
    if (k == n) break;
  }
  return out;
}

}  // namespace

TEST_SUITE("linalg") {

TEST_CASE("field arithmetic and inverses") {
  for (int p : {2, 3, 5, 7}) {
    Field f(p);
    for (int a = 1; a < p; ++a) CHECK(f.mul(static_cast<Elem>(a), f.inv(static_cast<Elem>(a))) == 1);
    CHECK(f.reduce(-1) == p - 1);
  }
  CHECK_THROWS_AS(Field(4), Error);
  CHECK_THROWS_AS(Field(11), Error);
  CHECK_THROWS_AS(Field(3).inv(0), Error);
}

TEST_CASE("inverse and rank on random matrices") {
  for (int p : {2, 3, 5, 7}) {
    Field f(p);
    Rng rng(static_cast<std::uint64_t>(p));
    for (int t = 0; t < 40; ++t) {
      std::size_t n = 1 + rng.below(8);
      Matrix g = rng.invertible(f, n);
      CHECK(rank(g) == n);
      CHECK(g * inverse(g) == Matrix::identity(f, n));
      Matrix m = rng.matrix(f, 1 + rng.below(6), 1 + rng.below(6));
      CHECK(rank(m) == rank(m.transpose()));
      CHECK(rank(m) + kernel(m).dim() == m.cols());
    }
  }
  CHECK_THROWS_AS(inverse(Matrix::from_rows(Field(2), 2, {{1, 1}, {1, 1}})), Error);
}

TEST_CASE("kernel and intersection agree with enumeration") {
  for (int p : {2, 3}) {
    Field f(p);
    Rng rng(100 + static_cast<std::uint64_t>(p));
    for (int t = 0; t < 30; ++t) {
      std::size_t n = 1 + rng.below(4);
      Matrix m = rng.matrix(f, 1 + rng.below(3), n);
      Subspace ker = kernel(m);
      Subspace u = Subspace::row_space(rng.matrix(f, rng.below(n + 1), n));
      Subspace w = Subspace::row_space(rng.matrix(f, rng.below(n + 1), n));
      Subspace uw = u.intersect(w);
      std::size_t ker_count = 0, cap_count = 0;
      for (const Vec& v : all_vectors(p, n)) {
        bool in_ker = true;
        Vec mv = m.apply(v);
        for (Elem e : mv) in_ker = in_ker && e == 0;
        CHECK(ker.contains(v) == in_ker);
        ker_count += in_ker;
        bool in_both = u.contains(v) && w.contains(v);
        CHECK(uw.contains(v) == in_both);
        cap_count += in_both;
      }
      std::size_t expect = 1;
      for (std::size_t i = 0; i < ker.dim(); ++i) expect *= static_cast<std::size_t>(p);
      CHECK(ker_count == expect);
      expect = 1;
      for (std::size_t i = 0; i < uw.dim(); ++i) expect *= static_cast<std::size_t>(p);
      CHECK(cap_count == expect);
      CHECK((u + w).dim() + uw.dim() == u.dim() + w.dim());
      CHECK(u.annihilator().dim() + u.dim() == n);
    }
  }
}

TEST_CASE("preimage and witness_outside") {
  Field f(3);
  Rng rng(9);
  for (int t = 0; t < 30; ++t) {
    Matrix m = rng.matrix(f, 3, 4);
    Subspace target = Subspace::row_space(rng.matrix(f, 1, 3));
    Subspace pre = preimage(m, target);
    for (const Vec& v : pre.basis_vectors()) CHECK(target.contains(m.apply(v)));
    CHECK(pre.contains(kernel(m)));
    Subspace full = Subspace::full(f, 4);
    auto w = full.witness_outside(pre);
    CHECK(w.has_value() == (pre.dim() < 4));
    if (w) CHECK_FALSE(pre.contains(*w));
  }
}

TEST_CASE("canonical bases make equality structural") {
  Field f(5);
  Subspace a = Subspace::span(f, 3, {{1, 2, 3}, {0, 1, 1}});
  Subspace b = Subspace::span(f, 3, {{1, 3, 4}, {2, 4, 1}, {0, 2, 2}});
  CHECK(a == b);
  CHECK(a.dim() == 2);
}

TEST_CASE("subspace enumeration matches gaussian binomial") {
  for (int p : {2, 3}) {
    Field f(p);
    for (std::size_t n = 0; n <= 4; ++n) {
      for (std::size_t k = 0; k <= n; ++k) {
        auto subs = enumerate_subspaces(f, n, k);
        CHECK(subs.size() == gaussian_binomial(p, n, k));
        std::set<std::vector<Elem>> distinct;
        for (const auto& s : subs) {
          CHECK(s.dim() == k);
          distinct.insert(s.basis().data());
        }
        CHECK(distinct.size() == subs.size());
      }
    }
  }
  CHECK(gaussian_binomial(2, 4, 2) == 35);
  CHECK(gaussian_binomial(3, 3, 1) == 13);
}

TEST_CASE("for_each_vector visits each vector once") {
  Field f(3);
  Subspace u = Subspace::span(f, 4, {{1, 0, 2, 0}, {0, 1, 1, 1}});
  std::set<Vec> seen;
  for_each_vector(u, [&](const Vec& v) {
    CHECK(u.contains(v));
    seen.insert(v);
  });
  CHECK(seen.size() == 9);
}

TEST_CASE("enumeration refuses oversized requests") {
  CHECK_THROWS_AS(enumerate_subspaces(Field(7), 12, 6), Error);
  CHECK_THROWS_AS(for_each_vector(Subspace::full(Field(2), 24), [](const Vec&) {}), Error);
}

}  // TEST_SUITE
