#include <doctest.h>

#include "h90/cyclic_module.hpp"
#include "h90/synthgen.hpp"

using namespace h90;

namespace {

CyclicModule random_module(Rng& rng, int p, std::size_t max_dim) {
  Field f(p);
  std::vector<int> blocks;
  std::size_t dim = 0, target = 1 + rng.below(max_dim);
  while (dim < target) {
    int s = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(p)));
    if (dim + static_cast<std::size_t>(s) > target) s = static_cast<int>(target - dim);
    blocks.push_back(s);
    dim += static_cast<std::size_t>(s);
  }
  CyclicModule m = CyclicModule::standard(f, blocks);
  return m.conjugated(rng.invertible(f, m.dim()));
}

}  // namespace

TEST_SUITE("cyclic") {

TEST_CASE("standard blocks") {
  Field f(3);
  CyclicModule v3 = CyclicModule::standard(f, {3});
  CHECK(v3.is_free());
  CHECK(v3.h1().dim == 0);
  CHECK(v3.fixed_part().dim() == 1);
  CHECK(v3.norm_image() == v3.fixed_part());
  CyclicModule v2 = CyclicModule::standard(f, {2});
  CHECK_FALSE(v2.is_free());
  CHECK(v2.h1().dim == 1);
  CHECK(v2.norm_image().is_zero());
  CHECK(CyclicModule::regular(f).dim() == 3);
  CHECK(CyclicModule::trivial(f, 4).h1().dim == 4);
}

TEST_CASE("decomposition agrees with rank formula and oracle") {
  Rng rng(77);
  for (int p : {2, 3, 5, 7}) {
    for (int t = 0; t < 40; ++t) {
      CyclicModule m = random_module(rng, p, 10);
      Decomposition d = m.decompose();
      CHECK(d.profile == m.profile_from_ranks());
      CHECK(d.profile == oracle_decompose(m));
      CHECK(d.profile.dimension() == m.dim());
      CHECK(rank(d.basis_change) == m.dim());
      // Each chain g, tau g, ... ends in the fixed part.
      std::size_t col = 0;
      for (int s : d.blocks) {
        Vec last = d.basis_change.column(col + static_cast<std::size_t>(s) - 1);
        CHECK(m.fixed_part().contains(last));
        Vec next = d.basis_change.column(col);
        for (int k = 1; k < s; ++k) next = m.tau().apply(next);
        CHECK(next == last);
        col += static_cast<std::size_t>(s);
      }
      std::size_t expect_h1 = 0;
      for (int i = 1; i < p; ++i) expect_h1 += d.profile.m(i);
      CHECK(m.h1().dim == expect_h1);
      CHECK(m.is_free() == (m.h1().dim == 0));
    }
  }
}

TEST_CASE("profile is invariant under conjugation and generator change") {
  Rng rng(3);
  for (int p : {3, 5}) {
    for (int t = 0; t < 20; ++t) {
      CyclicModule m = random_module(rng, p, 8);
      JordanProfile prof = m.profile_from_ranks();
      CHECK(m.conjugated(rng.invertible(m.field(), m.dim())).profile_from_ranks() == prof);
      for (int c = 2; c < p; ++c) CHECK(m.with_generator_power(c).profile_from_ranks() == prof);
    }
  }
}

TEST_CASE("h1 representatives lie in ker N outside tau M") {
  Rng rng(12);
  for (int t = 0; t < 30; ++t) {
    CyclicModule m = random_module(rng, 3, 7);
    FirstCohomology h = m.h1();
    Subspace cocycles = kernel(m.norm_operator());
    Subspace span = m.radical_part();
    for (const Vec& v : h.representatives) {
      CHECK(cocycles.contains(v));
      CHECK_FALSE(span.contains(v));
      span = span + Subspace::span(m.field(), m.dim(), {v});
    }
    CHECK(span == cocycles);
  }
}

TEST_CASE("semisimple split and length") {
  Field f(3);
  CyclicModule m = CyclicModule::standard(f, {1, 3, 1, 2});
  SemisimpleSplit s = m.split_semisimple();
  CHECK(s.semisimple.dim() + s.rest.dim() == m.dim());
  CHECK((s.semisimple + s.rest).dim() == m.dim());
  // Generator of the V_3 block sits at index 1.
  Vec g(m.dim(), 0);
  g[1] = 1;
  CHECK(m.length(g) == 3);
  Vec fixed(m.dim(), 0);
  fixed[0] = 1;
  CHECK(m.length(fixed) == 1);
  CHECK(m.is_trivial_summand(fixed));
  Vec socle(m.dim(), 0);
  socle[3] = 1;
  CHECK_FALSE(m.is_trivial_summand(socle));
  CHECK_THROWS_AS(m.length(Vec(m.dim(), 0)), Error);
}

TEST_CASE("direct sums add profiles") {
  Field f(5);
  CyclicModule a = CyclicModule::standard(f, {2, 5});
  CyclicModule b = CyclicModule::standard(f, {1, 4});
  JordanProfile sum = CyclicModule::direct_sum(a, b).profile_from_ranks();
  for (int i = 1; i <= 5; ++i)
    CHECK(sum.m(i) == a.profile_from_ranks().m(i) + b.profile_from_ranks().m(i));
  CHECK_THROWS_AS(CyclicModule::direct_sum(a, CyclicModule::standard(Field(3), {1})), Error);
}

TEST_CASE("invalid actions are rejected with a reason") {
  Field f(3);
  Matrix swap = Matrix::from_rows(f, 2, {{0, 1}, {1, 0}});
  ActionCheck c = validate_action(swap);
  CHECK_FALSE(c.ok);
  CHECK(c.message.find("order 2") != std::string::npos);
  ActionCheck s = validate_action(Matrix::from_rows(f, 2, {{1, 1}, {0, 0}}));
  CHECK_FALSE(s.ok);
  CHECK(s.message.find("singular") != std::string::npos);
  CHECK_THROWS_AS(CyclicModule{swap}, Error);
  CHECK_THROWS_AS(CyclicModule::standard(f, {4}), Error);
  CHECK_THROWS_AS(CyclicModule::standard(f, {1}).with_generator_power(3), Error);
}

}  // TEST_SUITE
