#include <doctest.h>

#include "h90/model_io.hpp"
#include "h90/synthgen.hpp"

using namespace h90;

namespace {

ExtensionModel fixture(const char* name) {
  return load_model(std::string(H90_FIXTURE_DIR) + "/" + name);
}

bool axiom_holds(const ExtensionModel& m, Axiom a) {
  for (const auto& r : check_axioms(m))
    if (r.axiom == a) return r.holds;
  FAIL("axiom not reported");
  return false;
}

}  // namespace

TEST_SUITE("model") {

TEST_CASE("free block fixture satisfies every check") {
  auto m = fixture("free_block_p3.h90");
  CHECK(validate_model(m, true).passed());
  CHECK(h90_holds(m).passed());
  CHECK(small_h90(m).passed());
  CHECK(criterion_podd(m).passed());
  CHECK(summand_condition(m).passed());
  CHECK(check_sigmamin1(m).passed());
  CHECK(check_length_lemma_bulk(m).passed());
  CHECK(h1_implies_h90(m).passed());
  CHECK(hs_equivalences(m).passed());
  CHECK_FALSE(find_rational_summand(m).has_value());
}

TEST_CASE("trivial failing fixture") {
  auto m = fixture("trivial_failing_p2.h90");
  CHECK(satisfies_base_axioms(m));
  auto h = h90_holds(m);
  CHECK_FALSE(h.passed());
  REQUIRE(h.witnesses.size() >= 1);
  CHECK(h.witnesses[0] == Vec{1});
  CHECK_FALSE(criterion_p2(m).passed());
  CHECK_FALSE(summand_condition(m).passed());
  CHECK_THROWS_AS(criterion_podd(m), Error);
}

TEST_CASE("corrupted K_a fixture fails A5 and checkers refuse it") {
  auto m = fixture("corrupted_ka_p3.h90");
  CHECK_FALSE(axiom_holds(m, Axiom::A5));
  CHECK_FALSE(validate_model(m).passed());
  CHECK_THROWS_AS(h90_holds(m), Error);
  CHECK_THROWS_AS(criterion_podd(m), Error);
}

TEST_CASE("negative scope fixtures") {
  auto v3 = fixture("freeform_p5_v3.h90");
  CHECK(satisfies_base_axioms(v3));
  auto lemma = check_length_lemma_bulk(v3);
  CHECK_FALSE(lemma.passed());
  REQUIRE(lemma.witnesses.size() == 2);
  Vec g{1, 0, 0};
  CHECK_FALSE(check_length_lemma(v3, g).passed());

  auto v2 = fixture("freeform_p3_v2_kxi0.h90");
  CHECK(satisfies_base_axioms(v2));
  CHECK_FALSE(check_sigmamin1(v2).passed());
  CHECK(h90_holds(v2).passed());
  CHECK_THROWS_AS(criterion_podd(v2), Error);
}

TEST_CASE("failing reports carry checkable witnesses") {
  for (int p : {2, 3, 5}) {
    for (std::uint64_t s = 0; s < 60; ++s) {
      auto m = generate(random_spec(p, GenMode::realizable, 10, s));
      auto h = h90_holds(m);
      if (h.passed()) continue;
      REQUIRE_FALSE(h.witnesses.empty());
      // Witness in ker N outside (sigma-1)A.
      CHECK(kernel(m.n()).contains(h.witnesses[0]));
      CHECK_FALSE(m.a().radical_part().contains(h.witnesses[0]));
      auto c = p == 2 ? criterion_p2(m) : criterion_podd(m);
      REQUIRE_FALSE(c.passed());
      Subspace rhs = m.norm_group() + (p == 2 ? m.k_a() : m.k_xi());
      CHECK_FALSE(rhs.contains(c.witnesses[0]));
    }
  }
}

TEST_CASE("realizable models satisfy the equivalences") {
  for (int p : {2, 3, 5, 7}) {
    for (std::uint64_t s = 0; s < 80; ++s) {
      auto m = generate(random_spec(p, GenMode::realizable, 14, 1000 + s));
      INFO("p=" << p << " seed=" << s);
      REQUIRE(validate_model(m, true).passed());
      bool h = h90_holds(m).passed();
      CHECK(small_h90(m).passed() == h);
      CHECK(summand_condition(m).passed() == h);
      CHECK((p == 2 ? criterion_p2(m) : criterion_podd(m)).passed() == h);
      CHECK(check_sigmamin1(m).passed());
      CHECK(check_length_lemma_bulk(m).passed());
      CHECK(h1_implies_h90(m).passed());
    }
  }
}

TEST_CASE("verdicts are invariant under sigma -> sigma^c") {
  for (int p : {3, 5, 7}) {
    for (std::uint64_t s = 0; s < 30; ++s) {
      auto m = generate(random_spec(p, GenMode::realizable, 12, 50 + s));
      bool h = h90_holds(m).passed();
      for (int c = 2; c < p; ++c) {
        auto mc = m.with_generator_power(c);
        CHECK(h90_holds(mc).passed() == h);
        CHECK(criterion_podd(mc).passed() == h);
        CHECK(check_sigmamin1(mc).passed());
      }
    }
  }
}

TEST_CASE("direct sums preserve validity and combine h90 verdicts") {
  for (int p : {2, 3}) {
    for (std::uint64_t s = 0; s < 30; ++s) {
      auto m1 = generate(random_spec(p, GenMode::realizable, 8, 300 + s));
      auto m2 = generate(random_spec(p, GenMode::realizable, 8, 600 + s));
      auto sum = direct_sum(m1, m2);
      CHECK(satisfies_base_axioms(sum));
      CHECK(h90_holds(sum).passed() == (h90_holds(m1).passed() && h90_holds(m2).passed()));
      CHECK(sum.dim_a() == m1.dim_a() + m2.dim_a());
    }
  }
  CHECK_THROWS_AS(direct_sum(ExtensionModel::zero(Field(2)), ExtensionModel::zero(Field(3))), Error);
}

TEST_CASE("rational summand witnesses are sigma-stable complements") {
  for (std::uint64_t s = 0; s < 100; ++s) {
    auto m = generate(random_spec(s % 2 ? 2 : 3, GenMode::realizable, 10, 900 + s));
    auto rs = find_rational_summand(m);
    CHECK(rs.has_value() == !summand_condition(m).passed());
    if (!rs) continue;
    Subspace iq = m.restrict_image(rs->q);
    CHECK_FALSE(iq.is_zero());
    CHECK(rs->p.image_under(m.a().sigma()) == rs->p);
    CHECK(iq.intersect(rs->p).is_zero());
    CHECK(iq.dim() + rs->p.dim() == m.dim_a());
  }
}

TEST_CASE("flags and the corestriction equivalence") {
  for (int p : {2, 3, 5}) {
    int tried = 0;
    for (std::uint64_t s = 0; s < 200 && tried < 20; ++s) {
      GenSpec spec = random_spec(p, GenMode::realizable, 10, 4000 + s);
      spec.flags = {p == 2, true};
      if (p == 2) spec.extra_b_dim = 0;
      else spec.m2 = 0;
      ExtensionModel m = ExtensionModel::zero(Field(p));
      try {
        m = gen_realizable(spec);
      } catch (const Error&) {
        continue;
      }
      ++tried;
      CHECK(validate_model(m, true).passed());
      CHECK(cor_surjective_equiv(m).passed());
    }
    CHECK(tried > 0);
  }
  auto plain = fixture("free_block_p3.h90");
  CHECK_THROWS_AS(cor_surjective_equiv(plain), Error);
}

TEST_CASE("a flag whose inclusion fails is reported") {
  auto m = fixture("trivial_failing_p2.h90");
  Field f(2);
  auto flagged = ExtensionModel(m.a(), m.dim_b(), m.i(), m.n(), Subspace::full(f, 1),
                                m.k_xi(), {true, false});
  CHECK_FALSE(validate_model(flagged).passed());
  CHECK_THROWS_AS(cor_surjective_equiv(flagged), Error);
}

TEST_CASE("constructor rejects mismatched shapes") {
  Field f(3);
  auto a = CyclicModule::standard(f, {3});
  CHECK_THROWS_AS(ExtensionModel(a, 1, Matrix(f, 2, 1), Matrix(f, 1, 3), Subspace(f, 1),
                                 Subspace(f, 1)),
                  Error);
  CHECK_THROWS_AS(ExtensionModel(a, 1, Matrix(f, 3, 1), Matrix(f, 1, 3), Subspace(f, 2),
                                 Subspace(f, 1)),
                  Error);
  CHECK_THROWS_AS(ExtensionModel(a, 1, Matrix(Field(2), 3, 1), Matrix(f, 1, 3), Subspace(f, 1),
                                 Subspace(f, 1)),
                  Error);
}

TEST_CASE("freeform models keep base axioms") {
  for (int p : {2, 3, 5}) {
    for (std::uint64_t s = 0; s < 40; ++s) {
      auto m = generate(random_spec(p, GenMode::freeform, 10, 7000 + s));
      CHECK(satisfies_base_axioms(m));
      CHECK(small_h90(m).passed() == h90_holds(m).passed());
      CHECK(summand_condition(m).passed() == h90_holds(m).passed());
      if (p == 2) CHECK(criterion_p2(m).passed() == h90_holds(m).passed());
    }
  }
}

TEST_CASE("length lemma on individual elements matches the bulk form") {
  for (std::uint64_t s = 0; s < 40; ++s) {
    auto m = generate(random_spec(5, GenMode::realizable, 12, 8100 + s));
    Rng rng(s);
    for (int t = 0; t < 10; ++t) {
      Vec y = rng.vec(m.field(), m.dim_a());
      bool zero = true;
      for (Elem e : y) zero = zero && e == 0;
      if (zero || m.a().length(y) < 2) continue;
      CHECK(check_length_lemma(m, y).passed());
    }
  }
}

}  // TEST_SUITE
