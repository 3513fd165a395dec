#include <doctest.h>

#include "h90/backends.hpp"
#include "h90/galois_field.hpp"
#include "h90/local_field.hpp"

using namespace h90;

namespace {

void check_tower_basics(const DegreeTower& t) {
  INFO("backend " << t.backend);
  REQUIRE(static_cast<int>(t.models.size()) == t.n_max);
  for (const auto& r : check_tower_consistency(t)) CHECK_MESSAGE(r.passed(), r.detail);
  CHECK(root_relation_check(t).passed());
  CHECK(hereditary_check(t).passed());
  CHECK(cd_forward_check(t).verdict != Verdict::fail);
  for (int n = 1; n <= t.n_max; ++n) {
    const auto& m = t.model(n);
    INFO("degree " << n);
    CHECK(validate_model(m, true).passed());
    CHECK(check_sigmamin1(m).passed());
    CHECK(check_length_lemma_bulk(m).passed());
    bool h = h90_holds(m).passed();
    CHECK(small_h90(m).passed() == h);
    CHECK((t.p == 2 ? criterion_p2(m) : criterion_podd(m)).passed() == h);
    CHECK(h1_implies_h90(m).passed());
    if (t.p == 2) CHECK(hs_p2_ann_check(t, n).passed());
  }
}

}  // namespace

TEST_SUITE("backends") {

TEST_CASE("galois field basics") {
  GaloisField f(7, 3);
  CHECK(f.order() == 343);
  CHECK(f.multiplicative_order(f.generator()) == 342);
  CHECK(f.pow(f.generator(), 342) == f.one());
  GaloisField g(2, 4);
  CHECK(g.multiplicative_order(g.generator()) == 15);
  CHECK(prime_factors(360) == std::vector<std::uint64_t>{2, 3, 5});
  CHECK(is_prime(97));
  CHECK_FALSE(is_prime(91));
  CHECK_THROWS_AS(GaloisField(4, 2), Error);
  CHECK_THROWS_AS(GaloisField(2, 24), Error);
}

TEST_CASE("finite field towers") {
  struct Case {
    int p;
    std::int64_t q;
  };
  for (Case c : {Case{3, 7}, Case{2, 3}, Case{2, 9}, Case{3, 4}, Case{5, 11}, Case{7, 8}, Case{3, 13}}) {
    INFO("p=" << c.p << " q=" << c.q);
    auto t = ff_build_tower(c.p, c.q, 3);
    CHECK(t.cd == 1);
    check_tower_basics(t);
    for (int n = 1; n <= 3; ++n) CHECK(h90_holds(t.model(n)).passed());
    CHECK(t.model(1).norm_group().dim() == t.model(1).dim_b());
    CHECK(cd_forward_check(t).passed());
  }
  CHECK_THROWS_AS(ff_build_tower(3, 8, 2), Error);
  CHECK_THROWS_AS(ff_build_tower(3, 6, 2), Error);
  CHECK_THROWS_AS(ff_build_tower(7, 29, 2), Error);
  CHECK_THROWS_AS(ff_build_tower(11, 23, 2), Error);
  CHECK_THROWS_AS(ff_build_tower(3, 7, 0), Error);
  CHECK_THROWS_AS(ff_build_tower(3, 7, 65), Error);
}

TEST_CASE("real tower") {
  auto t = real_build_tower(5);
  CHECK_FALSE(t.cd.has_value());
  check_tower_basics(t);
  CHECK(cd_forward_check(t).verdict == Verdict::skipped);
  for (int n = 1; n <= 5; ++n) {
    const auto& m = t.model(n);
    CHECK(m.dim_a() == 0);
    CHECK(m.dim_b() == 1);
    CHECK(m.k_a().dim() == 1);
    CHECK(h90_holds(m).passed());
    CHECK((m.norm_group() + m.k_a()).dim() == m.dim_b());
  }
}

TEST_CASE("local tower for ell = 5 unramified") {
  auto t = local_build_tower(5, "u", 3, 6);
  CHECK(t.cd == 2);
  check_tower_basics(t);
  auto h1 = h90_holds(t.model(1));
  REQUIRE_FALSE(h1.passed());
  CHECK(h1.witnesses[0] == Vec{0, 1});
  CHECK(h90_holds(t.model(2)).passed());
  CHECK(h90_holds(t.model(3)).passed());
}

TEST_CASE("local towers across primes and extensions") {
  for (std::int64_t ell : {3, 5, 7, 11, 13, 17, 29, 97}) {
    for (const char* choice : {"u", "ell", "u*ell"}) {
      INFO("ell=" << ell << " a=" << choice);
      auto t = local_build_tower(ell, choice, 4, 6);
      check_tower_basics(t);
      // Flags are set exactly when (a, -1) = 1.
      QuadraticExtension e(ell, choice, 6);
      bool norm = hilbert_symbol(e.a(), -1, ell) == 1;
      CHECK(t.model(1).flags().a_sum_two_squares == norm);
      CHECK(t.model(1).flags().xi_is_norm == norm);
      if (norm) CHECK(cor_surjective_equiv(t.model(1)).passed());
      // The unramified extension always fails h90 in degree 1: ell is not a norm.
      if (std::string(choice) == "u") CHECK_FALSE(h90_holds(t.model(1)).passed());
      CHECK(h90_holds(t.model(3)).passed());
    }
  }
  CHECK_THROWS_AS(local_build_tower(2, "u", 3, 6), Error);
  CHECK_THROWS_AS(local_build_tower(9, "u", 3, 6), Error);
  CHECK_THROWS_AS(local_build_tower(101, "u", 3, 6), Error);
  CHECK_THROWS_AS(local_build_tower(5, "u", 3, 5), Error);
  CHECK_THROWS_AS(local_build_tower(5, "x", 3, 6), Error);
}

TEST_CASE("tower helpers validate their inputs") {
  auto t = ff_build_tower(3, 7, 2);
  CHECK_THROWS_AS(hs_p2_ann_check(t, 1), Error);
  CHECK_THROWS_AS(t.model(3), std::out_of_range);
}

}  // TEST_SUITE
