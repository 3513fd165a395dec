#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "h90/backends.hpp"
#include "h90/model_io.hpp"
#include "h90/synthgen.hpp"

using namespace h90;

namespace {

const char* kFreeBlock =
    "h90-model 1\n"
    "p 3\n"
    "dimA 3\n"
    "sigma\n"
    "1 0 0\n"
    "1 1 0\n"
    "0 1 1\n"
    "dimB 1\n"
    "i\n"
    "0\n"
    "0\n"
    "1\n"
    "N\n"
    "1 0 0\n"
    "K_a 0\n"
    "K_xi 0\n"
    "flags a_sum_two_squares=0 xi_is_norm=0\n"
    "provenance hand written\n"
    "end\n";

// Replaces line `line` (1-based) of a record.
std::string with_line(std::size_t line, const std::string& text,
                      const std::string& base = kFreeBlock) {
  std::istringstream in(base);
  std::ostringstream out;
  std::string l;
  for (std::size_t n = 1; std::getline(in, l); ++n) out << (n == line ? text : l) << '\n';
  return out.str();
}

void expect_parse_error(const std::string& text, std::size_t line, const std::string& field) {
  try {
    parse_model(text);
    FAIL("parse succeeded");
  } catch (const ParseError& e) {
    CHECK(e.line() == line);
    CHECK(e.field() == field);
  }
}

}  // namespace

TEST_SUITE("model_io") {

TEST_CASE("hand written record parses") {
  auto m = parse_model(std::string(kFreeBlock));
  CHECK(m.p() == 3);
  CHECK(m.dim_a() == 3);
  CHECK(m.dim_b() == 1);
  CHECK(m.provenance() == "hand written");
  CHECK(serialize_model(parse_model(serialize_model(m))) == serialize_model(m));
}

TEST_CASE("comments and blank lines are ignored") {
  std::string text = "# leading comment\n\n" + std::string(kFreeBlock);
  CHECK(parse_model(text).dim_a() == 3);
}

TEST_CASE("generated models round-trip exactly") {
  for (int p : {2, 3, 5, 7}) {
    for (std::uint64_t s = 0; s < 25; ++s) {
      GenMode mode = s % 2 ? GenMode::freeform : GenMode::realizable;
      auto m = generate(random_spec(p, mode, 12, s));
      std::string text = serialize_model(m);
      auto back = parse_model(text);
      CHECK(serialize_model(back) == text);
      CHECK(fingerprint(back) == fingerprint(m));
      CHECK(back.flags() == m.flags());
      CHECK(back.a().sigma() == m.a().sigma());
      CHECK(back.k_a() == m.k_a());
      CHECK(back.k_xi() == m.k_xi());
    }
  }
}

TEST_CASE("zero-dimensional pieces round-trip") {
  auto z = ExtensionModel::zero(Field(5));
  CHECK(serialize_model(parse_model(serialize_model(z))) == serialize_model(z));
}

TEST_CASE("save and load through a file") {
  auto m = generate(random_spec(3, GenMode::realizable, 8, 42));
  auto path = std::filesystem::temp_directory_path() / "h90_io_roundtrip.h90";
  save_model(m, path.string());
  CHECK(serialize_model(load_model(path.string())) == serialize_model(m));
  std::filesystem::remove(path);
  CHECK_THROWS_AS(load_model(path.string()), Error);
}

TEST_CASE("parse errors name line and field") {
  expect_parse_error("", 1, "h90-model");
  expect_parse_error(with_line(1, "h90-model 2"), 1, "h90-model");
  expect_parse_error(with_line(2, "p 4"), 2, "p");
  expect_parse_error(with_line(3, "dimA x"), 3, "dimA");
  expect_parse_error(with_line(6, "1 3 0"), 6, "sigma");
  expect_parse_error(with_line(6, "1 1"), 6, "sigma");
  expect_parse_error(with_line(14, "1 0"), 14, "N");
  expect_parse_error(with_line(15, "K_a 2"), 15, "K_a");
  expect_parse_error(with_line(17, "flags bogus=1"), 17, "flags");
  expect_parse_error(with_line(19, "stop"), 19, "end");
  expect_parse_error(std::string(kFreeBlock) + "extra\n", 20, "end");
}

TEST_CASE("invalid group action is a parse error on sigma") {
  // sigma swaps the first two coordinates, so it has order 2, not 3.
  std::string text = with_line(6, "1 0 0", with_line(5, "0 1 0"));
  try {
    parse_model(text);
    FAIL("parse succeeded");
  } catch (const ParseError& e) {
    CHECK(e.field() == "sigma");
    CHECK(std::string(e.what()).find("sigma") != std::string::npos);
  }
}

TEST_CASE("towers round-trip") {
  for (const auto& t : {ff_build_tower(3, 7, 3), real_build_tower(4),
                        local_build_tower(5, "u", 3, 6)}) {
    std::string text = serialize_tower(t);
    DegreeTower back = parse_tower(text);
    CHECK(serialize_tower(back) == text);
    CHECK(back.backend == t.backend);
    CHECK(back.cd == t.cd);
    CHECK(back.b_dims == t.b_dims);
    CHECK(back.root_class == t.root_class);
    REQUIRE(back.models.size() == t.models.size());
    for (std::size_t n = 0; n < t.models.size(); ++n)
      CHECK(fingerprint(back.models[n]) == fingerprint(t.models[n]));
  }
  CHECK_THROWS_AS(parse_tower("h90-tower 9\n"), ParseError);
}

}  // TEST_SUITE
