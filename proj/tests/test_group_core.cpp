#include <random>
#include <set>

#include <catch2/catch_amalgamated.hpp>

#include <fexp/fixtures.hpp>
#include <fexp/group.hpp>
#include <fexp/io.hpp>

#include "support.hpp"

using namespace fexp;
using test_support::error_kind;

TEST_CASE("Cayley tables are validated", "[group]") {
  SECTION("trivial group") {
    auto g = from_cayley_table({{0}}, {});
    CHECK(g.group.order() == 1);
    CHECK(g.gens.size() == 0);
  }
  SECTION("Z2") {
    auto g = from_cayley_table({{0, 1}, {1, 0}}, {{"x", 1}});
    CHECK(g.group.order() == 2);
    CHECK(g.group.inv(1) == 1);
    CHECK(g.group.name(1) == "e1");
  }
  SECTION("a row without the identity is rejected") {
    auto k = error_kind([] { from_cayley_table({{0, 1}, {1, 1}}, {}); });
    REQUIRE(k);
    CHECK((*k == ErrorKind::no_inverse || *k == ErrorKind::not_associative));
  }
  SECTION("index 0 must be the identity") {
    CHECK(error_kind([] { from_cayley_table({{1, 0}, {0, 1}}, {}); })
          == ErrorKind::no_identity);
  }
  SECTION("a non-associative loop is rejected") {
    // A commutative loop of order 5 with identity 0 and unique inverses.
    std::vector<std::vector<elem_t>> t{{0, 1, 2, 3, 4},
                                       {1, 0, 3, 4, 2},
                                       {2, 4, 0, 1, 3},
                                       {3, 2, 4, 0, 1},
                                       {4, 3, 1, 2, 0}};
    CHECK(error_kind([&] { from_cayley_table(t, {}); })
          == ErrorKind::not_associative);
  }
  SECTION("generators must generate") {
    auto t = fixtures::z4_x().group.table();
    CHECK(error_kind([&] { from_cayley_table(t, {{"x", 2}}); })
          == ErrorKind::generators_do_not_generate);
  }
  SECTION("out of range entries") {
    CHECK(error_kind([] { from_cayley_table({{0, 2}, {1, 0}}, {}); })
          == ErrorKind::invalid_input);
  }
}

TEST_CASE("Permutation groups are closed breadth first", "[group]") {
  CHECK(from_permutations(2, {{"x", {1, 0}}}).group.order() == 2);
  CHECK(from_permutations(3, {{"x", {1, 2, 0}}}).group.order() == 3);
  auto s3 = fixtures::s3_st();
  CHECK(s3.group.order() == 6);
  CHECK(s3.gens.x_images() == std::vector<elem_t>{1, 2});
  SECTION("S3 is non-abelian") {
    bool abelian = true;
    for (elem_t a = 0; a < 6; ++a) {
      for (elem_t b = 0; b < 6; ++b) {
        abelian = abelian && s3.group.mul(a, b) == s3.group.mul(b, a);
      }
    }
    CHECK_FALSE(abelian);
  }
  CHECK(error_kind([] { from_permutations(3, {{"x", {0, 0, 1}}}); })
        == ErrorKind::not_a_permutation);
  CHECK(error_kind([] { from_permutations(3, {{"x", {0, 1}}}); })
        == ErrorKind::not_a_permutation);
}

TEST_CASE("Words evaluate left to right", "[group]") {
  auto z2 = fixtures::z2_x();
  auto ev = [&](char const* w) {
    return eval_word(z2.group, z2.gens, parse_word(z2.gens, w));
  };
  CHECK(ev("") == 0);
  CHECK(ev("x x") == 0);
  CHECK(ev("x^-1") == 1);
  CHECK(error_kind([&] { ev("y"); }) == ErrorKind::unknown_letter);
  CHECK(error_kind([&] { ev("x^2"); }) == ErrorKind::syntax_error);

  auto z3 = fixtures::z3_xy();
  Word w = parse_word(z3.gens, "x y^-1 x");
  CHECK(format_word(z3.gens, w) == "x y^-1 x");
  CHECK(eval_word(z3.group, z3.gens, w) == 0);
}

TEST_CASE("Word evaluation is a homomorphism", "[group][property]") {
  std::mt19937_64 rng(0);
  for (auto const& ng : fixtures::small_groups()) {
    auto const& g = ng.group;
    if (g.gens.size() == 0) {
      continue;
    }
    std::uniform_int_distribution<std::size_t> letter(0, g.gens.size() - 1);
    std::uniform_int_distribution<int>         len(0, 8);
    auto random_word = [&] {
      Word w;
      for (int i = len(rng); i > 0; --i) {
        w.push_back({letter(rng), (rng() & 1U) ? 1 : -1});
      }
      return w;
    };
    for (int i = 0; i < 200; ++i) {
      Word const u = random_word();
      Word const v = random_word();
      CHECK(eval_word(g.group, g.gens, concat(u, v))
            == g.group.mul(eval_word(g.group, g.gens, u),
                           eval_word(g.group, g.gens, v)));
      CHECK(eval_word(g.group, g.gens, word_inverse(u))
            == g.group.inv(eval_word(g.group, g.gens, u)));
    }
  }
}

TEST_CASE("Extended generator sets add one barred letter per element",
          "[group]") {
  auto triv = fixtures::trivial();
  auto y0 = extend_generators(triv.group, triv.gens);
  REQUIRE(y0.size() == 1);
  CHECK(y0[0].name == "@e0");

  auto z2 = fixtures::z2_x();
  auto y = extend_generators(z2.group, z2.gens);
  REQUIRE(y.size() == 3);
  CHECK(y[0].name == "x");
  CHECK(y[1].name == "@e0");
  CHECK(y[2].name == "@e1");
  CHECK(y[2].image == 1);
  CHECK(y.is_barred(2));
  CHECK(y.kind() == GeneratorKind::extended);
  CHECK(error_kind([&] { extend_generators(z2.group, y); })
        == ErrorKind::invalid_input);

  auto s3 = fixtures::s3_st();
  CHECK(extend_generators(s3.group, s3.gens).size() == 8);

  // X-letters evaluate identically in X and Y.
  Word const w = parse_word(z2.gens, "x x^-1 x");
  Word const wy = parse_word(y, "x x^-1 x");
  CHECK(eval_word(z2.group, z2.gens, w) == eval_word(z2.group, y, wy));
  CHECK(eval_word(z2.group, y, parse_word(y, "@e1 x")) == 0);
}

TEST_CASE("Shortest words reach every element", "[group]") {
  for (auto const& ng : fixtures::small_groups()) {
    auto const& g = ng.group;
    auto const  words = shortest_words(g.group, g.gens);
    REQUIRE(words.size() == g.group.order());
    for (elem_t v = 0; v < g.group.order(); ++v) {
      CHECK(eval_word(g.group, g.gens, words[v]) == v);
    }
  }
}

TEST_CASE("Group files round trip through JSON", "[group][io]") {
  for (auto const& ng : fixtures::small_groups()) {
    auto const j = group_to_json(ng.group, ng.name);
    auto const back = group_from_json(j);
    CHECK(back.group.table() == ng.group.group.table());
    CHECK(back.gens == ng.group.gens);
  }
  auto s3 = load_group(test_support::data_file("s3.json"));
  CHECK(s3.group.order() == 6);
  CHECK(s3.gens.size() == 2);
  auto z2 = load_group(test_support::data_file("z2.json"));
  CHECK(z2.group.table() == fixtures::z2_x().group.table());

  CHECK(error_kind([] { parse_json_text("{not json"); })
        == ErrorKind::invalid_input);
  CHECK(error_kind([] { group_from_json(json{{"table", 3}}); })
        == ErrorKind::invalid_input);
  CHECK(error_kind([] { load_group("/nonexistent/file.json"); })
        == ErrorKind::invalid_input);
}
