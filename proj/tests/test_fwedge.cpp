#include <functional>

#include <catch2/catch_amalgamated.hpp>

#include <fexp/expansion.hpp>
#include <fexp/fixtures.hpp>
#include <fexp/fwedge.hpp>

#include "oracle.hpp"
#include "support.hpp"

using namespace fexp;
using test_support::error_kind;

namespace {

  Element eval_text(Expansion const& fam, std::string const& text) {
    return eval_term(parse_term(fam.gens(), text), fam);
  }

  Element eval_text(MWedge const& model, std::string const& text) {
    return eval_term(parse_term(model.free().gens(), text), model);
  }

  template <typename T>
  T eval_oracle(oracle::Tree const& t, oracle::Model const& om) {
    using E = oracle::Elem;
    return oracle::eval_tree<E>(
        t, om.identity(), om.letter(0),
        [&](E const& a, E const& b) { return om.mul(a, b); },
        [&](E const& a) { return om.inv(a); },
        [&](E const& a) { return om.class_max(a.p); });
  }

}  // namespace

TEST_CASE("The m-operation in the closed family", "[fwedge]") {
  MWedge const model(fixtures::z2_x());
  Element const x = model.generator_image("x");
  CHECK(model.closed().format(model.m(x))
        == "(V={e0,e1}; E={(e0,@e0),(e0,@e1),(e1,@e0),(e1,@e1)}; g=e1)");
  CHECK(model.m(model.identity()) == model.identity());
  CHECK(model.closed().leq(x, model.m(x)));
  CHECK(error_kind([] {
          Expansion::margolis_meakin(fixtures::z2_x()).m(Element{{1, {}}, 0});
        })
        == ErrorKind::wrong_flavor);
}

TEST_CASE("Erasing and restoring barred edges", "[fwedge]") {
  MWedge const model(fixtures::z2_x());
  auto const&  f = model.free();
  Element const x = model.generator_image("x");
  CHECK(f.format(model.f_map(x)) == "(V={e0,e1}; E={(e0,x)}; g=e1)");
  CHECK(f.format(model.f_map(model.identity())) == "(V={e0}; E={}; g=e0)");
  CHECK(model.f_inverse(model.f_map(x)) == x);

  for (auto const& ng : fixtures::small_groups()) {
    MWedge const m(ng.group);
    auto const   closed = m.closed().enumerate_elements();
    auto const   free = m.free().enumerate_elements();
    REQUIRE(closed.size() == free.size());
    for (auto const& a : closed) {
      CHECK(m.free().is_member(m.f_map(a)));
      CHECK(m.f_inverse(m.f_map(a)) == a);
    }
    for (auto const& b : free) {
      CHECK(m.f_map(m.f_inverse(b)) == b);
    }
  }
}

TEST_CASE("The erasing map is a morphism of enriched monoids",
          "[fwedge][property]") {
  for (auto const& ng : fixtures::small_groups()) {
    MWedge const m(ng.group);
    auto const   elems = m.closed().enumerate_elements();
    if (elems.size() > 200) {
      continue;
    }
    auto const& f = m.free();
    for (auto const& a : elems) {
      CHECK(m.f_map(m.inv(a)) == f.inv(m.f_map(a)));
      CHECK(m.f_map(m.m(a)) == f.m(m.f_map(a)));
      for (auto const& b : elems) {
        CHECK(m.f_map(m.mul(a, b)) == f.mul(m.f_map(a), m.f_map(b)));
      }
    }
  }
}

TEST_CASE("Parsing terms", "[fwedge]") {
  auto const z2 = fixtures::z2_xy();
  auto p = [&](char const* s) { return to_string(parse_term(z2.gens, s)); };
  CHECK(p("1") == "1");
  CHECK(p("x") == "x");
  CHECK(p("x y^-1") == "x y^-1");
  CHECK(p("m(x y)") == "m(x y)");
  CHECK(p("(x y)^-1") == "(x y)^-1");
  CHECK(p("m(x)^-1 x") == "m(x)^-1 x");
  CHECK(parse_term(z2.gens, "x")
        == Term::letter("x"));
  CHECK(parse_term(z2.gens, "m(x)^-1")
        == Term::inverse(Term::m(Term::letter("x"))));
  CHECK(term_size(parse_term(z2.gens, "m(x) y^-1")) == 5);

  CHECK(error_kind([&] { parse_term(z2.gens, "m("); })
        == ErrorKind::syntax_error);
  CHECK(error_kind([&] { parse_term(z2.gens, "x)"); })
        == ErrorKind::syntax_error);
  CHECK(error_kind([&] { parse_term(z2.gens, "x^2"); })
        == ErrorKind::syntax_error);
  CHECK(error_kind([&] { parse_term(z2.gens, ""); })
        == ErrorKind::syntax_error);
  CHECK(error_kind([&] { parse_term(z2.gens, "z"); })
        == ErrorKind::unknown_letter);
}

TEST_CASE("Evaluating terms", "[fwedge]") {
  auto const      z2 = fixtures::z2_x();
  Expansion const f = Expansion::f_expansion(z2);
  MWedge const    w(z2);

  CHECK(f.format(eval_text(f, "m(x)")) == "(V={e0,e1}; E={}; g=e1)");
  CHECK(f.format(eval_text(f, "1")) == "(V={e0}; E={}; g=e0)");
  CHECK(f.format(eval_text(f, "m(x) x^-1 x"))
        == "(V={e0,e1}; E={(e0,x)}; g=e1)");
  Element const wx = eval_text(w, "m(x) x^-1 x");
  CHECK(w.f_map(wx) == eval_text(f, "m(x) x^-1 x"));
  CHECK(w.closed().format(wx)
        == "(V={e0,e1}; E={(e0,@e0),(e0,@e1),(e0,x),(e1,@e0),(e1,@e1)}; "
           "g=e1)");
  CHECK(eval_text(f, "x x^-1 x") == f.generator_image("x"));
}

TEST_CASE("All small terms agree across models and with the oracle",
          "[fwedge][property]") {
  auto const      z2 = fixtures::z2_x();
  Expansion const f = Expansion::f_expansion(z2);
  MWedge const    w(z2);
  auto const      of = oracle::model_of(f);
  auto const      ow = oracle::model_of(w.closed());
  auto const      trees = oracle::trees_up_to(7);
  std::size_t     seen = 0;
  for (auto const& level : trees) {
    for (auto const& t : level) {
      std::string const text = oracle::render(t, "x");
      Term const        term = parse_term(f.gens(), text);
      Element const     in_f = eval_term(term, f);
      Element const     in_w = eval_term(term, w);
      CHECK(w.f_map(in_w) == in_f);
      CHECK(oracle::from_library(f, of, in_f)
            == eval_oracle<oracle::Elem>(t, of));
      CHECK(oracle::from_library(w.closed(), ow, in_w)
            == eval_oracle<oracle::Elem>(t, ow));
      ++seen;
    }
  }
  CHECK(seen > 1000);
}

TEST_CASE("Every closed element is the value of an enriched term",
          "[fwedge][property]") {
  for (auto const& ng : fixtures::small_groups()) {
    if (ng.group.group.order() > 4) {
      continue;
    }
    MWedge const m(ng.group);
    for (auto const& a : m.closed().enumerate_elements()) {
      Term const t = decompose(m, a);
      CHECK(eval_term(t, m) == a);
      CHECK(eval_term(t, m.free()) == m.f_map(a));
      CHECK(eval_term(parse_term(m.free().gens(), to_string(t)), m) == a);
    }
  }
}
