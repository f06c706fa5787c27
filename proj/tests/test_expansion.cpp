#include <algorithm>
#include <random>

#include <catch2/catch_amalgamated.hpp>

#include <fexp/expansion.hpp>
#include <fexp/fixtures.hpp>
#include <fexp/monoid.hpp>

#include "oracle.hpp"
#include "support.hpp"

using namespace fexp;
using test_support::error_kind;

namespace {

  Element gx(Expansion const& fam) {
    return fam.generator_image("x");
  }

}  // namespace

TEST_CASE("Products and inverses on small examples", "[expansion]") {
  auto const      z2 = fixtures::z2_x();
  Expansion const m = Expansion::margolis_meakin(z2);
  Expansion const f = Expansion::f_expansion(z2);

  for (auto const& a : m.enumerate_elements()) {
    CHECK(m.mul(m.identity(), a) == a);
    CHECK(m.mul(a, m.identity()) == a);
  }
  CHECK(m.format(m.mul(gx(m), gx(m))) == "(V={e0,e1}; E={(e0,x),(e1,x)}; g=e0)");
  CHECK(m.format(gx(m)) == "(V={e0,e1}; E={(e0,x)}; g=e1)");
  CHECK(m.format(m.inv(gx(m))) == "(V={e0,e1}; E={(e1,x)}; g=e1)");
  CHECK(m.inv(m.identity()) == m.identity());

  Element const edgeless = f.parse("(V={e0,e1}; E={}; g=e1)");
  CHECK(f.format(f.mul(edgeless, edgeless)) == "(V={e0,e1}; E={}; g=e0)");
}

TEST_CASE("Generator images", "[expansion]") {
  auto const z2 = fixtures::z2_x();
  CHECK(Expansion::margolis_meakin(z2).format(
            Expansion::margolis_meakin(z2).generator_image("x"))
        == "(V={e0,e1}; E={(e0,x)}; g=e1)");
  for (auto const& ng : fixtures::small_groups()) {
    Expansion const y = Expansion::margolis_meakin_extended(ng.group);
    CHECK(y.format(y.generator_image("@e0")) == "(V={e0}; E={(e0,@e0)}; g=e0)");
  }
  Expansion const y = Expansion::margolis_meakin_extended(z2);
  CHECK(y.format(y.generator_image("@e1")) == "(V={e0,e1}; E={(e0,@e1)}; g=e1)");
  CHECK(error_kind([&] { y.generator_image("q"); }) == ErrorKind::unknown_letter);
}

TEST_CASE("Order, sigma and class maxima", "[expansion]") {
  auto const      z2 = fixtures::z2_x();
  Expansion const m = Expansion::margolis_meakin(z2);
  Expansion const f = Expansion::f_expansion(z2);
  Element const   full0 = m.mul(gx(m), gx(m));
  CHECK(m.leq(gx(m), gx(m)));
  CHECK(m.leq(full0, m.identity()));
  CHECK_FALSE(m.leq(gx(m), m.identity()));
  CHECK(m.sigma_related(m.identity(), full0));
  CHECK_FALSE(m.sigma_related(gx(m), m.identity()));

  CHECK(f.f_max_of_class(0) == f.identity());
  CHECK(f.format(f.f_max_of_class(1)) == "(V={e0,e1}; E={}; g=e1)");
  CHECK(error_kind([&] { m.f_max_of_class(1); }) == ErrorKind::wrong_flavor);
  for (auto const& a : f.enumerate_elements()) {
    CHECK(f.leq(a, f.f_max_of_class(a.point)));
  }
}

TEST_CASE("Counts agree between graph enumeration and word closure",
          "[expansion][oracle]") {
  auto const z2 = fixtures::z2_x();
  CHECK(Expansion::margolis_meakin(z2).enumerate_elements().size() == 7);
  CHECK(Expansion::f_expansion(z2).enumerate_elements().size() == 9);
  CHECK(Expansion::wedge(z2).enumerate_elements().size() == 9);
  CHECK(Expansion::margolis_meakin(fixtures::trivial()).enumerate_elements().size()
        == 1);
  CHECK(Expansion::f_expansion(fixtures::trivial()).enumerate_elements().size()
        == 1);

  for (auto const& ng : fixtures::small_groups()) {
    for (auto const& fam : {Expansion::margolis_meakin(ng.group),
                            Expansion::f_expansion(ng.group),
                            Expansion::wedge(ng.group)}) {
      INFO(ng.name << " " << to_string(fam.flavor()));
      auto const   lib = fam.enumerate_elements();
      auto const   words = fam.enumerate_by_words(64);
      auto const   om = oracle::model_of(fam);
      auto const   naive = om.elements();
      CHECK(lib.size() == words.size());
      CHECK(oracle::from_library(fam, om, lib) == naive);
      CHECK(oracle::from_library(fam, om, words) == naive);
      CHECK(om.by_words() == naive);
      CHECK(fam.predicted_count() >= fam.enumerate_graphs().size());
    }
  }
}

TEST_CASE("Word closure by length", "[expansion]") {
  auto const      z2 = fixtures::z2_x();
  Expansion const m = Expansion::margolis_meakin(z2);
  CHECK(m.enumerate_by_words(0) == std::vector<Element>{m.identity()});
  CHECK(m.enumerate_by_words(4).size() == 7);
}

TEST_CASE("Closed graphs agree with brute force over all Y-edge subsets",
          "[expansion][oracle]") {
  for (auto const& g : {fixtures::z2_x(), fixtures::z2_xy(), fixtures::z3_x()}) {
    Expansion const w = Expansion::wedge(g);
    auto const      om = oracle::model_of(w);
    CHECK(oracle::from_library(w, om, w.enumerate_elements())
          == om.elements(false));
  }
}

TEST_CASE("Extended connected family agrees with the oracle",
          "[expansion][oracle]") {
  for (auto const& g : {fixtures::z2_x(), fixtures::z2_xy(), fixtures::z3_x()}) {
    Expansion const y = Expansion::margolis_meakin_extended(g);
    auto const      om = oracle::model_of(y);
    CHECK(oracle::from_library(y, om, y.enumerate_elements()) == om.elements());
  }
}

TEST_CASE("Products agree with the oracle on all pairs",
          "[expansion][oracle][property]") {
  for (auto const& ng : fixtures::small_groups()) {
    for (auto const& fam : {Expansion::margolis_meakin(ng.group),
                            Expansion::f_expansion(ng.group),
                            Expansion::wedge(ng.group)}) {
      auto const elems = fam.enumerate_elements();
      if (elems.size() > 400) {
        continue;
      }
      INFO(ng.name << " " << to_string(fam.flavor()));
      auto const om = oracle::model_of(fam);
      std::vector<oracle::Elem> conv;
      for (auto const& a : elems) {
        conv.push_back(oracle::from_library(fam, om, a));
      }
      bool ok = true;
      for (std::size_t i = 0; i < elems.size(); ++i) {
        ok = ok
             && oracle::from_library(fam, om, fam.inv(elems[i]))
                    == om.inv(conv[i]);
        for (std::size_t k = 0; k < elems.size(); ++k) {
          ok = ok
               && oracle::from_library(fam, om, fam.mul(elems[i], elems[k]))
                      == om.mul(conv[i], conv[k]);
        }
      }
      CHECK(ok);
    }
  }
}

TEST_CASE("Expansions are E-unitary inverse monoids; F is F-inverse",
          "[expansion][oracle][property]") {
  for (auto const& ng : fixtures::small_groups()) {
    for (auto const& fam : {Expansion::margolis_meakin(ng.group),
                            Expansion::f_expansion(ng.group)}) {
      auto const tab = to_table(fam);
      if (tab.elements.size() > 200) {
        continue;
      }
      INFO(ng.name << " " << to_string(fam.flavor()));
      auto const& s = tab.monoid;
      auto const  o = oracle::monoid_of(s);
      bool        axioms = true;
      for (std::size_t a = 0; a < o.size(); ++a) {
        axioms = axioms && s.mul(s.mul(a, s.inv(a)), a) == a
                 && s.inv(s.inv(a)) == a;
        for (std::size_t b = 0; b < o.size(); ++b) {
          if (o.idem(a) && o.idem(b)) {
            axioms = axioms && s.mul(a, b) == s.mul(b, a);
          }
        }
      }
      CHECK(axioms);
      CHECK(o.e_unitary());
      bool sigma_is_point = true;
      bool leq_agrees = true;
      for (std::size_t a = 0; a < o.size(); ++a) {
        for (std::size_t b = 0; b < o.size(); ++b) {
          sigma_is_point = sigma_is_point
                           && o.sigma(a, b)
                                  == fam.sigma_related(tab.elements[a],
                                                       tab.elements[b]);
          leq_agrees = leq_agrees
                       && o.leq(a, b)
                              == fam.leq(tab.elements[a], tab.elements[b]);
        }
      }
      CHECK(sigma_is_point);
      CHECK(leq_agrees);
      if (fam.flavor() == Flavor::all) {
        CHECK(o.f_inverse());
        for (elem_t g = 0; g < fam.group().order(); ++g) {
          std::size_t const top = tab.index_of(fam.f_max_of_class(g));
          CHECK(o.class_max(top) == top);
        }
      }
    }
  }
  auto const m = to_table(Expansion::margolis_meakin(fixtures::z2_x()));
  CHECK_FALSE(oracle::monoid_of(m.monoid).f_inverse());
}

TEST_CASE("Path elements equal word values", "[expansion][property]") {
  std::mt19937_64 rng(0);
  for (auto const& ng : fixtures::small_groups()) {
    Expansion const m = Expansion::margolis_meakin(ng.group);
    auto const&     cay = m.cayley();
    CHECK(m.eval_path_element(Path{0, {}}) == m.identity());
    if (cay.letter_count() == 0) {
      continue;
    }
    std::uniform_int_distribution<std::size_t> letter(0, cay.letter_count() - 1);
    std::uniform_int_distribution<int>         len(0, 6);
    for (int i = 0; i < 300; ++i) {
      Word w;
      for (int k = len(rng); k > 0; --k) {
        w.push_back({letter(rng), (rng() & 1U) ? 1 : -1});
      }
      Path const p = cay.path_from_word(0, w);
      Element const e = m.eval_path_element(p);
      CHECK(e == m.eval_word(w));
      CHECK(e.graph == cay.spanned(p));
      CHECK(e.point == p.end());
    }
  }
  auto const      z2 = fixtures::z2_x();
  Expansion const m = Expansion::margolis_meakin(z2);
  CHECK(m.eval_path_element(m.cayley().path_from_word(0, parse_word(m.gens(), "x")))
        == gx(m));
}

TEST_CASE("Semilattice of graphs", "[expansion][property]") {
  for (auto const& ng : fixtures::small_groups()) {
    for (auto const& fam : {Expansion::margolis_meakin(ng.group),
                            Expansion::f_expansion(ng.group)}) {
      auto const graphs = fam.enumerate_graphs();
      if (graphs.size() > 60) {
        continue;
      }
      for (auto const& a : graphs) {
        CHECK(fam.meet(a, fam.top()) == a);
        CHECK(a.has_vertex(0));
        for (auto const& b : graphs) {
          CHECK(fam.meet(a, b) == fam.meet(b, a));
          CHECK(fam.is_member(fam.meet(a, b)));
          for (auto const& c : graphs) {
            CHECK(fam.meet(fam.meet(a, b), c) == fam.meet(a, fam.meet(b, c)));
          }
        }
      }
    }
  }
}

TEST_CASE("Text form round trips and rejects non-members", "[expansion]") {
  for (auto const& ng : fixtures::small_groups()) {
    for (auto const& fam : {Expansion::margolis_meakin(ng.group),
                            Expansion::f_expansion(ng.group),
                            Expansion::wedge(ng.group)}) {
      auto const elems = fam.enumerate_elements();
      for (std::size_t i = 0; i < elems.size(); i += 1 + elems.size() / 50) {
        CHECK(fam.parse(fam.format(elems[i])) == elems[i]);
      }
    }
  }
  auto const      z2 = fixtures::z2_x();
  Expansion const m = Expansion::margolis_meakin(z2);
  CHECK(error_kind([&] { m.parse("(V={e0,e1}; E={}; g=e1)"); })
        == ErrorKind::invalid_input);
  CHECK(error_kind([&] { m.parse("(V={e0}; E={}; g=e1)"); })
        == ErrorKind::invalid_input);
  CHECK(error_kind([&] { m.parse("(V={e0}; E={; g=e0)"); })
        == ErrorKind::syntax_error);
  CHECK(error_kind([&] { m.parse("(V={e0}; E={(e0,z)}; g=e0)"); })
        == ErrorKind::unknown_letter);
}

TEST_CASE("Enumeration refuses oversized families", "[expansion]") {
  Expansion const y = Expansion::margolis_meakin_extended(fixtures::s3_st());
  CHECK(error_kind([&] { y.enumerate_elements(1000); }) == ErrorKind::too_large);
}
