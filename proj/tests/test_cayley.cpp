#include <random>

#include <catch2/catch_amalgamated.hpp>

#include <fexp/cayley.hpp>
#include <fexp/expansion.hpp>
#include <fexp/fixtures.hpp>

#include "support.hpp"

using namespace fexp;
using test_support::error_kind;

namespace {

  CayleyGraph z2_cay() {
    auto g = fixtures::z2_x();
    return CayleyGraph(g.group, g.gens);
  }

  // The subgraph spanned by a path, recomputed edge by edge.
  bool covers(CayleyGraph const& cay, Path const& p, Subgraph const& g) {
    return cay.spanned(p) == g;
  }

  bool well_formed(Path const& p) {
    for (std::size_t i = 1; i < p.edges.size(); ++i) {
      if (p.edges[i - 1].dst != p.edges[i].src) {
        return false;
      }
    }
    return p.edges.empty() || p.edges.front().src == p.base;
  }

}  // namespace

TEST_CASE("Spanned subgraphs", "[cayley]") {
  auto cay = z2_cay();
  elem_t const zero = 0;
  CHECK(cay.spanned({}, std::span<elem_t const>(&zero, 1))
        == Subgraph{1, {}});

  Edge const back{1, 0, -1, 0};
  auto const one = cay.spanned(std::span<Edge const>(&back, 1));
  CHECK(cay.describe(one) == "V={e0,e1}; E={(e0,x)}");

  Path const loop = cay.path_from_word(0, parse_word(cay.gens(), "x x"));
  CHECK(cay.describe(cay.spanned(loop)) == "V={e0,e1}; E={(e0,x),(e1,x)}");
}

TEST_CASE("Connectivity", "[cayley]") {
  auto cay = z2_cay();
  CHECK(cay.is_connected(Subgraph{1, {}}));
  CHECK_FALSE(cay.is_connected(Subgraph{3, {}}));
  Subgraph g{3, {}};
  g.edges.set(cay.edge_id(0, 0));
  CHECK(cay.is_connected(g));
}

TEST_CASE("Translation", "[cayley]") {
  auto     cay = z2_cay();
  Subgraph g{3, {}};
  g.edges.set(cay.edge_id(0, 0));
  CHECK(cay.translate(0, g) == g);
  CHECK(cay.describe(cay.translate(1, g)) == "V={e0,e1}; E={(e1,x)}");

  auto v4 = fixtures::v4_ab();
  Expansion const f = Expansion::f_expansion(v4);
  for (auto const& a : f.enumerate_graphs()) {
    for (elem_t h = 0; h < 4; ++h) {
      CHECK(f.cayley().translate(h, f.cayley().translate(v4.group.inv(h), a))
            == a);
    }
  }
}

TEST_CASE("Labels and inverse paths", "[cayley]") {
  auto cay = z2_cay();
  CHECK(cay.path_label(Path{0, {}}).empty());
  Path const one = cay.path_from_word(0, parse_word(cay.gens(), "x"));
  CHECK(format_word(cay.gens(), cay.path_label(one)) == "x");
  Path const two = cay.path_from_word(0, parse_word(cay.gens(), "x x"));
  CHECK(format_word(cay.gens(), cay.path_label(two)) == "x x");
  Path const inv = cay.path_inverse(two);
  CHECK(format_word(cay.gens(), cay.path_label(inv)) == "x^-1 x^-1");
  CHECK(well_formed(inv));
  CHECK(cay.path_inverse(inv).edges == two.edges);
  Edge const e{0, 0, 1, 1};
  CHECK(e.inverse().inverse() == e);
}

TEST_CASE("Spanning paths", "[cayley]") {
  auto cay = z2_cay();
  CHECK(cay.spanning_path(Subgraph{1, {}}, 0).empty());

  Subgraph gx{3, {}};
  gx.edges.set(cay.edge_id(0, 0));
  Path const p = cay.spanning_path(gx, 1);
  REQUIRE(p.edges.size() == 1);
  CHECK(p.edges[0] == Edge{0, 0, 1, 1});

  Subgraph full = cay.full();
  Path const q = cay.spanning_path(full, 0);
  CHECK(q.end() == 0);
  CHECK(covers(cay, q, full));

  CHECK(error_kind([&] { cay.spanning_path(Subgraph{3, {}}, 1); })
        == ErrorKind::not_connected);
  CHECK(error_kind([&] { cay.spanning_path(Subgraph{1, {}}, 1); })
        == ErrorKind::vertex_absent);
}

TEST_CASE("Spanning paths cover every connected graph",
          "[cayley][property]") {
  std::mt19937_64 rng(0);
  for (auto const& ng : fixtures::small_groups()) {
    for (auto fam : {Expansion::margolis_meakin(ng.group),
                     Expansion::margolis_meakin_extended(ng.group)}) {
      if (fam.predicted_count() > 5000) {
        continue;
      }
      auto const& cay = fam.cayley();
      for (auto const& g : fam.enumerate_graphs()) {
        for (elem_t v = 0; v < fam.group().order(); ++v) {
          if (!g.has_vertex(v)) {
            continue;
          }
          Path const p = cay.spanning_path(g, v);
          CHECK(p.start() == 0);
          CHECK(p.end() == v);
          CHECK(well_formed(p));
          CHECK(covers(cay, p, g));
          CHECK(cay.spanning_path(g, v).edges == p.edges);
          Path const r = cay.random_spanning_path(g, v, rng);
          CHECK(r.end() == v);
          CHECK(covers(cay, r, g));
        }
      }
    }
  }
}

TEST_CASE("Labels of paths from the origin evaluate to the endpoint",
          "[cayley][property]") {
  std::mt19937_64 rng(1);
  for (auto const& ng : fixtures::small_groups()) {
    CayleyGraph const cay(ng.group.group, ng.group.gens);
    if (cay.letter_count() == 0) {
      continue;
    }
    std::uniform_int_distribution<std::size_t> letter(0, cay.letter_count() - 1);
    for (int i = 0; i < 100; ++i) {
      Word w;
      for (int k = 0; k < 7; ++k) {
        w.push_back({letter(rng), (rng() & 1U) ? 1 : -1});
      }
      Path const p = cay.path_from_word(0, w);
      CHECK(eval_word(ng.group.group, ng.group.gens, cay.path_label(p))
            == p.end());
      Subgraph const s = cay.spanned(p);
      CHECK(s.has_vertex(0));
      CHECK(cay.is_connected(s));
    }
  }
}

TEST_CASE("DOT output", "[cayley]") {
  auto cay = z2_cay();
  CHECK(cay.to_dot(Subgraph{1, {}}) == "digraph \"G\" {\n  \"e0\";\n}\n");
  CHECK(cay.to_dot(cay.full(), "Cay")
        == "digraph \"Cay\" {\n"
           "  \"e0\";\n"
           "  \"e1\";\n"
           "  \"e0\" -> \"e1\" [label=\"x\"];\n"
           "  \"e1\" -> \"e0\" [label=\"x\"];\n"
           "}\n");

  auto            z2 = fixtures::z2_x();
  Expansion const w = Expansion::wedge(z2);
  std::string const dot = w.cayley().to_dot(w.identity().graph);
  CHECK(dot == "digraph \"G\" {\n  \"e0\";\n"
               "  \"e0\" -> \"e0\" [label=\"@e0\", style=dashed];\n}\n");
}
