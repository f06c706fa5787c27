#ifndef FEXP_SUITES_HPP_
#define FEXP_SUITES_HPP_

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <utility>
#include <vector>

#include "cayley.hpp"
#include "closure.hpp"
#include "error.hpp"
#include "expansion.hpp"
#include "fixtures.hpp"
#include "fwedge.hpp"
#include "group.hpp"
#include "monoid.hpp"
#include "partial_action.hpp"
#include "report.hpp"
#include "semilattice.hpp"
#include "verify.hpp"
#include "wedge.hpp"

namespace fexp {

  struct SuiteOptions {
    std::size_t   samples = 10'000;
    std::uint64_t seed = 0;
    std::uint64_t cap = default_enumeration_cap;
    std::size_t   triple_limit = 256;   // exhaustive triples up to this size
    std::size_t   pair_limit = 4096;    // exhaustive pairs up to this size
    std::size_t   reify_limit = 2000;   // largest monoid reified as a table
    std::size_t   path_len = 6;
    std::size_t   word_len = 6;
    std::size_t   edge_step_order = 3;  // single-edge steps for |G| <= this
  };

  inline std::vector<std::string> const& suite_names() {
    static std::vector<std::string> const names{
        "semilattice", "premorphism", "closure", "meet-bar", "quotient",
        "expansion",      "fwedge",      "universal",   "all"};
    return names;
  }

  namespace detail {

    inline std::optional<std::vector<Subgraph>>
    try_graphs(Expansion const& fam, std::uint64_t cap) {
      if (fam.predicted_count() > cap) {
        return std::nullopt;
      }
      return fam.enumerate_graphs(cap);
    }

    inline std::optional<std::vector<Element>>
    try_elements(Expansion const& fam, SuiteOptions const& opt) {
      auto graphs = try_graphs(fam, opt.cap);
      if (!graphs) {
        return std::nullopt;
      }
      std::vector<Element> out;
      for (auto const& g : *graphs) {
        for (elem_t v = 0; v < fam.group().order(); ++v) {
          if (g.has_vertex(v)) {
            out.push_back({g, v});
            if (out.size() > opt.reify_limit) {
              return std::nullopt;
            }
          }
        }
      }
      return out;
    }

    // Every graph when there are at most `limit`, otherwise seeded draws
    // (uniform over the list when enumerable, random walks otherwise).
    inline Domain<Subgraph>
    graph_domain(Expansion const& fam,
                 std::optional<std::vector<Subgraph>> const& graphs,
                 std::size_t limit, SuiteOptions const& opt) {
      if (graphs && graphs->size() <= limit) {
        return Domain<Subgraph>::exhaustive(*graphs);
      }
      if (graphs) {
        auto list = std::make_shared<std::vector<Subgraph> const>(*graphs);
        return Domain<Subgraph>::sampled(
            [list](std::mt19937_64& rng) {
              std::uniform_int_distribution<std::size_t> pick(0,
                                                              list->size() - 1);
              return (*list)[pick(rng)];
            },
            opt.samples, opt.seed);
      }
      auto copy = std::make_shared<Expansion const>(fam);
      return Domain<Subgraph>::sampled(
          [copy](std::mt19937_64& rng) {
            return random_element(*copy, rng).graph;
          },
          opt.samples, opt.seed);
    }

    inline std::string label(std::string const& group,
                             std::string const& what, std::string const& mode) {
      return group + " " + what + " (" + mode + ")";
    }

    // All paths from the origin of length <= max_len, shortest first.
    inline std::vector<Path> paths_from_origin(CayleyGraph const& cay,
                                               std::size_t        max_len) {
      std::vector<Path> out{Path{0, {}}};
      std::size_t       begin = 0;
      for (std::size_t len = 0; len < max_len; ++len) {
        std::size_t const end = out.size();
        for (std::size_t i = begin; i < end; ++i) {
          for (std::size_t l = 0; l < cay.letter_count(); ++l) {
            if (cay.gens().is_barred(l)) {
              continue;
            }
            for (int exp : {1, -1}) {
              Path p = out[i];
              p.edges.push_back(cay.traverse(p.end(), {l, exp}));
              out.push_back(std::move(p));
            }
          }
        }
        begin = end;
      }
      return out;
    }

    inline Path random_path(CayleyGraph const& cay, std::size_t max_len,
                            std::mt19937_64& rng) {
      std::uniform_int_distribution<std::size_t> len(0, max_len);
      std::uniform_int_distribution<std::size_t> letter(0, cay.gens().x_size()
                                                               - 1);
      std::bernoulli_distribution                coin(0.5);
      Path                                       p{0, {}};
      std::size_t const                          n = len(rng);
      for (std::size_t i = 0; i < n && cay.gens().x_size() > 0; ++i) {
        p.edges.push_back(cay.traverse(p.end(), {letter(rng), coin(rng) ? 1 : -1}));
      }
      return p;
    }

    template <typename F>
    void guarded(Report& report, std::string const& prop,
                 std::string const& check, std::string const& instance,
                 F&& f) {
      try {
        f();
      } catch (Error const& e) {
        auto t = report.tally(prop, check, instance);
        t.fail(e.what());
      }
    }

  }  // namespace detail

  ////////////////////////////////////////////////////////////////////////
  // semilattice
  ////////////////////////////////////////////////////////////////////////

  inline void suite_semilattice(fixtures::NamedGroup const& ng,
                                SuiteOptions const& opt, Report& report) {
    auto const& gg = ng.group;
    std::vector<std::pair<std::string, Expansion>> fams;
    fams.emplace_back("X_X", Expansion::margolis_meakin(gg));
    fams.emplace_back("Xt_X", Expansion::f_expansion(gg));
    fams.emplace_back("X_Y", Expansion::margolis_meakin_extended(gg));
    fams.emplace_back("X^_Y", Expansion::wedge(gg));
    for (auto const& [what, fam] : fams) {
      auto graphs = detail::try_graphs(fam, opt.cap);
      auto dom = detail::graph_domain(fam, graphs, opt.triple_limit, opt);
      check_semilattice_laws(SubgraphSemilattice(fam), dom,
                             std::optional<Subgraph>(fam.top()), report,
                             detail::label(ng.name, what, dom.mode()));
    }
  }

  ////////////////////////////////////////////////////////////////////////
  // premorphism
  ////////////////////////////////////////////////////////////////////////

  namespace detail {

    // Y ⋊ G is E-unitary with σ = fibers of the second coordinate and
    // (e,g) <= (f,h) iff g = h and e <= f.
    inline void check_product_structure(PartialActionProduct const& prod,
                                        Report&                     report,
                                        std::string const&          instance) {
      auto const s = prod.to_table();
      auto const an = analyze(s);
      auto const& lat = prod.premorphism().carrier();
      {
        auto t = report.tally("premorphism", "product-e-unitary", instance);
        t.expect(an.is_e_unitary,
                 [&] { return an.e_unitary_witness.value_or(""); });
      }
      auto t1 = report.tally("premorphism", "product-sigma", instance);
      auto t2 = report.tally("premorphism", "product-order", instance);
      for (std::size_t a = 0; a < prod.size(); ++a) {
        for (std::size_t b = 0; b < prod.size(); ++b) {
          bool const same = prod[a].g == prod[b].g;
          t1.expect((an.sigma_class[a] == an.sigma_class[b]) == same, [&] {
            return prod.describe(a) + " , " + prod.describe(b);
          });
          t2.expect(s.leq(a, b) == (same && lat.leq(prod[a].e, prod[b].e)),
                    [&] { return prod.describe(a) + " , " + prod.describe(b); });
        }
      }
    }

  }  // namespace detail

  inline void suite_premorphism(fixtures::NamedGroup const& ng,
                                SuiteOptions const& opt, Report& report) {
    auto const& gg = ng.group;
    std::vector<std::pair<std::string, Expansion>> fams;
    fams.emplace_back("M", Expansion::margolis_meakin(gg));
    fams.emplace_back("F", Expansion::f_expansion(gg));
    for (auto const& [what, fam] : fams) {
      auto const elems = detail::try_elements(fam, opt);
      if (elems) {
        std::string const inst = detail::label(ng.name, what, "exhaustive");
        auto const        ep = mm_premorphism(fam, opt.cap);
        report.merge(check_premorphism(*ep.phi, inst));
        PartialActionProduct const prod(ep.phi);
        detail::check_product_structure(prod, report, inst);
        detail::guarded(report, "structure", "iso", inst, [&] {
          report.merge(structure_iso(to_table(fam, false, opt.cap).monoid, inst)
                           .report);
        });
        continue;
      }
      // Sampled: PM2 and PM3 on random graphs and group elements.
      std::string const inst = detail::label(
          ng.name, what,
          "sampled n=" + std::to_string(opt.samples)
              + " seed=" + std::to_string(opt.seed));
      SubgraphAction const act(fam);
      auto const&          grp = fam.group();
      std::mt19937_64      rng(opt.seed);
      std::uniform_int_distribution<elem_t> pick(0, grp.order() - 1);
      auto t2 = report.tally("premorphism", "PM2", inst);
      auto t3 = report.tally("premorphism", "PM3", inst);
      for (std::size_t i = 0; i < opt.samples; ++i) {
        Subgraph const x = random_element(fam, rng).graph;
        elem_t const   g = pick(rng);
        elem_t const   h = pick(rng);
        if (auto hx = act.act(h, x)) {
          if (auto ghx = act.act(g, *hx)) {
            t2.expect(act.act(grp.mul(g, h), x) == ghx,
                      [&] { return fam.format(x); });
          }
        }
        if (auto gx = act.act(g, x)) {
          t3.expect(act.act(grp.inv(g), *gx) == x,
                    [&] { return fam.format(x); });
        }
      }
    }
    std::string const hb = ng.name + " hand-built";
    detail::guarded(report, "structure", "iso", hb, [&] {
      std::vector<std::pair<std::string, elem_t>> letters;
      for (auto const& l : gg.gens.letters()) {
        letters.emplace_back(l.name, l.image);
      }
      report.merge(
          structure_iso(fixtures::chain_product(gg.group, letters),
                        ng.name + " G x chain2")
              .report);
    });
    report.merge(check_premorphism(*fixtures::diamond_swap_premorphism(),
                                   "Z2 on diamond"));
    report.merge(structure_iso(fixtures::diamond_swap_monoid(), "Z2 on diamond")
                     .report);
  }

  ////////////////////////////////////////////////////////////////////////
  // closure, meet-bar
  ////////////////////////////////////////////////////////////////////////

  inline void suite_closure(fixtures::NamedGroup const& ng,
                            SuiteOptions const& opt, Report& report) {
    Expansion const     my = Expansion::margolis_meakin_extended(ng.group);
    Expansion const     wedge = Expansion::wedge(ng.group);
    WedgeClosure const& wc = wedge.closure();
    auto const          j = [&](Subgraph const& g) { return wc(g); };
    auto const          graphs = detail::try_graphs(my, opt.cap);
    auto const dom = detail::graph_domain(my, graphs, opt.pair_limit, opt);
    std::string const inst = detail::label(ng.name, "X_Y", dom.mode());
    SubgraphSemilattice const lat(my);
    verify_dual_closure(lat, j, dom, report, inst);
    is_G_invariant(SubgraphAction(my), j, dom, report, inst);
    {
      auto t = report.tally("closure", "closed-iff-fixed", inst);
      dom.each([&](Subgraph const& g) {
        t.expect(wc.is_closed(g) == (wc(g) == g),
                 [&] { return my.format(g); });
      });
    }
    if (dom.is_exhaustive()) {
      // ρ_j-classes are exactly the graphs sharing vertices and X-edges.
      auto const& cay = my.cayley();
      EdgeBits    x_edges;
      for (std::size_t id = 0; id < cay.edge_count(); ++id) {
        if (!my.gens().is_barred(cay.edge_letter(id))) {
          x_edges.set(id);
        }
      }
      std::unordered_map<Subgraph, std::size_t, SubgraphHash> jindex;
      std::vector<std::size_t>                               jt;
      std::unordered_map<Subgraph, std::size_t, SubgraphHash> key_class;
      auto t = report.tally("closure", "rho-classes", inst);
      for (auto const& g : dom.elements) {
        auto [it, fresh] = jindex.emplace(wc(g), jindex.size());
        jt.push_back(it->second);
        Subgraph key{g.vertices, g.edges & x_edges};
        auto [kt, kfresh] = key_class.emplace(key, it->second);
        t.expect(kt->second == it->second, [&] { return my.format(g); });
      }
      t.expect(rho_j_classes(jt).size() == key_class.size(), [&] {
        return std::to_string(rho_j_classes(jt).size()) + " classes vs "
               + std::to_string(key_class.size()) + " keys";
      });
    }
  }

  inline void suite_meet_bar(fixtures::NamedGroup const& ng,
                            SuiteOptions const& opt, Report& report) {
    Expansion const     my = Expansion::margolis_meakin_extended(ng.group);
    Expansion const     wedge = Expansion::wedge(ng.group);
    WedgeClosure const& wc = wedge.closure();
    auto const          j = [&](Subgraph const& g) { return wc(g); };
    auto const          graphs = detail::try_graphs(my, opt.cap);
    auto const dom = detail::graph_domain(my, graphs, opt.pair_limit, opt);
    std::string const inst = detail::label(ng.name, "X_Y", dom.mode());
    SubgraphSemilattice const lat(my);
    meet_bar_check(lat, j, dom, report, inst);
    rho_j_congruence_check(lat, j, dom, report, inst);
  }

  ////////////////////////////////////////////////////////////////////////
  // quotient: the congruence ρ̃_j and the quotient product
  ////////////////////////////////////////////////////////////////////////

  inline void suite_quotient(fixtures::NamedGroup const& ng,
                           SuiteOptions const& opt, Report& report) {
    Expansion const my = Expansion::margolis_meakin_extended(ng.group);
    Expansion const wedge = Expansion::wedge(ng.group);
    auto const      graphs = detail::try_graphs(my, opt.cap);
    if (graphs && graphs->size() <= opt.pair_limit) {
      auto const        ep = mm_premorphism(my, opt.cap);
      auto const        jt = closure_table(*ep.carrier, wedge.closure());
      std::size_t const src = PartialActionProduct(ep.phi).size();
      bool const        all_pairs = src * src <= 4'000'000;
      std::string const inst = detail::label(
          ng.name, "X_Y",
          all_pairs ? std::string("exhaustive")
                    : "pairs sampled n=" + std::to_string(opt.samples)
                          + " seed=" + std::to_string(opt.seed));
      detail::guarded(report, "congruence", "quotient", inst, [&] {
        auto qp = quotient_product(ep.phi, jt, inst,
                                   all_pairs ? 0 : opt.samples, opt.seed);
        report.merge(qp.report);
        auto t = report.tally("congruence", "quotient-size", inst);
        std::size_t const expect = wedge.enumerate_elements(opt.cap).size();
        t.expect(qp.target->size() == expect, [&] {
          return std::to_string(qp.target->size()) + " vs "
                 + std::to_string(expect);
        });
      });
      return;
    }
    std::string const inst = detail::label(
        ng.name, "X_Y",
        "sampled n=" + std::to_string(opt.samples)
            + " seed=" + std::to_string(opt.seed));
    sampled_congruence_check(my, wedge, opt.samples, opt.seed, report, inst);
  }

  ////////////////////////////////////////////////////////////////////////
  // expansion: the expansions M(G,X) and F(G,X)
  ////////////////////////////////////////////////////////////////////////

  namespace detail {

    inline void check_generator_images(Expansion const& fam, Report& report,
                                       std::string const& inst) {
      auto        t = report.tally("universal", "generators", inst);
      auto const& cay = fam.cayley();
      for (std::size_t l = 0; l < fam.gens().size(); ++l) {
        elem_t const im = fam.gens()[l].image;
        Subgraph     g{(std::uint64_t{1} << im) | 1U, {}};
        g.edges.set(cay.edge_id(0, l));
        t.expect(fam.generator_image(l) == Element{g, im},
                 [&] { return fam.gens()[l].name; });
      }
    }

    inline void expansion_exhaustive(Expansion const& fam, std::string const& inst,
                                  SuiteOptions const& opt, Report& report) {
      auto const  tab = to_table(fam, false, opt.cap);
      auto const& s = tab.monoid;
      auto const  an = analyze(s);
      std::size_t const n = s.order();
      auto const& grp = fam.group();
      {
        auto t = report.tally("universal", "identity", inst);
        std::size_t const id = tab.index_of(fam.identity());
        t.expect(id == s.identity(), [&] { return s.name(id); });
        for (std::size_t a = 0; a < n; ++a) {
          t.expect(s.mul(id, a) == a && s.mul(a, id) == a,
                   [&] { return s.name(a); });
        }
      }
      check_generator_images(fam, report, inst);
      {
        auto t = report.tally("universal", "natural-order", inst);
        for (std::size_t a = 0; a < n; ++a) {
          for (std::size_t b = 0; b < n; ++b) {
            t.expect(fam.leq(tab.elements[a], tab.elements[b]) == s.leq(a, b),
                     [&] { return s.name(a) + " , " + s.name(b); });
          }
        }
      }
      {
        auto t = report.tally("universal", "sigma-point-fiber", inst);
        for (std::size_t a = 0; a < n; ++a) {
          for (std::size_t b = 0; b < n; ++b) {
            bool const same = tab.elements[a].point == tab.elements[b].point;
            t.expect((an.sigma_class[a] == an.sigma_class[b]) == same, [&] {
              return s.name(a) + " , " + s.name(b);
            });
          }
        }
        t.expect(an.class_count() == grp.order(), [&] {
          return std::to_string(an.class_count()) + " classes";
        });
      }
      {
        auto t = report.tally("universal", "e-unitary", inst);
        t.expect(an.is_e_unitary,
                 [&] { return an.e_unitary_witness.value_or(""); });
      }
      if (fam.flavor() == Flavor::all) {
        auto t = report.tally("universal", "f-max", inst);
        t.expect(an.is_f_inverse,
                 [&] { return an.f_inverse_witness.value_or(""); });
        for (elem_t g = 0; g < grp.order() && an.is_f_inverse; ++g) {
          std::size_t const top = tab.index_of(fam.f_max_of_class(g));
          t.expect(an.m(top) == top, [&] { return s.name(top); });
        }
      }
      {
        // 𝒳 ⋊ G against the expansion product.
        auto const                 ep = mm_premorphism(fam, opt.cap);
        PartialActionProduct const prod(ep.phi);
        auto to_elem = [&](std::size_t i) {
          return Element{(*ep.carrier)[prod[i].e], prod[i].g};
        };
        auto t = report.tally("universal", "product-reconstruction", inst);
        t.expect(prod.size() == n, [&] {
          return std::to_string(prod.size()) + " vs " + std::to_string(n);
        });
        for (std::size_t a = 0; a < prod.size(); ++a) {
          for (std::size_t b = 0; b < prod.size(); ++b) {
            t.expect(to_elem(prod.mul(a, b))
                         == fam.mul(to_elem(a), to_elem(b)),
                     [&] { return prod.describe(a) + " * " + prod.describe(b); });
          }
        }
      }
      auto const& cay = fam.cayley();
      auto const  paths = paths_from_origin(cay, opt.path_len);
      std::vector<std::size_t> value;
      std::vector<elem_t>      end;
      {
        auto t = report.tally("universal", "path-evaluation", inst);
        for (auto const& p : paths) {
          Element const v = fam.eval_word(cay.path_label(p));
          t.expect(v == fam.eval_path_element(p),
                   [&] { return cay.describe(p); });
          value.push_back(tab.index_of(v));
          end.push_back(p.end());
        }
      }
      {
        auto t = report.tally("universal", "coterminal-sigma", inst);
        for (std::size_t p = 0; p < paths.size(); ++p) {
          for (std::size_t q = p; q < paths.size(); ++q) {
            bool const rel
                = an.sigma_class[value[p]] == an.sigma_class[value[q]];
            t.expect(rel == (end[p] == end[q]), [&] {
              return cay.describe(paths[p]) + " , " + cay.describe(paths[q]);
            });
          }
        }
      }
    }

    inline void expansion_sampled(Expansion const& fam, std::string const& inst,
                               SuiteOptions const& opt, Report& report) {
      std::mt19937_64 rng(opt.seed);
      auto const&     cay = fam.cayley();
      {
        auto t = report.tally("universal", "identity", inst);
        for (std::size_t i = 0; i < opt.samples; ++i) {
          Element const a = random_element(fam, rng);
          t.expect(fam.mul(fam.identity(), a) == a
                       && fam.mul(a, fam.identity()) == a,
                   [&] { return fam.format(a); });
        }
      }
      check_generator_images(fam, report, inst);
      {
        // a <= b iff a = a a^-1 b, on random pairs and on pairs (e b, b).
        auto t = report.tally("universal", "natural-order", inst);
        auto generic = [&](Element const& a, Element const& b) {
          return a == fam.mul(fam.mul(a, fam.inv(a)), b);
        };
        for (std::size_t i = 0; i < opt.samples; ++i) {
          Element const a = random_element(fam, rng);
          Element const b = random_element(fam, rng);
          Element const e = fam.mul(a, fam.inv(a));
          Element const eb = fam.mul(e, b);
          t.expect(fam.leq(a, b) == generic(a, b)
                       && fam.leq(eb, b) == generic(eb, b),
                   [&] { return fam.format(a) + " , " + fam.format(b); });
        }
      }
      {
        // Same point: e = (A ∪ B, 1) gives e a = e b.
        auto t = report.tally("universal", "sigma-point-fiber", inst);
        for (std::size_t i = 0; i < opt.samples; ++i) {
          Element const a = random_element(fam, rng);
          Element       b = random_element(fam, rng);
          b = fam.mul(b, fam.eval_word(cay.path_label(
                             cay.shortest_path(cay.full(), b.point, a.point)
                                 .value())));
          Element const e{fam.meet(a.graph, b.graph), 0};
          t.expect(fam.mul(e, a) == fam.mul(e, b),
                   [&] { return fam.format(a) + " , " + fam.format(b); });
        }
      }
      if (fam.flavor() == Flavor::all) {
        auto t = report.tally("universal", "f-max", inst);
        for (std::size_t i = 0; i < opt.samples; ++i) {
          Element const a = random_element(fam, rng);
          t.expect(fam.leq(a, fam.f_max_of_class(a.point)),
                   [&] { return fam.format(a); });
        }
      }
      {
        auto t = report.tally("universal", "product-reconstruction", inst);
        SubgraphAction const      act(fam);
        SubgraphSemilattice const lat(fam);
        ProductOps const          ops(act, lat);
        for (std::size_t i = 0; i < opt.samples; ++i) {
          Element const a = random_element(fam, rng);
          Element const b = random_element(fam, rng);
          auto const    r = ops.mul({a.graph, a.point}, {b.graph, b.point});
          t.expect(Element{r.e, r.g} == fam.mul(a, b),
                   [&] { return fam.format(a) + " * " + fam.format(b); });
        }
      }
      {
        auto t = report.tally("universal", "path-evaluation", inst);
        for (std::size_t i = 0; i < opt.samples; ++i) {
          Path const p = random_path(cay, opt.path_len, rng);
          t.expect(fam.eval_word(cay.path_label(p)) == fam.eval_path_element(p),
                   [&] { return cay.describe(p); });
        }
      }
    }

  }  // namespace detail

  inline void suite_expansion(fixtures::NamedGroup const& ng,
                           SuiteOptions const& opt, Report& report) {
    std::vector<std::pair<std::string, Expansion>> fams;
    fams.emplace_back("M", Expansion::margolis_meakin(ng.group));
    fams.emplace_back("F", Expansion::f_expansion(ng.group));
    for (auto const& [what, fam] : fams) {
      if (detail::try_elements(fam, opt)) {
        detail::expansion_exhaustive(
            fam, detail::label(ng.name, what, "exhaustive"), opt, report);
      } else {
        detail::expansion_sampled(
            fam,
            detail::label(ng.name, what,
                          "sampled n=" + std::to_string(opt.samples)
                              + " seed=" + std::to_string(opt.seed)),
            opt, report);
      }
    }
  }

  ////////////////////////////////////////////////////////////////////////
  // fwedge: m on M^∧(G,Y), its generation, and f: M^∧(G,Y) -> F(G,X)
  ////////////////////////////////////////////////////////////////////////

  namespace detail {

    template <typename Pairs>
    void check_f_map(MWedge const& mw, Pairs&& pairs,
                     std::vector<Element> const& singles,
                     std::string const& inst, Report& report) {
      auto const& f = mw.free();
      {
        auto t = report.tally("isomorphism", "f-morphism", inst);
        pairs([&](Element const& a, Element const& b) {
          t.expect(mw.f_map(mw.mul(a, b)) == f.mul(mw.f_map(a), mw.f_map(b)),
                   [&] {
                     return mw.closed().format(a) + " * "
                            + mw.closed().format(b);
                   });
        });
      }
      {
        auto t1 = report.tally("isomorphism", "f-inverse-preserving", inst);
        auto t2 = report.tally("isomorphism", "f-m-preserving", inst);
        auto t3 = report.tally("isomorphism", "f-round-trip", inst);
        for (auto const& a : singles) {
          auto const fa = mw.f_map(a);
          auto desc = [&] { return mw.closed().format(a); };
          t1.expect(mw.f_map(mw.inv(a)) == f.inv(fa), desc);
          t2.expect(mw.f_map(mw.m(a)) == f.m(fa), desc);
          t3.expect(mw.f_inverse(fa) == a, desc);
        }
      }
      {
        auto t = report.tally("isomorphism", "f-identity-generators", inst);
        t.expect(mw.f_map(mw.identity()) == f.identity());
        for (auto const& l : f.gens().letters()) {
          t.expect(mw.f_map(mw.generator_image(l.name))
                       == f.generator_image(l.name),
                   [&] { return l.name; });
        }
      }
    }

  }  // namespace detail

  inline void suite_fwedge(fixtures::NamedGroup const& ng,
                           SuiteOptions const& opt, Report& report) {
    MWedge const mw(ng.group);
    auto const   elems = detail::try_elements(mw.closed(), opt);
    if (elems) {
      std::string const inst = detail::label(ng.name, "M^", "exhaustive");
      auto const        tab = to_table(mw.closed(), true, opt.cap);
      auto const        an = analyze(tab.monoid);
      {
        auto t = report.tally("m-operation", "f-inverse", inst);
        t.expect(an.is_f_inverse,
                 [&] { return an.f_inverse_witness.value_or(""); });
      }
      if (an.is_f_inverse) {
        auto t = report.tally("m-operation", "m-is-class-max", inst);
        for (std::size_t a = 0; a < tab.elements.size(); ++a) {
          t.expect(tab.index_of(mw.m(tab.elements[a])) == an.m(a),
                   [&] { return tab.monoid.name(a); });
        }
      }
      {
        auto t = report.tally("m-operation", "decomposition", inst);
        for (auto const& a : tab.elements) {
          Term const term = decompose(mw, a);
          t.expect(eval_term(term, mw) == a, [&] {
            return mw.closed().format(a) + " via " + to_string(term);
          });
        }
      }
      {
        auto t = report.tally("isomorphism", "f-bijective", inst);
        auto const free_elems = mw.free().enumerate_elements(opt.cap);
        std::unordered_set<Element, ElementHash> image;
        for (auto const& a : tab.elements) {
          image.insert(mw.f_map(a));
        }
        t.expect(image.size() == tab.elements.size(),
                 [] { return std::string("f is not injective"); });
        t.expect(image.size() == free_elems.size(), [&] {
          return std::to_string(image.size()) + " images vs "
                 + std::to_string(free_elems.size()) + " elements of F";
        });
        for (auto const& b : free_elems) {
          t.expect(image.count(b) == 1 && mw.f_map(mw.f_inverse(b)) == b,
                   [&] { return mw.free().format(b); });
        }
      }
      detail::check_f_map(
          mw,
          [&](auto&& f) {
            for (auto const& a : tab.elements) {
              for (auto const& b : tab.elements) {
                f(a, b);
              }
            }
          },
          tab.elements, inst, report);
      {
        // f is a semilattice map on idempotents: f((A ∪ B)^) = f(A) ∪ f(B).
        auto t = report.tally("isomorphism", "f-semilattice", inst);
        std::vector<Element> idem;
        for (auto const& a : tab.elements) {
          if (a.point == 0) {
            idem.push_back(a);
          }
        }
        for (auto const& a : idem) {
          for (auto const& b : idem) {
            Element const fa = mw.f_map(a);
            Element const fb = mw.f_map(b);
            t.expect(mw.f_map(mw.mul(a, b))
                         == Element{mw.free().meet(fa.graph, fb.graph), 0},
                     [&] {
                       return mw.closed().format(a) + " , "
                              + mw.closed().format(b);
                     });
          }
        }
      }
      return;
    }
    std::string const inst = detail::label(
        ng.name, "M^",
        "sampled n=" + std::to_string(opt.samples)
            + " seed=" + std::to_string(opt.seed));
    std::mt19937_64      rng(opt.seed);
    std::vector<Element> singles;
    for (std::size_t i = 0; i < opt.samples; ++i) {
      singles.push_back(random_element(mw.closed(), rng));
    }
    {
      // m(a) is above a and above every b moved into the class of a.
      auto t = report.tally("m-operation", "m-is-class-max", inst);
      auto const& cl = mw.closed();
      auto const  words = shortest_words(cl.group(), cl.gens());
      for (std::size_t i = 0; i < opt.samples; ++i) {
        Element const& a = singles[i];
        Element const  m = mw.m(a);
        Element const& b = singles[(i + 1) % opt.samples];
        elem_t const   h = cl.group().mul(cl.group().inv(b.point), a.point);
        Element const  moved = mw.mul(b, cl.eval_word(words[h]));
        t.expect(m.point == a.point && cl.leq(a, m) && cl.leq(moved, m)
                     && mw.m(m) == m,
                 [&] { return cl.format(a) + " , " + cl.format(b); });
      }
    }
    {
      auto t = report.tally("m-operation", "decomposition", inst);
      std::size_t const k = std::min<std::size_t>(opt.samples, 1000);
      for (std::size_t i = 0; i < k; ++i) {
        Term const term = decompose(mw, singles[i]);
        t.expect(eval_term(term, mw) == singles[i],
                 [&] { return mw.closed().format(singles[i]); });
      }
    }
    detail::check_f_map(
        mw,
        [&](auto&& f) {
          std::mt19937_64 prng(opt.seed + 1);
          for (std::size_t i = 0; i < opt.samples; ++i) {
            Element const a = random_element(mw.closed(), prng);
            Element const b = random_element(mw.closed(), prng);
            f(a, b);
          }
        },
        singles, inst, report);
  }

  ////////////////////////////////////////////////////////////////////////
  // universal: canonical morphisms out of M(G,X) and M^∧(G,Y)
  ////////////////////////////////////////////////////////////////////////

  inline void suite_universal(fixtures::NamedGroup const& ng,
                          SuiteOptions const& opt, Report& report) {
    auto const& gg = ng.group;
    Expansion const m = Expansion::margolis_meakin(gg);
    Expansion const f = Expansion::f_expansion(gg);
    MWedge const    mw(gg);
    std::vector<std::pair<std::string, elem_t>> letters;
    for (auto const& l : gg.gens.letters()) {
      letters.emplace_back(l.name, l.image);
    }
    struct Target {
      std::string         name;
      FiniteInverseMonoid monoid;
    };
    std::vector<Target> targets;
    targets.push_back({"G", group_as_monoid(gg.group, gg.gens)});
    targets.push_back(
        {"G x chain2", fixtures::chain_product(gg.group, letters)});
    std::optional<ReifiedExpansion> f_table;
    if (detail::try_elements(f, opt)) {
      f_table = to_table(f, false, opt.cap);
      targets.push_back({"F(G,X)", f_table->monoid});
    }
    bool const m_small = detail::try_elements(m, opt).has_value();
    bool const w_small = detail::try_elements(mw.closed(), opt).has_value();
    MorphismOptions mopt;
    mopt.seed = opt.seed;
    mopt.cap = opt.cap;
    WedgeOptions wopt;
    wopt.max_len = opt.word_len;
    wopt.cap = opt.cap;
    for (auto const& tg : targets) {
      std::string const inst = ng.name + " -> " + tg.name;
      auto const        an = analyze(tg.monoid);
      GroupMap const    nu = induced_nu(gg.group, gg.gens, tg.monoid, an);
      if (!m_small) {
        // Sampled: ψ(A,g) is the value of a path spanning A and ending at g.
        std::string const sinst = inst + " (sampled n="
                                  + std::to_string(opt.samples) + " seed="
                                  + std::to_string(opt.seed) + ")";
        WordEvaluator const eval(tg.monoid,
                                 detail::x_values(m.gens(), tg.monoid));
        auto const&         cay = m.cayley();
        auto psi = [&](Element const& a) {
          return eval(cay.path_label(cay.spanning_path(a.graph, a.point)));
        };
        std::mt19937_64 rng(opt.seed);
        auto t1 = report.tally("universal-M", "morphism", sinst);
        auto t2 = report.tally("universal-M", "well-defined", sinst);
        for (std::size_t i = 0; i < opt.samples; ++i) {
          Element const a = random_element(m, rng);
          Element const b = random_element(m, rng);
          t1.expect(psi(m.mul(a, b)) == tg.monoid.mul(psi(a), psi(b)),
                    [&] { return m.format(a) + " * " + m.format(b); });
          t2.expect(eval(cay.path_label(cay.random_spanning_path(
                        a.graph, a.point, rng)))
                        == psi(a),
                    [&] { return m.format(a); });
        }
      }
      if (m_small) {
        detail::guarded(report, "universal-M", "construct", inst, [&] {
          auto cm = canonical_morphism_M(m, tg.monoid, nu, inst, mopt);
          report.merge(cm.report);
          if (tg.name == "F(G,X)") {
            auto t = report.tally("universal-M", "forget-connectivity", inst);
            for (auto const& a : cm.source) {
              t.expect(cm(a) == f_table->index_of(a),
                       [&] { return m.format(a); });
            }
          }
        });
      }
      if (w_small) {
        detail::guarded(report, "universal-Mwedge", "construct", inst, [&] {
          auto cm = canonical_morphism_Fwedge(gg, tg.monoid, nu, inst, wopt);
          report.merge(cm.report);
          if (tg.name == "F(G,X)") {
            auto t = report.tally("universal-Mwedge", "equals-f-map", inst);
            for (auto const& a : cm.source) {
              t.expect(cm(a) == f_table->index_of(mw.f_map(a)),
                       [&] { return mw.closed().format(a); });
            }
          }
        });
      } else {
        // Too large to reify: ψ on the word ball and the factorization only.
        Expansion const  my = Expansion::margolis_meakin_extended(gg);
        PsiContext const psi(my, tg.monoid, an, nu);
        std::size_t const len = std::min<std::size_t>(opt.word_len, 4);
        std::string const sinst = inst + " (ball " + std::to_string(len) + ")";
        auto const ball = psi_ball(psi, len, report, sinst);
        check_factorization(psi, mw.closed().closure(), ball, report, sinst);
      }
      if (gg.group.order() <= opt.edge_step_order) {
        Expansion const  my = Expansion::margolis_meakin_extended(gg);
        PsiContext const psi(my, tg.monoid, an, nu);
        single_edge_step_suite(psi, report, inst, opt.cap);
      }
    }
  }

  ////////////////////////////////////////////////////////////////////////

  inline Report run_suite(std::string const& name,
                          fixtures::NamedGroup const& ng,
                          SuiteOptions const& opt = {}) {
    using Fn = void (*)(fixtures::NamedGroup const&, SuiteOptions const&,
                        Report&);
    static std::vector<std::pair<std::string, Fn>> const table{
        {"semilattice", suite_semilattice}, {"premorphism", suite_premorphism},
        {"closure", suite_closure},         {"meet-bar", suite_meet_bar},
        {"quotient", suite_quotient},           {"expansion", suite_expansion},
        {"fwedge", suite_fwedge},           {"universal", suite_universal}};
    Report report;
    bool   found = false;
    for (auto const& [n, fn] : table) {
      if (name == "all" || name == n) {
        fn(ng, opt, report);
        found = true;
      }
    }
    if (!found) {
      throw Error(ErrorKind::invalid_input, "unknown suite '" + name + "'");
    }
    return report;
  }

}  // namespace fexp

#endif  // FEXP_SUITES_HPP_
