#ifndef FEXP_CLOSURE_HPP_
#define FEXP_CLOSURE_HPP_

#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "error.hpp"
#include "expansion.hpp"
#include "monoid.hpp"
#include "partial_action.hpp"
#include "report.hpp"
#include "semilattice.hpp"
#include "wedge.hpp"

namespace fexp {

  // Dual-closure (interior) operators j on a semilattice:
  //   j(x) <= x,   x <= y => j(x) <= j(y),   j(j(x)) = j(x).
  // The operator is any callable V -> V; checks range over a Domain.

  template <Semilattice L, typename J>
  void verify_dual_closure(L const& lat, J const& j,
                           Domain<typename L::value_type> const& dom,
                           Report& report, std::string const& instance) {
    {
      auto t = report.tally("closure", "Cl1", instance);
      dom.each([&](auto const& x) {
        t.expect(lat.leq(j(x), x), [&] {
          return "j(x) = " + lat.describe(j(x)) + " is not below x = "
                 + lat.describe(x);
        });
      });
    }
    {
      auto t = report.tally("closure", "Cl2", instance);
      auto check = [&](auto const& x, auto const& y) {
        if (!lat.leq(x, y)) {
          return;
        }
        t.expect(lat.leq(j(x), j(y)), [&] {
          return "x = " + lat.describe(x) + " <= y = " + lat.describe(y)
                 + " but j(x) is not below j(y)";
        });
      };
      if (dom.is_exhaustive()) {
        dom.pairs(check);
      } else {
        // Random pairs are rarely comparable; use x ∧ z <= x instead.
        dom.pairs([&](auto const& x, auto const& z) {
          check(lat.meet(x, z), x);
        });
      }
    }
    {
      auto t = report.tally("closure", "Cl3", instance);
      dom.each([&](auto const& x) {
        auto const jx = j(x);
        t.expect(j(jx) == jx, [&] { return "x = " + lat.describe(x); });
      });
    }
  }

  // j(j(x) ∧ j(y)) = j(x ∧ y).
  template <Semilattice L, typename J>
  void meet_bar_check(L const& lat, J const& j,
                     Domain<typename L::value_type> const& dom, Report& report,
                     std::string const& instance) {
    auto t = report.tally("closure", "meet-bar", instance);
    dom.pairs([&](auto const& x, auto const& y) {
      t.expect(j(lat.meet(j(x), j(y))) == j(lat.meet(x, y)), [&] {
        return "x = " + lat.describe(x) + ", y = " + lat.describe(y);
      });
    });
  }

  // ρ_j (x ρ y iff j(x) = j(y)) is a congruence. Since x ρ j(x), it is
  // enough that j(x ∧ z) = j(j(x) ∧ z) for all x, z.
  template <Semilattice L, typename J>
  void rho_j_congruence_check(L const& lat, J const& j,
                              Domain<typename L::value_type> const& dom,
                              Report& report, std::string const& instance) {
    auto t = report.tally("closure", "rho-congruence", instance);
    dom.pairs([&](auto const& x, auto const& z) {
      t.expect(j(lat.meet(x, z)) == j(lat.meet(j(x), z)), [&] {
        return "x = " + lat.describe(x) + ", z = " + lat.describe(z);
      });
    });
  }

  // Fibers of an extensional j, each sorted, ordered by least member.
  inline std::vector<std::vector<std::size_t>>
  rho_j_classes(std::vector<std::size_t> const& j) {
    std::map<std::size_t, std::size_t>    slot;
    std::vector<std::vector<std::size_t>> out;
    for (std::size_t x = 0; x < j.size(); ++x) {
      auto [it, fresh] = slot.emplace(j[x], out.size());
      if (fresh) {
        out.emplace_back();
      }
      out[it->second].push_back(x);
    }
    return out;
  }

  // If g·x is defined then g·j(x) is defined and j(g·x) = g·j(x).
  template <PartialAction A, typename J>
  void is_G_invariant(A const& act, J const& j,
                      Domain<typename A::value_type> const& dom,
                      Report& report, std::string const& instance) {
    auto const& grp = act.group();
    auto        t = report.tally("closure", "G-invariant", instance);
    dom.each([&](auto const& x) {
      auto const jx = j(x);
      for (elem_t g = 0; g < grp.order(); ++g) {
        auto gx = act.act(g, x);
        if (!gx) {
          continue;
        }
        auto gjx = act.act(g, jx);
        t.expect(gjx && j(*gx) == *gjx, [&] {
          return "g = " + grp.name(g)
                 + (gjx ? ": j(g.x) != g.j(x)" : ": g.j(x) undefined");
        });
      }
    });
  }

  ////////////////////////////////////////////////////////////////////////
  // The quotient product j(X) ⋊ G
  ////////////////////////////////////////////////////////////////////////

  struct QuotientProduct {
    std::vector<std::size_t>              image;     // j(X) -> carrier index
    std::vector<std::size_t>              image_of;  // carrier -> j(X) or npos
    std::shared_ptr<Premorphism const>    quotient_phi;
    std::unique_ptr<PartialActionProduct> source;
    std::unique_ptr<PartialActionProduct> target;
    std::vector<std::size_t>              pi;        // source -> target
    Report                                report;
  };

  namespace detail {

    inline Domain<std::size_t> index_domain(std::size_t n) {
      std::vector<std::size_t> v(n);
      for (std::size_t i = 0; i < n; ++i) {
        v[i] = i;
      }
      return Domain<std::size_t>::exhaustive(std::move(v));
    }

  }  // namespace detail

  // Builds X ⋊ G and j(X) ⋊ G (with meet-bar j(x) ∧̄ j(y) = j(x ∧ y)) and
  // the map π(e,g) = (j(e), g); checks π is a surjective morphism whose
  // kernel is ρ̃_j, and that ρ̃_j ⊆ σ. Pairs are checked exhaustively, or
  // `pair_samples` seeded random pairs when nonzero.
  inline QuotientProduct
  quotient_product(std::shared_ptr<Premorphism const> phi,
                   std::vector<std::size_t> const& j, std::string const& instance,
                   std::size_t pair_samples = 0, std::uint64_t seed = 0) {
    auto const&       lat = phi->carrier();
    auto const&       grp = phi->group();
    std::size_t const n = lat.size();
    if (j.size() != n) {
      throw Error(ErrorKind::invalid_input, "closure table size != carrier");
    }
    auto jf = [&](std::size_t x) { return j[x]; };
    auto dom = detail::index_domain(n);
    {
      Report pre;
      verify_dual_closure(lat, jf, dom, pre, instance);
      for (auto const& r : pre.results()) {
        if (!r.passed()) {
          throw Error(ErrorKind::not_dual_closure,
                      r.check + ": " + r.witness.value_or(""));
        }
      }
      is_G_invariant(*phi, jf, dom, pre, instance);
      if (!pre.passed()) {
        throw Error(ErrorKind::not_invariant,
                    pre.results().back().witness.value_or(""));
      }
    }
    QuotientProduct out;
    out.image_of.assign(n, Premorphism::undefined);
    for (std::size_t x = 0; x < n; ++x) {
      if (j[x] == x) {
        out.image_of[x] = out.image.size();
        out.image.push_back(x);
      }
    }
    std::size_t const k = out.image.size();
    std::vector<std::string> names;
    for (auto x : out.image) {
      names.push_back(lat.describe(x));
    }
    auto image = out.image;
    auto image_of = out.image_of;
    auto jt = j;
    FiniteSemilattice qlat(
        k,
        [phi, image, image_of, jt](std::size_t a, std::size_t b) {
          return image_of[jt[phi->carrier().meet(image[a], image[b])]];
        },
        std::move(names));
    if (k <= tabulate_limit) {
      qlat = qlat.tabulated();
    }
    std::vector<std::vector<std::size_t>> maps(
        grp.order(), std::vector<std::size_t>(k, Premorphism::undefined));
    for (elem_t g = 0; g < grp.order(); ++g) {
      for (std::size_t a = 0; a < k; ++a) {
        if (auto y = phi->act(g, out.image[a])) {
          maps[g][a] = out.image_of[*y];
        }
      }
    }
    out.quotient_phi = std::make_shared<Premorphism const>(
        grp, std::move(qlat), std::move(maps));
    out.source = std::make_unique<PartialActionProduct>(phi);
    out.target = std::make_unique<PartialActionProduct>(out.quotient_phi);
    auto const& src = *out.source;
    auto const& tgt = *out.target;
    out.pi.resize(src.size());
    auto& report = out.report;
    {
      auto t = report.tally("congruence", "pi-defined", instance);
      for (std::size_t a = 0; a < src.size(); ++a) {
        auto const& [e, g] = src[a];
        auto        i = tgt.index_of({out.image_of[j[e]], g});
        if (t.expect(i.has_value(), [&] { return src.describe(a); })) {
          out.pi[a] = *i;
        }
      }
      if (!t.ok()) {
        return out;
      }
    }
    {
      auto              t = report.tally("congruence", "pi-surjective", instance);
      std::vector<bool> hit(tgt.size(), false);
      for (auto p : out.pi) {
        hit[p] = true;
      }
      for (std::size_t b = 0; b < tgt.size(); ++b) {
        t.expect(hit[b], [&] { return tgt.describe(b) + " not hit"; });
      }
    }
    {
      auto t = report.tally("congruence", "pi-morphism", instance);
      auto check = [&](std::size_t a, std::size_t b) {
        t.expect(out.pi[src.mul(a, b)] == tgt.mul(out.pi[a], out.pi[b]),
                 [&] { return src.describe(a) + " * " + src.describe(b); });
      };
      auto check_inv = [&](std::size_t a) {
        t.expect(out.pi[src.inv(a)] == tgt.inv(out.pi[a]),
                 [&] { return "inverse of " + src.describe(a); });
      };
      if (pair_samples == 0) {
        for (std::size_t a = 0; a < src.size(); ++a) {
          check_inv(a);
          for (std::size_t b = 0; b < src.size(); ++b) {
            check(a, b);
          }
        }
      } else {
        std::mt19937_64                            rng(seed);
        std::uniform_int_distribution<std::size_t> pick(0, src.size() - 1);
        for (std::size_t i = 0; i < pair_samples; ++i) {
          std::size_t const a = pick(rng);
          std::size_t const b = pick(rng);
          check_inv(a);
          check(a, b);
        }
      }
    }
    {
      // ker π = ρ̃_j; each ρ̃_j-class lies in one fiber of the second
      // coordinate, which is σ on X ⋊ G.
      auto t = report.tally("congruence", "kernel-is-rho-tilde", instance);
      std::vector<std::size_t> rep(tgt.size(), Premorphism::undefined);
      for (std::size_t a = 0; a < src.size(); ++a) {
        std::size_t& r = rep[out.pi[a]];
        if (r == Premorphism::undefined) {
          r = a;
          continue;
        }
        auto const& [e, g] = src[a];
        auto const& [f, h] = src[r];
        t.expect(g == h && j[e] == j[f], [&] {
          return src.describe(a) + " and " + src.describe(r)
                 + " share an image but are not rho-tilde related";
        });
      }
    }
    {
      auto t = report.tally("congruence", "rho-tilde-in-sigma", instance);
      if (src.size() <= 600) {
        auto const s = src.to_table();
        auto const an = analyze(s);
        for (std::size_t a = 0; a < src.size(); ++a) {
          for (std::size_t b = 0; b < src.size(); ++b) {
            if (out.pi[a] == out.pi[b]) {
              t.expect(an.sigma_class[a] == an.sigma_class[b], [&] {
                return src.describe(a) + " , " + src.describe(b);
              });
            }
          }
        }
      } else {
        for (std::size_t a = 0; a < src.size(); ++a) {
          t.expect(tgt[out.pi[a]].g == src[a].g,
                   [&] { return src.describe(a); });
        }
      }
    }
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // Closure on the connected Y-graphs and related random generators
  ////////////////////////////////////////////////////////////////////////

  // Extensional closure table on an enumerated carrier.
  template <typename J>
  std::vector<std::size_t> closure_table(SubgraphCarrier const& carrier,
                                         J const&               j) {
    std::vector<std::size_t> out(carrier.size());
    for (std::size_t x = 0; x < carrier.size(); ++x) {
      out[x] = carrier.index_of(j(carrier[x]));
    }
    return out;
  }

  // A connected subgraph containing the origin: the trace of a random walk
  // of up to `max_steps` steps along positive or negative edges.
  inline Subgraph random_connected_subgraph(CayleyGraph const& cay,
                                            std::mt19937_64&   rng,
                                            std::size_t        max_steps = 12) {
    std::uniform_int_distribution<std::size_t> steps(0, max_steps);
    std::uniform_int_distribution<std::size_t> letter(0,
                                                      cay.letter_count() - 1);
    std::bernoulli_distribution                forward(0.5);
    Subgraph    g;
    elem_t      v = 0;
    std::size_t const len = steps(rng);
    for (std::size_t i = 0; i < len; ++i) {
      std::size_t const y = letter(rng);
      if (forward(rng)) {
        std::size_t const id = cay.edge_id(v, y);
        g.edges.set(id);
        v = cay.edge_dst(id);
      } else {
        elem_t const u = cay.group().mul(v, cay.group().inv(cay.gens()[y].image));
        g.edges.set(cay.edge_id(u, y));
        v = u;
      }
      g.vertices |= std::uint64_t{1} << v;
    }
    return g;
  }

  // A random element (Γ, g) of the family over connected graphs: Γ from a
  // random walk and g a random vertex of it. For the closed flavor Γ is
  // closed afterwards.
  inline Element random_element(Expansion const& fam, std::mt19937_64& rng,
                                std::size_t max_steps = 12) {
    Subgraph g = random_connected_subgraph(fam.cayley(), rng, max_steps);
    if (fam.flavor() == Flavor::closed) {
      g = fam.closure()(g);
    } else if (fam.flavor() == Flavor::all) {
      std::uniform_int_distribution<std::size_t> vtx(0, fam.group().order() - 1);
      std::bernoulli_distribution                  coin(0.3);
      while (coin(rng)) {
        g.vertices |= std::uint64_t{1} << vtx(rng);
      }
    }
    std::vector<elem_t> vs;
    for (elem_t v = 0; v < fam.group().order(); ++v) {
      if (g.has_vertex(v)) {
        vs.push_back(v);
      }
    }
    std::uniform_int_distribution<std::size_t> pick(0, vs.size() - 1);
    return {g, vs[pick(rng)]};
  }

  // Sampled form of the quotient-product check over Subgraph values: with
  // π(Γ,g) = (j(Γ),g) from `source` (connected Y-graphs) to `target`
  // (closed graphs), π(ab) = π(a)π(b), π(a^-1) = π(a)^-1, and if a, a'
  // differ only in barred edges (so a ρ̃ a') then ab ρ̃ a'b and ba ρ̃ ba'.
  inline void sampled_congruence_check(Expansion const& source,
                                       Expansion const& target,
                                       std::size_t samples, std::uint64_t seed,
                                       Report& report,
                                       std::string const& instance) {
    WedgeClosure const& j = target.closure();
    auto pi = [&](Element const& a) { return Element{j(a.graph), a.point}; };
    auto describe = [&](Element const& a) { return source.format(a); };
    std::mt19937_64 rng(seed);
    {
      auto t = report.tally("congruence", "pi-morphism", instance);
      for (std::size_t i = 0; i < samples; ++i) {
        Element const a = random_element(source, rng);
        Element const b = random_element(source, rng);
        t.expect(pi(source.mul(a, b)) == target.mul(pi(a), pi(b)),
                 [&] { return describe(a) + " * " + describe(b); });
        t.expect(pi(source.inv(a)) == target.inv(pi(a)),
                 [&] { return "inverse of " + describe(a); });
      }
    }
    {
      auto t = report.tally("congruence", "rho-tilde-compatible", instance);
      for (std::size_t i = 0; i < samples; ++i) {
        Element const a = random_element(source, rng);
        Element const b = random_element(source, rng);
        // a' = a with a random subset of the closure's barred edges added.
        Element                     a2 = a;
        std::bernoulli_distribution coin(0.5);
        j.barred_edges(a.graph.vertices).for_each([&](std::size_t id) {
          if (coin(rng)) {
            a2.graph.edges.set(id);
          }
        });
        t.expect(pi(source.mul(a, b)) == pi(source.mul(a2, b))
                     && pi(source.mul(b, a)) == pi(source.mul(b, a2)),
                 [&] { return describe(a) + " ~ " + describe(a2) + " with "
                              + describe(b); });
      }
    }
  }

}  // namespace fexp

#endif  // FEXP_CLOSURE_HPP_
