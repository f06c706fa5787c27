#ifndef FEXP_VERIFY_HPP_
#define FEXP_VERIFY_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "cayley.hpp"
#include "error.hpp"
#include "expansion.hpp"
#include "group.hpp"
#include "monoid.hpp"
#include "report.hpp"
#include "wedge.hpp"

namespace fexp {

  // A group morphism G -> S/σ, as class indices of analyze(S).
  using GroupMap = std::vector<std::size_t>;

  // ν(g) = [reps[g]]_σ.
  inline GroupMap nu_from_representatives(MonoidAnalysis const&           an,
                                          std::vector<std::size_t> const& reps) {
    GroupMap nu;
    for (auto r : reps) {
      nu.push_back(an.sigma_class.at(r));
    }
    return nu;
  }

  // The only candidate for a canonical ν: ν([w]_G) = [ι_S(w)]_σ along
  // shortest words.
  inline GroupMap induced_nu(FiniteGroup const& g, GeneratorSet const& gens,
                             FiniteInverseMonoid const& s,
                             MonoidAnalysis const&      an) {
    GroupMap nu;
    for (auto const& w : shortest_words(g, gens)) {
      std::size_t v = s.identity();
      for (auto const& l : w) {
        auto im = s.generator(gens[l.letter].name);
        if (!im) {
          throw Error(ErrorKind::nu_not_canonical,
                      "target has no image for letter " + gens[l.letter].name);
        }
        v = s.mul(v, l.exponent > 0 ? *im : s.inv(*im));
      }
      nu.push_back(an.sigma_class[v]);
    }
    return nu;
  }

  // ν must be multiplicative and send [x]_G to [ι_S(x)]_σ for every letter.
  inline void check_nu(FiniteGroup const& g, GeneratorSet const& gens,
                       FiniteInverseMonoid const& s, MonoidAnalysis const& an,
                       GroupMap const& nu) {
    auto const& q = an.quotient;
    if (nu.size() != g.order()) {
      throw Error(ErrorKind::nu_not_canonical, "nu has the wrong size");
    }
    for (auto c : nu) {
      if (c >= q.order()) {
        throw Error(ErrorKind::nu_not_canonical, "nu value out of range");
      }
    }
    for (elem_t a = 0; a < g.order(); ++a) {
      for (elem_t b = 0; b < g.order(); ++b) {
        if (nu[g.mul(a, b)] != q.mul(nu[a], nu[b])) {
          throw Error(ErrorKind::nu_not_canonical,
                      "nu(" + g.name(a) + " " + g.name(b)
                          + ") != nu(" + g.name(a) + ") nu(" + g.name(b) + ")");
        }
      }
    }
    for (auto const& l : gens.letters()) {
      auto im = s.generator(l.name);
      if (!im) {
        throw Error(ErrorKind::nu_not_canonical,
                    "target has no image for letter " + l.name);
      }
      if (nu[l.image] != an.sigma_class[*im]) {
        throw Error(ErrorKind::nu_not_canonical,
                    "nu([" + l.name + "]) = " + q.name(nu[l.image])
                        + " but [iota(" + l.name + ")] = "
                        + q.name(an.sigma_class[*im]));
      }
    }
  }

  // A map from the enumerated elements of an expansion into a table monoid.
  struct CanonicalMorphism {
    std::vector<Element>                                  source;
    std::unordered_map<Element, std::size_t, ElementHash> index;
    std::vector<std::size_t>                              table;
    Report                                                report;

    std::size_t operator()(Element const& e) const {
      auto it = index.find(e);
      if (it == index.end()) {
        throw Error(ErrorKind::invalid_input, "element not in the source");
      }
      return table[it->second];
    }
  };

  // Evaluates words over a generator set in a table monoid, given the value
  // of each letter.
  class WordEvaluator {
   public:
    WordEvaluator(FiniteInverseMonoid const& s, std::vector<std::size_t> values)
        : _s(&s), _values(std::move(values)) {}

    std::size_t letter(SignedLetter l) const {
      std::size_t const v = _values.at(l.letter);
      return l.exponent > 0 ? v : _s->inv(v);
    }

    std::size_t operator()(Word const& w) const {
      std::size_t v = _s->identity();
      for (auto const& l : w) {
        v = _s->mul(v, letter(l));
      }
      return v;
    }

    std::vector<std::size_t> const& values() const noexcept {
      return _values;
    }

   private:
    FiniteInverseMonoid const* _s;
    std::vector<std::size_t>   _values;
  };

  namespace detail {

    inline std::vector<std::size_t> x_values(GeneratorSet const&        gens,
                                             FiniteInverseMonoid const& s) {
      std::vector<std::size_t> out;
      for (std::size_t i = 0; i < gens.size(); ++i) {
        if (gens.is_barred(i)) {
          continue;
        }
        auto im = s.generator(gens[i].name);
        if (!im) {
          throw Error(ErrorKind::invalid_input,
                      "target has no image for letter " + gens[i].name);
        }
        out.push_back(*im);
      }
      return out;
    }

    // φ(ab) = φ(a)φ(b), φ(a^-1) = φ(a)^-1, φ(1) = 1 on a reified source,
    // φ sends each source generator to `letters` (in the source's
    // generator order), and the diagram [φ(Γ,g)]_σ = ν(g) commutes.
    inline void check_morphism(ReifiedExpansion const&         src,
                               FiniteInverseMonoid const&      s,
                               MonoidAnalysis const&           an,
                               std::vector<std::size_t> const& phi,
                               std::vector<std::size_t> const& letters,
                               GroupMap const& nu, std::string const& prop,
                               std::string const& instance, Report& report) {
      auto const& m = src.monoid;
      {
        auto t = report.tally(prop, "morphism", instance);
        for (std::size_t a = 0; a < m.order(); ++a) {
          for (std::size_t b = 0; b < m.order(); ++b) {
            t.expect(phi[m.mul(a, b)] == s.mul(phi[a], phi[b]),
                     [&] { return m.name(a) + " * " + m.name(b); });
          }
        }
      }
      {
        auto t = report.tally(prop, "inverse-preserving", instance);
        for (std::size_t a = 0; a < m.order(); ++a) {
          t.expect(phi[m.inv(a)] == s.inv(phi[a]), [&] { return m.name(a); });
        }
      }
      {
        auto t = report.tally(prop, "identity-preserving", instance);
        t.expect(phi[m.identity()] == s.identity(),
                 [&] { return s.name(phi[m.identity()]); });
      }
      {
        auto t = report.tally(prop, "generators", instance);
        for (std::size_t i = 0; i < m.gens().size(); ++i) {
          auto const& [name, a] = m.gens()[i];
          t.expect(phi[a] == letters.at(i), [&] { return "letter " + name; });
        }
      }
      {
        auto t = report.tally(prop, "diagram", instance);
        for (std::size_t a = 0; a < m.order(); ++a) {
          t.expect(an.sigma_class[phi[a]] == nu[src.elements[a].point],
                   [&] { return m.name(a); });
        }
      }
    }

  }  // namespace detail

  struct MorphismOptions {
    std::size_t   extra_paths = 2;  // random spanning paths per element
    std::uint64_t seed = 0;
    std::uint64_t cap = default_enumeration_cap;
  };

  // The canonical morphism M(G,X) -> S for an E-unitary X-generated S:
  // φ(Γ,g) is the value in S of the label of a spanning path of (Γ,g).
  // Each element is re-evaluated along several random spanning paths.
  inline CanonicalMorphism
  canonical_morphism_M(Expansion const& fam, FiniteInverseMonoid const& s,
                       GroupMap const& nu, std::string const& instance = "",
                       MorphismOptions const& opt = {}) {
    auto const an = analyze(s);
    if (!an.is_e_unitary) {
      throw Error(ErrorKind::not_e_unitary, *an.e_unitary_witness);
    }
    check_nu(fam.group(), fam.gens(), s, an, nu);
    auto const&         cay = fam.cayley();
    WordEvaluator const eval(s, detail::x_values(fam.gens(), s));
    auto                src = to_table(fam, false, opt.cap);
    CanonicalMorphism   out;
    std::mt19937_64     rng(opt.seed);
    {
      auto t = out.report.tally("universal-M", "well-defined", instance);
      for (auto const& e : src.elements) {
        std::size_t const v
            = eval(cay.path_label(cay.spanning_path(e.graph, e.point)));
        for (std::size_t i = 0; i < opt.extra_paths; ++i) {
          Path const        p = cay.random_spanning_path(e.graph, e.point, rng);
          std::size_t const w = eval(cay.path_label(p));
          if (!t.expect(v == w)) {
            throw Error(ErrorKind::well_definedness_failure,
                        fam.format(e) + ": " + s.name(v) + " vs " + s.name(w)
                            + " along " + cay.describe(p));
          }
        }
        out.table.push_back(v);
      }
    }
    detail::check_morphism(src, s, an, out.table, eval.values(), nu,
                           "universal-M", instance, out.report);
    out.source = std::move(src.elements);
    out.index = std::move(src.index);
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // The universal property of M^∧(G,Y)
  ////////////////////////////////////////////////////////////////////////

  // ψ: M(G,Y) -> F for an F-inverse X-generated F, with barred letters
  // assigned ι(ḡ) = τ_F(ν(g)); evaluated along spanning paths.
  class PsiContext {
   public:
    PsiContext(Expansion const& my, FiniteInverseMonoid const& f,
               MonoidAnalysis const& an, GroupMap const& nu)
        : _my(&my), _f(&f), _an(&an), _eval(f, y_values(my.gens(), f, an, nu)) {}

    Expansion const& source() const noexcept {
      return *_my;
    }

    FiniteInverseMonoid const& target() const noexcept {
      return *_f;
    }

    MonoidAnalysis const& analysis() const noexcept {
      return *_an;
    }

    WordEvaluator const& eval() const noexcept {
      return _eval;
    }

    std::size_t path_value(Path const& p) const {
      return _eval(_my->cayley().path_label(p));
    }

    std::size_t operator()(Element const& e) const {
      return path_value(_my->cayley().spanning_path(e.graph, e.point));
    }

   private:
    static std::vector<std::size_t> y_values(GeneratorSet const&        gens,
                                             FiniteInverseMonoid const& f,
                                             MonoidAnalysis const&      an,
                                             GroupMap const&            nu) {
      std::vector<std::size_t> out = detail::x_values(gens, f);
      for (std::size_t i = 0; i < gens.size(); ++i) {
        if (gens.is_barred(i)) {
          out.push_back(an.tau(nu[gens[i].image]));
        }
      }
      return out;
    }

    Expansion const*           _my;
    FiniteInverseMonoid const* _f;
    MonoidAnalysis const*      _an;
    WordEvaluator              _eval;
  };

  struct EdgeStepResult {
    bool                       ok = true;
    std::optional<std::string> witness;
  };

  // For C = B + e with e a barred edge between vertices of B: with w' a
  // spanning path of B ending at α(e), p a shortest path in B from α(e) to
  // ω(e) and w'' a path in B from ω(e) to g, the labels of w' p w'' and
  // w' e p^-1 p w'' have the same value, and [p] <= ι(label of e).
  inline EdgeStepResult single_edge_step_check(PsiContext const& ctx,
                                               Subgraph const&   b,
                                               std::size_t edge, elem_t g) {
    auto const& cay = ctx.source().cayley();
    auto const& f = ctx.target();
    Edge const  e{cay.edge_src(edge), cay.edge_letter(edge), 1,
                 cay.edge_dst(edge)};
    Path const  w1 = cay.spanning_path(b, e.src);
    auto        p = cay.shortest_path(b, e.src, e.dst);
    auto        w2 = cay.shortest_path(b, e.dst, g);
    if (!p || !w2) {
      return {false, "endpoints not connected in B"};
    }
    Path const w = cay.concat(cay.concat(w1, *p), *w2);
    Path       wt = w1;
    wt.edges.push_back(e);
    wt = cay.concat(cay.concat(cay.concat(wt, cay.path_inverse(*p)), *p), *w2);
    std::size_t const u = ctx.path_value(*p);
    std::size_t const bar = ctx.eval().values().at(e.letter);
    EdgeStepResult    out;
    if (!f.leq(u, bar)) {
      out.ok = false;
      out.witness = "[u] = " + f.name(u) + " is not below " + f.name(bar);
    }
    std::size_t const vw = ctx.path_value(w);
    std::size_t const vwt = ctx.path_value(wt);
    if (vw != vwt) {
      out.ok = false;
      out.witness = "w = " + cay.describe(w) + " gives " + f.name(vw)
                    + ", w~ = " + cay.describe(wt) + " gives " + f.name(vwt);
    }
    return out;
  }

  // Every (B, e, g) with B an enumerated connected Y-graph, g ∈ V(B) and e a
  // barred edge between vertices of B that is not in B.
  inline void single_edge_step_suite(PsiContext const& ctx, Report& report,
                                     std::string const& instance,
                                     std::uint64_t cap = default_enumeration_cap) {
    auto const& my = ctx.source();
    auto const& cay = my.cayley();
    auto const& gens = my.gens();
    auto        t = report.tally("universal-Mwedge", "single-edge-step", instance);
    for (auto const& b : my.enumerate_graphs(cap)) {
      for (std::size_t id : cay.edges_in_order()) {
        if (!gens.is_barred(cay.edge_letter(id)) || b.edges.test(id)
            || !b.has_vertex(cay.edge_src(id))
            || !b.has_vertex(cay.edge_dst(id))) {
          continue;
        }
        for (elem_t g = 0; g < my.group().order(); ++g) {
          if (!b.has_vertex(g)) {
            continue;
          }
          auto r = single_edge_step_check(ctx, b, id, g);
          t.expect(r.ok, [&] {
            return my.format(b) + " + " + cay.describe(Edge{
                       cay.edge_src(id), cay.edge_letter(id), 1,
                       cay.edge_dst(id)})
                   + ": " + r.witness.value_or("");
          });
        }
      }
    }
  }

  using PsiBall = std::vector<std::pair<Element, std::size_t>>;

  // The elements of M(G,Y) reached by words of length <= max_len, in
  // breadth-first order, each with the value of its word in F. Reaching an
  // element twice with different values is a psi-well-defined failure; each
  // value is also compared with the spanning-path value.
  inline PsiBall psi_ball(PsiContext const& psi, std::size_t max_len,
                          Report& report, std::string const& instance) {
    auto const& my = psi.source();
    auto const& f = psi.target();
    PsiBall     ball;
    std::unordered_map<Element, std::size_t, ElementHash> seen;
    {
      auto t = report.tally("universal-Mwedge", "psi-well-defined", instance);
      std::vector<std::pair<Element, std::size_t>> letters;
      for (std::size_t y = 0; y < my.gens().size(); ++y) {
        for (int exp : {1, -1}) {
          Element im = my.generator_image(y);
          if (exp < 0) {
            im = my.inv(im);
          }
          letters.emplace_back(std::move(im), psi.eval().letter({y, exp}));
        }
      }
      ball.emplace_back(my.identity(), f.identity());
      seen.emplace(my.identity(), 0);
      std::size_t begin = 0;
      for (std::size_t len = 0; len < max_len; ++len) {
        std::size_t const end = ball.size();
        for (std::size_t i = begin; i < end; ++i) {
          for (auto const& [l, vl] : letters) {
            Element           b = my.mul(ball[i].first, l);
            std::size_t const vb = f.mul(ball[i].second, vl);
            auto [it, fresh] = seen.emplace(b, ball.size());
            if (fresh) {
              ball.emplace_back(std::move(b), vb);
            } else {
              std::size_t const old = ball[it->second].second;
              t.expect(old == vb, [&] {
                return my.format(b) + " has values " + f.name(old) + " and "
                       + f.name(vb);
              });
            }
          }
        }
        begin = end;
      }
    }
    {
      auto t = report.tally("universal-Mwedge", "psi-spanning-path", instance);
      for (auto const& [a, v] : ball) {
        t.expect(psi(a) == v, [&] { return my.format(a); });
      }
    }
    return ball;
  }

  // ψ(A,g) = ψ(A^∧,g) on every element of the ball.
  inline void check_factorization(PsiContext const& psi, WedgeClosure const& j,
                                  PsiBall const& ball, Report& report,
                                  std::string const& instance) {
    auto const& my = psi.source();
    auto const& f = psi.target();
    auto        t = report.tally("universal-Mwedge", "factorization", instance);
    for (auto const& [a, v] : ball) {
      Element const     closed{j(a.graph), a.point};
      std::size_t const vc = psi(closed);
      t.expect(vc == v, [&] {
        return my.format(a) + ": psi(A,g) = " + f.name(v) + " but psi(A^,g) = "
               + f.name(vc);
      });
    }
  }

  struct WedgeOptions {
    std::size_t   max_len = 6;  // word length for the ψ search
    std::uint64_t cap = default_enumeration_cap;
  };

  // The canonical morphism M^∧(G,Y) -> F for an F-inverse X-generated F:
  // ψ is tested for well-definedness on the word ball of M(G,Y) and for the
  // factorization ψ(A,g) = ψ(A^∧,g); φ = ψ on closed elements is then
  // checked to be a canonical morphism preserving m.
  inline CanonicalMorphism
  canonical_morphism_Fwedge(GeneratedGroup const& gg, FiniteInverseMonoid const& f,
                            GroupMap const& nu, std::string const& instance = "",
                            WedgeOptions const& opt = {}) {
    auto const an = analyze(f);
    if (!an.is_f_inverse) {
      throw Error(ErrorKind::not_f_inverse, *an.f_inverse_witness);
    }
    check_nu(gg.group, gg.gens, f, an, nu);
    Expansion const    my = Expansion::margolis_meakin_extended(gg);
    Expansion const    wedge = Expansion::wedge(gg);
    WedgeClosure const& j = wedge.closure();
    PsiContext const   psi(my, f, an, nu);
    CanonicalMorphism  out;
    auto&              report = out.report;

    auto const ball = psi_ball(psi, opt.max_len, report, instance);
    check_factorization(psi, j, ball, report, instance);
    if (auto r = report.find("factorization"); r && !r->passed()) {
      throw Error(ErrorKind::factorization_failure, r->witness.value_or(""));
    }

    // φ on M^∧(G,Y).
    auto src = to_table(wedge, true, opt.cap);
    for (auto const& e : src.elements) {
      out.table.push_back(psi(e));
    }
    detail::check_morphism(src, f, an, out.table, psi.eval().values(), nu,
                           "universal-Mwedge", instance, report);
    {
      auto        t = report.tally("universal-Mwedge", "m-preserving", instance);
      auto const& m = src.monoid;
      for (std::size_t a = 0; a < m.order(); ++a) {
        std::size_t const ma = src.index_of(wedge.m(src.elements[a]));
        t.expect(out.table[ma] == an.m(out.table[a]),
                 [&] { return m.name(a); });
      }
    }
    {
      auto t = report.tally("universal-Mwedge", "phi-pi-equals-psi", instance);
      for (auto const& [a, v] : ball) {
        std::size_t const i = src.index_of({j(a.graph), a.point});
        t.expect(out.table[i] == v, [&] { return my.format(a); });
      }
    }
    out.source = std::move(src.elements);
    out.index = std::move(src.index);
    return out;
  }

}  // namespace fexp

#endif  // FEXP_VERIFY_HPP_
