#ifndef FEXP_EXPANSION_HPP_
#define FEXP_EXPANSION_HPP_

#include <algorithm>
#include <cctype>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_set>
#include <utility>
#include <vector>

#include "cayley.hpp"
#include "error.hpp"
#include "group.hpp"
#include "wedge.hpp"

namespace fexp {

  // Which subgraphs of the Cayley graph a family admits (all must contain the
  // origin): connected ones, all of them, or the closed (hence connected)
  // ones over an extended generating set.
  enum class Flavor { connected, all, closed };

  inline char const* to_string(Flavor f) {
    switch (f) {
      case Flavor::connected: return "connected";
      case Flavor::all: return "all";
      case Flavor::closed: return "closed";
    }
    return "?";
  }

  // A pair (Γ, g) with g a vertex of Γ.
  struct Element {
    Subgraph graph;
    elem_t   point = 0;

    friend bool operator==(Element const&, Element const&) = default;
    friend auto operator<=>(Element const&, Element const&) = default;
  };

  struct ElementHash {
    std::size_t operator()(Element const& e) const noexcept {
      return SubgraphHash{}(e.graph) * 31 + e.point;
    }
  };

  using ElementSet = std::unordered_set<Element, ElementHash>;

  inline constexpr std::uint64_t default_enumeration_cap = 10'000'000;

  // The expansion monoids built on a family of subgraphs: M(G,X) (connected,
  // plain X), F(G,X) (all, plain X), M(G,Y) (connected, extended Y) and
  // M^∧(G,Y) (closed, extended Y). Product (A,g)(B,h) = (A ∪ gB, gh), closed
  // afterwards in the closed flavor; inverse (A,g)^-1 = (g^-1 A, g^-1).
  class Expansion {
   public:
    Expansion(FiniteGroup group, GeneratorSet gens, Flavor flavor)
        : _cay(std::move(group), std::move(gens)), _flavor(flavor) {
      if (_flavor == Flavor::closed) {
        _wedge.emplace(_cay);
      }
    }

    Expansion(Expansion const& o) : _cay(o._cay), _flavor(o._flavor) {
      if (_flavor == Flavor::closed) {
        _wedge.emplace(_cay);
      }
    }

    Expansion& operator=(Expansion const&) = delete;

    static Expansion margolis_meakin(GeneratedGroup const& gg) {
      return Expansion(gg.group, gg.gens, Flavor::connected);
    }

    static Expansion f_expansion(GeneratedGroup const& gg) {
      return Expansion(gg.group, gg.gens, Flavor::all);
    }

    static Expansion margolis_meakin_extended(GeneratedGroup const& gg) {
      return Expansion(
          gg.group, extend_generators(gg.group, gg.gens), Flavor::connected);
    }

    static Expansion wedge(GeneratedGroup const& gg) {
      return Expansion(
          gg.group, extend_generators(gg.group, gg.gens), Flavor::closed);
    }

    CayleyGraph const& cayley() const noexcept {
      return _cay;
    }

    FiniteGroup const& group() const noexcept {
      return _cay.group();
    }

    GeneratorSet const& gens() const noexcept {
      return _cay.gens();
    }

    Flavor flavor() const noexcept {
      return _flavor;
    }

    WedgeClosure const& closure() const {
      if (!_wedge) {
        throw Error(ErrorKind::wrong_flavor, "family is not closed");
      }
      return *_wedge;
    }

    // Γ_1 (or its closure, the barred-identity loop, in the closed flavor).
    Subgraph top() const {
      return normalize(_cay.origin());
    }

    Element identity() const {
      return {top(), 0};
    }

    bool is_member(Subgraph const& g) const {
      if (!g.has_vertex(0) || !_cay.is_valid(g)) {
        return false;
      }
      switch (_flavor) {
        case Flavor::connected: return _cay.is_connected(g);
        case Flavor::all: return true;
        case Flavor::closed: return _wedge->is_closed(g);
      }
      return false;
    }

    bool is_member(Element const& e) const {
      return e.graph.has_vertex(e.point) && is_member(e.graph);
    }

    // The semilattice meet: union, re-closed in the closed flavor.
    Subgraph meet(Subgraph const& a, Subgraph const& b) const {
      return normalize(a | b);
    }

    Element mul(Element const& a, Element const& b) const {
      return {normalize(a.graph | _cay.translate(a.point, b.graph)),
              group().mul(a.point, b.point)};
    }

    Element inv(Element const& a) const {
      elem_t const gi = group().inv(a.point);
      return {_cay.translate(gi, a.graph), gi};
    }

    // (Γ_y, [y]) where Γ_y has vertices 1, [y] and the positive edge
    // (1, y, [y]); closed in the closed flavor.
    Element generator_image(std::size_t letter) const {
      if (letter >= gens().size()) {
        throw Error(ErrorKind::unknown_letter,
                    "letter index " + std::to_string(letter));
      }
      elem_t const im = gens()[letter].image;
      Subgraph     g{(std::uint64_t(1) << im) | 1U, {}};
      g.edges.set(_cay.edge_id(0, letter));
      return {normalize(g), im};
    }

    Element generator_image(std::string_view name) const {
      return generator_image(gens().at(name));
    }

    Element eval_word(Word const& w) const {
      Element v = identity();
      for (auto const& s : w) {
        Element const gi = generator_image(s.letter);
        v = mul(v, s.exponent > 0 ? gi : inv(gi));
      }
      return v;
    }

    // (A,g) <= (B,h) iff g = h and B ⊆ A.
    bool leq(Element const& a, Element const& b) const noexcept {
      return a.point == b.point && b.graph.is_subgraph_of(a.graph);
    }

    bool sigma_related(Element const& a, Element const& b) const noexcept {
      return a.point == b.point;
    }

    bool is_idempotent(Element const& a) const noexcept {
      return a.point == 0;
    }

    // The maximum of the σ-class of g in F(G,X): ({1, g}, no edges).
    Element f_max_of_class(elem_t g) const {
      if (_flavor != Flavor::all) {
        throw Error(ErrorKind::wrong_flavor,
                    std::string("f_max_of_class needs flavor 'all', got '")
                        + to_string(_flavor) + "'");
      }
      return {_cay.vertex_set((std::uint64_t(1) << g) | 1U), g};
    }

    // The m-operation (maximum of the σ-class) for the F-inverse flavors.
    Element m(Element const& a) const {
      switch (_flavor) {
        case Flavor::all: return f_max_of_class(a.point);
        case Flavor::closed: {
          Subgraph g{(std::uint64_t(1) << a.point) | 1U, {}};
          g.edges.set(_cay.edge_id(0, gens().barred(a.point)));
          return {normalize(g), a.point};
        }
        case Flavor::connected: break;
      }
      throw Error(ErrorKind::wrong_flavor,
                  "the connected family has no m-operation");
    }

    // (⟨p⟩, ω(p)) for a path from the origin.
    Element eval_path_element(Path const& p) const {
      if (p.start() != 0) {
        throw Error(ErrorKind::invalid_input, "path does not start at origin");
      }
      return {normalize(_cay.spanned(p)), p.end()};
    }

    ////////////////////////////////////////////////////////////////////////
    // Enumeration
    ////////////////////////////////////////////////////////////////////////

    // Number of candidate subgraphs the direct enumeration inspects
    // (saturating at uint64 max).
    std::uint64_t predicted_count() const {
      std::size_t const n = group().order();
      if (n > 31) {
        return std::numeric_limits<std::uint64_t>::max();
      }
      std::uint64_t total = 0;
      for (std::uint64_t rest = 0; rest < (std::uint64_t(1) << (n - 1));
           ++rest) {
        std::size_t const k = free_edges(rest << 1 | 1U).size();
        if (k >= 63) {
          return std::numeric_limits<std::uint64_t>::max();
        }
        std::uint64_t const add = std::uint64_t(1) << k;
        if (total > std::numeric_limits<std::uint64_t>::max() - add) {
          return std::numeric_limits<std::uint64_t>::max();
        }
        total += add;
      }
      return total;
    }

    // All graphs of the family: vertex subsets containing the origin in
    // increasing mask order, then subsets of the admissible edges on them.
    std::vector<Subgraph>
    enumerate_graphs(std::uint64_t cap = default_enumeration_cap) const {
      std::uint64_t const predicted = predicted_count();
      if (predicted > cap) {
        throw Error(ErrorKind::too_large,
                    "direct enumeration would inspect "
                        + (predicted == std::numeric_limits<std::uint64_t>::max()
                               ? std::string("more than 2^64")
                               : std::to_string(predicted))
                        + " subgraphs (cap " + std::to_string(cap) + ")");
      }
      std::vector<Subgraph> out;
      std::size_t const     n = group().order();
      for (std::uint64_t rest = 0; rest < (std::uint64_t(1) << (n - 1));
           ++rest) {
        std::uint64_t const      vs = rest << 1 | 1U;
        std::vector<std::size_t> ids = free_edges(vs);
        EdgeBits const           forced
            = _flavor == Flavor::closed ? _wedge->barred_edges(vs) : EdgeBits{};
        for (std::uint64_t sub = 0; sub < (std::uint64_t(1) << ids.size());
             ++sub) {
          Subgraph g{vs, forced};
          for (std::size_t i = 0; i < ids.size(); ++i) {
            if ((sub >> i) & 1U) {
              g.edges.set(ids[i]);
            }
          }
          if (_flavor != Flavor::connected || _cay.is_connected(g)) {
            out.push_back(g);
          }
        }
      }
      return out;
    }

    std::vector<Element>
    enumerate_elements(std::uint64_t cap = default_enumeration_cap) const {
      std::vector<Element> out;
      for (auto const& g : enumerate_graphs(cap)) {
        for (std::size_t v = 0; v < group().order(); ++v) {
          if (g.has_vertex(v)) {
            out.push_back({g, static_cast<elem_t>(v)});
          }
        }
      }
      return out;
    }

    // Values of all words of length at most max_len over the generator
    // images and their inverses, sorted. F(G,X) is generated only in the
    // enriched signature, so for the 'all' flavor the values m(g) are
    // adjoined as extra letters.
    std::vector<Element> enumerate_by_words(std::size_t max_len) const {
      ElementSet           seen{identity()};
      std::vector<Element> frontier{identity()};
      std::vector<Element> gens_pm;
      for (std::size_t y = 0; y < gens().size(); ++y) {
        gens_pm.push_back(generator_image(y));
        gens_pm.push_back(inv(gens_pm.back()));
      }
      if (_flavor == Flavor::all) {
        for (std::size_t g = 1; g < group().order(); ++g) {
          gens_pm.push_back(f_max_of_class(static_cast<elem_t>(g)));
        }
      }
      for (std::size_t len = 0; len < max_len && !frontier.empty(); ++len) {
        std::vector<Element> next;
        for (auto const& s : frontier) {
          for (auto const& t : gens_pm) {
            Element u = mul(s, t);
            if (seen.insert(u).second) {
              next.push_back(std::move(u));
            }
          }
        }
        frontier = std::move(next);
      }
      std::vector<Element> out(seen.begin(), seen.end());
      std::sort(out.begin(), out.end());
      return out;
    }

    ////////////////////////////////////////////////////////////////////////
    // Text form "(V={e0,e1}; E={(e0,x)}; g=e1)"
    ////////////////////////////////////////////////////////////////////////

    std::string format(Element const& e) const {
      return "(" + _cay.describe(e.graph) + "; g=" + group().name(e.point)
             + ")";
    }

    std::string format(Subgraph const& g) const {
      return _cay.describe(g);
    }

    // Parses the text form and checks membership in the family.
    Element parse(std::string_view text) const {
      TextReader r{text};
      Element    e{Subgraph{0, {}}, 0};
      r.expect('(');
      r.expect_word("V");
      r.expect('=');
      r.expect('{');
      if (!r.peek('}')) {
        do {
          e.graph.vertices |= std::uint64_t(1) << element(r);
        } while (r.accept(','));
      }
      r.expect('}');
      r.expect(';');
      r.expect_word("E");
      r.expect('=');
      r.expect('{');
      if (!r.peek('}')) {
        do {
          r.expect('(');
          elem_t const src = element(r);
          r.expect(',');
          std::size_t const at = r.pos;
          auto const        y = gens().find(r.name());
          if (!y) {
            throw Error(ErrorKind::unknown_letter,
                        "unknown letter at position " + std::to_string(at));
          }
          r.expect(')');
          e.graph.edges.set(_cay.edge_id(src, *y));
        } while (r.accept(','));
      }
      r.expect('}');
      r.expect(';');
      r.expect_word("g");
      r.expect('=');
      e.point = element(r);
      r.expect(')');
      r.skip();
      if (r.pos != text.size()) {
        throw SyntaxError(r.pos, "trailing input");
      }
      if (!is_member(e)) {
        throw Error(ErrorKind::invalid_input,
                    format(e) + " is not an element of the "
                        + to_string(_flavor) + " family");
      }
      return e;
    }

   private:
    struct TextReader {
      std::string_view s;
      std::size_t      pos = 0;

      void skip() {
        while (pos < s.size()
               && std::isspace(static_cast<unsigned char>(s[pos]))) {
          ++pos;
        }
      }

      bool peek(char c) {
        skip();
        return pos < s.size() && s[pos] == c;
      }

      bool accept(char c) {
        if (peek(c)) {
          ++pos;
          return true;
        }
        return false;
      }

      void expect(char c) {
        if (!accept(c)) {
          throw SyntaxError(pos, std::string("expected '") + c + "'");
        }
      }

      std::string_view name() {
        skip();
        std::size_t const start = pos;
        while (pos < s.size()
               && (std::isalnum(static_cast<unsigned char>(s[pos]))
                   || s[pos] == '_' || s[pos] == '@' || s[pos] == '\''
                   || s[pos] == '.' || s[pos] == '-')) {
          ++pos;
        }
        if (pos == start) {
          throw SyntaxError(pos, "expected a name");
        }
        return s.substr(start, pos - start);
      }

      void expect_word(std::string_view w) {
        std::size_t const at = (skip(), pos);
        if (name() != w) {
          throw SyntaxError(at, "expected '" + std::string(w) + "'");
        }
      }
    };

    elem_t element(TextReader& r) const {
      std::size_t const at = (r.skip(), r.pos);
      auto const        v = group().index_of(r.name());
      if (!v) {
        throw Error(ErrorKind::invalid_input,
                    "unknown group element at position " + std::to_string(at));
      }
      return *v;
    }

    Subgraph normalize(Subgraph const& g) const {
      return _flavor == Flavor::closed ? (*_wedge)(g) : g;
    }

    // Edge ids with both endpoints in vs that the enumeration chooses freely
    // (barred edges are forced in the closed flavor).
    std::vector<std::size_t> free_edges(std::uint64_t vs) const {
      std::vector<std::size_t> ids;
      for (std::size_t id = 0; id < _cay.edge_count(); ++id) {
        if (_flavor == Flavor::closed && gens().is_barred(_cay.edge_letter(id))) {
          continue;
        }
        if (((vs >> _cay.edge_src(id)) & 1U) && ((vs >> _cay.edge_dst(id)) & 1U)) {
          ids.push_back(id);
        }
      }
      return ids;
    }

    CayleyGraph                 _cay;
    Flavor                      _flavor;
    std::optional<WedgeClosure> _wedge;
  };

}  // namespace fexp

#endif  // FEXP_EXPANSION_HPP_
