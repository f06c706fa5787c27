#ifndef FEXP_TESTS_ORACLE_HPP_
#define FEXP_TESTS_ORACLE_HPP_

// Deliberately naive reference models used only by the tests. Graphs are
// std::set based, families are enumerated by brute force straight from the
// definitions, and monoid properties are decided by exhaustive scans.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <queue>
#include <set>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include <fexp/cayley.hpp>
#include <fexp/expansion.hpp>
#include <fexp/group.hpp>
#include <fexp/monoid.hpp>

namespace oracle {

  struct Group {
    std::vector<std::vector<int>> mul;
    std::vector<int>              inv;

    int order() const {
      return static_cast<int>(mul.size());
    }
  };

  inline Group group_of(fexp::FiniteGroup const& g) {
    Group out;
    int const n = static_cast<int>(g.order());
    out.mul.assign(n, std::vector<int>(n));
    out.inv.assign(n, 0);
    for (int a = 0; a < n; ++a) {
      for (int b = 0; b < n; ++b) {
        out.mul[a][b] = static_cast<int>(g.mul(a, b));
        if (out.mul[a][b] == 0) {
          out.inv[a] = b;
        }
      }
    }
    return out;
  }

  struct Graph {
    std::set<int>                 v;
    std::set<std::pair<int, int>> e;  // (src, letter)

    auto operator<=>(Graph const&) const = default;
  };

  struct Elem {
    Graph g;
    int   p = 0;

    auto operator<=>(Elem const&) const = default;
  };

  enum class Kind { connected, all, closed };

  // Letters 0..k-1 have the images in `x`; for the closed kind letters
  // k..k+n-1 are the barred letters, letter k+g having image g.
  struct Model {
    Group            grp;
    std::vector<int> img;
    int              x_count = 0;
    Kind             kind = Kind::connected;
    bool             barred = false;

    int dst(int src, int letter) const {
      return grp.mul[src][img[letter]];
    }

    int bar(int g) const {
      return x_count + g;
    }

    bool connected(Graph const& g) const {
      if (g.v.empty()) {
        return false;
      }
      std::set<int>   seen{*g.v.begin()};
      std::queue<int> q;
      q.push(*g.v.begin());
      while (!q.empty()) {
        int const a = q.front();
        q.pop();
        for (auto const& [s, l] : g.e) {
          int const d = dst(s, l);
          for (auto [from, to] : {std::pair{s, d}, std::pair{d, s}}) {
            if (from == a && seen.insert(to).second) {
              q.push(to);
            }
          }
        }
      }
      return seen == g.v;
    }

    // Condition: every ordered vertex pair (a, b) carries the barred edge
    // labelled by a^-1 b.
    bool closed(Graph const& g) const {
      for (int a : g.v) {
        for (int b : g.v) {
          if (!g.e.count({a, bar(grp.mul[grp.inv[a]][b])})) {
            return false;
          }
        }
      }
      return true;
    }

    bool member(Graph const& g) const {
      if (!g.v.count(0)) {
        return false;
      }
      switch (kind) {
        case Kind::connected: return connected(g);
        case Kind::all: return true;
        case Kind::closed: return closed(g);
      }
      return false;
    }

    Graph translate(int h, Graph const& g) const {
      Graph out;
      for (int a : g.v) {
        out.v.insert(grp.mul[h][a]);
      }
      for (auto const& [s, l] : g.e) {
        out.e.insert({grp.mul[h][s], l});
      }
      return out;
    }

    // Smallest closed supergraph on the same vertices, found as the
    // intersection of every closed supergraph (only feasible for tiny
    // groups).
    Graph brute_closure(Graph const& g) const {
      std::vector<std::pair<int, int>> free;
      for (int a : g.v) {
        for (int l = x_count; l < static_cast<int>(img.size()); ++l) {
          if (g.v.count(dst(a, l)) && !g.e.count({a, l})) {
            free.emplace_back(a, l);
          }
        }
      }
      std::optional<Graph> meet;
      for (std::uint64_t mask = 0; mask < (std::uint64_t(1) << free.size());
           ++mask) {
        Graph h = g;
        for (std::size_t i = 0; i < free.size(); ++i) {
          if (mask >> i & 1U) {
            h.e.insert(free[i]);
          }
        }
        if (!closed(h)) {
          continue;
        }
        if (!meet) {
          meet = h;
        } else {
          std::set<std::pair<int, int>> both;
          std::set_intersection(meet->e.begin(), meet->e.end(), h.e.begin(),
                                h.e.end(), std::inserter(both, both.begin()));
          meet->e = both;
        }
      }
      return *meet;
    }

    // Direct closure: add every barred edge (a, bar(a^-1 b)).
    Graph close(Graph g) const {
      for (int a : g.v) {
        for (int b : g.v) {
          g.e.insert({a, bar(grp.mul[grp.inv[a]][b])});
        }
      }
      return g;
    }

    Elem identity() const {
      Graph g{{0}, {}};
      return {kind == Kind::closed ? close(g) : g, 0};
    }

    Elem mul(Elem const& a, Elem const& b) const {
      Graph g = a.g;
      Graph t = translate(a.p, b.g);
      g.v.insert(t.v.begin(), t.v.end());
      g.e.insert(t.e.begin(), t.e.end());
      if (kind == Kind::closed) {
        g = close(g);
      }
      return {g, grp.mul[a.p][b.p]};
    }

    Elem inv(Elem const& a) const {
      return {translate(grp.inv[a.p], a.g), grp.inv[a.p]};
    }

    Elem letter(int l) const {
      Graph g{{0, dst(0, l)}, {{0, l}}};
      return {kind == Kind::closed ? close(g) : g, dst(0, l)};
    }

    // Largest element with point h: ({0,h}, no edges) for the all kind,
    // the closed two-vertex graph for the closed kind.
    Elem class_max(int h) const {
      Graph g{{0, h}, {}};
      return {kind == Kind::closed ? close(g) : g, h};
    }

    std::vector<std::pair<int, int>> edges_on(std::set<int> const& vs) const {
      std::vector<std::pair<int, int>> out;
      for (int a : vs) {
        for (int l = 0; l < static_cast<int>(img.size()); ++l) {
          if (vs.count(dst(a, l))) {
            out.emplace_back(a, l);
          }
        }
      }
      return out;
    }

    // Every member graph, by brute force over vertex sets and edge subsets.
    // For the closed kind only X-edges are chosen freely when
    // `structured_closed` is set; otherwise every Y-edge subset is tried.
    std::vector<Graph> graphs(bool structured_closed = true) const {
      std::vector<Graph> out;
      int const          n = grp.order();
      for (int vm = 1; vm < (1 << n); vm += 2) {
        std::set<int> vs;
        for (int a = 0; a < n; ++a) {
          if (vm >> a & 1) {
            vs.insert(a);
          }
        }
        auto es = edges_on(vs);
        bool const structured = kind == Kind::closed && structured_closed;
        if (structured) {
          es.erase(std::remove_if(es.begin(), es.end(),
                                  [&](auto const& e) {
                                    return e.second >= x_count;
                                  }),
                   es.end());
        }
        for (std::uint64_t em = 0; em < (std::uint64_t(1) << es.size());
             ++em) {
          Graph g{vs, {}};
          for (std::size_t i = 0; i < es.size(); ++i) {
            if (em >> i & 1U) {
              g.e.insert(es[i]);
            }
          }
          if (structured) {
            g = close(g);
          }
          if (member(g)) {
            out.push_back(std::move(g));
          }
        }
      }
      return out;
    }

    std::vector<Elem> elements(bool structured_closed = true) const {
      std::vector<Elem> out;
      for (auto const& g : graphs(structured_closed)) {
        for (int p : g.v) {
          out.push_back({g, p});
        }
      }
      std::sort(out.begin(), out.end());
      return out;
    }

    // Closure of the generator images (and, for the all kind, the class
    // maxima) under multiplication by generators and their inverses.
    std::vector<Elem> by_words() const {
      std::vector<Elem> gens;
      for (int l = 0; l < static_cast<int>(img.size()); ++l) {
        gens.push_back(letter(l));
        gens.push_back(inv(gens.back()));
      }
      if (kind == Kind::all) {
        for (int h = 1; h < grp.order(); ++h) {
          gens.push_back(class_max(h));
        }
      }
      std::set<Elem>   seen{identity()};
      std::queue<Elem> q;
      q.push(identity());
      while (!q.empty()) {
        Elem const s = q.front();
        q.pop();
        for (auto const& t : gens) {
          Elem u = mul(s, t);
          if (seen.insert(u).second) {
            q.push(std::move(u));
          }
        }
      }
      return {seen.begin(), seen.end()};
    }
  };

  inline Model model_of(fexp::Expansion const& fam) {
    Model m;
    m.grp = group_of(fam.group());
    auto const& gens = fam.gens();
    for (std::size_t l = 0; l < gens.size(); ++l) {
      if (!gens.is_barred(l)) {
        m.img.push_back(static_cast<int>(gens[l].image));
      }
    }
    m.x_count = static_cast<int>(m.img.size());
    switch (fam.flavor()) {
      case fexp::Flavor::connected: m.kind = Kind::connected; break;
      case fexp::Flavor::all: m.kind = Kind::all; break;
      case fexp::Flavor::closed: m.kind = Kind::closed; break;
    }
    m.barred = gens.kind() == fexp::GeneratorKind::extended;
    if (m.barred) {
      for (int g = 0; g < m.grp.order(); ++g) {
        m.img.push_back(g);
      }
    }
    return m;
  }

  // Library element -> oracle element. Letter indices are translated through
  // the names so that the two numberings need not agree.
  inline Elem from_library(fexp::Expansion const& fam, Model const& m,
                           fexp::Element const& a) {
    auto const& cay = fam.cayley();
    auto const& gens = fam.gens();
    Elem        out;
    out.p = static_cast<int>(a.point);
    for (int v = 0; v < m.grp.order(); ++v) {
      if (a.graph.has_vertex(v)) {
        out.g.v.insert(v);
      }
    }
    a.graph.edges.for_each([&](std::size_t id) {
      std::size_t const l = cay.edge_letter(id);
      int const ol = gens.is_barred(l)
                         ? m.bar(static_cast<int>(gens[l].image))
                         : static_cast<int>(l);
      out.g.e.insert({static_cast<int>(cay.edge_src(id)), ol});
    });
    return out;
  }

  inline std::vector<Elem> from_library(fexp::Expansion const&            fam,
                                        Model const&                      m,
                                        std::vector<fexp::Element> const& v) {
    std::vector<Elem> out;
    for (auto const& a : v) {
      out.push_back(from_library(fam, m, a));
    }
    std::sort(out.begin(), out.end());
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // Abstract inverse monoids by exhaustive scans
  ////////////////////////////////////////////////////////////////////////

  struct Monoid {
    std::vector<std::vector<std::size_t>> t;
    std::vector<std::size_t>              inv;

    std::size_t size() const {
      return t.size();
    }

    bool idem(std::size_t a) const {
      return t[a][a] == a;
    }

    // s <= u iff s = e u for some idempotent e.
    bool leq(std::size_t s, std::size_t u) const {
      for (std::size_t e = 0; e < size(); ++e) {
        if (idem(e) && t[e][u] == s) {
          return true;
        }
      }
      return false;
    }

    // s σ u iff e s = e u for some idempotent e.
    bool sigma(std::size_t s, std::size_t u) const {
      for (std::size_t e = 0; e < size(); ++e) {
        if (idem(e) && t[e][s] == t[e][u]) {
          return true;
        }
      }
      return false;
    }

    bool e_unitary() const {
      for (std::size_t e = 0; e < size(); ++e) {
        for (std::size_t s = 0; s < size(); ++s) {
          if (idem(e) && leq(e, s) && !idem(s)) {
            return false;
          }
        }
      }
      return true;
    }

    // The maximum of the σ-class of s, if there is one.
    std::optional<std::size_t> class_max(std::size_t s) const {
      for (std::size_t c = 0; c < size(); ++c) {
        if (!sigma(s, c)) {
          continue;
        }
        bool top = true;
        for (std::size_t d = 0; d < size() && top; ++d) {
          top = !sigma(s, d) || leq(d, c);
        }
        if (top) {
          return c;
        }
      }
      return std::nullopt;
    }

    bool f_inverse() const {
      for (std::size_t s = 0; s < size(); ++s) {
        if (!class_max(s)) {
          return false;
        }
      }
      return true;
    }
  };

  inline Monoid monoid_of(fexp::FiniteInverseMonoid const& s) {
    return {s.table(), s.inverses()};
  }

  ////////////////////////////////////////////////////////////////////////
  // Words and canonical morphisms
  ////////////////////////////////////////////////////////////////////////

  // For every element of a table-form monoid generated by the given letter
  // values (and inverses), a word over them reaching it, by BFS from the
  // identity. Entries are (letter index, exponent).
  inline std::vector<std::optional<std::vector<std::pair<std::size_t, int>>>>
  words_reaching(fexp::FiniteInverseMonoid const& s,
                 std::vector<std::size_t> const&  letters) {
    std::vector<std::optional<std::vector<std::pair<std::size_t, int>>>> w(
        s.order());
    w[s.identity()] = std::vector<std::pair<std::size_t, int>>{};
    std::queue<std::size_t> q;
    q.push(s.identity());
    while (!q.empty()) {
      std::size_t const a = q.front();
      q.pop();
      for (std::size_t l = 0; l < letters.size(); ++l) {
        for (int e : {1, -1}) {
          std::size_t const v = e > 0 ? letters[l] : s.inv(letters[l]);
          std::size_t const b = s.mul(a, v);
          if (!w[b]) {
            w[b] = *w[a];
            w[b]->emplace_back(l, e);
            q.push(b);
          }
        }
      }
    }
    return w;
  }

  inline std::size_t eval_in(fexp::FiniteInverseMonoid const& s,
                             std::vector<std::size_t> const& letters,
                             std::vector<std::pair<std::size_t, int>> const& w) {
    std::size_t v = s.identity();
    for (auto const& [l, e] : w) {
      v = s.mul(v, e > 0 ? letters[l] : s.inv(letters[l]));
    }
    return v;
  }

  ////////////////////////////////////////////////////////////////////////
  // Enriched terms over one letter, enumerated by size
  ////////////////////////////////////////////////////////////////////////

  struct Tree {
    enum Op { one, x, cat, inv, m } op = one;
    std::vector<Tree> kids;
  };

  inline std::vector<std::vector<Tree>> trees_up_to(std::size_t max_size) {
    std::vector<std::vector<Tree>> by(max_size + 1);
    if (max_size >= 1) {
      by[1] = {Tree{Tree::one, {}}, Tree{Tree::x, {}}};
    }
    for (std::size_t n = 2; n <= max_size; ++n) {
      for (auto const& c : by[n - 1]) {
        by[n].push_back(Tree{Tree::inv, {c}});
        by[n].push_back(Tree{Tree::m, {c}});
      }
      for (std::size_t l = 1; l + 1 < n; ++l) {
        for (auto const& a : by[l]) {
          for (auto const& b : by[n - 1 - l]) {
            by[n].push_back(Tree{Tree::cat, {a, b}});
          }
        }
      }
    }
    return by;
  }

  inline std::string render(Tree const& t, std::string const& letter) {
    switch (t.op) {
      case Tree::one: return "1";
      case Tree::x: return letter;
      case Tree::cat:
        return "(" + render(t.kids[0], letter) + " " + render(t.kids[1], letter)
               + ")";
      case Tree::inv: return "(" + render(t.kids[0], letter) + ")^-1";
      case Tree::m: return "m(" + render(t.kids[0], letter) + ")";
    }
    return {};
  }

  template <typename T>
  T eval_tree(Tree const& t, T const& one, T const& x,
              std::function<T(T const&, T const&)> const& mul,
              std::function<T(T const&)> const&           inv,
              std::function<T(T const&)> const&           m) {
    switch (t.op) {
      case Tree::one: return one;
      case Tree::x: return x;
      case Tree::cat:
        return mul(eval_tree(t.kids[0], one, x, mul, inv, m),
                   eval_tree(t.kids[1], one, x, mul, inv, m));
      case Tree::inv: return inv(eval_tree(t.kids[0], one, x, mul, inv, m));
      case Tree::m: return m(eval_tree(t.kids[0], one, x, mul, inv, m));
    }
    return one;
  }

}  // namespace oracle

#endif  // FEXP_TESTS_ORACLE_HPP_
