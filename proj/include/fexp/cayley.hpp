#ifndef FEXP_CAYLEY_HPP_
#define FEXP_CAYLEY_HPP_

#include <algorithm>
#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <queue>
#include <random>
#include <span>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "bitset.hpp"
#include "error.hpp"
#include "group.hpp"

namespace fexp {

  // A finite subgraph of a Cayley graph. Only positive edges are stored; the
  // negative edge of each is implicit. Edge ids are src * |letters| + letter
  // in the ambient CayleyGraph.
  struct Subgraph {
    std::uint64_t vertices = 1;
    EdgeBits      edges;

    bool has_vertex(std::size_t v) const noexcept {
      return (vertices >> v) & 1U;
    }

    std::size_t vertex_count() const noexcept {
      return static_cast<std::size_t>(std::popcount(vertices));
    }

    // Union of graphs; this is the meet in the anti-inclusion order.
    Subgraph& operator|=(Subgraph const& o) noexcept {
      vertices |= o.vertices;
      edges |= o.edges;
      return *this;
    }

    friend Subgraph operator|(Subgraph a, Subgraph const& b) noexcept {
      return a |= b;
    }

    bool is_subgraph_of(Subgraph const& o) const noexcept {
      return (vertices & ~o.vertices) == 0 && edges.is_subset_of(o.edges);
    }

    friend bool operator==(Subgraph const&, Subgraph const&) = default;
    friend auto operator<=>(Subgraph const&, Subgraph const&) = default;
  };

  struct SubgraphHash {
    std::size_t operator()(Subgraph const& g) const noexcept {
      return g.edges.hash() ^ (g.vertices * 0x9e3779b97f4a7c15ULL);
    }
  };

  // A traversal of one edge: for exponent -1 this is the negative edge, so
  // src/dst are the traversal endpoints, not the stored orientation.
  struct Edge {
    elem_t      src;
    std::size_t letter;
    int         exponent;
    elem_t      dst;

    Edge inverse() const noexcept {
      return {dst, letter, -exponent, src};
    }

    friend bool operator==(Edge const&, Edge const&) = default;
  };

  struct Path {
    elem_t            base = 0;
    std::vector<Edge> edges;

    elem_t start() const noexcept {
      return edges.empty() ? base : edges.front().src;
    }

    elem_t end() const noexcept {
      return edges.empty() ? base : edges.back().dst;
    }

    bool empty() const noexcept {
      return edges.empty();
    }
  };

  class CayleyGraph {
   public:
    static constexpr std::size_t max_vertices = 64;

    CayleyGraph(FiniteGroup group, GeneratorSet gens)
        : _group(std::move(group)), _gens(std::move(gens)) {
      std::size_t const n = _group.order();
      std::size_t const l = _gens.size();
      if (n > max_vertices || n * l > EdgeBits::capacity) {
        throw Error(ErrorKind::too_large,
                    "Cayley graph with " + std::to_string(n) + " vertices and "
                        + std::to_string(n * l)
                        + " positive edges exceeds the supported size");
      }
      _dst.resize(n * l);
      for (std::size_t v = 0; v < n; ++v) {
        for (std::size_t y = 0; y < l; ++y) {
          _dst[v * l + y] = _group.mul(v, _gens[y].image);
        }
      }
      std::vector<std::size_t> by_name(l);
      for (std::size_t y = 0; y < l; ++y) {
        by_name[y] = y;
      }
      std::sort(by_name.begin(), by_name.end(), [this](auto a, auto b) {
        return _gens[a].name < _gens[b].name;
      });
      _letter_rank.resize(l);
      for (std::size_t r = 0; r < l; ++r) {
        _letter_rank[by_name[r]] = r;
      }
      _sorted_edges.resize(n * l);
      for (std::size_t v = 0; v < n; ++v) {
        for (std::size_t r = 0; r < l; ++r) {
          _sorted_edges[v * l + r] = v * l + by_name[r];
        }
      }
    }

    FiniteGroup const& group() const noexcept {
      return _group;
    }

    GeneratorSet const& gens() const noexcept {
      return _gens;
    }

    std::size_t letter_count() const noexcept {
      return _gens.size();
    }

    std::size_t edge_count() const noexcept {
      return _dst.size();
    }

    std::size_t edge_id(std::size_t src, std::size_t letter) const noexcept {
      return src * _gens.size() + letter;
    }

    elem_t edge_src(std::size_t id) const noexcept {
      return static_cast<elem_t>(id / _gens.size());
    }

    std::size_t edge_letter(std::size_t id) const noexcept {
      return id % _gens.size();
    }

    elem_t edge_dst(std::size_t id) const noexcept {
      return _dst[id];
    }

    std::size_t edge_id(Edge const& e) const noexcept {
      return e.exponent > 0 ? edge_id(e.src, e.letter)
                            : edge_id(e.dst, e.letter);
    }

    // All positive edge ids ordered by (src, letter name).
    std::vector<std::size_t> const& edges_in_order() const noexcept {
      return _sorted_edges;
    }

    Edge traverse(elem_t from, SignedLetter s) const noexcept {
      return {from,
              s.letter,
              s.exponent,
              _group.mul(from, letter_value(_group, _gens, s))};
    }

    Subgraph origin() const noexcept {
      return Subgraph{};
    }

    Subgraph vertex_set(std::uint64_t vertices) const noexcept {
      return Subgraph{vertices, {}};
    }

    // Smallest subgraph containing the given edge traversals and vertices.
    Subgraph spanned(std::span<Edge const>   edges,
                     std::span<elem_t const> vertices = {}) const {
      Subgraph g{0, {}};
      for (auto v : vertices) {
        g.vertices |= std::uint64_t(1) << v;
      }
      for (auto const& e : edges) {
        g.vertices |= (std::uint64_t(1) << e.src) | (std::uint64_t(1) << e.dst);
        g.edges.set(edge_id(e));
      }
      return g;
    }

    // The graph spanned by a path; an empty path spans its base vertex.
    Subgraph spanned(Path const& p) const {
      elem_t const base = p.start();
      return spanned(p.edges, std::span<elem_t const>(&base, 1));
    }

    // Vertex set nonempty and every edge's endpoints present.
    bool is_valid(Subgraph const& g) const noexcept {
      if (g.vertices == 0) {
        return false;
      }
      if (_group.order() < 64 && (g.vertices >> _group.order()) != 0) {
        return false;
      }
      bool ok = true;
      g.edges.for_each([&](std::size_t id) {
        ok = ok && id < _dst.size() && g.has_vertex(edge_src(id))
             && g.has_vertex(edge_dst(id));
      });
      return ok;
    }

    bool is_connected(Subgraph const& g) const {
      if (g.vertices == 0) {
        return true;
      }
      std::uint64_t const start = g.vertices & (~g.vertices + 1);
      std::uint64_t       reached = start;
      bool                grew = true;
      while (grew) {
        grew = false;
        g.edges.for_each([&](std::size_t id) {
          std::uint64_t const s = std::uint64_t(1) << edge_src(id);
          std::uint64_t const d = std::uint64_t(1) << edge_dst(id);
          if (((reached & s) != 0) != ((reached & d) != 0)) {
            reached |= s | d;
            grew = true;
          }
        });
      }
      return reached == g.vertices;
    }

    // Left translation by g: vertices v -> gv, edges (v, y) -> (gv, y).
    Subgraph translate(elem_t g, Subgraph const& a) const {
      if (g == 0) {
        return a;
      }
      Subgraph    r{0, {}};
      std::size_t l = _gens.size();
      std::uint64_t vs = a.vertices;
      while (vs != 0) {
        auto const v = static_cast<std::size_t>(std::countr_zero(vs));
        r.vertices |= std::uint64_t(1) << _group.mul(g, v);
        vs &= vs - 1;
      }
      a.edges.for_each([&](std::size_t id) {
        r.edges.set(_group.mul(g, id / l) * l + id % l);
      });
      return r;
    }

    Word path_label(Path const& p) const {
      Word w;
      w.reserve(p.edges.size());
      for (auto const& e : p.edges) {
        w.push_back({e.letter, e.exponent});
      }
      return w;
    }

    Path path_inverse(Path const& p) const {
      Path r{p.end(), {}};
      for (auto it = p.edges.rbegin(); it != p.edges.rend(); ++it) {
        r.edges.push_back(it->inverse());
      }
      return r;
    }

    // The path from `start` reading the word w.
    Path path_from_word(elem_t start, Word const& w) const {
      Path   p{start, {}};
      elem_t at = start;
      for (auto const& s : w) {
        p.edges.push_back(traverse(at, s));
        at = p.edges.back().dst;
      }
      return p;
    }

    Path concat(Path a, Path const& b) const {
      a.edges.insert(a.edges.end(), b.edges.begin(), b.edges.end());
      return a;
    }

    // A shortest path inside g from `from` to `to` (breadth-first search with
    // incident edges in (src, letter name) order).
    std::optional<Path>
    shortest_path(Subgraph const& g, elem_t from, elem_t to) const {
      if (!g.has_vertex(from) || !g.has_vertex(to)) {
        return std::nullopt;
      }
      std::size_t const                n = _group.order();
      std::vector<std::optional<Edge>> via(n);
      std::vector<bool>                seen(n, false);
      std::queue<elem_t>               q;
      seen[from] = true;
      q.push(from);
      while (!q.empty() && !seen[to]) {
        elem_t const v = q.front();
        q.pop();
        for (auto const& e : incident(g, v)) {
          if (!seen[e.dst]) {
            seen[e.dst] = true;
            via[e.dst] = e;
            q.push(e.dst);
          }
        }
      }
      if (!seen[to]) {
        return std::nullopt;
      }
      Path p{from, {}};
      for (elem_t v = to; v != from; v = via[v]->src) {
        p.edges.push_back(*via[v]);
      }
      std::reverse(p.edges.begin(), p.edges.end());
      return p;
    }

    // A path from the origin to g traversing every edge of the connected
    // graph at least once. The simple path P = shortest_path(0, g) is walked
    // once; every other edge is traversed out and back by a depth-first walk
    // started from the vertices of P in turn.
    Path spanning_path(Subgraph const& gr, elem_t g) const {
      return spanning_path_impl(gr, g, nullptr);
    }

    // As spanning_path, but with incident edges visited in a random order and
    // occasional extra out-and-back traversals, so that distinct calls tend
    // to produce distinct spanning paths of the same graph.
    template <typename Rng>
    Path random_spanning_path(Subgraph const& gr, elem_t g, Rng& rng) const {
      std::mt19937_64 local(rng());
      return spanning_path_impl(gr, g, &local);
    }

    // Incident edge traversals out of v inside g, in (src, letter name) order
    // of the underlying positive edges. A loop is listed once.
    std::vector<Edge> incident(Subgraph const& g, elem_t v) const {
      std::vector<Edge> out;
      std::size_t const l = _gens.size();
      std::size_t const n = _group.order();
      for (std::size_t s = 0; s < n; ++s) {
        if (!g.has_vertex(s)) {
          continue;
        }
        for (std::size_t r = 0; r < l; ++r) {
          std::size_t const id = _sorted_edges[s * l + r];
          if (!g.edges.test(id)) {
            continue;
          }
          std::size_t const y = id % l;
          if (s == v) {
            out.push_back({v, y, 1, _dst[id]});
          } else if (_dst[id] == v) {
            out.push_back({v, y, -1, static_cast<elem_t>(s)});
          }
        }
      }
      return out;
    }

    // "V={e0,e1}; E={(e0,x)}" with vertices by index and edges by
    // (src, letter name).
    std::string describe(Subgraph const& g) const {
      std::string out = "V={";
      bool        first = true;
      for (std::size_t v = 0; v < _group.order(); ++v) {
        if (g.has_vertex(v)) {
          out += first ? "" : ",";
          out += _group.name(v);
          first = false;
        }
      }
      out += "}; E={";
      first = true;
      for (auto id : _sorted_edges) {
        if (g.edges.test(id)) {
          out += first ? "(" : ",(";
          out += _group.name(edge_src(id)) + "," + _gens[edge_letter(id)].name
                 + ")";
          first = false;
        }
      }
      out += "}";
      return out;
    }

    std::string describe(Edge const& e) const {
      return "(" + _group.name(e.src) + "," + _gens[e.letter].name
             + (e.exponent < 0 ? "^-1" : "") + "," + _group.name(e.dst) + ")";
    }

    std::string describe(Path const& p) const {
      if (p.empty()) {
        return "eps_" + _group.name(p.base);
      }
      std::string out;
      for (auto const& e : p.edges) {
        out += describe(e);
      }
      return out;
    }

    // Graphviz rendering: one node statement per vertex, one edge statement
    // per positive edge sorted by (src, letter name); barred edges dashed.
    std::string to_dot(Subgraph const& g, std::string const& name = "G") const {
      std::ostringstream out;
      out << "digraph \"" << name << "\" {\n";
      for (std::size_t v = 0; v < _group.order(); ++v) {
        if (g.has_vertex(v)) {
          out << "  \"" << _group.name(v) << "\";\n";
        }
      }
      for (auto id : _sorted_edges) {
        if (!g.edges.test(id)) {
          continue;
        }
        std::size_t const y = edge_letter(id);
        out << "  \"" << _group.name(edge_src(id)) << "\" -> \""
            << _group.name(edge_dst(id)) << "\" [label=\"" << _gens[y].name
            << "\"" << (_gens.is_barred(y) ? ", style=dashed" : "") << "];\n";
      }
      out << "}\n";
      return out.str();
    }

    // The whole Cayley graph as a subgraph.
    Subgraph full() const noexcept {
      Subgraph g{0, {}};
      for (std::size_t v = 0; v < _group.order(); ++v) {
        g.vertices |= std::uint64_t(1) << v;
      }
      for (std::size_t id = 0; id < _dst.size(); ++id) {
        g.edges.set(id);
      }
      return g;
    }

   private:
    Path spanning_path_impl(Subgraph const&  gr,
                            elem_t           g,
                            std::mt19937_64* rng) const {
      if (!gr.has_vertex(0) || !gr.has_vertex(g)) {
        throw Error(ErrorKind::vertex_absent,
                    "vertex " + _group.name(gr.has_vertex(0) ? g : 0)
                        + " is not in " + describe(gr));
      }
      if (!is_connected(gr)) {
        throw Error(ErrorKind::not_connected, describe(gr));
      }
      std::optional<Path> trunk;
      if (rng == nullptr) {
        trunk = shortest_path(gr, 0, g);
      } else {
        trunk = random_simple_path(gr, 0, g, *rng);
      }
      std::vector<bool> visited(_group.order(), false);
      EdgeBits          used;
      elem_t            at = 0;
      visited[0] = true;
      for (auto const& e : trunk->edges) {
        visited[e.dst] = true;
        used.set(edge_id(e));
      }
      Path out{0, {}};
      auto excursion = [&](auto&& self, elem_t v) -> void {
        auto inc = incident(gr, v);
        if (rng != nullptr) {
          std::shuffle(inc.begin(), inc.end(), *rng);
        }
        for (auto const& e : inc) {
          if (used.test(edge_id(e))) {
            continue;
          }
          used.set(edge_id(e));
          out.edges.push_back(e);
          if (!visited[e.dst]) {
            visited[e.dst] = true;
            self(self, e.dst);
          }
          out.edges.push_back(e.inverse());
          if (rng != nullptr && (*rng)() % 4 == 0) {
            out.edges.push_back(e);
            out.edges.push_back(e.inverse());
          }
        }
      };
      excursion(excursion, at);
      for (auto const& e : trunk->edges) {
        out.edges.push_back(e);
        at = e.dst;
        excursion(excursion, at);
      }
      return out;
    }

    std::optional<Path> random_simple_path(Subgraph const&  gr,
                                           elem_t           from,
                                           elem_t           to,
                                           std::mt19937_64& rng) const {
      std::vector<bool> seen(_group.order(), false);
      Path              p{from, {}};
      auto dfs = [&](auto&& self, elem_t v) -> bool {
        if (v == to) {
          return true;
        }
        seen[v] = true;
        auto inc = incident(gr, v);
        std::shuffle(inc.begin(), inc.end(), rng);
        for (auto const& e : inc) {
          if (!seen[e.dst]) {
            p.edges.push_back(e);
            if (self(self, e.dst)) {
              return true;
            }
            p.edges.pop_back();
          }
        }
        return false;
      };
      if (!dfs(dfs, from)) {
        return std::nullopt;
      }
      return p;
    }

    FiniteGroup              _group;
    GeneratorSet             _gens;
    std::vector<elem_t>      _dst;
    std::vector<std::size_t> _letter_rank;
    std::vector<std::size_t> _sorted_edges;
  };

}  // namespace fexp

#endif  // FEXP_CAYLEY_HPP_
