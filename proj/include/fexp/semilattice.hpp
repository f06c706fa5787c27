#ifndef FEXP_SEMILATTICE_HPP_
#define FEXP_SEMILATTICE_HPP_

#include <concepts>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <random>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "error.hpp"
#include "expansion.hpp"
#include "report.hpp"

namespace fexp {

  // A meet-semilattice whose elements are values of L::value_type; the
  // order is x <= y iff x ∧ y = x.
  template <typename L>
  concept Semilattice = requires(L const& l, typename L::value_type const& a) {
    typename L::value_type;
    { l.meet(a, a) } -> std::convertible_to<typename L::value_type>;
    { l.leq(a, a) } -> std::convertible_to<bool>;
    { l.describe(a) } -> std::convertible_to<std::string>;
  };

  // A finite semilattice on indices 0..n-1 with a computed meet.
  class FiniteSemilattice {
   public:
    using value_type = std::size_t;
    using meet_type = std::function<std::size_t(std::size_t, std::size_t)>;

    FiniteSemilattice(std::size_t n, meet_type meet,
                      std::vector<std::string> names = {})
        : _n(n), _meet(std::move(meet)), _names(std::move(names)) {}

    static FiniteSemilattice
    from_table(std::vector<std::vector<std::size_t>> table,
               std::vector<std::string>              names = {}) {
      auto t = std::make_shared<std::vector<std::vector<std::size_t>> const>(
          std::move(table));
      std::size_t const n = t->size();
      for (auto const& row : *t) {
        for (auto v : row) {
          if (row.size() != n || v >= n) {
            throw Error(ErrorKind::invalid_input, "malformed meet table");
          }
        }
      }
      return FiniteSemilattice(
          n, [t](std::size_t a, std::size_t b) { return (*t)[a][b]; },
          std::move(names));
    }

    // The chain 0 < 1 < ... < n-1.
    static FiniteSemilattice chain(std::size_t n) {
      return FiniteSemilattice(
          n, [](std::size_t a, std::size_t b) { return a < b ? a : b; });
    }

    std::size_t size() const noexcept {
      return _n;
    }

    std::size_t meet(std::size_t a, std::size_t b) const {
      return _meet(a, b);
    }

    // The same semilattice with every meet precomputed into a flat table.
    FiniteSemilattice tabulated() const {
      auto t = std::make_shared<std::vector<std::uint32_t>>(_n * _n);
      for (std::size_t a = 0; a < _n; ++a) {
        for (std::size_t b = a; b < _n; ++b) {
          auto const m = static_cast<std::uint32_t>(_meet(a, b));
          (*t)[a * _n + b] = m;
          (*t)[b * _n + a] = m;
        }
      }
      std::size_t const n = _n;
      return FiniteSemilattice(
          n,
          [t = std::shared_ptr<std::vector<std::uint32_t> const>(t),
           n](std::size_t a, std::size_t b) { return (*t)[a * n + b]; },
          _names);
    }

    bool leq(std::size_t a, std::size_t b) const {
      return meet(a, b) == a;
    }

    std::string describe(std::size_t a) const {
      return a < _names.size() ? _names[a] : "#" + std::to_string(a);
    }

    std::vector<std::size_t> elements() const {
      std::vector<std::size_t> v(_n);
      for (std::size_t i = 0; i < _n; ++i) {
        v[i] = i;
      }
      return v;
    }

    std::optional<std::size_t> top() const {
      for (std::size_t t = 0; t < _n; ++t) {
        bool ok = true;
        for (std::size_t a = 0; a < _n && ok; ++a) {
          ok = leq(a, t);
        }
        if (ok) {
          return t;
        }
      }
      return std::nullopt;
    }

   private:
    std::size_t              _n;
    meet_type                _meet;
    std::vector<std::string> _names;
  };

  // The subgraph semilattice of a family, on Subgraph values: meet is union
  // (re-closed for the closed flavor), so A <= B iff A ⊇ B.
  class SubgraphSemilattice {
   public:
    using value_type = Subgraph;

    explicit SubgraphSemilattice(Expansion const& fam) : _fam(&fam) {}

    Subgraph meet(Subgraph const& a, Subgraph const& b) const {
      return _fam->meet(a, b);
    }

    bool leq(Subgraph const& a, Subgraph const& b) const {
      return b.is_subgraph_of(a);
    }

    std::string describe(Subgraph const& a) const {
      return _fam->format(a);
    }

    Expansion const& family() const noexcept {
      return *_fam;
    }

   private:
    Expansion const* _fam;
  };

  // The enumerated graphs of a family with an index, presented as a
  // FiniteSemilattice on indices.
  class SubgraphCarrier {
   public:
    SubgraphCarrier(Expansion const& fam,
                    std::uint64_t    cap = default_enumeration_cap)
        : _graphs(fam.enumerate_graphs(cap)) {
      _index.reserve(_graphs.size());
      for (std::size_t i = 0; i < _graphs.size(); ++i) {
        _index.emplace(_graphs[i], i);
      }
    }

    std::size_t size() const noexcept {
      return _graphs.size();
    }

    Subgraph const& operator[](std::size_t i) const {
      return _graphs[i];
    }

    std::vector<Subgraph> const& graphs() const noexcept {
      return _graphs;
    }

    std::optional<std::size_t> find(Subgraph const& g) const {
      auto it = _index.find(g);
      if (it == _index.end()) {
        return std::nullopt;
      }
      return it->second;
    }

    std::size_t index_of(Subgraph const& g) const {
      auto i = find(g);
      if (!i) {
        throw Error(ErrorKind::invalid_input, "graph is not in the carrier");
      }
      return *i;
    }

   private:
    std::vector<Subgraph>                                  _graphs;
    std::unordered_map<Subgraph, std::size_t, SubgraphHash> _index;
  };

  // The graphs of `fam` as an index semilattice; the carrier is shared.
  inline FiniteSemilattice
  as_semilattice(std::shared_ptr<SubgraphCarrier const> carrier,
                 Expansion const&                       fam) {
    std::vector<std::string> names;
    for (auto const& g : carrier->graphs()) {
      names.push_back(fam.format(g));
    }
    auto fam_copy = std::make_shared<Expansion const>(fam);
    return FiniteSemilattice(
        carrier->size(),
        [carrier, fam_copy](std::size_t a, std::size_t b) {
          return carrier->index_of(
              fam_copy->meet((*carrier)[a], (*carrier)[b]));
        },
        std::move(names));
  }

  ////////////////////////////////////////////////////////////////////////
  // Domains: what a property check ranges over
  ////////////////////////////////////////////////////////////////////////

  // Either every element (and every pair/triple) of a finite list, or a
  // seeded number of random draws from a generator.
  template <typename V>
  struct Domain {
    std::vector<V>                             elements;
    std::function<V(std::mt19937_64&)>         random;
    std::size_t                                samples = 0;
    std::uint64_t                              seed = 0;

    static Domain exhaustive(std::vector<V> elems) {
      Domain d;
      d.elements = std::move(elems);
      return d;
    }

    static Domain sampled(std::function<V(std::mt19937_64&)> gen,
                          std::size_t samples, std::uint64_t seed) {
      Domain d;
      d.random = std::move(gen);
      d.samples = samples;
      d.seed = seed;
      return d;
    }

    bool is_exhaustive() const noexcept {
      return samples == 0;
    }

    std::string mode() const {
      return is_exhaustive()
                 ? "exhaustive"
                 : "sampled n=" + std::to_string(samples)
                       + " seed=" + std::to_string(seed);
    }

    template <typename F>
    void each(F&& f) const {
      if (is_exhaustive()) {
        for (auto const& a : elements) {
          f(a);
        }
      } else {
        std::mt19937_64 rng(seed);
        for (std::size_t i = 0; i < samples; ++i) {
          f(random(rng));
        }
      }
    }

    template <typename F>
    void pairs(F&& f) const {
      if (is_exhaustive()) {
        for (auto const& a : elements) {
          for (auto const& b : elements) {
            f(a, b);
          }
        }
      } else {
        std::mt19937_64 rng(seed + 1);
        for (std::size_t i = 0; i < samples; ++i) {
          V const a = random(rng);
          V const b = random(rng);
          f(a, b);
        }
      }
    }

    template <typename F>
    void triples(F&& f) const {
      if (is_exhaustive()) {
        for (auto const& a : elements) {
          for (auto const& b : elements) {
            for (auto const& c : elements) {
              f(a, b, c);
            }
          }
        }
      } else {
        std::mt19937_64 rng(seed + 2);
        for (std::size_t i = 0; i < samples; ++i) {
          V const a = random(rng);
          V const b = random(rng);
          V const c = random(rng);
          f(a, b, c);
        }
      }
    }
  };

  // Idempotence, commutativity and associativity of the meet, plus the
  // optional top element being a meet-identity.
  template <Semilattice L>
  void check_semilattice_laws(L const&                              lat,
                              Domain<typename L::value_type> const& dom,
                              std::optional<typename L::value_type> top,
                              Report&                               report,
                              std::string const&                    instance) {
    {
      auto t = report.tally("semilattice", "idempotent", instance);
      dom.each([&](auto const& a) {
        t.expect(lat.meet(a, a) == a, [&] { return lat.describe(a); });
      });
    }
    {
      auto t = report.tally("semilattice", "commutative", instance);
      dom.pairs([&](auto const& a, auto const& b) {
        t.expect(lat.meet(a, b) == lat.meet(b, a), [&] {
          return lat.describe(a) + " , " + lat.describe(b);
        });
      });
    }
    {
      auto t = report.tally("semilattice", "associative", instance);
      dom.triples([&](auto const& a, auto const& b, auto const& c) {
        t.expect(lat.meet(lat.meet(a, b), c) == lat.meet(a, lat.meet(b, c)),
                 [&] {
                   return lat.describe(a) + " , " + lat.describe(b) + " , "
                          + lat.describe(c);
                 });
      });
    }
    if (top) {
      auto t = report.tally("semilattice", "top-is-meet-identity", instance);
      dom.each([&](auto const& a) {
        t.expect(lat.meet(*top, a) == a, [&] { return lat.describe(a); });
      });
    }
  }

}  // namespace fexp

#endif  // FEXP_SEMILATTICE_HPP_
