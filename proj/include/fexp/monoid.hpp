#ifndef FEXP_MONOID_HPP_
#define FEXP_MONOID_HPP_

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "error.hpp"
#include "expansion.hpp"
#include "group.hpp"

namespace fexp {

  // A finite inverse monoid given by its multiplication table, inversion and
  // an assignment map (letter name -> element). Construction validates the
  // inverse-monoid axioms and throws InvalidMonoid naming the first violation.
  class FiniteInverseMonoid {
   public:
    using index_type = std::size_t;
    using gen_map_type = std::vector<std::pair<std::string, index_type>>;

    FiniteInverseMonoid(std::vector<std::vector<index_type>> table,
                        std::vector<index_type>              inv,
                        index_type                           identity,
                        gen_map_type                         gens,
                        std::vector<std::string>             names = {})
        : _n(table.size()),
          _inv(std::move(inv)),
          _identity(identity),
          _gens(std::move(gens)),
          _names(std::move(names)) {
      if (_names.empty()) {
        for (std::size_t i = 0; i < _n; ++i) {
          _names.push_back("s" + std::to_string(i));
        }
      }
      _mul.reserve(_n * _n);
      for (auto const& row : table) {
        if (row.size() != _n) {
          invalid("table is not square");
        }
        for (auto v : row) {
          if (v >= _n) {
            invalid("table entry out of range");
          }
          _mul.push_back(v);
        }
      }
      if (_n == 0 || _inv.size() != _n || _identity >= _n
          || _names.size() != _n) {
        invalid("inconsistent sizes");
      }
      for (auto const& [name, s] : _gens) {
        if (s >= _n) {
          invalid("generator " + name + " out of range");
        }
      }
      validate();
    }

    std::size_t order() const noexcept {
      return _n;
    }

    index_type mul(index_type a, index_type b) const noexcept {
      return _mul[a * _n + b];
    }

    index_type inv(index_type a) const noexcept {
      return _inv[a];
    }

    index_type identity() const noexcept {
      return _identity;
    }

    gen_map_type const& gens() const noexcept {
      return _gens;
    }

    std::optional<index_type> generator(std::string const& name) const {
      for (auto const& [n, s] : _gens) {
        if (n == name) {
          return s;
        }
      }
      return std::nullopt;
    }

    std::string const& name(index_type a) const {
      return _names.at(a);
    }

    std::vector<std::string> const& names() const noexcept {
      return _names;
    }

    bool is_idempotent(index_type a) const noexcept {
      return mul(a, a) == a;
    }

    // s <= t iff s = (s s^-1) t.
    bool leq(index_type s, index_type t) const noexcept {
      return s == mul(mul(s, inv(s)), t);
    }

    std::vector<std::vector<index_type>> table() const {
      std::vector<std::vector<index_type>> t(_n, std::vector<index_type>(_n));
      for (std::size_t a = 0; a < _n; ++a) {
        for (std::size_t b = 0; b < _n; ++b) {
          t[a][b] = mul(a, b);
        }
      }
      return t;
    }

    std::vector<index_type> const& inverses() const noexcept {
      return _inv;
    }

    // Elements reachable from the identity by right multiplication with the
    // given elements.
    std::vector<index_type>
    generated_by(std::vector<index_type> const& gens) const {
      std::vector<bool>       seen(_n, false);
      std::vector<index_type> out{_identity};
      seen[_identity] = true;
      for (std::size_t i = 0; i < out.size(); ++i) {
        for (auto g : gens) {
          index_type const c = mul(out[i], g);
          if (!seen[c]) {
            seen[c] = true;
            out.push_back(c);
          }
        }
      }
      return out;
    }

    // Generator images together with their inverses.
    std::vector<index_type> involutive_generators() const {
      std::vector<index_type> out;
      for (auto const& [name, s] : _gens) {
        out.push_back(s);
        out.push_back(inv(s));
      }
      return out;
    }

    bool is_generated() const {
      return generated_by(involutive_generators()).size() == _n;
    }

   private:
    [[noreturn]] static void invalid(std::string const& what) {
      throw Error(ErrorKind::invalid_monoid, what);
    }

    void validate() const {
      for (std::size_t a = 0; a < _n; ++a) {
        if (mul(_identity, a) != a || mul(a, _identity) != a) {
          invalid("identity law fails at " + _names[a]);
        }
        if (mul(mul(a, _inv[a]), a) != a) {
          invalid("s s^-1 s != s at " + _names[a]);
        }
        if (mul(mul(_inv[a], a), _inv[a]) != _inv[a]) {
          invalid("s^-1 s s^-1 != s^-1 at " + _names[a]);
        }
      }
      check_associative();
      std::vector<index_type> idem;
      for (std::size_t a = 0; a < _n; ++a) {
        if (is_idempotent(a)) {
          idem.push_back(a);
        }
      }
      for (auto e : idem) {
        for (auto f : idem) {
          if (mul(e, f) != mul(f, e)) {
            invalid("idempotents " + _names[e] + " and " + _names[f]
                    + " do not commute");
          }
        }
      }
    }

    // Full triple scan for small tables; otherwise Light's test against a
    // semigroup generating set (greedily extended until it generates).
    void check_associative() const {
      std::vector<index_type> basis;
      if (_n > 256) {
        basis = involutive_generators();
        basis.push_back(_identity);
        auto reached = generated_by(basis);
        while (reached.size() < _n) {
          std::vector<bool> hit(_n, false);
          for (auto r : reached) {
            hit[r] = true;
          }
          index_type const missing
              = std::find(hit.begin(), hit.end(), false) - hit.begin();
          basis.push_back(missing);
          reached = generated_by(basis);
        }
      } else {
        basis.resize(_n);
        std::iota(basis.begin(), basis.end(), 0);
      }
      for (auto m : basis) {
        for (std::size_t a = 0; a < _n; ++a) {
          index_type const am = mul(a, m);
          for (std::size_t b = 0; b < _n; ++b) {
            if (mul(am, b) != mul(a, mul(m, b))) {
              invalid("associativity fails for (" + _names[a] + ","
                      + _names[m] + "," + _names[b] + ")");
            }
          }
        }
      }
    }

    std::size_t              _n;
    std::vector<index_type>  _mul;
    std::vector<index_type>  _inv;
    index_type               _identity;
    gen_map_type             _gens;
    std::vector<std::string> _names;
  };

  // Structural data of a finite inverse monoid derived from its table alone.
  struct MonoidAnalysis {
    using index_type = FiniteInverseMonoid::index_type;

    std::vector<index_type>                idempotents;
    std::vector<std::size_t>               sigma_class;  // element -> class
    std::vector<std::vector<index_type>>   classes;      // class -> elements
    FiniteGroup                            quotient;     // S/σ
    bool                                   is_e_unitary = false;
    bool                                   is_f_inverse = false;
    std::vector<std::optional<index_type>> class_max;    // τ when F-inverse
    std::optional<std::string>             e_unitary_witness;
    std::optional<std::string>             f_inverse_witness;

    std::size_t class_count() const noexcept {
      return classes.size();
    }

    // τ_F: the maximum of the σ-class; requires is_f_inverse.
    index_type tau(std::size_t cls) const {
      if (!class_max.at(cls)) {
        throw Error(ErrorKind::not_f_inverse,
                    "sigma-class " + std::to_string(cls) + " has no maximum");
      }
      return *class_max[cls];
    }

    index_type m(index_type s) const {
      return tau(sigma_class.at(s));
    }
  };

  // E(S), σ (s σ t iff es = et for some idempotent e), the σ-quotient group,
  // E-unitarity, F-inverse property and τ. The σ-class of the identity is
  // class 0; other classes are numbered by their least element.
  inline MonoidAnalysis analyze(FiniteInverseMonoid const& s) {
    using index_type = FiniteInverseMonoid::index_type;
    std::size_t const n = s.order();
    MonoidAnalysis    out;
    for (std::size_t a = 0; a < n; ++a) {
      if (s.is_idempotent(a)) {
        out.idempotents.push_back(a);
      }
    }
    std::vector<std::size_t> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](std::size_t a) {
      while (parent[a] != a) {
        parent[a] = parent[parent[a]];
        a = parent[a];
      }
      return a;
    };
    std::vector<std::size_t> first(n);
    for (auto e : out.idempotents) {
      std::fill(first.begin(), first.end(), n);
      for (std::size_t a = 0; a < n; ++a) {
        index_type const ea = s.mul(e, a);
        if (first[ea] == n) {
          first[ea] = a;
        } else {
          parent[find(a)] = find(first[ea]);
        }
      }
    }
    std::vector<std::size_t> root_class(n, n);
    out.sigma_class.assign(n, 0);
    auto assign = [&](std::size_t a) {
      std::size_t const r = find(a);
      if (root_class[r] == n) {
        root_class[r] = out.classes.size();
        out.classes.emplace_back();
      }
      out.sigma_class[a] = root_class[r];
      out.classes[root_class[r]].push_back(a);
    };
    assign(s.identity());
    for (std::size_t a = 0; a < n; ++a) {
      if (a != s.identity()) {
        assign(a);
      }
    }
    for (auto& c : out.classes) {
      std::sort(c.begin(), c.end());
    }
    std::size_t const k = out.classes.size();
    std::vector<std::vector<elem_t>> qt(k, std::vector<elem_t>(k));
    for (std::size_t ca = 0; ca < k; ++ca) {
      for (std::size_t cb = 0; cb < k; ++cb) {
        qt[ca][cb] = static_cast<elem_t>(out.sigma_class[s.mul(
            out.classes[ca].front(), out.classes[cb].front())]);
      }
    }
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) {
        if (qt[out.sigma_class[a]][out.sigma_class[b]]
            != out.sigma_class[s.mul(a, b)]) {
          throw Error(ErrorKind::invalid_monoid,
                      "sigma is not a congruence at (" + s.name(a) + ","
                          + s.name(b) + ")");
        }
      }
    }
    std::vector<std::string> qnames;
    for (std::size_t c = 0; c < k; ++c) {
      qnames.push_back("[" + s.name(out.classes[c].front()) + "]");
    }
    try {
      out.quotient = FiniteGroup::from_table(qt, qnames);
    } catch (Error const& e) {
      throw Error(ErrorKind::invalid_monoid,
                  std::string("sigma-quotient is not a group: ") + e.what());
    }
    // E-unitary: e <= a with e idempotent forces a idempotent.
    out.is_e_unitary = true;
    for (auto e : out.idempotents) {
      for (std::size_t a = 0; a < n && out.is_e_unitary; ++a) {
        if (!s.is_idempotent(a) && s.leq(e, a)) {
          out.is_e_unitary = false;
          out.e_unitary_witness = s.name(e) + " <= " + s.name(a);
        }
      }
    }
    out.is_f_inverse = true;
    out.class_max.assign(k, std::nullopt);
    for (std::size_t c = 0; c < k; ++c) {
      for (auto cand : out.classes[c]) {
        bool top = true;
        for (auto a : out.classes[c]) {
          if (!s.leq(a, cand)) {
            top = false;
            break;
          }
        }
        if (top) {
          out.class_max[c] = cand;
          break;
        }
      }
      if (!out.class_max[c] && out.is_f_inverse) {
        out.is_f_inverse = false;
        out.f_inverse_witness = "sigma-class of "
                                + s.name(out.classes[c].front())
                                + " has no maximum";
      }
    }
    return out;
  }

  // Elements reachable from the generators in the enriched signature
  // (·, ^-1, m, 1); requires the analysis of an F-inverse monoid.
  inline bool is_generated_enriched(FiniteInverseMonoid const& s,
                                    MonoidAnalysis const&      a) {
    std::vector<std::size_t> gens = s.involutive_generators();
    std::size_t              size = 0;
    while (true) {
      auto reached = s.generated_by(gens);
      if (reached.size() == size) {
        return size == s.order();
      }
      size = reached.size();
      for (auto r : reached) {
        if (a.class_max[a.sigma_class[r]]) {
          gens.push_back(*a.class_max[a.sigma_class[r]]);
        }
      }
      std::sort(gens.begin(), gens.end());
      gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
    }
  }

  // A group as an inverse monoid, X-generated by the letters of gens.
  inline FiniteInverseMonoid group_as_monoid(FiniteGroup const&  g,
                                             GeneratorSet const& gens) {
    std::vector<std::vector<std::size_t>> t(g.order(),
                                            std::vector<std::size_t>(g.order()));
    std::vector<std::size_t>              inv(g.order());
    for (std::size_t a = 0; a < g.order(); ++a) {
      inv[a] = g.inv(a);
      for (std::size_t b = 0; b < g.order(); ++b) {
        t[a][b] = g.mul(a, b);
      }
    }
    FiniteInverseMonoid::gen_map_type gm;
    for (auto const& l : gens.letters()) {
      gm.emplace_back(l.name, l.image);
    }
    return FiniteInverseMonoid(std::move(t), std::move(inv), 0, gm, g.names());
  }

  // An enumerated expansion reified as a table. Elements are indexed in
  // enumeration order; the assignment map holds the X-letters, plus the
  // barred letters when include_barred is set.
  struct ReifiedExpansion {
    FiniteInverseMonoid                              monoid;
    std::vector<Element>                             elements;
    std::unordered_map<Element, std::size_t, ElementHash> index;

    std::size_t index_of(Element const& e) const {
      auto it = index.find(e);
      if (it == index.end()) {
        throw Error(ErrorKind::invalid_input, "element not in the table");
      }
      return it->second;
    }
  };

  inline ReifiedExpansion to_table(Expansion const& fam,
                                   bool             include_barred = false,
                                   std::uint64_t cap = default_enumeration_cap) {
    std::vector<Element> elems = fam.enumerate_elements(cap);
    std::size_t const    n = elems.size();
    std::unordered_map<Element, std::size_t, ElementHash> index;
    for (std::size_t i = 0; i < n; ++i) {
      index.emplace(elems[i], i);
    }
    std::vector<std::vector<std::size_t>> t(n, std::vector<std::size_t>(n));
    std::vector<std::size_t>              inv(n);
    std::vector<std::string>              names;
    for (std::size_t a = 0; a < n; ++a) {
      inv[a] = index.at(fam.inv(elems[a]));
      names.push_back(fam.format(elems[a]));
      for (std::size_t b = 0; b < n; ++b) {
        t[a][b] = index.at(fam.mul(elems[a], elems[b]));
      }
    }
    FiniteInverseMonoid::gen_map_type gm;
    for (std::size_t y = 0; y < fam.gens().size(); ++y) {
      if (include_barred || !fam.gens().is_barred(y)) {
        gm.emplace_back(fam.gens()[y].name,
                        index.at(fam.generator_image(y)));
      }
    }
    std::size_t const id = index.at(fam.identity());
    return {FiniteInverseMonoid(
                std::move(t), std::move(inv), id, std::move(gm), std::move(names)),
            std::move(elems),
            std::move(index)};
  }

}  // namespace fexp

#endif  // FEXP_MONOID_HPP_
