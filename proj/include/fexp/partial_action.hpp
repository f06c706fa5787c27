#ifndef FEXP_PARTIAL_ACTION_HPP_
#define FEXP_PARTIAL_ACTION_HPP_

#include <algorithm>
#include <concepts>
#include <cstddef>
#include <limits>
#include <memory>
#include <optional>
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
#include "semilattice.hpp"

namespace fexp {

  // A partial action of a finite group on values of A::value_type:
  // act(g, x) is g·x when defined.
  template <typename A>
  concept PartialAction
      = requires(A const& a, elem_t g, typename A::value_type const& x) {
          typename A::value_type;
          { a.group() } -> std::convertible_to<FiniteGroup const&>;
          { a.act(g, x) }
          -> std::convertible_to<std::optional<typename A::value_type>>;
        };

  template <typename V>
  struct ProductElement {
    V      e;
    elem_t g;

    friend bool operator==(ProductElement const&,
                           ProductElement const&) = default;
  };

  // The operations of Y ⋊ G for a partial action on a semilattice Y:
  //   (e,g)(f,h) = (g·(g^-1·e ∧ f), gh),   (e,g)^-1 = (g^-1·e, g^-1),
  // on pairs with e ∈ ran φ_g, i.e. g^-1·e defined.
  template <PartialAction A, Semilattice L>
  class ProductOps {
   public:
    using value_type = typename A::value_type;
    using element_type = ProductElement<value_type>;

    ProductOps(A const& action, L const& lat) : _act(&action), _lat(&lat) {}

    bool is_member(element_type const& a) const {
      return _act->act(_act->group().inv(a.g), a.e).has_value();
    }

    element_type mul(element_type const& a, element_type const& b) const {
      auto const& grp = _act->group();
      auto        pre = _act->act(grp.inv(a.g), a.e);
      if (!pre) {
        throw Error(ErrorKind::undefined_action,
                    "g^-1 * e undefined for e = " + _lat->describe(a.e));
      }
      auto post = _act->act(a.g, _lat->meet(*pre, b.e));
      if (!post) {
        throw Error(ErrorKind::undefined_action,
                    "g * (g^-1 * e ∧ f) undefined for e = "
                        + _lat->describe(a.e) + ", f = " + _lat->describe(b.e));
      }
      return {*post, grp.mul(a.g, b.g)};
    }

    element_type inv(element_type const& a) const {
      elem_t const gi = _act->group().inv(a.g);
      auto         pre = _act->act(gi, a.e);
      if (!pre) {
        throw Error(ErrorKind::undefined_action,
                    "g^-1 * e undefined for e = " + _lat->describe(a.e));
      }
      return {*pre, gi};
    }

    std::string describe(element_type const& a) const {
      return "(" + _lat->describe(a.e) + ", "
             + _act->group().name(a.g) + ")";
    }

    A const& action() const noexcept {
      return *_act;
    }

    L const& lattice() const noexcept {
      return *_lat;
    }

   private:
    A const* _act;
    L const* _lat;
  };

  ////////////////////////////////////////////////////////////////////////
  // Extensional premorphisms
  ////////////////////////////////////////////////////////////////////////

  // A premorphism G -> Σ(Y) into the order isomorphisms between order ideals
  // of a finite semilattice, stored as one partial map per group element.
  class Premorphism {
   public:
    using value_type = std::size_t;
    static constexpr std::size_t undefined
        = std::numeric_limits<std::size_t>::max();

    Premorphism(FiniteGroup group, FiniteSemilattice carrier,
                std::vector<std::vector<std::size_t>> maps)
        : _group(std::move(group)),
          _carrier(std::move(carrier)),
          _maps(std::move(maps)) {
      if (_maps.size() != _group.order()) {
        throw Error(ErrorKind::invalid_input, "one map per group element");
      }
      for (auto const& m : _maps) {
        if (m.size() != _carrier.size()) {
          throw Error(ErrorKind::invalid_input, "map size != carrier size");
        }
        for (auto v : m) {
          if (v != undefined && v >= _carrier.size()) {
            throw Error(ErrorKind::invalid_input, "map value out of range");
          }
        }
      }
    }

    FiniteGroup const& group() const noexcept {
      return _group;
    }

    FiniteSemilattice const& carrier() const noexcept {
      return _carrier;
    }

    std::optional<std::size_t> act(elem_t g, std::size_t x) const {
      std::size_t const v = _maps[g][x];
      if (v == undefined) {
        return std::nullopt;
      }
      return v;
    }

    std::vector<std::size_t> domain(elem_t g) const {
      std::vector<std::size_t> out;
      for (std::size_t x = 0; x < _carrier.size(); ++x) {
        if (_maps[g][x] != undefined) {
          out.push_back(x);
        }
      }
      return out;
    }

    std::vector<std::size_t> range(elem_t g) const {
      std::vector<std::size_t> out;
      for (std::size_t x = 0; x < _carrier.size(); ++x) {
        if (_maps[g][x] != undefined) {
          out.push_back(_maps[g][x]);
        }
      }
      std::sort(out.begin(), out.end());
      return out;
    }

    std::vector<std::vector<std::size_t>> const& maps() const noexcept {
      return _maps;
    }

   private:
    FiniteGroup                           _group;
    FiniteSemilattice                     _carrier;
    std::vector<std::vector<std::size_t>> _maps;
  };

  // PM1-PM3 (equivalently PA1-PA3), plus: each domain is a nonempty order
  // ideal and each φ_g is an order isomorphism onto its range.
  inline Report check_premorphism(Premorphism const& phi,
                                  std::string const& instance = "") {
    Report      report;
    auto const& grp = phi.group();
    auto const& lat = phi.carrier();
    std::size_t const n = lat.size();
    auto name = [&](std::size_t x) { return lat.describe(x); };
    {
      auto t = report.tally("premorphism", "PM1", instance);
      for (std::size_t x = 0; x < n; ++x) {
        t.expect(phi.act(0, x) == x, [&] { return "phi_1 moves " + name(x); });
      }
    }
    {
      auto t = report.tally("premorphism", "PM2", instance);
      for (elem_t g = 0; g < grp.order(); ++g) {
        for (elem_t h = 0; h < grp.order(); ++h) {
          for (std::size_t x = 0; x < n; ++x) {
            auto hx = phi.act(h, x);
            if (!hx) {
              continue;
            }
            auto ghx = phi.act(g, *hx);
            if (!ghx) {
              continue;
            }
            t.expect(phi.act(grp.mul(g, h), x) == ghx, [&] {
              return "g=" + grp.name(g) + " h=" + grp.name(h) + " x="
                     + name(x);
            });
          }
        }
      }
    }
    {
      auto t = report.tally("premorphism", "PM3", instance);
      for (elem_t g = 0; g < grp.order(); ++g) {
        elem_t const gi = grp.inv(g);
        for (std::size_t x = 0; x < n; ++x) {
          auto gx = phi.act(g, x);
          if (gx) {
            t.expect(phi.act(gi, *gx) == x, [&] {
              return "g=" + grp.name(g) + " x=" + name(x);
            });
          }
        }
        t.expect(phi.range(g) == phi.domain(gi),
                 [&] { return "ran phi_g != dom phi_g^-1 for g=" + grp.name(g); });
      }
    }
    {
      auto t = report.tally("premorphism", "order-ideal", instance);
      for (elem_t g = 0; g < grp.order(); ++g) {
        auto dom = phi.domain(g);
        t.expect(!dom.empty(),
                 [&] { return "dom phi_" + grp.name(g) + " is empty"; });
        for (auto x : dom) {
          for (std::size_t y = 0; y < n; ++y) {
            if (lat.leq(y, x)) {
              t.expect(phi.act(g, y).has_value(), [&] {
                return "g=" + grp.name(g) + ": " + name(y) + " <= " + name(x)
                       + " but only the latter is in the domain";
              });
            }
          }
        }
      }
    }
    {
      auto t = report.tally("premorphism", "order-isomorphism", instance);
      for (elem_t g = 0; g < grp.order(); ++g) {
        auto dom = phi.domain(g);
        for (auto x : dom) {
          for (auto y : dom) {
            bool const before = lat.leq(x, y);
            bool const after = lat.leq(*phi.act(g, x), *phi.act(g, y));
            t.expect(before == after, [&] {
              return "g=" + grp.name(g) + " x=" + name(x) + " y=" + name(y);
            });
          }
        }
      }
    }
    return report;
  }

  // Y ⋊ G for an extensional premorphism, with every element enumerated.
  class PartialActionProduct {
   public:
    using element_type = ProductElement<std::size_t>;

    explicit PartialActionProduct(std::shared_ptr<Premorphism const> phi)
        : _phi(std::move(phi)), _ops(*_phi, _phi->carrier()) {
      auto const& grp = _phi->group();
      std::size_t const n = _phi->carrier().size();
      _index.assign(n * grp.order(), npos);
      for (std::size_t e = 0; e < n; ++e) {
        for (elem_t g = 0; g < grp.order(); ++g) {
          if (_phi->act(grp.inv(g), e)) {
            _index[e * grp.order() + g] = _elements.size();
            _elements.push_back({e, g});
          }
        }
      }
    }

    Premorphism const& premorphism() const noexcept {
      return *_phi;
    }

    std::size_t size() const noexcept {
      return _elements.size();
    }

    element_type const& operator[](std::size_t i) const {
      return _elements[i];
    }

    std::vector<element_type> const& elements() const noexcept {
      return _elements;
    }

    std::optional<std::size_t> index_of(element_type const& a) const {
      std::size_t const i = _index[a.e * _phi->group().order() + a.g];
      if (i == npos) {
        return std::nullopt;
      }
      return i;
    }

    std::size_t mul(std::size_t a, std::size_t b) const {
      auto r = _ops.mul(_elements[a], _elements[b]);
      auto i = index_of(r);
      if (!i) {
        throw Error(ErrorKind::undefined_action,
                    "product " + _ops.describe(r) + " is not in Y x| G");
      }
      return *i;
    }

    std::size_t inv(std::size_t a) const {
      auto i = index_of(_ops.inv(_elements[a]));
      if (!i) {
        throw Error(ErrorKind::undefined_action, "inverse is not in Y x| G");
      }
      return *i;
    }

    ProductOps<Premorphism, FiniteSemilattice> const& ops() const noexcept {
      return _ops;
    }

    std::string describe(std::size_t a) const {
      return _ops.describe(_elements[a]);
    }

    // (top, 1) when the carrier has a top element.
    std::optional<std::size_t> identity() const {
      auto top = _phi->carrier().top();
      if (!top) {
        return std::nullopt;
      }
      return index_of({*top, 0});
    }

    // The product as an abstract inverse monoid; requires a top element.
    FiniteInverseMonoid to_table(FiniteInverseMonoid::gen_map_type gens
                                 = {}) const {
      auto id = identity();
      if (!id) {
        throw Error(ErrorKind::invalid_input,
                    "carrier has no top, so Y x| G is not a monoid");
      }
      std::size_t const                     n = size();
      std::vector<std::vector<std::size_t>> t(n, std::vector<std::size_t>(n));
      std::vector<std::size_t>              inverse(n);
      std::vector<std::string>              names;
      for (std::size_t a = 0; a < n; ++a) {
        inverse[a] = inv(a);
        names.push_back(describe(a));
        for (std::size_t b = 0; b < n; ++b) {
          t[a][b] = mul(a, b);
        }
      }
      return FiniteInverseMonoid(std::move(t), std::move(inverse), *id,
                                 std::move(gens), std::move(names));
    }

   private:
    static constexpr std::size_t npos = std::numeric_limits<std::size_t>::max();

    std::shared_ptr<Premorphism const>          _phi;
    ProductOps<Premorphism, FiniteSemilattice> _ops;
    std::vector<element_type>                   _elements;
    std::vector<std::size_t>                    _index;
  };

  ////////////////////////////////////////////////////////////////////////
  // The premorphism underlying an expansion
  ////////////////////////////////////////////////////////////////////////

  // Functional form on Subgraph values: g·Γ = gΓ, defined iff g^-1 ∈ V(Γ).
  class SubgraphAction {
   public:
    using value_type = Subgraph;

    explicit SubgraphAction(Expansion const& fam) : _fam(&fam) {}

    FiniteGroup const& group() const noexcept {
      return _fam->group();
    }

    std::optional<Subgraph> act(elem_t g, Subgraph const& x) const {
      if (!x.has_vertex(_fam->group().inv(g))) {
        return std::nullopt;
      }
      return _fam->cayley().translate(g, x);
    }

   private:
    Expansion const* _fam;
  };

  struct ExpansionPremorphism {
    std::shared_ptr<SubgraphCarrier const> carrier;
    std::shared_ptr<Premorphism const>     phi;
  };

  // Carriers up to this size get a precomputed meet table.
  inline constexpr std::size_t tabulate_limit = 4096;

  // dom φ_g = {Γ : g^-1 ∈ V(Γ)}, φ_g(Γ) = gΓ, over the enumerated family.
  inline ExpansionPremorphism
  mm_premorphism(Expansion const& fam,
                 std::uint64_t    cap = default_enumeration_cap) {
    auto carrier = std::make_shared<SubgraphCarrier const>(fam, cap);
    auto const& grp = fam.group();
    std::vector<std::vector<std::size_t>> maps(
        grp.order(),
        std::vector<std::size_t>(carrier->size(), Premorphism::undefined));
    SubgraphAction const act(fam);
    for (elem_t g = 0; g < grp.order(); ++g) {
      for (std::size_t x = 0; x < carrier->size(); ++x) {
        if (auto y = act.act(g, (*carrier)[x])) {
          maps[g][x] = carrier->index_of(*y);
        }
      }
    }
    auto lat = as_semilattice(carrier, fam);
    if (carrier->size() <= tabulate_limit) {
      lat = lat.tabulated();
    }
    auto phi = std::make_shared<Premorphism const>(grp, std::move(lat),
                                                   std::move(maps));
    return {std::move(carrier), std::move(phi)};
  }

  ////////////////////////////////////////////////////////////////////////
  // The premorphism underlying an E-unitary inverse monoid
  ////////////////////////////////////////////////////////////////////////

  struct UnderlyingPremorphism {
    MonoidAnalysis                     analysis;
    std::vector<std::size_t>           idempotents;  // carrier index -> S
    std::vector<std::size_t>           carrier_of;   // S -> carrier index
    std::shared_ptr<Premorphism const> phi;
  };

  // Carrier E(S) with the product as meet; group S/σ;
  // dom φ_g = {e : e <= s^-1 s for some s in class g}, φ_g(e) = s e s^-1.
  inline UnderlyingPremorphism
  underlying_premorphism(FiniteInverseMonoid const& s) {
    UnderlyingPremorphism out;
    out.analysis = analyze(s);
    if (!out.analysis.is_e_unitary) {
      throw Error(ErrorKind::not_e_unitary, *out.analysis.e_unitary_witness);
    }
    out.idempotents = out.analysis.idempotents;
    std::size_t const k = out.idempotents.size();
    out.carrier_of.assign(s.order(), Premorphism::undefined);
    for (std::size_t i = 0; i < k; ++i) {
      out.carrier_of[out.idempotents[i]] = i;
    }
    std::vector<std::vector<std::size_t>> meet(k, std::vector<std::size_t>(k));
    std::vector<std::string>              names;
    for (std::size_t i = 0; i < k; ++i) {
      names.push_back(s.name(out.idempotents[i]));
      for (std::size_t j = 0; j < k; ++j) {
        meet[i][j]
            = out.carrier_of[s.mul(out.idempotents[i], out.idempotents[j])];
      }
    }
    auto const& q = out.analysis.quotient;
    std::vector<std::vector<std::size_t>> maps(
        q.order(), std::vector<std::size_t>(k, Premorphism::undefined));
    for (std::size_t a = 0; a < s.order(); ++a) {
      std::size_t const cls = out.analysis.sigma_class[a];
      std::size_t const src = s.mul(s.inv(a), a);
      for (std::size_t i = 0; i < k; ++i) {
        std::size_t const e = out.idempotents[i];
        if (!s.leq(e, src)) {
          continue;
        }
        std::size_t const img = out.carrier_of[s.mul(s.mul(a, e), s.inv(a))];
        std::size_t&      slot = maps[cls][i];
        if (slot != Premorphism::undefined && slot != img) {
          throw Error(ErrorKind::not_e_unitary,
                      "s e s^-1 depends on the choice of s for e = "
                          + s.name(e));
        }
        slot = img;
      }
    }
    out.phi = std::make_shared<Premorphism const>(
        q, FiniteSemilattice::from_table(std::move(meet), std::move(names)),
        std::move(maps));
    return out;
  }

  struct StructureIso {
    UnderlyingPremorphism    underlying;
    PartialActionProduct     product;
    std::vector<std::size_t> map;  // S -> product index
    Report                   report;
  };

  // s -> (s s^-1, [s]_σ) into E(S) ⋊ S/σ, checked bijective and
  // multiplicative on all pairs.
  inline StructureIso structure_iso(FiniteInverseMonoid const& s,
                                    std::string const&         instance = "") {
    auto up = underlying_premorphism(s);
    PartialActionProduct prod(up.phi);
    std::vector<std::size_t> map(s.order(), Premorphism::undefined);
    Report                   report;
    {
      auto t = report.tally("structure", "iso-defined", instance);
      for (std::size_t a = 0; a < s.order(); ++a) {
        auto i = prod.index_of(
            {up.carrier_of[s.mul(a, s.inv(a))],
             static_cast<elem_t>(up.analysis.sigma_class[a])});
        if (t.expect(i.has_value(), [&] {
              return s.name(a) + " maps outside E(S) x| S/sigma";
            })) {
          map[a] = *i;
        }
      }
    }
    {
      auto              t = report.tally("structure", "iso-bijective", instance);
      std::vector<bool> hit(prod.size(), false);
      for (std::size_t a = 0; a < s.order(); ++a) {
        if (map[a] != Premorphism::undefined) {
          t.expect(!hit[map[a]],
                   [&] { return "two elements map to " + prod.describe(map[a]); });
          hit[map[a]] = true;
        }
      }
      t.expect(prod.size() == s.order(), [&] {
        return "|S| = " + std::to_string(s.order()) + " but |E x| G| = "
               + std::to_string(prod.size());
      });
    }
    {
      auto t = report.tally("structure", "iso-multiplicative", instance);
      for (std::size_t a = 0; a < s.order(); ++a) {
        for (std::size_t b = 0; b < s.order(); ++b) {
          if (map[a] == Premorphism::undefined
              || map[b] == Premorphism::undefined) {
            continue;
          }
          t.expect(map[s.mul(a, b)] == prod.mul(map[a], map[b]), [&] {
            return s.name(a) + " * " + s.name(b);
          });
        }
      }
    }
    return {std::move(up), std::move(prod), std::move(map), std::move(report)};
  }

}  // namespace fexp

#endif  // FEXP_PARTIAL_ACTION_HPP_
