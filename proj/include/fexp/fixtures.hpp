#ifndef FEXP_FIXTURES_HPP_
#define FEXP_FIXTURES_HPP_

#include <algorithm>
#include <cstddef>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "group.hpp"
#include "monoid.hpp"
#include "partial_action.hpp"
#include "semilattice.hpp"

// Small groups and inverse monoids used by the check suites and the tests.
namespace fexp::fixtures {

  inline GeneratedGroup trivial() {
    return from_cayley_table({{0}}, {});
  }

  // Z_n with the given letters mapped to the given residues.
  inline GeneratedGroup cyclic(std::size_t n,
                               std::vector<std::pair<std::string, elem_t>> gens) {
    std::vector<std::vector<elem_t>> t(n, std::vector<elem_t>(n));
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) {
        t[a][b] = static_cast<elem_t>((a + b) % n);
      }
    }
    return from_cayley_table(t, gens);
  }

  inline GeneratedGroup z2_x() {
    return cyclic(2, {{"x", 1}});
  }

  inline GeneratedGroup z2_xy() {
    return cyclic(2, {{"x", 1}, {"y", 1}});
  }

  inline GeneratedGroup z3_x() {
    return cyclic(3, {{"x", 1}});
  }

  inline GeneratedGroup z3_xy() {
    return cyclic(3, {{"x", 1}, {"y", 2}});
  }

  inline GeneratedGroup z4_x() {
    return cyclic(4, {{"x", 1}});
  }

  // Klein four-group Z2 x Z2 as XOR on {0,1,2,3}.
  inline GeneratedGroup v4_ab() {
    std::vector<std::vector<elem_t>> t(4, std::vector<elem_t>(4));
    for (elem_t a = 0; a < 4; ++a) {
      for (elem_t b = 0; b < 4; ++b) {
        t[a][b] = a ^ b;
      }
    }
    return from_cayley_table(t, {{"a", 1}, {"b", 2}});
  }

  // The symmetric group on three points, generated by two transpositions.
  inline GeneratedGroup s3_st() {
    return from_permutations(3, {{"s", {1, 0, 2}}, {"t", {0, 2, 1}}});
  }

  struct NamedGroup {
    std::string    name;
    GeneratedGroup group;
  };

  // Every fixture group of order at most 4.
  inline std::vector<NamedGroup> small_groups() {
    return {{"Z1", trivial()},  {"Z2{x}", z2_x()}, {"Z2{x,y}", z2_xy()},
            {"Z3{x}", z3_x()},  {"Z3{x,y}", z3_xy()}, {"Z4{x}", z4_x()},
            {"V4{a,b}", v4_ab()}};
  }

  ////////////////////////////////////////////////////////////////////////
  // Inverse monoids that are not expansions
  ////////////////////////////////////////////////////////////////////////

  // H x {1 > 0}: (h, c)(k, d) = (hk, min(c, d)). E-unitary and F-inverse
  // with m(h, c) = (h, 1). Letters are mapped to (image, 0).
  inline FiniteInverseMonoid
  chain_product(FiniteGroup const&                                 h,
                std::vector<std::pair<std::string, elem_t>> const& letters) {
    std::size_t const n = h.order();
    auto idx = [n](std::size_t g, std::size_t c) { return c * n + g; };
    std::vector<std::vector<std::size_t>> t(2 * n,
                                            std::vector<std::size_t>(2 * n));
    std::vector<std::size_t>              inv(2 * n);
    std::vector<std::string>              names(2 * n);
    for (std::size_t c = 0; c < 2; ++c) {
      for (std::size_t a = 0; a < n; ++a) {
        inv[idx(a, c)] = idx(h.inv(a), c);
        names[idx(a, c)] = "(" + h.name(a) + "," + std::to_string(c) + ")";
        for (std::size_t d = 0; d < 2; ++d) {
          for (std::size_t b = 0; b < n; ++b) {
            t[idx(a, c)][idx(b, d)] = idx(h.mul(a, b), std::min(c, d));
          }
        }
      }
    }
    FiniteInverseMonoid::gen_map_type gens;
    for (auto const& [name, im] : letters) {
      gens.emplace_back(name, idx(im, 0));
    }
    return FiniteInverseMonoid(std::move(t), std::move(inv), idx(0, 1),
                               std::move(gens), std::move(names));
  }

  // A finite semilattice with top as an inverse monoid (trivial σ-quotient).
  inline FiniteInverseMonoid semilattice_monoid(FiniteSemilattice const& y) {
    auto top = y.top();
    if (!top) {
      throw Error(ErrorKind::invalid_input, "semilattice has no top");
    }
    std::size_t const                     n = y.size();
    std::vector<std::vector<std::size_t>> t(n, std::vector<std::size_t>(n));
    std::vector<std::size_t>              inv(n);
    std::vector<std::string>              names;
    for (std::size_t a = 0; a < n; ++a) {
      inv[a] = a;
      names.push_back(y.describe(a));
      for (std::size_t b = 0; b < n; ++b) {
        t[a][b] = y.meet(a, b);
      }
    }
    return FiniteInverseMonoid(std::move(t), std::move(inv), *top, {},
                               std::move(names));
  }

  // The four-element diamond 0 < a, b < 1 as indices 0 = "0", 1 = "a",
  // 2 = "b", 3 = "1".
  inline FiniteSemilattice diamond() {
    return FiniteSemilattice::from_table({{0, 0, 0, 0},
                                          {0, 1, 0, 1},
                                          {0, 0, 2, 2},
                                          {0, 1, 2, 3}},
                                         {"0", "a", "b", "1"});
  }

  // Z2 acting on the diamond: the generator swaps a and b everywhere, and
  // the partial map of the generator is defined on {0, a, b} only (so 1 is
  // fixed by the identity alone). The product has 3 + 4 = 7 elements.
  inline std::shared_ptr<Premorphism const> diamond_swap_premorphism() {
    auto const z2 = cyclic(2, {{"x", 1}}).group;
    std::size_t const u = Premorphism::undefined;
    return std::make_shared<Premorphism const>(
        z2, diamond(),
        std::vector<std::vector<std::size_t>>{{0, 1, 2, 3}, {0, 2, 1, u}});
  }

  // The product of diamond_swap_premorphism as an inverse monoid with the
  // letter x mapped to (a, x).
  inline FiniteInverseMonoid diamond_swap_monoid() {
    PartialActionProduct const p(diamond_swap_premorphism());
    auto                       x = p.index_of({1, 1});
    return p.to_table({{"x", *x}});
  }

}  // namespace fexp::fixtures

#endif  // FEXP_FIXTURES_HPP_
