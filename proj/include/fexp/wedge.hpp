#ifndef FEXP_WEDGE_HPP_
#define FEXP_WEDGE_HPP_

#include <bit>
#include <cstdint>

#include "cayley.hpp"
#include "error.hpp"

namespace fexp {

  // The closure Γ -> Γ^∧ on subgraphs of Cay(G, Y), Y = X ∪ barred copy of G:
  // adds the barred edge (a, @(a^-1 b), b) for every ordered pair of vertices
  // a, b (a = b included). Vertices are unchanged.
  class WedgeClosure {
   public:
    explicit WedgeClosure(CayleyGraph const& cay) : _cay(&cay) {
      if (cay.gens().kind() != GeneratorKind::extended) {
        throw Error(ErrorKind::invalid_input,
                    "the wedge closure needs an extended generating set");
      }
    }

    CayleyGraph const& cayley() const noexcept {
      return *_cay;
    }

    // All barred edges between vertices of the given set.
    EdgeBits barred_edges(std::uint64_t vertices) const {
      auto const&  grp = _cay->group();
      auto const&  gens = _cay->gens();
      EdgeBits     out;
      std::uint64_t as = vertices;
      while (as != 0) {
        auto const a = static_cast<elem_t>(std::countr_zero(as));
        as &= as - 1;
        std::uint64_t bs = vertices;
        while (bs != 0) {
          auto const b = static_cast<elem_t>(std::countr_zero(bs));
          bs &= bs - 1;
          out.set(_cay->edge_id(a, gens.barred(grp.mul(grp.inv(a), b))));
        }
      }
      return out;
    }

    Subgraph operator()(Subgraph g) const {
      g.edges |= barred_edges(g.vertices);
      return g;
    }

    bool is_closed(Subgraph const& g) const {
      return barred_edges(g.vertices).is_subset_of(g.edges);
    }

   private:
    CayleyGraph const* _cay;
  };

}  // namespace fexp

#endif  // FEXP_WEDGE_HPP_
