#ifndef BURNCAT_GROUPOID_HPP_
#define BURNCAT_GROUPOID_HPP_

#include <array>
#include <cstddef>
#include <memory>
#include <vector>

#include "burncat/error.hpp"
#include "burncat/group.hpp"

namespace burncat {

  //! A finite groupoid.
  //!
  //! compose(g, h) is "g after h" and needs source(g) == target(h).  The
  //! interface matches the one-object view of Group, so both can act on sets.
  class Groupoid {
   public:
    //! \p comp lists triples (g, h, g after h) and must cover exactly the
    //! composable pairs.
    static Groupoid make(std::size_t                       objects,
                         std::vector<Index>                src,
                         std::vector<Index>                tgt,
                         std::vector<Index>                ident,
                         std::vector<Index>                inv,
                         std::vector<std::array<Index, 3>> comp);

    static Groupoid from_group(Group const& g);
    static Groupoid discrete(std::size_t n);
    //! The codiscrete groupoid on n objects: exactly one arrow i -> j for
    //! every i, j.  Arrow i -> j has index i * n + j.
    static Groupoid pair(std::size_t n);
    static Groupoid coproduct(Groupoid const& a, Groupoid const& b);

    std::size_t num_objects() const noexcept {
      return _d->objects;
    }
    std::size_t num_elements() const noexcept {
      return _d->src.size();
    }
    Index source(Index g) const noexcept {
      return _d->src[g];
    }
    Index target(Index g) const noexcept {
      return _d->tgt[g];
    }
    Index unit(Index x) const noexcept {
      return _d->ident[x];
    }
    Index compose(Index g, Index h) const noexcept {
      return _d->comp[g * num_elements() + h];
    }
    Index inverse(Index g) const noexcept {
      return _d->inv[g];
    }

    std::vector<std::array<Index, 3>> composition_triples() const;

    friend bool operator==(Groupoid const& a, Groupoid const& b) noexcept;

   private:
    struct Data {
      std::size_t        objects;
      std::vector<Index> src, tgt, ident, inv, comp;
    };
    explicit Groupoid(std::shared_ptr<Data const> d) : _d(std::move(d)) {}
    std::shared_ptr<Data const> _d;
  };

  //! Component label of every object; labels are numbered by least object.
  std::vector<Index> connected_components(Groupoid const& g);

  //! Loops at one object viewed as a group; element i is arrows[i].
  struct IsotropyGroup {
    Group              group;
    std::vector<Index> arrows;
  };

  IsotropyGroup isotropy_group(Groupoid const& g, Index object);

  //! A subgroupoid together with its inclusion maps.
  struct Subgroupoid {
    Groupoid           groupoid;
    std::vector<Index> objects;  // local object -> ambient object
    std::vector<Index> arrows;   // local arrow -> ambient arrow
  };

  //! Throws NotSubgroupoid unless the listed objects and arrows are closed
  //! under source, target, identities, composition and inverses.
  Subgroupoid make_subgroupoid(Groupoid const&    ambient,
                               std::vector<Index> objects,
                               std::vector<Index> arrows);

  //! The full subgroupoid on the component of \p object.
  Subgroupoid component_subgroupoid(Groupoid const& g, Index object);

  //! The one-object subgroupoid of loops at \p object.
  Subgroupoid vertex_subgroupoid(Groupoid const& g, Index object);

}  // namespace burncat

#endif  // BURNCAT_GROUPOID_HPP_
