#ifndef BURNCAT_ACTION_SET_HPP_
#define BURNCAT_ACTION_SET_HPP_

#include <array>
#include <cstddef>
#include <memory>
#include <optional>
#include <utility>
#include <vector>

#include "burncat/error.hpp"
#include "burncat/group.hpp"
#include "burncat/groupoid.hpp"

namespace burncat {

  //! A finite set with a right action of a group or groupoid \p A.
  //!
  //! Every point x carries a color, the structure map to the objects of \p A
  //! (always 0 for a group).  x.g is defined exactly when color(x) is the
  //! target of g, and then color(x.g) is the source of g.  The action table
  //! is stored densely with kNone in the undefined entries.
  template <typename A>
  class ActionSet {
   public:
    using acting_type = A;

    static ActionSet make(A acting, std::vector<Index> color, std::vector<Index> act);

    std::size_t size() const noexcept {
      return _d->color.size();
    }
    A const& acting() const noexcept {
      return _d->acting;
    }
    Index color(Index x) const noexcept {
      return _d->color[x];
    }
    Index act(Index x, Index g) const noexcept {
      return _d->act[x * _d->acting.num_elements() + g];
    }
    std::vector<Index> const& colors() const noexcept {
      return _d->color;
    }
    std::vector<Index> const& table() const noexcept {
      return _d->act;
    }

    template <typename B>
    friend bool operator==(ActionSet<B> const& x, ActionSet<B> const& y) noexcept;

   private:
    struct Data {
      A                  acting;
      std::vector<Index> color;
      std::vector<Index> act;
    };
    explicit ActionSet(std::shared_ptr<Data const> d) : _d(std::move(d)) {}
    std::shared_ptr<Data const> _d;
  };

  template <typename A>
  bool operator==(ActionSet<A> const& x, ActionSet<A> const& y) noexcept {
    return x._d == y._d
           || (x._d->acting == y._d->acting && x._d->color == y._d->color
               && x._d->act == y._d->act);
  }

  using GSet        = ActionSet<Group>;
  using GroupoidSet = ActionSet<Groupoid>;

  //! rows[x][g] = x.g
  GSet make_gset(Group g, std::vector<std::vector<Index>> const& rows);
  std::vector<std::vector<Index>> gset_rows(GSet const& x);
  GSet trivial_gset(Group g, std::size_t n);

  //! \p triples lists (x, g, x.g) for every defined product.
  GroupoidSet make_groupoid_set(Groupoid                                 g,
                                std::vector<Index>                       sigma,
                                std::vector<std::array<Index, 3>> const& triples);
  std::vector<std::array<Index, 3>> groupoid_set_triples(GroupoidSet const& x);

  //! Loops at object c of the acting structure, sorted.
  template <typename A>
  std::vector<Index> loops_at(A const& acting, Index c);

  //! The loops at one object as a group; element i is arrows[i].
  struct LocalGroup {
    Group              group;
    std::vector<Index> arrows;
  };

  LocalGroup local_group(Group const& g, Index c);
  LocalGroup local_group(Groupoid const& g, Index c);

  //! Least object in the component of \p c.
  Index component_base(Group const& g, Index c);
  Index component_base(Groupoid const& g, Index c);

  //! Subgroups of the loops at c (as arrow lists) up to conjugacy, each
  //! given by its least conjugate.
  template <typename A>
  std::vector<std::vector<Index>> subgroup_classes_at(A const& acting, Index c);

  //! Least conjugate of a subgroup of the loops at c.
  template <typename A>
  std::vector<Index> subgroup_key_at(A const&                  acting,
                                     Index                     c,
                                     std::vector<Index> const& subgroup);

  //! The objects of A acting on themselves: the monoidal unit.
  template <typename A>
  ActionSet<A> unit_set(A const& acting);

  //! Right cosets H.g of a subgroup H of the loops at c, over all g with
  //! target c.  Every transitive set is isomorphic to one of these.
  template <typename A>
  ActionSet<A> coset_set(A const& acting, Index c, std::vector<Index> const& subgroup);

  //! Isomorphism type of a transitive set: an object per component and a
  //! subgroup of the loops there, up to conjugacy.
  struct TransitiveType {
    Index              object;
    std::vector<Index> subgroup;
    friend bool operator==(TransitiveType const&, TransitiveType const&) = default;
    friend auto operator<=>(TransitiveType const&, TransitiveType const&) = default;
  };

  template <typename A>
  std::vector<TransitiveType> transitive_types(A const& acting);

  //! Type of the orbit of \p x.
  template <typename A>
  TransitiveType orbit_type(ActionSet<A> const& x, Index point);

  template <typename A>
  ActionSet<A> disjoint_union(ActionSet<A> const& x, ActionSet<A> const& y);

  //! Pairs with equal colors; index of (x, y) is at(x, y).
  struct PairLayout {
    std::size_t                            right = 0;
    std::vector<std::pair<Index, Index>>   pairs;
    std::vector<Index>                     index;
    Index at(Index x, Index y) const noexcept {
      return index[x * right + y];
    }
  };

  template <typename A>
  PairLayout pair_layout(ActionSet<A> const& x, ActionSet<A> const& y);

  //! Fibre product over the objects of A (the cartesian product for groups).
  template <typename A>
  ActionSet<A> fibre_product(ActionSet<A> const& x, ActionSet<A> const& y);

  //! new index of x is perm[x]
  template <typename A>
  ActionSet<A> relabel(ActionSet<A> const& x, std::vector<Index> const& perm);

  //! Orbits, each sorted, ordered by least element.
  template <typename A>
  std::vector<std::vector<Index>> orbits(ActionSet<A> const& x);

  //! orbit_labels(x)[p] is the position of the orbit of p in orbits(x).
  template <typename A>
  std::vector<Index> orbit_labels(ActionSet<A> const& x);

  //! Loops at color(x) fixing x, sorted.
  template <typename A>
  std::vector<Index> stabilizer(ActionSet<A> const& x, Index point);

  //! nullopt if \p map is equivariant, else a violating (point, element);
  //! the element is kNone when colors disagree.
  template <typename A>
  std::optional<std::pair<Index, Index>>
  equivariance_violation(ActionSet<A> const&       x,
                         ActionSet<A> const&       y,
                         std::vector<Index> const& map);

  //! An equivariant bijection x -> y, or nullopt.
  template <typename A>
  std::optional<std::vector<Index>> isomorphic(ActionSet<A> const& x,
                                               ActionSet<A> const& y);

}  // namespace burncat

#endif  // BURNCAT_ACTION_SET_HPP_
