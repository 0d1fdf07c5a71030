#ifndef BURNCAT_MONOIDAL_HPP_
#define BURNCAT_MONOIDAL_HPP_

#include <vector>

#include "burncat/catset.hpp"

namespace burncat {

  //! X followed by Y; objects and arrows of Y are shifted by the sizes of X.
  template <typename A>
  CatSet<A> disjoint_union(CatSet<A> const& x, CatSet<A> const& y);

  template <typename A>
  InternalFunctor<A> union_left(CatSet<A> const& x, CatSet<A> const& y);
  template <typename A>
  InternalFunctor<A> union_right(CatSet<A> const& x, CatSet<A> const& y);

  template <typename A>
  InternalFunctor<A> functor_union(InternalFunctor<A> const& f, InternalFunctor<A> const& g);
  template <typename A>
  InternalNatTrans<A> nat_union(InternalNatTrans<A> const& a, InternalNatTrans<A> const& b);

  //! Pairs with equal colors (all pairs for groups) under the diagonal
  //! action, ordered lexicographically; see pair_layout.
  template <typename A>
  CatSet<A> product(CatSet<A> const& x, CatSet<A> const& y);

  template <typename A>
  InternalFunctor<A> functor_product(InternalFunctor<A> const& f, InternalFunctor<A> const& g);
  template <typename A>
  InternalNatTrans<A> nat_product(InternalNatTrans<A> const& a, InternalNatTrans<A> const& b);

  //! The monoidal unit: objects of A acting on themselves, only identities.
  template <typename A>
  CatSet<A> unit_object(A const& acting);

  //! A functor together with its inverse.
  template <typename A>
  struct Isomorphism {
    InternalFunctor<A> forward;
    InternalFunctor<A> backward;
  };

  //! X x 1 -> X, (a, b) |-> a
  template <typename A>
  Isomorphism<A> right_unitor(CatSet<A> const& x);
  //! 1 x X -> X, (b, a) |-> a
  template <typename A>
  Isomorphism<A> left_unitor(CatSet<A> const& x);
  //! (X + Y) x Z -> (X x Z) + (Y x Z)
  template <typename A>
  Isomorphism<A> distributor(CatSet<A> const& x, CatSet<A> const& y, CatSet<A> const& z);
  //! (X x Y) x Z -> X x (Y x Z)
  template <typename A>
  Isomorphism<A> associator(CatSet<A> const& x, CatSet<A> const& y, CatSet<A> const& z);

  //! The discrete categorified set on \p x: only identity arrows.
  template <typename A>
  CatSet<A> include(ActionSet<A> const& x);

  //! A plain category is a categorified set over the trivial group.
  using PlainCategory = CatSet<Group>;

  //! C x X with the action on the set coordinate; (a, x) has index
  //! a * |X| + x.
  CatGSet category_times_gset(PlainCategory const& c, GSet const& x);

  //! (F, phi): C x X -> D x Y for a functor F: C -> D and an equivariant
  //! map phi: X -> Y.
  InternalFunctor<Group> lift_functor(InternalFunctor<Group> const& f,
                                      GSet const&                   x,
                                      GSet const&                   y,
                                      std::vector<Index> const&     phi);

  //! (mu, phi)(a, x) = (mu(a), phi(x)) between the lifted functors.
  InternalNatTrans<Group> lift_nat(InternalNatTrans<Group> const& mu,
                                   GSet const&                    x,
                                   GSet const&                    y,
                                   std::vector<Index> const&      phi);

  //! Underlying plain category, forgetting the action.
  PlainCategory underlying(CatGSet const& x);

}  // namespace burncat

#endif  // BURNCAT_MONOIDAL_HPP_
