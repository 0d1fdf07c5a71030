#ifndef BURNCAT_CATSET_HPP_
#define BURNCAT_CATSET_HPP_

#include <array>
#include <cstddef>
#include <memory>
#include <optional>
#include <utility>
#include <vector>

#include "burncat/action_set.hpp"
#include "burncat/error.hpp"

namespace burncat {

  //! A category internal to sets with an action of A (a group or groupoid).
  //!
  //! Objects and arrows are action sets, and source, target, identity and
  //! composition are equivariant.  compose(p, q) is "p after q" and is
  //! defined exactly when src(p) == tgt(q).  Instances are immutable and
  //! validated on construction; copies share storage.
  template <typename A>
  class CatSet {
   public:
    using acting_type = A;

    //! \p comp lists triples (p, q, p after q), exactly one per composable
    //! pair.
    static CatSet make(ActionSet<A>                      objects,
                       ActionSet<A>                      arrows,
                       std::vector<Index>                src,
                       std::vector<Index>                tgt,
                       std::vector<Index>                ident,
                       std::vector<std::array<Index, 3>> comp);

    //! As make, with the composition given densely (kNone off the
    //! composable pairs).
    static CatSet make_dense(ActionSet<A>       objects,
                             ActionSet<A>       arrows,
                             std::vector<Index> src,
                             std::vector<Index> tgt,
                             std::vector<Index> ident,
                             std::vector<Index> comp);

    A const& acting() const noexcept {
      return _d->objects.acting();
    }
    ActionSet<A> const& objects() const noexcept {
      return _d->objects;
    }
    ActionSet<A> const& arrows() const noexcept {
      return _d->arrows;
    }
    std::size_t num_objects() const noexcept {
      return _d->objects.size();
    }
    std::size_t num_arrows() const noexcept {
      return _d->arrows.size();
    }
    Index src(Index f) const noexcept {
      return _d->src[f];
    }
    Index tgt(Index f) const noexcept {
      return _d->tgt[f];
    }
    Index ident(Index x) const noexcept {
      return _d->ident[x];
    }
    bool composable(Index p, Index q) const noexcept {
      return _d->src[p] == _d->tgt[q];
    }
    //! Throws NotComposable unless src(p) == tgt(q).
    Index compose(Index p, Index q) const;
    //! Unchecked; kNone when not composable.
    Index comp(Index p, Index q) const noexcept {
      return _d->comp[p * num_arrows() + q];
    }
    //! Arrows a -> b in increasing order.
    std::vector<Index> const& hom(Index a, Index b) const noexcept {
      return _d->hom[a * num_objects() + b];
    }
    std::vector<Index> const& src_table() const noexcept {
      return _d->src;
    }
    std::vector<Index> const& tgt_table() const noexcept {
      return _d->tgt;
    }
    std::vector<Index> const& ident_table() const noexcept {
      return _d->ident;
    }
    std::vector<Index> const& comp_table() const noexcept {
      return _d->comp;
    }
    std::vector<std::array<Index, 3>> composition_triples() const;

    //! The two-sided inverse of \p f, if f is an isomorphism.
    std::optional<Index> inverse(Index f) const;

    template <typename B>
    friend bool operator==(CatSet<B> const& x, CatSet<B> const& y) noexcept;

   private:
    struct Data {
      ActionSet<A>                    objects;
      ActionSet<A>                    arrows;
      std::vector<Index>              src, tgt, ident, comp;
      std::vector<std::vector<Index>> hom;
    };
    explicit CatSet(std::shared_ptr<Data const> d) : _d(std::move(d)) {}
    std::shared_ptr<Data const> _d;
  };

  template <typename A>
  bool operator==(CatSet<A> const& x, CatSet<A> const& y) noexcept {
    return x._d == y._d
           || (x._d->objects == y._d->objects && x._d->arrows == y._d->arrows
               && x._d->src == y._d->src && x._d->tgt == y._d->tgt
               && x._d->ident == y._d->ident && x._d->comp == y._d->comp);
  }

  using CatGSet         = CatSet<Group>;
  using CatGroupoidSet  = CatSet<Groupoid>;

  //! An equivariant functor, validated on construction.
  template <typename A>
  class InternalFunctor {
   public:
    static InternalFunctor make(CatSet<A>          dom,
                                CatSet<A>          cod,
                                std::vector<Index> f0,
                                std::vector<Index> f1);
    static InternalFunctor identity(CatSet<A> const& x);

    CatSet<A> const& dom() const noexcept {
      return _dom;
    }
    CatSet<A> const& cod() const noexcept {
      return _cod;
    }
    Index obj(Index x) const noexcept {
      return _f0[x];
    }
    Index arr(Index f) const noexcept {
      return _f1[f];
    }
    std::vector<Index> const& f0() const noexcept {
      return _f0;
    }
    std::vector<Index> const& f1() const noexcept {
      return _f1;
    }

    template <typename B>
    friend bool operator==(InternalFunctor<B> const&, InternalFunctor<B> const&) noexcept;

   private:
    InternalFunctor(CatSet<A> d, CatSet<A> c, std::vector<Index> f0, std::vector<Index> f1)
        : _dom(std::move(d)), _cod(std::move(c)), _f0(std::move(f0)), _f1(std::move(f1)) {}
    CatSet<A>          _dom, _cod;
    std::vector<Index> _f0, _f1;
  };

  template <typename A>
  bool operator==(InternalFunctor<A> const& f, InternalFunctor<A> const& g) noexcept {
    return f._f0 == g._f0 && f._f1 == g._f1 && f._dom == g._dom && f._cod == g._cod;
  }

  //! g after f
  template <typename A>
  InternalFunctor<A> compose(InternalFunctor<A> const& g, InternalFunctor<A> const& f);

  //! An equivariant natural transformation from() => to(); component at x is
  //! an arrow from().obj(x) -> to().obj(x).
  template <typename A>
  class InternalNatTrans {
   public:
    static InternalNatTrans make(InternalFunctor<A> from,
                                 InternalFunctor<A> to,
                                 std::vector<Index> at);
    static InternalNatTrans identity(InternalFunctor<A> const& f);

    InternalFunctor<A> const& from() const noexcept {
      return _from;
    }
    InternalFunctor<A> const& to() const noexcept {
      return _to;
    }
    Index at(Index x) const noexcept {
      return _at[x];
    }
    std::vector<Index> const& components() const noexcept {
      return _at;
    }

   private:
    InternalNatTrans(InternalFunctor<A> f, InternalFunctor<A> t, std::vector<Index> at)
        : _from(std::move(f)), _to(std::move(t)), _at(std::move(at)) {}
    InternalFunctor<A> _from, _to;
    std::vector<Index> _at;
  };

  //! (beta . alpha)(x) = beta(x) after alpha(x); needs alpha.to() == beta.from().
  template <typename A>
  InternalNatTrans<A> vertical_compose(InternalNatTrans<A> const& beta,
                                       InternalNatTrans<A> const& alpha);

  //! The inverse transformation if every component is invertible.
  template <typename A>
  std::optional<InternalNatTrans<A>> invert(InternalNatTrans<A> const& alpha);

  template <typename A>
  bool is_two_isomorphism(InternalNatTrans<A> const& alpha) {
    return invert(alpha).has_value();
  }

  //! Renumber objects and arrows: new index of x is obj_perm[x].
  template <typename A>
  CatSet<A> relabel(CatSet<A> const&          x,
                    std::vector<Index> const& obj_perm,
                    std::vector<Index> const& arr_perm);

  //! The full subcategory on \p objects (which must be closed under the
  //! action), with the inclusion maps.
  template <typename A>
  struct FullSub {
    CatSet<A>          sub;
    std::vector<Index> objects;  // local -> ambient
    std::vector<Index> arrows;   // local -> ambient
  };

  template <typename A>
  FullSub<A> full_subcategory(CatSet<A> const& x, std::vector<Index> objects);

  template <typename A>
  InternalFunctor<A> inclusion(FullSub<A> const& s, CatSet<A> const& ambient);

}  // namespace burncat

#endif  // BURNCAT_CATSET_HPP_
