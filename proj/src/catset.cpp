#include "burncat/catset.hpp"

#include <algorithm>
#include <string>

namespace burncat {

  namespace {
    std::string str(Index i) {
      return std::to_string(i);
    }

    void check_range(std::vector<Index> const& v, std::size_t bound, char const* what) {
      for (std::size_t i = 0; i < v.size(); ++i) {
        if (v[i] >= bound) {
          fail(Errc::OutOfRange, std::string(what) + "[" + std::to_string(i)
                                     + "] = " + str(v[i]));
        }
      }
    }

    template <typename A>
    void check_map_equivariant(ActionSet<A> const&       x,
                               ActionSet<A> const&       y,
                               std::vector<Index> const& map,
                               char const*               what) {
      if (auto bad = equivariance_violation(x, y, map)) {
        if (bad->second == kNone) {
          fail(Errc::NotEquivariant,
               std::string(what) + " changes the color of " + str(bad->first));
        }
        fail(Errc::NotEquivariant, std::string(what) + " at " + str(bad->first)
                                       + " . " + str(bad->second));
      }
    }
  }  // namespace

  template <typename A>
  CatSet<A> CatSet<A>::make(ActionSet<A>                      objects,
                            ActionSet<A>                      arrows,
                            std::vector<Index>                src,
                            std::vector<Index>                tgt,
                            std::vector<Index>                ident,
                            std::vector<std::array<Index, 3>> comp) {
    std::size_t const n1 = arrows.size();
    if (src.size() != n1 || tgt.size() != n1) {
      fail(Errc::OutOfRange, "src and tgt need one entry per arrow");
    }
    check_range(src, objects.size(), "src");
    check_range(tgt, objects.size(), "tgt");
    std::vector<Index> dense(n1 * n1, kNone);
    for (auto const& [p, q, r] : comp) {
      if (p >= n1 || q >= n1 || r >= n1) {
        fail(Errc::OutOfRange, "composition triple (" + str(p) + ", " + str(q) + ", "
                                   + str(r) + ")");
      }
      if (src[p] != tgt[q]) {
        fail(Errc::CompDomainMismatch,
             "entry for non-composable pair (" + str(p) + ", " + str(q) + ")");
      }
      if (dense[p * n1 + q] != kNone) {
        fail(Errc::CompDomainMismatch,
             "pair (" + str(p) + ", " + str(q) + ") listed twice");
      }
      dense[p * n1 + q] = r;
    }
    return make_dense(std::move(objects), std::move(arrows), std::move(src),
                      std::move(tgt), std::move(ident), std::move(dense));
  }

  template <typename A>
  CatSet<A> CatSet<A>::make_dense(ActionSet<A>       objects,
                                  ActionSet<A>       arrows,
                                  std::vector<Index> src,
                                  std::vector<Index> tgt,
                                  std::vector<Index> ident,
                                  std::vector<Index> comp) {
    if (!(objects.acting() == arrows.acting())) {
      fail(Errc::GroupMismatch, "objects and arrows carry different actions");
    }
    std::size_t const n0 = objects.size();
    std::size_t const n1 = arrows.size();
    if (src.size() != n1 || tgt.size() != n1 || ident.size() != n0
        || comp.size() != n1 * n1) {
      fail(Errc::OutOfRange, "structure tables have inconsistent lengths");
    }
    check_range(src, n0, "src");
    check_range(tgt, n0, "tgt");
    check_range(ident, n1, "ident");
    for (Index p = 0; p < n1; ++p) {
      for (Index q = 0; q < n1; ++q) {
        Index r = comp[p * n1 + q];
        if (r != kNone && r >= n1) {
          fail(Errc::OutOfRange, "composite of (" + str(p) + ", " + str(q) + ")");
        }
        if ((src[p] == tgt[q]) != (r != kNone)) {
          fail(Errc::CompDomainMismatch,
               "pair (" + str(p) + ", " + str(q) + ")"
                   + (r == kNone ? " is composable but has no composite"
                                 : " is not composable but has a composite"));
        }
      }
    }
    check_map_equivariant(arrows, objects, src, "src");
    check_map_equivariant(arrows, objects, tgt, "tgt");
    check_map_equivariant(objects, arrows, ident, "ident");

    for (Index x = 0; x < n0; ++x) {
      if (src[ident[x]] != x || tgt[ident[x]] != x) {
        fail(Errc::CategoryAxiomViolated, "identity of " + str(x) + " is not a loop at it");
      }
    }
    for (Index p = 0; p < n1; ++p) {
      for (Index q = 0; q < n1; ++q) {
        Index r = comp[p * n1 + q];
        if (r != kNone && (src[r] != src[q] || tgt[r] != tgt[p])) {
          fail(Errc::CategoryAxiomViolated,
               "endpoints of " + str(p) + " after " + str(q));
        }
      }
    }
    for (Index f = 0; f < n1; ++f) {
      if (comp[f * n1 + ident[src[f]]] != f || comp[ident[tgt[f]] * n1 + f] != f) {
        fail(Errc::CategoryAxiomViolated, "unit law at arrow " + str(f));
      }
    }
    for (Index p = 0; p < n1; ++p) {
      for (Index q = 0; q < n1; ++q) {
        Index pq = comp[p * n1 + q];
        if (pq == kNone) {
          continue;
        }
        for (Index r = 0; r < n1; ++r) {
          Index qr = comp[q * n1 + r];
          if (qr != kNone && comp[pq * n1 + r] != comp[p * n1 + qr]) {
            fail(Errc::CategoryAxiomViolated, "associativity at (" + str(p) + ", "
                                                  + str(q) + ", " + str(r) + ")");
          }
        }
      }
    }
    A const&          acting = objects.acting();
    std::size_t const m      = acting.num_elements();
    for (Index p = 0; p < n1; ++p) {
      for (Index q = 0; q < n1; ++q) {
        Index r = comp[p * n1 + q];
        if (r == kNone) {
          continue;
        }
        for (Index g = 0; g < m; ++g) {
          Index pg = arrows.act(p, g);
          if (pg == kNone) {
            continue;
          }
          if (comp[pg * n1 + arrows.act(q, g)] != arrows.act(r, g)) {
            fail(Errc::NotEquivariant, "composition of (" + str(p) + ", " + str(q)
                                           + ") under element " + str(g));
          }
        }
      }
    }

    auto d     = std::make_shared<Data>(Data{std::move(objects), std::move(arrows),
                                         std::move(src), std::move(tgt),
                                         std::move(ident), std::move(comp), {}});
    d->hom.resize(n0 * n0);
    for (Index f = 0; f < n1; ++f) {
      d->hom[d->src[f] * n0 + d->tgt[f]].push_back(f);
    }
    return CatSet(std::move(d));
  }

  template <typename A>
  Index CatSet<A>::compose(Index p, Index q) const {
    if (p >= num_arrows() || q >= num_arrows()) {
      fail(Errc::OutOfRange, "arrow index");
    }
    if (!composable(p, q)) {
      fail(Errc::NotComposable, "src(" + str(p) + ") != tgt(" + str(q) + ")");
    }
    return comp(p, q);
  }

  template <typename A>
  std::vector<std::array<Index, 3>> CatSet<A>::composition_triples() const {
    std::vector<std::array<Index, 3>> out;
    for (Index p = 0; p < num_arrows(); ++p) {
      for (Index q = 0; q < num_arrows(); ++q) {
        if (comp(p, q) != kNone) {
          out.push_back({p, q, comp(p, q)});
        }
      }
    }
    return out;
  }

  template <typename A>
  std::optional<Index> CatSet<A>::inverse(Index f) const {
    for (Index g : hom(tgt(f), src(f))) {
      if (comp(g, f) == ident(src(f)) && comp(f, g) == ident(tgt(f))) {
        return g;
      }
    }
    return std::nullopt;
  }

  template <typename A>
  InternalFunctor<A> InternalFunctor<A>::make(CatSet<A>          dom,
                                              CatSet<A>          cod,
                                              std::vector<Index> f0,
                                              std::vector<Index> f1) {
    if (!(dom.acting() == cod.acting())) {
      fail(Errc::GroupMismatch, "functor between different acting structures");
    }
    if (f0.size() != dom.num_objects() || f1.size() != dom.num_arrows()) {
      fail(Errc::OutOfRange, "functor tables have the wrong length");
    }
    check_range(f0, cod.num_objects(), "f0");
    check_range(f1, cod.num_arrows(), "f1");
    check_map_equivariant(dom.objects(), cod.objects(), f0, "f0");
    check_map_equivariant(dom.arrows(), cod.arrows(), f1, "f1");
    for (Index f = 0; f < dom.num_arrows(); ++f) {
      if (cod.src(f1[f]) != f0[dom.src(f)]) {
        fail(Errc::NotFunctorial, "source of the image of arrow " + str(f));
      }
      if (cod.tgt(f1[f]) != f0[dom.tgt(f)]) {
        fail(Errc::NotFunctorial, "target of the image of arrow " + str(f));
      }
    }
    for (Index x = 0; x < dom.num_objects(); ++x) {
      if (f1[dom.ident(x)] != cod.ident(f0[x])) {
        fail(Errc::NotFunctorial, "identity of object " + str(x));
      }
    }
    for (Index p = 0; p < dom.num_arrows(); ++p) {
      for (Index q = 0; q < dom.num_arrows(); ++q) {
        Index r = dom.comp(p, q);
        if (r != kNone && f1[r] != cod.comp(f1[p], f1[q])) {
          fail(Errc::NotFunctorial,
               "composite of (" + str(p) + ", " + str(q) + ")");
        }
      }
    }
    return InternalFunctor(std::move(dom), std::move(cod), std::move(f0), std::move(f1));
  }

  template <typename A>
  InternalFunctor<A> InternalFunctor<A>::identity(CatSet<A> const& x) {
    std::vector<Index> f0(x.num_objects()), f1(x.num_arrows());
    for (Index i = 0; i < f0.size(); ++i) {
      f0[i] = i;
    }
    for (Index i = 0; i < f1.size(); ++i) {
      f1[i] = i;
    }
    return InternalFunctor(x, x, std::move(f0), std::move(f1));
  }

  template <typename A>
  InternalFunctor<A> compose(InternalFunctor<A> const& g, InternalFunctor<A> const& f) {
    if (!(f.cod() == g.dom())) {
      fail(Errc::EndpointMismatch, "functors are not composable");
    }
    std::vector<Index> h0(f.f0().size()), h1(f.f1().size());
    for (Index x = 0; x < h0.size(); ++x) {
      h0[x] = g.obj(f.obj(x));
    }
    for (Index a = 0; a < h1.size(); ++a) {
      h1[a] = g.arr(f.arr(a));
    }
    return InternalFunctor<A>::make(f.dom(), g.cod(), std::move(h0), std::move(h1));
  }

  template <typename A>
  InternalNatTrans<A> InternalNatTrans<A>::make(InternalFunctor<A> from,
                                                InternalFunctor<A> to,
                                                std::vector<Index> at) {
    if (!(from.dom() == to.dom()) || !(from.cod() == to.cod())) {
      fail(Errc::EndpointMismatch, "functors have different domains or codomains");
    }
    CatSet<A> const& x = from.dom();
    CatSet<A> const& y = from.cod();
    if (at.size() != x.num_objects()) {
      fail(Errc::OutOfRange, "need one component per object");
    }
    check_range(at, y.num_arrows(), "component");
    for (Index o = 0; o < x.num_objects(); ++o) {
      if (y.src(at[o]) != from.obj(o) || y.tgt(at[o]) != to.obj(o)) {
        fail(Errc::EndpointMismatch, "component at object " + str(o));
      }
    }
    check_map_equivariant(x.objects(), y.arrows(), at, "component map");
    for (Index f = 0; f < x.num_arrows(); ++f) {
      if (y.comp(to.arr(f), at[x.src(f)]) != y.comp(at[x.tgt(f)], from.arr(f))) {
        fail(Errc::NaturalityViolated, "square at arrow " + str(f));
      }
    }
    return InternalNatTrans(std::move(from), std::move(to), std::move(at));
  }

  template <typename A>
  InternalNatTrans<A> InternalNatTrans<A>::identity(InternalFunctor<A> const& f) {
    std::vector<Index> at(f.dom().num_objects());
    for (Index o = 0; o < at.size(); ++o) {
      at[o] = f.cod().ident(f.obj(o));
    }
    return InternalNatTrans(f, f, std::move(at));
  }

  template <typename A>
  InternalNatTrans<A> vertical_compose(InternalNatTrans<A> const& beta,
                                       InternalNatTrans<A> const& alpha) {
    if (!(alpha.to() == beta.from())) {
      fail(Errc::EndpointMismatch, "transformations are not composable");
    }
    CatSet<A> const&   y = alpha.from().cod();
    std::vector<Index> at(alpha.components().size());
    for (Index o = 0; o < at.size(); ++o) {
      at[o] = y.comp(beta.at(o), alpha.at(o));
    }
    return InternalNatTrans<A>::make(alpha.from(), beta.to(), std::move(at));
  }

  template <typename A>
  std::optional<InternalNatTrans<A>> invert(InternalNatTrans<A> const& alpha) {
    CatSet<A> const&   y = alpha.from().cod();
    std::vector<Index> at(alpha.components().size());
    for (Index o = 0; o < at.size(); ++o) {
      auto inv = y.inverse(alpha.at(o));
      if (!inv) {
        return std::nullopt;
      }
      at[o] = *inv;
    }
    return InternalNatTrans<A>::make(alpha.to(), alpha.from(), std::move(at));
  }

  template <typename A>
  CatSet<A> relabel(CatSet<A> const&          x,
                    std::vector<Index> const& obj_perm,
                    std::vector<Index> const& arr_perm) {
    std::size_t const  n0 = x.num_objects();
    std::size_t const  n1 = x.num_arrows();
    std::vector<Index> src(n1), tgt(n1), ident(n0), comp(n1 * n1, kNone);
    for (Index f = 0; f < n1; ++f) {
      src[arr_perm[f]] = obj_perm[x.src(f)];
      tgt[arr_perm[f]] = obj_perm[x.tgt(f)];
    }
    for (Index o = 0; o < n0; ++o) {
      ident[obj_perm[o]] = arr_perm[x.ident(o)];
    }
    for (Index p = 0; p < n1; ++p) {
      for (Index q = 0; q < n1; ++q) {
        Index r = x.comp(p, q);
        if (r != kNone) {
          comp[arr_perm[p] * n1 + arr_perm[q]] = arr_perm[r];
        }
      }
    }
    return CatSet<A>::make_dense(relabel(x.objects(), obj_perm),
                                 relabel(x.arrows(), arr_perm), std::move(src),
                                 std::move(tgt), std::move(ident), std::move(comp));
  }

  namespace {
    template <typename A>
    ActionSet<A> restrict_action(ActionSet<A> const&       x,
                                 std::vector<Index> const& keep,
                                 std::vector<Index> const& pos) {
      std::size_t const  m = x.acting().num_elements();
      std::vector<Index> color, act;
      for (Index p : keep) {
        color.push_back(x.color(p));
        for (Index g = 0; g < m; ++g) {
          Index q = x.act(p, g);
          if (q != kNone && pos[q] == kNone) {
            fail(Errc::NotEquivariant, "subset is not closed under the action");
          }
          act.push_back(q == kNone ? kNone : pos[q]);
        }
      }
      return ActionSet<A>::make(x.acting(), std::move(color), std::move(act));
    }
  }  // namespace

  template <typename A>
  FullSub<A> full_subcategory(CatSet<A> const& x, std::vector<Index> objects) {
    std::sort(objects.begin(), objects.end());
    objects.erase(std::unique(objects.begin(), objects.end()), objects.end());
    std::vector<Index> opos(x.num_objects(), kNone), apos(x.num_arrows(), kNone);
    for (Index i = 0; i < objects.size(); ++i) {
      if (objects[i] >= x.num_objects()) {
        fail(Errc::OutOfRange, "object " + str(objects[i]));
      }
      opos[objects[i]] = i;
    }
    std::vector<Index> arrows;
    for (Index f = 0; f < x.num_arrows(); ++f) {
      if (opos[x.src(f)] != kNone && opos[x.tgt(f)] != kNone) {
        apos[f] = static_cast<Index>(arrows.size());
        arrows.push_back(f);
      }
    }
    std::size_t const  n1 = arrows.size();
    std::vector<Index> src, tgt, ident, comp(n1 * n1, kNone);
    for (Index f : arrows) {
      src.push_back(opos[x.src(f)]);
      tgt.push_back(opos[x.tgt(f)]);
    }
    for (Index o : objects) {
      ident.push_back(apos[x.ident(o)]);
    }
    for (Index i = 0; i < n1; ++i) {
      for (Index j = 0; j < n1; ++j) {
        Index r = x.comp(arrows[i], arrows[j]);
        if (r != kNone) {
          comp[i * n1 + j] = apos[r];
        }
      }
    }
    auto sub = CatSet<A>::make_dense(restrict_action(x.objects(), objects, opos),
                                     restrict_action(x.arrows(), arrows, apos),
                                     std::move(src), std::move(tgt), std::move(ident),
                                     std::move(comp));
    return {std::move(sub), std::move(objects), std::move(arrows)};
  }

  template <typename A>
  InternalFunctor<A> inclusion(FullSub<A> const& s, CatSet<A> const& ambient) {
    return InternalFunctor<A>::make(s.sub, ambient, s.objects, s.arrows);
  }

#define BURNCAT_INSTANTIATE(A)                                                         \
  template class CatSet<A>;                                                            \
  template class InternalFunctor<A>;                                                   \
  template class InternalNatTrans<A>;                                                  \
  template InternalFunctor<A> compose(InternalFunctor<A> const&,                       \
                                      InternalFunctor<A> const&);                      \
  template InternalNatTrans<A> vertical_compose(InternalNatTrans<A> const&,            \
                                                InternalNatTrans<A> const&);           \
  template std::optional<InternalNatTrans<A>> invert(InternalNatTrans<A> const&);      \
  template CatSet<A> relabel(CatSet<A> const&, std::vector<Index> const&,              \
                             std::vector<Index> const&);                               \
  template FullSub<A> full_subcategory(CatSet<A> const&, std::vector<Index>);          \
  template InternalFunctor<A> inclusion(FullSub<A> const&, CatSet<A> const&);

  BURNCAT_INSTANTIATE(Group)
  BURNCAT_INSTANTIATE(Groupoid)

#undef BURNCAT_INSTANTIATE

}  // namespace burncat
