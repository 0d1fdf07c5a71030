#include "burncat/monoidal.hpp"

#include <numeric>

namespace burncat {

  namespace {
    std::vector<Index> iota(std::size_t n, Index start = 0) {
      std::vector<Index> v(n);
      std::iota(v.begin(), v.end(), start);
      return v;
    }

    template <typename A>
    void same_acting(CatSet<A> const& x, CatSet<A> const& y) {
      if (!(x.acting() == y.acting())) {
        fail(Errc::GroupMismatch, "operands carry different actions");
      }
    }
  }  // namespace

  template <typename A>
  CatSet<A> disjoint_union(CatSet<A> const& x, CatSet<A> const& y) {
    same_acting(x, y);
    auto const         o0 = static_cast<Index>(x.num_objects());
    auto const         o1 = static_cast<Index>(x.num_arrows());
    std::size_t const  n1 = x.num_arrows() + y.num_arrows();
    std::vector<Index> src = x.src_table(), tgt = x.tgt_table(), ident = x.ident_table();
    for (Index f = 0; f < y.num_arrows(); ++f) {
      src.push_back(y.src(f) + o0);
      tgt.push_back(y.tgt(f) + o0);
    }
    for (Index o = 0; o < y.num_objects(); ++o) {
      ident.push_back(y.ident(o) + o1);
    }
    std::vector<Index> comp(n1 * n1, kNone);
    for (Index p = 0; p < x.num_arrows(); ++p) {
      for (Index q = 0; q < x.num_arrows(); ++q) {
        comp[p * n1 + q] = x.comp(p, q);
      }
    }
    for (Index p = 0; p < y.num_arrows(); ++p) {
      for (Index q = 0; q < y.num_arrows(); ++q) {
        Index r = y.comp(p, q);
        if (r != kNone) {
          comp[(p + o1) * n1 + q + o1] = r + o1;
        }
      }
    }
    return CatSet<A>::make_dense(disjoint_union(x.objects(), y.objects()),
                                 disjoint_union(x.arrows(), y.arrows()), std::move(src),
                                 std::move(tgt), std::move(ident), std::move(comp));
  }

  template <typename A>
  InternalFunctor<A> union_left(CatSet<A> const& x, CatSet<A> const& y) {
    return InternalFunctor<A>::make(x, disjoint_union(x, y), iota(x.num_objects()),
                                    iota(x.num_arrows()));
  }

  template <typename A>
  InternalFunctor<A> union_right(CatSet<A> const& x, CatSet<A> const& y) {
    return InternalFunctor<A>::make(
        y, disjoint_union(x, y), iota(y.num_objects(), static_cast<Index>(x.num_objects())),
        iota(y.num_arrows(), static_cast<Index>(x.num_arrows())));
  }

  template <typename A>
  InternalFunctor<A> functor_union(InternalFunctor<A> const& f, InternalFunctor<A> const& g) {
    auto const         o0 = static_cast<Index>(f.cod().num_objects());
    auto const         o1 = static_cast<Index>(f.cod().num_arrows());
    std::vector<Index> f0 = f.f0(), f1 = f.f1();
    for (Index v : g.f0()) {
      f0.push_back(v + o0);
    }
    for (Index v : g.f1()) {
      f1.push_back(v + o1);
    }
    return InternalFunctor<A>::make(disjoint_union(f.dom(), g.dom()),
                                    disjoint_union(f.cod(), g.cod()), std::move(f0),
                                    std::move(f1));
  }

  template <typename A>
  InternalNatTrans<A> nat_union(InternalNatTrans<A> const& a, InternalNatTrans<A> const& b) {
    auto const         o1 = static_cast<Index>(a.from().cod().num_arrows());
    std::vector<Index> at = a.components();
    for (Index v : b.components()) {
      at.push_back(v + o1);
    }
    return InternalNatTrans<A>::make(functor_union(a.from(), b.from()),
                                     functor_union(a.to(), b.to()), std::move(at));
  }

  template <typename A>
  CatSet<A> product(CatSet<A> const& x, CatSet<A> const& y) {
    same_acting(x, y);
    auto const         l0 = pair_layout(x.objects(), y.objects());
    auto const         l1 = pair_layout(x.arrows(), y.arrows());
    std::size_t const  n1 = l1.pairs.size();
    std::vector<Index> src, tgt, ident, comp(n1 * n1, kNone);
    for (auto [f, k] : l1.pairs) {
      src.push_back(l0.at(x.src(f), y.src(k)));
      tgt.push_back(l0.at(x.tgt(f), y.tgt(k)));
    }
    for (auto [a, b] : l0.pairs) {
      ident.push_back(l1.at(x.ident(a), y.ident(b)));
    }
    for (Index i = 0; i < n1; ++i) {
      auto [p, pp] = l1.pairs[i];
      for (Index j = 0; j < n1; ++j) {
        auto [q, qq] = l1.pairs[j];
        Index r = x.comp(p, q), rr = y.comp(pp, qq);
        if (r != kNone && rr != kNone) {
          comp[i * n1 + j] = l1.at(r, rr);
        }
      }
    }
    return CatSet<A>::make_dense(fibre_product(x.objects(), y.objects()),
                                 fibre_product(x.arrows(), y.arrows()), std::move(src),
                                 std::move(tgt), std::move(ident), std::move(comp));
  }

  template <typename A>
  InternalFunctor<A> functor_product(InternalFunctor<A> const& f, InternalFunctor<A> const& g) {
    auto const dom = product(f.dom(), g.dom());
    auto const cod = product(f.cod(), g.cod());
    auto const d0  = pair_layout(f.dom().objects(), g.dom().objects());
    auto const d1  = pair_layout(f.dom().arrows(), g.dom().arrows());
    auto const c0  = pair_layout(f.cod().objects(), g.cod().objects());
    auto const c1  = pair_layout(f.cod().arrows(), g.cod().arrows());
    std::vector<Index> h0, h1;
    for (auto [a, b] : d0.pairs) {
      h0.push_back(c0.at(f.obj(a), g.obj(b)));
    }
    for (auto [a, b] : d1.pairs) {
      h1.push_back(c1.at(f.arr(a), g.arr(b)));
    }
    return InternalFunctor<A>::make(dom, cod, std::move(h0), std::move(h1));
  }

  template <typename A>
  InternalNatTrans<A> nat_product(InternalNatTrans<A> const& a, InternalNatTrans<A> const& b) {
    auto const d0 = pair_layout(a.from().dom().objects(), b.from().dom().objects());
    auto const c1 = pair_layout(a.from().cod().arrows(), b.from().cod().arrows());
    std::vector<Index> at;
    for (auto [x, y] : d0.pairs) {
      at.push_back(c1.at(a.at(x), b.at(y)));
    }
    return InternalNatTrans<A>::make(functor_product(a.from(), b.from()),
                                     functor_product(a.to(), b.to()), std::move(at));
  }

  template <typename A>
  CatSet<A> include(ActionSet<A> const& x) {
    std::size_t const  n = x.size();
    std::vector<Index> id = iota(n), comp(n * n, kNone);
    for (Index i = 0; i < n; ++i) {
      comp[i * n + i] = i;
    }
    return CatSet<A>::make_dense(x, x, id, id, id, std::move(comp));
  }

  template <typename A>
  CatSet<A> unit_object(A const& acting) {
    return include(unit_set(acting));
  }

  template <typename A>
  Isomorphism<A> right_unitor(CatSet<A> const& x) {
    auto const         u  = unit_object(x.acting());
    auto const         p  = product(x, u);
    auto const         l0 = pair_layout(x.objects(), u.objects());
    auto const         l1 = pair_layout(x.arrows(), u.arrows());
    std::vector<Index> f0, f1, b0, b1;
    for (auto [a, c] : l0.pairs) {
      f0.push_back(a);
    }
    for (auto [f, c] : l1.pairs) {
      f1.push_back(f);
    }
    for (Index a = 0; a < x.num_objects(); ++a) {
      b0.push_back(l0.at(a, x.objects().color(a)));
    }
    for (Index f = 0; f < x.num_arrows(); ++f) {
      b1.push_back(l1.at(f, x.arrows().color(f)));
    }
    return {InternalFunctor<A>::make(p, x, std::move(f0), std::move(f1)),
            InternalFunctor<A>::make(x, p, std::move(b0), std::move(b1))};
  }

  template <typename A>
  Isomorphism<A> left_unitor(CatSet<A> const& x) {
    auto const         u  = unit_object(x.acting());
    auto const         p  = product(u, x);
    auto const         l0 = pair_layout(u.objects(), x.objects());
    auto const         l1 = pair_layout(u.arrows(), x.arrows());
    std::vector<Index> f0, f1, b0, b1;
    for (auto [c, a] : l0.pairs) {
      f0.push_back(a);
    }
    for (auto [c, f] : l1.pairs) {
      f1.push_back(f);
    }
    for (Index a = 0; a < x.num_objects(); ++a) {
      b0.push_back(l0.at(x.objects().color(a), a));
    }
    for (Index f = 0; f < x.num_arrows(); ++f) {
      b1.push_back(l1.at(x.arrows().color(f), f));
    }
    return {InternalFunctor<A>::make(p, x, std::move(f0), std::move(f1)),
            InternalFunctor<A>::make(x, p, std::move(b0), std::move(b1))};
  }

  namespace {
    // Index map (u, z) -> position in (X x Z) + (Y x Z) for one level.
    template <typename A>
    std::vector<Index> distribute(ActionSet<A> const& x,
                                  ActionSet<A> const& y,
                                  ActionSet<A> const& z) {
      auto const lu  = pair_layout(disjoint_union(x, y), z);
      auto const lx  = pair_layout(x, z);
      auto const ly  = pair_layout(y, z);
      auto const off = static_cast<Index>(lx.pairs.size());
      std::vector<Index> out;
      for (auto [u, c] : lu.pairs) {
        out.push_back(u < x.size() ? lx.at(u, c)
                                   : off + ly.at(u - static_cast<Index>(x.size()), c));
      }
      return out;
    }

    std::vector<Index> inverse_perm(std::vector<Index> const& p) {
      std::vector<Index> q(p.size());
      for (Index i = 0; i < p.size(); ++i) {
        q[p[i]] = i;
      }
      return q;
    }
  }  // namespace

  template <typename A>
  Isomorphism<A> distributor(CatSet<A> const& x, CatSet<A> const& y, CatSet<A> const& z) {
    auto const dom = product(disjoint_union(x, y), z);
    auto const cod = disjoint_union(product(x, z), product(y, z));
    auto       f0  = distribute(x.objects(), y.objects(), z.objects());
    auto       f1  = distribute(x.arrows(), y.arrows(), z.arrows());
    auto       b0  = inverse_perm(f0);
    auto       b1  = inverse_perm(f1);
    return {InternalFunctor<A>::make(dom, cod, std::move(f0), std::move(f1)),
            InternalFunctor<A>::make(cod, dom, std::move(b0), std::move(b1))};
  }

  namespace {
    template <typename A>
    std::vector<Index> reassociate(ActionSet<A> const& x,
                                   ActionSet<A> const& y,
                                   ActionSet<A> const& z) {
      auto const lxy  = pair_layout(x, y);
      auto const lxy_z = pair_layout(fibre_product(x, y), z);
      auto const lyz  = pair_layout(y, z);
      auto const lx_yz = pair_layout(x, fibre_product(y, z));
      std::vector<Index> out;
      for (auto [u, c] : lxy_z.pairs) {
        auto [a, b] = lxy.pairs[u];
        out.push_back(lx_yz.at(a, lyz.at(b, c)));
      }
      return out;
    }
  }  // namespace

  template <typename A>
  Isomorphism<A> associator(CatSet<A> const& x, CatSet<A> const& y, CatSet<A> const& z) {
    auto const dom = product(product(x, y), z);
    auto const cod = product(x, product(y, z));
    auto       f0  = reassociate(x.objects(), y.objects(), z.objects());
    auto       f1  = reassociate(x.arrows(), y.arrows(), z.arrows());
    auto       b0  = inverse_perm(f0);
    auto       b1  = inverse_perm(f1);
    return {InternalFunctor<A>::make(dom, cod, std::move(f0), std::move(f1)),
            InternalFunctor<A>::make(cod, dom, std::move(b0), std::move(b1))};
  }

  namespace {
    GSet times_set(std::size_t count, GSet const& x) {
      std::size_t const  m = x.acting().order();
      auto const         n = static_cast<Index>(x.size());
      std::vector<Index> act;
      for (Index a = 0; a < count; ++a) {
        for (Index p = 0; p < n; ++p) {
          for (Index g = 0; g < m; ++g) {
            act.push_back(a * n + x.act(p, g));
          }
        }
      }
      return GSet::make(x.acting(), std::vector<Index>(count * n, 0), std::move(act));
    }
  }  // namespace

  CatGSet category_times_gset(PlainCategory const& c, GSet const& x) {
    if (c.acting().order() != 1) {
      fail(Errc::GroupMismatch, "the category must carry the trivial group");
    }
    auto const         n  = static_cast<Index>(x.size());
    std::size_t const  n1 = c.num_arrows() * n;
    std::vector<Index> src, tgt, ident, comp(n1 * n1, kNone);
    for (Index f = 0; f < c.num_arrows(); ++f) {
      for (Index p = 0; p < n; ++p) {
        src.push_back(c.src(f) * n + p);
        tgt.push_back(c.tgt(f) * n + p);
      }
    }
    for (Index o = 0; o < c.num_objects(); ++o) {
      for (Index p = 0; p < n; ++p) {
        ident.push_back(c.ident(o) * n + p);
      }
    }
    for (Index f = 0; f < c.num_arrows(); ++f) {
      for (Index k = 0; k < c.num_arrows(); ++k) {
        Index r = c.comp(f, k);
        if (r == kNone) {
          continue;
        }
        for (Index p = 0; p < n; ++p) {
          comp[(f * n + p) * n1 + k * n + p] = r * n + p;
        }
      }
    }
    return CatGSet::make_dense(times_set(c.num_objects(), x), times_set(c.num_arrows(), x),
                               std::move(src), std::move(tgt), std::move(ident),
                               std::move(comp));
  }

  InternalFunctor<Group> lift_functor(InternalFunctor<Group> const& f,
                                      GSet const&                   x,
                                      GSet const&                   y,
                                      std::vector<Index> const&     phi) {
    if (phi.size() != x.size()) {
      fail(Errc::OutOfRange, "set map has the wrong length");
    }
    auto const         nx = static_cast<Index>(x.size());
    auto const         ny = static_cast<Index>(y.size());
    std::vector<Index> f0, f1;
    for (Index a = 0; a < f.dom().num_objects(); ++a) {
      for (Index p = 0; p < nx; ++p) {
        f0.push_back(f.obj(a) * ny + phi[p]);
      }
    }
    for (Index a = 0; a < f.dom().num_arrows(); ++a) {
      for (Index p = 0; p < nx; ++p) {
        f1.push_back(f.arr(a) * ny + phi[p]);
      }
    }
    return InternalFunctor<Group>::make(category_times_gset(f.dom(), x),
                                        category_times_gset(f.cod(), y), std::move(f0),
                                        std::move(f1));
  }

  InternalNatTrans<Group> lift_nat(InternalNatTrans<Group> const& mu,
                                   GSet const&                    x,
                                   GSet const&                    y,
                                   std::vector<Index> const&      phi) {
    auto const         nx = static_cast<Index>(x.size());
    auto const         ny = static_cast<Index>(y.size());
    std::vector<Index> at;
    for (Index a = 0; a < mu.from().dom().num_objects(); ++a) {
      for (Index p = 0; p < nx; ++p) {
        at.push_back(mu.at(a) * ny + phi[p]);
      }
    }
    return InternalNatTrans<Group>::make(lift_functor(mu.from(), x, y, phi),
                                         lift_functor(mu.to(), x, y, phi), std::move(at));
  }

  PlainCategory underlying(CatGSet const& x) {
    auto const triv = Group::trivial();
    auto const o    = iota(x.num_objects());
    auto const a    = iota(x.num_arrows());
    return PlainCategory::make_dense(
        GSet::make(triv, std::vector<Index>(o.size(), 0), o),
        GSet::make(triv, std::vector<Index>(a.size(), 0), a), x.src_table(), x.tgt_table(),
        x.ident_table(), x.comp_table());
  }

#define BURNCAT_INSTANTIATE(A)                                                         \
  template CatSet<A> disjoint_union(CatSet<A> const&, CatSet<A> const&);               \
  template InternalFunctor<A> union_left(CatSet<A> const&, CatSet<A> const&);          \
  template InternalFunctor<A> union_right(CatSet<A> const&, CatSet<A> const&);         \
  template InternalFunctor<A> functor_union(InternalFunctor<A> const&,                 \
                                            InternalFunctor<A> const&);                \
  template InternalNatTrans<A> nat_union(InternalNatTrans<A> const&,                   \
                                         InternalNatTrans<A> const&);                  \
  template CatSet<A> product(CatSet<A> const&, CatSet<A> const&);                      \
  template InternalFunctor<A> functor_product(InternalFunctor<A> const&,               \
                                              InternalFunctor<A> const&);              \
  template InternalNatTrans<A> nat_product(InternalNatTrans<A> const&,                 \
                                           InternalNatTrans<A> const&);                \
  template CatSet<A> include(ActionSet<A> const&);                                     \
  template CatSet<A> unit_object(A const&);                                            \
  template Isomorphism<A> right_unitor(CatSet<A> const&);                              \
  template Isomorphism<A> left_unitor(CatSet<A> const&);                               \
  template Isomorphism<A> distributor(CatSet<A> const&, CatSet<A> const&,              \
                                      CatSet<A> const&);                               \
  template Isomorphism<A> associator(CatSet<A> const&, CatSet<A> const&,               \
                                     CatSet<A> const&);

  BURNCAT_INSTANTIATE(Group)
  BURNCAT_INSTANTIATE(Groupoid)

#undef BURNCAT_INSTANTIATE

}  // namespace burncat
