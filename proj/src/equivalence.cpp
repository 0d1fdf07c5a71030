#include "burncat/equivalence.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

#include "orbit_tree.hpp"

namespace burncat {

  namespace {

    using detail::fixed_by;
    using detail::orbit_tree;
    using detail::OrbitTree;

    std::string str(Index i) {
      return std::to_string(i);
    }

    std::vector<Index> identity_perm(std::size_t n) {
      std::vector<Index> v(n);
      std::iota(v.begin(), v.end(), 0);
      return v;
    }

    template <typename A>
    void revalidate(CatSet<A> const& x, CatSet<A> const& y, WeakEquivWitness<A> const& w) {
      auto r = check_witness(x, y, w);
      if (!r.ok) {
        throw std::logic_error("constructed witness failed re-validation: " + r.reason);
      }
    }

  }  // namespace

  char const* to_string(Route r) noexcept {
    switch (r) {
      case Route::Invariants: return "invariants";
      case Route::Skeleton: return "skeleton";
      case Route::SkeletonObstruction: return "skeleton-obstruction";
      case Route::Search: return "search";
      case Route::NotApplicable: return "not-applicable";
    }
    return "unknown";
  }

  template <typename A>
  WitnessTables tables(WeakEquivWitness<A> const& w) {
    return {w.forward.f0(),  w.forward.f1(),        w.backward.f0(),
            w.backward.f1(), w.alpha.components(), w.beta.components()};
  }

  template <typename A>
  CheckResult check_witness(CatSet<A> const& x, CatSet<A> const& y, WitnessTables const& w) {
    try {
      auto const phi = InternalFunctor<A>::make(x, y, w.forward0, w.forward1);
      auto const psi = InternalFunctor<A>::make(y, x, w.backward0, w.backward1);
      auto const a   = InternalNatTrans<A>::make(compose(psi, phi),
                                               InternalFunctor<A>::identity(x), w.alpha);
      auto const b   = InternalNatTrans<A>::make(compose(phi, psi),
                                               InternalFunctor<A>::identity(y), w.beta);
      for (Index o = 0; o < x.num_objects(); ++o) {
        if (!x.inverse(a.at(o))) {
          return {false, "alpha is not invertible at object " + str(o)};
        }
      }
      for (Index o = 0; o < y.num_objects(); ++o) {
        if (!y.inverse(b.at(o))) {
          return {false, "beta is not invertible at object " + str(o)};
        }
      }
    } catch (Error const& e) {
      return {false, e.what()};
    }
    return {true, ""};
  }

  template <typename A>
  WeakEquivWitness<A> witness_from_isomorphism(Isomorphism<A> const& iso) {
    auto const& x = iso.forward.dom();
    auto const& y = iso.forward.cod();
    return {iso.forward, iso.backward,
            InternalNatTrans<A>::make(compose(iso.backward, iso.forward),
                                      InternalFunctor<A>::identity(x), x.ident_table()),
            InternalNatTrans<A>::make(compose(iso.forward, iso.backward),
                                      InternalFunctor<A>::identity(y), y.ident_table())};
  }

  template <typename A>
  WeakEquivWitness<A> reverse(WeakEquivWitness<A> const& w) {
    return {w.backward, w.forward, w.beta, w.alpha};
  }

  template <typename A>
  WeakEquivWitness<A> compose(WeakEquivWitness<A> const& xy, WeakEquivWitness<A> const& yz) {
    auto const&        x   = xy.forward.dom();
    auto const&        z   = yz.forward.cod();
    auto const         phi = compose(yz.forward, xy.forward);
    auto const         psi = compose(xy.backward, yz.backward);
    std::vector<Index> a(x.num_objects()), b(z.num_objects());
    for (Index o = 0; o < a.size(); ++o) {
      a[o] = x.comp(xy.alpha.at(o), xy.backward.arr(yz.alpha.at(xy.forward.obj(o))));
    }
    for (Index o = 0; o < b.size(); ++o) {
      b[o] = z.comp(yz.beta.at(o), yz.forward.arr(xy.beta.at(yz.backward.obj(o))));
    }
    return {phi, psi,
            InternalNatTrans<A>::make(compose(psi, phi), InternalFunctor<A>::identity(x),
                                      std::move(a)),
            InternalNatTrans<A>::make(compose(phi, psi), InternalFunctor<A>::identity(z),
                                      std::move(b))};
  }

  template <typename A>
  WeakEquivWitness<A> union_witness(WeakEquivWitness<A> const& a, WeakEquivWitness<A> const& b) {
    return {functor_union(a.forward, b.forward), functor_union(a.backward, b.backward),
            nat_union(a.alpha, b.alpha), nat_union(a.beta, b.beta)};
  }

  template <typename A>
  WeakEquivWitness<A> product_witness(WeakEquivWitness<A> const& a,
                                      WeakEquivWitness<A> const& b) {
    return {functor_product(a.forward, b.forward), functor_product(a.backward, b.backward),
            nat_product(a.alpha, b.alpha), nat_product(a.beta, b.beta)};
  }

  template <typename A>
  std::vector<Index> iso_class_labels(CatSet<A> const& x) {
    std::vector<Index> uf = identity_perm(x.num_objects());
    auto               find = [&](Index v) {
      while (uf[v] != v) {
        uf[v] = uf[uf[v]];
        v     = uf[v];
      }
      return v;
    };
    for (Index f = 0; f < x.num_arrows(); ++f) {
      if (x.src(f) != x.tgt(f) && x.inverse(f)) {
        Index a = find(x.src(f)), b = find(x.tgt(f));
        if (a != b) {
          uf[std::max(a, b)] = std::min(a, b);
        }
      }
    }
    std::vector<Index> label(x.num_objects()), id(x.num_objects(), kNone);
    Index              next = 0;
    for (Index o = 0; o < x.num_objects(); ++o) {
      Index r = find(o);
      if (id[r] == kNone) {
        id[r] = next++;
      }
      label[o] = id[r];
    }
    return label;
  }

  namespace {
    template <typename A>
    std::vector<Index> orbit_of(ActionSet<A> const& s, Index p) {
      std::vector<Index> out;
      for (Index g = 0; g < s.acting().num_elements(); ++g) {
        Index q = s.act(p, g);
        if (q != kNone) {
          out.push_back(q);
        }
      }
      std::sort(out.begin(), out.end());
      out.erase(std::unique(out.begin(), out.end()), out.end());
      return out;
    }
  }  // namespace

  template <typename A>
  SkeletonResult<A> skeleton(CatSet<A> const& x) {
    auto const         cls  = iso_class_labels(x);
    Index              ncls = 0;
    for (Index c : cls) {
      ncls = std::max(ncls, c + 1);
    }
    std::vector<std::vector<Index>> members(ncls);
    for (Index o = 0; o < x.num_objects(); ++o) {
      members[cls[o]].push_back(o);
    }
    auto const&                     objs = x.objects();
    std::vector<std::vector<Index>> fixed(ncls);
    for (Index c = 0; c < ncls; ++c) {
      Index const        r = members[c].front();
      std::vector<Index> setwise;
      for (Index g : loops_at(x.acting(), objs.color(r))) {
        if (cls[objs.act(r, g)] == c) {
          setwise.push_back(g);
        }
      }
      for (Index s : members[c]) {
        if (fixed_by(objs, s, setwise)) {
          fixed[c].push_back(s);
        }
      }
      if (fixed[c].empty()) {
        return NoEquivariantSkeleton{orbit_of(objs, r), members[c]};
      }
    }
    auto const         rank = canonize(x).object_perm;
    std::vector<Index> order(ncls);
    std::vector<Index> least(ncls, kNone);
    for (Index o = 0; o < x.num_objects(); ++o) {
      least[cls[o]] = std::min(least[cls[o]], rank[o]);
    }
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](Index a, Index b) { return least[a] < least[b]; });
    std::vector<char>  covered(ncls, 0);
    std::vector<Index> chosen;
    for (Index c : order) {
      if (covered[c]) {
        continue;
      }
      std::vector<Index> best_ranks, best_orbit;
      for (Index s : fixed[c]) {
        auto               orb = orbit_of(objs, s);
        std::vector<Index> ranks;
        for (Index o : orb) {
          ranks.push_back(rank[o]);
        }
        std::sort(ranks.begin(), ranks.end());
        if (best_orbit.empty() || ranks < best_ranks) {
          best_ranks = std::move(ranks);
          best_orbit = std::move(orb);
        }
      }
      for (Index o : best_orbit) {
        covered[cls[o]] = 1;
        chosen.push_back(o);
      }
    }
    auto part = full_subcategory(x, std::move(chosen));
    auto emb  = inclusion(part, x);
    return Skeleton<A>{std::move(part), std::move(emb)};
  }

  template <typename A>
  std::optional<WeakEquivWitness<A>> skeleton_retraction(CatSet<A> const&   x,
                                                         Skeleton<A> const& s) {
    auto const&        objs = x.objects();
    auto const&        arrs = x.arrows();
    auto const         cls  = iso_class_labels(x);
    std::vector<Index> in_s(x.num_objects(), kNone), class_rep(x.num_objects(), kNone);
    for (Index i = 0; i < s.part.objects.size(); ++i) {
      in_s[s.part.objects[i]]           = i;
      class_rep[cls[s.part.objects[i]]] = s.part.objects[i];
    }
    std::vector<Index> arr_local(x.num_arrows(), kNone);
    for (Index i = 0; i < s.part.arrows.size(); ++i) {
      arr_local[s.part.arrows[i]] = i;
    }
    auto const         tree = orbit_tree(objs);
    std::vector<Index> theta(x.num_objects(), kNone);
    for (Index r : tree.reps) {
      Index const t = class_rep[cls[r]];
      Index       chosen = kNone;
      if (in_s[r] != kNone) {
        chosen = x.ident(r);
      } else {
        auto const stab = stabilizer(objs, r);
        for (Index k : x.hom(r, t)) {
          if (x.inverse(k) && fixed_by(arrs, k, stab)) {
            chosen = k;
            break;
          }
        }
      }
      if (chosen == kNone) {
        return std::nullopt;
      }
      for (Index o = 0; o < x.num_objects(); ++o) {
        if (tree.rep_of[o] == r) {
          theta[o] = arrs.act(chosen, tree.via[o]);
        }
      }
    }
    std::vector<Index> r0(x.num_objects()), r1(x.num_arrows()), at(x.num_objects());
    for (Index o = 0; o < x.num_objects(); ++o) {
      r0[o] = in_s[x.tgt(theta[o])];
      at[o] = *x.inverse(theta[o]);
    }
    for (Index f = 0; f < x.num_arrows(); ++f) {
      Index g = x.comp(theta[x.tgt(f)], x.comp(f, at[x.src(f)]));
      r1[f]   = arr_local[g];
    }
    auto const& sub = s.part.sub;
    auto        fwd = InternalFunctor<A>::make(x, sub, std::move(r0), std::move(r1));
    WeakEquivWitness<A> w{
        fwd, s.embedding,
        InternalNatTrans<A>::make(compose(s.embedding, fwd), InternalFunctor<A>::identity(x),
                                  std::move(at)),
        InternalNatTrans<A>::make(compose(fwd, s.embedding),
                                  InternalFunctor<A>::identity(sub), sub.ident_table())};
    revalidate(x, sub, w);
    return w;
  }

  namespace {

    template <typename A>
    class EquivalenceSearch {
     public:
      EquivalenceSearch(CatSet<A> const& x, CatSet<A> const& y, Budget const& budget)
          : _x(x),
            _y(y),
            _budget(budget),
            _ox(orbit_tree(x.objects())),
            _ax(orbit_tree(x.arrows())),
            _oy(orbit_tree(y.objects())),
            _f0(x.num_objects(), kNone),
            _f1(x.num_arrows(), kNone) {
        for (Index r : _ox.reps) {
          _stab_obj.push_back(stabilizer(x.objects(), r));
        }
        std::vector<char> is_id(x.num_arrows(), 0);
        for (Index o = 0; o < x.num_objects(); ++o) {
          is_id[x.ident(o)] = 1;
        }
        for (Index r : _ax.reps) {
          if (!is_id[r]) {
            _arr_reps.push_back(r);
            _stab_arr.push_back(stabilizer(x.arrows(), r));
          }
        }
        for (Index f = 0; f < y.num_arrows(); ++f) {
          auto inv = y.inverse(f);
          _inv_y.push_back(inv ? *inv : kNone);
        }
      }

      std::optional<WeakEquivWitness<A>> run() {
        if (_x.num_objects() == 0 || _y.num_objects() == 0) {
          if (_x.num_objects() != _y.num_objects()) {
            return std::nullopt;
          }
        }
        assign_objects(0);
        return std::move(_found);
      }

     private:
      CatSet<A> const&                   _x;
      CatSet<A> const&                   _y;
      Budget const&                      _budget;
      OrbitTree                          _ox, _ax, _oy;
      std::vector<std::vector<Index>>    _stab_obj, _stab_arr;
      std::vector<Index>                 _arr_reps, _inv_y;
      std::vector<Index>                 _f0, _f1;
      std::optional<WeakEquivWitness<A>> _found;
      std::uint64_t                      _nodes = 0;

      void tick() {
        if (++_nodes > _budget.max_nodes) {
          fail(Errc::BudgetExceeded, "equivalence search exceeded "
                                         + std::to_string(_budget.max_nodes) + " nodes");
        }
      }

      bool hom_sizes_match(std::vector<Index> const& fresh) const {
        for (Index a : fresh) {
          for (Index b = 0; b < _x.num_objects(); ++b) {
            if (_f0[b] == kNone) {
              continue;
            }
            if (_x.hom(a, b).size() != _y.hom(_f0[a], _f0[b]).size()
                || _x.hom(b, a).size() != _y.hom(_f0[b], _f0[a]).size()) {
              return false;
            }
          }
        }
        return true;
      }

      bool assign_objects(std::size_t i) {
        if (i == _ox.reps.size()) {
          for (Index o = 0; o < _x.num_objects(); ++o) {
            _f1[_x.ident(o)] = _y.ident(_f0[o]);
          }
          return assign_arrows(0);
        }
        Index const r = _ox.reps[i];
        std::vector<Index> orbit;
        for (Index o = 0; o < _x.num_objects(); ++o) {
          if (_ox.rep_of[o] == r) {
            orbit.push_back(o);
          }
        }
        for (Index y = 0; y < _y.num_objects(); ++y) {
          tick();
          if (_y.objects().color(y) != _x.objects().color(r)
              || !fixed_by(_y.objects(), y, _stab_obj[i])) {
            continue;
          }
          for (Index o : orbit) {
            _f0[o] = _y.objects().act(y, _ox.via[o]);
          }
          if (hom_sizes_match(orbit) && assign_objects(i + 1)) {
            return true;
          }
          for (Index o : orbit) {
            _f0[o] = kNone;
          }
        }
        return false;
      }

      bool consistent(std::vector<Index> const& fresh) const {
        for (Index f : fresh) {
          for (Index k : _x.hom(_x.src(f), _x.tgt(f))) {
            if (k != f && _f1[k] == _f1[f]) {
              return false;
            }
          }
        }
        for (Index p = 0; p < _x.num_arrows(); ++p) {
          if (_f1[p] == kNone) {
            continue;
          }
          for (Index q = 0; q < _x.num_arrows(); ++q) {
            Index r = _x.comp(p, q);
            if (r == kNone || _f1[q] == kNone || _f1[r] == kNone) {
              continue;
            }
            if (_f1[r] != _y.comp(_f1[p], _f1[q])) {
              return false;
            }
          }
        }
        return true;
      }

      bool assign_arrows(std::size_t j) {
        if (j == _arr_reps.size()) {
          return consistent({}) && finish();
        }
        Index const        f = _arr_reps[j];
        std::vector<Index> orbit;
        for (Index k = 0; k < _x.num_arrows(); ++k) {
          if (_ax.rep_of[k] == f) {
            orbit.push_back(k);
          }
        }
        for (Index k : _y.hom(_f0[_x.src(f)], _f0[_x.tgt(f)])) {
          tick();
          if (!fixed_by(_y.arrows(), k, _stab_arr[j])) {
            continue;
          }
          for (Index a : orbit) {
            _f1[a] = _y.arrows().act(k, _ax.via[a]);
          }
          if (consistent(orbit) && assign_arrows(j + 1)) {
            return true;
          }
          for (Index a : orbit) {
            _f1[a] = kNone;
          }
        }
        return false;
      }

      bool finish() {
        auto const&        yo = _y.objects();
        auto const&        xo = _x.objects();
        std::vector<Index> psi0(_y.num_objects(), kNone), beta(_y.num_objects(), kNone);
        for (Index r : _oy.reps) {
          auto const stab = stabilizer(yo, r);
          Index      cx = kNone, cb = kNone;
          for (Index x = 0; x < _x.num_objects() && cx == kNone; ++x) {
            if (xo.color(x) != yo.color(r) || !fixed_by(xo, x, stab)) {
              continue;
            }
            for (Index b : _y.hom(_f0[x], r)) {
              if (_inv_y[b] != kNone && fixed_by(_y.arrows(), b, stab)) {
                cx = x;
                cb = b;
                break;
              }
            }
          }
          if (cx == kNone) {
            return false;
          }
          for (Index y = 0; y < _y.num_objects(); ++y) {
            if (_oy.rep_of[y] == r) {
              psi0[y] = xo.act(cx, _oy.via[y]);
              beta[y] = _y.arrows().act(cb, _oy.via[y]);
            }
          }
        }
        auto preimage = [&](Index a, Index b, Index target) {
          for (Index k : _x.hom(a, b)) {
            if (_f1[k] == target) {
              return k;
            }
          }
          return kNone;
        };
        std::vector<Index> psi1(_y.num_arrows()), alpha(_x.num_objects());
        for (Index f = 0; f < _y.num_arrows(); ++f) {
          Index s = _y.src(f), t = _y.tgt(f);
          Index want = _y.comp(_inv_y[beta[t]], _y.comp(f, beta[s]));
          psi1[f]    = preimage(psi0[s], psi0[t], want);
          if (psi1[f] == kNone) {
            return false;
          }
        }
        for (Index x = 0; x < _x.num_objects(); ++x) {
          alpha[x] = preimage(psi0[_f0[x]], x, beta[_f0[x]]);
          if (alpha[x] == kNone) {
            return false;
          }
        }
        auto phi = InternalFunctor<A>::make(_x, _y, _f0, _f1);
        auto psi = InternalFunctor<A>::make(_y, _x, std::move(psi0), std::move(psi1));
        WeakEquivWitness<A> w{
            phi, psi,
            InternalNatTrans<A>::make(compose(psi, phi), InternalFunctor<A>::identity(_x),
                                      std::move(alpha)),
            InternalNatTrans<A>::make(compose(phi, psi), InternalFunctor<A>::identity(_y),
                                      std::move(beta))};
        _found = std::move(w);
        return true;
      }
    };

    // Sorted per-class data preserved by every equivariant equivalence.
    template <typename A>
    std::vector<std::vector<std::size_t>> invariants(CatSet<A> const& x) {
      auto const         cls = iso_class_labels(x);
      std::vector<Index> reps;
      for (Index o = 0; o < x.num_objects(); ++o) {
        if (cls[o] == reps.size()) {
          reps.push_back(o);
        }
      }
      std::vector<Index> uf = identity_perm(x.num_objects());
      auto               find = [&](Index v) {
        while (uf[v] != v) {
          v = uf[v] = uf[uf[v]];
        }
        return v;
      };
      for (Index f = 0; f < x.num_arrows(); ++f) {
        Index a = find(x.src(f)), b = find(x.tgt(f));
        if (a != b) {
          uf[std::max(a, b)] = std::min(a, b);
        }
      }
      std::size_t components = 0;
      for (Index o = 0; o < x.num_objects(); ++o) {
        components += find(o) == o;
      }
      std::vector<std::vector<std::size_t>> out;
      for (Index r : reps) {
        std::vector<std::size_t> row{x.objects().color(r), x.hom(r, r).size()};
        std::vector<Index>       hit;
        for (Index p : orbit_of(x.objects(), r)) {
          hit.push_back(cls[p]);
        }
        std::sort(hit.begin(), hit.end());
        row.push_back(std::unique(hit.begin(), hit.end()) - hit.begin());
        std::vector<std::size_t> out_sizes, in_sizes;
        for (Index q : reps) {
          out_sizes.push_back(x.hom(r, q).size());
          in_sizes.push_back(x.hom(q, r).size());
        }
        std::sort(out_sizes.begin(), out_sizes.end());
        std::sort(in_sizes.begin(), in_sizes.end());
        row.insert(row.end(), out_sizes.begin(), out_sizes.end());
        row.insert(row.end(), in_sizes.begin(), in_sizes.end());
        out.push_back(std::move(row));
      }
      std::sort(out.begin(), out.end());
      out.push_back({reps.size(), components});
      return out;
    }

  }  // namespace

  template <typename A>
  WeqDecision<A> decide_weak_equivalence(CatSet<A> const& x,
                                         CatSet<A> const& y,
                                         Budget const&    budget,
                                         Strategy         strategy) {
    if (!(x.acting() == y.acting())) {
      fail(Errc::GroupMismatch, "instances carry different actions");
    }
    if (strategy == Strategy::Auto && invariants(x) != invariants(y)) {
      return {std::nullopt, Route::Invariants};
    }
    if (strategy != Strategy::Search) {
      auto const                         sx = skeleton(x);
      auto const                         sy = skeleton(y);
      std::optional<WeakEquivWitness<A>> rx, ry;
      if (auto const* s = std::get_if<Skeleton<A>>(&sx)) {
        rx = skeleton_retraction(x, *s);
      }
      if (auto const* s = std::get_if<Skeleton<A>>(&sy)) {
        ry = skeleton_retraction(y, *s);
      }
      if (rx && ry) {
        auto iso = catset_isomorphic(rx->forward.cod(), ry->forward.cod());
        if (!iso) {
          return {std::nullopt, Route::Skeleton};
        }
        auto w = compose(compose(*rx, witness_from_isomorphism(*iso)), reverse(*ry));
        revalidate(x, y, w);
        return {std::move(w), Route::Skeleton};
      }
      // Having an equivariant skeleton that the instance retracts onto is
      // preserved by weak equivalence, and so is having none at all.
      if ((rx && std::holds_alternative<NoEquivariantSkeleton>(sy))
          || (ry && std::holds_alternative<NoEquivariantSkeleton>(sx))) {
        return {std::nullopt, Route::SkeletonObstruction};
      }
      if (strategy == Strategy::Skeleton) {
        return {std::nullopt, Route::NotApplicable};
      }
    }
    if (x.num_arrows() > budget.max_search_arrows || y.num_arrows() > budget.max_search_arrows) {
      fail(Errc::BudgetExceeded,
           "exhaustive equivalence search is limited to "
               + std::to_string(budget.max_search_arrows) + " arrows, got "
               + std::to_string(std::max(x.num_arrows(), y.num_arrows())));
    }
    auto w = EquivalenceSearch<A>(x, y, budget).run();
    if (w) {
      revalidate(x, y, *w);
    }
    return {std::move(w), Route::Search};
  }

  template <typename A>
  bool sqre_related(CatSet<A> const& x, Index a, Index b) {
    if (a >= x.num_objects() || b >= x.num_objects()) {
      fail(Errc::OutOfRange, "object index");
    }
    auto const& objs = x.objects();
    for (Index f = 0; f < x.num_arrows(); ++f) {
      for (Index g = 0; g < x.acting().num_elements(); ++g) {
        if (x.arrows().act(f, g) == kNone) {
          continue;
        }
        Index const v[4] = {x.src(f), objs.act(x.src(f), g), x.tgt(f), objs.act(x.tgt(f), g)};
        bool        ha = false, hb = false;
        for (Index w : v) {
          ha = ha || w == a;
          hb = hb || w == b;
        }
        if (ha && hb) {
          return true;
        }
      }
    }
    return false;
  }

  template <typename A>
  std::vector<Block<A>> sqre_orbit_partition(CatSet<A> const& x) {
    auto const                      label = block_labels(x);
    std::vector<std::vector<Index>> groups;
    for (Index o = 0; o < x.num_objects(); ++o) {
      if (label[o] >= groups.size()) {
        groups.resize(label[o] + 1);
      }
      groups[label[o]].push_back(o);
    }
    std::vector<Block<A>> out;
    for (auto& g : groups) {
      Index rep = g.front();
      out.push_back({rep, full_subcategory(x, std::move(g))});
    }
    return out;
  }

  template <typename A>
  DiscreteSplit<A> split_discrete(CatSet<A> const& x) {
    std::vector<Index> uf = identity_perm(x.num_objects());
    auto               find = [&](Index v) {
      while (uf[v] != v) {
        v = uf[v] = uf[uf[v]];
      }
      return v;
    };
    for (Index f = 0; f < x.num_arrows(); ++f) {
      Index a = find(x.src(f)), b = find(x.tgt(f));
      if (a != b) {
        uf[std::max(a, b)] = std::min(a, b);
      }
    }
    // A connected component has a discrete skeleton iff every hom-set in it
    // is a singleton.
    std::vector<char> discrete(x.num_objects(), 1);
    for (Index a = 0; a < x.num_objects(); ++a) {
      for (Index b = 0; b < x.num_objects(); ++b) {
        if (find(a) == find(b) && x.hom(a, b).size() != 1) {
          discrete[find(a)] = 0;
        }
      }
    }
    std::vector<Index> d, nd;
    for (Index o = 0; o < x.num_objects(); ++o) {
      (discrete[find(o)] ? d : nd).push_back(o);
    }
    return {full_subcategory(x, std::move(d)), full_subcategory(x, std::move(nd))};
  }

#define BURNCAT_INSTANTIATE(A)                                                         \
  template WitnessTables tables(WeakEquivWitness<A> const&);                           \
  template CheckResult check_witness(CatSet<A> const&, CatSet<A> const&,               \
                                     WitnessTables const&);                            \
  template WeakEquivWitness<A> witness_from_isomorphism(Isomorphism<A> const&);        \
  template WeakEquivWitness<A> reverse(WeakEquivWitness<A> const&);                    \
  template WeakEquivWitness<A> compose(WeakEquivWitness<A> const&,                     \
                                       WeakEquivWitness<A> const&);                    \
  template WeakEquivWitness<A> union_witness(WeakEquivWitness<A> const&,               \
                                             WeakEquivWitness<A> const&);              \
  template WeakEquivWitness<A> product_witness(WeakEquivWitness<A> const&,             \
                                               WeakEquivWitness<A> const&);            \
  template std::vector<Index> iso_class_labels(CatSet<A> const&);                      \
  template SkeletonResult<A> skeleton(CatSet<A> const&);                               \
  template std::optional<WeakEquivWitness<A>> skeleton_retraction(CatSet<A> const&,    \
                                                                  Skeleton<A> const&); \
  template WeqDecision<A> decide_weak_equivalence(CatSet<A> const&, CatSet<A> const&,  \
                                                  Budget const&, Strategy);            \
  template bool sqre_related(CatSet<A> const&, Index, Index);                          \
  template std::vector<Block<A>> sqre_orbit_partition(CatSet<A> const&);               \
  template DiscreteSplit<A> split_discrete(CatSet<A> const&);

  BURNCAT_INSTANTIATE(Group)
  BURNCAT_INSTANTIATE(Groupoid)

#undef BURNCAT_INSTANTIATE

}  // namespace burncat
