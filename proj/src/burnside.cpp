#include "burncat/burnside.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

#include "burncat/monoidal.hpp"
#include "orbit_tree.hpp"

namespace burncat {

  namespace {

    using detail::fixed_by;
    using detail::orbit_tree;

    template <typename A>
    ActionSet<A> empty_set(A const& acting) {
      return ActionSet<A>::make(acting, {}, {});
    }

    template <typename A>
    CatSet<A> empty_catset(A const& acting) {
      return include(empty_set(acting));
    }

    template <typename A>
    CatSet<A> canonical_copy(CatSet<A> const& x, Canonized const& c) {
      return relabel(x, c.object_perm, c.arrow_perm);
    }

    template <typename A>
    RigClass<A> block_class(CatSet<A> const& block) {
      auto const sk = skeleton(block);
      if (auto const* s = std::get_if<Skeleton<A>>(&sk)) {
        if (skeleton_retraction(block, *s)) {
          auto const c = canonize(s->part.sub);
          return {c.key, canonical_copy(s->part.sub, c), 1, true};
        }
      }
      auto const c = canonize(block);
      return {c.key, canonical_copy(block, c), 1, false};
    }

    template <typename A>
    bool same_class(RigClass<A> const& a, RigClass<A> const& b, Budget const& budget) {
      if (a.key == b.key) {
        return true;
      }
      if (a.skeletal && b.skeletal) {
        return false;
      }
      return decide_weak_equivalence(a.representative, b.representative, budget)
          .witness.has_value();
    }

    // Label classes so that equivalent classes share a label.
    template <typename A>
    std::vector<Index> class_labels(std::vector<RigClass<A> const*> const& cs,
                                    Budget const&                          budget) {
      std::vector<Index> label(cs.size(), kNone);
      for (Index i = 0; i < cs.size(); ++i) {
        for (Index j = 0; j < i && label[i] == kNone; ++j) {
          if (label[j] == j && same_class(*cs[i], *cs[j], budget)) {
            label[i] = j;
          }
        }
        if (label[i] == kNone) {
          label[i] = i;
        }
      }
      return label;
    }

    // Survivor of a merge: skeletal first, then fewer arrows, then key.
    template <typename A>
    bool preferred(RigClass<A> const& a, RigClass<A> const& b) {
      if (a.skeletal != b.skeletal) {
        return a.skeletal;
      }
      if (a.representative.num_arrows() != b.representative.num_arrows()) {
        return a.representative.num_arrows() < b.representative.num_arrows();
      }
      return a.key < b.key;
    }

    template <typename A>
    void normalize(std::vector<RigClass<A>>& cs, Budget const& budget) {
      std::sort(cs.begin(), cs.end(), [](auto const& a, auto const& b) { return a.key < b.key; });
      std::vector<RigClass<A>> merged;
      for (auto& c : cs) {
        if (!merged.empty() && merged.back().key == c.key) {
          merged.back().multiplicity += c.multiplicity;
        } else {
          merged.push_back(std::move(c));
        }
      }
      std::vector<RigClass<A> const*> ptrs;
      for (auto const& c : merged) {
        ptrs.push_back(&c);
      }
      auto const               label = class_labels(ptrs, budget);
      std::vector<RigClass<A>> out;
      std::vector<Index>       slot(merged.size(), kNone);
      for (Index i = 0; i < merged.size(); ++i) {
        if (label[i] == i) {
          slot[i] = static_cast<Index>(out.size());
          out.push_back(merged[i]);
          out.back().multiplicity = 0;
        }
      }
      for (Index i = 0; i < merged.size(); ++i) {
        auto& target = out[slot[label[i]]];
        target.multiplicity += merged[i].multiplicity;
        if (preferred(merged[i], target)) {
          std::size_t const m = target.multiplicity;
          target              = merged[i];
          target.multiplicity = m;
        }
      }
      std::sort(out.begin(), out.end(), [](auto const& a, auto const& b) { return a.key < b.key; });
      cs = std::move(out);
    }

    template <typename A>
    void check_same(A const& a, A const& b) {
      if (!(a == b)) {
        fail(Errc::GroupMismatch, "rig elements over different acting structures");
      }
    }

  }  // namespace

  template <typename A>
  std::size_t RigElement<A>::size() const {
    std::size_t n = 0;
    for (auto const& c : classes) {
      n += c.multiplicity;
    }
    return n;
  }

  template <typename A>
  RigElement<A> rig_zero(A const& acting) {
    return {acting, {}};
  }

  template <typename A>
  RigElement<A> rig_one(A const& acting) {
    return rig_class(unit_object(acting));
  }

  template <typename A>
  RigElement<A> rig_class(CatSet<A> const& x, Budget const& budget) {
    RigElement<A> out{x.acting(), {}};
    for (auto const& b : sqre_orbit_partition(x)) {
      out.classes.push_back(block_class(b.part.sub));
    }
    normalize(out.classes, budget);
    return out;
  }

  template <typename A>
  RigElement<A> rig_add(RigElement<A> const& u, RigElement<A> const& v, Budget const& budget) {
    check_same(u.acting, v.acting);
    RigElement<A> out = u;
    out.classes.insert(out.classes.end(), v.classes.begin(), v.classes.end());
    normalize(out.classes, budget);
    return out;
  }

  template <typename A>
  RigElement<A> rig_scale(RigElement<A> const& u, std::size_t n) {
    RigElement<A> out{u.acting, {}};
    if (n == 0) {
      return out;
    }
    out.classes = u.classes;
    for (auto& c : out.classes) {
      c.multiplicity *= n;
    }
    return out;
  }

  template <typename A>
  RigElement<A> rig_mul(RigElement<A> const& u, RigElement<A> const& v, Budget const& budget) {
    check_same(u.acting, v.acting);
    RigElement<A> out{u.acting, {}};
    for (auto const& a : u.classes) {
      for (auto const& b : v.classes) {
        auto part = rig_class(product(a.representative, b.representative), budget);
        for (auto& c : part.classes) {
          c.multiplicity *= a.multiplicity * b.multiplicity;
          out.classes.push_back(std::move(c));
        }
      }
    }
    normalize(out.classes, budget);
    return out;
  }

  template <typename A>
  bool rig_equal(RigElement<A> const& u, RigElement<A> const& v, Budget const& budget) {
    check_same(u.acting, v.acting);
    std::vector<RigClass<A> const*> all;
    for (auto const& c : u.classes) {
      all.push_back(&c);
    }
    for (auto const& c : v.classes) {
      all.push_back(&c);
    }
    auto const                      label = class_labels(all, budget);
    std::vector<std::ptrdiff_t>     balance(all.size(), 0);
    for (Index i = 0; i < all.size(); ++i) {
      auto const m = static_cast<std::ptrdiff_t>(all[i]->multiplicity);
      balance[label[i]] += i < u.classes.size() ? m : -m;
    }
    return std::all_of(balance.begin(), balance.end(), [](auto b) { return b == 0; });
  }

  template <typename A>
  CatSet<A> realize(RigElement<A> const& u) {
    CatSet<A> out = empty_catset(u.acting);
    for (auto const& c : u.classes) {
      for (std::size_t i = 0; i < c.multiplicity; ++i) {
        out = disjoint_union(out, c.representative);
      }
    }
    return out;
  }

  template <typename A>
  RingElement<A> ring_make(RigElement<A> pos, RigElement<A> neg) {
    check_same(pos.acting, neg.acting);
    return {std::move(pos), std::move(neg)};
  }

  template <typename A>
  RingElement<A> ring_add(RingElement<A> const& r, RingElement<A> const& s, Budget const& budget) {
    return {rig_add(r.pos, s.pos, budget), rig_add(r.neg, s.neg, budget)};
  }

  template <typename A>
  RingElement<A> ring_neg(RingElement<A> const& r) {
    return {r.neg, r.pos};
  }

  template <typename A>
  RingElement<A> ring_mul(RingElement<A> const& r, RingElement<A> const& s, Budget const& budget) {
    return {rig_add(rig_mul(r.pos, s.pos, budget), rig_mul(r.neg, s.neg, budget), budget),
            rig_add(rig_mul(r.pos, s.neg, budget), rig_mul(r.neg, s.pos, budget), budget)};
  }

  template <typename A>
  bool ring_equal(RingElement<A> const& r, RingElement<A> const& s, Budget const& budget) {
    return rig_equal(rig_add(r.pos, s.neg, budget), rig_add(s.pos, r.neg, budget), budget);
  }

  template <typename A>
  ClassicalElement<A> classical_class(ActionSet<A> const& x) {
    ClassicalElement<A> out{x.acting(), {}};
    for (auto const& o : orbits(x)) {
      ++out.counts[orbit_type(x, o.front())];
    }
    return out;
  }

  template <typename A>
  ActionSet<A> realize(ClassicalElement<A> const& c) {
    ActionSet<A> out = empty_set(c.acting);
    for (auto const& [type, n] : c.counts) {
      auto const orbit = coset_set(c.acting, type.object, type.subgroup);
      for (std::size_t i = 0; i < n; ++i) {
        out = disjoint_union(out, orbit);
      }
    }
    return out;
  }

  template <typename A>
  ClassicalElement<A> classical_add(ClassicalElement<A> const& a, ClassicalElement<A> const& b) {
    check_same(a.acting, b.acting);
    ClassicalElement<A> out = a;
    for (auto const& [type, n] : b.counts) {
      out.counts[type] += n;
    }
    return out;
  }

  template <typename A>
  ClassicalElement<A> classical_mul(ClassicalElement<A> const& a, ClassicalElement<A> const& b) {
    check_same(a.acting, b.acting);
    return classical_class(fibre_product(realize(a), realize(b)));
  }

  template <typename A>
  bool classical_equal(ClassicalElement<A> const& a, ClassicalElement<A> const& b) {
    check_same(a.acting, b.acting);
    return a.counts == b.counts;
  }

  template <typename A>
  RigElement<A> iota_rig(ClassicalElement<A> const& c, Budget const& budget) {
    return rig_class(include(realize(c)), budget);
  }

  template <typename A>
  RingElement<A> iota_ring(ClassicalElement<A> const& pos,
                           ClassicalElement<A> const& neg,
                           Budget const&              budget) {
    return ring_make(iota_rig(pos, budget), iota_rig(neg, budget));
  }

  template <typename A>
  std::optional<ClassicalElement<A>> iota_preimage(RigElement<A> const& u) {
    ClassicalElement<A> out{u.acting, {}};
    for (auto const& c : u.classes) {
      if (!c.skeletal || c.representative.num_arrows() != c.representative.num_objects()) {
        return std::nullopt;
      }
      for (auto const& [type, n] : classical_class(c.representative.objects()).counts) {
        out.counts[type] += n * c.multiplicity;
      }
    }
    return out;
  }

  GSet induce(GroupHom const& phi, GSet const& x) {
    if (!(phi.target() == x.acting())) {
      fail(Errc::GroupMismatch, "homomorphism target differs from the acting group");
    }
    std::size_t const  m = phi.source().order();
    std::vector<Index> act(x.size() * m);
    for (Index p = 0; p < x.size(); ++p) {
      for (Index h = 0; h < m; ++h) {
        act[p * m + h] = x.act(p, phi(h));
      }
    }
    return GSet::make(phi.source(), std::vector<Index>(x.size(), 0), std::move(act));
  }

  CatGSet induce(GroupHom const& phi, CatGSet const& x) {
    return CatGSet::make_dense(induce(phi, x.objects()), induce(phi, x.arrows()), x.src_table(),
                               x.tgt_table(), x.ident_table(), x.comp_table());
  }

  RigElement<Group> induce_rig(GroupHom const& phi, RigElement<Group> const& u,
                               Budget const& budget) {
    if (!(phi.target() == u.acting)) {
      fail(Errc::GroupMismatch, "homomorphism target differs from the acting group");
    }
    RigElement<Group> out = rig_zero(phi.source());
    for (auto const& c : u.classes) {
      auto part = rig_class(induce(phi, c.representative), budget);
      out       = rig_add(out, rig_scale(part, c.multiplicity), budget);
    }
    return out;
  }

  ClassicalElement<Group> induce_classical(GroupHom const&                phi,
                                           ClassicalElement<Group> const& c) {
    return classical_class(induce(phi, realize(c)));
  }

  namespace {

    // Instances with fixed objects and non-identity arrows as action sets.
    // Arrows 0..|objects|-1 are the identities.  Chooses equivariant
    // source and target maps, then an equivariant associative composition,
    // one orbit at a time.
    template <typename A>
    class ShapeSearch {
     public:
      using Visit = std::function<bool(CatSet<A> const&)>;

      ShapeSearch(ActionSet<A> objects, ActionSet<A> const& extra)
          : _objects(std::move(objects)),
            _arrows(disjoint_union(_objects, extra)),
            _n0(_objects.size()),
            _n1(_arrows.size()) {
        auto const tree = orbit_tree(_arrows);
        for (Index r : tree.reps) {
          if (r < _n0) {
            continue;
          }
          auto const         stab = stabilizer(_arrows, r);
          std::vector<Index> ends;
          for (Index y = 0; y < _n0; ++y) {
            if (_objects.color(y) == _arrows.color(r) && fixed_by(_objects, y, stab)) {
              ends.push_back(y);
            }
          }
          std::vector<Index> orbit;
          for (Index f = 0; f < _n1; ++f) {
            if (tree.rep_of[f] == r) {
              orbit.push_back(f);
            }
          }
          _reps.push_back({r, std::move(ends), std::move(orbit), tree.via});
        }
      }

      // Calls visit on each valid instance until it returns false.  With an
      // rng, candidates are shuffled and the search stops after node_limit
      // nodes.
      void run(Visit visit, std::mt19937_64* rng = nullptr, std::uint64_t node_limit = 0) {
        _visit = std::move(visit);
        _rng   = rng;
        _limit = node_limit;
        _nodes = 0;
        _stop  = false;
        _src.assign(_n1, kNone);
        _tgt.assign(_n1, kNone);
        for (Index x = 0; x < _n0; ++x) {
          _src[x] = _tgt[x] = x;
        }
        choose_ends(0);
      }

     private:
      struct RepInfo {
        Index              rep;
        std::vector<Index> ends;
        std::vector<Index> orbit;
        std::vector<Index> via;
      };

      struct PairOrbit {
        Index                                rep_p, rep_q;
        std::vector<Index>                   candidates;
        std::vector<std::array<Index, 3>>    cells;  // (p, q, g): p = rep_p.g
      };

      ActionSet<A>           _objects, _arrows;
      std::size_t            _n0, _n1;
      std::vector<RepInfo>   _reps;
      std::vector<Index>     _src, _tgt, _comp;
      std::vector<PairOrbit> _pairs;
      Visit                  _visit;
      std::mt19937_64*       _rng   = nullptr;
      std::uint64_t          _limit = 0, _nodes = 0;
      bool                   _stop  = false;

      template <typename T>
      std::vector<T> ordered(std::vector<T> v) {
        if (_rng) {
          std::shuffle(v.begin(), v.end(), *_rng);
        }
        return v;
      }

      bool out_of_nodes() {
        if (_limit && ++_nodes > _limit) {
          _stop = true;
        }
        return _stop;
      }

      void choose_ends(std::size_t i) {
        if (_stop) {
          return;
        }
        if (i == _reps.size()) {
          prepare_composition();
          return;
        }
        auto const& info = _reps[i];
        for (Index s : ordered(info.ends)) {
          for (Index t : ordered(info.ends)) {
            if (out_of_nodes()) {
              return;
            }
            for (Index f : info.orbit) {
              _src[f] = _objects.act(s, info.via[f]);
              _tgt[f] = _objects.act(t, info.via[f]);
            }
            choose_ends(i + 1);
            if (_stop) {
              return;
            }
          }
        }
      }

      void prepare_composition() {
        _comp.assign(_n1 * _n1, kNone);
        for (Index f = 0; f < _n1; ++f) {
          _comp[f * _n1 + _src[f]] = f;
          _comp[_tgt[f] * _n1 + f] = f;
        }
        _pairs.clear();
        std::vector<char> seen(_n1 * _n1, 0);
        A const&          acting = _arrows.acting();
        for (Index p = _n0; p < _n1; ++p) {
          for (Index q = _n0; q < _n1; ++q) {
            if (_src[p] != _tgt[q] || seen[p * _n1 + q]) {
              continue;
            }
            PairOrbit po{p, q, {}, {}};
            std::vector<Index> stab;
            for (Index g = 0; g < acting.num_elements(); ++g) {
              Index pg = _arrows.act(p, g), qg = _arrows.act(q, g);
              if (pg == kNone) {
                continue;
              }
              if (pg == p && qg == q) {
                stab.push_back(g);
              }
              if (!seen[pg * _n1 + qg]) {
                seen[pg * _n1 + qg] = 1;
                po.cells.push_back({pg, qg, g});
              }
            }
            for (Index r = 0; r < _n1; ++r) {
              if (_src[r] == _src[q] && _tgt[r] == _tgt[p] && fixed_by(_arrows, r, stab)) {
                po.candidates.push_back(r);
              }
            }
            if (po.candidates.empty()) {
              return;
            }
            _pairs.push_back(std::move(po));
          }
        }
        choose_comp(0);
      }

      bool associative() const {
        for (Index p = 0; p < _n1; ++p) {
          for (Index q = 0; q < _n1; ++q) {
            Index pq = _comp[p * _n1 + q];
            if (pq == kNone) {
              continue;
            }
            for (Index r = 0; r < _n1; ++r) {
              Index qr = _comp[q * _n1 + r];
              if (qr == kNone) {
                continue;
              }
              Index left = _comp[pq * _n1 + r], right = _comp[p * _n1 + qr];
              if (left != kNone && right != kNone && left != right) {
                return false;
              }
            }
          }
        }
        return true;
      }

      void choose_comp(std::size_t j) {
        if (_stop) {
          return;
        }
        if (j == _pairs.size()) {
          emit();
          return;
        }
        auto const& po = _pairs[j];
        for (Index r : ordered(po.candidates)) {
          if (out_of_nodes()) {
            return;
          }
          for (auto const& [p, q, g] : po.cells) {
            _comp[p * _n1 + q] = _arrows.act(r, g);
          }
          if (associative()) {
            choose_comp(j + 1);
          }
          for (auto const& [p, q, g] : po.cells) {
            _comp[p * _n1 + q] = kNone;
          }
          if (_stop) {
            return;
          }
        }
      }

      void emit() {
        std::vector<Index> ident(_n0);
        std::iota(ident.begin(), ident.end(), 0);
        try {
          auto x = CatSet<A>::make_dense(_objects, _arrows, _src, _tgt, ident, _comp);
          if (!_visit(x)) {
            _stop = true;
          }
        } catch (Error const&) {
          // the partial checks do not cover every axiom; skip the leaf
        }
      }
    };

    // Nondecreasing sequences of type indices with total size in [lo, hi].
    void multisets(std::vector<std::size_t> const&                          sizes,
                   std::size_t                                              lo,
                   std::size_t                                              hi,
                   std::function<void(std::vector<Index> const&, std::size_t)> const& visit) {
      std::vector<Index>               cur;
      std::function<void(Index, std::size_t)> rec = [&](Index from, std::size_t total) {
        if (total >= lo) {
          visit(cur, total);
        }
        for (Index t = from; t < sizes.size(); ++t) {
          if (total + sizes[t] <= hi) {
            cur.push_back(t);
            rec(t, total + sizes[t]);
            cur.pop_back();
          }
        }
      };
      rec(0, 0);
    }

    template <typename A>
    struct Types {
      std::vector<ActionSet<A>> sets;
      std::vector<std::size_t>  sizes;

      explicit Types(A const& acting) {
        for (auto const& t : transitive_types(acting)) {
          sets.push_back(coset_set(acting, t.object, t.subgroup));
          sizes.push_back(sets.back().size());
        }
      }

      ActionSet<A> build(A const& acting, std::vector<Index> const& pick) const {
        ActionSet<A> out = empty_set(acting);
        for (Index t : pick) {
          out = disjoint_union(out, sets[t]);
        }
        return out;
      }
    };

    template <typename A>
    bool single_block(CatSet<A> const& x) {
      auto const labels = block_labels(x);
      return x.num_objects() > 0
             && std::all_of(labels.begin(), labels.end(), [](Index l) { return l == 0; });
    }

    void check_enumeration_budget(std::size_t n, Budget const& budget) {
      if (n > budget.max_enumeration_arrows) {
        fail(Errc::BudgetExceeded, "enumeration is limited to "
                                       + std::to_string(budget.max_enumeration_arrows)
                                       + " arrows, asked for " + std::to_string(n));
      }
    }

  }  // namespace

  template <typename A>
  std::vector<CatSet<A>> enumerate_blocks(A const& acting, std::size_t max_arrows,
                                          Budget const& budget) {
    check_enumeration_budget(max_arrows, budget);
    Types<A> const                         types(acting);
    std::map<std::pair<std::size_t, CanonicalClass>, CatSet<A>> found;
    multisets(types.sizes, 1, max_arrows, [&](std::vector<Index> const& objs, std::size_t n0) {
      auto const objects = types.build(acting, objs);
      multisets(types.sizes, 0, max_arrows - n0,
                [&](std::vector<Index> const& extra, std::size_t) {
                  ShapeSearch<A> search(objects, types.build(acting, extra));
                  search.run([&](CatSet<A> const& x) {
                    if (single_block(x)) {
                      auto const c = canonize(x);
                      found.try_emplace({x.num_arrows(), c.key}, canonical_copy(x, c));
                    }
                    return true;
                  });
                });
    });
    std::vector<CatSet<A>> out;
    for (auto& [key, x] : found) {
      out.push_back(x);
    }
    return out;
  }

  template <typename A>
  std::vector<CatSet<A>> enumerate_instances(A const& acting, std::size_t max_arrows,
                                             Budget const& budget) {
    auto const               blocks = enumerate_blocks(acting, max_arrows, budget);
    std::vector<std::size_t> sizes;
    for (auto const& b : blocks) {
      sizes.push_back(b.num_arrows());
    }
    std::vector<CatSet<A>> out;
    multisets(sizes, 0, max_arrows, [&](std::vector<Index> const& pick, std::size_t) {
      CatSet<A> x = empty_catset(acting);
      for (Index b : pick) {
        x = disjoint_union(x, blocks[b]);
      }
      out.push_back(x);
    });
    return out;
  }

  template <typename A>
  std::vector<EnumeratedClass<A>> enumerate_classes(A const& acting, std::size_t max_arrows,
                                                    Budget const& budget) {
    std::vector<RigClass<A>> kinds;
    for (auto const& b : enumerate_blocks(acting, max_arrows, budget)) {
      auto c = block_class(b);
      if (b.num_arrows() < c.representative.num_arrows()) {
        c.representative = b;
      }
      auto it = std::find_if(kinds.begin(), kinds.end(),
                             [&](auto const& k) { return same_class(k, c, budget); });
      if (it == kinds.end()) {
        kinds.push_back(std::move(c));
      } else if (c.representative.num_arrows() < it->representative.num_arrows()) {
        it->representative = c.representative;
      }
    }
    std::vector<std::size_t> sizes;
    for (auto const& k : kinds) {
      sizes.push_back(k.representative.num_arrows());
    }
    std::vector<EnumeratedClass<A>> out;
    multisets(sizes, 0, max_arrows, [&](std::vector<Index> const& pick, std::size_t) {
      RigElement<A> u{acting, {}};
      for (Index k : pick) {
        if (!u.classes.empty() && u.classes.back().key == kinds[k].key) {
          ++u.classes.back().multiplicity;
        } else {
          u.classes.push_back(kinds[k]);
          u.classes.back().multiplicity = 1;
        }
      }
      std::sort(u.classes.begin(), u.classes.end(),
                [](auto const& a, auto const& b) { return a.key < b.key; });
      auto rep = realize(u);
      out.push_back({std::move(u), std::move(rep)});
    });
    std::stable_sort(out.begin(), out.end(), [](auto const& a, auto const& b) {
      return a.representative.num_arrows() < b.representative.num_arrows();
    });
    return out;
  }

  template <typename A>
  std::optional<CatSet<A>> random_catset(A const& acting, std::size_t max_arrows,
                                         std::mt19937_64& rng) {
    Types<A> const types(acting);
    if (max_arrows == 0 || types.sets.empty()) {
      return empty_catset(acting);
    }
    std::uniform_int_distribution<std::size_t> budget_dist(1, max_arrows);
    std::size_t const                          total = budget_dist(rng);
    auto pick = [&](std::size_t room, bool need_one) {
      std::vector<Index> out;
      std::size_t        used = 0;
      for (int tries = 0; tries < 8; ++tries) {
        std::uniform_int_distribution<Index> t(0, static_cast<Index>(types.sizes.size() - 1));
        Index const                          k = t(rng);
        if (used + types.sizes[k] > room) {
          continue;
        }
        if (!(need_one && out.empty()) && std::bernoulli_distribution(0.35)(rng)) {
          break;
        }
        out.push_back(k);
        used += types.sizes[k];
      }
      return std::make_pair(out, used);
    };
    auto [objs, n0] = pick(total, true);
    if (objs.empty()) {
      return std::nullopt;
    }
    auto [extra, n_extra] = pick(total - n0, false);
    (void)n_extra;
    std::optional<CatSet<A>> result;
    ShapeSearch<A>           search(types.build(acting, objs), types.build(acting, extra));
    search.run(
        [&](CatSet<A> const& x) {
          result = x;
          return false;
        },
        &rng, 20000);
    return result;
  }

  template <typename A>
  CancellationReport test_cancellation(A const& acting, std::size_t bound, Budget const& budget) {
    auto const         xs = enumerate_instances(acting, bound, budget);
    std::size_t const  n  = xs.size();
    std::vector<char>  equiv(n * n);
    for (Index i = 0; i < n; ++i) {
      for (Index j = 0; j < n; ++j) {
        equiv[i * n + j] = decide_weak_equivalence(xs[i], xs[j], budget).witness.has_value();
      }
    }
    CancellationReport report;
    report.instances = n;
    for (Index e = 0; e < n; ++e) {
      std::vector<CatSet<A>> sums;
      for (Index i = 0; i < n; ++i) {
        sums.push_back(disjoint_union(xs[i], xs[e]));
      }
      for (Index i = 0; i < n; ++i) {
        for (Index j = 0; j < n; ++j) {
          ++report.triples;
          if (equiv[i * n + j]) {
            continue;
          }
          if (decide_weak_equivalence(sums[i], sums[j], budget).witness) {
            report.counterexamples.push_back(
                "X=" + canonical_form(xs[i]).hex() + " Y=" + canonical_form(xs[j]).hex()
                + " E=" + canonical_form(xs[e]).hex());
          }
        }
      }
    }
    return report;
  }

#define BURNCAT_INSTANTIATE(A)                                                                 \
  template struct RigElement<A>;                                                               \
  template RigElement<A> rig_zero(A const&);                                                   \
  template RigElement<A> rig_one(A const&);                                                    \
  template RigElement<A> rig_class(CatSet<A> const&, Budget const&);                           \
  template RigElement<A> rig_add(RigElement<A> const&, RigElement<A> const&, Budget const&);   \
  template RigElement<A> rig_mul(RigElement<A> const&, RigElement<A> const&, Budget const&);   \
  template RigElement<A> rig_scale(RigElement<A> const&, std::size_t);                         \
  template bool rig_equal(RigElement<A> const&, RigElement<A> const&, Budget const&);          \
  template CatSet<A> realize(RigElement<A> const&);                                            \
  template RingElement<A> ring_make(RigElement<A>, RigElement<A>);                             \
  template RingElement<A> ring_add(RingElement<A> const&, RingElement<A> const&,               \
                                   Budget const&);                                             \
  template RingElement<A> ring_neg(RingElement<A> const&);                                     \
  template RingElement<A> ring_mul(RingElement<A> const&, RingElement<A> const&,               \
                                   Budget const&);                                             \
  template bool ring_equal(RingElement<A> const&, RingElement<A> const&, Budget const&);       \
  template ClassicalElement<A> classical_class(ActionSet<A> const&);                           \
  template ActionSet<A> realize(ClassicalElement<A> const&);                                   \
  template ClassicalElement<A> classical_add(ClassicalElement<A> const&,                       \
                                             ClassicalElement<A> const&);                      \
  template ClassicalElement<A> classical_mul(ClassicalElement<A> const&,                       \
                                             ClassicalElement<A> const&);                      \
  template bool classical_equal(ClassicalElement<A> const&, ClassicalElement<A> const&);       \
  template RigElement<A> iota_rig(ClassicalElement<A> const&, Budget const&);                  \
  template RingElement<A> iota_ring(ClassicalElement<A> const&, ClassicalElement<A> const&,    \
                                    Budget const&);                                            \
  template std::optional<ClassicalElement<A>> iota_preimage(RigElement<A> const&);             \
  template std::vector<CatSet<A>> enumerate_blocks(A const&, std::size_t, Budget const&);      \
  template std::vector<CatSet<A>> enumerate_instances(A const&, std::size_t, Budget const&);   \
  template std::vector<EnumeratedClass<A>> enumerate_classes(A const&, std::size_t,            \
                                                             Budget const&);                   \
  template std::optional<CatSet<A>> random_catset(A const&, std::size_t, std::mt19937_64&);    \
  template CancellationReport test_cancellation(A const&, std::size_t, Budget const&);

  BURNCAT_INSTANTIATE(Group)
  BURNCAT_INSTANTIATE(Groupoid)

#undef BURNCAT_INSTANTIATE

}  // namespace burncat
