#include "burncat/groupoid_ext.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

#include "burncat/monoidal.hpp"

namespace burncat {

  namespace {

    std::string str(Index i) {
      return std::to_string(i);
    }

    struct Kept {
      std::vector<Index> pos;  // ambient element -> local, or kNone
      std::vector<Index> elements;
    };

    void check_sub(Groupoid const& ambient, Subgroupoid const& sub) {
      for (Index x : sub.objects) {
        if (x >= ambient.num_objects()) {
          fail(Errc::NotSubgroupoid, "object " + str(x) + " is not in the groupoid");
        }
      }
      for (Index a = 0; a < sub.arrows.size(); ++a) {
        Index const g = sub.arrows[a];
        if (g >= ambient.num_elements()
            || ambient.source(g) != sub.objects[sub.groupoid.source(a)]
            || ambient.target(g) != sub.objects[sub.groupoid.target(a)]) {
          fail(Errc::NotSubgroupoid, "arrow " + str(g) + " does not match the groupoid");
        }
      }
    }

    GroupoidSet restrict_set(GroupoidSet const& x, Subgroupoid const& sub, Kept& kept) {
      Groupoid const&    g = x.acting();
      std::vector<Index> obj_pos(g.num_objects(), kNone);
      for (Index i = 0; i < sub.objects.size(); ++i) {
        obj_pos[sub.objects[i]] = i;
      }
      kept.pos.assign(x.size(), kNone);
      kept.elements.clear();
      std::vector<Index> color;
      for (Index p = 0; p < x.size(); ++p) {
        if (obj_pos[x.color(p)] != kNone) {
          kept.pos[p] = static_cast<Index>(kept.elements.size());
          kept.elements.push_back(p);
          color.push_back(obj_pos[x.color(p)]);
        }
      }
      std::size_t const  m = sub.arrows.size();
      std::vector<Index> act(kept.elements.size() * m, kNone);
      for (Index i = 0; i < kept.elements.size(); ++i) {
        for (Index a = 0; a < m; ++a) {
          Index q = x.act(kept.elements[i], sub.arrows[a]);
          if (q != kNone) {
            act[i * m + a] = kept.pos[q];
          }
        }
      }
      return GroupoidSet::make(sub.groupoid, std::move(color), std::move(act));
    }

    std::vector<Index> map_through(std::vector<Index> const& table,
                                   Kept const&               from,
                                   Kept const&               to) {
      std::vector<Index> out;
      for (Index p : from.elements) {
        out.push_back(to.pos[table[p]]);
      }
      return out;
    }

    void check_acting(Groupoid const& a, Groupoid const& b) {
      if (!(a == b)) {
        fail(Errc::GroupMismatch, "instance is over a different groupoid");
      }
    }

    // Fibre over the base, as positions.
    Kept fibre(TransitiveReduction const& r, GroupoidSet const& x) {
      Kept k;
      k.pos.assign(x.size(), kNone);
      for (Index p = 0; p < x.size(); ++p) {
        if (x.color(p) == r.base) {
          k.pos[p] = static_cast<Index>(k.elements.size());
          k.elements.push_back(p);
        }
      }
      return k;
    }

  }  // namespace

  GroupoidSet restrict(GroupoidSet const& x, Subgroupoid const& sub) {
    check_sub(x.acting(), sub);
    Kept k;
    return restrict_set(x, sub, k);
  }

  CatGroupoidSet restrict(CatGroupoidSet const& x, Subgroupoid const& sub) {
    check_sub(x.acting(), sub);
    Kept       k0, k1;
    auto       objects = restrict_set(x.objects(), sub, k0);
    auto       arrows  = restrict_set(x.arrows(), sub, k1);
    auto const src     = map_through(x.src_table(), k1, k0);
    auto const tgt     = map_through(x.tgt_table(), k1, k0);
    auto const ident   = map_through(x.ident_table(), k0, k1);
    std::vector<std::array<Index, 3>> comp;
    for (auto const& [p, q, pq] : x.composition_triples()) {
      if (k1.pos[p] != kNone) {
        comp.push_back({k1.pos[p], k1.pos[q], k1.pos[pq]});
      }
    }
    return CatGroupoidSet::make(std::move(objects), std::move(arrows), src, tgt, ident,
                                std::move(comp));
  }

  TransitiveReduction transitive_reduction(Groupoid const& g, Index base) {
    if (base >= g.num_objects()) {
      fail(Errc::OutOfRange, "base object " + str(base));
    }
    std::vector<Index> star(g.num_objects(), kNone);
    star[base] = g.unit(base);
    for (Index a = 0; a < g.num_elements(); ++a) {
      if (g.source(a) == base && star[g.target(a)] == kNone) {
        star[g.target(a)] = a;
      }
    }
    for (Index x = 0; x < g.num_objects(); ++x) {
      if (star[x] == kNone) {
        fail(Errc::NotTransitive, "no arrow from " + str(base) + " to " + str(x));
      }
    }
    auto               iso = isotropy_group(g, base);
    std::vector<Index> element_of(g.num_elements(), kNone);
    for (Index i = 0; i < iso.arrows.size(); ++i) {
      element_of[iso.arrows[i]] = i;
    }
    return {g, base, std::move(iso), std::move(star), std::move(element_of)};
  }

  GSet reduce(TransitiveReduction const& r, GroupoidSet const& x) {
    check_acting(x.acting(), r.groupoid);
    Kept const         k = fibre(r, x);
    std::size_t const  m = r.isotropy.arrows.size();
    std::vector<Index> act(k.elements.size() * m);
    for (Index i = 0; i < k.elements.size(); ++i) {
      for (Index e = 0; e < m; ++e) {
        act[i * m + e] = k.pos[x.act(k.elements[i], r.isotropy.arrows[e])];
      }
    }
    return GSet::make(r.isotropy.group, std::vector<Index>(k.elements.size(), 0),
                      std::move(act));
  }

  CatGSet reduce(TransitiveReduction const& r, CatGroupoidSet const& x) {
    check_acting(x.acting(), r.groupoid);
    Kept const k0 = fibre(r, x.objects()), k1 = fibre(r, x.arrows());
    std::vector<std::array<Index, 3>> comp;
    for (auto const& [p, q, pq] : x.composition_triples()) {
      if (k1.pos[p] != kNone) {
        comp.push_back({k1.pos[p], k1.pos[q], k1.pos[pq]});
      }
    }
    return CatGSet::make(reduce(r, x.objects()), reduce(r, x.arrows()),
                         map_through(x.src_table(), k1, k0), map_through(x.tgt_table(), k1, k0),
                         map_through(x.ident_table(), k0, k1), std::move(comp));
  }

  GroupoidSet expand(TransitiveReduction const& r, GSet const& z) {
    if (!(z.acting() == r.isotropy.group)) {
      fail(Errc::GroupMismatch, "set is not over the isotropy group");
    }
    Groupoid const&    g = r.groupoid;
    std::size_t const  n = g.num_objects(), m = g.num_elements();
    std::vector<Index> color(z.size() * n), act(z.size() * n * m, kNone);
    for (Index u = 0; u < z.size(); ++u) {
      for (Index x = 0; x < n; ++x) {
        Index const p = u * n + x;
        color[p]      = x;
        for (Index a = 0; a < m; ++a) {
          if (g.target(a) != x) {
            continue;
          }
          Index const y = g.source(a);
          Index const k = g.compose(g.inverse(r.star[x]), g.compose(a, r.star[y]));
          act[p * m + a] = z.act(u, r.element_of[k]) * n + y;
        }
      }
    }
    return GroupoidSet::make(g, std::move(color), std::move(act));
  }

  CatGroupoidSet expand(TransitiveReduction const& r, CatGSet const& z) {
    auto const n = static_cast<Index>(r.groupoid.num_objects());
    auto       lift = [&](std::vector<Index> const& t) {
      std::vector<Index> out;
      for (Index v : t) {
        for (Index x = 0; x < n; ++x) {
          out.push_back(v * n + x);
        }
      }
      return out;
    };
    std::vector<std::array<Index, 3>> comp;
    for (auto const& [p, q, pq] : z.composition_triples()) {
      for (Index x = 0; x < n; ++x) {
        comp.push_back({p * n + x, q * n + x, pq * n + x});
      }
    }
    return CatGroupoidSet::make(expand(r, z.objects()), expand(r, z.arrows()),
                                lift(z.src_table()), lift(z.tgt_table()),
                                lift(z.ident_table()), std::move(comp));
  }

  Isomorphism<Group> reduce_expand(TransitiveReduction const& r, CatGSet const& z) {
    auto const         y = reduce(r, expand(r, z));
    std::vector<Index> f0(z.num_objects()), f1(z.num_arrows());
    std::iota(f0.begin(), f0.end(), 0);
    std::iota(f1.begin(), f1.end(), 0);
    return {InternalFunctor<Group>::make(y, z, f0, f1),
            InternalFunctor<Group>::make(z, y, f0, f1)};
  }

  Isomorphism<Groupoid> expand_reduce(TransitiveReduction const& r, CatGroupoidSet const& x) {
    Groupoid const& g = r.groupoid;
    auto const      y = expand(r, reduce(r, x));
    auto const      n = static_cast<Index>(g.num_objects());
    auto            there = [&](GroupoidSet const& s, std::size_t count) {
      Kept const         k = fibre(r, s);
      std::vector<Index> fwd(count), back(s.size());
      for (Index i = 0; i < k.elements.size(); ++i) {
        for (Index o = 0; o < n; ++o) {
          fwd[i * n + o] = s.act(k.elements[i], g.inverse(r.star[o]));
        }
      }
      for (Index v = 0; v < s.size(); ++v) {
        Index const o = s.color(v);
        back[v]       = k.pos[s.act(v, r.star[o])] * n + o;
      }
      return std::make_pair(fwd, back);
    };
    auto [f0, b0] = there(x.objects(), y.num_objects());
    auto [f1, b1] = there(x.arrows(), y.num_arrows());
    return {InternalFunctor<Groupoid>::make(y, x, std::move(f0), std::move(f1)),
            InternalFunctor<Groupoid>::make(x, y, std::move(b0), std::move(b1))};
  }

  std::vector<ComponentReduction> component_reductions(Groupoid const& g) {
    auto const                      label = connected_components(g);
    std::vector<ComponentReduction> out;
    std::vector<char>               done(g.num_objects(), 0);
    for (Index x = 0; x < g.num_objects(); ++x) {
      if (done[label[x]]) {
        continue;
      }
      done[label[x]] = 1;
      auto sub       = component_subgroupoid(g, x);
      auto red       = transitive_reduction(sub.groupoid, 0);
      out.push_back({std::move(sub), std::move(red)});
    }
    return out;
  }

  std::vector<CatGSet> decompose(std::vector<ComponentReduction> const& parts,
                                 CatGroupoidSet const&                  x) {
    std::vector<CatGSet> out;
    for (auto const& p : parts) {
      out.push_back(reduce(p.reduction, restrict(x, p.component)));
    }
    return out;
  }

  std::vector<RigElement<Group>> decompose_rig(std::vector<ComponentReduction> const& parts,
                                               RigElement<Groupoid> const&           u,
                                               Budget const&                         budget) {
    std::vector<RigElement<Group>> out;
    for (auto const& x : decompose(parts, realize(u))) {
      out.push_back(rig_class(x, budget));
    }
    return out;
  }

  std::vector<ClassicalElement<Group>>
  decompose_classical(std::vector<ComponentReduction> const& parts,
                      ClassicalElement<Groupoid> const&      c) {
    auto const                           x = realize(c);
    std::vector<ClassicalElement<Group>> out;
    for (auto const& p : parts) {
      out.push_back(classical_class(reduce(p.reduction, restrict(x, p.component))));
    }
    return out;
  }

  DecompositionReport decompose_ring(Groupoid const& g, std::size_t bound, Budget const& budget) {
    DecompositionReport report;
    auto const          parts   = component_reductions(g);
    auto const          classes = enumerate_classes(g, bound, budget);
    report.groupoid_classes     = classes.size();

    using Tuple = std::vector<RigElement<Group>>;
    auto same = [&](Tuple const& a, Tuple const& b) {
      for (std::size_t c = 0; c < a.size(); ++c) {
        if (!rig_equal(a[c], b[c], budget)) {
          return false;
        }
      }
      return true;
    };

    std::vector<Tuple> images;
    for (auto const& c : classes) {
      images.push_back(decompose_rig(parts, c.element, budget));
    }
    for (std::size_t i = 0; i < images.size(); ++i) {
      for (std::size_t j = i + 1; j < images.size(); ++j) {
        if (same(images[i], images[j])) {
          report.injective = false;
          report.failures.push_back("classes " + std::to_string(i) + " and "
                                    + std::to_string(j) + " have the same components");
        }
      }
    }

    // tuples of isotropy classes within the weighted bound
    std::vector<std::vector<EnumeratedClass<Group>>> per;
    for (auto const& p : parts) {
      std::size_t const k = p.component.objects.size();
      per.push_back(enumerate_classes(p.reduction.isotropy.group, bound / k, budget));
      report.components.push_back(
          {p.component.objects, p.reduction.isotropy.group.order(), per.back().size()});
    }
    std::vector<Tuple> tuples;
    Tuple              cur;
    std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t c, std::size_t used) {
      if (c == parts.size()) {
        tuples.push_back(cur);
        return;
      }
      std::size_t const k = parts[c].component.objects.size();
      for (auto const& e : per[c]) {
        std::size_t const w = used + k * e.representative.num_arrows();
        if (w <= bound) {
          cur.push_back(e.element);
          rec(c + 1, w);
          cur.pop_back();
        }
      }
    };
    rec(0, 0);
    report.tuples = tuples.size();
    for (std::size_t t = 0; t < tuples.size(); ++t) {
      bool hit = false;
      for (auto const& img : images) {
        if (same(img, tuples[t])) {
          hit = true;
          break;
        }
      }
      if (!hit) {
        report.surjective = false;
        report.failures.push_back("tuple " + std::to_string(t) + " is not hit");
      }
    }
    for (std::size_t i = 0; i < images.size(); ++i) {
      bool inside = std::any_of(tuples.begin(), tuples.end(),
                                [&](Tuple const& t) { return same(images[i], t); });
      if (!inside) {
        report.failures.push_back("class " + std::to_string(i)
                                  + " decomposes outside the weighted bound");
      }
    }

    // sums and products of enumerated classes
    for (std::size_t i = 0; i < classes.size(); ++i) {
      for (std::size_t j = i; j < classes.size(); ++j) {
        auto const sum = decompose_rig(
            parts, rig_add(classes[i].element, classes[j].element, budget), budget);
        auto const prod = decompose_rig(
            parts, rig_mul(classes[i].element, classes[j].element, budget), budget);
        for (std::size_t c = 0; c < parts.size(); ++c) {
          if (!rig_equal(sum[c], rig_add(images[i][c], images[j][c], budget), budget)) {
            report.failures.push_back("sum of classes " + std::to_string(i) + " and "
                                      + std::to_string(j) + " at component "
                                      + std::to_string(c));
          }
          if (!rig_equal(prod[c], rig_mul(images[i][c], images[j][c], budget), budget)) {
            report.failures.push_back("product of classes " + std::to_string(i) + " and "
                                      + std::to_string(j) + " at component "
                                      + std::to_string(c));
          }
        }
        ++report.sums_checked;
        ++report.products_checked;
      }
    }

    // classical classes through both routes
    auto const               types = transitive_types(g);
    std::vector<std::size_t> sizes;
    for (auto const& t : types) {
      sizes.push_back(coset_set(g, t.object, t.subgroup).size());
    }
    std::vector<Index>                             pick;
    std::function<void(Index, std::size_t)> square = [&](Index from, std::size_t total) {
      ClassicalElement<Groupoid> c{g, {}};
      for (Index t : pick) {
        ++c.counts[types[t]];
      }
      auto const upper = decompose_rig(parts, iota_rig(c, budget), budget);
      auto const lower = decompose_classical(parts, c);
      for (std::size_t k = 0; k < parts.size(); ++k) {
        if (!rig_equal(upper[k], iota_rig(lower[k], budget), budget)) {
          report.failures.push_back("classical square fails at component "
                                    + std::to_string(k));
        }
      }
      ++report.squares_checked;
      for (Index t = from; t < types.size(); ++t) {
        if (total + sizes[t] <= bound) {
          pick.push_back(t);
          square(t, total + sizes[t]);
          pick.pop_back();
        }
      }
    };
    square(0, 0);
    return report;
  }

}  // namespace burncat
