#include <catch_amalgamated.hpp>

#include <set>

#include "burncat/groupoid_ext.hpp"
#include "support.hpp"

using namespace burncat;
using namespace burncat::test;

namespace {

  // pair(2) x C2: arrow (i -> j, c) has index (i * 2 + j) * 2 + c.
  Groupoid pair_times_c2() {
    std::vector<Index>                src, tgt, inv, ident{0, 6};
    std::vector<std::array<Index, 3>> comp;
    auto id = [](Index i, Index j, Index c) { return (i * 2 + j) * 2 + c; };
    for (Index i = 0; i < 2; ++i) {
      for (Index j = 0; j < 2; ++j) {
        for (Index c = 0; c < 2; ++c) {
          src.push_back(i);
          tgt.push_back(j);
          inv.push_back(id(j, i, c));
          for (Index k = 0; k < 2; ++k) {
            for (Index d = 0; d < 2; ++d) {
              comp.push_back({id(j, k, d), id(i, j, c), id(i, k, c ^ d)});
            }
          }
        }
      }
    }
    return Groupoid::make(2, src, tgt, ident, inv, comp);
  }

  // The arrows over their targets, acted on by conjugation, with the
  // objects over themselves.
  CatGroupoidSet arrows_over_targets(Groupoid const& g) {
    std::vector<Index>                objects(g.num_objects()), src, tgt, ident;
    std::vector<std::array<Index, 3>> on_objects, on_arrows, comp;
    for (Index a = 0; a < g.num_elements(); ++a) {
      src.push_back(g.source(a));
      tgt.push_back(g.target(a));
      on_objects.push_back({g.target(a), a, g.source(a)});
      for (Index h = 0; h < g.num_elements(); ++h) {
        // h^-1 a h needs s(a) = t(h); elsewhere the action stays undefined
        if (g.target(h) == g.target(a) && g.source(a) == g.target(h)) {
          on_arrows.push_back({a, h, g.compose(g.inverse(h), g.compose(a, h))});
        }
        if (g.source(a) == g.target(h)) {
          comp.push_back({a, h, g.compose(a, h)});
        }
      }
    }
    for (Index x = 0; x < g.num_objects(); ++x) {
      objects[x] = x;
      ident.push_back(g.unit(x));
    }
    return CatGroupoidSet::make(make_groupoid_set(g, objects, on_objects),
                                make_groupoid_set(g, tgt, on_arrows), src, tgt, ident, comp);
  }

  std::vector<CatGroupoidSet> random_over(Groupoid const& g, std::size_t count, std::size_t arrows,
                                          std::uint64_t seed) {
    std::mt19937_64             rng(seed);
    std::vector<CatGroupoidSet> out;
    while (out.size() < count) {
      if (auto x = random_catset(g, arrows, rng)) {
        out.push_back(*x);
      }
    }
    return out;
  }

}  // namespace

TEST_CASE("groupoids") {
  auto const d = Groupoid::discrete(2);
  auto const dc = connected_components(d);
  CHECK(dc[0] != dc[1]);
  CHECK(isotropy_group(d, 0).group.order() == 1);

  auto const p = Groupoid::pair(2);
  CHECK(p.num_elements() == 4);
  auto const pc = connected_components(p);
  CHECK(pc[0] == pc[1]);
  for (Index x = 0; x < 2; ++x) {
    std::size_t loops = 0;
    for (Index a = 0; a < p.num_elements(); ++a) {
      loops += p.source(a) == x && p.target(a) == x;
    }
    CHECK(loops == 1);
    CHECK(isotropy_group(p, x).group.order() == 1);
  }

  auto const u  = io::groupoid_from_spec("pair:2+C2");
  auto const uc = connected_components(u);
  CHECK(std::set<Index>(uc.begin(), uc.end()).size() == 2);
  CHECK(uc[0] == uc[1]);
  CHECK(uc[2] != uc[0]);
  CHECK(isotropy_group(u, 0).group.order() == 1);
  CHECK(isotropy_group(u, 2).group.order() == 2);
}

TEST_CASE("groupoid-sets and fibre products") {
  auto const u = io::groupoid_from_spec("pair:2+C2");
  auto const sets = random_over(u, 6, 4, 41);
  for (auto const& c : sets) {
    auto const& x = c.objects();
    CHECK(isomorphic(fibre_product(x, unit_set(u)), x));
    for (auto const& d : sets) {
      auto const& y = d.objects();
      std::size_t expected = 0;
      for (Index a = 0; a < u.num_objects(); ++a) {
        expected += std::count(x.colors().begin(), x.colors().end(), a)
                    * std::count(y.colors().begin(), y.colors().end(), a);
      }
      CHECK(fibre_product(x, y).size() == expected);
    }
  }

  auto const d  = Groupoid::discrete(2);
  auto const at0 = make_groupoid_set(d, {0}, {{0, 0, 0}});
  auto const at1 = make_groupoid_set(d, {1}, {{0, 1, 0}});
  CHECK(fibre_product(at0, at1).size() == 0);
}

TEST_CASE("categorified groupoid-sets") {
  auto const u    = io::groupoid_from_spec("pair:2+C2");
  auto const xs   = random_over(u, 4, 4, 43);
  auto const unit = unit_object(u);
  for (auto const& x : xs) {
    CHECK(catset_isomorphic(product(x, unit), x));
    auto const ru = right_unitor(x);
    CHECK(compose(ru.forward, ru.backward) == InternalFunctor<Groupoid>::identity(x));
    auto const d = distributor(x, xs[0], xs[1]);
    CHECK(d.forward.dom().num_arrows() == d.forward.cod().num_arrows());
    CHECK(d.forward.dom().num_arrows()
          == product(x, xs[1]).num_arrows() + product(xs[0], xs[1]).num_arrows());
  }
  auto const inc = include(xs[0].objects());
  CHECK(inc.num_arrows() == inc.num_objects());
}

TEST_CASE("arrows over their targets form an instance only for bundles of groups") {
  for (char const* spec : {"pair:2", "pair:3", "pair:2+C2"}) {
    INFO(spec);
    auto const g = io::groupoid_from_spec(spec);
    CHECK(error_of([&] { arrows_over_targets(g); }).has_value());
  }
  CHECK(error_of([&] { arrows_over_targets(pair_times_c2()); }).has_value());
  for (char const* spec : {"C2", "S3", "discrete:2", "C2+S3", "discrete:1+C3"}) {
    INFO(spec);
    auto const g = io::groupoid_from_spec(spec);
    CHECK_FALSE(error_of([&] { arrows_over_targets(g); }).has_value());
  }
}

TEST_CASE("restriction") {
  auto const u  = io::groupoid_from_spec("pair:2+C2");
  auto const xs = random_over(u, 6, 4, 47);

  std::vector<Index> all_objects(u.num_objects()), all_arrows(u.num_elements());
  std::iota(all_objects.begin(), all_objects.end(), 0);
  std::iota(all_arrows.begin(), all_arrows.end(), 0);
  auto const whole = make_subgroupoid(u, all_objects, all_arrows);
  auto const at2   = vertex_subgroupoid(u, 2);
  auto const comp0 = component_subgroupoid(u, 0);

  for (auto const& x : xs) {
    CHECK(restrict(x, whole) == x);

    auto const r = restrict(x, at2);
    std::vector<Index> over;
    for (Index o = 0; o < x.num_objects(); ++o) {
      if (x.objects().color(o) == 2) {
        over.push_back(o);
      }
    }
    REQUIRE(r.num_objects() == over.size());
    for (Index i = 0; i < over.size(); ++i) {
      for (Index a = 0; a < at2.arrows.size(); ++a) {
        Index const moved = x.objects().act(over[i], at2.arrows[a]);
        CHECK(over[r.objects().act(i, a)] == moved);
      }
    }
    for (auto const& y : xs) {
      CHECK(catset_isomorphic(restrict(disjoint_union(x, y), comp0),
                              disjoint_union(restrict(x, comp0), restrict(y, comp0))));
    }
  }
  CHECK(error_of([&] { make_subgroupoid(u, {0}, {1}); }) == Errc::NotSubgroupoid);
}

TEST_CASE("transitive reduction") {
  auto const c2 = Groupoid::from_group(Group::cyclic(2));
  auto const r1 = transitive_reduction(c2, 0);
  for (auto const& x : random_over(c2, 5, 4, 53)) {
    CHECK(catset_isomorphic(expand(r1, reduce(r1, x)), x));
  }

  auto const p  = Groupoid::pair(2);
  auto const rp = transitive_reduction(p, 0);
  auto const z  = unit_object(Group::trivial());
  auto const gz = expand(rp, z);
  CHECK(gz.num_objects() == 2);
  CHECK(reduce(rp, gz) == z);
  auto const back = reduce_expand(rp, z);
  CHECK(compose(back.forward, back.backward) == InternalFunctor<Group>::identity(z));

  auto const pc = pair_times_c2();
  auto const rc = transitive_reduction(pc, 0);
  CHECK(rc.isotropy.group.order() == 2);
  for (auto const& x : random_over(pc, 8, 8, 59)) {
    auto const iso = expand_reduce(rc, x);
    auto const& f  = iso.forward;
    CHECK(brute_is_functor(f.dom(), f.cod(), f.f0(), f.f1()));
    CHECK(compose(iso.backward, iso.forward) == InternalFunctor<Groupoid>::identity(f.dom()));
    CHECK(compose(iso.forward, iso.backward) == InternalFunctor<Groupoid>::identity(x));
    auto const z2 = reduce(rc, x);
    CHECK(reduce(rc, expand(rc, z2)) == z2);
  }
  CHECK(error_of([] { transitive_reduction(Groupoid::discrete(2), 0); }) == Errc::NotTransitive);
}

TEST_CASE("groupoid classes") {
  auto const u = io::groupoid_from_spec("pair:2+C2");
  CHECK(rig_class(include(make_groupoid_set(u, {}, {}))).classes.empty());

  std::mt19937_64 rng(61);
  for (auto const& x : random_over(u, 8, 4, 67)) {
    std::vector<Index> o(x.num_objects()), a(x.num_arrows());
    std::iota(o.begin(), o.end(), 0);
    std::iota(a.begin(), a.end(), 0);
    std::shuffle(o.begin(), o.end(), rng);
    std::shuffle(a.begin(), a.end(), rng);
    CHECK(rig_equal(rig_class(x), rig_class(relabel(x, o, a))));
  }

  // a point over each component
  auto const pair_point = include(unit_set(Groupoid::pair(2)));
  auto const units      = unit_object(u);
  std::vector<Index> first{0, 1}, second{2};
  auto const on_pair = full_subcategory(units, first).sub;
  auto const on_c2   = full_subcategory(units, second).sub;
  CHECK(pair_point.num_objects() == 2);
  CHECK_FALSE(rig_equal(rig_class(on_pair), rig_class(on_c2)));
  CHECK_FALSE(weak_equivalent(on_pair, on_c2));
}

TEST_CASE("decomposition over components") {
  auto const d = decompose_ring(Groupoid::discrete(2), 2);
  CHECK(d.ok());
  CHECK(d.groupoid_classes == d.tuples);

  auto const u = decompose_ring(io::groupoid_from_spec("pair:2+C2"), 2);
  INFO(u.failures.size());
  CHECK(u.ok());
  CHECK(u.components.size() == 2);
  CHECK(u.sums_checked > 0);

  auto const one = decompose_ring(Groupoid::from_group(Group::cyclic(2)), 3);
  CHECK(one.ok());
  CHECK(one.groupoid_classes == enumerate_classes(Group::cyclic(2), 3).size());
}
