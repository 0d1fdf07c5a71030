#include <catch_amalgamated.hpp>

#include "support.hpp"

using namespace burncat;
using namespace burncat::test;

namespace {

  // Every plain category with at most max_arrows arrows, from raw tables:
  // identities first, then each choice of endpoints and composites that is
  // associative.
  std::vector<CatGSet> brute_categories(std::size_t max_arrows) {
    auto const           g = Group::trivial();
    std::vector<CatGSet> out;
    for (std::size_t n = 0; n <= max_arrows; ++n) {
      for (std::size_t m = n; m <= max_arrows; ++m) {
        std::size_t const  k = m - n;
        std::vector<Index> src(m), tgt(m);
        for (Index i = 0; i < n; ++i) {
          src[i] = tgt[i] = i;
        }
        std::function<void(std::size_t)> ends = [&](std::size_t i) {
          if (i == k) {
            // composites of non-identity pairs
            std::vector<std::pair<Index, Index>> pairs;
            for (Index p = n; p < m; ++p) {
              for (Index q = n; q < m; ++q) {
                if (src[p] == tgt[q]) {
                  pairs.emplace_back(p, q);
                }
              }
            }
            std::vector<Index>               comp(m * m, kNone);
            std::function<void(std::size_t)> fill = [&](std::size_t j) {
              if (j == pairs.size()) {
                for (Index p = 0; p < m; ++p) {
                  for (Index q = 0; q < m; ++q) {
                    if (src[p] == tgt[q] && (p < n || q < n)) {
                      comp[p * m + q] = p < n ? q : p;
                    }
                  }
                }
                for (Index p = 0; p < m; ++p) {
                  for (Index q = 0; q < m; ++q) {
                    for (Index r = 0; r < m; ++r) {
                      if (src[p] == tgt[q] && src[q] == tgt[r]
                          && comp[comp[p * m + q] * m + r] != comp[p * m + comp[q * m + r]]) {
                        return;
                      }
                    }
                  }
                }
                std::vector<std::array<Index, 3>> triples;
                for (Index p = 0; p < m; ++p) {
                  for (Index q = 0; q < m; ++q) {
                    if (comp[p * m + q] != kNone) {
                      triples.push_back({p, q, comp[p * m + q]});
                    }
                  }
                }
                std::vector<Index> ident(n);
                std::iota(ident.begin(), ident.end(), 0);
                out.push_back(CatGSet::make(trivial_gset(g, n), trivial_gset(g, m), src, tgt,
                                            ident, triples));
                return;
              }
              auto const [p, q] = pairs[j];
              for (Index r = 0; r < m; ++r) {
                if (src[r] == src[q] && tgt[r] == tgt[p]) {
                  comp[p * m + q] = r;
                  fill(j + 1);
                }
              }
              comp[p * m + q] = kNone;
            };
            fill(0);
            return;
          }
          for (Index s = 0; s < n; ++s) {
            for (Index t = 0; t < n; ++t) {
              src[n + i] = s;
              tgt[n + i] = t;
              ends(i + 1);
            }
          }
        };
        ends(0);
      }
    }
    return out;
  }

  std::size_t brute_class_count(std::vector<CatGSet> const& xs) {
    std::vector<CatGSet> reps;
    for (auto const& x : xs) {
      bool seen = false;
      for (auto const& r : reps) {
        if (brute_weakly_equivalent(x, r)) {
          seen = true;
          break;
        }
      }
      if (!seen) {
        reps.push_back(x);
      }
    }
    return reps.size();
  }

  GroupHom c2_into_s3() {
    auto const s3 = Group::symmetric(3);
    for (Index g = 0; g < s3.order(); ++g) {
      if (g != s3.identity() && s3.mul(g, g) == s3.identity()) {
        return GroupHom::make(Group::cyclic(2), s3, {s3.identity(), g});
      }
    }
    FAIL("S3 has no involution");
    return GroupHom::make(Group::trivial(), s3, {s3.identity()});
  }

}  // namespace

TEST_CASE("rig classes") {
  auto const g = Group::trivial();
  CHECK(rig_class(include(trivial_gset(g, 0))).classes.empty());

  auto const two = rig_class(disjoint_union(point(), point()));
  REQUIRE(two.classes.size() == 1);
  CHECK(two.classes[0].multiplicity == 2);
  CHECK(two.size() == 2);

  CHECK(rig_equal(rig_class(walking_iso()), rig_class(point())));
  CHECK_FALSE(rig_equal(rig_class(walking_arrow()), rig_class(parallel_pair())));
  CHECK(rig_class(c2_no_skeleton()).size() == 1);
}

TEST_CASE("rig arithmetic") {
  auto const g  = Group::trivial();
  auto const u  = rig_class(disjoint_union(walking_arrow(), span()));
  CHECK(rig_equal(rig_add(u, rig_zero(g)), u));
  CHECK(rig_equal(rig_mul(u, rig_one(g)), u));
  CHECK(rig_equal(rig_mul(u, rig_class(point())), u));

  auto const pt  = rig_class(point());
  auto const two = classical_class(trivial_gset(g, 2));
  CHECK(rig_equal(rig_add(pt, pt), iota_rig(two)));
  REQUIRE(two.counts.size() == 1);
  CHECK(two.counts.begin()->second == 2);

  std::mt19937_64 rng(23);
  for (int i = 0; i < 15; ++i) {
    auto x = random_catset(Group::cyclic(2), 4, rng);
    auto y = random_catset(Group::cyclic(2), 4, rng);
    if (!x || !y) {
      continue;
    }
    std::vector<Index> o(x->num_objects()), a(x->num_arrows());
    std::iota(o.begin(), o.end(), 0);
    std::iota(a.begin(), a.end(), 0);
    std::shuffle(o.begin(), o.end(), rng);
    std::shuffle(a.begin(), a.end(), rng);
    CHECK(rig_equal(rig_class(*x), rig_class(relabel(*x, o, a))));
    // realizing the product of classes is equivalent to the product
    auto const prod = rig_mul(rig_class(*x), rig_class(*y));
    CHECK(weak_equivalent(realize(prod), product(*x, *y)).has_value());
    auto const sum = rig_add(rig_class(*x), rig_class(*y));
    CHECK(rig_equal(sum, rig_class(disjoint_union(*x, *y))));
  }
}

TEST_CASE("ring arithmetic") {
  auto const g = Group::trivial();
  auto const x = rig_class(walking_arrow());
  auto const r = ring_make(x, rig_zero(g));
  CHECK(ring_equal(ring_add(r, ring_neg(r)), ring_make(rig_zero(g), rig_zero(g))));

  std::mt19937_64 rng(29);
  std::vector<RingElement<Group>> sample;
  auto const c  = Group::cyclic(2);
  auto const xs = rig_class(c2_no_skeleton());
  auto const instances = enumerate_instances(c, 3);
  for (auto const& e : instances) {
    auto const es = rig_class(e);
    CHECK(ring_equal(ring_make(xs, rig_zero(c)), ring_make(rig_add(xs, es), es)));
    // skeletal classes only, so products never need the search
    sample.push_back(ring_make(es, rig_class(instances[rng() % instances.size()])));
  }
  for (int i = 0; i < 20; ++i) {
    auto const& a = sample[rng() % sample.size()];
    auto const& b = sample[rng() % sample.size()];
    auto const& d = sample[rng() % sample.size()];
    CHECK(ring_equal(ring_mul(a, ring_add(b, d)), ring_add(ring_mul(a, b), ring_mul(a, d))));
  }
}

TEST_CASE("classical classes and the inclusion") {
  auto const c2 = Group::cyclic(2);
  CHECK(classical_class(trivial_gset(c2, 0)).counts.empty());
  auto const reg = classical_class(regular_c2());
  REQUIRE(reg.counts.size() == 1);
  CHECK(reg.counts.begin()->first.subgroup.size() == 1);
  for (std::size_t n = 0; n < 5; ++n) {
    auto const c = classical_class(trivial_gset(Group::trivial(), n));
    std::size_t total = 0;
    for (auto const& [t, k] : c.counts) {
      total += k;
    }
    CHECK(total == n);
  }

  CHECK(iota_rig(classical_class(trivial_gset(c2, 0))).classes.empty());
  CHECK(rig_equal(iota_rig(reg), rig_class(include(regular_c2()))));
  auto const back = iota_preimage(iota_rig(reg));
  REQUIRE(back);
  CHECK(classical_equal(*back, reg));
  CHECK_FALSE(iota_preimage(rig_class(walking_arrow())));
}

TEST_CASE("induction") {
  auto const c2 = Group::cyclic(2);
  auto const x  = c2_no_skeleton();
  CHECK(induce(GroupHom::make(c2, c2, {0, 1}), x) == x);

  auto const under = induce(GroupHom::make(Group::trivial(), c2, {0}), x);
  CHECK(under.acting().order() == 1);
  CHECK(under.src_table() == x.src_table());
  CHECK(under.comp_table() == x.comp_table());

  auto const phi = c2_into_s3();
  auto const s3  = phi.target();
  for (auto const& sub : all_subgroups(s3)) {
    auto const orbit = coset_set(s3, 0, sub);
    auto const c     = classical_class(orbit);
    CHECK(rig_equal(iota_rig(induce_classical(phi, c)), induce_rig(phi, iota_rig(c))));
    CHECK(classical_equal(induce_classical(phi, c), classical_class(induce(phi, orbit))));
  }
}

TEST_CASE("class enumeration") {
  CHECK(enumerate_classes(Group::trivial(), 0).size() == 1);
  CHECK(enumerate_classes(Group::cyclic(2), 0).size() == 1);
  CHECK(enumerate_classes(Group::trivial(), 1).size() == 2);

  auto const brute = brute_categories(3);
  auto const expected = brute_class_count(brute);
  auto const classes  = enumerate_classes(Group::trivial(), 3);
  CHECK(classes.size() == expected);
  CHECK(classes.size() > 4);
  bool has_arrow = false;
  for (auto const& c : classes) {
    has_arrow = has_arrow || rig_equal(c.element, rig_class(walking_arrow()));
  }
  CHECK(has_arrow);

  CHECK(error_of([] {
          Budget b;
          b.max_enumeration_arrows = 2;
          enumerate_classes(Group::trivial(), 3, b);
        })
        == Errc::BudgetExceeded);
}

TEST_CASE("cancellation") {
  auto const t = test_cancellation(Group::trivial(), 2);
  CHECK(t.counterexamples.empty());
  CHECK(t.triples > 0);
  auto const c = test_cancellation(Group::cyclic(2), 2);
  CHECK(c.counterexamples.empty());

  auto const x = rig_class(span());
  auto const e = rig_class(walking_iso());
  CHECK(rig_equal(rig_add(x, e), rig_add(x, e)));
}
