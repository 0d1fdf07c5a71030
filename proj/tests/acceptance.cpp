// Acceptance gate: one PASS/FAIL line per criterion, nonzero exit on any FAIL.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <map>
#include <random>
#include <sstream>
#include <type_traits>
#include <sys/wait.h>

#include "burncat/groupoid_ext.hpp"
#include "support.hpp"

using namespace burncat;
using namespace burncat::test;
using io::Json;

namespace {

  using Clock = std::chrono::steady_clock;

  double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
  }

  struct Outcome {
    bool        pass = false;
    std::string detail;
  };

  int exit_code(std::string const& cmd) {
    int const status = std::system((cmd + " >/dev/null 2>&1").c_str());
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  }

  std::string quoted(std::filesystem::path const& p) {
    return "'" + p.string() + "'";
  }

  // Positive decisions collected for the standalone re-check.
  struct Positive {
    std::string label;
    Json        x, y, witness;
  };
  std::vector<Positive> positives;

  template <typename A>
  void record(std::string label, CatSet<A> const& x, CatSet<A> const& y,
              WeakEquivWitness<A> const& w) {
    positives.push_back({std::move(label), io::to_json(x), io::to_json(y), io::to_json(tables(w))});
  }

  std::vector<io::AnyCatSet> data_corpus(std::size_t& rejected) {
    std::vector<io::AnyCatSet> out;
    io::Context const          ctx{data_path("")};
    for (auto const& entry : std::filesystem::directory_iterator(data_path(""))) {
      try {
        auto const j    = io::load_json(entry.path());
        auto const kind = io::kind_of(j);
        if (kind == "catgset" || kind == "catgroupoidset") {
          out.push_back(io::catset_from_json(j, ctx));
        }
      } catch (Error const&) {
        ++rejected;
      }
    }
    return out;
  }

  // Every validated instance the suite knows about.
  std::vector<io::AnyCatSet> corpus(std::size_t& rejected) {
    auto out = data_corpus(rejected);
    for (auto const& x : seven_examples()) {
      out.push_back(x);
    }
    for (auto const& g : {Group::trivial(), Group::cyclic(2)}) {
      for (auto const& x : enumerate_instances(g, 4)) {
        out.push_back(x);
      }
    }
    std::mt19937_64 rng(101);
    auto const      u = io::groupoid_from_spec("pair:2+C2");
    for (int i = 0; i < 40; ++i) {
      if (auto x = random_catset(Group::cyclic(2), 6, rng)) {
        out.push_back(*x);
      }
      if (auto x = random_catset(u, 6, rng)) {
        out.push_back(*x);
      }
    }
    return out;
  }

  //! 1. The seven displayed categories are pairwise inequivalent via the CLI.
  Outcome seven_examples_separate() {
    char const* names[] = {"point",         "walking_arrow",           "arrow_and_point",
                           "span",          "parallel_pair",           "parallel_pair_and_point",
                           "parallel_pair_and_arrow"};
    auto const  start   = Clock::now();
    std::size_t runs = 0, no = 0;
    std::string odd;
    for (std::size_t i = 0; i < 7; ++i) {
      for (std::size_t j = i + 1; j < 7; ++j) {
        int const code = exit_code(std::string(BURNCAT_CLI) + " weq "
                                   + quoted(data_path(std::string(names[i]) + ".json")) + " "
                                   + quoted(data_path(std::string(names[j]) + ".json")));
        ++runs;
        if (code == 1) {
          ++no;
        } else {
          odd += std::string(" ") + names[i] + "/" + names[j] + "=" + std::to_string(code);
        }
      }
    }
    double const t = seconds_since(start);
    std::ostringstream s;
    s << no << "/" << runs << " runs exit 1 in " << t << " s" << odd;
    return {runs == 21 && no == 21 && t < 60, s.str()};
  }

  //! 2. More than four classes at three arrows; the inclusion image is the
  //! set of classes with no non-discrete part.
  Outcome classical_gap() {
    auto const  start   = Clock::now();
    auto const  g       = Group::trivial();
    auto const  classes = enumerate_classes(g, 3);
    std::size_t discrete = 0, image = 0, mismatched = 0;
    for (auto const& c : classes) {
      bool const empty_nd = split_discrete(c.representative).nondiscrete.objects.empty();
      auto const pre      = iota_preimage(c.element);
      bool const in_image = pre && rig_equal(iota_rig(*pre), c.element);
      discrete += empty_nd;
      image += in_image;
      mismatched += empty_nd != in_image;
    }
    // every classical class reachable within the bound lands on an enumerated class
    std::size_t missing = 0;
    for (std::size_t n = 0; n <= 3; ++n) {
      auto const u = iota_rig(classical_class(trivial_gset(g, n)));
      missing += std::none_of(classes.begin(), classes.end(),
                              [&](auto const& c) { return rig_equal(c.element, u); });
    }
    double const t = seconds_since(start);
    std::ostringstream s;
    s << classes.size() << " classes, " << image << " in the image, " << discrete
      << " with empty non-discrete part, " << mismatched << " mismatched, " << missing
      << " classical classes missing, " << t << " s";
    return {classes.size() > 4 && mismatched == 0 && missing == 0 && image < classes.size()
                && t < 300,
            s.str()};
  }

  // fixed points first, then free orbits {p, p + 1}
  GSet c2_set(std::size_t fixed, std::size_t free) {
    std::vector<std::vector<Index>> rows;
    for (Index p = 0; p < fixed; ++p) {
      rows.push_back({p, p});
    }
    for (Index k = 0; k < free; ++k) {
      Index const p = fixed + 2 * k;
      rows.push_back({p, p + 1});
      rows.push_back({p + 1, p});
    }
    return make_gset(Group::cyclic(2), rows);
  }

  //! 3. Non-isomorphic C2-sets of size at most four have inequivalent images.
  Outcome injectivity() {
    std::vector<std::pair<std::size_t, std::size_t>> shapes;
    for (std::size_t free = 0; 2 * free <= 4; ++free) {
      for (std::size_t fixed = 0; fixed + 2 * free <= 4; ++fixed) {
        shapes.emplace_back(fixed, free);
      }
    }
    std::vector<RigElement<Group>> images;
    for (auto const& [fixed, free] : shapes) {
      images.push_back(iota_rig(classical_class(c2_set(fixed, free))));
    }
    std::size_t pairs = 0, failures = 0;
    for (std::size_t i = 0; i < shapes.size(); ++i) {
      for (std::size_t j = i + 1; j < shapes.size(); ++j) {
        ++pairs;
        failures += rig_equal(images[i], images[j]);
      }
    }
    std::ostringstream s;
    s << shapes.size() << " isomorphism types, " << pairs << " pairs, " << failures << " failures";
    return {failures == 0, s.str()};
  }

  // Objects a, b are isomorphic, from the raw tables.
  bool brute_isomorphic_objects(CatGSet const& x, Index a, Index b) {
    for (Index f = 0; f < x.num_arrows(); ++f) {
      if (x.src(f) == a && x.tgt(f) == b && brute_inverse(x, f)) {
        return true;
      }
    }
    return false;
  }

  // Some action-stable object set meets every isomorphism class exactly once.
  bool brute_has_skeleton(CatGSet const& x) {
    auto const n = x.num_objects();
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
      bool ok = true;
      for (Index o = 0; o < n && ok; ++o) {
        for (Index g = 0; g < x.acting().order(); ++g) {
          if ((mask >> o & 1) && !(mask >> x.objects().act(o, g) & 1)) {
            ok = false;
          }
        }
        std::size_t hits = 0;
        for (Index s = 0; s < n; ++s) {
          hits += (mask >> s & 1) && brute_isomorphic_objects(x, o, s);
        }
        ok = ok && hits == 1;
      }
      if (ok) {
        return true;
      }
    }
    return false;
  }

  //! 4. Skeleton witnesses re-validate; obstructions are genuine.
  Outcome skeleton_coherence() {
    std::mt19937_64 rng(7);
    std::size_t     drawn = 0, with = 0, without = 0, failures = 0;
    std::string     notes;
    for (auto const& g : {Group::trivial(), Group::cyclic(2)}) {
      for (std::size_t k = 0; k < 50;) {
        auto const x = random_catset(g, 6, rng);
        if (!x) {
          continue;
        }
        ++k;
        ++drawn;
        auto const s = skeleton(*x);
        if (s.index() == 0) {
          ++with;
          auto const& sub = std::get<0>(s).part.sub;
          auto const  w   = weak_equivalent(*x, sub);
          if (!w || !check_witness(*x, sub, *w).ok) {
            ++failures;
            notes += " no-witness#" + std::to_string(drawn);
          } else {
            record("skeleton #" + std::to_string(drawn), *x, sub, *w);
          }
        } else {
          ++without;
          auto const& ob = std::get<1>(s);
          bool const  genuine = !brute_has_skeleton(*x) && !ob.orbit.empty();
          if (!genuine) {
            ++failures;
            notes += " false-obstruction#" + std::to_string(drawn);
          }
        }
      }
    }
    // obstructions are rare under random draws, so also take every one up to five arrows
    std::size_t exhaustive = 0;
    Budget      wider;
    wider.max_enumeration_arrows = 5;
    for (auto const& x : enumerate_instances(Group::cyclic(2), 5, wider)) {
      auto const s = skeleton(x);
      if (s.index() == 1) {
        ++exhaustive;
        if (brute_has_skeleton(x) || std::get<1>(s).orbit.empty()) {
          ++failures;
          notes += " false-obstruction(enumerated)";
        }
      } else if (!brute_has_skeleton(x)) {
        ++failures;
        notes += " missed-obstruction(enumerated)";
      }
    }
    std::ostringstream s;
    s << drawn << " random instances, " << with << " with skeleton, " << without
      << " obstructed; " << exhaustive << " obstructed among all C2 instances up to 5 arrows; "
      << failures << " failures" << notes;
    return {failures == 0 && drawn == 100, s.str()};
  }

  //! 5. Witnesses for X ~ Y and A ~ B combine under union and product.
  Outcome monoidal_compatibility() {
    std::mt19937_64 rng(13);
    auto const      c2 = Group::cyclic(2);
    auto equivalent_partner = [&](CatGSet const& x) {
      auto const s    = skeleton(x);
      auto const base = s.index() == 0 ? std::get<0>(s).part.sub : x;
      std::vector<Index> o(base.num_objects()), a(base.num_arrows());
      std::iota(o.begin(), o.end(), 0);
      std::iota(a.begin(), a.end(), 0);
      std::shuffle(o.begin(), o.end(), rng);
      std::shuffle(a.begin(), a.end(), rng);
      auto y = relabel(base, o, a);
      if (rng() % 2) {
        return std::pair{disjoint_union(x, walking_iso(c2)), disjoint_union(y, unit_object(c2))};
      }
      return std::pair{x, y};
    };
    std::size_t quads = 0, failures = 0;
    while (quads < 50) {
      auto const x = random_catset(c2, 4, rng);
      auto const a = random_catset(c2, 4, rng);
      if (!x || !a) {
        continue;
      }
      ++quads;
      auto const [x1, y1] = equivalent_partner(*x);
      auto const [a1, b1] = equivalent_partner(*a);
      auto const xy       = weak_equivalent(x1, y1);
      auto const ab       = weak_equivalent(a1, b1);
      if (!xy || !ab) {
        ++failures;
        continue;
      }
      auto const u = union_witness(*xy, *ab);
      auto const p = product_witness(*xy, *ab);
      auto const xa_u = disjoint_union(x1, a1), yb_u = disjoint_union(y1, b1);
      auto const xa_p = product(x1, a1), yb_p = product(y1, b1);
      bool const ok   = check_witness(xa_u, yb_u, u).ok && check_witness(xa_p, yb_p, p).ok;
      failures += !ok;
      if (ok) {
        std::string const tag = " #" + std::to_string(quads);
        record("union" + tag, xa_u, yb_u, u);
        record("product" + tag, xa_p, yb_p, p);
      }
    }
    std::ostringstream s;
    s << quads << " quadruples, " << failures << " failures";
    return {failures == 0, s.str()};
  }

  template <typename A>
  std::size_t equivariance_violations(CatSet<A> const& x) {
    std::size_t bad = 0;
    auto const& ar  = x.arrows();
    for (Index p = 0; p < x.num_arrows(); ++p) {
      for (Index q = 0; q < x.num_arrows(); ++q) {
        if (!x.composable(p, q)) {
          continue;
        }
        Index const pq = x.comp(p, q);
        for (Index g = 0; g < x.acting().num_elements(); ++g) {
          Index const l = ar.act(pq, g), pg = ar.act(p, g), qg = ar.act(q, g);
          if (l == kNone && pg == kNone && qg == kNone) {
            continue;
          }
          bad += l == kNone || pg == kNone || qg == kNone || !x.composable(pg, qg)
                 || x.comp(pg, qg) != l;
        }
      }
    }
    return bad;
  }

  //! 6. (p q) g = (p g)(q g) on every instance of the corpus.
  Outcome equivariance(std::vector<io::AnyCatSet> const& all, std::size_t rejected) {
    std::size_t bad = 0;
    for (auto const& x : all) {
      bad += std::visit([](auto const& c) { return equivariance_violations(c); }, x);
    }
    std::ostringstream s;
    s << all.size() << " instances (" << rejected << " invalid files skipped), " << bad
      << " violations";
    return {bad == 0, s.str()};
  }

  // Pairs (f, g) with f g defined: |X1||G| over a group.
  template <typename A>
  std::size_t defined_pairs(CatSet<A> const& x) {
    std::size_t n = 0;
    for (Index f = 0; f < x.num_arrows(); ++f) {
      for (Index g = 0; g < x.acting().num_elements(); ++g) {
        n += x.arrows().act(f, g) != kNone;
      }
    }
    return n;
  }

  //! 7. Translation double categories satisfy the axioms, with one square
  //! per defined pair (f, g).
  Outcome double_laws(std::vector<io::AnyCatSet> const& all) {
    std::size_t groups = 0, groupoids = 0, bad = 0;
    for (auto const& x : all) {
      std::visit(
          [&](auto const& c) {
            if (c.num_arrows() * c.acting().num_elements() > 64) {
              return;
            }
            constexpr bool over_group = std::is_same_v<std::decay_t<decltype(c)>, CatGSet>;
            (over_group ? groups : groupoids) += 1;
            auto const d = translation_double(c);
            bad += !verify_double_axioms(d).empty() || d.squares.size() != defined_pairs(c);
          },
          x);
    }
    std::ostringstream s;
    s << groups << " group and " << groupoids << " groupoid instances checked, " << bad
      << " failures";
    return {bad == 0 && groups > 0, s.str()};
  }

  bool brute_gsets_isomorphic(GSet const& x, GSet const& y) {
    if (x.size() != y.size()) {
      return false;
    }
    std::vector<Index> m(x.size());
    std::iota(m.begin(), m.end(), 0);
    do {
      if (brute_equivariant(x, y, m)) {
        return true;
      }
    } while (std::next_permutation(m.begin(), m.end()));
    return false;
  }

  bool connected_nonempty(PlainCategory const& c) {
    auto const         n = c.num_objects();
    std::vector<Index> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    std::function<Index(Index)> find = [&](Index v) {
      return parent[v] == v ? v : parent[v] = find(parent[v]);
    };
    for (Index f = 0; f < c.num_arrows(); ++f) {
      parent[find(c.src(f))] = find(c.tgt(f));
    }
    std::size_t roots = 0;
    for (Index v = 0; v < n; ++v) {
      roots += find(v) == v;
    }
    return roots == 1;
  }

  //! 8. C x X ~ D x Y exactly when C ~ D and X = Y.
  Outcome product_criterion() {
    auto const                 cats = enumerate_instances(Group::trivial(), 3);
    std::vector<GSet> const    sets{c2_set(0, 0), c2_set(1, 0), c2_set(2, 0), c2_set(0, 1)};
    std::size_t const          nc = cats.size(), ns = sets.size();
    std::vector<std::uint8_t>  cat_eq(nc * nc), set_iso(ns * ns);
    for (std::size_t i = 0; i < nc; ++i) {
      for (std::size_t j = 0; j < nc; ++j) {
        cat_eq[i * nc + j] = brute_weakly_equivalent(cats[i], cats[j]);
      }
    }
    for (std::size_t i = 0; i < ns; ++i) {
      for (std::size_t j = 0; j < ns; ++j) {
        set_iso[i * ns + j] = brute_gsets_isomorphic(sets[i], sets[j]);
      }
    }
    std::vector<CatGSet> prods;
    for (auto const& c : cats) {
      for (auto const& x : sets) {
        prods.push_back(category_times_gset(c, x));
      }
    }
    std::size_t pairs = 0, disagree = 0, core_pairs = 0, core_disagree = 0;
    std::map<std::string, std::size_t> kinds;
    for (std::size_t p = 0; p < prods.size(); ++p) {
      for (std::size_t q = p; q < prods.size(); ++q) {
        std::size_t const ci = p / ns, xi = p % ns, cj = q / ns, xj = q % ns;
        bool const        expected = cat_eq[ci * nc + cj] && set_iso[xi * ns + xj];
        auto const        w        = weak_equivalent(prods[p], prods[q]);
        ++pairs;
        if (w) {
          record("C x X pair " + std::to_string(p) + "/" + std::to_string(q), prods[p], prods[q],
                 *w);
        }
        bool const core = connected_nonempty(cats[ci]) && connected_nonempty(cats[cj])
                          && sets[xi].size() > 0 && sets[xj].size() > 0;
        core_pairs += core;
        if (w.has_value() != expected) {
          ++disagree;
          core_disagree += core;
          std::string kind = sets[xi].size() == 0 || sets[xj].size() == 0 ? "empty set"
                             : !connected_nonempty(cats[ci]) || !connected_nonempty(cats[cj])
                                 ? "disconnected or empty category"
                                 : "connected, nonempty";
          ++kinds[kind + (w ? " (equivalent, criterion says no)" : " (inequivalent, criterion says yes)")];
        }
      }
    }
    std::ostringstream s;
    s << cats.size() << " categories x " << sets.size() << " C2-sets, " << pairs << " pairs, "
      << disagree << " disagreements";
    for (auto const& [k, n] : kinds) {
      s << "; " << n << " " << k;
    }
    s << "; connected nonempty pairs: " << core_disagree << "/" << core_pairs << " disagree";
    return {disagree == 0, s.str()};
  }

  //! 9. Additive cancellation at bound 2.
  Outcome cancellation() {
    std::size_t triples = 0;
    std::string found;
    for (auto const& g : {Group::trivial(), Group::cyclic(2)}) {
      auto const r = test_cancellation(g, 2);
      triples += r.triples;
      for (auto const& c : r.counterexamples) {
        std::cout << "  counterexample (order " << g.order() << "): " << c << "\n";
        found += " " + c;
      }
    }
    std::ostringstream s;
    s << triples << " triples, " << (found.empty() ? "no counterexamples" : "counterexamples:" + found);
    return {found.empty(), s.str()};
  }

  //! 10. Classes over pair(2) + C2 correspond to pairs of component classes.
  Outcome decomposition() {
    auto const start = Clock::now();
    auto const r     = decompose_ring(io::groupoid_from_spec("pair:2+C2"), 2);
    double const t   = seconds_since(start);
    std::ostringstream s;
    s << r.groupoid_classes << " classes vs " << r.tuples << " component tuples, injective "
      << r.injective << ", surjective " << r.surjective << ", " << r.sums_checked << " sums and "
      << r.products_checked << " products checked, " << r.failures.size() << " failures, " << t
      << " s";
    for (auto const& f : r.failures) {
      s << "; " << f;
    }
    return {r.ok() && r.sums_checked > 0 && r.products_checked > 0 && t < 600, s.str()};
  }

  //! 11. Reduction along pair(2) and back gives validated witnesses.
  Outcome transitive_round_trip() {
    auto const      pair = Groupoid::pair(2);
    auto const      r    = transitive_reduction(pair, 0);
    std::mt19937_64 rng(19);
    std::size_t     sampled = 0, failures = 0, attempts = 0;
    while (sampled < 20 && attempts < 100000) {
      ++attempts;
      auto const x = random_catset(pair, 6, rng);
      if (!x) {
        continue;
      }
      ++sampled;
      std::string const tag = " #" + std::to_string(sampled);
      auto const        up  = witness_from_isomorphism(expand_reduce(r, *x));
      auto const        ex  = expand(r, reduce(r, *x));
      bool              ok  = check_witness(ex, *x, up).ok;
      if (ok) {
        record("expand-reduce" + tag, ex, *x, up);
      }
      auto const z    = reduce(r, *x);
      auto const down = witness_from_isomorphism(reduce_expand(r, z));
      auto const rz   = reduce(r, expand(r, z));
      bool const ok2  = check_witness(rz, z, down).ok;
      if (ok2) {
        record("reduce-expand" + tag, rz, z, down);
      }
      failures += !ok || !ok2;
    }
    std::ostringstream s;
    s << sampled << " instances, " << failures << " failures";
    return {sampled == 20 && failures == 0, s.str()};
  }

  //! 12. Every positive witness above passes the standalone checker.
  Outcome witness_integrity() {
    auto const dir = std::filesystem::temp_directory_path() / "burncat_acceptance";
    std::filesystem::create_directories(dir);
    std::size_t failures = 0;
    std::string first;
    for (std::size_t i = 0; i < positives.size(); ++i) {
      auto const& p = positives[i];
      auto const  x = dir / "x.json", y = dir / "y.json", w = dir / "w.json";
      io::save_json(x, p.x);
      io::save_json(y, p.y);
      io::save_json(w, p.witness);
      int const code = exit_code(std::string(BURNCAT_CLI) + " check-witness " + quoted(x) + " "
                                 + quoted(y) + " " + quoted(w));
      if (code != 0) {
        ++failures;
        if (first.empty()) {
          first = " first: " + p.label;
        }
      }
    }
    std::filesystem::remove_all(dir);
    std::ostringstream s;
    s << positives.size() << " witnesses, " << failures << " rejected" << first;
    return {failures == 0 && !positives.empty(), s.str()};
  }

}  // namespace

int main() {
  std::size_t rejected = 0;
  auto const  all      = corpus(rejected);

  std::vector<std::pair<char const*, std::function<Outcome()>>> const criteria{
      {"seven examples pairwise inequivalent", seven_examples_separate},
      {"classical-vs-categorified gap", classical_gap},
      {"injectivity on C2-sets", injectivity},
      {"skeleton coherence", skeleton_coherence},
      {"monoidal compatibility", monoidal_compatibility},
      {"equivariance of composition", [&] { return equivariance(all, rejected); }},
      {"double category laws", [&] { return double_laws(all); }},
      {"C x X criterion", product_criterion},
      {"cancellation", cancellation},
      {"groupoid decomposition", decomposition},
      {"transitive reduction round trip", transitive_round_trip},
      {"witness integrity", witness_integrity},
  };

  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    auto const start = Clock::now();
    Outcome    o;
    try {
      o = criteria[i].second();
    } catch (std::exception const& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    failed += !o.pass;
    std::cout << (o.pass ? "PASS" : "FAIL") << " " << i + 1 << " " << criteria[i].first << ": "
              << o.detail << " [" << seconds_since(start) << " s]" << std::endl;
  }
  std::cout << criteria.size() - failed << "/" << criteria.size() << " criteria pass\n";
  return failed == 0 ? 0 : 1;
}
