#ifndef BURNCAT_TESTS_SUPPORT_HPP_
#define BURNCAT_TESTS_SUPPORT_HPP_

// Fixtures and brute-force oracles shared by the unit tests.  The oracles
// only read the raw tables; none of them calls the code under test.

#include <algorithm>
#include <filesystem>
#include <functional>
#include <numeric>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "burncat/burnside.hpp"
#include "burncat/io.hpp"

namespace burncat::test {

  inline std::filesystem::path data_path(std::string const& name) {
    return std::filesystem::path(BURNCAT_TEST_DATA) / name;
  }

  inline io::AnyCatSet load_data(std::string const& name) {
    auto const p = data_path(name);
    return io::catset_from_json(io::load_json(p), io::Context{p.parent_path()});
  }

  inline CatGSet load_gcat(std::string const& name) {
    return std::get<CatGSet>(load_data(name));
  }

  //! Trivial-group category on n objects whose non-identity arrows are
  //! \p arrows and never compose with each other.
  inline CatGSet trivial_category(std::size_t n, std::vector<std::pair<Index, Index>> const& arrows) {
    auto const         g = Group::trivial();
    std::vector<Index> src(n), tgt(n), ident(n);
    std::iota(src.begin(), src.end(), 0);
    std::iota(tgt.begin(), tgt.end(), 0);
    std::iota(ident.begin(), ident.end(), 0);
    for (auto const& [s, t] : arrows) {
      src.push_back(s);
      tgt.push_back(t);
    }
    std::vector<std::array<Index, 3>> comp;
    for (Index p = 0; p < src.size(); ++p) {
      for (Index q = 0; q < src.size(); ++q) {
        if (src[p] != tgt[q]) {
          continue;
        }
        if (p < n) {
          comp.push_back({p, q, q});
        } else if (q < n) {
          comp.push_back({p, q, p});
        }
      }
    }
    return CatGSet::make(trivial_gset(g, n), trivial_gset(g, src.size()), src, tgt, ident, comp);
  }

  inline CatGSet point() {
    return trivial_category(1, {});
  }
  inline CatGSet walking_arrow() {
    return trivial_category(2, {{0, 1}});
  }
  inline CatGSet parallel_pair() {
    return trivial_category(2, {{0, 1}, {0, 1}});
  }
  inline CatGSet span() {
    return trivial_category(3, {{0, 1}, {0, 2}});
  }

  //! Objects a=0, b=1; arrows id_a, id_b, f: a -> b, f': b -> a.
  inline CatGSet walking_iso(Group const& g = Group::trivial(), bool swap = false) {
    std::vector<std::array<Index, 3>> comp{{0, 0, 0}, {1, 1, 1}, {2, 0, 2}, {1, 2, 2},
                                           {3, 1, 3}, {0, 3, 3}, {3, 2, 0}, {2, 3, 1}};
    auto rows = [&](std::vector<Index> const& moved) {
      std::vector<std::vector<Index>> out;
      for (Index x = 0; x < moved.size(); ++x) {
        std::vector<Index> row;
        for (Index e = 0; e < g.order(); ++e) {
          row.push_back(swap && e != g.identity() ? moved[x] : x);
        }
        out.push_back(row);
      }
      return out;
    };
    return CatGSet::make(make_gset(g, rows({1, 0})), make_gset(g, rows({1, 0, 3, 2})),
                         {0, 1, 0, 1}, {0, 1, 1, 0}, {0, 1}, comp);
  }

  //! C2 swaps the two objects of the walking isomorphism, and f with f'.
  inline CatGSet c2_no_skeleton() {
    return walking_iso(Group::cyclic(2), true);
  }

  inline std::vector<CatGSet> seven_examples() {
    return {point(),
            walking_arrow(),
            trivial_category(3, {{0, 1}}),
            span(),
            parallel_pair(),
            trivial_category(3, {{0, 1}, {0, 1}}),
            trivial_category(3, {{0, 1}, {0, 1}, {0, 2}})};
  }

  inline GSet regular_c2() {
    return make_gset(Group::cyclic(2), {{0, 1}, {1, 0}});
  }

  //! The code of the Error thrown by f, if any.
  inline std::optional<Errc> error_of(std::function<void()> const& f) {
    try {
      f();
    } catch (Error const& e) {
      return e.code();
    }
    return std::nullopt;
  }

  // ---- oracles on raw tables ------------------------------------------------

  //! Every arrow h with h after f = id_src and f after h = id_tgt.
  template <typename A>
  std::optional<Index> brute_inverse(CatSet<A> const& x, Index f) {
    for (Index h = 0; h < x.num_arrows(); ++h) {
      if (x.src(h) == x.tgt(f) && x.tgt(h) == x.src(f)
          && x.comp(h, f) == x.ident(x.src(f)) && x.comp(f, h) == x.ident(x.tgt(f))) {
        return h;
      }
    }
    return std::nullopt;
  }

  template <typename A>
  bool brute_equivariant(ActionSet<A> const& x, ActionSet<A> const& y, std::vector<Index> const& m) {
    for (Index e = 0; e < x.size(); ++e) {
      for (Index g = 0; g < x.acting().num_elements(); ++g) {
        Index const xg = x.act(e, g);
        if (xg == kNone) {
          continue;
        }
        if (y.act(m[e], g) != m[xg]) {
          return false;
        }
      }
      if (y.color(m[e]) != x.color(e)) {
        return false;
      }
    }
    return true;
  }

  //! Brute-force check that (f0, f1) is an equivariant functor x -> y.
  template <typename A>
  bool brute_is_functor(CatSet<A> const&          x,
                        CatSet<A> const&          y,
                        std::vector<Index> const& f0,
                        std::vector<Index> const& f1) {
    for (Index f = 0; f < x.num_arrows(); ++f) {
      if (y.src(f1[f]) != f0[x.src(f)] || y.tgt(f1[f]) != f0[x.tgt(f)]) {
        return false;
      }
    }
    for (Index o = 0; o < x.num_objects(); ++o) {
      if (f1[x.ident(o)] != y.ident(f0[o])) {
        return false;
      }
    }
    for (Index p = 0; p < x.num_arrows(); ++p) {
      for (Index q = 0; q < x.num_arrows(); ++q) {
        if (x.src(p) == x.tgt(q) && f1[x.comp(p, q)] != y.comp(f1[p], f1[q])) {
          return false;
        }
      }
    }
    return brute_equivariant(x.objects(), y.objects(), f0)
           && brute_equivariant(x.arrows(), y.arrows(), f1);
  }

  //! All equivariant functors x -> y as (f0, f1).
  template <typename A>
  std::vector<std::pair<std::vector<Index>, std::vector<Index>>> brute_functors(CatSet<A> const& x,
                                                                                 CatSet<A> const& y) {
    std::vector<std::pair<std::vector<Index>, std::vector<Index>>> out;
    std::vector<Index> f0(x.num_objects()), f1(x.num_arrows());
    std::function<void(Index)> arrows = [&](Index f) {
      if (f == x.num_arrows()) {
        if (brute_is_functor(x, y, f0, f1)) {
          out.emplace_back(f0, f1);
        }
        return;
      }
      for (Index h = 0; h < y.num_arrows(); ++h) {
        if (y.src(h) == f0[x.src(f)] && y.tgt(h) == f0[x.tgt(f)]) {
          f1[f] = h;
          arrows(f + 1);
        }
      }
    };
    std::function<void(Index)> objects = [&](Index o) {
      if (o == x.num_objects()) {
        if (brute_equivariant(x.objects(), y.objects(), f0)) {
          arrows(0);
        }
        return;
      }
      for (Index b = 0; b < y.num_objects(); ++b) {
        f0[o] = b;
        objects(o + 1);
      }
    };
    objects(0);
    return out;
  }

  //! An invertible equivariant natural transformation (h0, h1) => Id on x.
  template <typename A>
  bool brute_iso_to_identity(CatSet<A> const&          x,
                             std::vector<Index> const& h0,
                             std::vector<Index> const& h1) {
    std::vector<Index>         at(x.num_objects());
    std::function<bool(Index)> pick = [&](Index o) -> bool {
      if (o == x.num_objects()) {
        for (Index f = 0; f < x.num_arrows(); ++f) {
          if (x.comp(at[x.tgt(f)], h1[f]) != x.comp(f, at[x.src(f)])) {
            return false;
          }
        }
        return brute_equivariant(x.objects(), x.arrows(), at);
      }
      for (Index c = 0; c < x.num_arrows(); ++c) {
        if (x.src(c) == h0[o] && x.tgt(c) == o && brute_inverse(x, c)) {
          at[o] = c;
          if (pick(o + 1)) {
            return true;
          }
        }
      }
      return false;
    };
    return pick(0);
  }

  template <typename A>
  std::vector<Index> brute_compose(std::vector<Index> const& g, std::vector<Index> const& f) {
    std::vector<Index> out(f.size());
    for (std::size_t i = 0; i < f.size(); ++i) {
      out[i] = g[f[i]];
    }
    return out;
  }

  //! Weak equivalence by exhausting functor pairs and transformations.
  template <typename A>
  bool brute_weakly_equivalent(CatSet<A> const& x, CatSet<A> const& y) {
    auto const fs = brute_functors(x, y);
    auto const gs = brute_functors(y, x);
    for (auto const& [f0, f1] : fs) {
      for (auto const& [g0, g1] : gs) {
        if (brute_iso_to_identity(x, brute_compose<A>(g0, f0), brute_compose<A>(g1, f1))
            && brute_iso_to_identity(y, brute_compose<A>(f0, g0), brute_compose<A>(f1, g1))) {
          return true;
        }
      }
    }
    return false;
  }

  //! Associativity of the composition table over all composable triples.
  template <typename A>
  bool brute_associative(CatSet<A> const& x) {
    auto const n = x.num_arrows();
    for (Index p = 0; p < n; ++p) {
      for (Index q = 0; q < n; ++q) {
        for (Index r = 0; r < n; ++r) {
          if (x.src(p) == x.tgt(q) && x.src(q) == x.tgt(r)
              && x.comp(x.comp(p, q), r) != x.comp(p, x.comp(q, r))) {
            return false;
          }
        }
      }
    }
    return true;
  }

}  // namespace burncat::test

#endif  // BURNCAT_TESTS_SUPPORT_HPP_
