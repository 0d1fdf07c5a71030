#include <catch_amalgamated.hpp>

#include "support.hpp"

using namespace burncat;
using namespace burncat::test;

namespace {

  Index square_index(DoubleCategory const& d, Index f, Index g) {
    for (Index k = 0; k < d.squares.size(); ++k) {
      if (d.squares[k] == std::array<Index, 2>{f, g}) {
        return k;
      }
    }
    FAIL("no square (" << f << ", " << g << ")");
    return kNone;
  }

}  // namespace

TEST_CASE("counts") {
  auto const p = translation_double(point());
  CHECK(p.num_objects == 1);
  CHECK(p.h.size() == 1);
  CHECK(p.num_vertical == 1);
  CHECK(p.squares.size() == 1);

  auto const r = translation_double(include(regular_c2()));
  CHECK(r.num_objects == 2);
  CHECK(r.h.size() == 4);
  CHECK(r.num_vertical == 2);
  CHECK(r.squares.size() == 4);
}

TEST_CASE("structure functors of C x X") {
  auto const c = walking_arrow();
  auto const x = regular_c2();
  auto const n = static_cast<Index>(x.size());
  auto const d = translation_double(category_times_gset(c, x));
  for (Index k = 0; k < d.squares.size(); ++k) {
    auto const [f, g]   = d.squares[k];
    Index const carrow  = f / n;
    Index const point   = f % n;
    std::array<Index, 2> const target{c.tgt(carrow) * n + point, g};
    std::array<Index, 2> const source{c.src(carrow) * n + point, g};
    CHECK(d.h[d.t1[k]] == target);
    CHECK(d.h[d.s1[k]] == source);
  }
  for (Index a = 0; a < d.num_vertical; ++a) {
    CHECK(d.t0[a] == c.tgt(a / n) * n + a % n);
    CHECK(d.s0[a] == c.src(a / n) * n + a % n);
  }
  for (Index k = 0; k < d.h.size(); ++k) {
    auto const [o, g] = d.h[k];
    CHECK(d.squares[d.i1[k]] == std::array<Index, 2>{c.ident(o / n) * n + o % n, g});
  }
}

TEST_CASE("square vertices") {
  auto const w = walking_arrow();
  auto const d = translation_double(w);
  auto const e = Group::trivial().identity();
  CHECK(square_vertices(d, square_index(d, w.ident(0), e)) == std::array<Index, 4>{0, 0, 0, 0});
  CHECK(square_vertices(d, square_index(d, 2, e)) == std::array<Index, 4>{0, 0, 1, 1});

  auto const r  = include(regular_c2());
  auto const dr = translation_double(r);
  for (Index a = 0; a < 2; ++a) {
    Index const ag = r.objects().act(a, 1);
    CHECK(square_vertices(dr, square_index(dr, r.ident(a), 1))
          == std::array<Index, 4>{a, ag, a, ag});
  }
  CHECK(error_of([&] { square_vertices(dr, 99); }) == Errc::OutOfRange);
}

TEST_CASE("axioms hold and mutations are caught") {
  std::mt19937_64 rng(17);
  int             checked = 0;
  while (checked < 40) {
    auto const x = random_catset(Group::cyclic(2), 6, rng);
    if (!x) {
      continue;
    }
    auto const d = translation_double(*x);
    CHECK(verify_double_axioms(d).empty());
    CHECK(d.squares.size() == x->num_arrows() * 2);
    ++checked;
  }
  for (auto const& x : seven_examples()) {
    CHECK(verify_double_axioms(translation_double(x)).empty());
  }

  auto d = translation_double(walking_iso());
  REQUIRE_FALSE(d.m1.empty());
  for (auto& [a, b, c] : d.m1) {
    if (a != b) {
      c = c == a ? b : a;
      break;
    }
  }
  CHECK_FALSE(verify_double_axioms(d).empty());

  CHECK(verify_double_axioms(translation_double(include(trivial_gset(Group::cyclic(2), 0)))).empty());
}
