#include <catch_amalgamated.hpp>

#include <map>
#include <set>

#include "support.hpp"

using namespace burncat;
using namespace burncat::test;

namespace {

  // S3 as permutations of {0,1,2}, composed right to left.
  std::vector<std::vector<Index>> s3_table() {
    std::vector<std::array<int, 3>> perms;
    std::array<int, 3>              p{0, 1, 2};
    do {
      perms.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    std::vector<std::vector<Index>> t(6, std::vector<Index>(6));
    for (Index i = 0; i < 6; ++i) {
      for (Index j = 0; j < 6; ++j) {
        std::array<int, 3> c{};
        for (int k = 0; k < 3; ++k) {
          c[k] = perms[i][perms[j][k]];
        }
        t[i][j] = static_cast<Index>(std::find(perms.begin(), perms.end(), c) - perms.begin());
      }
    }
    return t;
  }

}  // namespace

TEST_CASE("groups from tables") {
  auto const c2 = Group::from_table({{0, 1}, {1, 0}});
  CHECK(c2.order() == 2);
  CHECK(c2.mul(1, 1) == c2.identity());

  // element 1 has no inverse: scan every candidate
  std::vector<std::vector<Index>> bad{{0, 1}, {1, 1}};
  bool                            has_inverse = false;
  for (Index h = 0; h < 2; ++h) {
    has_inverse = has_inverse || (bad[1][h] == 0 && bad[h][1] == 0);
  }
  CHECK_FALSE(has_inverse);
  CHECK(error_of([&] { Group::from_table(bad); }) == Errc::NoInverse);

  auto const t = s3_table();
  std::size_t checked = 0;
  for (Index a = 0; a < 6; ++a) {
    for (Index b = 0; b < 6; ++b) {
      for (Index c = 0; c < 6; ++c) {
        CHECK(t[t[a][b]][c] == t[a][t[b][c]]);
        ++checked;
      }
    }
  }
  CHECK(checked == 216);
  auto const s3 = Group::from_table(t);
  CHECK(s3.order() == 6);
  CHECK(Group::symmetric(3).order() == 6);
}

TEST_CASE("group-sets") {
  auto const c2 = Group::cyclic(2);
  CHECK(trivial_gset(c2, 2).size() == 2);
  CHECK(make_gset(c2, {{0, 0}, {1, 1}}).size() == 2);
  CHECK(regular_c2().act(0, 1) == 1);

  // identity of C2 moves point 0
  CHECK(error_of([&] { make_gset(c2, {{1, 0}, {0, 1}}); }) == Errc::IdentityNotFixed);
}

TEST_CASE("group-set isomorphism") {
  auto const x = regular_c2();
  auto const same = isomorphic(x, x);
  REQUIRE(same);
  CHECK(*same == std::vector<Index>{0, 1});

  // neither bijection between the regular and the trivial 2-point set is
  // equivariant
  auto const triv = trivial_gset(Group::cyclic(2), 2);
  for (std::vector<Index> m : {std::vector<Index>{0, 1}, std::vector<Index>{1, 0}}) {
    CHECK_FALSE(brute_equivariant(x, triv, m));
  }
  CHECK_FALSE(isomorphic(x, triv));

  auto const y = relabel(x, {1, 0});
  auto const m = isomorphic(x, y);
  REQUIRE(m);
  CHECK(brute_equivariant(x, y, *m));
}

TEST_CASE("orbits and stabilizers") {
  auto const triv3 = trivial_gset(Group::cyclic(2), 3);
  CHECK(orbits(triv3).size() == 3);
  CHECK(orbits(regular_c2()) == std::vector<std::vector<Index>>{{0, 1}});

  auto const u = disjoint_union(regular_c2(), trivial_gset(Group::cyclic(2), 1));
  // union-find over the action table
  std::vector<Index>            parent{0, 1, 2};
  std::function<Index(Index)>   find = [&](Index a) { return parent[a] == a ? a : find(parent[a]); };
  for (Index e = 0; e < u.size(); ++e) {
    for (Index g = 0; g < 2; ++g) {
      parent[find(u.act(e, g))] = find(e);
    }
  }
  std::map<Index, std::size_t> sizes;
  for (Index e = 0; e < u.size(); ++e) {
    ++sizes[find(e)];
  }
  std::multiset<std::size_t> expected, got;
  for (auto const& [root, n] : sizes) {
    expected.insert(n);
  }
  for (auto const& o : orbits(u)) {
    got.insert(o.size());
  }
  CHECK(got == expected);
  CHECK(got == std::multiset<std::size_t>{1, 2});

  CHECK(stabilizer(triv3, 0).size() == 2);
  CHECK(stabilizer(regular_c2(), 0) == std::vector<Index>{0});

  auto const k4 = Group::direct_product(Group::cyclic(2), Group::cyclic(2));
  std::vector<std::vector<Index>> rows(2, std::vector<Index>(4));
  // act through the factor that the index g / 2 records
  for (Index x = 0; x < 2; ++x) {
    for (Index g = 0; g < 4; ++g) {
      rows[x][g] = g / 2 == 1 ? 1 - x : x;
    }
  }
  auto const x = make_gset(k4, rows);
  for (Index p = 0; p < 2; ++p) {
    std::size_t fixing = 0;
    for (Index g = 0; g < 4; ++g) {
      fixing += x.act(p, g) == p;
    }
    CHECK(fixing == 2);
    CHECK(stabilizer(x, p).size() == 2);
  }
}

TEST_CASE("homomorphisms") {
  auto const c2 = Group::cyclic(2);
  CHECK(GroupHom::make(c2, c2, {0, 1})(1) == 1);
  CHECK(GroupHom::make(c2, c2, {0, 0})(1) == 0);
  CHECK(error_of([&] { GroupHom::make(c2, c2, {1, 0}); }) == Errc::NotHomomorphism);
}
