#include "burncat/group.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

namespace burncat {

  Group Group::from_table(std::vector<std::vector<Index>> const& cayley) {
    std::size_t const n = cayley.size();
    if (n == 0) {
      fail(Errc::NoIdentity, "the empty table has no identity");
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (cayley[i].size() != n) {
        fail(Errc::NotSquare,
             "row " + std::to_string(i) + " has " + std::to_string(cayley[i].size())
                 + " entries, expected " + std::to_string(n));
      }
    }
    auto d   = std::make_shared<Data>();
    d->order = n;
    d->mul.resize(n * n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        if (cayley[i][j] >= n) {
          fail(Errc::OutOfRange,
               "entry (" + std::to_string(i) + ", " + std::to_string(j) + ") = "
                   + std::to_string(cayley[i][j]));
        }
        d->mul[i * n + j] = cayley[i][j];
      }
    }
    auto at = [&](Index a, Index b) { return d->mul[a * n + b]; };

    d->identity = kNone;
    for (Index e = 0; e < n && d->identity == kNone; ++e) {
      bool ok = true;
      for (Index g = 0; g < n && ok; ++g) {
        ok = at(e, g) == g && at(g, e) == g;
      }
      if (ok) {
        d->identity = e;
      }
    }
    if (d->identity == kNone) {
      fail(Errc::NoIdentity, "no two-sided identity in a table of order "
                                 + std::to_string(n));
    }
    for (Index a = 0; a < n; ++a) {
      for (Index b = 0; b < n; ++b) {
        for (Index c = 0; c < n; ++c) {
          if (at(at(a, b), c) != at(a, at(b, c))) {
            fail(Errc::NotAssociative,
                 "(" + std::to_string(a) + " " + std::to_string(b) + ") "
                     + std::to_string(c) + " differs from " + std::to_string(a)
                     + " (" + std::to_string(b) + " " + std::to_string(c) + ")");
          }
        }
      }
    }
    d->inv.assign(n, kNone);
    for (Index a = 0; a < n; ++a) {
      for (Index b = 0; b < n; ++b) {
        if (at(a, b) == d->identity && at(b, a) == d->identity) {
          d->inv[a] = b;
          break;
        }
      }
      if (d->inv[a] == kNone) {
        fail(Errc::NoInverse, "element " + std::to_string(a));
      }
    }
    return Group(std::move(d));
  }

  Group Group::trivial() {
    return cyclic(1);
  }

  Group Group::cyclic(std::size_t n) {
    std::vector<std::vector<Index>> t(n, std::vector<Index>(n));
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        t[i][j] = static_cast<Index>((i + j) % n);
      }
    }
    return from_table(t);
  }

  Group Group::symmetric(std::size_t n) {
    std::vector<std::vector<Index>> perms;
    std::vector<Index>              p(n);
    std::iota(p.begin(), p.end(), 0);
    do {
      perms.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    // perms is sorted, so lookup is a binary search.  Elements act on the
    // right: i.(gh) = (i.g).h.
    auto index_of = [&](std::vector<Index> const& q) {
      return static_cast<Index>(
          std::lower_bound(perms.begin(), perms.end(), q) - perms.begin());
    };
    std::vector<std::vector<Index>> t(perms.size(),
                                      std::vector<Index>(perms.size()));
    std::vector<Index> q(n);
    for (std::size_t a = 0; a < perms.size(); ++a) {
      for (std::size_t b = 0; b < perms.size(); ++b) {
        for (std::size_t i = 0; i < n; ++i) {
          q[i] = perms[b][perms[a][i]];
        }
        t[a][b] = index_of(q);
      }
    }
    return from_table(t);
  }

  Group Group::direct_product(Group const& a, Group const& b) {
    std::size_t const               na = a.order(), nb = b.order();
    std::vector<std::vector<Index>> t(na * nb, std::vector<Index>(na * nb));
    for (Index x = 0; x < na * nb; ++x) {
      for (Index y = 0; y < na * nb; ++y) {
        t[x][y] = static_cast<Index>(a.mul(x / nb, y / nb) * nb
                                     + b.mul(x % nb, y % nb));
      }
    }
    return from_table(t);
  }

  std::vector<std::vector<Index>> Group::table() const {
    std::vector<std::vector<Index>> t(order(), std::vector<Index>(order()));
    for (Index g = 0; g < order(); ++g) {
      for (Index h = 0; h < order(); ++h) {
        t[g][h] = mul(g, h);
      }
    }
    return t;
  }

  bool operator==(Group const& a, Group const& b) noexcept {
    return a._d == b._d || a._d->mul == b._d->mul;
  }

  GroupHom GroupHom::make(Group source, Group target, std::vector<Index> map) {
    if (map.size() != source.order()) {
      fail(Errc::OutOfRange, "homomorphism table has " + std::to_string(map.size())
                                 + " entries, source order is "
                                 + std::to_string(source.order()));
    }
    for (Index h : map) {
      if (h >= target.order()) {
        fail(Errc::OutOfRange, "image " + std::to_string(h));
      }
    }
    for (Index g = 0; g < source.order(); ++g) {
      for (Index h = 0; h < source.order(); ++h) {
        if (map[source.mul(g, h)] != target.mul(map[g], map[h])) {
          fail(Errc::NotHomomorphism,
               "f(" + std::to_string(g) + "*" + std::to_string(h)
                   + ") != f(" + std::to_string(g) + ")*f(" + std::to_string(h)
                   + ")");
        }
      }
    }
    return GroupHom(std::move(source), std::move(target), std::move(map));
  }

  std::vector<Index> generated_subgroup(Group const&             g,
                                        std::vector<Index> const& gens) {
    std::vector<char>  in(g.order(), 0);
    std::vector<Index> elts{g.identity()};
    in[g.identity()] = 1;
    for (std::size_t i = 0; i < elts.size(); ++i) {
      for (Index s : gens) {
        Index x = g.mul(elts[i], s);
        if (!in[x]) {
          in[x] = 1;
          elts.push_back(x);
        }
      }
    }
    std::sort(elts.begin(), elts.end());
    return elts;
  }

  std::vector<std::vector<Index>> all_subgroups(Group const& g) {
    std::set<std::vector<Index>> found;
    std::vector<std::vector<Index>> cyclic;
    for (Index x = 0; x < g.order(); ++x) {
      auto c = generated_subgroup(g, {x});
      if (found.insert(c).second) {
        cyclic.push_back(c);
      }
    }
    std::vector<std::vector<Index>> queue(found.begin(), found.end());
    for (std::size_t i = 0; i < queue.size(); ++i) {
      for (auto const& c : cyclic) {
        std::vector<Index> gens = queue[i];
        gens.insert(gens.end(), c.begin(), c.end());
        auto j = generated_subgroup(g, gens);
        if (found.insert(j).second) {
          queue.push_back(j);
        }
      }
    }
    std::vector<std::vector<Index>> out(found.begin(), found.end());
    std::stable_sort(out.begin(), out.end(), [](auto const& a, auto const& b) {
      return a.size() < b.size();
    });
    return out;
  }

  std::vector<Index> conjugate_subgroup(Group const&             g,
                                        std::vector<Index> const& h,
                                        Index                     x) {
    std::vector<Index> out;
    out.reserve(h.size());
    for (Index y : h) {
      out.push_back(g.mul(g.mul(g.inv(x), y), x));
    }
    std::sort(out.begin(), out.end());
    return out;
  }

  std::vector<Index> conjugacy_key(Group const& g, std::vector<Index> const& h) {
    std::vector<Index> best = h;
    for (Index x = 0; x < g.order(); ++x) {
      best = std::min(best, conjugate_subgroup(g, h, x));
    }
    return best;
  }

  std::string describe(Group const& g) {
    std::ostringstream os;
    os << "<group of order " << g.order() << ">";
    return os.str();
  }

}  // namespace burncat
