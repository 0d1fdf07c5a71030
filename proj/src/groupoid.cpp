#include "burncat/groupoid.hpp"

#include <algorithm>
#include <string>

namespace burncat {

  namespace {
    std::string str(Index i) {
      return std::to_string(i);
    }
  }  // namespace

  Groupoid Groupoid::make(std::size_t                       objects,
                          std::vector<Index>                src,
                          std::vector<Index>                tgt,
                          std::vector<Index>                ident,
                          std::vector<Index>                inv,
                          std::vector<std::array<Index, 3>> comp) {
    std::size_t const n = src.size();
    if (tgt.size() != n || inv.size() != n || ident.size() != objects) {
      fail(Errc::OutOfRange, "groupoid tables have inconsistent lengths");
    }
    for (std::size_t g = 0; g < n; ++g) {
      if (src[g] >= objects || tgt[g] >= objects || inv[g] >= n) {
        fail(Errc::OutOfRange, "arrow " + str(g));
      }
    }
    for (std::size_t x = 0; x < objects; ++x) {
      if (ident[x] >= n) {
        fail(Errc::OutOfRange, "identity of object " + str(x));
      }
      if (src[ident[x]] != x || tgt[ident[x]] != x) {
        fail(Errc::CategoryAxiomViolated,
             "identity of object " + str(x) + " is not a loop at it");
      }
    }
    std::vector<Index> table(n * n, kNone);
    for (auto const& [g, h, r] : comp) {
      if (g >= n || h >= n || r >= n) {
        fail(Errc::OutOfRange, "composition entry");
      }
      if (src[g] != tgt[h]) {
        fail(Errc::CompDomainMismatch,
             "entry for non-composable pair (" + str(g) + ", " + str(h) + ")");
      }
      if (table[g * n + h] != kNone) {
        fail(Errc::CompDomainMismatch,
             "pair (" + str(g) + ", " + str(h) + ") listed twice");
      }
      table[g * n + h] = r;
    }
    for (Index g = 0; g < n; ++g) {
      for (Index h = 0; h < n; ++h) {
        if (src[g] != tgt[h]) {
          continue;
        }
        Index r = table[g * n + h];
        if (r == kNone) {
          fail(Errc::CompDomainMismatch,
               "composable pair (" + str(g) + ", " + str(h) + ") missing");
        }
        if (src[r] != src[h] || tgt[r] != tgt[g]) {
          fail(Errc::CategoryAxiomViolated,
               "endpoints of " + str(g) + " after " + str(h));
        }
      }
    }
    for (Index g = 0; g < n; ++g) {
      if (table[g * n + ident[src[g]]] != g || table[ident[tgt[g]] * n + g] != g) {
        fail(Errc::CategoryAxiomViolated, "unit law at arrow " + str(g));
      }
    }
    for (Index a = 0; a < n; ++a) {
      for (Index b = 0; b < n; ++b) {
        if (src[a] != tgt[b]) {
          continue;
        }
        for (Index c = 0; c < n; ++c) {
          if (src[b] != tgt[c]) {
            continue;
          }
          if (table[table[a * n + b] * n + c] != table[a * n + table[b * n + c]]) {
            fail(Errc::CategoryAxiomViolated, "associativity at (" + str(a) + ", "
                                                  + str(b) + ", " + str(c) + ")");
          }
        }
      }
    }
    for (Index g = 0; g < n; ++g) {
      Index h = inv[g];
      if (src[h] != tgt[g] || tgt[h] != src[g] || table[g * n + h] != ident[tgt[g]]
          || table[h * n + g] != ident[src[g]]) {
        fail(Errc::NoInverse, "arrow " + str(g));
      }
    }
    auto d     = std::make_shared<Data>();
    d->objects = objects;
    d->src     = std::move(src);
    d->tgt     = std::move(tgt);
    d->ident   = std::move(ident);
    d->inv     = std::move(inv);
    d->comp    = std::move(table);
    return Groupoid(std::move(d));
  }

  Groupoid Groupoid::from_group(Group const& g) {
    std::size_t const                 n = g.order();
    std::vector<std::array<Index, 3>> comp;
    std::vector<Index>                inv(n);
    for (Index a = 0; a < n; ++a) {
      inv[a] = g.inv(a);
      for (Index b = 0; b < n; ++b) {
        comp.push_back({a, b, g.mul(a, b)});
      }
    }
    return make(1,
                std::vector<Index>(n, 0),
                std::vector<Index>(n, 0),
                {g.identity()},
                std::move(inv),
                std::move(comp));
  }

  Groupoid Groupoid::discrete(std::size_t n) {
    std::vector<Index>                id(n);
    std::vector<std::array<Index, 3>> comp;
    for (Index x = 0; x < n; ++x) {
      id[x] = x;
      comp.push_back({x, x, x});
    }
    return make(n, id, id, id, id, std::move(comp));
  }

  Groupoid Groupoid::pair(std::size_t count) {
    auto const                        n = static_cast<Index>(count);
    std::vector<Index>                src, tgt, ident(n), inv;
    std::vector<std::array<Index, 3>> comp;
    for (Index i = 0; i < n; ++i) {
      ident[i] = i * n + i;
      for (Index j = 0; j < n; ++j) {
        src.push_back(i);
        tgt.push_back(j);
        inv.push_back(j * n + i);
      }
    }
    // (j -> k) after (i -> j) is (i -> k).
    for (Index i = 0; i < n; ++i) {
      for (Index j = 0; j < n; ++j) {
        for (Index k = 0; k < n; ++k) {
          comp.push_back({j * n + k, i * n + j, i * n + k});
        }
      }
    }
    return make(n, src, tgt, ident, inv, std::move(comp));
  }

  Groupoid Groupoid::coproduct(Groupoid const& a, Groupoid const& b) {
    auto const oa = static_cast<Index>(a.num_objects());
    auto const na = static_cast<Index>(a.num_elements());
    std::vector<Index> src, tgt, ident, inv;
    for (Index g = 0; g < na; ++g) {
      src.push_back(a.source(g));
      tgt.push_back(a.target(g));
      inv.push_back(a.inverse(g));
    }
    for (Index g = 0; g < b.num_elements(); ++g) {
      src.push_back(b.source(g) + oa);
      tgt.push_back(b.target(g) + oa);
      inv.push_back(b.inverse(g) + na);
    }
    for (Index x = 0; x < a.num_objects(); ++x) {
      ident.push_back(a.unit(x));
    }
    for (Index x = 0; x < b.num_objects(); ++x) {
      ident.push_back(b.unit(x) + na);
    }
    auto comp = a.composition_triples();
    for (auto [g, h, r] : b.composition_triples()) {
      comp.push_back({g + na, h + na, r + na});
    }
    return make(a.num_objects() + b.num_objects(), src, tgt, ident, inv,
                std::move(comp));
  }

  std::vector<std::array<Index, 3>> Groupoid::composition_triples() const {
    std::vector<std::array<Index, 3>> out;
    for (Index g = 0; g < num_elements(); ++g) {
      for (Index h = 0; h < num_elements(); ++h) {
        if (source(g) == target(h)) {
          out.push_back({g, h, compose(g, h)});
        }
      }
    }
    return out;
  }

  bool operator==(Groupoid const& a, Groupoid const& b) noexcept {
    return a._d == b._d
           || (a._d->objects == b._d->objects && a._d->src == b._d->src
               && a._d->tgt == b._d->tgt && a._d->ident == b._d->ident
               && a._d->comp == b._d->comp);
  }

  std::vector<Index> connected_components(Groupoid const& g) {
    std::vector<Index> label(g.num_objects(), kNone);
    Index              next = 0;
    for (Index x = 0; x < g.num_objects(); ++x) {
      if (label[x] != kNone) {
        continue;
      }
      // Every arrow out of x reaches its whole component in one step.
      for (Index a = 0; a < g.num_elements(); ++a) {
        if (g.source(a) == x) {
          label[g.target(a)] = next;
        }
      }
      ++next;
    }
    return label;
  }

  IsotropyGroup isotropy_group(Groupoid const& g, Index object) {
    if (object >= g.num_objects()) {
      fail(Errc::OutOfRange, "object " + str(object));
    }
    std::vector<Index> loops;
    for (Index a = 0; a < g.num_elements(); ++a) {
      if (g.source(a) == object && g.target(a) == object) {
        loops.push_back(a);
      }
    }
    auto pos = [&](Index a) {
      return static_cast<Index>(std::lower_bound(loops.begin(), loops.end(), a)
                                - loops.begin());
    };
    std::vector<std::vector<Index>> t(loops.size(),
                                      std::vector<Index>(loops.size()));
    for (std::size_t i = 0; i < loops.size(); ++i) {
      for (std::size_t j = 0; j < loops.size(); ++j) {
        t[i][j] = pos(g.compose(loops[i], loops[j]));
      }
    }
    return {Group::from_table(t), std::move(loops)};
  }

  Subgroupoid make_subgroupoid(Groupoid const&    ambient,
                               std::vector<Index> objects,
                               std::vector<Index> arrows) {
    std::sort(objects.begin(), objects.end());
    objects.erase(std::unique(objects.begin(), objects.end()), objects.end());
    std::sort(arrows.begin(), arrows.end());
    arrows.erase(std::unique(arrows.begin(), arrows.end()), arrows.end());
    std::vector<Index> obj_pos(ambient.num_objects(), kNone);
    std::vector<Index> arr_pos(ambient.num_elements(), kNone);
    for (Index i = 0; i < objects.size(); ++i) {
      if (objects[i] >= ambient.num_objects()) {
        fail(Errc::OutOfRange, "object " + str(objects[i]));
      }
      obj_pos[objects[i]] = i;
    }
    for (Index i = 0; i < arrows.size(); ++i) {
      if (arrows[i] >= ambient.num_elements()) {
        fail(Errc::OutOfRange, "arrow " + str(arrows[i]));
      }
      arr_pos[arrows[i]] = i;
    }
    std::vector<Index> src, tgt, ident, inv;
    for (Index a : arrows) {
      if (obj_pos[ambient.source(a)] == kNone || obj_pos[ambient.target(a)] == kNone) {
        fail(Errc::NotSubgroupoid, "arrow " + str(a) + " leaves the object set");
      }
      if (arr_pos[ambient.inverse(a)] == kNone) {
        fail(Errc::NotSubgroupoid, "inverse of arrow " + str(a) + " missing");
      }
      src.push_back(obj_pos[ambient.source(a)]);
      tgt.push_back(obj_pos[ambient.target(a)]);
      inv.push_back(arr_pos[ambient.inverse(a)]);
    }
    for (Index x : objects) {
      if (arr_pos[ambient.unit(x)] == kNone) {
        fail(Errc::NotSubgroupoid, "identity of object " + str(x) + " missing");
      }
      ident.push_back(arr_pos[ambient.unit(x)]);
    }
    std::vector<std::array<Index, 3>> comp;
    for (Index a : arrows) {
      for (Index b : arrows) {
        if (ambient.source(a) != ambient.target(b)) {
          continue;
        }
        Index r = arr_pos[ambient.compose(a, b)];
        if (r == kNone) {
          fail(Errc::NotSubgroupoid,
               "composite of " + str(a) + " and " + str(b) + " missing");
        }
        comp.push_back({arr_pos[a], arr_pos[b], r});
      }
    }
    auto local = Groupoid::make(objects.size(), src, tgt, ident, inv, std::move(comp));
    return {std::move(local), std::move(objects), std::move(arrows)};
  }

  Subgroupoid component_subgroupoid(Groupoid const& g, Index object) {
    if (object >= g.num_objects()) {
      fail(Errc::OutOfRange, "object " + str(object));
    }
    auto const         label = connected_components(g);
    std::vector<Index> objects, arrows;
    for (Index x = 0; x < g.num_objects(); ++x) {
      if (label[x] == label[object]) {
        objects.push_back(x);
      }
    }
    for (Index a = 0; a < g.num_elements(); ++a) {
      if (label[g.source(a)] == label[object]) {
        arrows.push_back(a);
      }
    }
    return make_subgroupoid(g, std::move(objects), std::move(arrows));
  }

  Subgroupoid vertex_subgroupoid(Groupoid const& g, Index object) {
    return make_subgroupoid(g, {object}, isotropy_group(g, object).arrows);
  }

}  // namespace burncat
