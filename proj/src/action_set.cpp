#include "burncat/action_set.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <string>
#include <type_traits>

namespace burncat {

  namespace {
    std::string str(Index i) {
      return std::to_string(i);
    }

    template <typename A>
    constexpr bool is_group = std::is_same_v<A, Group>;
  }  // namespace

  template <typename A>
  ActionSet<A> ActionSet<A>::make(A acting, std::vector<Index> color, std::vector<Index> act) {
    std::size_t const n = color.size();
    std::size_t const m = acting.num_elements();
    if (act.size() != n * m) {
      fail(Errc::OutOfRange, "action table has " + std::to_string(act.size())
                                 + " entries, expected " + std::to_string(n * m));
    }
    Errc const structure = is_group<A> ? Errc::OutOfRange : Errc::StructureMapViolated;
    Errc const unit_err  = is_group<A> ? Errc::IdentityNotFixed : Errc::ActionAxiomViolated;
    Errc const assoc_err = is_group<A> ? Errc::ActionNotAssociative : Errc::ActionAxiomViolated;
    for (Index x = 0; x < n; ++x) {
      if (color[x] >= acting.num_objects()) {
        fail(Errc::OutOfRange, "color of point " + str(x));
      }
    }
    for (Index x = 0; x < n; ++x) {
      for (Index g = 0; g < m; ++g) {
        Index y = act[x * m + g];
        bool  defined = color[x] == acting.target(g);
        if (y != kNone && y >= n) {
          fail(Errc::OutOfRange, "point " + str(x) + " . " + str(g) + " = " + str(y));
        }
        if (defined != (y != kNone)) {
          fail(structure, "point " + str(x) + " . " + str(g)
                              + (defined ? " must be defined" : " must be undefined"));
        }
        if (defined && color[y] != acting.source(g)) {
          fail(structure, "color of " + str(x) + " . " + str(g));
        }
      }
    }
    for (Index x = 0; x < n; ++x) {
      if (act[x * m + acting.unit(color[x])] != x) {
        fail(unit_err, "identity moves point " + str(x));
      }
    }
    for (Index x = 0; x < n; ++x) {
      for (Index g = 0; g < m; ++g) {
        Index y = act[x * m + g];
        if (y == kNone) {
          continue;
        }
        for (Index h = 0; h < m; ++h) {
          if (acting.source(g) != acting.target(h)) {
            continue;
          }
          if (act[y * m + h] != act[x * m + acting.compose(g, h)]) {
            fail(assoc_err, "(" + str(x) + " . " + str(g) + ") . " + str(h)
                                + " differs from " + str(x) + " . (" + str(g) + " "
                                + str(h) + ")");
          }
        }
      }
    }
    return ActionSet(std::make_shared<Data const>(
        Data{std::move(acting), std::move(color), std::move(act)}));
  }

  GSet make_gset(Group g, std::vector<std::vector<Index>> const& rows) {
    std::vector<Index> act;
    for (std::size_t x = 0; x < rows.size(); ++x) {
      if (rows[x].size() != g.order()) {
        fail(Errc::OutOfRange, "action row " + std::to_string(x) + " has "
                                   + std::to_string(rows[x].size()) + " entries");
      }
      act.insert(act.end(), rows[x].begin(), rows[x].end());
    }
    return GSet::make(std::move(g), std::vector<Index>(rows.size(), 0), std::move(act));
  }

  std::vector<std::vector<Index>> gset_rows(GSet const& x) {
    std::size_t const               m = x.acting().order();
    std::vector<std::vector<Index>> rows(x.size());
    for (Index p = 0; p < x.size(); ++p) {
      rows[p].assign(x.table().begin() + p * m, x.table().begin() + (p + 1) * m);
    }
    return rows;
  }

  GSet trivial_gset(Group g, std::size_t n) {
    std::vector<std::vector<Index>> rows(n);
    for (Index x = 0; x < n; ++x) {
      rows[x].assign(g.order(), x);
    }
    return make_gset(std::move(g), rows);
  }

  GroupoidSet make_groupoid_set(Groupoid                                 g,
                                std::vector<Index>                       sigma,
                                std::vector<std::array<Index, 3>> const& triples) {
    std::size_t const  n = sigma.size();
    std::size_t const  m = g.num_elements();
    std::vector<Index> act(n * m, kNone);
    for (auto const& [x, a, y] : triples) {
      if (x >= n || a >= m || y >= n) {
        fail(Errc::OutOfRange, "action triple (" + str(x) + ", " + str(a) + ", " + str(y) + ")");
      }
      if (act[x * m + a] != kNone) {
        fail(Errc::ActionAxiomViolated,
             "product " + str(x) + " . " + str(a) + " listed twice");
      }
      act[x * m + a] = y;
    }
    return GroupoidSet::make(std::move(g), std::move(sigma), std::move(act));
  }

  std::vector<std::array<Index, 3>> groupoid_set_triples(GroupoidSet const& x) {
    std::vector<std::array<Index, 3>> out;
    for (Index p = 0; p < x.size(); ++p) {
      for (Index a = 0; a < x.acting().num_elements(); ++a) {
        if (x.act(p, a) != kNone) {
          out.push_back({p, a, x.act(p, a)});
        }
      }
    }
    return out;
  }

  template <typename A>
  std::vector<Index> loops_at(A const& acting, Index c) {
    std::vector<Index> out;
    for (Index g = 0; g < acting.num_elements(); ++g) {
      if (acting.source(g) == c && acting.target(g) == c) {
        out.push_back(g);
      }
    }
    return out;
  }

  LocalGroup local_group(Group const& g, Index) {
    std::vector<Index> arrows(g.order());
    std::iota(arrows.begin(), arrows.end(), 0);
    return {g, std::move(arrows)};
  }

  LocalGroup local_group(Groupoid const& g, Index c) {
    auto iso = isotropy_group(g, c);
    return {std::move(iso.group), std::move(iso.arrows)};
  }

  Index component_base(Group const&, Index) {
    return 0;
  }

  Index component_base(Groupoid const& g, Index c) {
    // Any arrow into c from the least object of its component will do.
    Index best = c;
    for (Index a = 0; a < g.num_elements(); ++a) {
      if (g.target(a) == c) {
        best = std::min(best, g.source(a));
      }
    }
    return best;
  }

  namespace {
    std::vector<Index> to_local(LocalGroup const& lg, std::vector<Index> const& arrows) {
      std::vector<Index> out;
      for (Index a : arrows) {
        out.push_back(static_cast<Index>(
            std::lower_bound(lg.arrows.begin(), lg.arrows.end(), a) - lg.arrows.begin()));
      }
      std::sort(out.begin(), out.end());
      return out;
    }

    std::vector<Index> to_arrows(LocalGroup const& lg, std::vector<Index> const& local) {
      std::vector<Index> out;
      for (Index i : local) {
        out.push_back(lg.arrows[i]);
      }
      std::sort(out.begin(), out.end());
      return out;
    }
  }  // namespace

  template <typename A>
  std::vector<std::vector<Index>> subgroup_classes_at(A const& acting, Index c) {
    auto const                   lg = local_group(acting, c);
    std::vector<std::vector<Index>> out;
    for (auto const& h : all_subgroups(lg.group)) {
      auto key = to_arrows(lg, conjugacy_key(lg.group, h));
      if (std::find(out.begin(), out.end(), key) == out.end()) {
        out.push_back(std::move(key));
      }
    }
    return out;
  }

  template <typename A>
  std::vector<Index> subgroup_key_at(A const&                  acting,
                                     Index                     c,
                                     std::vector<Index> const& subgroup) {
    auto const lg = local_group(acting, c);
    return to_arrows(lg, conjugacy_key(lg.group, to_local(lg, subgroup)));
  }

  template <typename A>
  ActionSet<A> unit_set(A const& acting) {
    std::size_t const  n = acting.num_objects();
    std::size_t const  m = acting.num_elements();
    std::vector<Index> color(n), act(n * m, kNone);
    std::iota(color.begin(), color.end(), 0);
    for (Index g = 0; g < m; ++g) {
      act[acting.target(g) * m + g] = acting.source(g);
    }
    return ActionSet<A>::make(acting, std::move(color), std::move(act));
  }

  template <typename A>
  ActionSet<A> coset_set(A const& acting, Index c, std::vector<Index> const& subgroup) {
    std::size_t const m = acting.num_elements();
    for (Index h : subgroup) {
      if (h >= m || acting.source(h) != c || acting.target(h) != c) {
        fail(Errc::OutOfRange, "subgroup element " + str(h) + " is not a loop");
      }
      for (Index k : subgroup) {
        if (!std::binary_search(subgroup.begin(), subgroup.end(), acting.compose(h, k))) {
          fail(Errc::OutOfRange, "subgroup list is not closed");
        }
      }
    }
    if (!std::binary_search(subgroup.begin(), subgroup.end(), acting.unit(c))) {
      fail(Errc::OutOfRange, "subgroup list lacks the identity");
    }
    std::vector<Index> coset_of(m, kNone);
    std::vector<Index> color;
    for (Index g = 0; g < m; ++g) {
      if (acting.target(g) != c || coset_of[g] != kNone) {
        continue;
      }
      auto const id = static_cast<Index>(color.size());
      for (Index h : subgroup) {
        coset_of[acting.compose(h, g)] = id;
      }
      color.push_back(acting.source(g));
    }
    std::vector<Index> rep(color.size());
    for (Index g = m; g-- > 0;) {
      if (coset_of[g] != kNone) {
        rep[coset_of[g]] = g;
      }
    }
    std::vector<Index> act(color.size() * m, kNone);
    for (Index x = 0; x < color.size(); ++x) {
      for (Index k = 0; k < m; ++k) {
        if (acting.target(k) == color[x]) {
          act[x * m + k] = coset_of[acting.compose(rep[x], k)];
        }
      }
    }
    return ActionSet<A>::make(acting, std::move(color), std::move(act));
  }

  template <typename A>
  std::vector<TransitiveType> transitive_types(A const& acting) {
    std::vector<TransitiveType> out;
    for (Index c = 0; c < acting.num_objects(); ++c) {
      if (component_base(acting, c) != c) {
        continue;
      }
      for (auto& h : subgroup_classes_at(acting, c)) {
        out.push_back({c, std::move(h)});
      }
    }
    return out;
  }

  template <typename A>
  TransitiveType orbit_type(ActionSet<A> const& x, Index point) {
    A const& acting = x.acting();
    Index    c      = component_base(acting, x.color(point));
    Index    q      = point;
    for (Index g = 0; g < acting.num_elements(); ++g) {
      if (acting.target(g) == x.color(point) && acting.source(g) == c) {
        q = x.act(point, g);
        break;
      }
    }
    return {c, subgroup_key_at(acting, c, stabilizer(x, q))};
  }

  template <typename A>
  ActionSet<A> disjoint_union(ActionSet<A> const& x, ActionSet<A> const& y) {
    if (!(x.acting() == y.acting())) {
      fail(Errc::GroupMismatch, "disjoint union over different acting structures");
    }
    auto const         off = static_cast<Index>(x.size());
    std::vector<Index> color = x.colors();
    color.insert(color.end(), y.colors().begin(), y.colors().end());
    std::vector<Index> act = x.table();
    for (Index v : y.table()) {
      act.push_back(v == kNone ? kNone : v + off);
    }
    return ActionSet<A>::make(x.acting(), std::move(color), std::move(act));
  }

  template <typename A>
  PairLayout pair_layout(ActionSet<A> const& x, ActionSet<A> const& y) {
    PairLayout out;
    out.right = y.size();
    out.index.assign(x.size() * y.size(), kNone);
    for (Index p = 0; p < x.size(); ++p) {
      for (Index q = 0; q < y.size(); ++q) {
        if (x.color(p) == y.color(q)) {
          out.index[p * out.right + q] = static_cast<Index>(out.pairs.size());
          out.pairs.emplace_back(p, q);
        }
      }
    }
    return out;
  }

  template <typename A>
  ActionSet<A> fibre_product(ActionSet<A> const& x, ActionSet<A> const& y) {
    if (!(x.acting() == y.acting())) {
      fail(Errc::GroupMismatch, "product over different acting structures");
    }
    auto const         lay = pair_layout(x, y);
    std::size_t const  m   = x.acting().num_elements();
    std::vector<Index> color, act;
    for (auto [p, q] : lay.pairs) {
      color.push_back(x.color(p));
      for (Index g = 0; g < m; ++g) {
        Index a = x.act(p, g);
        act.push_back(a == kNone ? kNone : lay.at(a, y.act(q, g)));
      }
    }
    return ActionSet<A>::make(x.acting(), std::move(color), std::move(act));
  }

  template <typename A>
  ActionSet<A> relabel(ActionSet<A> const& x, std::vector<Index> const& perm) {
    std::size_t const  n = x.size();
    std::size_t const  m = x.acting().num_elements();
    std::vector<Index> color(n), act(n * m);
    for (Index p = 0; p < n; ++p) {
      color[perm[p]] = x.color(p);
      for (Index g = 0; g < m; ++g) {
        Index v                 = x.act(p, g);
        act[perm[p] * m + g] = v == kNone ? kNone : perm[v];
      }
    }
    return ActionSet<A>::make(x.acting(), std::move(color), std::move(act));
  }

  template <typename A>
  std::vector<Index> orbit_labels(ActionSet<A> const& x) {
    std::size_t const  m = x.acting().num_elements();
    std::vector<Index> label(x.size(), kNone);
    Index              next = 0;
    std::vector<Index> stack;
    for (Index p = 0; p < x.size(); ++p) {
      if (label[p] != kNone) {
        continue;
      }
      label[p] = next;
      stack.push_back(p);
      while (!stack.empty()) {
        Index q = stack.back();
        stack.pop_back();
        for (Index g = 0; g < m; ++g) {
          Index r = x.act(q, g);
          if (r != kNone && label[r] == kNone) {
            label[r] = next;
            stack.push_back(r);
          }
        }
      }
      ++next;
    }
    return label;
  }

  template <typename A>
  std::vector<std::vector<Index>> orbits(ActionSet<A> const& x) {
    auto const                      label = orbit_labels(x);
    std::vector<std::vector<Index>> out;
    for (Index p = 0; p < x.size(); ++p) {
      if (label[p] >= out.size()) {
        out.resize(label[p] + 1);
      }
      out[label[p]].push_back(p);
    }
    return out;
  }

  template <typename A>
  std::vector<Index> stabilizer(ActionSet<A> const& x, Index point) {
    std::vector<Index> out;
    for (Index g : loops_at(x.acting(), x.color(point))) {
      if (x.act(point, g) == point) {
        out.push_back(g);
      }
    }
    return out;
  }

  template <typename A>
  std::optional<std::pair<Index, Index>>
  equivariance_violation(ActionSet<A> const&       x,
                         ActionSet<A> const&       y,
                         std::vector<Index> const& map) {
    std::size_t const m = x.acting().num_elements();
    for (Index p = 0; p < x.size(); ++p) {
      if (x.color(p) != y.color(map[p])) {
        return std::make_pair(p, kNone);
      }
      for (Index g = 0; g < m; ++g) {
        Index q = x.act(p, g);
        if (q != kNone && map[q] != y.act(map[p], g)) {
          return std::make_pair(p, g);
        }
      }
    }
    return std::nullopt;
  }

  template <typename A>
  std::optional<std::vector<Index>> isomorphic(ActionSet<A> const& x,
                                               ActionSet<A> const& y) {
    if (!(x.acting() == y.acting()) || x.size() != y.size()) {
      return std::nullopt;
    }
    std::size_t const m  = x.acting().num_elements();
    auto const        ox = orbits(x);
    auto const        oy = orbits(y);
    if (ox.size() != oy.size()) {
      return std::nullopt;
    }
    std::vector<char>  used(oy.size(), 0);
    std::vector<Index> map(x.size(), kNone);
    // Orbits of one type are interchangeable, so a greedy match never needs
    // to be undone.
    for (auto const& orb : ox) {
      Index const p    = orb.front();
      auto const  stab = stabilizer(x, p);
      Index       hit  = kNone;
      for (Index j = 0; j < oy.size() && hit == kNone; ++j) {
        if (used[j] || oy[j].size() != orb.size()) {
          continue;
        }
        for (Index q : oy[j]) {
          if (y.color(q) == x.color(p) && stabilizer(y, q) == stab) {
            hit  = j;
            used[j] = 1;
            map[p]  = q;
            break;
          }
        }
      }
      if (hit == kNone) {
        return std::nullopt;
      }
      std::vector<Index> stack{p};
      while (!stack.empty()) {
        Index a = stack.back();
        stack.pop_back();
        for (Index g = 0; g < m; ++g) {
          Index b = x.act(a, g);
          if (b != kNone && map[b] == kNone) {
            map[b] = y.act(map[a], g);
            stack.push_back(b);
          }
        }
      }
    }
    return map;
  }

#define BURNCAT_INSTANTIATE(A)                                                         \
  template class ActionSet<A>;                                                         \
  template std::vector<Index> loops_at(A const&, Index);                               \
  template std::vector<std::vector<Index>> subgroup_classes_at(A const&, Index);       \
  template std::vector<Index> subgroup_key_at(A const&, Index, std::vector<Index> const&); \
  template ActionSet<A> unit_set(A const&);                                            \
  template ActionSet<A> coset_set(A const&, Index, std::vector<Index> const&);         \
  template std::vector<TransitiveType> transitive_types(A const&);                     \
  template TransitiveType orbit_type(ActionSet<A> const&, Index);                      \
  template ActionSet<A> disjoint_union(ActionSet<A> const&, ActionSet<A> const&);      \
  template PairLayout pair_layout(ActionSet<A> const&, ActionSet<A> const&);           \
  template ActionSet<A> fibre_product(ActionSet<A> const&, ActionSet<A> const&);       \
  template ActionSet<A> relabel(ActionSet<A> const&, std::vector<Index> const&);       \
  template std::vector<Index> orbit_labels(ActionSet<A> const&);                       \
  template std::vector<std::vector<Index>> orbits(ActionSet<A> const&);                \
  template std::vector<Index> stabilizer(ActionSet<A> const&, Index);                  \
  template std::optional<std::pair<Index, Index>> equivariance_violation(              \
      ActionSet<A> const&, ActionSet<A> const&, std::vector<Index> const&);            \
  template std::optional<std::vector<Index>> isomorphic(ActionSet<A> const&,           \
                                                        ActionSet<A> const&);

  BURNCAT_INSTANTIATE(Group)
  BURNCAT_INSTANTIATE(Groupoid)

#undef BURNCAT_INSTANTIATE

}  // namespace burncat
