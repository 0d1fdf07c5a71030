#ifndef BURNCAT_SRC_ORBIT_TREE_HPP_
#define BURNCAT_SRC_ORBIT_TREE_HPP_

#include <vector>

#include "burncat/action_set.hpp"

namespace burncat::detail {

  // Spanning data for the orbits of an action set: every point p is
  // rep_of[p] . via[p], and reps lists the least point of each orbit.
  struct OrbitTree {
    std::vector<Index> rep_of, via, reps;
  };

  template <typename A>
  OrbitTree orbit_tree(ActionSet<A> const& s) {
    A const&          acting = s.acting();
    std::size_t const m      = acting.num_elements();
    OrbitTree         t;
    t.rep_of.assign(s.size(), kNone);
    t.via.assign(s.size(), kNone);
    std::vector<Index> queue;
    for (Index p = 0; p < s.size(); ++p) {
      if (t.rep_of[p] != kNone) {
        continue;
      }
      t.reps.push_back(p);
      t.rep_of[p] = p;
      t.via[p]    = acting.unit(s.color(p));
      queue.assign(1, p);
      for (std::size_t i = 0; i < queue.size(); ++i) {
        Index q = queue[i];
        for (Index g = 0; g < m; ++g) {
          Index r = s.act(q, g);
          if (r != kNone && t.rep_of[r] == kNone) {
            t.rep_of[r] = p;
            t.via[r]    = acting.compose(t.via[q], g);
            queue.push_back(r);
          }
        }
      }
    }
    return t;
  }

  template <typename A>
  bool fixed_by(ActionSet<A> const& s, Index p, std::vector<Index> const& elems) {
    for (Index h : elems) {
      if (s.act(p, h) != p) {
        return false;
      }
    }
    return true;
  }

}  // namespace burncat::detail

#endif  // BURNCAT_SRC_ORBIT_TREE_HPP_
