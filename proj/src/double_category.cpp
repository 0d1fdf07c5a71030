#include "burncat/double_category.hpp"

#include <map>

#include "burncat/monoidal.hpp"

namespace burncat {

  namespace {

    std::string str(Index i) {
      return std::to_string(i);
    }

    // Pairs (p, g) with p.g defined, indexed densely.
    template <typename A>
    struct Translation {
      std::vector<std::array<Index, 2>> pairs;
      std::vector<Index>                index;
      std::size_t                       m = 0;

      explicit Translation(ActionSet<A> const& s) : m(s.acting().num_elements()) {
        index.assign(s.size() * m, kNone);
        for (Index p = 0; p < s.size(); ++p) {
          for (Index g = 0; g < m; ++g) {
            if (s.act(p, g) != kNone) {
              index[p * m + g] = static_cast<Index>(pairs.size());
              pairs.push_back({p, g});
            }
          }
        }
      }

      Index at(Index p, Index g) const {
        return index[p * m + g];
      }
    };

    // The translation category of s: morphisms (p, g): p.g -> p.
    template <typename A>
    void translation_category(ActionSet<A> const&                s,
                              Translation<A> const&              t,
                              std::vector<Index>&                src,
                              std::vector<Index>&                tgt,
                              std::vector<Index>&                ident,
                              std::vector<std::array<Index, 3>>& comp) {
      A const& acting = s.acting();
      for (auto const& [p, g] : t.pairs) {
        src.push_back(s.act(p, g));
        tgt.push_back(p);
      }
      for (Index p = 0; p < s.size(); ++p) {
        ident.push_back(t.at(p, acting.unit(s.color(p))));
      }
      for (Index i = 0; i < t.pairs.size(); ++i) {
        auto const [p, g] = t.pairs[i];
        Index const pg    = s.act(p, g);
        for (Index h = 0; h < t.m; ++h) {
          Index j = t.at(pg, h);
          if (j != kNone) {
            comp.push_back({i, j, t.at(p, acting.compose(g, h))});
          }
        }
      }
    }

    PlainCategory plain(std::size_t                       objects,
                        std::size_t                       arrows,
                        std::vector<Index>                src,
                        std::vector<Index>                tgt,
                        std::vector<Index>                ident,
                        std::vector<std::array<Index, 3>> comp) {
      Group const one = Group::trivial();
      return PlainCategory::make(trivial_gset(one, objects), trivial_gset(one, arrows),
                                 std::move(src), std::move(tgt), std::move(ident),
                                 std::move(comp));
    }

    using Table = std::map<std::pair<Index, Index>, Index>;

    Table table_of(std::vector<std::array<Index, 3>> const& triples) {
      Table t;
      for (auto const& [p, q, r] : triples) {
        t[{p, q}] = r;
      }
      return t;
    }

    Index lookup(Table const& t, Index p, Index q) {
      auto it = t.find({p, q});
      return it == t.end() ? kNone : it->second;
    }

    bool in_range(std::vector<Index> const& v, std::size_t size, std::size_t bound) {
      if (v.size() != size) {
        return false;
      }
      for (Index i : v) {
        if (i >= bound) {
          return false;
        }
      }
      return true;
    }

    // Vertical composition on one level: check that it is a category
    // structure over the level below (sources, targets, units,
    // associativity) given as tables.
    void check_vertical(char const*                              level,
                        std::size_t                              cells,
                        std::size_t                              below,
                        std::vector<Index> const&                s,
                        std::vector<Index> const&                t,
                        std::vector<Index> const&                i,
                        std::vector<std::array<Index, 3>> const& m,
                        std::vector<std::string>&                out) {
      std::string const lv(level);
      if (!in_range(s, cells, below) || !in_range(t, cells, below)
          || !in_range(i, below, cells)) {
        out.push_back(lv + ": source, target or identity table malformed");
        return;
      }
      Table const comp = table_of(m);
      for (Index a = 0; a < below; ++a) {
        if (s[i[a]] != a || t[i[a]] != a) {
          out.push_back(lv + ": identity at " + str(a) + " is not a loop there");
        }
      }
      for (Index p = 0; p < cells; ++p) {
        for (Index q = 0; q < cells; ++q) {
          Index r = lookup(comp, p, q);
          if (s[p] != t[q]) {
            if (r != kNone) {
              out.push_back(lv + ": composite given for non-composable (" + str(p) + ", "
                            + str(q) + ")");
            }
            continue;
          }
          if (r == kNone || r >= cells) {
            out.push_back(lv + ": composite of (" + str(p) + ", " + str(q) + ") missing");
            continue;
          }
          if (s[r] != s[q] || t[r] != t[p]) {
            out.push_back(lv + ": composite of (" + str(p) + ", " + str(q)
                          + ") has wrong endpoints");
          }
        }
      }
      for (Index p = 0; p < cells; ++p) {
        if (lookup(comp, p, i[s[p]]) != p || lookup(comp, i[t[p]], p) != p) {
          out.push_back(lv + ": unit law fails at " + str(p));
        }
      }
      for (auto const& [p, q, pq] : m) {
        for (Index r = 0; r < cells; ++r) {
          if (pq >= cells || s[q] != t[r]) {
            continue;
          }
          Index qr = lookup(comp, q, r);
          if (qr == kNone || qr >= cells) {
            continue;
          }
          Index left = lookup(comp, pq, r), right = lookup(comp, p, qr);
          if (left != right) {
            out.push_back(lv + ": associativity fails at (" + str(p) + ", " + str(q) + ", "
                          + str(r) + ")");
          }
        }
      }
    }

  }  // namespace

  template <typename A>
  DoubleCategory translation_double(CatSet<A> const& x) {
    DoubleCategory       d;
    Translation<A> const th(x.objects()), tv(x.arrows());
    d.num_objects  = x.num_objects();
    d.num_vertical = x.num_arrows();
    d.h            = th.pairs;
    d.squares      = tv.pairs;
    translation_category(x.objects(), th, d.h_src, d.h_tgt, d.h_ident, d.h_comp);
    translation_category(x.arrows(), tv, d.sq_src, d.sq_tgt, d.sq_ident, d.sq_comp);
    d.s0 = x.src_table();
    d.t0 = x.tgt_table();
    d.i0 = x.ident_table();
    for (auto const& [f, g] : d.squares) {
      d.s1.push_back(th.at(x.src(f), g));
      d.t1.push_back(th.at(x.tgt(f), g));
    }
    for (auto const& [o, g] : d.h) {
      d.i1.push_back(tv.at(x.ident(o), g));
    }
    d.m0 = x.composition_triples();
    for (Index i = 0; i < d.squares.size(); ++i) {
      auto const [l, g] = d.squares[i];
      for (Index f = 0; f < x.num_arrows(); ++f) {
        Index j = tv.at(f, g);
        if (x.src(l) == x.tgt(f) && j != kNone) {
          d.m1.push_back({i, j, tv.at(x.comp(l, f), g)});
        }
      }
    }
    return d;
  }

  std::array<Index, 4> square_vertices(DoubleCategory const& d, Index square) {
    if (square >= d.squares.size()) {
      fail(Errc::OutOfRange, "square " + str(square));
    }
    Index const bottom = d.s1[square], top = d.t1[square];
    return {d.h_tgt[bottom], d.h_src[bottom], d.h_tgt[top], d.h_src[top]};
  }

  std::vector<std::string> verify_double_axioms(DoubleCategory const& d) {
    std::vector<std::string> out;
    std::size_t const        nh = d.h.size(), nq = d.squares.size();

    // the two categories
    std::optional<PlainCategory> d0, d1;
    try {
      d0 = plain(d.num_objects, nh, d.h_src, d.h_tgt, d.h_ident, d.h_comp);
    } catch (Error const& e) {
      out.push_back(std::string("objects category: ") + e.what());
    }
    try {
      d1 = plain(d.num_vertical, nq, d.sq_src, d.sq_tgt, d.sq_ident, d.sq_comp);
    } catch (Error const& e) {
      out.push_back(std::string("morphisms category: ") + e.what());
    }
    if (!d0 || !d1) {
      return out;
    }

    // source, target and identity are functors
    auto functor = [&](char const* name, PlainCategory const& dom, PlainCategory const& cod,
                       std::vector<Index> const& f0, std::vector<Index> const& f1) {
      try {
        InternalFunctor<Group>::make(dom, cod, f0, f1);
        return true;
      } catch (Error const& e) {
        out.push_back(std::string(name) + " is not a functor: " + e.what());
        return false;
      }
    };
    bool const ok = functor("source", *d1, *d0, d.s0, d.s1)
                    & functor("target", *d1, *d0, d.t0, d.t1)
                    & functor("identity", *d0, *d1, d.i0, d.i1);
    if (!ok) {
      return out;
    }

    // vertical structure on both levels
    check_vertical("vertical morphisms", d.num_vertical, d.num_objects, d.s0, d.t0, d.i0,
                   d.m0, out);
    check_vertical("squares", nq, nh, d.s1, d.t1, d.i1, d.m1, out);
    if (!out.empty()) {
      return out;
    }

    // composition is a functor on composable pairs: it is compatible with
    // horizontal composition of squares (interchange) and identities
    Table const m0 = table_of(d.m0), m1 = table_of(d.m1);
    for (auto const& [q, p, qp] : d.m1) {
      if (lookup(m0, d.sq_tgt[q], d.sq_tgt[p]) != d.sq_tgt[qp]
          || lookup(m0, d.sq_src[q], d.sq_src[p]) != d.sq_src[qp]) {
        out.push_back("composition of squares (" + str(q) + ", " + str(p)
                      + ") disagrees with composition of their boundaries");
      }
    }
    Table const hq = table_of(d.sq_comp);
    for (auto const& [q, p, qp] : d.m1) {
      for (auto const& [q2, p2, qp2] : d.m1) {
        Index a = lookup(hq, q, q2), b = lookup(hq, p, p2);
        if (a == kNone || b == kNone) {
          continue;
        }
        if (lookup(m1, a, b) != lookup(hq, qp, qp2)) {
          out.push_back("interchange fails for (" + str(q) + ", " + str(p) + ") and ("
                        + str(q2) + ", " + str(p2) + ")");
        }
      }
    }
    for (auto const& [l, f, lf] : d.m0) {
      if (lookup(m1, d.sq_ident[l], d.sq_ident[f]) != d.sq_ident[lf]) {
        out.push_back("composition does not preserve horizontal identities at (" + str(l)
                      + ", " + str(f) + ")");
      }
    }
    return out;
  }

  template DoubleCategory translation_double(CatSet<Group> const&);
  template DoubleCategory translation_double(CatSet<Groupoid> const&);

}  // namespace burncat
