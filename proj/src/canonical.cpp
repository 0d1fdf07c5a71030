#include "burncat/canonical.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace burncat {

  namespace canon {

    namespace {

      class Canonizer {
       public:
        explicit Canonizer(Graph const& g) : _g(g), _adj(g.n) {
          for (auto const& [u, v, c] : g.edges) {
            _adj[u].emplace_back(c * 2, v);
            _adj[v].emplace_back(c * 2 + 1, u);
          }
        }

        std::vector<Index> run() {
          std::size_t const n = _g.n;
          if (n == 0) {
            return {};
          }
          std::vector<Index> order(n);
          std::iota(order.begin(), order.end(), 0);
          std::stable_sort(order.begin(), order.end(),
                           [&](Index a, Index b) { return _g.color[a] < _g.color[b]; });
          std::vector<Index> cell(n);
          Index              k = 0;
          for (std::size_t i = 0; i < n; ++i) {
            if (i > 0 && _g.color[order[i]] != _g.color[order[i - 1]]) {
              ++k;
            }
            cell[order[i]] = k;
          }
          dfs(std::move(cell), k + 1);
          return _best_lab;
        }

       private:
        Graph const&                                             _g;
        std::vector<std::vector<std::pair<std::uint32_t, Index>>> _adj;
        std::vector<std::uint32_t>                               _best_cert, _first_cert;
        std::vector<Index>                                       _best_lab, _first_lab;
        bool                                                     _have = false;
        std::vector<std::vector<Index>>                          _autos;
        std::vector<Index>                                       _prefix;

        std::size_t refine(std::vector<Index>& cell, std::size_t ncells) const {
          std::size_t const                       n = _g.n;
          std::vector<std::vector<std::uint64_t>> sig(n);
          std::vector<Index>                      order(n);
          std::vector<Index>                      next(n);
          while (ncells < n) {
            for (Index v = 0; v < n; ++v) {
              sig[v].clear();
              for (auto [key, u] : _adj[v]) {
                sig[v].push_back((std::uint64_t(key) << 32) | cell[u]);
              }
              std::sort(sig[v].begin(), sig[v].end());
            }
            std::iota(order.begin(), order.end(), 0);
            std::sort(order.begin(), order.end(), [&](Index a, Index b) {
              return cell[a] != cell[b] ? cell[a] < cell[b] : sig[a] < sig[b];
            });
            Index k = 0;
            for (std::size_t i = 0; i < n; ++i) {
              if (i > 0
                  && (cell[order[i]] != cell[order[i - 1]]
                      || sig[order[i]] != sig[order[i - 1]])) {
                ++k;
              }
              next[order[i]] = k;
            }
            if (k + 1 == ncells) {
              break;
            }
            cell.swap(next);
            ncells = k + 1;
          }
          return ncells;
        }

        static std::vector<Index> individualize(std::vector<Index> const& cell, Index v) {
          std::vector<Index> out(cell.size());
          for (Index u = 0; u < cell.size(); ++u) {
            out[u] = 2 * cell[u] + (cell[u] == cell[v] && u != v ? 1 : 0);
          }
          std::vector<Index> vals = out;
          std::sort(vals.begin(), vals.end());
          vals.erase(std::unique(vals.begin(), vals.end()), vals.end());
          for (auto& x : out) {
            x = static_cast<Index>(std::lower_bound(vals.begin(), vals.end(), x)
                                   - vals.begin());
          }
          return out;
        }

        std::vector<std::uint32_t> certificate(std::vector<Index> const& lab) const {
          std::size_t const          n = _g.n;
          std::vector<std::uint32_t> cert(n);
          for (Index v = 0; v < n; ++v) {
            cert[lab[v]] = _g.color[v];
          }
          std::vector<std::array<std::uint32_t, 3>> e;
          e.reserve(_g.edges.size());
          for (auto const& [u, v, c] : _g.edges) {
            e.push_back({lab[u], lab[v], c});
          }
          std::sort(e.begin(), e.end());
          for (auto const& t : e) {
            cert.insert(cert.end(), t.begin(), t.end());
          }
          return cert;
        }

        void record_automorphism(std::vector<Index> const& lab,
                                 std::vector<Index> const& ref) {
          std::vector<Index> inv(lab.size());
          for (Index v = 0; v < ref.size(); ++v) {
            inv[ref[v]] = v;
          }
          std::vector<Index> gamma(lab.size());
          bool               trivial = true;
          for (Index v = 0; v < lab.size(); ++v) {
            gamma[v] = inv[lab[v]];
            trivial  = trivial && gamma[v] == v;
          }
          if (!trivial && std::find(_autos.begin(), _autos.end(), gamma) == _autos.end()) {
            _autos.push_back(std::move(gamma));
          }
        }

        void leaf(std::vector<Index> const& lab) {
          auto cert = certificate(lab);
          if (!_have) {
            _have       = true;
            _first_cert = _best_cert = std::move(cert);
            _first_lab = _best_lab = lab;
            return;
          }
          if (cert == _first_cert) {
            record_automorphism(lab, _first_lab);
          }
          if (cert == _best_cert) {
            record_automorphism(lab, _best_lab);
          } else if (cert < _best_cert) {
            _best_cert = std::move(cert);
            _best_lab  = lab;
          }
        }

        Index find(std::vector<Index>& uf, Index x) const {
          while (uf[x] != x) {
            uf[x] = uf[uf[x]];
            x     = uf[x];
          }
          return x;
        }

        std::vector<Index> prefix_orbits() const {
          std::vector<Index> uf(_g.n);
          std::iota(uf.begin(), uf.end(), 0);
          for (auto const& gamma : _autos) {
            bool fixes = std::all_of(_prefix.begin(), _prefix.end(),
                                     [&](Index v) { return gamma[v] == v; });
            if (!fixes) {
              continue;
            }
            for (Index v = 0; v < gamma.size(); ++v) {
              Index a = find(uf, v), b = find(uf, gamma[v]);
              if (a != b) {
                uf[std::max(a, b)] = std::min(a, b);
              }
            }
          }
          for (Index v = 0; v < uf.size(); ++v) {
            uf[v] = find(uf, v);
          }
          return uf;
        }

        void dfs(std::vector<Index> cell, std::size_t ncells) {
          ncells = refine(cell, ncells);
          if (ncells == _g.n) {
            leaf(cell);
            return;
          }
          std::vector<Index> size(ncells, 0);
          for (Index c : cell) {
            ++size[c];
          }
          Index target = kNone;
          for (Index c = 0; c < ncells; ++c) {
            if (size[c] > 1 && (target == kNone || size[c] < size[target])) {
              target = c;
            }
          }
          std::vector<Index> explored;
          for (Index v = 0; v < _g.n; ++v) {
            if (cell[v] != target) {
              continue;
            }
            if (!explored.empty() && !_autos.empty()) {
              auto const orb  = prefix_orbits();
              bool       seen = std::any_of(explored.begin(), explored.end(),
                                            [&](Index w) { return orb[w] == orb[v]; });
              if (seen) {
                continue;
              }
            }
            explored.push_back(v);
            _prefix.push_back(v);
            dfs(individualize(cell, v), ncells + 1);
            _prefix.pop_back();
          }
        }
      };

    }  // namespace

    std::vector<Index> canonical_labeling(Graph const& g) {
      return Canonizer(g).run();
    }

  }  // namespace canon

  template <typename A>
  std::vector<Index> block_labels(CatSet<A> const& x) {
    std::vector<Index> uf(x.num_objects());
    std::iota(uf.begin(), uf.end(), 0);
    auto find = [&](Index v) {
      while (uf[v] != v) {
        uf[v] = uf[uf[v]];
        v     = uf[v];
      }
      return v;
    };
    auto unite = [&](Index a, Index b) {
      a = find(a);
      b = find(b);
      if (a != b) {
        uf[std::max(a, b)] = std::min(a, b);
      }
    };
    for (Index f = 0; f < x.num_arrows(); ++f) {
      unite(x.src(f), x.tgt(f));
    }
    for (Index o = 0; o < x.num_objects(); ++o) {
      for (Index g = 0; g < x.acting().num_elements(); ++g) {
        Index p = x.objects().act(o, g);
        if (p != kNone) {
          unite(o, p);
        }
      }
    }
    std::vector<Index> label(x.num_objects()), id(x.num_objects(), kNone);
    Index              next = 0;
    for (Index o = 0; o < x.num_objects(); ++o) {
      Index r = find(o);
      if (id[r] == kNone) {
        id[r] = next++;
      }
      label[o] = id[r];
    }
    return label;
  }

  namespace {

    void put(std::string& out, std::uint64_t v) {
      do {
        unsigned char byte = v & 0x7f;
        v >>= 7;
        if (v != 0) {
          byte |= 0x80;
        }
        out.push_back(static_cast<char>(byte));
      } while (v != 0);
    }

    void put_ref(std::string& out, Index v, std::vector<Index> const& perm) {
      put(out, v == kNone ? 0 : std::uint64_t(perm[v]) + 1);
    }

    class Reader {
     public:
      explicit Reader(std::string const& s) : _s(s) {}
      std::uint64_t get() {
        std::uint64_t v     = 0;
        int           shift = 0;
        while (true) {
          if (_pos >= _s.size() || shift > 56) {
            fail(Errc::ParseError, "truncated canonical form");
          }
          auto byte = static_cast<unsigned char>(_s[_pos++]);
          v |= std::uint64_t(byte & 0x7f) << shift;
          if (!(byte & 0x80)) {
            return v;
          }
          shift += 7;
        }
      }
      Index get_index(std::size_t bound) {
        auto v = get();
        if (v >= bound) {
          fail(Errc::ParseError, "value out of range in canonical form");
        }
        return static_cast<Index>(v);
      }
      Index get_ref(std::size_t bound) {
        auto v = get();
        if (v > bound) {
          fail(Errc::ParseError, "value out of range in canonical form");
        }
        return v == 0 ? kNone : static_cast<Index>(v - 1);
      }
      bool done() const {
        return _pos == _s.size();
      }

     private:
      std::string const& _s;
      std::size_t        _pos = 0;
    };

    std::vector<Index> inverse(std::vector<Index> const& p) {
      std::vector<Index> q(p.size());
      for (Index i = 0; i < p.size(); ++i) {
        q[p[i]] = i;
      }
      return q;
    }

    template <typename A>
    std::string encode_with(CatSet<A> const&          x,
                            std::vector<Index> const& op,
                            std::vector<Index> const& ap) {
      std::size_t const n0 = x.num_objects(), n1 = x.num_arrows();
      std::size_t const m  = x.acting().num_elements();
      auto const        oi = inverse(op);
      auto const        ai = inverse(ap);
      std::string       out;
      put(out, n0);
      put(out, n1);
      put(out, m);
      for (Index i = 0; i < n0; ++i) {
        put(out, x.objects().color(oi[i]));
        for (Index g = 0; g < m; ++g) {
          put_ref(out, x.objects().act(oi[i], g), op);
        }
      }
      for (Index i = 0; i < n1; ++i) {
        put(out, x.arrows().color(ai[i]));
        for (Index g = 0; g < m; ++g) {
          put_ref(out, x.arrows().act(ai[i], g), ap);
        }
      }
      for (Index i = 0; i < n1; ++i) {
        put(out, op[x.src(ai[i])]);
        put(out, op[x.tgt(ai[i])]);
      }
      for (Index i = 0; i < n0; ++i) {
        put(out, ap[x.ident(oi[i])]);
      }
      for (Index p = 0; p < n1; ++p) {
        for (Index q = 0; q < n1; ++q) {
          Index r = x.comp(ai[p], ai[q]);
          if (r != kNone) {
            put(out, ap[r]);
          }
        }
      }
      return out;
    }

    template <typename A>
    canon::Graph graph_of(CatSet<A> const& x) {
      std::size_t const n0 = x.num_objects(), n1 = x.num_arrows();
      std::size_t const m  = x.acting().num_elements();
      canon::Graph      g;
      std::vector<char> is_id(n1, 0);
      for (Index o = 0; o < n0; ++o) {
        is_id[x.ident(o)] = 1;
      }
      for (Index o = 0; o < n0; ++o) {
        g.color.push_back(x.objects().color(o));
      }
      for (Index f = 0; f < n1; ++f) {
        g.color.push_back(((1u + is_id[f]) << 24) | x.arrows().color(f));
      }
      auto const arr = [&](Index f) { return static_cast<std::uint32_t>(n0 + f); };
      for (Index f = 0; f < n1; ++f) {
        g.edges.push_back({arr(f), x.src(f), 0});
        g.edges.push_back({arr(f), x.tgt(f), 1});
      }
      for (Index o = 0; o < n0; ++o) {
        g.edges.push_back({o, arr(x.ident(o)), 2});
        for (Index e = 0; e < m; ++e) {
          Index p = x.objects().act(o, e);
          if (p != kNone) {
            g.edges.push_back({o, p, static_cast<std::uint32_t>(6 + e)});
          }
        }
      }
      for (Index f = 0; f < n1; ++f) {
        for (Index e = 0; e < m; ++e) {
          Index k = x.arrows().act(f, e);
          if (k != kNone) {
            g.edges.push_back({arr(f), arr(k), static_cast<std::uint32_t>(6 + m + e)});
          }
        }
      }
      // Composites with an identity are forced by the unit laws.
      auto node = static_cast<std::uint32_t>(n0 + n1);
      for (Index p = 0; p < n1; ++p) {
        if (is_id[p]) {
          continue;
        }
        for (Index q = 0; q < n1; ++q) {
          Index r = x.comp(p, q);
          if (r == kNone || is_id[q]) {
            continue;
          }
          g.color.push_back(3u << 24);
          g.edges.push_back({node, arr(p), 3});
          g.edges.push_back({node, arr(q), 4});
          g.edges.push_back({node, arr(r), 5});
          ++node;
        }
      }
      g.n = g.color.size();
      return g;
    }

  }  // namespace

  std::string CanonicalClass::hex() const {
    static char const digits[] = "0123456789abcdef";
    std::string       out;
    for (unsigned char c : bytes) {
      out.push_back(digits[c >> 4]);
      out.push_back(digits[c & 15]);
    }
    return out;
  }

  CanonicalClass from_hex(std::string const& hex) {
    auto val = [](char c) -> int {
      if (c >= '0' && c <= '9') {
        return c - '0';
      }
      if (c >= 'a' && c <= 'f') {
        return c - 'a' + 10;
      }
      if (c >= 'A' && c <= 'F') {
        return c - 'A' + 10;
      }
      fail(Errc::ParseError, "bad hex digit in class key");
    };
    if (hex.size() % 2 != 0) {
      fail(Errc::ParseError, "class key has odd length");
    }
    CanonicalClass out;
    for (std::size_t i = 0; i < hex.size(); i += 2) {
      out.bytes.push_back(static_cast<char>(val(hex[i]) * 16 + val(hex[i + 1])));
    }
    return out;
  }

  template <typename A>
  std::string encode(CatSet<A> const& x) {
    std::vector<Index> op(x.num_objects()), ap(x.num_arrows());
    std::iota(op.begin(), op.end(), 0);
    std::iota(ap.begin(), ap.end(), 0);
    return encode_with(x, op, ap);
  }

  template <typename A>
  CatSet<A> decode(A const& acting, std::string const& bytes) {
    Reader            in(bytes);
    std::size_t const n0 = in.get(), n1 = in.get(), m = in.get();
    if (m != acting.num_elements()) {
      fail(Errc::SchemaError, "class key was made for a different acting structure");
    }
    if (n0 > n1 || n1 > (1u << 16)) {
      fail(Errc::ParseError, "implausible sizes in canonical form");
    }
    std::vector<Index> oc(n0), oa(n0 * m), ac(n1), aa(n1 * m);
    for (Index i = 0; i < n0; ++i) {
      oc[i] = in.get_index(acting.num_objects());
      for (Index g = 0; g < m; ++g) {
        oa[i * m + g] = in.get_ref(n0);
      }
    }
    for (Index i = 0; i < n1; ++i) {
      ac[i] = in.get_index(acting.num_objects());
      for (Index g = 0; g < m; ++g) {
        aa[i * m + g] = in.get_ref(n1);
      }
    }
    std::vector<Index> src(n1), tgt(n1), ident(n0), comp(n1 * n1, kNone);
    for (Index i = 0; i < n1; ++i) {
      src[i] = in.get_index(n0);
      tgt[i] = in.get_index(n0);
    }
    for (Index i = 0; i < n0; ++i) {
      ident[i] = in.get_index(n1);
    }
    for (Index p = 0; p < n1; ++p) {
      for (Index q = 0; q < n1; ++q) {
        if (src[p] == tgt[q]) {
          comp[p * n1 + q] = in.get_index(n1);
        }
      }
    }
    if (!in.done()) {
      fail(Errc::ParseError, "trailing bytes in canonical form");
    }
    return CatSet<A>::make_dense(ActionSet<A>::make(acting, std::move(oc), std::move(oa)),
                                 ActionSet<A>::make(acting, std::move(ac), std::move(aa)),
                                 std::move(src), std::move(tgt), std::move(ident),
                                 std::move(comp));
  }

  template <typename A>
  Canonized canonize(CatSet<A> const& x) {
    auto const label   = block_labels(x);
    Index      nblocks = 0;
    for (Index l : label) {
      nblocks = std::max(nblocks, l + 1);
    }
    struct Piece {
      std::string        bytes;
      FullSub<A>         part;
      std::vector<Index> op, ap;
    };
    std::vector<Piece> pieces;
    for (Index b = 0; b < nblocks; ++b) {
      std::vector<Index> objs;
      for (Index o = 0; o < x.num_objects(); ++o) {
        if (label[o] == b) {
          objs.push_back(o);
        }
      }
      auto              part = full_subcategory(x, std::move(objs));
      auto const        lab  = canon::canonical_labeling(graph_of(part.sub));
      std::size_t const n0   = part.sub.num_objects();
      std::size_t const n1   = part.sub.num_arrows();
      std::vector<Index> byo(n0), bya(n1);
      std::iota(byo.begin(), byo.end(), 0);
      std::iota(bya.begin(), bya.end(), 0);
      std::sort(byo.begin(), byo.end(), [&](Index a, Index b) { return lab[a] < lab[b]; });
      std::sort(bya.begin(), bya.end(),
                [&](Index a, Index b) { return lab[n0 + a] < lab[n0 + b]; });
      std::vector<Index> op(n0), ap(n1);
      for (Index i = 0; i < n0; ++i) {
        op[byo[i]] = i;
      }
      for (Index i = 0; i < n1; ++i) {
        ap[bya[i]] = i;
      }
      auto bytes = encode_with(part.sub, op, ap);
      pieces.push_back({std::move(bytes), std::move(part), std::move(op), std::move(ap)});
    }
    std::stable_sort(pieces.begin(), pieces.end(),
                     [](Piece const& a, Piece const& b) { return a.bytes < b.bytes; });
    Canonized out;
    out.object_perm.assign(x.num_objects(), kNone);
    out.arrow_perm.assign(x.num_arrows(), kNone);
    Index oo = 0, ao = 0;
    for (auto const& pc : pieces) {
      for (Index i = 0; i < pc.op.size(); ++i) {
        out.object_perm[pc.part.objects[i]] = oo + pc.op[i];
      }
      for (Index i = 0; i < pc.ap.size(); ++i) {
        out.arrow_perm[pc.part.arrows[i]] = ao + pc.ap[i];
      }
      oo += static_cast<Index>(pc.op.size());
      ao += static_cast<Index>(pc.ap.size());
    }
    out.key.bytes = encode_with(x, out.object_perm, out.arrow_perm);
    return out;
  }

  template <typename A>
  std::optional<Isomorphism<A>> catset_isomorphic(CatSet<A> const& x, CatSet<A> const& y) {
    if (!(x.acting() == y.acting()) || x.num_objects() != y.num_objects()
        || x.num_arrows() != y.num_arrows()) {
      return std::nullopt;
    }
    auto const cx = canonize(x);
    auto const cy = canonize(y);
    if (!(cx.key == cy.key)) {
      return std::nullopt;
    }
    auto const         yo = inverse(cy.object_perm);
    auto const         ya = inverse(cy.arrow_perm);
    std::vector<Index> f0(x.num_objects()), f1(x.num_arrows()), b0(f0.size()), b1(f1.size());
    for (Index o = 0; o < f0.size(); ++o) {
      f0[o]     = yo[cx.object_perm[o]];
      b0[f0[o]] = o;
    }
    for (Index a = 0; a < f1.size(); ++a) {
      f1[a]     = ya[cx.arrow_perm[a]];
      b1[f1[a]] = a;
    }
    return Isomorphism<A>{InternalFunctor<A>::make(x, y, std::move(f0), std::move(f1)),
                          InternalFunctor<A>::make(y, x, std::move(b0), std::move(b1))};
  }

#define BURNCAT_INSTANTIATE(A)                                                         \
  template std::vector<Index> block_labels(CatSet<A> const&);                          \
  template Canonized          canonize(CatSet<A> const&);                              \
  template std::string        encode(CatSet<A> const&);                                \
  template CatSet<A>          decode(A const&, std::string const&);                    \
  template std::optional<Isomorphism<A>> catset_isomorphic(CatSet<A> const&,           \
                                                           CatSet<A> const&);

  BURNCAT_INSTANTIATE(Group)
  BURNCAT_INSTANTIATE(Groupoid)

#undef BURNCAT_INSTANTIATE

}  // namespace burncat
