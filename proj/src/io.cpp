#include "burncat/io.hpp"

#include <fstream>
#include <sstream>

#include "burncat/canonical.hpp"

namespace burncat::io {

  namespace {

    template <typename T>
    T field(Json const& j, char const* name) {
      if (!j.is_object() || !j.contains(name)) {
        fail(Errc::SchemaError, std::string("missing field \"") + name + "\"");
      }
      try {
        return j.at(name).get<T>();
      } catch (Json::exception const& e) {
        fail(Errc::SchemaError, std::string("field \"") + name + "\": " + e.what());
      }
    }

    using Triples = std::vector<std::array<Index, 3>>;

    Triples triples(Json const& j, char const* name) {
      Triples out;
      for (auto const& t : field<std::vector<std::vector<Index>>>(j, name)) {
        if (t.size() != 3) {
          fail(Errc::SchemaError, std::string("entries of \"") + name + "\" need 3 indices");
        }
        out.push_back({t[0], t[1], t[2]});
      }
      return out;
    }

    Json triples_json(Triples const& ts) {
      Json out = Json::array();
      for (auto const& [a, b, c] : ts) {
        out.push_back({a, b, c});
      }
      return out;
    }

    bool starts_with(std::string const& s, std::string const& prefix) {
      return s.rfind(prefix, 0) == 0;
    }

    std::size_t parse_count(std::string const& s, std::string const& what) {
      try {
        std::size_t used = 0;
        auto const  n    = std::stoul(s, &used);
        if (used == s.size()) {
          return n;
        }
      } catch (std::exception const&) {
      }
      fail(Errc::ParseError, "bad count in " + what);
    }

    std::vector<std::string> split(std::string const& s, char sep) {
      std::vector<std::string> out;
      std::stringstream        in(s);
      std::string              part;
      while (std::getline(in, part, sep)) {
        out.push_back(part);
      }
      return out;
    }

    bool is_group_name(std::string const& s) {
      try {
        group_from_name(s);
        return true;
      } catch (Error const&) {
        return false;
      }
    }

    bool is_groupoid_spec(std::string const& s) {
      try {
        groupoid_from_spec(s);
        return true;
      } catch (Error const&) {
        return false;
      }
    }

    // A field that holds either an inline document or a path to one.
    std::pair<Json, Context> deref(Json const& j, Context const& ctx) {
      if (j.is_string()) {
        auto path = std::filesystem::path(j.get<std::string>());
        if (path.is_relative()) {
          path = ctx.dir / path;
        }
        return {load_json(path), Context{path.parent_path()}};
      }
      return {j, ctx};
    }

    template <typename A>
    char const* acting_key();
    template <>
    char const* acting_key<Group>() {
      return "group";
    }
    template <>
    char const* acting_key<Groupoid>() {
      return "groupoid";
    }

    GSet gset_body(Group const& g, Json const& j) {
      auto const n = field<std::size_t>(j, "size");
      if (!j.contains("act")) {
        return trivial_gset(g, n);
      }
      auto rows = field<std::vector<std::vector<Index>>>(j, "act");
      if (rows.size() != n) {
        fail(Errc::SchemaError, "act needs one row per element");
      }
      return make_gset(g, rows);
    }

    GroupoidSet groupoid_set_body(Groupoid const& g, Json const& j) {
      auto const n     = field<std::size_t>(j, "size");
      auto       sigma = field<std::vector<Index>>(j, "sigma");
      if (sigma.size() != n) {
        fail(Errc::SchemaError, "sigma needs one entry per element");
      }
      return make_groupoid_set(g, std::move(sigma), triples(j, "act"));
    }

    template <typename A>
    CatSet<A> catset_body(A const& acting, Json const& j) {
      auto set = [&](Json const& part) {
        if constexpr (std::is_same_v<A, Group>) {
          return gset_body(acting, part);
        } else {
          return groupoid_set_body(acting, part);
        }
      };
      if (!j.contains("objects") || !j.contains("arrows")) {
        fail(Errc::SchemaError, "categorified set needs objects and arrows");
      }
      return CatSet<A>::make(set(j.at("objects")), set(j.at("arrows")),
                             field<std::vector<Index>>(j, "src"),
                             field<std::vector<Index>>(j, "tgt"),
                             field<std::vector<Index>>(j, "ident"), triples(j, "comp"));
    }

    Json set_body(GSet const& x) {
      return {{"size", x.size()}, {"act", gset_rows(x)}};
    }

    Json set_body(GroupoidSet const& x) {
      return {{"size", x.size()},
              {"sigma", x.colors()},
              {"act", triples_json(groupoid_set_triples(x))}};
    }

    template <typename A>
    Json catset_json(CatSet<A> const& x, char const* kind) {
      return {{"kind", kind},
              {acting_key<A>(), to_json(x.acting())},
              {"objects", set_body(x.objects())},
              {"arrows", set_body(x.arrows())},
              {"src", x.src_table()},
              {"tgt", x.tgt_table()},
              {"ident", x.ident_table()},
              {"comp", triples_json(x.composition_triples())}};
    }

    template <typename A>
    RigElement<A> rig_body(A const& acting, Json const& j, Budget const& budget) {
      RigElement<A> out = rig_zero(acting);
      for (auto const& c : field<Json>(j, "classes")) {
        auto const key = field<std::string>(c, "key");
        auto const m   = c.contains("multiplicity") ? field<std::size_t>(c, "multiplicity") : 1;
        auto const rep = decode(acting, from_hex(key).bytes);
        out            = rig_add(out, rig_scale(rig_class(rep, budget), m), budget);
      }
      return out;
    }

    template <typename A>
    ClassicalElement<A> classical_body(A const& acting, Json const& j) {
      ClassicalElement<A> out{acting, {}};
      for (auto const& o : field<Json>(j, "orbits")) {
        TransitiveType t{field<Index>(o, "object"), field<std::vector<Index>>(o, "subgroup")};
        std::sort(t.subgroup.begin(), t.subgroup.end());
        auto const m = o.contains("multiplicity") ? field<std::size_t>(o, "multiplicity") : 1;
        // normalise through a realized orbit so equal types compare equal
        auto const orbit = coset_set(acting, t.object, t.subgroup);
        out.counts[orbit_type(orbit, 0)] += m;
      }
      return out;
    }

  }  // namespace

  Group group_from_name(std::string const& name) {
    auto const parts = split(name, 'x');
    if (parts.size() > 1) {
      Group g = group_from_name(parts[0]);
      for (std::size_t i = 1; i < parts.size(); ++i) {
        g = Group::direct_product(g, group_from_name(parts[i]));
      }
      return g;
    }
    if (name == "trivial" || name == "1") {
      return Group::trivial();
    }
    if (name.size() > 1 && name[0] == 'C') {
      auto const n = parse_count(name.substr(1), name);
      if (n == 0) {
        fail(Errc::ParseError, "C0 is not a group");
      }
      return Group::cyclic(n);
    }
    if (name.size() > 1 && name[0] == 'S') {
      auto const n = parse_count(name.substr(1), name);
      if (n == 0 || n > 6) {
        fail(Errc::ParseError, "symmetric groups S1..S6 only");
      }
      return Group::symmetric(n);
    }
    fail(Errc::ParseError, "unknown group name \"" + name + "\"");
  }

  Groupoid groupoid_from_spec(std::string const& spec) {
    std::optional<Groupoid> out;
    for (auto const& part : split(spec, '+')) {
      Groupoid g = starts_with(part, "pair:")       ? Groupoid::pair(parse_count(part.substr(5), part))
                   : starts_with(part, "discrete:") ? Groupoid::discrete(
                                                        parse_count(part.substr(9), part))
                                                    : Groupoid::from_group(group_from_name(part));
      out = out ? Groupoid::coproduct(*out, g) : g;
    }
    if (!out) {
      fail(Errc::ParseError, "empty groupoid spec");
    }
    return *out;
  }

  Json load_json(std::filesystem::path const& path) {
    std::ifstream in(path);
    if (!in) {
      fail(Errc::ParseError, "cannot read " + path.string());
    }
    try {
      return Json::parse(in);
    } catch (Json::exception const& e) {
      fail(Errc::ParseError, path.string() + ": " + e.what());
    }
  }

  void save_json(std::filesystem::path const& path, Json const& j) {
    std::ofstream out(path);
    if (!out) {
      fail(Errc::ParseError, "cannot write " + path.string());
    }
    out << j.dump(2) << '\n';
  }

  std::string kind_of(Json const& j) {
    if (!j.is_object()) {
      fail(Errc::SchemaError, "document is not an object");
    }
    if (j.contains("kind")) {
      auto k = field<std::string>(j, "kind");
      static char const* const known[]
          = {"group",   "groupoid", "gset",    "groupoid-set", "catgset", "catgroupoidset",
             "hom",     "functor",  "nat",     "witness",      "rig",     "ring",
             "classical", "double"};
      for (char const* name : known) {
        if (k == name) {
          return k;
        }
      }
      fail(Errc::SchemaError, "unknown kind \"" + k + "\"");
    }
    if (j.contains("mul")) {
      return "group";
    }
    if (j.contains("inv") && j.contains("src")) {
      return "groupoid";
    }
    if (j.contains("objects") && j.contains("arrows")) {
      return j.contains("groupoid") ? "catgroupoidset" : "catgset";
    }
    if (j.contains("sigma")) {
      return "groupoid-set";
    }
    if (j.contains("size")) {
      return "gset";
    }
    if (j.contains("map")) {
      return "hom";
    }
    if (j.contains("f0")) {
      return "functor";
    }
    if (j.contains("at")) {
      return "nat";
    }
    if (j.contains("forward")) {
      return "witness";
    }
    if (j.contains("classes")) {
      return "rig";
    }
    if (j.contains("pos")) {
      return "ring";
    }
    if (j.contains("orbits")) {
      return "classical";
    }
    fail(Errc::SchemaError, "cannot tell what kind of document this is");
  }

  Json to_json(Group const& g) {
    return {{"kind", "group"}, {"order", g.order()}, {"mul", g.table()}};
  }

  Group group_from_json(Json const& j, Context const& ctx) {
    if (j.is_string() && is_group_name(j.get<std::string>())) {
      return group_from_name(j.get<std::string>());
    }
    auto const [doc, sub] = deref(j, ctx);
    if (kind_of(doc) != "group") {
      fail(Errc::SchemaError, "expected a group");
    }
    auto const table = field<std::vector<std::vector<Index>>>(doc, "mul");
    if (doc.contains("order") && field<std::size_t>(doc, "order") != table.size()) {
      fail(Errc::SchemaError, "order disagrees with the table");
    }
    return Group::from_table(table);
  }

  Json to_json(Groupoid const& g) {
    std::vector<Index> src, tgt, ident, inv;
    for (Index a = 0; a < g.num_elements(); ++a) {
      src.push_back(g.source(a));
      tgt.push_back(g.target(a));
      inv.push_back(g.inverse(a));
    }
    for (Index x = 0; x < g.num_objects(); ++x) {
      ident.push_back(g.unit(x));
    }
    return {{"kind", "groupoid"}, {"objects", g.num_objects()},
            {"src", src},         {"tgt", tgt},
            {"ident", ident},     {"inv", inv},
            {"comp", triples_json(g.composition_triples())}};
  }

  Groupoid groupoid_from_json(Json const& j, Context const& ctx) {
    if (j.is_string() && is_groupoid_spec(j.get<std::string>())) {
      return groupoid_from_spec(j.get<std::string>());
    }
    auto const [doc, sub] = deref(j, ctx);
    auto const kind       = kind_of(doc);
    if (kind == "group") {
      return Groupoid::from_group(group_from_json(doc, sub));
    }
    if (kind != "groupoid") {
      fail(Errc::SchemaError, "expected a groupoid");
    }
    return Groupoid::make(field<std::size_t>(doc, "objects"), field<std::vector<Index>>(doc, "src"),
                          field<std::vector<Index>>(doc, "tgt"),
                          field<std::vector<Index>>(doc, "ident"),
                          field<std::vector<Index>>(doc, "inv"), triples(doc, "comp"));
  }

  std::variant<Group, Groupoid> acting_from_json(Json const& j, Context const& ctx) {
    if (j.is_string()) {
      auto const s = j.get<std::string>();
      if (is_group_name(s)) {
        return group_from_name(s);
      }
      if (is_groupoid_spec(s)) {
        return groupoid_from_spec(s);
      }
    }
    auto const [doc, sub] = deref(j, ctx);
    if (kind_of(doc) == "group") {
      return group_from_json(doc, sub);
    }
    return groupoid_from_json(doc, sub);
  }

  Json to_json(GSet const& x, bool with_group) {
    Json j = set_body(x);
    j["kind"] = "gset";
    if (with_group) {
      j["group"] = to_json(x.acting());
    }
    return j;
  }

  GSet gset_from_json(Json const& j, Context const& ctx) {
    auto const [doc, sub] = deref(j, ctx);
    return gset_body(group_from_json(field<Json>(doc, "group"), sub), doc);
  }

  Json to_json(GroupoidSet const& x, bool with_groupoid) {
    Json j = set_body(x);
    j["kind"] = "groupoid-set";
    if (with_groupoid) {
      j["groupoid"] = to_json(x.acting());
    }
    return j;
  }

  GroupoidSet groupoid_set_from_json(Json const& j, Context const& ctx) {
    auto const [doc, sub] = deref(j, ctx);
    return groupoid_set_body(groupoid_from_json(field<Json>(doc, "groupoid"), sub), doc);
  }

  Json to_json(CatGSet const& x) {
    return catset_json(x, "catgset");
  }

  Json to_json(CatGroupoidSet const& x) {
    return catset_json(x, "catgroupoidset");
  }

  AnyCatSet catset_from_json(Json const& j, Context const& ctx) {
    auto const kind = kind_of(j);
    if (kind == "catgset") {
      return catset_body(group_from_json(field<Json>(j, "group"), ctx), j);
    }
    if (kind == "catgroupoidset") {
      return catset_body(groupoid_from_json(field<Json>(j, "groupoid"), ctx), j);
    }
    fail(Errc::SchemaError, "expected a categorified set, got " + kind);
  }

  AnyCatSet load_catset(Json const& j, Context const& ctx) {
    auto const [doc, sub] = deref(j, ctx);
    return catset_from_json(doc, sub);
  }

  Json to_json(GroupHom const& h) {
    return {{"kind", "hom"},
            {"source", to_json(h.source())},
            {"target", to_json(h.target())},
            {"map", h.map()}};
  }

  GroupHom hom_from_json(Json const& j, Context const& ctx) {
    auto const [doc, sub] = deref(j, ctx);
    return GroupHom::make(group_from_json(field<Json>(doc, "source"), sub),
                          group_from_json(field<Json>(doc, "target"), sub),
                          field<std::vector<Index>>(doc, "map"));
  }

  Json to_json(WitnessTables const& w) {
    return {{"kind", "witness"},
            {"forward", {{"f0", w.forward0}, {"f1", w.forward1}}},
            {"backward", {{"f0", w.backward0}, {"f1", w.backward1}}},
            {"alpha", w.alpha},
            {"beta", w.beta}};
  }

  WitnessTables witness_from_json(Json const& j) {
    auto const fwd  = field<Json>(j, "forward");
    auto const back = field<Json>(j, "backward");
    return {field<std::vector<Index>>(fwd, "f0"),  field<std::vector<Index>>(fwd, "f1"),
            field<std::vector<Index>>(back, "f0"), field<std::vector<Index>>(back, "f1"),
            field<std::vector<Index>>(j, "alpha"), field<std::vector<Index>>(j, "beta")};
  }

  template <typename A>
  Json to_json(RigElement<A> const& u) {
    Json classes = Json::array();
    for (auto const& c : u.classes) {
      classes.push_back({{"key", c.key.hex()},
                         {"multiplicity", c.multiplicity},
                         {"objects", c.representative.num_objects()},
                         {"arrows", c.representative.num_arrows()},
                         {"skeletal", c.skeletal}});
    }
    return {{"kind", "rig"}, {acting_key<A>(), to_json(u.acting)}, {"classes", classes}};
  }

  template <typename A>
  Json to_json(RingElement<A> const& r) {
    return {{"kind", "ring"}, {"pos", to_json(r.pos)}, {"neg", to_json(r.neg)}};
  }

  template <typename A>
  Json to_json(ClassicalElement<A> const& c) {
    Json orbits = Json::array();
    for (auto const& [t, n] : c.counts) {
      orbits.push_back({{"object", t.object}, {"subgroup", t.subgroup}, {"multiplicity", n}});
    }
    return {{"kind", "classical"}, {acting_key<A>(), to_json(c.acting)}, {"orbits", orbits}};
  }

  AnyRig rig_from_json(Json const& j, Context const& ctx, Budget const& budget) {
    auto const [doc, sub] = deref(j, ctx);
    auto const kind       = kind_of(doc);
    if (kind == "rig") {
      if (doc.contains("groupoid")) {
        return rig_body(groupoid_from_json(doc.at("groupoid"), sub), doc, budget);
      }
      return rig_body(group_from_json(field<Json>(doc, "group"), sub), doc, budget);
    }
    return std::visit([&](auto const& x) -> AnyRig { return rig_class(x, budget); },
                      catset_from_json(doc, sub));
  }

  AnyRing ring_from_json(Json const& j, Context const& ctx, Budget const& budget) {
    auto const [doc, sub] = deref(j, ctx);
    if (kind_of(doc) != "ring") {
      return std::visit(
          [](auto const& u) -> AnyRing { return ring_make(u, rig_zero(u.acting)); },
          rig_from_json(doc, sub, budget));
    }
    auto pos = rig_from_json(field<Json>(doc, "pos"), sub, budget);
    auto neg = rig_from_json(field<Json>(doc, "neg"), sub, budget);
    if (pos.index() != neg.index()) {
      fail(Errc::GroupMismatch, "ring parts over different kinds of acting structure");
    }
    return std::visit(
        [&](auto const& p) -> AnyRing {
          using R = std::decay_t<decltype(p)>;
          return ring_make(p, std::get<R>(neg));
        },
        pos);
  }

  AnyClassical classical_from_json(Json const& j, Context const& ctx) {
    auto const [doc, sub] = deref(j, ctx);
    auto const kind       = kind_of(doc);
    if (kind == "classical") {
      if (doc.contains("groupoid")) {
        return classical_body(groupoid_from_json(doc.at("groupoid"), sub), doc);
      }
      return classical_body(group_from_json(field<Json>(doc, "group"), sub), doc);
    }
    if (kind == "gset") {
      return classical_class(gset_from_json(doc, sub));
    }
    if (kind == "groupoid-set") {
      return classical_class(groupoid_set_from_json(doc, sub));
    }
    fail(Errc::SchemaError, "expected a classical class or an action set, got " + kind);
  }

  Json to_json(DoubleCategory const& d) {
    auto pairs = [](std::vector<std::array<Index, 2>> const& v) {
      Json out = Json::array();
      for (auto const& [a, b] : v) {
        out.push_back({a, b});
      }
      return out;
    };
    return {{"kind", "double"},
            {"objects", d.num_objects},
            {"h", pairs(d.h)},
            {"h_src", d.h_src},
            {"h_tgt", d.h_tgt},
            {"v", d.num_vertical},
            {"squares", pairs(d.squares)},
            {"square_src", d.sq_src},
            {"square_tgt", d.sq_tgt},
            {"T", {{"objects", d.t0}, {"arrows", d.t1}}},
            {"S", {{"objects", d.s0}, {"arrows", d.s1}}},
            {"I", {{"objects", d.i0}, {"arrows", d.i1}}},
            {"M", {{"objects", triples_json(d.m0)}, {"arrows", triples_json(d.m1)}}}};
  }

  template Json to_json(RigElement<Group> const&);
  template Json to_json(RigElement<Groupoid> const&);
  template Json to_json(RingElement<Group> const&);
  template Json to_json(RingElement<Groupoid> const&);
  template Json to_json(ClassicalElement<Group> const&);
  template Json to_json(ClassicalElement<Groupoid> const&);

}  // namespace burncat::io
