#ifndef BURNCAT_IO_HPP_
#define BURNCAT_IO_HPP_

#include <filesystem>
#include <string>
#include <variant>

#include <json.hpp>

#include "burncat/burnside.hpp"
#include "burncat/double_category.hpp"
#include "burncat/equivalence.hpp"

namespace burncat::io {

  using Json = nlohmann::json;

  //! trivial, C<n>, S<n>, and products of these joined by 'x' (C2xC2).
  Group group_from_name(std::string const& name);
  //! '+'-separated parts, each pair:<n>, discrete:<n> or a group name.
  Groupoid groupoid_from_spec(std::string const& spec);

  //! Relative file references inside a document resolve against dir.
  struct Context {
    std::filesystem::path dir;
  };

  //! Throws ParseError for unreadable files and malformed JSON.
  Json load_json(std::filesystem::path const& path);
  void save_json(std::filesystem::path const& path, Json const& j);

  //! The "kind" field, or a kind inferred from the fields present.  Throws
  //! SchemaError when neither works.
  std::string kind_of(Json const& j);

  Json     to_json(Group const& g);
  Group    group_from_json(Json const& j, Context const& ctx);
  Json     to_json(Groupoid const& g);
  Groupoid groupoid_from_json(Json const& j, Context const& ctx);
  //! Either a group or a groupoid, from a name, spec, path or document.
  std::variant<Group, Groupoid> acting_from_json(Json const& j, Context const& ctx);

  Json        to_json(GSet const& x, bool with_group = true);
  GSet        gset_from_json(Json const& j, Context const& ctx);
  Json        to_json(GroupoidSet const& x, bool with_groupoid = true);
  GroupoidSet groupoid_set_from_json(Json const& j, Context const& ctx);

  using AnyCatSet = std::variant<CatGSet, CatGroupoidSet>;

  Json      to_json(CatGSet const& x);
  Json      to_json(CatGroupoidSet const& x);
  AnyCatSet catset_from_json(Json const& j, Context const& ctx);
  //! Loads a categorified set from a document or a path to one.
  AnyCatSet load_catset(Json const& j, Context const& ctx);

  Json     to_json(GroupHom const& h);
  GroupHom hom_from_json(Json const& j, Context const& ctx);

  template <typename A>
  Json to_json(InternalFunctor<A> const& f) {
    return {{"kind", "functor"}, {"f0", f.f0()}, {"f1", f.f1()}};
  }

  Json          to_json(WitnessTables const& w);
  WitnessTables witness_from_json(Json const& j);

  template <typename A>
  Json                    to_json(RigElement<A> const& u);
  template <typename A>
  Json                    to_json(RingElement<A> const& r);
  template <typename A>
  Json                    to_json(ClassicalElement<A> const& c);

  using AnyRig       = std::variant<RigElement<Group>, RigElement<Groupoid>>;
  using AnyRing      = std::variant<RingElement<Group>, RingElement<Groupoid>>;
  using AnyClassical = std::variant<ClassicalElement<Group>, ClassicalElement<Groupoid>>;

  //! A rig file, or any categorified set (taken as its class).
  AnyRig rig_from_json(Json const& j, Context const& ctx, Budget const& budget);
  //! A ring file whose parts are rig documents, instances or paths.
  AnyRing ring_from_json(Json const& j, Context const& ctx, Budget const& budget);
  //! A classical file, or an action set (taken as its class).
  AnyClassical classical_from_json(Json const& j, Context const& ctx);

  Json to_json(DoubleCategory const& d);

}  // namespace burncat::io

#endif  // BURNCAT_IO_HPP_
