// burncat: command-line front end.  Reports go to stdout as JSON, short
// summaries to stderr.  Exit status: 0 ok, 1 negative answer, 2 error.

#include <chrono>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "burncat/burnside.hpp"
#include "burncat/double_category.hpp"
#include "burncat/equivalence.hpp"
#include "burncat/groupoid_ext.hpp"
#include "burncat/io.hpp"

namespace {

  using namespace burncat;
  using io::Json;

  enum class Status { Ok, No, Error };

  char const* status_name(Status s) {
    switch (s) {
      case Status::Ok: return "ok";
      case Status::No: return "no";
      case Status::Error: return "error";
    }
    return "error";
  }

  struct Report {
    std::string command;
    Status      status = Status::Ok;
    Json        payload = Json::object();
    Json        timings = Json::object();
    std::string summary;
  };

  class Phase {
   public:
    Phase(Report& r, std::string name)
        : _r(r), _name(std::move(name)), _start(std::chrono::steady_clock::now()) {}
    ~Phase() {
      auto const ms = std::chrono::duration<double, std::milli>(
                          std::chrono::steady_clock::now() - _start)
                          .count();
      _r.timings[_name] = _r.timings.value(_name, 0.0) + ms;
    }

   private:
    Report&                               _r;
    std::string                           _name;
    std::chrono::steady_clock::time_point _start;
  };

  struct Options {
    std::optional<std::size_t> budget;
    std::string                out;
  };

  Budget budget_of(Options const& o) {
    Budget b = Budget::from_env();
    if (o.budget) {
      b.max_search_arrows      = *o.budget;
      b.max_enumeration_arrows = *o.budget;
    }
    return b;
  }

  struct Loaded {
    Json        doc;
    io::Context ctx;
  };

  Loaded load(std::string const& path) {
    std::filesystem::path p(path);
    return {io::load_json(p), io::Context{p.parent_path()}};
  }

  io::Context here() {
    return io::Context{std::filesystem::current_path()};
  }

  void write_artifact(Report& r, Options const& o, Json const& j) {
    if (o.out.empty()) {
      return;
    }
    Phase phase(r, "write");
    io::save_json(o.out, j);
    r.payload["artifact"] = o.out;
  }

  template <typename X, typename Y>
  void same_kind(X const& x, Y const& y) {
    if (x.index() != y.index()) {
      fail(Errc::GroupMismatch, "a group-set and a groupoid-set cannot be compared");
    }
  }

  Json catset_summary(auto const& x) {
    return {{"objects", x.num_objects()},
            {"arrows", x.num_arrows()},
            {"object_orbits", orbits(x.objects()).size()},
            {"arrow_orbits", orbits(x.arrows()).size()}};
  }

  // ---- validate -------------------------------------------------------------

  void cmd_validate(Report& r, std::string const& path) {
    Loaded f = [&] {
      Phase phase(r, "load");
      return load(path);
    }();
    Phase      phase(r, "validate");
    auto const kind   = io::kind_of(f.doc);
    r.payload["kind"] = kind;
    if (kind == "group") {
      auto const g             = io::group_from_json(f.doc, f.ctx);
      r.payload["order"]       = g.order();
      r.summary                = "valid group of order " + std::to_string(g.order());
    } else if (kind == "groupoid") {
      auto const g               = io::groupoid_from_json(f.doc, f.ctx);
      r.payload["objects"]       = g.num_objects();
      r.payload["arrows"]        = g.num_elements();
      r.summary                  = "valid groupoid";
    } else if (kind == "gset") {
      auto const x         = io::gset_from_json(f.doc, f.ctx);
      r.payload["size"]    = x.size();
      r.payload["orbits"]  = orbits(x).size();
      r.summary            = "valid group-set";
    } else if (kind == "groupoid-set") {
      auto const x         = io::groupoid_set_from_json(f.doc, f.ctx);
      r.payload["size"]    = x.size();
      r.payload["orbits"]  = orbits(x).size();
      r.summary            = "valid groupoid-set";
    } else if (kind == "catgset" || kind == "catgroupoidset") {
      auto const x = io::catset_from_json(f.doc, f.ctx);
      std::visit([&](auto const& c) { r.payload.update(catset_summary(c)); }, x);
      r.summary = "valid categorified set";
    } else if (kind == "hom") {
      io::hom_from_json(f.doc, f.ctx);
      r.summary = "valid homomorphism";
    } else if (kind == "rig" || kind == "ring") {
      io::ring_from_json(f.doc, f.ctx, Budget::from_env());
      r.summary = "valid " + kind + " element";
    } else if (kind == "classical") {
      io::classical_from_json(f.doc, f.ctx);
      r.summary = "valid classical element";
    } else {
      fail(Errc::SchemaError, kind + " files are checked against their instances, not alone");
    }
  }

  // ---- weak equivalence -----------------------------------------------------

  void cmd_weq(Report&            r,
               Options const&     o,
               std::string const& a,
               std::string const& b,
               std::string const& witness_out,
               std::string const& strategy_name) {
    io::AnyCatSet x = [&] {
      Phase phase(r, "load");
      auto  f = load(a);
      return io::catset_from_json(f.doc, f.ctx);
    }();
    io::AnyCatSet y = [&] {
      Phase phase(r, "load");
      auto  f = load(b);
      return io::catset_from_json(f.doc, f.ctx);
    }();
    same_kind(x, y);
    Strategy strategy = Strategy::Auto;
    if (strategy_name == "skeleton") {
      strategy = Strategy::Skeleton;
    } else if (strategy_name == "search") {
      strategy = Strategy::Search;
    }
    std::visit(
        [&](auto const& xs) {
          using C   = std::decay_t<decltype(xs)>;
          auto& ys  = std::get<C>(y);
          auto  dec = [&] {
            Phase phase(r, "decide");
            return decide_weak_equivalence(xs, ys, budget_of(o), strategy);
          }();
          r.payload["route"] = to_string(dec.route);
          if (dec.witness) {
            auto const t = tables(*dec.witness);
            {
              Phase phase(r, "recheck");
              auto const check = check_witness(xs, ys, t);
              if (!check.ok) {
                fail(Errc::CategoryAxiomViolated, "witness failed its own check: " + check.reason);
              }
            }
            r.payload["witness"] = io::to_json(t);
            if (!witness_out.empty()) {
              Phase phase(r, "write");
              io::save_json(witness_out, io::to_json(t));
              r.payload["witness_file"] = witness_out;
            }
            r.summary = std::string("weakly equivalent (") + to_string(dec.route) + ")";
          } else if (dec.route == Route::NotApplicable) {
            r.status  = Status::Error;
            r.summary = "the skeleton strategy cannot decide this pair";
          } else {
            r.status  = Status::No;
            r.summary = std::string("not weakly equivalent (") + to_string(dec.route) + ")";
          }
        },
        x);
  }

  void cmd_check_witness(Report&            r,
                         std::string const& a,
                         std::string const& b,
                         std::string const& witness) {
    auto fx = load(a);
    auto fy = load(b);
    auto fw = load(witness);
    auto x  = io::catset_from_json(fx.doc, fx.ctx);
    auto y  = io::catset_from_json(fy.doc, fy.ctx);
    same_kind(x, y);
    auto const t = io::witness_from_json(fw.doc);
    Phase      phase(r, "check");
    std::visit(
        [&](auto const& xs) {
          using C          = std::decay_t<decltype(xs)>;
          auto const check = check_witness(xs, std::get<C>(y), t);
          if (check.ok) {
            r.summary = "witness valid";
          } else {
            r.status            = Status::No;
            r.payload["reason"] = check.reason;
            r.summary           = "witness rejected: " + check.reason;
          }
        },
        x);
  }

  // ---- constructions --------------------------------------------------------

  void cmd_skeleton(Report& r, Options const& o, std::string const& path) {
    auto f = load(path);
    auto x = io::catset_from_json(f.doc, f.ctx);
    std::visit(
        [&](auto const& xs) {
          auto const res = [&] {
            Phase phase(r, "skeleton");
            return skeleton(xs);
          }();
          if (auto const* s = std::get_if<0>(&res)) {
            r.payload["objects"] = s->part.objects;
            r.payload["arrows"]  = s->part.arrows;
            {
              Phase phase(r, "retraction");
              r.payload["retracts"] = skeleton_retraction(xs, *s).has_value();
            }
            write_artifact(r, o, io::to_json(s->part.sub));
            r.summary = "skeleton on " + std::to_string(s->part.objects.size()) + " objects";
          } else {
            auto const& obs        = std::get<1>(res);
            r.status               = Status::No;
            r.payload["orbit"]     = obs.orbit;
            r.payload["iso_class"] = obs.iso_class;
            r.summary              = "no equivariant skeleton";
          }
        },
        x);
  }

  void cmd_orbits(Report& r, std::string const& path) {
    auto f = load(path);
    auto x = io::catset_from_json(f.doc, f.ctx);
    std::visit(
        [&](auto const& xs) {
          Phase phase(r, "partition");
          Json  blocks = Json::array();
          for (auto const& b : sqre_orbit_partition(xs)) {
            blocks.push_back({{"representative", b.representative},
                              {"objects", b.part.objects},
                              {"arrows", b.part.arrows}});
          }
          r.summary           = std::to_string(blocks.size()) + " block(s)";
          r.payload["blocks"] = std::move(blocks);
        },
        x);
  }

  void cmd_split(Report& r, Options const& o, std::string const& path) {
    auto f = load(path);
    auto x = io::catset_from_json(f.doc, f.ctx);
    std::visit(
        [&](auto const& xs) {
          auto const s = [&] {
            Phase phase(r, "split");
            return split_discrete(xs);
          }();
          r.payload["discrete"]    = {{"objects", s.discrete.objects}, {"arrows", s.discrete.arrows}};
          r.payload["nondiscrete"] = {{"objects", s.nondiscrete.objects},
                                      {"arrows", s.nondiscrete.arrows}};
          write_artifact(r, o,
                         {{"discrete", io::to_json(s.discrete.sub)},
                          {"nondiscrete", io::to_json(s.nondiscrete.sub)}});
          r.summary = std::to_string(s.discrete.objects.size()) + " object(s) in discrete part, "
                      + std::to_string(s.nondiscrete.objects.size()) + " in the rest";
        },
        x);
  }

  void cmd_double(Report& r, Options const& o, std::string const& path) {
    auto f = load(path);
    auto x = io::catset_from_json(f.doc, f.ctx);
    std::visit(
        [&](auto const& xs) {
          auto const d = [&] {
            Phase phase(r, "construct");
            return translation_double(xs);
          }();
          std::vector<std::string> violations;
          {
            Phase phase(r, "verify");
            violations = verify_double_axioms(d);
          }
          r.payload["counts"] = {{"objects", d.num_objects},
                                 {"horizontal", d.h.size()},
                                 {"vertical", d.num_vertical},
                                 {"squares", d.squares.size()}};
          r.payload["violations"] = violations;
          write_artifact(r, o, io::to_json(d));
          if (!violations.empty()) {
            r.status  = Status::No;
            r.summary = std::to_string(violations.size()) + " axiom violation(s)";
          } else {
            r.summary = std::to_string(d.squares.size()) + " squares, axioms hold";
          }
        },
        x);
  }

  // ---- rig and ring ---------------------------------------------------------

  void cmd_rig(Report&                         r,
               Options const&                  o,
               std::string const&              op,
               std::vector<std::string> const& paths) {
    auto const       budget = budget_of(o);
    std::vector<io::AnyRig> items;
    {
      Phase phase(r, "load");
      for (auto const& p : paths) {
        auto f = load(p);
        items.push_back(io::rig_from_json(f.doc, f.ctx, budget));
      }
    }
    if (items.empty() || (op == "eq" && items.size() != 2)) {
      fail(Errc::SchemaError, "rig " + op + " needs " + (op == "eq" ? "two" : "at least one")
                                  + " operand(s)");
    }
    for (auto const& it : items) {
      same_kind(items.front(), it);
    }
    Phase phase(r, "compute");
    std::visit(
        [&](auto const& first) {
          using U = std::decay_t<decltype(first)>;
          if (op == "eq") {
            bool const eq      = rig_equal(first, std::get<U>(items[1]), budget);
            r.status           = eq ? Status::Ok : Status::No;
            r.payload["equal"] = eq;
            r.summary          = eq ? "equal" : "not equal";
            return;
          }
          U acc = first;
          for (std::size_t i = 1; i < items.size(); ++i) {
            acc = op == "add" ? rig_add(acc, std::get<U>(items[i]), budget)
                              : rig_mul(acc, std::get<U>(items[i]), budget);
          }
          r.payload["result"] = io::to_json(acc);
          write_artifact(r, o, io::to_json(acc));
          r.summary = std::to_string(acc.size()) + " block class(es) counted with multiplicity";
        },
        items.front());
  }

  void cmd_ring(Report&                         r,
                Options const&                  o,
                std::string const&              op,
                std::vector<std::string> const& paths) {
    auto const budget = budget_of(o);
    std::vector<io::AnyRing> items;
    {
      Phase phase(r, "load");
      for (auto const& p : paths) {
        auto f = load(p);
        items.push_back(io::ring_from_json(f.doc, f.ctx, budget));
      }
    }
    std::size_t const want = op == "eq" ? 2 : op == "neg" ? 1 : 0;
    if (items.empty() || (want != 0 && items.size() != want)) {
      fail(Errc::SchemaError, "wrong number of operands for ring " + op);
    }
    for (auto const& it : items) {
      same_kind(items.front(), it);
    }
    Phase phase(r, "compute");
    std::visit(
        [&](auto const& first) {
          using R = std::decay_t<decltype(first)>;
          if (op == "eq") {
            bool const eq      = ring_equal(first, std::get<R>(items[1]), budget);
            r.status           = eq ? Status::Ok : Status::No;
            r.payload["equal"] = eq;
            r.summary          = eq ? "equal" : "not equal";
            return;
          }
          R acc = op == "neg" ? ring_neg(first) : first;
          for (std::size_t i = 1; i < items.size(); ++i) {
            acc = op == "add" ? ring_add(acc, std::get<R>(items[i]), budget)
                              : ring_mul(acc, std::get<R>(items[i]), budget);
          }
          r.payload["result"] = io::to_json(acc);
          write_artifact(r, o, io::to_json(acc));
          r.summary = "ring " + op + " done";
        },
        items.front());
  }

  void cmd_iota(Report& r, Options const& o, std::string const& path, bool preimage) {
    auto       f      = load(path);
    auto const budget = budget_of(o);
    if (preimage) {
      auto u = io::rig_from_json(f.doc, f.ctx, budget);
      std::visit(
          [&](auto const& us) {
            auto const c = [&] {
              Phase phase(r, "preimage");
              return iota_preimage(us);
            }();
            if (c) {
              r.payload["result"] = io::to_json(*c);
              write_artifact(r, o, io::to_json(*c));
              r.summary = "in the image of the classical rig";
            } else {
              r.status  = Status::No;
              r.summary = "not in the image of the classical rig";
            }
          },
          u);
      return;
    }
    auto c = io::classical_from_json(f.doc, f.ctx);
    std::visit(
        [&](auto const& cs) {
          auto const u = [&] {
            Phase phase(r, "include");
            return iota_rig(cs, budget);
          }();
          r.payload["result"] = io::to_json(u);
          write_artifact(r, o, io::to_json(u));
          r.summary = "included " + std::to_string(u.size()) + " orbit class(es)";
        },
        c);
  }

  void cmd_induce(Report& r, Options const& o, std::string const& hom_path, std::string const& path) {
    auto       fh     = load(hom_path);
    auto const phi    = io::hom_from_json(fh.doc, fh.ctx);
    auto       f      = load(path);
    auto const kind   = io::kind_of(f.doc);
    auto const budget = budget_of(o);
    Phase      phase(r, "induce");
    Json       out;
    if (kind == "gset") {
      out = io::to_json(induce(phi, io::gset_from_json(f.doc, f.ctx)));
    } else if (kind == "catgset") {
      out = io::to_json(induce(phi, std::get<CatGSet>(io::catset_from_json(f.doc, f.ctx))));
    } else if (kind == "classical") {
      auto c = io::classical_from_json(f.doc, f.ctx);
      if (c.index() != 0) {
        fail(Errc::GroupMismatch, "induction is along group homomorphisms");
      }
      out = io::to_json(induce_classical(phi, std::get<0>(c)));
    } else if (kind == "rig") {
      auto u = io::rig_from_json(f.doc, f.ctx, budget);
      if (u.index() != 0) {
        fail(Errc::GroupMismatch, "induction is along group homomorphisms");
      }
      out = io::to_json(induce_rig(phi, std::get<0>(u), budget));
    } else {
      fail(Errc::SchemaError, "cannot induce a " + kind);
    }
    r.payload["result"] = out;
    write_artifact(r, o, out);
    r.summary = "induced " + kind + " along a homomorphism of orders "
                + std::to_string(phi.source().order()) + " -> "
                + std::to_string(phi.target().order());
  }

  // ---- enumeration and experiments ------------------------------------------

  void cmd_enumerate(Report& r, Options const& o, std::string const& acting, std::size_t n) {
    auto const a = io::acting_from_json(Json(acting), here());
    std::visit(
        [&](auto const& g) {
          auto const classes = [&] {
            Phase phase(r, "enumerate");
            return enumerate_classes(g, n, budget_of(o));
          }();
          Json list = Json::array();
          for (auto const& c : classes) {
            list.push_back({{"class", io::to_json(c.element)},
                            {"representative", io::to_json(c.representative)}});
          }
          r.payload["count"]   = classes.size();
          r.payload["classes"] = list;
          write_artifact(r, o, list);
          r.summary = std::to_string(classes.size()) + " class(es) with at most "
                      + std::to_string(n) + " arrow(s)";
        },
        a);
  }

  void cmd_cancel(Report& r, Options const& o, std::string const& acting, std::size_t bound) {
    auto const a   = io::acting_from_json(Json(acting), here());
    auto const rep = std::visit(
        [&](auto const& g) {
          Phase phase(r, "cancel");
          return test_cancellation(g, bound, budget_of(o));
        },
        a);
    r.payload["instances"]       = rep.instances;
    r.payload["triples"]         = rep.triples;
    r.payload["counterexamples"] = rep.counterexamples;
    if (rep.counterexamples.empty()) {
      r.summary = "no counterexample among " + std::to_string(rep.triples) + " triples";
    } else {
      r.status  = Status::No;
      r.summary = std::to_string(rep.counterexamples.size()) + " counterexample(s)";
      for (auto const& c : rep.counterexamples) {
        std::cerr << c << '\n';
      }
    }
  }

  void cmd_decompose(Report& r, Options const& o, std::string const& groupoid, std::size_t bound) {
    auto const a = io::acting_from_json(Json(groupoid), here());
    Groupoid   g = std::holds_alternative<Group>(a) ? Groupoid::from_group(std::get<Group>(a))
                                                    : std::get<Groupoid>(a);
    auto const rep = [&] {
      Phase phase(r, "decompose");
      return decompose_ring(g, bound, budget_of(o));
    }();
    Json comps = Json::array();
    for (auto const& c : rep.components) {
      comps.push_back({{"objects", c.objects},
                       {"isotropy_order", c.isotropy_order},
                       {"classes", c.classes}});
    }
    r.payload = {{"components", comps},
                 {"groupoid_classes", rep.groupoid_classes},
                 {"tuples", rep.tuples},
                 {"injective", rep.injective},
                 {"surjective", rep.surjective},
                 {"sums_checked", rep.sums_checked},
                 {"products_checked", rep.products_checked},
                 {"squares_checked", rep.squares_checked},
                 {"failures", rep.failures},
                 {"star", "least arrow from the base object (non-canonical choice)"}};
    r.status  = rep.ok() ? Status::Ok : Status::No;
    r.summary = std::to_string(rep.groupoid_classes) + " classes against "
                + std::to_string(rep.tuples) + " tuples, "
                + (rep.ok() ? "bijection" : "mismatch");
  }

  int emit(Report const& r) {
    Json out = {{"command", r.command},
                {"status", status_name(r.status)},
                {"payload", r.payload},
                {"timings", r.timings}};
    std::cout << out.dump(2) << '\n';
    if (!r.summary.empty()) {
      std::cerr << r.command << ": " << r.summary << '\n';
    }
    switch (r.status) {
      case Status::Ok: return 0;
      case Status::No: return 1;
      case Status::Error: return 2;
    }
    return 2;
  }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Finite categorified group-sets and groupoid-sets"};
  app.require_subcommand(1);
  app.fallthrough();
  Options opts;
  app.add_option("--budget", opts.budget,
                 "arrow limit for exhaustive searches (default 8 for equivalence, 4 for "
                 "enumeration, or BURNCAT_BUDGET)");
  app.add_option("--out", opts.out, "write the command's artifact to this file");

  Report r;
  std::string path_a, path_b, path_c, witness_out, strategy = "auto", op, acting;
  std::vector<std::string> paths;
  std::size_t              count    = 0;
  bool                     preimage = false;
  std::function<void()>    run;

  auto* validate = app.add_subcommand("validate", "check a file of any kind");
  validate->add_option("file", path_a)->required();
  validate->callback([&] { run = [&] { cmd_validate(r, path_a); }; });

  auto* weq = app.add_subcommand("weq", "decide weak equivalence");
  weq->add_option("x", path_a)->required();
  weq->add_option("y", path_b)->required();
  weq->add_option("--witness", witness_out, "write the witness here on success");
  weq->add_option("--strategy", strategy)->check(CLI::IsMember({"auto", "skeleton", "search"}));
  weq->callback([&] { run = [&] { cmd_weq(r, opts, path_a, path_b, witness_out, strategy); }; });

  auto* check = app.add_subcommand("check-witness", "re-check a weak equivalence witness");
  check->add_option("x", path_a)->required();
  check->add_option("y", path_b)->required();
  check->add_option("witness", path_c)->required();
  check->callback([&] { run = [&] { cmd_check_witness(r, path_a, path_b, path_c); }; });

  auto* skel = app.add_subcommand("skeleton", "equivariant skeleton or its obstruction");
  skel->add_option("file", path_a)->required();
  skel->callback([&] { run = [&] { cmd_skeleton(r, opts, path_a); }; });

  auto* orb = app.add_subcommand("orbits", "blocks of the square relation");
  orb->add_option("file", path_a)->required();
  orb->callback([&] { run = [&] { cmd_orbits(r, path_a); }; });

  auto* split = app.add_subcommand("split", "discrete and non-discrete parts");
  split->add_option("file", path_a)->required();
  split->callback([&] { run = [&] { cmd_split(r, opts, path_a); }; });

  auto* dbl = app.add_subcommand("double", "translation double category");
  dbl->add_option("file", path_a)->required();
  dbl->callback([&] { run = [&] { cmd_double(r, opts, path_a); }; });

  auto* rig = app.add_subcommand("rig", "categorified Burnside rig arithmetic");
  rig->add_option("op", op)->required()->check(CLI::IsMember({"add", "mul", "eq"}));
  rig->add_option("files", paths)->required();
  rig->callback([&] { run = [&] { cmd_rig(r, opts, op, paths); }; });

  auto* ring = app.add_subcommand("ring", "categorified Burnside ring arithmetic");
  ring->add_option("op", op)->required()->check(CLI::IsMember({"add", "mul", "eq", "neg"}));
  ring->add_option("files", paths)->required();
  ring->callback([&] { run = [&] { cmd_ring(r, opts, op, paths); }; });

  auto* iota = app.add_subcommand("iota", "include a classical class");
  iota->add_option("file", path_a)->required();
  iota->add_flag("--preimage", preimage, "invert the inclusion on a rig element");
  iota->callback([&] { run = [&] { cmd_iota(r, opts, path_a, preimage); }; });

  auto* induce_cmd = app.add_subcommand("induce", "induce along a group homomorphism");
  induce_cmd->add_option("hom", path_a)->required();
  induce_cmd->add_option("file", path_b)->required();
  induce_cmd->callback([&] { run = [&] { cmd_induce(r, opts, path_a, path_b); }; });

  auto* enumerate = app.add_subcommand("enumerate", "weak equivalence classes by arrow count");
  enumerate->add_option("acting", acting, "group name, groupoid spec or file")->required();
  enumerate->add_option("n", count)->required();
  enumerate->callback([&] { run = [&] { cmd_enumerate(r, opts, acting, count); }; });

  auto* cancel = app.add_subcommand("cancel", "additive cancellation experiment");
  cancel->add_option("acting", acting)->required();
  cancel->add_option("bound", count)->required();
  cancel->callback([&] { run = [&] { cmd_cancel(r, opts, acting, count); }; });

  auto* decompose = app.add_subcommand("decompose", "decomposition over groupoid components");
  decompose->add_option("groupoid", acting)->required();
  decompose->add_option("bound", count)->required();
  decompose->callback([&] { run = [&] { cmd_decompose(r, opts, acting, count); }; });

  try {
    app.parse(argc, argv);
  } catch (CLI::CallForHelp const& e) {
    return app.exit(e);
  } catch (CLI::CallForAllHelp const& e) {
    return app.exit(e);
  } catch (CLI::ParseError const& e) {
    r.command          = "usage";
    r.status           = Status::Error;
    r.payload["error"] = {{"code", "UsageError"}, {"message", e.what()}};
    r.summary          = e.what();
    return emit(r);
  }

  r.command = app.get_subcommands().front()->get_name();
  try {
    run();
  } catch (Error const& e) {
    r.status           = Status::Error;
    r.payload["error"] = {{"code", to_string(e.code())}, {"message", e.what()}};
    r.summary          = e.what();
  } catch (std::exception const& e) {
    r.status           = Status::Error;
    r.payload["error"] = {{"code", "Internal"}, {"message", e.what()}};
    r.summary          = e.what();
  }
  return emit(r);
}
