#include <catch_amalgamated.hpp>

#include <cstdio>
#include <sys/wait.h>

#include "support.hpp"

using namespace burncat::test;
using burncat::io::Json;

namespace {

  struct Run {
    int  exit = -1;
    Json report;
  };

  Run run(std::string const& args) {
    std::string const cmd = std::string(BURNCAT_CLI) + " " + args + " 2>/dev/null";
    FILE*             pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe);
    std::string out;
    char        buf[4096];
    while (auto n = fread(buf, 1, sizeof buf, pipe)) {
      out.append(buf, n);
    }
    int const status = pclose(pipe);
    Run       r;
    r.exit   = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    r.report = Json::parse(out, nullptr, false);
    return r;
  }

  std::string data(char const* name) {
    return data_path(name).string();
  }

  std::string scratch(char const* name) {
    return (std::filesystem::temp_directory_path() / name).string();
  }

}  // namespace

TEST_CASE("validate") {
  auto const ok = run("validate " + data("span.json"));
  CHECK(ok.exit == 0);
  CHECK(ok.report.at("status") == "ok");
  CHECK(ok.report.at("command") == "validate");
  CHECK(ok.report.contains("timings"));

  auto const broken = run("validate " + data("broken_assoc.json"));
  CHECK(broken.exit == 2);
  auto const msg = broken.report.at("payload").at("error").at("message").get<std::string>();
  CHECK(msg.find("associativity at (1, 1, 1)") != std::string::npos);

  auto const unknown = run("validate " + data("unknown_kind.json"));
  CHECK(unknown.exit == 2);
  CHECK(unknown.report.at("payload").at("error").at("code") == "SchemaError");

  CHECK(run("validate " + data("absent.json")).exit == 2);
  CHECK(run("frobnicate").exit == 2);
}

TEST_CASE("weq and witnesses") {
  CHECK(run("weq " + data("span.json") + " " + data("span.json")).exit == 0);
  CHECK(run("weq " + data("walking_arrow.json") + " " + data("parallel_pair.json")).exit == 1);
  CHECK(run("weq " + data("walking_iso.json") + " " + data("c2_point.json")).exit == 2);

  auto const w = scratch("burncat_cli_witness.json");
  auto const r = run("weq " + data("walking_iso.json") + " " + data("point.json") + " --witness "
                     + w);
  CHECK(r.exit == 0);
  CHECK(run("check-witness " + data("walking_iso.json") + " " + data("point.json") + " " + w).exit
        == 0);
  // the witness does not fit the reverse direction
  CHECK(run("check-witness " + data("point.json") + " " + data("walking_iso.json") + " " + w).exit
        != 0);
  std::filesystem::remove(w);

  for (char const* strategy : {"skeleton", "search"}) {
    INFO(strategy);
    CHECK(run("weq --strategy " + std::string(strategy) + " " + data("c2_regular_discrete.json")
              + " " + data("c2_regular_discrete.json"))
              .exit
          == 0);
  }
}

TEST_CASE("structure commands") {
  auto const d = run("double " + data("point.json"));
  CHECK(d.exit == 0);
  auto const& counts = d.report.at("payload").at("counts");
  for (char const* key : {"objects", "horizontal", "vertical", "squares"}) {
    CHECK(counts.at(key) == 1);
  }

  auto const s = run("skeleton " + data("c2_no_skeleton.json"));
  CHECK(s.exit == 1);
  CHECK(s.report.at("payload").at("orbit") == Json::array({0, 1}));
  CHECK(run("skeleton " + data("walking_iso.json")).exit == 0);

  auto const o = run("orbits " + data("span.json"));
  CHECK(o.exit == 0);
  CHECK(o.report.at("payload").at("blocks").size() == 1);

  CHECK(run("split " + data("arrow_and_point.json")).exit == 0);
}

TEST_CASE("burnside commands") {
  auto const e = run("enumerate trivial 1");
  CHECK(e.exit == 0);
  CHECK(e.report.at("payload").at("classes").size() == 2);

  auto const image = scratch("burncat_cli_iota.json");
  CHECK(run("--out " + image + " iota " + data("c2_regular_classical.json")).exit == 0);
  CHECK(run("rig eq " + image + " " + data("c2_regular_discrete.json")).exit == 0);
  CHECK(run("rig eq " + image + " " + data("c2_no_skeleton.json")).exit == 1);
  std::filesystem::remove(image);
  CHECK(run("iota --preimage " + data("walking_arrow.json")).exit == 1);

  CHECK(run("ring eq " + data("span.json") + " " + data("span.json")).exit == 0);
  CHECK(run("induce " + data("trivial_to_c2.json") + " " + data("c2_no_skeleton.json")).exit == 0);
  CHECK(run("induce " + data("trivial_to_c2.json") + " " + data("point.json")).exit == 2);
  CHECK(run("cancel trivial 2").exit == 0);
  CHECK(run("decompose pair:2+C2 2").exit == 0);
  CHECK(run("--budget 1 enumerate trivial 3").exit == 2);
}
