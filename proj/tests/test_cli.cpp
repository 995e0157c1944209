#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli/commands.hpp"
#include "homalg/fixtures.hpp"
#include "homalg/io.hpp"
#include "homalg/twisting.hpp"
#include "json.hpp"

using namespace homalg;
using nlohmann::json;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

json run_json(std::vector<std::string> args, int expected_code) {
  args.insert(args.begin(), "--json");
  const Run r = run(args);
  CHECK(r.code == expected_code);
  return json::parse(r.out);
}

class TempFile {
 public:
  explicit TempFile(const std::string& name, const std::string& content = "")
      : path_(std::filesystem::temp_directory_path() / ("homalg_cli_" + name)) {
    if (!content.empty()) std::ofstream(path_) << content;
  }
  ~TempFile() { std::filesystem::remove(path_); }
  std::string str() const { return path_.string(); }

 private:
  std::filesystem::path path_;
};

}  // namespace

TEST_CASE("check exit codes") {
  CHECK(run({"check", "ex-non-adjoint", "--hom-associative"}).code == 0);
  CHECK(run({"check", "ex-non-adjoint", "--associative", "--commutative"}).code == 0);
  const Run ids = run({"check", "ex-non-adjoint", "--unital-identities"});
  CHECK(ids.code == 1);
  CHECK(ids.out.find("alpha-adjoint") != std::string::npos);
  CHECK(ids.out.find("witness") != std::string::npos);
  CHECK(run({"check", "unital-nonassoc-3d", "--associative"}).code == 1);
  CHECK(run({"check", "no-such-thing"}).code == 2);
  CHECK(run({"check"}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({"--help"}).code == 0);
}

TEST_CASE("check reports json with witnesses") {
  const json j = run_json({"check", "ex-non-adjoint", "--unital-identities"}, 1);
  CHECK(j["passed"] == false);
  const json& suite = j["checks"][0];
  CHECK(suite["check"] == "unital-identities");
  CHECK(suite["diagnostic"] == true);
  const json& first = suite["identities"][0];
  CHECK(first["id"] == "alpha-adjoint");
  CHECK(first["status"] == "fail");
  CHECK(first["witness"]["indices"].size() == 2);
}

TEST_CASE("malformed alpha is a usage error") {
  TempFile bad("bad_alpha.json", R"({"field":"Q","dim":2,"alpha":[["1","0"],["0","1"],["0","0"]]})");
  const Run r = run({"check", bad.str()});
  CHECK(r.code == 2);
  CHECK(r.err.find("alpha") != std::string::npos);
}

TEST_CASE("check of a saved file") {
  TempFile f("dual.json", dump_algebra_file(load_fixture("dual-numbers-q").file));
  CHECK(run({"check", f.str(), "--units", "--weak-unit-identities", "--obstruction"}).code == 0);
  CHECK(run({"check", "ex-non-adjoint", "--obstruction"}).code == 1);
}

TEST_CASE("analyze") {
  const json id = run_json({"analyze", "dual-numbers-q"}, 0);
  CHECK(id["codim"]["codim_im_alpha"] == 0);
  CHECK(id["codim"]["predicted_associative"] == true);

  const json uv = run_json({"analyze", "unital-nonassoc-3d"}, 0);
  CHECK(uv["codim"]["codim_im_alpha"] == 3);
  CHECK(uv["codim"]["actual_associative"] == false);
  CHECK(uv["codim"]["clause"] == "none");

  const json trunc = run_json({"analyze", "ex-dim-two-kernel", "--degree-bound", "6"}, 0);
  CHECK(trunc["kernel"]["dim"] == 2);
  CHECK(trunc["hom_associative_in_bound"]["passed"] == true);
  CHECK(trunc["associative_in_bound"]["passed"] == false);

  CHECK(run({"analyze", "ex-non-adjoint"}).code == 1);  // no unit
  for (const auto& f : fixture_ids()) {
    CAPTURE(f);
    const Run r = run({"--json", "analyze", f});
    CHECK(r.code != 2);
    CHECK_NOTHROW((void)json::parse(r.out));
  }
}

TEST_CASE("twist and detwist") {
  TempFile alpha("alpha.json", R"({"alpha":[["1","0"],["0","2"]]})");
  TempFile out("twisted.json");
  CHECK(run({"twist", "dual-numbers-q", "--mode", "yau", "--alpha", alpha.str(), "--out", out.str()}).code == 0);
  const json d = run_json({"detwist", out.str()}, 0);
  CHECK(d["round_trip"] == true);
  CHECK(d["left_unit"] == json::array({"1", "0"}));
  CHECK(d["detwisted"]["products"] == json::parse(dump_algebra_file(load_fixture("dual-numbers-q").file))["products"]);

  TempFile bad("bad_endo.json", R"({"alpha":[["1","1"],["0","1"]]})");
  const json e = run_json({"twist", "dual-numbers-q", "--mode", "yau", "--alpha", bad.str()}, 1);
  CHECK(e["error"] == "NotEndomorphism");
  CHECK(run({"twist", "dual-numbers-q", "--mode", "sideways"}).code == 2);
  CHECK(run({"detwist", "ex-non-adjoint"}).code == 1);
}

TEST_CASE("enumerate-twists") {
  const json j = run_json({"enumerate-twists", "gf2-componentwise"}, 0);
  CHECK(j["count"] == 4);
  CHECK(run_json({"enumerate-twists", "mat2-gf2"}, 0)["count"] == 2);
  CHECK(run({"enumerate-twists", "dual-numbers-q"}).code == 2);
  TempFile cands("cands.json", R"({"candidates":[["1","0"],["0","1"]]})");
  CHECK(run_json({"enumerate-twists", "dual-numbers-q", "--candidates", cands.str()}, 0)["count"] == 2);
  CHECK(run({"--budget", "1", "enumerate-twists", "mat2-gf2"}).code == 1);
  CHECK(run({"enumerate-twists", "ex-non-adjoint"}).code == 1);
}

TEST_CASE("search") {
  TempFile spec("spec.json",
                R"({"field":{"GF":2},"dim":2,"constraints":["unital:0","hom-associative","not-associative"],"goal":"find-model"})");
  const json j = run_json({"search", spec.str()}, 0);
  CHECK(j["status"] == "exhausted-none");
  CHECK(j["nodes_explored"].get<std::uint64_t>() > 0);
  CHECK(run_json({"search", spec.str(), "--naive"}, 0)["status"] == "exhausted-none");

  TempFile count("count.json", R"({"field":{"GF":2},"dim":1,"constraints":["hom-associative"],"goal":"count-models"})");
  CHECK(run_json({"search", count.str()}, 0)["count"] == 4);

  TempFile big("big.json", R"({"field":{"GF":2},"dim":3,"constraints":["hom-associative"],"goal":"count-models"})");
  const Run r = run({"--budget", "5000", "search", big.str(), "--progress"});
  CHECK(r.code == 0);
  CHECK(r.out.find("budget-exceeded") != std::string::npos);

  TempFile bad("bad_spec.json", R"({"field":{"GF":2},"dim":1,"goal":"win"})");
  CHECK(run({"search", bad.str()}).code == 2);

  std::atomic<bool> stop{true};
  cli::set_interrupt_flag(&stop);
  const Run stopped = run({"search", big.str()});
  cli::set_interrupt_flag(nullptr);
  CHECK(stopped.code == 1);
  CHECK(stopped.out.find("interrupted") != std::string::npos);
}

TEST_CASE("fixture command") {
  const Run list = run({"fixture", "--list"});
  CHECK(list.code == 0);
  for (const auto& f : fixture_ids()) CHECK(list.out.find(f) != std::string::npos);
  const Run one = run({"fixture", "mat2-gf2"});
  CHECK(one.code == 0);
  CHECK(parse_algebra_file(one.out) == load_fixture("mat2-gf2").file);
  const Run trunc = run({"--degree-bound", "4", "fixture", "ex-dim-two-kernel"});
  CHECK(parse_algebra_file(trunc.out).algebra.dim() == 6);
  CHECK(run({"--degree-bound", "1", "fixture", "ex-dim-two-kernel"}).code == 2);

  const Run a = run({"--seed", "9", "fixture", "random", "--recipe", "yau", "--dim", "3", "--field", "GF:5"});
  const Run b = run({"--seed", "9", "fixture", "random", "--recipe", "yau", "--dim", "3", "--field", "GF:5"});
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  CHECK(check_hom_associative(parse_algebra_file(a.out).hom_algebra()).passed);
  CHECK(run({"fixture", "random", "--field", "GF:4"}).code == 2);
  CHECK(run({"fixture", "random", "--recipe", "nope"}).code == 2);
}

TEST_CASE("every command emits valid json on every fixture") {
  for (const auto& f : fixture_ids()) {
    CAPTURE(f);
    for (const std::vector<std::string>& cmd :
         {std::vector<std::string>{"check", f, "--hom-associative", "--units"}, {"detwist", f}, {"fixture", f}}) {
      std::vector<std::string> args = {"--json"};
      args.insert(args.end(), cmd.begin(), cmd.end());
      const Run r = run(args);
      CHECK(r.code != 2);
      CHECK_NOTHROW((void)json::parse(r.out));
    }
  }
}
