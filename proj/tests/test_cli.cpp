#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "doctest.h"
#include "json.hpp"
#include "lieflag/polyring.hpp"
#include "lieflag/serialize.hpp"

using lieflag::cli::run;

namespace {

struct Out {
  int code;
  std::string out;
  std::string err;
};

Out call(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("poincare emits a parseable polynomial and the dimension") {
  auto r = call({"poincare", "--type", "E6", "--variety", "1,6"});
  REQUIRE(r.code == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["dimension"] == 24);
  CHECK(lieflag::poly_from_json(j).value_at_one() == 270);
  auto c = call({"poincare", "--type", "E6", "--variety", "2", "--conormed", "--format", "text"});
  CHECK(c.code == 0);
  CHECK(c.out.find("dimension 21") != std::string::npos);
}

TEST_CASE("global flags may come before or after the verb") {
  auto a = call({"--format", "text", "jinv", "poly", "--group", "2E6", "--j", "1,0,0"});
  auto b = call({"jinv", "poly", "--group", "2E6", "--j", "1,0,0", "--format", "text"});
  CHECK(a.code == 0);
  CHECK(a.out == "1 + t^3\n");
  CHECK(a.out == b.out);
  CHECK(call({"--seed-independent", "weyl", "order", "--type", "E6"}).code == 0);
}

TEST_CASE("skeleton and fixture checks") {
  auto s = call({"cgmb", "skeleton", "--ambient", "E6", "--kernel", "3,4,5", "--variety", "2"});
  REQUIRE(s.code == 0);
  CHECK(nlohmann::json::parse(s.out)["shifts"] == nlohmann::json::array({0, 6, 15, 21}));
  auto h = call({"cgmb", "check", "--fixture", "henke-y1"});
  CHECK(h.code == 0);
  CHECK(nlohmann::json::parse(h.out)["pass"] == true);
  CHECK(call({"cgmb", "check", "--fixture", "nope"}).code == 2);
}

TEST_CASE("poly verbs") {
  auto d = call({"poly", "divides", "--p", "1,1,1,1,1,1", "--q", "1,2,2,1", "--semiring"});
  REQUIRE(d.code == 0);
  CHECK(nlohmann::json::parse(d.out)["divides"] == false);
  auto e = call({"poly", "eval-rational", "--num", "q:4", "--num", "q:3", "--den", "q:2"});
  REQUIRE(e.code == 0);
  CHECK(lieflag::poly_from_json(nlohmann::json::parse(e.out)) == lieflag::IntPoly{1, 1, 2, 1, 1});
  CHECK(call({"poly", "eval-rational", "--num", "1,1", "--den", "1,0,1"}).code == 2);
}

TEST_CASE("tables and qform") {
  auto m = call({"tables", "magic", "--format", "csv"});
  REQUIRE(m.code == 0);
  CHECK(std::count(m.out.begin(), m.out.end(), '\n') == 17);  // header + 16 rows
  auto t = call({"tables", "tits-index", "--rost", "not-pure-symbol"});
  CHECK(nlohmann::json::parse(t.out)["circled"] == nlohmann::json::array({2}));
  auto q = call({"qform", "af-e7", "--q", "definite", "--o", "definite", "--gamma", "+,+,+"});
  auto qj = nlohmann::json::parse(q.out);
  CHECK(qj["dim"] == 133);
  CHECK(qj["signature"] == -133);
  CHECK(qj["witt_index"] == 0);
}

TEST_CASE("verify filters, listing and exit codes") {
  auto v = call({"verify", "dims-*", "--format", "json"});
  CHECK(v.code == 0);
  auto j = nlohmann::json::parse(v.out);
  CHECK(j["checks"].size() == 3);
  for (const auto& c : j["checks"]) CHECK_FALSE(c["reference"].get<std::string>().empty());
  auto text = call({"verify", "cgmb-*"});
  CHECK(text.out.find("✓ cgmb-x2") != std::string::npos);
  auto bad = call({"verify", "nonexistent"});
  CHECK(bad.code == 2);
  CHECK(bad.err.find("dims-x2") != std::string::npos);
  CHECK(call({"verify", "--list"}).out.find("henke-y1") != std::string::npos);
}

TEST_CASE("usage errors exit with 2") {
  CHECK(call({}).code == 2);
  CHECK(call({"weyl"}).code == 2);
  CHECK(call({"poincare", "--type", "E6"}).code == 2);
  CHECK(call({"poincare", "--type", "E6", "--variety", "1", "--format", "csv"}).code == 2);
  CHECK(call({"--format", "yaml", "weyl", "order", "--type", "E6"}).code == 2);
  CHECK(call({"jinv", "poly", "--group", "2E6", "--j", "2,0,0"}).code == 2);
  CHECK(call({"tables", "conditions", "--group", "G9"}).code == 2);
  CHECK(call({"--help"}).code == 0);
}

TEST_CASE("JSON output is byte-identical across runs") {
  for (const auto& args : std::vector<std::vector<std::string>>{
           {"weyl", "double-cosets", "--type", "E6", "--left", "3,4,5", "--right", "2,3,4,5",
            "--star", "opposition"},
           {"jinv", "enumerate", "--group", "E8"},
           {"verify", "--format", "json", "--no-timings"}}) {
    CHECK(call(args).out == call(args).out);
  }
}

TEST_CASE("--fixtures overrides the data files") {
  auto dir = std::filesystem::temp_directory_path() / "lieflag_cli_fixtures";
  std::filesystem::create_directories(dir);
  {
    std::ofstream f(dir / "jinvariant.json");
    f << R"({"version": "test", "prime": 2, "omitted": [], "groups": [
      {"label": "T2", "display": "T2", "aliases": [], "degrees": [2], "caps": [2], "chains": []}]})";
  }
  auto r = call({"--fixtures", dir.string(), "jinv", "poly", "--group", "T2", "--j", "2", "--format",
                 "text"});
  CHECK(r.code == 0);
  CHECK(r.out == "1 + t^2 + t^4 + t^6\n");
  std::filesystem::remove_all(dir);
}
