#include <doctest.h>

#include <fstream>
#include <sstream>

#include "afflog/cli/commands.hpp"
#include "afflog/cli/families.hpp"

using namespace afflog;

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::string data(const std::string& name) { return std::string(AFFLOG_TEST_DATA) + "/" + name; }

Json load(const std::string& path) {
  std::ifstream in(path);
  return Json::parse(in);
}

}  // namespace

TEST_CASE("height command") {
  const Run r = run({"height", "--point", "[1,2]", "--field", "Q"});
  CHECK(r.code == 0);
  CHECK(r.out.find("6.93147180559945309417232") != std::string::npos);
  const Run hat = run({"height", "--variant", "hhat", "--point", "[1,1]", "--json"});
  CHECK(hat.code == 0);
  CHECK(Json::parse(hat.out)["height"]["lower"].get<std::string>().rfind("3.46573590279972654708616", 0) == 0);
  const Run qi = run({"height", "--point", R"([["1","1"], "2"])", "--field", "Qi"});
  CHECK(qi.code == 0);
  CHECK(run({"height", "--point", "[0,0]"}).code == 2);
  CHECK(run({"height", "--point", "[1.5,2]"}).code == 2);
  CHECK(run({"height", "--point", "[1,2]", "--variant", "nope"}).code == 2);
  CHECK(run({"height", "--point", "[1,2]", "--field", "Qfoo"}).code == 2);
}

TEST_CASE("subspace-height command") {
  const Run r = run({"subspace-height", "--instance", "remark10", "--k", "7"});
  CHECK(r.code == 0);
  CHECK(r.out.find("1.94591014905531330510535") != std::string::npos);
  CHECK(run({"subspace-height", "--instance", "remark10"}).code == 2);
}

TEST_CASE("jordan command") {
  const Run r = run({"jordan", "--matrix", "[[2,1],[0,2]]", "--json"});
  CHECK(r.code == 0);
  const Json j = Json::parse(r.out);
  CHECK(j["blocks"].size() == 1);
  CHECK(j["blocks"][0]["size"] == 2);
  CHECK(run({"jordan", "--matrix", "[[0,2],[1,0]]"}).code == 2);
  CHECK(run({"jordan", "--matrix", "[[1,2,3],[4,5,6]]"}).code == 2);
}

TEST_CASE("bound command") {
  const Run h = run({"bound", "--family", "remark11", "--k", "5", "--mode", "hyperplane"});
  CHECK(h.code == 0);
  CHECK(h.out.find("c5        = 2^121") != std::string::npos);
  const Run t = run({"bound", "--family", "remark10", "--k", "10", "--mode", "theorem", "--json"});
  CHECK(t.code == 0);
  const Json j = Json::parse(t.out);
  mpz_class two160;
  mpz_ui_pow_ui(two160.get_mpz_t(), 2, 160);
  CHECK(j["c4"]["exact"].get<std::string>() == two160.get_str());
  CHECK(j["mode"] == "theorem");
  CHECK(j["certified_log_lower"].get<std::string>().front() == '-');
  CHECK(run({"bound", "--instance", data("does-not-exist.json")}).code == 2);
  CHECK(run({"bound", "--family", "remark10", "--k", "0"}).code == 2);
  CHECK(run({"bound", "--family", "remark10", "--k", "3", "--mode", "sideways"}).code == 2);
  CHECK(run({"bound", "--family", "remark10", "--k", "3", "--precision", "5000"}).code == 2);
  CHECK(run({"bound", "--instance", data("u_in_w.json")}).code == 2);
}

TEST_CASE("verify command") {
  const Run r = run({"verify", "--family", "remark11", "--k", "2..50"});
  CHECK(r.code == 0);
  CHECK(r.out.find("98 ok, 0 violated, 0 inconclusive, 0 errors") != std::string::npos);
  const Run one = run({"verify", "--instance", data("custom.json"), "--mode", "theorem", "--json"});
  CHECK(one.code == 0);
  const Json j = Json::parse(one.out);
  CHECK(j["reports"].size() == 1);
  CHECK(j["reports"][0]["status"] == "ok");
  const Run inc = run({"verify", "--instance", data("u_in_w.json"), "--mode", "hyperplane"});
  CHECK(inc.code == 0);
  CHECK(inc.out.find("0 ok, 0 violated, 1 inconclusive") != std::string::npos);
  CHECK(run({"verify", "--family", "remark10", "--k", "5..1"}).code == 2);
}

TEST_CASE("usage errors") {
  CHECK(run({}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({"height"}).code == 2);
  CHECK(run({"--help"}).code == 0);
  CHECK(run({"selftest"}).code == 0);
}

TEST_CASE("parse errors name the offending path") {
  Json j = load(data("u_in_w.json"));
  j["kpoint"]["blocks"][1]["alpha"] = "2.5";
  try {
    (void)instance_from_json(j);
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(std::string(e.what()).find("kpoint.blocks[1].alpha") != std::string::npos);
  }
  Json bad_field = load(data("u_in_w.json"));
  bad_field["field"] = Json{{"minpoly", {"-4", "0", "1"}}};
  CHECK_THROWS_AS(instance_from_json(bad_field), ParseError);
  Json short_col = load(data("u_in_w.json"));
  short_col["subspace"]["basis"][0] = {"1", "0"};
  CHECK_THROWS_AS(instance_from_json(short_col), ParseError);
}

TEST_CASE("round trip is byte identical on canonical input") {
  for (const char* fam : {"remark10", "remark11"}) {
    const std::string once = instance_to_json(family_generate(fam, 6)).dump(2);
    const std::string twice = instance_to_json(instance_from_json(Json::parse(once))).dump(2);
    CHECK(once == twice);
    CHECK(once == instance_to_json(family_generate(fam, 6)).dump(2));
  }
  const std::string custom = instance_to_json(instance_from_json(load(data("custom.json")))).dump(2);
  CHECK(custom == instance_to_json(instance_from_json(Json::parse(custom))).dump(2));
  // a user-defined field survives the round trip
  Json qi5 = load(data("custom.json"));
  qi5["field"] = Json{{"minpoly", {"1", "0", "1"}}, {"conjugation_image", {"0", "-1"}}};
  const std::string s = instance_to_json(instance_from_json(qi5)).dump();
  CHECK(s == instance_to_json(instance_from_json(Json::parse(s))).dump());
}
