#include "doctest.h"

#include <cstdio>
#include <fstream>
#include <sstream>

#include "json.hpp"

#include "solqsol/cli.hpp"
#include "solqsol/errors.hpp"
#include "solqsol/spec_parse.hpp"

using namespace solqsol;
using nlohmann::json;

namespace {

struct CliRun {
  int code;
  std::string out;
  std::string err;
};

CliRun run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("spec parsing round-trips labels") {
  CHECK(group_from_spec("C6").label() == "C6");
  CHECK(group_from_spec("D8").label() == "D8");
  CHECK(group_from_spec("Q8").label() == "Q8");
  CHECK(group_from_spec("SD16").label() == "SD16");
  CHECK(group_from_spec("S4").label() == "S4");
  CHECK(group_from_spec("Ab(2:[1,2])").label() == "Ab(2:[1,2])");
  CHECK(group_from_spec("D6xD10").label() == "D6xD10");
  CHECK(group_from_spec("Q8xAb(3:[1,1])").order() == 72);
}

TEST_CASE("spec errors carry positions") {
  CHECK_THROWS_AS(group_from_spec(""), SpecParseError);
  CHECK_THROWS_AS(group_from_spec("X4"), SpecParseError);
  CHECK_THROWS_AS(group_from_spec("D8x"), SpecParseError);
  CHECK_THROWS_AS(group_from_spec("Ab(2:[])"), SpecParseError);
  CHECK_THROWS_AS(group_from_spec("D8y"), SpecParseError);
  try {
    group_from_spec("D8xZ");
  } catch (const SpecParseError& e) {
    CHECK(e.position() == 3);
  }
  // semantic violations surface as parse errors with position info
  CHECK_THROWS_AS(group_from_spec("D7"), SpecParseError);
  CHECK_THROWS_AS(group_from_spec("Ab(4:[1])"), SpecParseError);
}

TEST_CASE("show command") {
  auto r = run({"show", "D8"});
  CHECK(r.code == 0);
  json doc = json::parse(r.out);
  CHECK(doc["command"] == "show");
  CHECK(doc["group"]["order"] == 8);
  CHECK(doc["group"]["flags"]["abelian"] == false);
  CHECK(doc["group"]["flags"]["nilpotent"] == true);
  CHECK(doc["group"]["histogram"]["2"] == 5);
}

TEST_CASE("families and alias commands") {
  auto r = run({"families", "D8", "qsol"});
  CHECK(r.code == 0);
  json doc = json::parse(r.out);
  CHECK(doc["family"]["count"] == 3);
  std::vector<int> orders;
  for (const auto& m : doc["family"]["members"]) orders.push_back(m["order"].get<int>());
  CHECK(orders == std::vector<int>{1, 2, 8});
  CHECK(doc["lattice_summary"]["is_chain"] == true);
  CHECK(doc["lattice"]["nodes"].size() == 3);

  auto alias = run({"qsol", "D8"});
  CHECK(alias.code == 0);
  CHECK(json::parse(alias.out)["family"] == doc["family"]);

  auto sol = run({"sol", "C1"});
  CHECK(sol.code == 0);
  CHECK(json::parse(sol.out)["family"]["count"] == 1);

  auto subgroups = run({"families", "Q8", "subgroups"});
  CHECK(json::parse(subgroups.out)["family"]["count"] == 6);

  auto chr = run({"families", "D8", "char"});
  CHECK(json::parse(chr.out)["family"]["count"] == 4);
}

TEST_CASE("dot output file") {
  std::string path = "test_cli_lattice.dot";
  auto r = run({"qsol", "D8", "--dot", path});
  CHECK(r.code == 0);
  std::ifstream f(path);
  REQUIRE(f.good());
  std::stringstream buf;
  buf << f.rdbuf();
  CHECK(buf.str().find("digraph") != std::string::npos);
  CHECK(buf.str().find("->") != std::string::npos);
  f.close();
  std::remove(path.c_str());
}

TEST_CASE("usage errors exit 2") {
  CHECK(run({}).code == 2);
  CHECK(run({"bogus"}).code == 2);
  CHECK(run({"show"}).code == 2);
  CHECK(run({"show", "Z9"}).code == 2);
  CHECK(run({"families", "D8", "everything"}).code == 2);
  CHECK(run({"verify"}).code == 2);
  CHECK(run({"verify", "--id", "nope"}).code == 2);
  CHECK(run({"census", "--families", "weird"}).code == 2);
}

TEST_CASE("cap exceeded exits 3") {
  CHECK(run({"show", "C500"}).code == 3);
  CHECK(run({"families", "Ab(2:[1,1,1,1,1,1,1,1])", "qsol"}).code == 3);
  // characteristic families need automorphisms, capped at order 64
  CHECK(run({"families", "C100", "char"}).code == 3);
}

TEST_CASE("verify single claim") {
  auto r = run({"verify", "--id", "prop-2.3"});
  CHECK(r.code == 0);
  json doc = json::parse(r.out);
  CHECK(doc["ok"] == true);
  CHECK(doc["results"][0]["status"] == "refuted");
  CHECK(doc["results"][0]["witness"]["group"] == "D6xD10");
}

TEST_CASE("census output is one json line per group") {
  auto r = run({"census", "--max-order", "8", "--families", "cyclic,dihedral"});
  CHECK(r.code == 0);
  std::istringstream lines(r.out);
  std::string line;
  int count = 0;
  while (std::getline(lines, line)) {
    json doc = json::parse(line);
    CHECK(doc["group"]["order"].get<int>() <= 8);
    ++count;
  }
  CHECK(count == 10);  // C1..C8, D6, D8

  auto again = run({"census", "--max-order", "8", "--families", "cyclic,dihedral"});
  CHECK(again.out == r.out);
}

TEST_CASE("help exits zero") {
  CHECK(run({"--help"}).code == 0);
}
