#include <doctest.h>

#include <sstream>

#include <nlohmann/json.hpp>

#include "wlp/cli.hpp"

using nlohmann::json;

namespace {

struct CliResult {
  int exit_code;
  std::string out;
  std::string err;
};

CliResult run(const std::vector<std::string>& args, const std::string& input = "") {
  std::istringstream in(input);
  std::ostringstream out, err;
  const int code = wlp::cli::run_command(args, in, out, err);
  return {code, out.str(), err.str()};
}

const char* kDataDir = TEST_DATA_DIR;

std::string data(const std::string& name) { return std::string(kDataDir) + "/" + name; }

}  // namespace

TEST_CASE("wlp command on the golden inputs") {
  const CliResult oct = run({"wlp", "--input", data("octahedron.json")});
  CHECK(oct.exit_code == 0);
  CHECK(oct.out.find("fails WLP: surjectivity in degree 2") != std::string::npos);

  const CliResult ex16 = run({"wlp", "--input", data("ex16.json")});
  CHECK(ex16.exit_code == 0);
  CHECK(ex16.out.find("fails WLP: surjectivity in degree 1") != std::string::npos);
}

TEST_CASE("hilbert command") {
  const CliResult res = run({"hilbert", "--input", data("k2211.json")});
  CHECK(res.exit_code == 0);
  CHECK(res.out == "[1,6,13,12,4]\n");
}

TEST_CASE("wlp json output shape") {
  const CliResult res = run({"wlp", "--json", "--input", data("octahedron.json")});
  REQUIRE(res.exit_code == 0);
  const json doc = json::parse(res.out);
  CHECK(doc["char"] == 0);
  CHECK(doc["hilbert"] == json::array({1, 6, 12, 8}));
  CHECK(doc["wlp"] == false);
  CHECK(doc["degrees"][0]["i"] == 0);
  CHECK(doc["degrees"][0]["dim_i"] == 1);
  CHECK(doc["degrees"][0]["dim_j"] == 6);
  CHECK(doc["degrees"][0]["rank"] == 1);
  CHECK(doc["degrees"][0]["full"] == true);
  CHECK(doc["failures"][0]["degree"] == 2);
  CHECK(doc["failures"][0]["mode"] == "surjectivity");
}

TEST_CASE("family pipes into wlp through stdin") {
  const CliResult five = run({"family", "--cycle", "5"});
  REQUIRE(five.exit_code == 0);
  const CliResult wlp5 = run({"wlp"}, five.out);
  CHECK(wlp5.exit_code == 0);
  CHECK(wlp5.out.find("has WLP") != std::string::npos);

  const CliResult four = run({"family", "--cycle", "4"});
  const CliResult wlp4 = run({"wlp"}, four.out);
  CHECK(wlp4.out.find("fails WLP") != std::string::npos);
}

TEST_CASE("family constructors") {
  const CliResult tog = run({"family", "--togliatti", "5,2"});
  REQUIRE(tog.exit_code == 0);
  const json doc = json::parse(tog.out);
  CHECK(doc["graph"]["vars"] == 6);
  CHECK(doc["graph"]["edges"].size() == 9);

  const CliResult cone = run({"family", "--cone", "1", "--input", data("ex16.json")});
  REQUIRE(cone.exit_code == 0);
  CHECK(json::parse(cone.out)["graph"]["vars"] == 7);

  CHECK(run({"family"}).exit_code == 1);
  CHECK(run({"family", "--cycle", "5", "--togliatti", "4,1"}).exit_code == 1);
}

TEST_CASE("homology and bockstein commands") {
  const CliResult hom = run({"homology", "--degree", "2", "--input", data("octahedron.json")});
  CHECK(hom.exit_code == 0);
  CHECK(hom.out.find("= 1") != std::string::npos);

  const CliResult four = run({"family", "--cycle", "4"});
  const CliResult bock = run({"bockstein", "--degree", "1", "--json"}, four.out);
  REQUIRE(bock.exit_code == 0);
  const json doc = json::parse(bock.out);
  CHECK(doc["h_dim"] == 1);
  CHECK(doc["delta_injective"] == false);
  CHECK(doc["char0_surjective"] == false);
  CHECK(doc["witness_cycle"].size() == 4);
}

TEST_CASE("ses command") {
  const CliResult res =
      run({"ses", "--remove-edge", "4,5", "--input", data("k2211.json")});
  CHECK(res.exit_code == 0);
  CHECK(res.out.find("degree 2: fails surjectivity") != std::string::npos);
  CHECK(run({"ses", "--input", data("k2211.json")}).exit_code == 1);
  CHECK(run({"ses", "--remove-edge", "0,1", "--input", data("k2211.json")}).exit_code == 1);
}

TEST_CASE("tensor command") {
  const CliResult res = run({"tensor", "--spec", "2:2,2:2,2:2", "--verify", "--json"});
  REQUIRE(res.exit_code == 0);
  const json doc = json::parse(res.out);
  CHECK(doc["predictions"]["wlp"] == false);
  CHECK(doc["predictions"]["failure_degree"] == 2);
  CHECK(doc["report"]["wlp"] == false);
  CHECK(doc["verified"] == true);

  const CliResult predict = run({"tensor", "--spec", "3:2,1:2", "--predict"});
  CHECK(predict.exit_code == 0);
  CHECK(predict.out.find("has WLP") != std::string::npos);

  CHECK(run({"tensor", "--spec", "2:2", "--char", "2"}).exit_code == 1);
}

TEST_CASE("search command emits csv plus summary") {
  const CliResult res = run({"search", "--vertices", "3", "--jobs", "1"});
  REQUIRE(res.exit_code == 0);
  std::istringstream lines(res.out);
  std::string line;
  std::getline(lines, line);
  CHECK(line == "code,edges,hilbert,wlp,bucket");
  int rows = 0, comments = 0;
  while (std::getline(lines, line)) {
    if (line.rfind("#", 0) == 0) {
      ++comments;
    } else {
      ++rows;
    }
  }
  CHECK(rows == 8);
  CHECK(comments >= 1);
}

TEST_CASE("malformed input exits 1") {
  CHECK(run({"wlp"}, "this is not json").exit_code == 1);
  CHECK(run({"wlp"}, "{\"vars\": 0, \"gens\": []}").exit_code == 1);
  CHECK(run({"wlp"}, "{\"vars\": 2, \"gens\": [[1,1]]}").exit_code == 1);  // not Artinian
  CHECK(run({"wlp", "--input", "/no/such/file"}).exit_code == 1);
  CHECK(run({"frobnicate"}).exit_code == 1);
  CHECK(run({}).exit_code == 1);
}
