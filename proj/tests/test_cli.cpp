#include <sstream>

#include "doctest.h"
#include "json.hpp"
#include "sptcrank/cli.hpp"

using namespace sptcrank;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("table spt") {
  const Run r = run({"table", "spt", "--max-n", "5"});
  CHECK(r.code == kExitPass);
  CHECK(r.out == "n,spt(n)\n1,1\n2,3\n3,5\n4,10\n5,14\n");
}

TEST_CASE("table json envelope") {
  const Run r = run({"table", "rankset-q", "--n", "4", "--m", "1", "--format", "json"});
  REQUIRE(r.code == kExitPass);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["command"] == "table");
  CHECK(j["parameters"]["kind"] == "rankset-q");
  REQUIRE(j["generated_rows"].size() == 1);
  CHECK(j["generated_rows"][0]["n"] == 4);
  CHECK(j["generated_rows"][0]["m"] == 1);
  CHECK(j["generated_rows"][0].back() == 3);
}

TEST_CASE("table ns residues at n = 9") {
  const Run r = run({"table", "ns", "--n", "9", "--mod", "5"});
  REQUIRE(r.code == kExitPass);
  std::istringstream in(r.out);
  std::string line;
  std::getline(in, line);
  int rows = 0;
  while (std::getline(in, line)) {
    ++rows;
    CHECK(line.substr(line.rfind(',') + 1) == "16");
  }
  CHECK(rows == 5);
}

TEST_CASE("inspect reports the class, image and round trip") {
  const Run r = run({"inspect", "7,6,5,5,4,3,3,2,2,2,2", "--m", "2"});
  REQUIRE(r.code == kExitPass);
  const auto rep = nlohmann::json::parse(r.out)["report"];
  CHECK(rep["symbol"] == "(5,4,2,1 / 3,3,2,2,2,2)_{5x3}");
  CHECK(rep["q_class"] == "Q4");
  CHECK(rep["image"] == "(4,4,1,1,1,1 / 3,3,3,2,2,1)_{5x3}");
  CHECK(rep["round_trip"] == true);
  CHECK(rep["trace"]["map"] == "Q4->P4");
}

TEST_CASE("inspect sorts unsorted input with a warning") {
  const Run sorted = run({"inspect", "5,5,1", "--m", "3"});
  const Run unsorted = run({"inspect", "1,5,5", "--m", "3"});
  CHECK(sorted.code == unsorted.code);
  CHECK(sorted.out == unsorted.out);
  CHECK(sorted.err.empty());
  CHECK_FALSE(unsorted.err.empty());
}

TEST_CASE("exit codes") {
  CHECK(run({"inspect", "3,3", "--m", "0"}).code == kExitFailure);
  CHECK(run({"inspect", "1,x"}).code == kExitUsage);
  CHECK(run({"inspect", "2,0"}).code == kExitUsage);
  CHECK(run({"table", "nonsense"}).code == kExitUsage);
  CHECK(run({"verify", "nonsense"}).code == kExitUsage);
  CHECK(run({}).code == kExitUsage);
  CHECK(run({"table", "rank", "--n", "-1"}).code == kExitUsage);
  CHECK(run({"verify", "conjecture", "--max-n", "12", "--max-m", "3"}).code == kExitPass);
}

TEST_CASE("verify output is byte-stable") {
  const std::vector<std::string> args{"verify", "injection", "--n", "20", "--m", "1", "--detail", "--workers", "1"};
  std::vector<std::string> more = args;
  more.back() = "3";
  const Run a = run(args);
  const Run b = run(more);
  CHECK(a.code == kExitPass);
  CHECK(a.out == b.out);
  const auto j = nlohmann::json::parse(a.out)["report"];
  CHECK(j["status"] == "pass");
  CHECK(j["traces"].size() > 0);
}

TEST_CASE("verify all wraps every suite") {
  const Run r = run({"verify", "all", "--max-n", "12", "--max-m", "3"});
  CHECK(r.code == kExitPass);
  const auto doc = nlohmann::json::parse(r.out);
  CHECK(doc["command"] == "verify");
  const auto j = doc["report"];
  CHECK(j["suite"] == "all");
  CHECK(j["status"] == "pass");
  CHECK(j["suites"].size() == 6);
}

TEST_CASE("verify csv columns") {
  const Run r = run({"verify", "identities", "--max-n", "10", "--format", "csv"});
  CHECK(r.code == kExitPass);
  CHECK(r.out.rfind("suite,check,status,cases,failures,first_counterexample\n", 0) == 0);
}
