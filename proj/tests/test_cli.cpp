#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "killing/cli.hpp"
#include "killing/table_io.hpp"
#include "killing/verify.hpp"

using namespace killing;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("range parsing") {
  CHECK(cli::parse_range("3") == std::vector<std::size_t>{3});
  CHECK(cli::parse_range("1..4") == std::vector<std::size_t>{1, 2, 3, 4});
  CHECK(cli::parse_range("4,1,2") == std::vector<std::size_t>{1, 2, 4});
  CHECK_THROWS_AS(cli::parse_range("4..2"), std::invalid_argument);
  CHECK_THROWS_AS(cli::parse_range(""), std::invalid_argument);
  CHECK_THROWS_AS(cli::parse_range("a"), std::invalid_argument);
  CHECK_THROWS_AS(cli::parse_range("-1"), std::invalid_argument);
}

TEST_CASE("table command") {
  const auto r = run({"table", "--n", "1..5", "--p", "2", "--m", "0", "--format", "csv"});
  REQUIRE(r.code == cli::kSuccess);
  const auto rows = table_from_csv(r.out);
  REQUIRE(rows.size() == 5);
  const std::size_t expected[] = {1, 3, 11, 36, 85};
  for (std::size_t i = 0; i < 5; ++i) {
    CHECK(rows[i].dim == expected[i]);
    CHECK(rows[i].status == KernelStatus::exact);
  }

  const auto single = run({"table", "--n", "3", "--p", "1", "--m", "0", "--format", "csv"});
  CHECK(single.out == "n,p,m,q_max,dim,status\n3,1,0,,6,exact\n");

  const auto json = run({"table", "--n", "2", "--p", "1..2", "--format", "json"});
  REQUIRE(json.code == 0);
  const auto doc = nlohmann::json::parse(json.out);
  CHECK(doc["schema_version"] == 1);
  CHECK(table_from_json(doc) == table_from_csv(run({"table", "--n", "2", "--p", "1..2", "--format", "csv"}).out));

  CHECK(run({"table", "--n", "3", "--p", "3", "--m", "1", "--format", "text"}).out.find("lower_bound") != std::string::npos);
}

TEST_CASE("table output does not depend on worker count") {
  const auto a = run({"table", "--n", "1..3", "--p", "0..2", "--format", "json", "--jobs", "1"});
  const auto b = run({"table", "--n", "1..3", "--p", "0..2", "--format", "json", "--jobs", "3"});
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
}

TEST_CASE("usage errors") {
  CHECK(run({}).code == cli::kUsageError);
  CHECK(run({"frobnicate"}).code == cli::kUsageError);
  CHECK(run({"table", "--n", "3..1", "--p", "1"}).code == cli::kUsageError);
  CHECK(run({"table", "--n", "", "--p", "1"}).code == cli::kUsageError);
  CHECK(run({"table", "--n", "3", "--p", "1", "--format", "xml"}).code == cli::kUsageError);
  CHECK(run({"table", "--n", "9", "--p", "1"}).code == cli::kUsageError);
  CHECK(run({"table", "--n", "2", "--p", "1", "--m", "5"}).code == cli::kUsageError);
  CHECK(run({"kernel", "--n", "2", "--p", "1", "--m", "3"}).code == cli::kUsageError);
  CHECK(run({"kernel", "--n", "2", "--p", "9"}).code == cli::kUsageError);
  const auto bad = run({"verify", "--suite", "nonsense", "--n", "2"});
  CHECK(bad.code == cli::kUsageError);
  CHECK(bad.err.find("nonsense") != std::string::npos);
  CHECK(run({"--help"}).code == cli::kSuccess);
  const auto help = run({"table", "--help"});
  CHECK(help.code == cli::kSuccess);
  CHECK(help.out.find("--qmax") != std::string::npos);
}

TEST_CASE("verify command") {
  const auto all = run({"verify", "--suite", "all", "--n", "2", "--p", "2", "--qmax", "4"});
  CHECK(all.code == cli::kSuccess);
  CHECK(all.out.find("FAIL") == std::string::npos);
  CHECK(run({"verify", "--suite", "factorization", "--n", "3", "--p", "1", "--m", "2", "--qmax", "3"}).code == 0);
  const auto cf = run({"verify", "--suite", "closed-form", "--n", "1..4", "--format", "json"});
  CHECK(cf.code == 0);
  const auto checks = checks_from_json(nlohmann::json::parse(cf.out));
  CHECK(checks.size() == 4);
  for (const auto& c : checks) CHECK(c.passed);
}

TEST_CASE("kernel command") {
  const auto r = run({"kernel", "--n", "2", "--p", "1", "--m", "0", "--basis"});
  CHECK(r.code == 0);
  CHECK(r.out.find("dim 3 (exact)") != std::string::npos);
  CHECK(r.out.find("H(1,0) e(0,1) - 1/1 H(0,1) e(1,0)") != std::string::npos);

  CHECK(run({"kernel", "--n", "1", "--p", "2", "--m", "0"}).out.find("dim 1 (exact)") != std::string::npos);
  const auto open = run({"kernel", "--n", "3", "--p", "2", "--m", "1", "--qmax", "6", "--format", "json"});
  CHECK(open.code == 0);
  const auto doc = nlohmann::json::parse(open.out);
  CHECK(doc["status"] == "lower_bound");
  CHECK(doc["config"]["q_max"] == 6);

  const auto basis = nlohmann::json::parse(run({"kernel", "--n", "2", "--p", "1", "--basis", "--format", "json"}).out);
  CHECK(basis["basis"].size() == 3);
  CHECK(basis["basis"][0][0]["coeff"] == "1/1");
}

TEST_CASE("dims command") {
  const auto r = run({"dims", "--n", "1..5", "--format", "csv"});
  CHECK(r.code == 0);
  CHECK(r.out.find("\n4,4,10,10,50,10,36,6,16,10,true\n") != std::string::npos);
}

TEST_CASE("output file") {
  const std::string path = "cli_test_table.csv";
  CHECK(run({"table", "--n", "2", "--p", "1", "--m", "0", "--format", "csv", "--out", path}).out.empty());
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  CHECK(ss.str() == "n,p,m,q_max,dim,status\n2,1,0,,3,exact\n");
  std::remove(path.c_str());
}

TEST_CASE("serialization round trips") {
  const std::vector<TableRow> rows{{2, 1, 0, std::nullopt, 3, KernelStatus::exact},
                                   {3, 3, 1, 8u, 0, KernelStatus::lower_bound}};
  CHECK(table_from_csv(table_to_csv(rows)) == rows);
  CHECK(table_from_json(table_to_json(rows, {{"command", "table"}})) == rows);
  CHECK_THROWS(table_from_csv("n,p\n1,2\n"));
  CHECK_THROWS(table_from_json(nlohmann::json{{"schema_version", 2}, {"rows", nlohmann::json::array()}}));

  const auto checks = run_suites({{"ccr", "closed-form"}, {2}, {1}, {}, 2});
  CHECK(checks_from_json(checks_to_json(checks, {})) == checks);
  CHECK(checks_to_text(checks).find(std::to_string(checks.size()) + "/" + std::to_string(checks.size()) +
                                    " checks passed") != std::string::npos);
  CHECK_THROWS_AS(run_suites({{"bogus"}, {2}, {1}, {}, 2}), std::invalid_argument);
}
