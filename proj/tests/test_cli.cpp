// End-to-end tests of the perfover binary: output formats, determinism,
// exit codes, and the documented JSON record schema. The binary path
// arrives as argv[1] (see tests/CMakeLists.txt).
#define DOCTEST_CONFIG_IMPLEMENT
#include <doctest.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

namespace {

std::string g_cli;  // path to the perfover binary

struct RunResult {
  int exit_code;
  std::string out;
};

RunResult run_cli(const std::string& args) {
  const std::string command = g_cli + " " + args + " 2>/dev/null";
  FILE* pipe = popen(command.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  std::array<char, 4096> buffer;
  std::size_t got;
  while ((got = fread(buffer.data(), 1, buffer.size(), pipe)) > 0) out.append(buffer.data(), got);
  const int status = pclose(pipe);
  return {WEXITSTATUS(status), out};
}

std::vector<nlohmann::json> json_lines(const std::string& text) {
  std::vector<nlohmann::json> records;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line))
    if (!line.empty()) records.push_back(nlohmann::json::parse(line));
  return records;
}

}  // namespace

TEST_CASE("count commands print the expected values and exit 0") {
  auto pop = run_cli("count pop 479");
  CHECK(pop.exit_code == 0);
  CHECK(pop.out == "pop(479) = 5898  [theorem-sum-recurrence]\n");

  auto fv = run_cli("count fv 12 --v 1");
  CHECK(fv.exit_code == 0);
  CHECK(fv.out.find("= 2") != std::string::npos);

  auto popr = run_cli("count pop 11 --r 2");
  CHECK(popr.exit_code == 0);
  CHECK(popr.out.find("= 3") != std::string::npos);
}

TEST_CASE("runs are byte-identical for identical arguments") {
  for (const char* args : {"table t3", "table t2", "sequence pop", "--format json table t3",
                           "--format csv enumerate overperfect 11", "verify tables"}) {
    auto first = run_cli(args);
    auto second = run_cli(args);
    CHECK(first.exit_code == second.exit_code);
    CHECK(first.out == second.out);
  }
}

TEST_CASE("cross-checked counts agree on every path") {
  for (const char* args :
       {"--xcheck count f 480", "--xcheck count fnk 480 --k 3", "--xcheck count fv 480 --v 2",
        "--xcheck count pp 23", "--xcheck count pop 23", "--xcheck count pop 479",
        "--xcheck count pop 11 --r 1", "--xcheck count pop 15", "--xcheck count pop 16"}) {
    auto result = run_cli(args);
    CHECK_MESSAGE(result.exit_code == 0, args);
    CHECK(result.out.find("all paths agree") != std::string::npos);
  }
}

TEST_CASE("usage errors exit 2, the size guard exits 4") {
  CHECK(run_cli("count bogus 5").exit_code == 2);
  CHECK(run_cli("count fnk 12").exit_code == 2);     // missing --k
  CHECK(run_cli("count fv 12").exit_code == 2);      // missing --v
  CHECK(run_cli("count pop_r 11").exit_code == 2);   // missing --r
  CHECK(run_cli("nonsense").exit_code == 2);
  CHECK(run_cli("enumerate factorizations 0").exit_code == 2);

  CHECK(run_cli("enumerate factorizations 20000").exit_code == 4);
  CHECK(run_cli("--force enumerate factorizations 20000").exit_code == 0);
  CHECK(run_cli("--guard 30000 enumerate factorizations 20000").exit_code == 0);
}

TEST_CASE("b-file output round-trips against the JSON records") {
  auto bfile = run_cli("sequence pop --terms 26 --bfile");
  REQUIRE(bfile.exit_code == 0);
  auto json = run_cli("--format json sequence pop --terms 26");
  const auto records = json_lines(json.out);
  REQUIRE(records.size() == 26);

  std::istringstream in(bfile.out);
  std::string line;
  std::size_t i = 0;
  while (std::getline(in, line)) {
    REQUIRE(i < records.size());
    std::istringstream fields(line);
    std::uint64_t index = 0, value = 0;
    fields >> index >> value;
    CHECK(index == records[i]["index"].get<std::uint64_t>());
    CHECK(value == records[i]["value"].get<std::uint64_t>());
    ++i;
  }
  CHECK(i == 26);
}

TEST_CASE("JSON records carry the documented fields") {
  const auto rows = json_lines(run_cli("--format json table t3 --nmax 3").out);
  REQUIRE(rows.size() == 3);
  for (const auto& row : rows) {
    CHECK(row["kind"] == "table_row");
    CHECK(row["table"] == "t3");
    CHECK(row.contains("n"));
    CHECK(row["counts"].size() == 6);
    CHECK(row.contains("total"));
  }

  const auto counts = json_lines(run_cli("--format json --xcheck count pop 11 --r 1").out);
  REQUIRE(counts.size() == 1);
  CHECK(counts[0]["kind"] == "count");
  CHECK(counts[0]["function"] == "pop");
  CHECK(counts[0]["n"] == 11);
  CHECK(counts[0]["r"] == 1);
  CHECK(counts[0]["value"] == 8);
  CHECK(counts[0].contains("path"));
  CHECK(counts[0]["agree"] == true);

  const auto ops = json_lines(run_cli("--format json enumerate overperfect 11 --r 2").out);
  REQUIRE(ops.size() == 3);
  for (const auto& op : ops) {
    CHECK(op["kind"] == "overpartition");
    CHECK(op["weight"] == 11);
    CHECK(op["r"] == 2);
    for (const auto& g : op["groups"]) {
      CHECK(g.contains("part"));
      CHECK(g.contains("multiplicity"));
      CHECK(g.contains("overlined"));
    }
  }
}

TEST_CASE("enumerate overperfect 11 lists all 19 objects") {
  auto result = run_cli("enumerate overperfect 11");
  CHECK(result.exit_code == 0);
  std::istringstream in(result.out);
  std::string line;
  std::size_t lines = 0;
  while (std::getline(in, line))
    if (!line.empty()) ++lines;
  CHECK(lines == 19);

  auto r2 = run_cli("enumerate overperfect 11 --r 2");
  CHECK(r2.out == "(1~,2~,4^2)\n(1~,2^2,6~)\n(1^2,3~,6~)\n");
}

TEST_CASE("unicode rendering uses combining overlines") {
  auto result = run_cli("--unicode enumerate overperfect 3 --r 1");
  CHECK(result.exit_code == 0);
  CHECK(result.out.find("\xCC\x85") != std::string::npos);
  CHECK(result.out.find('~') == std::string::npos);
}

TEST_CASE("csv output starts with the documented headers") {
  CHECK(run_cli("--format csv table t3 --nmax 2").out.rfind("n,r0,r1,r2,r3,r4,r5,total\n", 0) == 0);
  CHECK(run_cli("--format csv sequence pop --terms 2").out.rfind("sequence,index,value\n", 0) == 0);
  CHECK(run_cli("--format csv enumerate factorizations 12").out.rfind("product,factors\n", 0) == 0);
  CHECK(run_cli("--format csv verify tables").out.rfind("check,cases,passed,counterexample\n", 0) == 0);
}

TEST_CASE("verify suites report passing checks and exit 0") {
  auto result = run_cli("--format json verify tables");
  CHECK(result.exit_code == 0);
  for (const auto& rec : json_lines(result.out)) {
    CHECK(rec["kind"] == "check_result");
    CHECK(rec["passed"] == true);
    CHECK(rec["cases"].get<std::uint64_t>() > 0);
  }
}

int main(int argc, char** argv) {
  doctest::Context context;
  int first_doctest_arg = 1;
  if (argc > 1 && argv[1][0] != '-') {
    g_cli = argv[1];
    first_doctest_arg = 2;
  } else if (const char* env = std::getenv("PERFOVER_CLI")) {
    g_cli = env;
  }
  if (g_cli.empty()) {
    std::fprintf(stderr, "usage: cli_tests <path-to-perfover> [doctest options]\n");
    return 1;
  }
  std::vector<char*> args;
  args.push_back(argv[0]);
  for (int i = first_doctest_arg; i < argc; ++i) args.push_back(argv[i]);
  context.applyCommandLine(static_cast<int>(args.size()), args.data());
  return context.run();
}
