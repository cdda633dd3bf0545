#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>
#include <string>

#include <sys/wait.h>

#include "json.hpp"

// Exercises the installed binary end to end: files in, answers and JSON
// reports out, exit codes for the failure paths.

namespace {

namespace fs = std::filesystem;
using nlohmann::json;

struct CmdResult {
  int status = -1;
  std::string out;
  std::string err;
};

std::string slurp(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

fs::path scratch_file(const std::string& stem, const std::string& content) {
  static int counter = 0;
  fs::path dir = fs::temp_directory_path() / "lcekit_cli_tests";
  fs::create_directories(dir);
  fs::path path = dir / (stem + "_" + std::to_string(counter++));
  std::ofstream(path, std::ios::binary) << content;
  return path;
}

CmdResult run_cli(const std::string& args) {
  fs::path out = scratch_file("stdout", "");
  fs::path err = scratch_file("stderr", "");
  std::string cmd = std::string(LCEKIT_CLI_PATH) + " " + args + " > " +
                    out.string() + " 2> " + err.string();
  int rc = std::system(cmd.c_str());
  CmdResult result;
  if (rc != -1 && WIFEXITED(rc)) result.status = WEXITSTATUS(rc);
  result.out = slurp(out);
  result.err = slurp(err);
  return result;
}

void strip_wall_clock(json& j) {
  if (!j.is_object()) return;
  j.erase("wall_ms");
  for (auto& [key, value] : j.items()) strip_wall_clock(value);
}

std::string random_letters(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> pick('a', 'z');
  std::string s(n, 'a');
  for (auto& c : s) c = static_cast<char>(pick(rng));
  return s;
}

}  // namespace

TEST_CASE("query answers one line per pair") {
  fs::path text = scratch_file("text", "aabaab");
  fs::path queries = scratch_file("queries", "1 4\n2 2\n");
  auto r = run_cli("query --text " + text.string() + " --queries " +
                   queries.string());
  CHECK(r.status == 0);
  CHECK(r.out == "3\n5\n");
}

TEST_CASE("query report splits phases and adds up") {
  fs::path text = scratch_file("text", random_letters(400, 1));
  std::ostringstream q;
  std::mt19937_64 rng(2);
  std::uniform_int_distribution<int> pick(1, 400);
  for (int x = 0; x < 200; ++x) q << pick(rng) << ' ' << pick(rng) << '\n';
  fs::path queries = scratch_file("queries", q.str());
  fs::path report = scratch_file("report", "");

  auto r = run_cli("query --text " + text.string() + " --queries " +
                   queries.string() + " --report " + report.string());
  REQUIRE(r.status == 0);
  json doc = json::parse(slurp(report));

  CHECK(doc["command"] == "query");
  CHECK(doc["input"]["n"] == 400);
  CHECK(doc["answers"]["count"] == 200);
  CHECK(doc["answers"]["checksum"].get<std::string>().size() == 16);
  for (const char* key :
       {"queries", "order_comparisons", "equality_tests", "symbol_comparisons",
        "memo_hits", "dsu_finds", "dsu_unions"}) {
    CHECK(doc["totals"][key].get<std::uint64_t>() ==
          doc["preprocessing"][key].get<std::uint64_t>() +
              doc["query_phase"][key].get<std::uint64_t>());
  }
}

TEST_CASE("engines answer alike through the command line") {
  fs::path text = scratch_file("text", random_letters(300, 3));
  std::ostringstream q;
  std::mt19937_64 rng(4);
  std::uniform_int_distribution<int> pick(1, 300);
  for (int x = 0; x < 300; ++x) q << pick(rng) << ' ' << pick(rng) << '\n';
  fs::path queries = scratch_file("queries", q.str());

  auto base4 = run_cli("query --text " + text.string() + " --queries " +
                       queries.string() + " --engine base4");
  auto pow2 = run_cli("query --text " + text.string() + " --queries " +
                      queries.string() + " --engine pow2");
  auto unordered = run_cli("query --text " + text.string() + " --queries " +
                           queries.string() + " --mode unordered");
  REQUIRE(base4.status == 0);
  REQUIRE(pow2.status == 0);
  REQUIRE(unordered.status == 0);
  CHECK(base4.out == pow2.out);
  CHECK(base4.out == unordered.out);
}

TEST_CASE("integer texts parse as symbol lists") {
  fs::path text = scratch_file("text", "5 5 5 7\n");
  fs::path queries = scratch_file("queries", "1 2\n");
  auto r = run_cli("query --ints --text " + text.string() + " --queries " +
                   queries.string());
  CHECK(r.status == 0);
  CHECK(r.out == "2\n");
}

TEST_CASE("runs prints start end period lines") {
  fs::path text = scratch_file("text", "aaaa");
  auto r = run_cli("runs --text " + text.string());
  CHECK(r.status == 0);
  CHECK(r.out == "1 4 1\n");

  fs::path miss = scratch_file("text", "mississippi");
  fs::path report = scratch_file("report", "");
  auto m = run_cli("runs --text " + miss.string() + " --report " +
                   report.string());
  REQUIRE(m.status == 0);
  json doc = json::parse(slurp(report));
  CHECK(doc["runs"]["count"] == 4);
  std::size_t lines = 0;
  for (char c : m.out) lines += c == '\n';
  CHECK(lines == 4);
  CHECK(doc["detection"]["lce_queries"].get<std::uint64_t>() > 0);
}

TEST_CASE("verify accepts a consistent build") {
  fs::path text = scratch_file("text", random_letters(120, 5));
  auto r = run_cli("verify --text " + text.string());
  CHECK(r.status == 0);
  CHECK(r.out.find("pairs agree") != std::string::npos);
  CHECK(r.out.find("runs agree") != std::string::npos);
}

TEST_CASE("bench reports are reproducible") {
  fs::path r1 = scratch_file("report", "");
  fs::path r2 = scratch_file("report", "");
  std::string base =
      "bench --family periodic --n 1000 --period 7 --q 500 --seed 9 --report ";
  REQUIRE(run_cli(base + r1.string()).status == 0);
  REQUIRE(run_cli(base + r2.string()).status == 0);
  json a = json::parse(slurp(r1));
  json b = json::parse(slurp(r2));
  strip_wall_clock(a);
  strip_wall_clock(b);
  CHECK(a == b);
  CHECK(a["query_phase"]["order_comparisons"].get<std::uint64_t>() +
            a["query_phase"]["equality_tests"].get<std::uint64_t>() ==
        a["query_phase"]["symbol_comparisons"].get<std::uint64_t>());
}

TEST_CASE("failure paths exit nonzero") {
  fs::path text = scratch_file("text", "abcabc");
  fs::path queries = scratch_file("queries", "1 4\n");
  fs::path bad_queries = scratch_file("queries", "1 99\n");

  auto unordered_pow2 = run_cli("query --mode unordered --engine pow2 --text " +
                                text.string() + " --queries " +
                                queries.string());
  CHECK(unordered_pow2.status == 2);
  CHECK(unordered_pow2.err.find("error") != std::string::npos);

  auto out_of_range = run_cli("query --text " + text.string() + " --queries " +
                              bad_queries.string());
  CHECK(out_of_range.status == 1);
  CHECK(out_of_range.err.find("#1") != std::string::npos);

  CHECK(run_cli("query --queries " + queries.string()).status != 0);
  CHECK(run_cli("frobnicate").status != 0);
  CHECK(run_cli("runs --text /nonexistent/path").status == 2);
  CHECK(run_cli("bench --family unknown --n 50").status == 2);
}
