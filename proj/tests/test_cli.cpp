#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>

#include "json.hpp"

namespace {

struct RunResult {
  int exit_code = -1;
  std::string out;
  std::string err;
};

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

RunResult run(const std::string& args) {
  static int counter = 0;
  const std::string base = std::string(SBIM_TEST_TMPDIR) + "/cli_" + std::to_string(counter++);
  const std::string out = base + ".out", err = base + ".err";
  const std::string cmd =
      std::string(SBIM_CLI_PATH) + " " + args + " >" + out + " 2>" + err;
  const int status = std::system(cmd.c_str());
  RunResult r;
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  r.out = slurp(out);
  r.err = slurp(err);
  std::remove(out.c_str());
  std::remove(err.c_str());
  return r;
}

} // namespace

TEST_CASE("alg normalize prints the canonical expansion") {
  auto r = run("alg normalize \"C1*C1\"");
  CHECK(r.exit_code == 0);
  CHECK(r.out == "(v + v^-1)*C1\n");
  auto r2 = run("alg normalize \"C1*C3*C2*C1\"");
  CHECK(r2.exit_code == 0);
  CHECK(r2.out == "C1*C2*C3*C1\n");
  auto r3 = run("alg normalize \"1\"");
  CHECK(r3.exit_code == 0);
  CHECK(r3.out == "1\n");
}

TEST_CASE("bad input exits 2 with a position-annotated message") {
  auto r = run("alg normalize \"C1*C4\"");
  CHECK(r.exit_code == 2);
  CHECK(r.err.find("^") != std::string::npos);
  CHECK(r.err.find("position") != std::string::npos);
  auto r2 = run("grot mul \"B:x9 * B:t1\"");
  CHECK(r2.exit_code == 2);
  CHECK(r2.err.find("unknown group element") != std::string::npos);
  auto r3 = run("hilbert --group i2:5 --set W");
  CHECK(r3.exit_code == 2);
  auto r4 = run("frobnicate");
  CHECK(r4.exit_code == 2);
}

TEST_CASE("grot mul evaluates products") {
  auto r = run("grot mul \"B:t1 * B:t3\" --format json");
  CHECK(r.exit_code == 0);
  auto j = nlohmann::json::parse(r.out);
  REQUIRE(j["value"].size() == 1);
  CHECK(j["value"][0]["set"] == nlohmann::json::array({"e", "s1*s2", "s1", "s2"}));
  CHECK(j["value"][0]["coeff"] == nlohmann::json{{"2", 1}});
  auto r2 = run("grot mul \"v^-1 * B:t2\"");
  CHECK(r2.exit_code == 0);
  CHECK(r2.out == "R{e,s1*s2*s1}\n");
  // twists need the extended variant
  auto r3 = run("grot mul \"Rw:s1 * B:t1\"");
  CHECK(r3.exit_code == 2);
  auto r4 = run("grot mul \"Rw:s1 * B:t1\" --variant ext");
  CHECK(r4.exit_code == 0);
  CHECK(r4.out == "v*R{e,s1}\n"); // R_t B_t = B_t for t = s1
}

TEST_CASE("grot verify and alg verify-iso pass") {
  CHECK(run("grot verify").exit_code == 0);
  CHECK(run("grot verify --variant ext").exit_code == 0);
  auto r = run("alg verify-iso --maxlen 4");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("PASS") != std::string::npos);
}

TEST_CASE("char word matches the committed expansion") {
  auto r = run("char word \"B:tst * B:s * B:t\" --group b2");
  CHECK(r.exit_code == 0);
  CHECK(r.out ==
        "1*e + 1*s*t + 1*s*t*s*t + 1*t*s + 1*s + 1*t + 1*t*s*t + 1*s*t*s\n");
  auto r2 = run("char word \"Rw:s1 * Rw:s1\" --group a2 --format json");
  CHECK(r2.exit_code == 0);
  CHECK(nlohmann::json::parse(r2.out) == nlohmann::json{{"e", 1}});
}

TEST_CASE("hilbert csv matches the golden fixture") {
  auto r = run("hilbert --group a2 --set W --maxdeg 6 --format csv");
  CHECK(r.exit_code == 0);
  CHECK(r.out == slurp(std::string(SBIM_GOLDEN_DIR) + "/hilbert_a2_full.csv"));
}

TEST_CASE("structure table csv matches the golden fixture") {
  auto r = run("grot table --format csv");
  CHECK(r.exit_code == 0);
  // header plus 20^3 rows
  CHECK(std::count(r.out.begin(), r.out.end(), '\n') == 8001);
  CHECK(r.out == slurp(std::string(SBIM_GOLDEN_DIR) + "/grot_table_a2_plain.csv"));
}

TEST_CASE("explorer subcommands") {
  auto r = run("explore a3-checks --format json");
  CHECK(r.exit_code == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["ok"] == true);
  auto r2 = run("explore closure --group a2 --generators \"B:t1,B:t2,B:t3\" --format json");
  CHECK(r2.exit_code == 0);
  auto j2 = nlohmann::json::parse(r2.out);
  CHECK(j2["reached_count"] == 20);
  CHECK(j2["opaque_products"].empty());
}

TEST_CASE("verify-all on the finite groups") {
  auto r = run("verify-all --group a3");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("PASS") != std::string::npos);
  auto r2 = run("verify-all --group b2");
  CHECK(r2.exit_code == 0);
}
