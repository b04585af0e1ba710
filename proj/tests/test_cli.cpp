// End-to-end CLI behaviour, spawning the installed binary.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

namespace {

struct RunResult {
  int exit_code = -1;
  std::string output;
};

RunResult run_cli(const std::string& args, const std::string& env = "") {
  std::string cmd = env + " " + std::string(FRACMEAS_CLI_PATH) + " " + args +
                    " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  RunResult r;
  std::array<char, 4096> buf;
  size_t got;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0)
    r.output.append(buf.data(), got);
  int st = pclose(pipe);
  r.exit_code = WIFEXITED(st) ? WEXITSTATUS(st) : -1;
  return r;
}

}  // namespace

TEST_CASE("dims: text output and exit 0") {
  RunResult r = run_cli("dims --n 2 --l 3 --digits 20");
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("r = 1/2") != std::string::npos);
  CHECK(r.output.find("0.64576011716509760327") != std::string::npos);
  CHECK(r.output.find("1.54856265263024290726") != std::string::npos);
}

TEST_CASE("dims: r is exact for (9,10)") {
  RunResult r = run_cli("dims --n 9 --l 10 --digits 12");
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("r = 8/9") != std::string::npos);
}

TEST_CASE("invalid parameters exit with the usage code") {
  RunResult r = run_cli("dims --n 3 --l 2");
  CHECK(r.exit_code == 64);
  CHECK(r.output.find("l > n >= 2") != std::string::npos);
  RunResult unknown = run_cli("frobnicate");
  CHECK(unknown.exit_code == 64);
}

TEST_CASE("gaps CSV matches the exact table") {
  RunResult r = run_cli("gaps --n 2 --l 3 --level 2 --csv");
  CHECK(r.exit_code == 0);
  CHECK(r.output ==
        "left,right,length,type_i,level\n"
        "2/9,1/3,1/9,1,2\n"
        "5/9,1,4/9,2,2\n");
}

TEST_CASE("cdf prints the exact rational") {
  RunResult r = run_cli("cdf --n 2 --l 3 --x 1/3");
  CHECK(r.exit_code == 0);
  CHECK(r.output == "1/2\n");
}

TEST_CASE("density prints the canonical pair") {
  RunResult r = run_cli("density --n 2 --l 3 --level 2 --left 0 --right 3");
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("p = 4, L = 5") != std::string::npos);
}

TEST_CASE("verify: small battery passes with exit 0") {
  RunResult r = run_cli(
      "verify --n 2 --l 3 --max-level 3 --center-level 3 --radius-grid 16 "
      "--digits 20");
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("all checks passed") != std::string::npos);
}

TEST_CASE("verify: starved precision cap exits 2") {
  RunResult r = run_cli(
      "verify --n 2 --l 3 --max-level 3 --center-level 2 --radius-grid 8 "
      "--digits 20 --precision-cap 8");
  CHECK(r.exit_code == 2);
}

TEST_CASE("report writes stable JSON to a file") {
  const char* path1 = "cli_report_a.json";
  const char* path2 = "cli_report_b.json";
  std::string args =
      "report --n 2 --l 3 --max-level 3 --center-level 2 --radius-grid 8 "
      "--digits 20 --seed 7 --out ";
  REQUIRE(run_cli(args + path1).exit_code == 0);
  REQUIRE(run_cli(args + path2).exit_code == 0);
  std::ifstream f1(path1), f2(path2);
  std::stringstream s1, s2;
  s1 << f1.rdbuf();
  s2 << f2.rdbuf();
  REQUIRE(!s1.str().empty());
  CHECK(s1.str() == s2.str());
  auto parsed = nlohmann::json::parse(s1.str());
  CHECK(parsed["schema"] == "fracmeas/verification-report/v1");
  CHECK(parsed["config"]["seed"] == 7);
  std::remove(path1);
  std::remove(path2);
}

TEST_CASE("environment variables supply defaults") {
  RunResult r = run_cli("dims --digits 12", "FRACMEAS_N=9 FRACMEAS_L=10");
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("C(9,10)") != std::string::npos);
  // explicit flags win over the environment
  RunResult o = run_cli("dims --n 2 --l 3 --digits 12", "FRACMEAS_N=9 FRACMEAS_L=10");
  CHECK(o.exit_code == 0);
  CHECK(o.output.find("C(2,3)") != std::string::npos);
}
