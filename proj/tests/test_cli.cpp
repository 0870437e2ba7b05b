// End-to-end checks of the installed command surface: exit codes, output
// determinism, and agreement between the text and JSON renderings. Runs
// the real binary through popen.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>

#include "solvmf/report.hpp"

namespace {

struct RunResult {
  int exit_code = -1;
  std::string out;
};

RunResult run_cli(const std::string& args, bool keep_stderr = false) {
  std::string cmd = std::string(SOLVMF_CLI_PATH) + " " + args;
  cmd += keep_stderr ? " 2>&1" : " 2>/dev/null";
  RunResult result;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  char buffer[1024];
  std::size_t got;
  while ((got = std::fread(buffer, 1, sizeof buffer, pipe)) > 0) result.out.append(buffer, got);
  int status = pclose(pipe);
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return result;
}

std::string write_temp(const std::string& name, const std::string& content) {
  std::string path = std::string("/tmp/solvmf_cli_") + name;
  std::ofstream out(path);
  out << content;
  return path;
}

}  // namespace

TEST_CASE("presets are listed") {
  RunResult r = run_cli("presets");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("example1A") != std::string::npos);
  CHECK(r.out.find("torus3") != std::string::npos);
}

TEST_CASE("report on example1C in json") {
  RunResult r = run_cli("report --preset example1C --format json");
  REQUIRE(r.exit_code == 0);
  solvmf::Report report = solvmf::parse_report(r.out);
  CHECK(report.hodge[1][1] == 3);
  for (const auto& row : report.hodge_symmetry)
    for (bool v : row) CHECK(v);
  CHECK(report.hodge_sum);
  CHECK(report.star_condition);
}

TEST_CASE("cohomology of the generic second example is row-constant") {
  RunResult r = run_cli("cohomology --preset example2-generic --format json");
  REQUIRE(r.exit_code == 0);
  CHECK(r.out.find("\"hodge\"") != std::string::npos);
  const int binom[4] = {1, 3, 3, 1};
  // quick structural check through the report parser is not applicable
  // here; spot check a bidegree query instead
  for (int p = 0; p <= 3; ++p) {
    RunResult cell = run_cli("cohomology --preset example2-generic --format json --bidegree " +
                             std::to_string(p) + ",2");
    REQUIRE(cell.exit_code == 0);
    CHECK(cell.out.find("\"hodge\": " + std::to_string(binom[p])) != std::string::npos);
  }
}

TEST_CASE("validation failures exit with code 2") {
  std::string bad = write_temp("bad.json", R"({
    "schema_version": 1, "n": 1, "m": 2,
    "alphas": [[["1","0","0","0"]], [["-2","0","0","0"]]],
    "nilpotent": {"brackets": {}},
    "lattice": [["1","0"],["0","1"]],
    "assert_nilmanifold_dolbeault": true
  })");
  RunResult r = run_cli("validate --manifest " + bad, /*keep_stderr=*/true);
  CHECK(r.exit_code == 2);
  CHECK(r.out.find("unimodular") != std::string::npos);

  SUBCASE("schema errors also exit 2, with paths") {
    std::string broken = write_temp("broken.json", R"({"schema_version": 1})");
    RunResult s = run_cli("validate --manifest " + broken, true);
    CHECK(s.exit_code == 2);
  }
  SUBCASE("missing files exit 2") {
    CHECK(run_cli("validate --manifest /tmp/solvmf_does_not_exist.json").exit_code == 2);
  }
  SUBCASE("unknown presets exit 2") {
    CHECK(run_cli("report --preset nope").exit_code == 2);
  }
  SUBCASE("valid manifests exit 0") {
    RunResult ok = run_cli("validate --preset example1A");
    CHECK(ok.exit_code == 0);
    CHECK(ok.out.find("valid") != std::string::npos);
  }
  SUBCASE("usage errors exit 2, help exits 0") {
    CHECK(run_cli("no-such-subcommand").exit_code == 2);
    CHECK(run_cli("cohomology --preset example1A --no-such-flag").exit_code == 2);
    CHECK(run_cli("--help").exit_code == 0);
    CHECK(run_cli("cohomology --preset example1A --bidegree zap").exit_code == 2);
  }
}

TEST_CASE("identical manifests give byte-identical reports") {
  RunResult a = run_cli("report --preset example2-pi --format json");
  RunResult b = run_cli("report --preset example2-pi --format json");
  REQUIRE(a.exit_code == 0);
  CHECK(a.out == b.out);
}

TEST_CASE("text and json outputs agree on the numbers") {
  RunResult text = run_cli("report --preset example1B");
  RunResult json_out = run_cli("report --preset example1B --format json");
  REQUIRE(text.exit_code == 0);
  REQUIRE(json_out.exit_code == 0);
  solvmf::Report report = solvmf::parse_report(json_out.out);
  CHECK(report.hodge[1][1] == 5);
  CHECK(text.out.find("betti: 1 2 5 8 5 2 1") != std::string::npos);
  CHECK(report.betti == std::vector<int>{1, 2, 5, 8, 5, 2, 1});
  CHECK(text.out.find("star_condition: no") != std::string::npos);
  CHECK_FALSE(report.star_condition);
}

TEST_CASE("lie-algebra and de rham subcommands") {
  RunResult g = run_cli("dolbeault-lie --preset example1C --algebra g --format json");
  REQUIRE(g.exit_code == 0);
  CHECK(g.out.find("\"hodge\"") != std::string::npos);
  RunResult dr = run_cli("de-rham --preset example1C");
  REQUIRE(dr.exit_code == 0);
  CHECK(dr.out.find("betti: 1 2 5 8 5 2 1") != std::string::npos);
  RunResult star = run_cli("check-star --preset example1A");
  REQUIRE(star.exit_code == 0);
  CHECK(star.out.find("star_condition: no") != std::string::npos);
}

TEST_CASE("harmonic dimensions subcommand with bidegree filter") {
  RunResult r = run_cli("harmonic --preset example1B --format json --bidegree 1,1");
  REQUIRE(r.exit_code == 0);
  CHECK(r.out.find("\"harmonic\": 5") != std::string::npos);
}
