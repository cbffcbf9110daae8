#include <doctest.h>

#include <json.hpp>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#ifndef _WIN32
#include <sys/wait.h>
#endif

#ifndef SYMPROD_CLI_PATH
#error "SYMPROD_CLI_PATH must point at the built command line binary"
#endif

namespace {

struct CliResult {
  int exit_code = -1;
  std::string output;
};

CliResult run_cli(const std::string& args) {
  static int counter = 0;
  const std::string tmp =
      "cli_test_output_" + std::to_string(counter++) + ".txt";
  const std::string cmd =
      std::string(SYMPROD_CLI_PATH) + " " + args + " > " + tmp + " 2>&1";
  const int status = std::system(cmd.c_str());
  CliResult result;
#ifdef _WIN32
  result.exit_code = status;
#else
  result.exit_code = WEXITSTATUS(status);
#endif
  std::ifstream f(tmp, std::ios::binary);
  std::ostringstream buf;
  buf << f.rdbuf();
  result.output = buf.str();
  std::remove(tmp.c_str());
  return result;
}

}  // namespace

TEST_CASE("usage errors exit with code 2") {
  CHECK(run_cli("").exit_code == 2);                    // missing subcommand
  CHECK(run_cli("no-such-command").exit_code == 2);
  CHECK(run_cli("cp-table").exit_code == 2);            // missing required --n
  CHECK(run_cli("bounds no-such-bound").exit_code == 2);
  CHECK(run_cli("section-check --m 1 --N 1").exit_code == 2);
  CHECK(run_cli("cp-table --n 5 --m 2 --format yaml").exit_code == 2);
  CHECK(run_cli("verify-lemcrit --n-min 5 --n-max 4").exit_code == 2);
}

TEST_CASE("cp-table text output carries exact fractions") {
  const auto r = run_cli("cp-table --n 5 --m 2");
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("23/96") != std::string::npos);
  CHECK(r.output.find("all_passed: true") != std::string::npos);
}

TEST_CASE("cp-table below the closed form range still runs") {
  const auto r = run_cli("cp-table --n 3 --m 2");
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("closed form unavailable (n < 5)") != std::string::npos);
}

TEST_CASE("json output parses and matches the schema") {
  const auto r = run_cli("cp-table --n 5 --m 2 --format json --verify");
  CHECK(r.exit_code == 0);
  const auto j = nlohmann::ordered_json::parse(r.output);
  CHECK(j.at("command") == "cp-table");
  CHECK(j.at("inputs").at("n") == "5");
  CHECK(j.at("all_passed") == true);
  REQUIRE(j.at("results").is_array());
  CHECK(j.at("results").size() == 10);
  CHECK(j.at("results")[1].at("Cp") == "23/96");
  CHECK(j.at("results")[0].at("oracle") == "match");
  // Round trip: re-serialization is the identity on the parsed document.
  CHECK(nlohmann::ordered_json::parse(j.dump(2)) == j);
}

TEST_CASE("csv output has a header and one record per row") {
  const auto r = run_cli("bounds kobayashi --n 2 --m 2 --format csv");
  CHECK(r.exit_code == 0);
  std::istringstream lines(r.output);
  std::string header, record, extra;
  REQUIRE(std::getline(lines, header));
  REQUIRE(std::getline(lines, record));
  CHECK_FALSE(std::getline(lines, extra));
  CHECK(header.find("value") != std::string::npos);
  CHECK(record.find("6561") != std::string::npos);
}

TEST_CASE("check-reidtai exit codes track the verdict") {
  CHECK(run_cli("check-reidtai --n 2 --m 2 --d 4").exit_code == 0);
  const auto fail = run_cli("check-reidtai --n 2 --m 2 --d 3");
  CHECK(fail.exit_code == 1);
  CHECK(fail.output.find("witness=(2)") != std::string::npos);
  CHECK(run_cli("check-reidtai --n 2 --m 2 --d 2 --alpha 1").exit_code == 0);
}

TEST_CASE("verify-lemcrit default campaign passes") {
  const auto r = run_cli("verify-lemcrit --n-max 4 --m-max 4");
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("all_passed: true") != std::string::npos);
  CHECK(r.output.find("sharpness_witness=(2") != std::string::npos);
}

TEST_CASE("bounds subcommands") {
  const auto deb = run_cli("bounds debarre --n 2 --nprime 2 --m 2");
  CHECK(deb.exit_code == 0);
  CHECK(deb.output.find("17179869184") != std::string::npos);

  CHECK(run_cli("bounds hypcrit --d 5 --r 1 --m 2").exit_code == 0);
  CHECK(run_cli("bounds hypcrit --d 4 --r 1 --m 2").exit_code == 1);

  const auto orb =
      run_cli("bounds orbifold --component 2:3 --component 1:inf");
  CHECK(orb.exit_code == 0);
  CHECK(orb.output.find("value=6") != std::string::npos);

  CHECK(run_cli("bounds orbifold").exit_code == 2);
}

TEST_CASE("section-check is deterministic for a fixed seed") {
  const auto a = run_cli("section-check --m 2 --N 2 --seed 42 --trials 3");
  const auto b = run_cli("section-check --m 2 --N 2 --seed 42 --trials 3");
  CHECK(a.exit_code == 0);
  CHECK(a.output == b.output);
  CHECK(a.output.find("diagonal_order=2") != std::string::npos);
}

TEST_CASE("sigma-check campaign") {
  const auto r = run_cli("sigma-check --max-m 8 --max-n 4");
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("all_passed: true") != std::string::npos);
}

TEST_CASE("--out writes the report to a file") {
  const std::string path = "cli_out_report.json";
  const auto r = run_cli("bounds bk19 --n 2 --m 2 --format json --out " + path);
  CHECK(r.exit_code == 0);
  CHECK(r.output.empty());
  std::ifstream f(path);
  REQUIRE(f.good());
  const auto j = nlohmann::ordered_json::parse(f);
  CHECK(j.at("results")[0].at("value") == "11264");
  std::remove(path.c_str());
}
