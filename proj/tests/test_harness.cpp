#include <stdexcept>
#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <string>

#include "bstrata/harness.hpp"
#include "doctest.h"
#include "json.hpp"

using namespace bstrata;
using Json = nlohmann::json;

namespace {

struct Run {
  int status = -1;
  std::string out;
};

// Runs the CLI binary; stderr is discarded.
Run cli(const std::string& args) {
  const std::string cmd = std::string(BSTRATA_CLI_PATH) + " " + args + " 2>/dev/null";
  Run r;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::array<char, 4096> buf{};
  std::size_t got = 0;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), got);
  const int raw = pclose(pipe);
  r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  return r;
}

RunConfig config(const std::string& sub) {
  RunConfig c;
  c.subcommand = sub;
  return c;
}

}  // namespace

TEST_CASE("enumerate json") {
  RunConfig c = config("enumerate");
  c.n = 2;
  const CommandOutput r = run_command(c);
  CHECK(r.exit_code == kExitOk);
  CHECK(Json::parse(r.text) == Json::parse(R"({"command":"enumerate","n":"2","total":"6",
      "histogram":[{"dimension":"0","count":"2"},{"dimension":"1","count":"3"},
                   {"dimension":"2","count":"1"}]})"));

  c.counts_only = true;
  const Json j = Json::parse(run_command(c).text);
  CHECK(j["total"] == "6");
  CHECK(j["counts_only"] == true);
  CHECK_FALSE(j.contains("histogram"));

  c.format = OutputFormat::csv;
  CHECK(run_command(c).text == "n,total\n2,6\n");
  c.counts_only = false;
  CHECK(run_command(c).text == "n,dimension,count\n2,0,2\n2,1,3\n2,2,1\n");
}

TEST_CASE("enumerate caps") {
  RunConfig c = config("enumerate");
  c.n = 9;
  CHECK(run_command(c).exit_code == kExitUsage);
  c.counts_only = true;
  c.n = 11;
  CHECK(run_command(c).exit_code == kExitUsage);
  c.n = 0;
  CHECK(run_command(c).exit_code == kExitUsage);
  c = config("enumerate");
  c.n = 3;
  c.jobs = 0;
  CHECK(run_command(c).exit_code == kExitUsage);
  CHECK(run_command(config("nope")).exit_code == kExitUsage);
}

TEST_CASE("gf") {
  RunConfig c = config("gf");
  c.max_n = 2;
  c.evaluate = true;
  const Json j = Json::parse(run_command(c).text);
  CHECK(j["normalization"] == "x^n/n!");
  CHECK(j["polynomials"][1]["coefficients"] == Json::array({"1", "1"}));
  CHECK(j["polynomials"][2]["coefficients"] == Json::array({"2", "3", "1"}));
  CHECK(j["polynomials"][2]["total"] == "6");
  CHECK(j["polynomials"][2]["primitive"] == "2");

  c.order = 1;
  CHECK(run_command(c).exit_code == kExitUsage);
}

TEST_CASE("primitive-ratio") {
  RunConfig c = config("primitive-ratio");
  c.max_n = 3;
  const Json j = Json::parse(run_command(c).text);
  CHECK(j["strictly_decreasing"] == true);
  CHECK(j["rows"][0] == Json::parse(R"({"n":"1","total":"2","primitive":"1",
      "ratio":"1/2","decimal":"0.500000"})"));
  CHECK(j["rows"][1]["ratio"] == "1/3");
  CHECK(j["rows"][2]["total"] == "26");
  CHECK(j["rows"][2]["primitive"] == "7");
}

TEST_CASE("diagram") {
  RunConfig c = config("diagram");
  c.n = 4;
  c.bits = "16";
  const CommandOutput r = run_command(c);
  REQUIRE(r.exit_code == kExitOk);
  const Json j = Json::parse(r.text);
  CHECK(j["members"] == Json::array({"2", "3", "5"}));
  CHECK(j["tau"]["cycles"] == "(1 -4)(-1 4)(2 3 -2 -3)");
  CHECK(j["tau"]["window"] == "-4,3,-2,-1");
  CHECK(j["dimension"]["cycles"] == "1");
  CHECK(j["dimension"]["kernel"] == "1");
  CHECK(j["grid"]["rows"] == Json::array({".#..", "###.", ".#..", "...."}));
  CHECK(j["grouped_cycles"].size() == 2);

  c.n = 2;
  c.bits = "7";
  const Json all_black = Json::parse(run_command(c).text);
  CHECK(all_black["tau"]["cycles"] == "()");
  CHECK(all_black["dimension"]["cycles"] == "0");

  c.bits = "4";
  const CommandOutput bad = run_command(c);
  CHECK(bad.exit_code == kExitUsage);
  CHECK(bad.text.find("step l = 3") != std::string::npos);

  c.bits = "zz";
  CHECK(run_command(c).exit_code == kExitUsage);
}

TEST_CASE("verify") {
  RunConfig c = config("verify");
  c.suite = "lw";
  c.n = 5;
  const Json lw = Json::parse(run_command(c).text);
  CHECK(lw["passed"] == true);
  CHECK(lw["checks"][0]["checked"] == "32768");

  c.suite = "kernel";
  c.n = 4;
  const CommandOutput k = run_command(c);
  CHECK(k.exit_code == kExitOk);
  CHECK(Json::parse(k.text)["checks"][0]["checked"] == "150");

  c.suite = "series";
  c.n.reset();
  CHECK(run_command(c).exit_code == kExitOk);

  c.suite = "bogus";
  CHECK(run_command(c).exit_code == kExitUsage);
  c.suite = "lw";
  c.n = 7;
  CHECK(run_command(c).exit_code == kExitUsage);
}

TEST_CASE("CLI exit codes and output") {
  const Run ok = cli("enumerate --n 2");
  CHECK(ok.status == 0);
  CHECK(Json::parse(ok.out)["total"] == "6");

  CHECK(cli("diagram --n 2 --bits 4").status == 2);
  CHECK(cli("enumerate").status == 2);
  CHECK(cli("enumerate --n 3 --jobs 0").status == 2);
  CHECK(cli("enumerate --n 3 --format xml").status == 2);
  CHECK(cli("frobnicate").status == 2);
  CHECK(cli("enumerate --n 3 --out /nonexistent-dir/x.json").status == 2);

  const Run table = cli("diagram --n 4 --bits 16 --format table");
  CHECK(table.status == 0);
  CHECK(table.out.find("dimension (kernel) 1") != std::string::npos);

  CHECK(cli("verify --suite tau --n 3").status == 0);
  CHECK(cli("gf --max-n 1 --format csv").out == "n,dimension,count\n0,0,1\n1,0,1\n1,1,1\n");
}
