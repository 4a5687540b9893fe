// Copyright 2026 The gridprint Authors
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include <json.hpp>

#include "cli_process.hpp"
#include "gridprint/grid_data.hpp"

using namespace gridprint;
using gridprint::testing::run_cli;
using gridprint::testing::TempDir;

namespace {

const std::string kTrace = std::string(GRIDPRINT_TEST_DATA) + "/two_phase.csv";

// 10 W above baseline for 10 s.
constexpr double kTraceKwh = 100.0 / 3.6e6;

std::vector<std::string> trace_run(std::vector<std::string> extra, std::vector<std::string> cmd) {
  std::vector<std::string> args = {"run", "--trace", kTrace, "--offline"};
  args.insert(args.end(), extra.begin(), extra.end());
  args.push_back("--");
  args.insert(args.end(), cmd.begin(), cmd.end());
  return args;
}

std::size_t count_lines(const std::string& s) {
  return static_cast<std::size_t>(std::count(s.begin(), s.end(), '\n'));
}

}  // namespace

TEST_CASE("regions lists every region, one per line") {
  const auto r = run_cli({"regions"});
  CHECK(r.status == 0);
  CHECK(count_lines(r.out) == DatasetSnapshot::builtin().regions().size());
  CHECK(r.out.find("us-wy") != std::string::npos);
}

TEST_CASE("regions --extremes") {
  const auto us = run_cli({"regions", "--extremes", "us"});
  CHECK(us.status == 0);
  REQUIRE(count_lines(us.out) == 3);
  CHECK(us.out.find("Vermont") < us.out.find("Mississippi"));
  CHECK(us.out.find("Mississippi") < us.out.find("Wyoming"));
  const auto eu = run_cli({"regions", "--extremes", "europe"});
  CHECK(eu.out.find("Iceland") < eu.out.find("Ukraine"));
  CHECK(eu.out.find("Ukraine") < eu.out.find("Kosovo"));
  const auto gl = run_cli({"regions", "--extremes", "global"});
  CHECK(gl.out.find("Bhutan") < gl.out.find("South Korea"));
  CHECK(gl.out.find("South Korea") < gl.out.find("Mongolia"));
  CHECK(run_cli({"regions", "--extremes", "mars"}).status == 2);
}

TEST_CASE("a traced run in Wyoming yields the analytic emissions") {
  const auto r = run_cli(trace_run({"--location", "wyoming", "--format", "json",
                                    "--report-to", "stdout"},
                                   {"true"}));
  REQUIRE(r.status == 0);
  const auto j = nlohmann::json::parse(r.out);
  const auto& wy = DatasetSnapshot::builtin().lookup("us-wy");
  REQUIRE(wy.direct_rate_lbs_per_mwh);
  const double expected = kTraceKwh / 0.8 * (*wy.direct_rate_lbs_per_mwh * 0.453592 / 1000);
  CHECK(j.at("summary").at("kg_co2").get<double>() == doctest::Approx(expected).epsilon(1e-6));
  CHECK(j.at("exit_status") == 0);
}

TEST_CASE("the child's exit code and stdout pass through untouched") {
  const auto r = run_cli(trace_run({}, {"sh", "-c", "echo hello; exit 3"}));
  CHECK(r.status == 3);
  CHECK(r.out == "hello\n");
  CHECK(r.err.find("Average process wattage: 10.00 watts") != std::string::npos);
  CHECK(run_cli(trace_run({}, {"false"})).status == 1);
}

TEST_CASE("reports can go to a file") {
  TempDir tmp;
  const auto path = (tmp.path() / "r.html").string();
  const auto r = run_cli(trace_run({"--format", "html", "--out", path}, {"true"}));
  CHECK(r.status == 0);
  CHECK(r.err.empty());
  CHECK(gridprint::testing::slurp(path).find("<svg") != std::string::npos);
}

TEST_CASE("a command that cannot start exits 127") {
  const auto r = run_cli(trace_run({}, {"/nonexistent/gridprint-no-such-binary"}));
  CHECK(r.status == 127);
  CHECK_FALSE(r.err.empty());
}

TEST_CASE("environment errors exit 2 with a message") {
  const auto no_rapl = run_cli({"run", "--offline", "--powercap-root", "/nonexistent", "--", "true"});
  CHECK(no_rapl.status == 2);
  CHECK(no_rapl.err.find("--trace") != std::string::npos);

  CHECK(run_cli({"bench", "exp", "31", "--trace", kTrace, "--offline"}).status == 2);
  CHECK(run_cli(trace_run({"--location", "atlantis"}, {"true"})).status == 2);
  CHECK(run_cli(trace_run({"--efficiency", "1.5"}, {"true"})).status == 2);
  CHECK(run_cli({"run", "--trace", kTrace}).status == 2);
  CHECK(run_cli({"frobnicate"}).status == 2);
  CHECK(run_cli({"--help"}).status == 0);
}

TEST_CASE("the region environment variable is honoured and validated") {
  const auto ok = run_cli(trace_run({"--format", "json", "--report-to", "stdout"}, {"true"}),
                          {"ENERGYUSAGE_REGION=iceland"});
  REQUIRE(ok.status == 0);
  const auto j = nlohmann::json::parse(ok.out);
  CHECK(j.at("resolution").at("region").at("id") == "is");
  CHECK(j.at("resolution").at("method") == "env-var");

  const auto bad = run_cli(trace_run({}, {"true"}), {"ENERGYUSAGE_REGION=atlantis"});
  CHECK(bad.status == 2);
}

TEST_CASE("offline runs note the default location") {
  const auto r = run_cli(trace_run({"--default-region", "europe"}, {"true"}));
  CHECK(r.status == 0);
  CHECK(r.err.find("location defaulted to") != std::string::npos);
}

TEST_CASE("bench prints its checksum") {
  const auto r = run_cli({"bench", "quadratic", "3", "--unit-ops", "1000", "--trace", kTrace,
                          "--offline"});
  CHECK(r.status == 0);
  CHECK(r.out.find("bench quadratic 3: 9000 additions, checksum 9000") == 0);
}
