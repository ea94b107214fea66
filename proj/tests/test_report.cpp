#include "doctest.h"
#include "jhilbert/report.hpp"

using namespace jh;

namespace {

RunResult run(const std::string& cmd, const std::string& text, RunOptions opt = {}) {
  return runCommand(cmd, parseProblem(text), opt);
}

const char* kM2 = "ring char=32003 vars=x,y\nideal x^2,x*y,y^2\n";

std::string example(int t) {
  return "ring char=32003 vars=x,y\nmod x^3-x^2*y\nideal " + (t == 0 ? std::string("x") : "x*y^" + std::to_string(t)) +
         "\n";
}

}  // namespace

TEST_CASE("coeffs on the example ring reports the fit and the failing surrogate") {
  for (int t = 1; t <= 2; ++t) {
    auto r = run("coeffs", example(t));
    CHECK(r.exitCode == kExitHypothesis);
    CHECK(r.report["results"]["j"] == nlohmann::ordered_json({t + 1, 2 - t}));
    CHECK(r.report["results"]["routes"]["fit"] == nlohmann::ordered_json({t + 1, 2 - t}));
    CHECK(r.report["results"]["routes"]["jZero"] == t + 1);
    CHECK(r.report["hypotheses"]["G1"] == false);
    CHECK(r.report["hypotheses"]["ell"] == 1);
  }
}

TEST_CASE("coeffs on m squared: every route agrees") {
  auto r = run("coeffs", kM2);
  CHECK(r.exitCode == kExitOk);
  const auto& routes = r.report["results"]["routes"];
  CHECK(routes["fit"] == nlohmann::ordered_json({4, 1, 0}));
  CHECK(routes["differences"][1] == 1);
  CHECK(routes["differences"][2] == 0);
  CHECK(routes["sums"][1] == 1);
  CHECK(routes["sums"][2] == 0);
  CHECK(routes["jZero"] == 4);
  CHECK(r.report["diagnostics"].empty());
}

TEST_CASE("oracle flag and oracle command") {
  RunOptions opt;
  opt.oracle = true;
  auto r = run("coeffs", kM2, opt);
  CHECK(r.exitCode == kExitOk);
  CHECK(r.report["results"]["routes"]["oracle"] == nlohmann::ordered_json({4, 1, 0}));
  auto o = run("oracle", "ring char=32003 vars=x,y\nideal x^2,y^2\n");
  CHECK(o.exitCode == kExitOk);
  CHECK(o.report["results"]["colength"] == 4);
  auto bad = run("oracle", example(1));
  CHECK(bad.exitCode == kExitHypothesis);
}

TEST_CASE("reduction, jmult, depthcheck, omega, northcott") {
  auto red = run("reduction", "ring char=32003 vars=x,y\nideal x,y\n");
  CHECK(red.report["results"]["reductionNumber"] == 0);
  CHECK(red.exitCode == kExitOk);

  auto jm = run("jmult", example(3));
  CHECK(jm.report["results"]["ell"] == 1);
  CHECK(jm.report["results"]["routes"]["jZero"] == 4);
  CHECK(jm.exitCode == kExitHypothesis);

  auto dc = run("depthcheck", kM2);
  CHECK(dc.exitCode == kExitOk);
  CHECK(dc.report["results"]["depth"]["consistent"] == true);
  CHECK(dc.report["results"]["correctedSum"]["equal"] == true);

  auto om = run("omega", kM2);
  CHECK(om.exitCode == kExitOk);
  CHECK(om.report["results"]["masterIdentity"] == true);
  CHECK(om.report["results"]["omega"].size() == 1 + 1 + 2 + 2);

  auto nc = run("northcott", kM2);
  CHECK(nc.exitCode == kExitOk);
  CHECK(nc.report["results"]["northcott"]["j1"] == 1);
  CHECK(nc.report["results"]["northcott"]["bound"] == 1);
  CHECK(nc.report["results"]["northcott"]["reductionNumber"] == 1);
  CHECK(nc.report["results"]["northcott"]["equalityVerdict"] == "consistent");
}

TEST_CASE("identical input and seed give identical bytes") {
  for (const auto& cmd : commandNames()) {
    RunOptions opt;
    opt.seed = 9;
    auto a = emitReport(run(cmd, kM2, opt).report, ReportFormat::Json);
    auto b = emitReport(run(cmd, kM2, opt).report, ReportFormat::Json);
    CHECK(a == b);
  }
}

TEST_CASE("report schema and table format") {
  auto r = run("coeffs", kM2);
  std::vector<std::string> keys;
  for (auto it = r.report.begin(); it != r.report.end(); ++it) keys.push_back(it.key());
  CHECK(keys == std::vector<std::string>{"input", "seed", "char", "hypotheses", "results", "diagnostics"});
  std::string table = emitReport(r.report, ReportFormat::Table);
  std::size_t column = std::string::npos;
  std::size_t start = 0;
  while (start < table.size()) {
    std::size_t end = table.find('\n', start);
    std::string line = table.substr(start, end - start);
    std::size_t gap = line.find("  ");
    REQUIRE(gap != std::string::npos);
    std::size_t valueAt = line.find_first_not_of(' ', gap);
    if (column == std::string::npos) column = valueAt;
    CHECK(valueAt == column);
    start = end + 1;
  }
}

TEST_CASE("unknown command") { CHECK_THROWS_AS(run("bogus", kM2), std::invalid_argument); }

TEST_CASE("non-stabilization is reported with exit code 4") {
  RunOptions opt;
  opt.capM = 4;
  auto r = run("hilbert", "ring char=32003 vars=x,y,z\nideal x^3,y^3,z^3,x*y*z\n", opt);
  CHECK(r.exitCode == kExitNonStabilized);
  CHECK_FALSE(r.report["diagnostics"].empty());
}
