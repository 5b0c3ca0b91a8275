#include "verify.hpp"

#include <doctest.h>

#include <algorithm>
#include <set>

using namespace qmv;

namespace {
SuiteParams shape_params(int m, int n) {
  SuiteParams p;
  p.m = m;
  p.n = n;
  return p;
}
}  // namespace

TEST_CASE("suite catalog") {
  const auto& names = suite_names();
  CHECK(names.size() == 15);
  CHECK(std::set<std::string>(names.begin(), names.end()).size() == names.size());
  for (const char* required : {"eq1-relations", "appendix", "prop112", "lemma111", "thm21", "cor22", "lemma23",
                               "thm25", "centrality", "semicentrality", "laplace", "pbw-count", "grading",
                               "jordan-obstruction"})
    CHECK(std::find(names.begin(), names.end(), required) != names.end());
}

TEST_CASE("suite shapes") {
  CHECK(suite_shape("lemma111", {}) == Shape(3, 3));
  SuiteParams only_n;
  only_n.n = 4;
  CHECK(suite_shape("thm21", only_n) == Shape(4, 4));
  CHECK(suite_shape("cor22", shape_params(2, 4)) == Shape(2, 4));
  CHECK_THROWS_AS(suite_shape("thm21", shape_params(2, 3)), ShapeError);
  CHECK_THROWS_AS(suite_shape("centrality", shape_params(3, 4)), ShapeError);
}

TEST_CASE("unknown suites and bad parameters") {
  CHECK_THROWS_AS(run_suite("no-such-suite", {}), UnsupportedError);
  SuiteParams p = shape_params(3, 3);
  p.t = 4;
  CHECK_THROWS_AS(run_suite("lemma23", p), UnsupportedError);
}

TEST_CASE("every suite passes at a small shape") {
  for (const auto& name : suite_names()) {
    CAPTURE(name);
    const SuiteReport report = run_suite(name, shape_params(3, 3));
    CHECK(report.passed());
    CHECK(report.failures() == 0);
    CHECK_FALSE(report.checks.empty());
    CHECK(report.suite == name);
  }
}

TEST_CASE("suite examples") {
  CHECK(run_suite("appendix", shape_params(2, 2)).passed());
  CHECK(run_suite("thm21", shape_params(3, 3)).passed());
  const SuiteReport trivial = run_suite("eq1-relations", shape_params(1, 1));
  CHECK(trivial.passed());
  CHECK(trivial.checks.empty());
  CHECK(run_suite("cor22", shape_params(2, 4)).passed());
  CHECK(run_suite("semicentrality", shape_params(2, 3)).passed());
}

TEST_CASE("reports are deterministic") {
  SuiteParams p = shape_params(3, 3);
  p.seed = 7;
  const std::string json1 = render(run_suite("engine", p), ReportFormat::json);
  const std::string json2 = render(run_suite("engine", p), ReportFormat::json);
  CHECK(json1 == json2);
  const std::string text1 = render(run_suite("lemma111", p), ReportFormat::text);
  const std::string text2 = render(run_suite("lemma111", p), ReportFormat::text);
  CHECK(text1 == text2);
  CHECK(text1.rfind("suite lemma111 (3x3): ", 0) == 0);
  CHECK(text1.find("PASS") != std::string::npos);
  CHECK(json1.find("\"timings\"") == std::string::npos);
  CHECK(render(run_suite("engine", p), ReportFormat::json, true).find("\"timings\"") != std::string::npos);
}

TEST_CASE("failing reports render witnesses") {
  SuiteReport r{"demo", "2x2", {{"holds", true, ""}, {"breaks", false, "X[1,1] - X[2,2]"}}, 0.0};
  CHECK_FALSE(r.passed());
  CHECK(r.failures() == 1);
  const std::string text = render(r, ReportFormat::text);
  CHECK(text.find("FAIL  breaks") != std::string::npos);
  CHECK(text.find("witness: X[1,1] - X[2,2]") != std::string::npos);
  const std::string json = render(r, ReportFormat::json);
  CHECK(json.find("\"witness\": \"X[1,1] - X[2,2]\"") != std::string::npos);
  CHECK(json.find("\"status\": \"fail\"") != std::string::npos);
}
