#include "report.hpp"

#include <nlohmann/json.hpp>

#include <cstdio>

namespace qmv {

namespace {

nlohmann::ordered_json to_json(const SuiteReport& report, bool timings) {
  nlohmann::ordered_json doc;
  doc["suite"] = report.suite;
  doc["shape"] = report.shape;
  doc["passed"] = report.passed();
  auto checks = nlohmann::ordered_json::array();
  for (const auto& check : report.checks) {
    nlohmann::ordered_json entry;
    entry["name"] = check.name;
    entry["status"] = check.passed ? "pass" : "fail";
    if (!check.passed && !check.witness.empty()) entry["witness"] = check.witness;
    checks.push_back(std::move(entry));
  }
  doc["checks"] = std::move(checks);
  if (timings) doc["timings"] = {{"seconds", report.seconds}};
  return doc;
}

std::string to_text(const SuiteReport& report, bool timings) {
  std::string out = "suite " + report.suite + " (" + report.shape + "): " + std::to_string(report.checks.size()) +
                    " checks, " + std::to_string(report.failures()) + " failed";
  if (timings) {
    char buf[32];
    std::snprintf(buf, sizeof buf, ", %.3f s", report.seconds);
    out += buf;
  }
  out += '\n';
  for (const auto& check : report.checks) {
    out += (check.passed ? "  pass  " : "  FAIL  ") + check.name + '\n';
    if (!check.passed && !check.witness.empty()) out += "        witness: " + check.witness + '\n';
  }
  out += report.passed() ? "PASS\n" : "FAIL\n";
  return out;
}

}  // namespace

int SuiteReport::failures() const {
  int count = 0;
  for (const auto& check : checks)
    if (!check.passed) ++count;
  return count;
}

std::string render(const SuiteReport& report, ReportFormat format, bool timings) {
  if (format == ReportFormat::json) return to_json(report, timings).dump(2) + '\n';
  return to_text(report, timings);
}

std::string render(const std::vector<SuiteReport>& reports, ReportFormat format, bool timings) {
  if (format == ReportFormat::json) {
    auto doc = nlohmann::ordered_json::array();
    for (const auto& r : reports) doc.push_back(to_json(r, timings));
    return doc.dump(2) + '\n';
  }
  std::string out;
  for (const auto& r : reports) out += to_text(r, timings);
  return out;
}

}  // namespace qmv
