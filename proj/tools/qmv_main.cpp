// qmv: command-line front end over the C API.

#include "qmv/qmv.h"

#include <CLI11.hpp>

#include <cstdio>
#include <iostream>
#include <memory>
#include <string>
#include <vector>

namespace {

constexpr int kExitPass = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kExitInternal = 3;

struct Options {
  int m = 0;
  int n = 0;
  int t = 0;
  std::uint64_t seed = 1;
  std::string format = "text";
  bool timings = false;
};

int exit_code(qmv_status status) {
  switch (status) {
    case QMV_OK: return kExitPass;
    case QMV_CHECK_FAILED: return kExitCheckFailed;
    case QMV_PARSE_ERROR:
    case QMV_USAGE_ERROR:
    case QMV_UNSUPPORTED: return kExitUsage;
    default: return kExitInternal;
  }
}

void report_error(const std::string& source) {
  std::cerr << "qmv: " << qmv_last_error() << "\n";
  const long pos = qmv_error_position();
  if (pos >= 0 && !source.empty()) std::cerr << "  " << source << "\n  " << std::string(static_cast<std::size_t>(pos), ' ') << "^\n";
}

// Prints the output of one call and turns its status into an exit code.
// Takes the output slot by reference: the call must have happened first.
int emit(qmv_status status, char*& out, const std::string& source = "") {
  std::unique_ptr<char, decltype(&qmv_string_free)> owned(out, qmv_string_free);
  out = nullptr;
  if (owned) std::cout << owned.get();
  if (status != QMV_OK && status != QMV_CHECK_FAILED) report_error(source);
  return exit_code(status);
}

std::vector<std::string> names(const char* what) {
  char* out = nullptr;
  std::vector<std::string> result;
  if (qmv_list(what, &out) != QMV_OK) return result;
  std::string all(out);
  qmv_string_free(out);
  std::size_t start = 0;
  for (std::size_t nl; (nl = all.find('\n', start)) != std::string::npos; start = nl + 1)
    result.push_back(all.substr(start, nl - start));
  return result;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact computations and identity checks in the quantum matrix algebra O_q(M_{m,n})"};
  app.require_subcommand(1);
  app.fallthrough();
  Options opt;
  app.add_option("--m", opt.m, "Number of rows (1..5)")->check(CLI::Range(1, 5));
  app.add_option("--n", opt.n, "Number of columns (1..5)")->check(CLI::Range(1, 5));
  app.add_option("--t", opt.t, "Minor size")->check(CLI::PositiveNumber);
  app.add_option("--seed", opt.seed, "Seed for randomized checks");
  app.add_option("--format", opt.format, "Output format")->check(CLI::IsMember({"text", "json"}));
  app.add_flag("--timings", opt.timings, "Include wall-clock timings in suite reports");

  std::string expr, lhs, rhs, suite, family, list_what;
  int det_size = 0;
  std::vector<int> rows, cols;
  bool primed = false;

  auto* normalize = app.add_subcommand("normalize", "Print the canonical form of an expression");
  normalize->add_option("expr", expr, "Expression")->required();
  auto* equal = app.add_subcommand("equal", "Decide whether two expressions are equal");
  equal->add_option("lhs", lhs, "Left-hand side")->required();
  equal->add_option("rhs", rhs, "Right-hand side")->required();
  auto* det = app.add_subcommand("det", "Quantum determinant of the leading k x k block");
  det->add_option("--size", det_size, "Block size (default min(m,n))")->check(CLI::Range(1, 5));
  auto* minor = app.add_subcommand("minor", "Quantum minor [I|J]");
  minor->add_option("--rows", rows, "Row set, e.g. 1,2")->required()->delimiter(',');
  minor->add_option("--cols", cols, "Column set, e.g. 2,3")->required()->delimiter(',');
  minor->add_flag("--primed", primed, "Minor of the matrix X' instead of X");
  auto* run = app.add_subcommand("suite", "Run a verification suite");
  run->add_option("name", suite, "Suite name")->required()->check(CLI::IsMember(names("suites")));
  auto* fit = app.add_subcommand("fit-exponents", "Fit the (-q)^k exponents of an expansion family");
  std::vector<std::string> families = names("families");
  families.push_back("all");
  fit->add_option("family", family, "Family name or 'all'")->required()->check(CLI::IsMember(families));
  auto* jordan = app.add_subcommand("jordan", "Determinant obstruction ingredients and membership verdict");
  auto* list = app.add_subcommand("list", "List suite or family names");
  list->add_option("what", list_what, "suites or families")->required()->check(CLI::IsMember({"suites", "families"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  if (list->parsed()) {
    char* out = nullptr;
    const qmv_status status = qmv_list(list_what.c_str(), &out);
    return emit(status, out);
  }

  qmv_session* raw = nullptr;
  if (qmv_session_create(opt.m, opt.n, &raw) != QMV_OK) {
    report_error("");
    return kExitUsage;
  }
  std::unique_ptr<qmv_session, decltype(&qmv_session_destroy)> session(raw, qmv_session_destroy);
  if (qmv_session_set_t(raw, opt.t) != QMV_OK) {
    report_error("");
    return kExitUsage;
  }
  qmv_session_set_seed(raw, opt.seed);
  qmv_session_set_format(raw, opt.format == "json" ? QMV_FORMAT_JSON : QMV_FORMAT_TEXT);
  qmv_session_set_timings(raw, opt.timings ? 1 : 0);

  char* out = nullptr;
  qmv_status status = QMV_OK;
  if (normalize->parsed()) {
    status = qmv_normalize(raw, expr.c_str(), &out);
    return emit(status, out, expr);
  }
  if (equal->parsed()) {
    status = qmv_equal(raw, lhs.c_str(), rhs.c_str(), &out);
    return emit(status, out);
  }
  if (det->parsed()) {
    status = qmv_det(raw, det_size, &out);
    return emit(status, out);
  }
  if (minor->parsed()) {
    status = qmv_minor(raw, rows.data(), rows.size(), cols.data(), cols.size(), primed ? 1 : 0, &out);
    return emit(status, out);
  }
  if (run->parsed()) {
    status = qmv_run_suite(raw, suite.c_str(), &out);
    return emit(status, out);
  }
  if (jordan->parsed()) {
    status = qmv_jordan(raw, &out);
    return emit(status, out);
  }
  if (fit->parsed()) {
    if (family != "all") {
      status = qmv_fit_exponents(raw, family.c_str(), &out);
      return emit(status, out);
    }
    const bool json = opt.format == "json";
    int worst = kExitPass;
    bool first = true;
    if (json) std::cout << "[\n";
    for (const auto& name : names("families")) {
      status = qmv_fit_exponents(raw, name.c_str(), &out);
      if (json && out && !first) std::cout << ",\n";
      if (out) first = false;
      const int code = emit(status, out);
      worst = std::max(worst, code);
    }
    if (json) std::cout << "]\n";
    return worst;
  }
  return kExitUsage;
}
