#include "qmv/qmv.h"

#include "dsl.hpp"
#include "exponent_table.hpp"
#include "fit.hpp"
#include "membership.hpp"
#include "verify.hpp"

#include <nlohmann/json.hpp>

#include <cstdlib>
#include <cstring>
#include <optional>
#include <string>

using nlohmann::ordered_json;

struct qmv_session {
  std::optional<int> m;
  std::optional<int> n;
  std::optional<int> t;
  std::uint64_t seed = 1;
  qmv_format format = QMV_FORMAT_TEXT;
  bool timings = false;

  qmv::Shape shape() const { return {m.value_or(n.value_or(3)), n.value_or(m.value_or(3))}; }
  qmv::SuiteParams params() const { return {m, n, t, seed}; }
  bool json() const { return format == QMV_FORMAT_JSON; }
};

namespace {

thread_local std::string g_error;
thread_local long g_position = -1;

class CheckFailed {};

char* dup(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

qmv_status fail(qmv_status status, const std::string& message) {
  g_error = message;
  return status;
}

// Runs body, which returns the output text and whether all checks passed.
template <class Body>
qmv_status guarded(char** out, Body&& body) {
  g_error.clear();
  g_position = -1;
  if (out) *out = nullptr;
  try {
    auto [text, ok] = body();
    if (out) *out = dup(text);
    return ok ? QMV_OK : QMV_CHECK_FAILED;
  } catch (const qmv::ParseError& e) {
    g_position = static_cast<long>(e.position());
    return fail(QMV_PARSE_ERROR, e.what());
  } catch (const qmv::UnsupportedError& e) {
    return fail(QMV_UNSUPPORTED, e.what());
  } catch (const qmv::ShapeError& e) {
    return fail(QMV_USAGE_ERROR, e.what());
  } catch (const qmv::IndexError& e) {
    return fail(QMV_USAGE_ERROR, e.what());
  } catch (const std::invalid_argument& e) {
    return fail(QMV_USAGE_ERROR, e.what());
  } catch (const std::exception& e) {
    return fail(QMV_INTERNAL_ERROR, e.what());
  } catch (...) {
    return fail(QMV_INTERNAL_ERROR, "unknown error");
  }
}

using Result = std::pair<std::string, bool>;

std::string dump(const ordered_json& doc) { return doc.dump(2) + "\n"; }

Result value_report(const qmv_session& s, const std::string& input, const qmv::Localized& value) {
  const std::string text = qmv::to_string(value);
  if (!s.json()) return {text + "\n", true};
  ordered_json doc;
  doc["shape"] = s.shape().to_string();
  doc["input"] = input;
  doc["result"] = text;
  doc["denominator_power"] = value.denominator_power();
  return {dump(doc), true};
}

std::string set_text(const int* values, std::size_t count) {
  std::string out = "{";
  for (std::size_t i = 0; i < count; ++i) out += (i ? "," : "") + std::to_string(values[i]);
  return out + "}";
}

}  // namespace

extern "C" {

qmv_status qmv_session_create(int m, int n, qmv_session** out) {
  g_error.clear();
  if (!out) return fail(QMV_USAGE_ERROR, "null output pointer");
  *out = nullptr;
  auto session = std::make_unique<qmv_session>();
  if (m < 0 || n < 0) return fail(QMV_USAGE_ERROR, "dimensions must be positive");
  if (m > 0) session->m = m;
  if (n > 0) session->n = n;
  try {
    (void)session->shape();
  } catch (const qmv::ShapeError& e) {
    return fail(QMV_USAGE_ERROR, e.what());
  }
  *out = session.release();
  return QMV_OK;
}

void qmv_session_destroy(qmv_session* session) { delete session; }

qmv_status qmv_session_set_t(qmv_session* session, int t) {
  if (!session) return fail(QMV_USAGE_ERROR, "null session");
  if (t == 0) {
    session->t.reset();
    return QMV_OK;
  }
  const qmv::Shape shape = session->shape();
  if (t < 1 || t > std::min(shape.m, shape.n))
    return fail(QMV_USAGE_ERROR, "t must lie in 1.." + std::to_string(std::min(shape.m, shape.n)) + " for shape " +
                                     shape.to_string());
  session->t = t;
  return QMV_OK;
}

qmv_status qmv_session_set_seed(qmv_session* session, uint64_t seed) {
  if (!session) return fail(QMV_USAGE_ERROR, "null session");
  session->seed = seed;
  return QMV_OK;
}

qmv_status qmv_session_set_format(qmv_session* session, qmv_format format) {
  if (!session) return fail(QMV_USAGE_ERROR, "null session");
  if (format != QMV_FORMAT_TEXT && format != QMV_FORMAT_JSON) return fail(QMV_USAGE_ERROR, "unknown format");
  session->format = format;
  return QMV_OK;
}

qmv_status qmv_session_set_timings(qmv_session* session, int enabled) {
  if (!session) return fail(QMV_USAGE_ERROR, "null session");
  session->timings = enabled != 0;
  return QMV_OK;
}

qmv_status qmv_normalize(qmv_session* session, const char* expr, char** out) {
  if (!session || !expr || !out) return fail(QMV_USAGE_ERROR, "null argument");
  return guarded(out, [&]() -> Result {
    return value_report(*session, expr, qmv::dsl::evaluate(expr, session->shape()));
  });
}

qmv_status qmv_equal(qmv_session* session, const char* lhs, const char* rhs, char** out) {
  if (!session || !lhs || !rhs || !out) return fail(QMV_USAGE_ERROR, "null argument");
  return guarded(out, [&]() -> Result {
    const qmv::Shape shape = session->shape();
    const qmv::Localized diff = qmv::dsl::evaluate(lhs, shape) - qmv::dsl::evaluate(rhs, shape);
    const bool equal = diff.is_zero();
    if (session->json()) {
      ordered_json doc;
      doc["shape"] = shape.to_string();
      doc["lhs"] = lhs;
      doc["rhs"] = rhs;
      doc["equal"] = equal;
      if (!equal) doc["witness"] = qmv::to_string(diff);
      return {dump(doc), equal};
    }
    return {equal ? "equal\n" : "not equal\nlhs - rhs = " + qmv::to_string(diff) + "\n", equal};
  });
}

qmv_status qmv_det(qmv_session* session, int k, char** out) {
  if (!session || !out) return fail(QMV_USAGE_ERROR, "null argument");
  return guarded(out, [&]() -> Result {
    const qmv::Shape shape = session->shape();
    const int size = k == 0 ? std::min(shape.m, shape.n) : k;
    return value_report(*session, "Dq@" + std::to_string(size), qmv::Localized(qmv::leading_determinant(shape, size)));
  });
}

qmv_status qmv_minor(qmv_session* session, const int* rows, size_t row_count, const int* cols, size_t col_count,
                     int primed, char** out) {
  if (!session || !out || (!rows && row_count) || (!cols && col_count)) return fail(QMV_USAGE_ERROR, "null argument");
  return guarded(out, [&]() -> Result {
    const qmv::Shape shape = session->shape();
    qmv::MinorSpec spec{{rows, rows + row_count}, {cols, cols + col_count}};
    const std::string label =
        std::string(primed ? "Mp" : "M") + "[" + set_text(rows, row_count) + "|" + set_text(cols, col_count) + "]";
    if (primed) return value_report(*session, label, qmv::x_prime_minor(shape, spec));
    return value_report(*session, label, qmv::Localized(qmv::minor(shape, spec)));
  });
}

qmv_status qmv_run_suite(qmv_session* session, const char* name, char** out) {
  if (!session || !name || !out) return fail(QMV_USAGE_ERROR, "null argument");
  return guarded(out, [&]() -> Result {
    const qmv::SuiteReport report = qmv::run_suite(name, session->params());
    const auto format = session->json() ? qmv::ReportFormat::json : qmv::ReportFormat::text;
    return {qmv::render(report, format, session->timings), report.passed()};
  });
}

qmv_status qmv_fit_exponents(qmv_session* session, const char* family, char** out) {
  if (!session || !family || !out) return fail(QMV_USAGE_ERROR, "null argument");
  return guarded(out, [&]() -> Result {
    const qmv::FitSize smallest = qmv::smallest_fit_size(family);
    const bool sized = session->m || session->n;
    const qmv::Shape shape = sized ? session->shape() : smallest.shape;
    const int t = session->t.value_or(smallest.t);
    const qmv::ExponentFit fit = qmv::fit_exponents(family, shape, t);
    const std::vector<std::string> frozen = qmv::fit_regression(family);
    const bool ok = fit.matches_law() && frozen.empty();
    if (session->json()) {
      ordered_json doc;
      doc["family"] = fit.family;
      doc["size"] = fit.size;
      doc["status"] = qmv::to_string(fit.status);
      doc["residual_zero"] = fit.residual_zero;
      doc["matches_law"] = fit.matches_law();
      doc["frozen_table"] = {{"version", qmv::kExponentTableVersion}, {"agrees", frozen.empty()}, {"problems", frozen}};
      auto table = ordered_json::array();
      for (const auto& e : fit.table) {
        ordered_json row;
        row["instance"] = e.instance;
        row["term"] = e.term;
        row["exponent"] = e.exponent ? ordered_json(*e.exponent) : ordered_json(nullptr);
        row["law"] = e.law_exponent;
        table.push_back(std::move(row));
      }
      doc["table"] = std::move(table);
      return {dump(doc), ok};
    }
    std::string text = "family " + fit.family + " at " + fit.size + ": " + qmv::to_string(fit.status) +
                       (fit.residual_zero ? ", residual zero" : ", NONZERO residual") +
                       (fit.matches_law() ? ", matches law" : ", DIFFERS from law") + "\n";
    text += "frozen table v" + std::to_string(qmv::kExponentTableVersion) + ": " +
            (frozen.empty() ? "agrees" : "DISAGREES") + "\n";
    for (const auto& p : frozen) text += "  " + p + "\n";
    for (const auto& e : fit.table)
      text += "  " + e.instance + "  " + e.term + "  " + (e.exponent ? std::to_string(*e.exponent) : "?") +
              (e.exponent && *e.exponent == e.law_exponent ? "" : "  (law " + std::to_string(e.law_exponent) + ")") +
              "\n";
    return {text, ok};
  });
}

qmv_status qmv_jordan(qmv_session* session, char** out) {
  if (!session || !out) return fail(QMV_USAGE_ERROR, "null argument");
  return guarded(out, [&]() -> Result {
    const qmv::Shape shape = session->shape();
    if (!shape.square()) throw qmv::ShapeError("jordan needs a square shape, got " + shape.to_string());
    const qmv::JordanIngredients parts = qmv::jordan_ingredients(shape.n);
    const bool split = parts.c == parts.d * parts.x + parts.e;
    const bool split_mod =
        qmv::kill_corner(parts.c) ==
        qmv::kill_corner(qmv::kill_corner(parts.d) * qmv::kill_corner(parts.x) + qmv::kill_corner(parts.e));
    const qmv::MembershipResult verdict = qmv::solve_membership(qmv::jordan_membership(parts));
    const bool ok = split && split_mod && !verdict.solvable();
    const std::string n = std::to_string(shape.n);
    if (session->json()) {
      ordered_json doc;
      doc["shape"] = shape.to_string();
      doc["c"] = qmv::to_string(parts.c);
      doc["d"] = qmv::to_string(parts.d);
      doc["x"] = qmv::to_string(parts.x);
      doc["e"] = qmv::to_string(parts.e);
      doc["c_equals_dx_plus_e"] = split;
      doc["c_equals_dx_plus_e_mod_corner"] = split_mod;
      doc["membership"] = {{"status", qmv::to_string(verdict.status)},
                           {"unknowns", verdict.unknowns},
                           {"rank", verdict.rank}};
      return {dump(doc), ok};
    }
    std::string text = "jordan ingredients (" + shape.to_string() + ")\n";
    text += "c = " + qmv::to_string(parts.c) + "\n";
    text += "d = " + qmv::to_string(parts.d) + "\n";
    text += "x = " + qmv::to_string(parts.x) + "\n";
    text += "e = " + qmv::to_string(parts.e) + "\n";
    text += std::string("c = d*x + e: ") + (split ? "holds" : "FAILS") + "\n";
    text += "c = d*x + e with X[1," + n + "] -> 0: " + (split_mod ? "holds" : "FAILS") + "\n";
    text += "e = d*alpha + beta*X[1," + n + "], alpha and beta avoiding X[" + n + "," + n + "]: " +
            (verdict.solvable() ? "SOLVABLE" : "no solution") + " (" + std::to_string(verdict.unknowns) +
            " unknowns, rank " + std::to_string(verdict.rank) + ")\n";
    return {text, ok};
  });
}

qmv_status qmv_list(const char* what, char** out) {
  if (!what || !out) return fail(QMV_USAGE_ERROR, "null argument");
  return guarded(out, [&]() -> Result {
    const std::string kind = what;
    const std::vector<std::string>* names = nullptr;
    if (kind == "suites") names = &qmv::suite_names();
    if (kind == "families") names = &qmv::fit_families();
    if (!names) throw std::invalid_argument("unknown list '" + kind + "'");
    std::string text;
    for (const auto& name : *names) text += name + "\n";
    return {text, true};
  });
}

void qmv_string_free(char* s) { std::free(s); }

const char* qmv_last_error(void) { return g_error.c_str(); }

long qmv_error_position(void) { return g_position; }

const char* qmv_status_name(qmv_status status) {
  switch (status) {
    case QMV_OK: return "ok";
    case QMV_CHECK_FAILED: return "check failed";
    case QMV_PARSE_ERROR: return "parse error";
    case QMV_USAGE_ERROR: return "usage error";
    case QMV_UNSUPPORTED: return "unsupported";
    case QMV_INTERNAL_ERROR: return "internal error";
  }
  return "unknown status";
}

}  // extern "C"
