#include "rseries/report.hpp"

#include <cmath>
#include <cstdio>
#include <iomanip>

#include <json.hpp>

namespace rseries {

namespace {

using Json = nlohmann::ordered_json;

Json number(double x) {
  if (std::isfinite(x)) return x;
  return nullptr;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

std::string short_number(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.10g", x);
  return buf;
}

const char* verdict(const VerificationRecord& r) { return r.pass ? "pass" : "fail"; }

}  // namespace

std::optional<Format> parse_format(std::string_view s) {
  if (s == "text") return Format::text;
  if (s == "csv") return Format::csv;
  if (s == "jsonl") return Format::jsonl;
  return std::nullopt;
}

Summary summarize(const std::vector<VerificationRecord>& records) {
  Summary s;
  for (const auto& r : records) {
    ++s.total;
    if (r.pass) {
      ++s.passed;
    } else {
      ++s.failed;
    }
  }
  return s;
}

std::string format_number(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

void write_records(std::ostream& os, const std::vector<VerificationRecord>& records, Format f) {
  const Summary s = summarize(records);
  const char* overall = s.ok() ? "pass" : "fail";
  switch (f) {
    case Format::jsonl:
      for (const auto& r : records) {
        Json j;
        j["id"] = r.id;
        j["lhs"] = number(r.lhs);
        j["rhs"] = number(r.rhs);
        j["residual"] = number(r.residual);
        j["tol"] = r.tolerance;
        j["verdict"] = verdict(r);
        j["method"] = r.method;
        j["terms"] = r.terms;
        j["note"] = r.note;
        os << j.dump() << '\n';
      }
      {
        Json j;
        j["summary"] = true;
        j["records"] = s.total;
        j["passed"] = s.passed;
        j["failed"] = s.failed;
        j["verdict"] = overall;
        os << j.dump() << '\n';
      }
      break;
    case Format::csv:
      os << "id,lhs,rhs,residual,tol,verdict,method,terms,note\n";
      for (const auto& r : records) {
        os << csv_field(r.id) << ',' << format_number(r.lhs) << ',' << format_number(r.rhs) << ','
           << format_number(r.residual) << ',' << format_number(r.tolerance) << ',' << verdict(r) << ','
           << csv_field(r.method) << ',' << r.terms << ',' << csv_field(r.note) << '\n';
      }
      os << "summary,,,,," << overall << ",," << s.total << ','
         << csv_field(std::to_string(s.passed) + " passed, " + std::to_string(s.failed) + " failed") << '\n';
      break;
    case Format::text:
      for (const auto& r : records) {
        os << (r.pass ? "PASS " : "FAIL ") << r.id << "  residual " << short_number(r.residual)
           << (r.expect_mismatch ? " > " : " <= ") << short_number(r.tolerance) << (r.relative ? " (rel)" : "");
        if (!r.pass) {
          os << "\n     lhs " << format_number(r.lhs) << "\n     rhs " << format_number(r.rhs);
          if (!r.note.empty()) os << "\n     " << r.note;
        }
        os << '\n';
      }
      os << "summary: " << s.total << " records, " << s.passed << " passed, " << s.failed << " failed: "
         << (s.ok() ? "PASS" : "FAIL") << '\n';
      break;
  }
}

void write_eval(std::ostream& os, std::string_view what, const EvalResult& r, Format f) {
  switch (f) {
    case Format::jsonl: {
      Json j;
      j["quantity"] = std::string(what);
      j["value"] = number(r.value);
      j["abs_error_bound"] = number(r.abs_error_bound);
      j["method"] = std::string(to_string(r.method));
      j["terms"] = r.terms_used;
      j["converged"] = r.converged;
      j["accelerated"] = r.accelerated;
      os << j.dump() << '\n';
      break;
    }
    case Format::csv:
      os << "quantity,value,abs_error_bound,method,terms,converged,accelerated\n"
         << csv_field(std::string(what)) << ',' << format_number(r.value) << ',' << format_number(r.abs_error_bound)
         << ',' << to_string(r.method) << ',' << r.terms_used << ',' << (r.converged ? "true" : "false") << ','
         << (r.accelerated ? "true" : "false") << '\n';
      break;
    case Format::text:
      os << what << '\n'
         << "  value        " << format_number(r.value) << '\n'
         << "  error bound  " << short_number(r.abs_error_bound) << '\n'
         << "  method       " << to_string(r.method) << '\n'
         << "  terms        " << r.terms_used << '\n';
      if (!r.converged) os << "  warning      iteration cap reached before the target bound\n";
      if (r.accelerated) os << "  note         value extrapolated from partial sums\n";
      break;
  }
}

void write_table(std::ostream& os, const std::vector<std::string>& columns, const std::vector<TableRow>& rows,
                 Format f) {
  switch (f) {
    case Format::jsonl:
      for (const auto& row : rows) {
        Json j;
        for (std::size_t c = 0; c < columns.size(); ++c) j[columns[c]] = number(row.params[c]);
        const bool has_value = row.status == "ok" || row.status == "capped";
        j["value"] = has_value ? number(row.result.value) : Json(nullptr);
        j["abs_error_bound"] = has_value ? number(row.result.abs_error_bound) : Json(nullptr);
        j["terms"] = has_value ? row.result.terms_used : 0;
        j["status"] = row.status;
        j["note"] = row.message;
        os << j.dump() << '\n';
      }
      break;
    case Format::csv:
    case Format::text: {
      const char sep = f == Format::csv ? ',' : '\t';
      for (const auto& c : columns) os << c << sep;
      os << "value" << sep << "abs_error_bound" << sep << "terms" << sep << "status" << sep << "note\n";
      for (const auto& row : rows) {
        for (double p : row.params) os << format_number(p) << sep;
        if (row.status == "ok" || row.status == "capped") {
          os << format_number(row.result.value) << sep << format_number(row.result.abs_error_bound) << sep
             << row.result.terms_used;
        } else {
          os << sep << sep;
        }
        os << sep << row.status << sep << (f == Format::csv ? csv_field(row.message) : row.message) << '\n';
      }
      break;
    }
  }
}

void write_coeffs(std::ostream& os, const CoeffTriangle& tri, Format f) {
  if (f == Format::jsonl) {
    for (int m = 1; m <= tri.depth(); ++m) {
      for (int k = 1; k <= m; ++k) {
        Json j;
        j["m"] = m;
        j["k"] = k;
        j["A"] = number(tri.at(m, k));
        os << j.dump() << '\n';
      }
    }
    return;
  }
  os << "m,k,A\n";
  for (int m = 1; m <= tri.depth(); ++m) {
    for (int k = 1; k <= m; ++k) os << m << ',' << k << ',' << format_number(tri.at(m, k)) << '\n';
  }
}

void write_errata(std::ostream& os, const std::vector<ErrataEntry>& ledger, Format f) {
  switch (f) {
    case Format::jsonl:
      for (const auto& e : ledger) {
        Json j;
        j["key"] = e.key;
        j["topic"] = e.topic;
        j["printed"] = e.printed;
        j["corrected"] = e.corrected;
        j["printed_value"] = number(e.printed_value);
        j["corrected_value"] = number(e.corrected_value);
        j["reference_value"] = number(e.reference_value);
        j["reference"] = e.reference;
        j["tol"] = e.tolerance;
        j["relative"] = e.relative;
        j["evidence"] = e.evidence;
        os << j.dump() << '\n';
      }
      break;
    case Format::csv:
      os << "key,topic,printed,corrected,printed_value,corrected_value,reference_value,reference,tol,relative,evidence\n";
      for (const auto& e : ledger) {
        os << csv_field(e.key) << ',' << csv_field(e.topic) << ',' << csv_field(e.printed) << ','
           << csv_field(e.corrected) << ',' << format_number(e.printed_value) << ','
           << format_number(e.corrected_value) << ',' << format_number(e.reference_value) << ','
           << csv_field(e.reference) << ',' << format_number(e.tolerance) << ',' << (e.relative ? "true" : "false")
           << ',' << csv_field(e.evidence) << '\n';
      }
      break;
    case Format::text:
      for (const auto& e : ledger) {
        os << e.key << "  " << e.topic << '\n'
           << "  printed    " << e.printed << '\n'
           << "  corrected  " << e.corrected << '\n'
           << "  values     printed " << short_number(e.printed_value) << ", corrected "
           << short_number(e.corrected_value) << ", reference " << short_number(e.reference_value) << '\n'
           << "  reference  " << e.reference << '\n';
        if (!e.evidence.empty()) os << "  evidence   " << e.evidence << '\n';
        os << '\n';
      }
      break;
  }
}

}  // namespace rseries
