#pragma once

#include <cstdint>
#include <string>

namespace rseries {

/// One checked identity instance.
struct VerificationRecord {
  std::string id;
  double lhs = 0.0;
  double rhs = 0.0;
  double residual = 0.0;  // |lhs - rhs|, divided by max(|rhs|, 1e-300) when relative
  double tolerance = 0.0;
  bool relative = false;
  // The record documents a known discrepancy: it passes when the residual exceeds the tolerance.
  bool expect_mismatch = false;
  bool pass = false;
  std::string method;
  std::int64_t terms = 0;
  std::string note;
};

inline VerificationRecord make_record(std::string id, double lhs, double rhs, double tolerance, bool relative,
                                      std::string method, std::int64_t terms = 0, std::string note = {}) {
  VerificationRecord r;
  r.id = std::move(id);
  r.lhs = lhs;
  r.rhs = rhs;
  const double diff = lhs - rhs;
  const double scale = relative ? (rhs < 0 ? -rhs : rhs) : 1.0;
  r.residual = (diff < 0 ? -diff : diff) / (scale > 1e-300 ? scale : 1e-300);
  r.tolerance = tolerance;
  r.relative = relative;
  // NaN residuals fail
  r.pass = r.residual <= tolerance;
  r.method = std::move(method);
  r.terms = terms;
  r.note = std::move(note);
  return r;
}

inline VerificationRecord make_mismatch_record(std::string id, double lhs, double rhs, double tolerance, bool relative,
                                               std::string method, std::string note = {}) {
  VerificationRecord r = make_record(std::move(id), lhs, rhs, tolerance, relative, std::move(method), 0, std::move(note));
  r.expect_mismatch = true;
  r.pass = r.residual > tolerance;
  return r;
}

/// Re-judges a record against a new tolerance.
inline void retolerance(VerificationRecord& r, double tolerance) {
  r.tolerance = tolerance;
  r.pass = r.expect_mismatch ? r.residual > tolerance : r.residual <= tolerance;
}

}  // namespace rseries
