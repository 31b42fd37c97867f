#pragma once

#include <cstddef>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "rseries/coeff_triangle.hpp"
#include "rseries/series.hpp"
#include "rseries/suites.hpp"
#include "rseries/verification.hpp"

// Text, CSV and JSONL writers. Output depends only on the data passed in.

namespace rseries {

enum class Format { text, csv, jsonl };

std::optional<Format> parse_format(std::string_view s);

struct Summary {
  std::size_t total = 0;
  std::size_t passed = 0;
  std::size_t failed = 0;
  bool ok() const { return total > 0 && failed == 0; }
};

Summary summarize(const std::vector<VerificationRecord>& records);

/// %.17g, with nan/inf spelled out.
std::string format_number(double x);

/// One line per record, then a summary line.
void write_records(std::ostream& os, const std::vector<VerificationRecord>& records, Format f);

void write_eval(std::ostream& os, std::string_view what, const EvalResult& r, Format f);

struct TableRow {
  std::vector<double> params;  // same order as the column names
  std::string status;          // ok, divergent, capped, domain-error
  EvalResult result;
  std::string message;
};

void write_table(std::ostream& os, const std::vector<std::string>& columns, const std::vector<TableRow>& rows, Format f);

void write_coeffs(std::ostream& os, const CoeffTriangle& tri, Format f);

void write_errata(std::ostream& os, const std::vector<ErrataEntry>& ledger, Format f);

}  // namespace rseries
