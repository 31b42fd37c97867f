#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "rseries/verification.hpp"

// Named verification suites behind `rseries verify`, and the catalogue of
// printed formulas that the numerical checks contradict.

namespace rseries {

struct SuiteOptions {
  int workers = 1;
  std::optional<double> tolerance;  // replaces every record's own tolerance
};

/// all, series, shifts, trig, twosided, errata
const std::vector<std::string>& suite_names();

/// Throws DomainError for an unknown name. Records come back in a fixed order.
std::vector<VerificationRecord> run_suite(std::string_view name, const SuiteOptions& opts = {});

struct ErrataEntry {
  std::string key;        // equation or section label
  std::string topic;
  std::string printed;    // formula as printed
  std::string corrected;  // formula adopted
  double printed_value = 0.0;
  double corrected_value = 0.0;
  double reference_value = 0.0;
  std::string reference;  // where reference_value comes from
  double tolerance = 0.0;
  bool relative = false;
  std::string evidence;   // extra numbers worth printing
};

/// The ledger with its evidence computed afresh.
std::vector<ErrataEntry> errata_ledger(int workers = 1);

/// Two records per entry: printed value misses the reference, corrected value hits it.
std::vector<VerificationRecord> errata_records(const std::vector<ErrataEntry>& ledger);

}  // namespace rseries
