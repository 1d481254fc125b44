#pragma once

// Rendering of reports and series values as human text, JSON and CSV, and
// parsing of JSON reports.

#include <string>
#include <string_view>

#include "ohno/verifier.hpp"

namespace ohno {

enum class OutputFormat { Human, Json, Csv };

/// One line, no trailing newline. Keys in the order relation_id, inputs, lhs,
/// rhs, abs_err, combined_tail, tol, pass, then error when present. NaN renders as null.
std::string report_to_json(const VerificationReport& report);

/// Inverse of report_to_json. Raises ParseError on malformed input.
VerificationReport report_from_json(std::string_view text);

std::string report_csv_header();
std::string report_to_csv(const VerificationReport& report);
std::string report_to_human(const VerificationReport& report);
std::string render_report(const VerificationReport& report, OutputFormat format);

std::string series_value_csv_header();
std::string render_series_value(const SeriesValue& value, OutputFormat format);

std::string render_sweep_summary(const SweepResult& result, OutputFormat format);

}  // namespace ohno
