#pragma once

// Serialization of classification reports: JSONL, CSV and a text summary.

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "weilpoly/engine.hpp"

namespace weilpoly {

using Json = nlohmann::ordered_json;

class ReportParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Stable field order; timings_ms is null when with_timings is false.
Json to_json(ClassificationReport const & rep, bool with_timings = true);
std::string to_jsonl_line(ClassificationReport const & rep, bool with_timings = true);

/// Fixed column set shared by the CSV writer and by comparisons against
/// JSONL.  Nested objects become dotted keys, arrays are joined with "; ",
/// null is the empty string and strings are unquoted.
using FlatRow = std::vector<std::pair<std::string, std::string>>;
FlatRow flatten(Json const & report);

std::string csv_header();
std::string csv_row(FlatRow const & row);
std::string csv_escape(std::string const & field);

/// Multi-line human-readable report.
std::string pretty(ClassificationReport const & rep);

/// One JSON object per non-blank line; throws ReportParseError with the
/// line number on malformed input.
std::vector<Json> read_jsonl(std::istream & in);

/// Table of per-(rho, b) counts, absolute-simplicity outcomes and the
/// largest numeric deviation.  Raw polynomial inputs are grouped under "-".
std::string summary_table(std::vector<Json> const & reports);

} // namespace weilpoly
