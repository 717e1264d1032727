#pragma once

// Machine-readable output: CSV, markdown tables and JSON lines for scan
// results. JSON records carry a schema version and keep a fixed key order.

#include <string>
#include <vector>

#include <json.hpp>

#include "commtuple/delta.hpp"

namespace commtuple {

enum class OutputFormat { kMarkdown, kCsv, kJsonLines };

OutputFormat parse_format(const std::string& text);

inline constexpr int kSchemaVersion = 1;

using Json = nlohmann::ordered_json;

/// One exceptional pair (Delta <= 0) from a scan.
struct ExceptionRecord {
  int ell;
  int a;
  int b;
  DeltaSign sign;
  friend bool operator==(const ExceptionRecord&, const ExceptionRecord&) = default;
};

/// Records of every report, ordered by (ell, a, b).
std::vector<ExceptionRecord> exception_records(const std::vector<ExceptionReport>& reports);

Json to_json(const ExceptionRecord& r);
ExceptionRecord exception_record_from_json(const Json& j);
Json to_json(const SignProfile& p);
SignProfile sign_profile_from_json(const Json& j);

/// Column-oriented text table rendered as CSV (header row, LF endings) or
/// as a markdown table.
struct TextTable {
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> rows;

  std::string render(OutputFormat format) const;
};

std::string render_exceptions(const std::vector<ExceptionReport>& reports, OutputFormat format);
std::string render_profiles(const std::vector<SignProfile>& profiles, OutputFormat format);
std::string render_positivity_thresholds(const std::vector<ExceptionReport>& reports,
                                         OutputFormat format);

}  // namespace commtuple
