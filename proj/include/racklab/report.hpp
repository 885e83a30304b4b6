#pragma once

// The status table for twisted homogeneous racks over Alt_n: one row per
// (n, t, theta, cycle type of ell u). Rows proved by a generator carry a
// certificate that is built and verified while the report is assembled.

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "racklab/status.hpp"

namespace racklab {

struct ReportRow {
  int n = 5;
  int t = 2;
  ThetaKind theta = ThetaKind::id;
  CycleType type;
  Status status = Status::unknown;
  std::string source;
  // Certificate path or summary, "exhaustive search", or the prior result.
  std::string evidence;
  // Representative rack descriptor.
  std::string rack;

  friend bool operator==(const ReportRow&, const ReportRow&) = default;
};

struct ReportOptions {
  int n_min = 5, n_max = 8;
  int t_min = 2, t_max = 5;
  // When set, each generated certificate is written here and its path is
  // recorded as evidence.
  std::optional<std::filesystem::path> certificate_dir;
};

struct Report {
  std::vector<ReportRow> rows;
  // Generator rows whose certificate failed to verify; their status is
  // reported as unknown.
  std::vector<std::string> failures;
};

Report build_report(const ReportOptions& options);

std::string report_text(const std::vector<ReportRow>& rows);
std::string report_json(const std::vector<ReportRow>& rows);
// Throws ParseError.
std::vector<ReportRow> parse_report_json(std::string_view text);

// "5..8" or "6".
std::pair<int, int> parse_range(std::string_view text);

}  // namespace racklab
