#include "racklab/report.hpp"

#include <charconv>
#include <iomanip>
#include <sstream>

#include "json.hpp"
#include "racklab/certificate_io.hpp"

namespace racklab {

using nlohmann::json;

namespace {

std::string rack_descriptor(const StatusEntry& entry) {
  THRackSpec spec;
  spec.n = entry.n;
  spec.t = entry.t;
  spec.theta = entry.theta == ThetaKind::id ? Twist::identity()
                                            : Twist::conjugation(Permutation::parse("(1 2)", entry.n));
  spec.ell = representative_ell(entry);
  return spec.to_string();
}

std::string certificate_file_name(const StatusEntry& entry) {
  std::string name = to_string(*entry.generator) + "_n" + std::to_string(entry.n) + "_t" + std::to_string(entry.t);
  for (const auto& [length, count] : entry.type.multiplicities()) {
    name += "_" + std::to_string(length) + "x" + std::to_string(count);
  }
  return name + ".json";
}

int parse_int(std::string_view text) {
  int value = 0;
  const auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || end != text.data() + text.size()) {
    throw ParseError("expected an integer, got '" + std::string(text) + "'");
  }
  return value;
}

}  // namespace

std::pair<int, int> parse_range(std::string_view text) {
  const auto dots = text.find("..");
  if (dots == std::string_view::npos) {
    const int v = parse_int(text);
    return {v, v};
  }
  const int lo = parse_int(text.substr(0, dots));
  const int hi = parse_int(text.substr(dots + 2));
  if (lo > hi) throw ParseError("empty range '" + std::string(text) + "'");
  return {lo, hi};
}

Report build_report(const ReportOptions& options) {
  if (options.n_min < 5) throw ParameterError("n must be at least 5");
  if (options.t_min < 1) throw ParameterError("t must be at least 1");
  if (options.n_min > options.n_max || options.t_min > options.t_max) throw ParameterError("empty range");
  if (options.n_max > 12) throw ParameterError("n above 12 is not supported by the report");
  Report report;
  for (int n = options.n_min; n <= options.n_max; ++n) {
    const auto types = all_cycle_types(n);
    for (int t = options.t_min; t <= options.t_max; ++t) {
      for (const auto theta : {ThetaKind::id, ThetaKind::iota}) {
        for (const auto& type : types) {
          if (type.is_even() != (theta == ThetaKind::id)) continue;
          const StatusEntry entry = classify_status(n, t, theta, type);
          ReportRow row{n, t, theta, type, entry.status, entry.source, "", rack_descriptor(entry)};
          if (entry.generator) {
            const auto cert = certify(entry);
            const auto verdict = verify_certificate(*cert);
            row.rack = cert->rack.to_string();
            if (!verdict.valid) {
              row.status = Status::unknown;
              row.evidence = "certificate rejected: " + verdict.violation;
              report.failures.push_back(row.rack + ": " + verdict.violation);
            } else if (options.certificate_dir) {
              const auto path = *options.certificate_dir / certificate_file_name(entry);
              write_certificate(path, *cert);
              row.evidence = path.string();
            } else {
              row.evidence = "verified certificate |R| = " + std::to_string(cert->R.size()) +
                             ", |S| = " + std::to_string(cert->S.size());
            }
          } else if (entry.status == Status::not_type_d) {
            row.evidence = "exhaustive search";
          } else if (entry.status == Status::type_d_proved) {
            row.evidence = "prior classification";
          }
          report.rows.push_back(std::move(row));
        }
      }
    }
  }
  return report;
}

std::string report_text(const std::vector<ReportRow>& rows) {
  std::ostringstream out;
  out << std::left << std::setw(4) << "n" << std::setw(4) << "t" << std::setw(6) << "theta" << std::setw(22)
      << "type of ell u" << std::setw(15) << "status" << std::setw(22) << "source"
      << "evidence\n";
  for (const auto& row : rows) {
    out << std::setw(4) << row.n << std::setw(4) << row.t << std::setw(6) << to_string(row.theta) << std::setw(22)
        << row.type.to_string() << std::setw(15) << to_string(row.status) << std::setw(22) << row.source
        << row.evidence << "\n";
  }
  return out.str();
}

std::string report_json(const std::vector<ReportRow>& rows) {
  json doc;
  doc["rows"] = json::array();
  for (const auto& row : rows) {
    doc["rows"].push_back({{"n", row.n},
                           {"t", row.t},
                           {"theta", to_string(row.theta)},
                           {"type", row.type.to_string()},
                           {"status", to_string(row.status)},
                           {"source", row.source},
                           {"evidence", row.evidence},
                           {"rack", row.rack}});
  }
  return doc.dump(1) + "\n";
}

std::vector<ReportRow> parse_report_json(std::string_view text) {
  std::vector<ReportRow> rows;
  try {
    const json doc = json::parse(text);
    for (const auto& item : doc.at("rows")) {
      ReportRow row;
      row.n = item.at("n").get<int>();
      row.t = item.at("t").get<int>();
      row.theta = parse_theta_kind(item.at("theta").get<std::string>());
      row.type = CycleType::parse(item.at("type").get<std::string>());
      row.status = parse_status(item.at("status").get<std::string>());
      row.source = item.at("source").get<std::string>();
      row.evidence = item.at("evidence").get<std::string>();
      row.rack = item.at("rack").get<std::string>();
      rows.push_back(std::move(row));
    }
  } catch (const json::exception& e) {
    throw ParseError(std::string("malformed report: ") + e.what());
  }
  return rows;
}

}  // namespace racklab
