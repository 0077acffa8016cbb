#include "monodromy/report.hpp"

#include <ostream>

#include "monodromy/common.hpp"

namespace monodromy {

namespace {

// Minimal csv quoting: wrap fields containing separators or quotes.
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

}  // namespace

OutputFormat parse_format(const std::string& name) {
  if (name == "json") return OutputFormat::kJson;
  if (name == "csv") return OutputFormat::kCsv;
  if (name == "pretty") return OutputFormat::kPretty;
  fail_parse("unknown output format: " + name);
}

void ReportEnvelope::emit(std::ostream& os, OutputFormat format) const {
  switch (format) {
    case OutputFormat::kJson: {
      Json j{{"command", command},
             {"parameters", parameters},
             {"results", results},
             {"notes", notes},
             {"schema_version", "1.0"}};
      os << j.dump(2) << "\n";
      return;
    }
    case OutputFormat::kCsv: {
      std::string line;
      for (size_t i = 0; i < csv_header.size(); ++i) {
        if (i) line += ',';
        line += csv_field(csv_header[i]);
      }
      os << line << "\n";
      for (const auto& row : csv_rows) {
        line.clear();
        for (size_t i = 0; i < row.size(); ++i) {
          if (i) line += ',';
          line += csv_field(row[i]);
        }
        os << line << "\n";
      }
      return;
    }
    case OutputFormat::kPretty: {
      for (const auto& l : pretty_lines) os << l << "\n";
      for (const auto& n : notes) os << "note: " << n << "\n";
      return;
    }
  }
}

}  // namespace monodromy
