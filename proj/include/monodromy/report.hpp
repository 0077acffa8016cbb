// Report envelope shared by the command-line subcommands: one JSON payload
// per invocation plus optional tabular (csv) and human-readable (pretty)
// renderings of the same results.
#ifndef MONODROMY_REPORT_HPP_
#define MONODROMY_REPORT_HPP_

#include <iosfwd>
#include <string>
#include <vector>

#include "monodromy/serialize.hpp"

namespace monodromy {

enum class OutputFormat { kJson, kCsv, kPretty };

OutputFormat parse_format(const std::string& name);  // "json" / "csv" / "pretty"

struct ReportEnvelope {
  std::string command;
  Json parameters = Json::object();
  Json results = Json::object();
  std::vector<std::string> notes;

  // Tabular rendering (used by --format csv); one row list per invocation.
  std::vector<std::string> csv_header;
  std::vector<std::vector<std::string>> csv_rows;
  // Line-oriented rendering (used by --format pretty).
  std::vector<std::string> pretty_lines;

  void emit(std::ostream& os, OutputFormat format) const;
};

}  // namespace monodromy

#endif  // MONODROMY_REPORT_HPP_
