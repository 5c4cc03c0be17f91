#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

namespace uimpact {

enum class ReportKind {
  OverallCorrelation,
  DisciplineCorrelations,
  RatioRegression,
  Longitudinal,
  Ranking,
};

std::string_view to_string(ReportKind k);

// Empty cell, text, real, or integer.
using Cell = std::variant<std::monostate, std::string, double, std::int64_t>;

// Tabular analysis output. Rows are already in their documented order when
// a report is built; writers never re-sort. metadata is an ordered list so
// serialized output is byte-stable.
struct AnalysisReport {
  ReportKind kind = ReportKind::OverallCorrelation;
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;
  std::vector<std::pair<std::string, std::string>> metadata;

  void add_metadata(std::string key, std::string value);
  std::optional<std::size_t> column_index(std::string_view name) const;
  const Cell& cell(std::size_t row, std::string_view column) const;
};

// TSV: "# key: value" metadata lines, a header row, then data rows.
// Real cells are rounded half-to-even to 3 decimals (table precision);
// integers print exactly; empty cells print as empty fields.
void write_tsv(std::ostream& out, const AnalysisReport& report);

// JSON object {kind, metadata, columns, rows} with insertion-ordered keys
// and full-precision numbers; null for empty cells.
void write_json(std::ostream& out, const AnalysisReport& report);

// Rounds half-to-even at the given number of decimals.
double round_half_even(double v, int decimals);

// Fixed 3-decimal report formatting of a real value.
std::string format_report_value(double v);

// Shortest decimal form that round-trips to the same double.
std::string format_double(double v);

}  // namespace uimpact
