#include "uimpact/report.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <ostream>
#include <stdexcept>

#include <json.hpp>

namespace uimpact {

std::string_view to_string(ReportKind k) {
  switch (k) {
    case ReportKind::OverallCorrelation: return "overall_correlation";
    case ReportKind::DisciplineCorrelations: return "discipline_correlations";
    case ReportKind::RatioRegression: return "ratio_regression";
    case ReportKind::Longitudinal: return "longitudinal";
    case ReportKind::Ranking: return "ranking";
  }
  return "overall_correlation";
}

void AnalysisReport::add_metadata(std::string key, std::string value) {
  metadata.emplace_back(std::move(key), std::move(value));
}

std::optional<std::size_t> AnalysisReport::column_index(std::string_view name) const {
  for (std::size_t i = 0; i < columns.size(); ++i) {
    if (columns[i] == name) return i;
  }
  return std::nullopt;
}

const Cell& AnalysisReport::cell(std::size_t row, std::string_view column) const {
  const auto idx = column_index(column);
  if (!idx) throw std::out_of_range("report has no column '" + std::string(column) + "'");
  return rows.at(row).at(*idx);
}

double round_half_even(double v, int decimals) {
  double scale = 1.0;
  for (int i = 0; i < decimals; ++i) scale *= 10.0;
  // nearbyint under the default FE_TONEAREST mode rounds halves to even
  return std::nearbyint(v * scale) / scale;
}

std::string format_report_value(double v) {
  if (!std::isfinite(v)) return std::isnan(v) ? "nan" : (v > 0 ? "inf" : "-inf");
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.3f", round_half_even(v, 3));
  return buf;
}

std::string format_double(double v) {
  if (!std::isfinite(v)) return std::isnan(v) ? "nan" : (v > 0 ? "inf" : "-inf");
  char buf[64];
  for (int precision = 1; precision <= 17; ++precision) {
    std::snprintf(buf, sizeof buf, "%.*g", precision, v);
    if (std::strtod(buf, nullptr) == v) break;
  }
  return buf;
}

namespace {

void write_cell_tsv(std::ostream& out, const Cell& cell) {
  if (std::holds_alternative<std::monostate>(cell)) return;
  if (const auto* s = std::get_if<std::string>(&cell)) {
    out << *s;
  } else if (const auto* d = std::get_if<double>(&cell)) {
    out << format_report_value(*d);
  } else {
    out << std::get<std::int64_t>(cell);
  }
}

}  // namespace

void write_tsv(std::ostream& out, const AnalysisReport& report) {
  out << "# kind: " << to_string(report.kind) << "\n";
  for (const auto& [key, value] : report.metadata) {
    out << "# " << key << ": " << value << "\n";
  }
  for (std::size_t i = 0; i < report.columns.size(); ++i) {
    if (i) out << '\t';
    out << report.columns[i];
  }
  out << '\n';
  for (const auto& row : report.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) out << '\t';
      write_cell_tsv(out, row[i]);
    }
    out << '\n';
  }
}

void write_json(std::ostream& out, const AnalysisReport& report) {
  nlohmann::ordered_json doc;
  doc["kind"] = std::string(to_string(report.kind));
  nlohmann::ordered_json meta = nlohmann::ordered_json::object();
  for (const auto& [key, value] : report.metadata) meta[key] = value;
  doc["metadata"] = std::move(meta);
  doc["columns"] = report.columns;
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  for (const auto& row : report.rows) {
    nlohmann::ordered_json jrow = nlohmann::ordered_json::array();
    for (const Cell& cell : row) {
      if (std::holds_alternative<std::monostate>(cell)) {
        jrow.push_back(nullptr);
      } else if (const auto* s = std::get_if<std::string>(&cell)) {
        jrow.push_back(*s);
      } else if (const auto* d = std::get_if<double>(&cell)) {
        jrow.push_back(*d);
      } else {
        jrow.push_back(std::get<std::int64_t>(cell));
      }
    }
    rows.push_back(std::move(jrow));
  }
  doc["rows"] = std::move(rows);
  out << doc.dump(2) << '\n';
}

}  // namespace uimpact
