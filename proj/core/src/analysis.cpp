#include "uimpact/analysis.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <ostream>

namespace uimpact::analysis {

namespace {

constexpr std::string_view kStatusOk = "ok";
constexpr std::string_view kStatusNoJournals = "no_journals";
constexpr std::string_view kStatusTooFew = "too_few";
constexpr std::string_view kStatusDegenerate = "degenerate_variance";

std::string to_lower(std::string_view s) {
  std::string out(s);
  std::transform(out.begin(), out.end(), out.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return out;
}

void require_both_values(const JournalYearRecord& r) {
  if (!r.uif_value || !r.if_value) {
    throw std::invalid_argument("record '" + r.journal_key +
                                "' lacks a uif or if value");
  }
}

// One spearman attempt over paired values, folded into a (result, status)
// shape the report rows share.
struct SubsetCorrelation {
  std::optional<stats::CorrelationResult> result;
  std::string_view status = kStatusOk;
  std::int64_t n = 0;
};

SubsetCorrelation correlate_subset(const std::vector<double>& uif,
                                   const std::vector<double>& ifv,
                                   const stats::SpearmanOptions& options) {
  SubsetCorrelation out;
  out.n = static_cast<std::int64_t>(uif.size());
  if (uif.empty()) {
    out.status = kStatusNoJournals;
    return out;
  }
  if (uif.size() < 3) {
    out.status = kStatusTooFew;
    return out;
  }
  try {
    out.result = stats::spearman(uif, ifv, options);
  } catch (const stats::DegenerateVarianceError&) {
    out.status = kStatusDegenerate;
  }
  return out;
}

}  // namespace

std::string_view to_string(RatioKind k) {
  switch (k) {
    case RatioKind::All: return "all";
    case RatioKind::Student: return "student";
    case RatioKind::Faculty: return "faculty";
  }
  return "all";
}

RatioSet demographic_ratios(const DemographicsRecord& d) {
  RatioSet r;
  r.discipline = d.discipline;
  const double ugrad = static_cast<double>(d.undergrad_students);
  const double grad = static_cast<double>(d.grad_students);
  const double ugrad_ftef = d.ftef_low + d.ftef_high;
  if (ugrad > 0) r.student = grad / ugrad;
  if (ugrad_ftef > 0) r.faculty = d.ftef_grad / ugrad_ftef;
  if (ugrad + ugrad_ftef > 0) r.all = (grad + d.ftef_grad) / (ugrad + ugrad_ftef);
  return r;
}

std::vector<RatioSet> ratios_from_table(std::span<const ingest::RatioRow> rows) {
  std::vector<RatioSet> out;
  out.reserve(rows.size());
  for (const auto& row : rows) {
    out.push_back(RatioSet{row.discipline, row.all, row.student, row.faculty});
  }
  return out;
}

stats::CorrelationResult correlate_all(std::span<const JournalYearRecord> records,
                                       const stats::SpearmanOptions& options) {
  std::vector<double> uif, ifv;
  uif.reserve(records.size());
  ifv.reserve(records.size());
  for (const auto& r : records) {
    require_both_values(r);
    uif.push_back(*r.uif_value);
    ifv.push_back(*r.if_value);
  }
  return stats::spearman(uif, ifv, options);
}

AnalysisReport per_discipline_correlations(std::span<const JournalYearRecord> records,
                                           const DisciplineMap& dmap,
                                           const stats::SpearmanOptions& options) {
  if (dmap.code_to_disciplines.empty()) {
    throw EmptyMapError("discipline map names no disciplines");
  }
  for (const auto& r : records) require_both_values(r);

  std::map<std::string, const JournalYearRecord*> by_journal;
  for (const auto& r : records) by_journal.emplace(r.journal_key, &r);

  struct Row {
    std::string discipline;
    SubsetCorrelation corr;
  };
  std::vector<Row> built;
  for (const auto& discipline : dmap.disciplines()) {
    std::vector<double> uif, ifv;
    for (const auto& journal : dmap.journals_in(discipline)) {
      const auto it = by_journal.find(journal);
      if (it == by_journal.end()) continue;
      uif.push_back(*it->second->uif_value);
      ifv.push_back(*it->second->if_value);
    }
    built.push_back(Row{discipline, correlate_subset(uif, ifv, options)});
  }

  // correlation rows by p ascending then name; flagged rows trail by name
  std::sort(built.begin(), built.end(), [](const Row& a, const Row& b) {
    const bool a_ok = a.corr.result.has_value();
    const bool b_ok = b.corr.result.has_value();
    if (a_ok != b_ok) return a_ok;
    if (a_ok && a.corr.result->p_value != b.corr.result->p_value) {
      return a.corr.result->p_value < b.corr.result->p_value;
    }
    return a.discipline < b.discipline;
  });

  AnalysisReport report;
  report.kind = ReportKind::DisciplineCorrelations;
  report.columns = {"discipline", "rho", "n", "p_value", "method", "status"};
  for (const auto& row : built) {
    std::vector<Cell> cells(6);
    cells[0] = row.discipline;
    if (row.corr.result) {
      cells[1] = row.corr.result->rho;
      cells[2] = row.corr.result->n;
      cells[3] = row.corr.result->p_value;
      cells[4] = std::string(stats::to_string(row.corr.result->method));
    } else {
      cells[2] = row.corr.n;
    }
    cells[5] = std::string(row.corr.result ? kStatusOk : row.corr.status);
    report.rows.push_back(std::move(cells));
  }
  return report;
}

namespace {

// Exact (case-insensitive) name match first, then a unique prefix match.
std::string resolve_discipline(std::string_view token,
                               const std::vector<std::string>& names) {
  const std::string lowered = to_lower(token);
  std::vector<std::string> prefix_hits;
  for (const auto& name : names) {
    const std::string lname = to_lower(name);
    if (lname == lowered) return name;
    if (lname.starts_with(lowered)) prefix_hits.push_back(name);
  }
  if (prefix_hits.size() == 1) return prefix_hits.front();
  if (prefix_hits.empty()) {
    throw MissingDisciplineError("no discipline matches '" + std::string(token) + "'");
  }
  std::string msg = "'" + std::string(token) + "' is ambiguous:";
  for (const auto& hit : prefix_hits) msg += " " + hit;
  throw MissingDisciplineError(msg);
}

}  // namespace

stats::RegressionResult ratio_regression(const AnalysisReport& correlations,
                                         std::span<const RatioSet> ratios,
                                         std::span<const std::string> selected,
                                         RatioKind which) {
  std::map<std::string, double> rho_by_discipline;
  const auto disc_idx = correlations.column_index("discipline");
  const auto rho_idx = correlations.column_index("rho");
  if (!disc_idx || !rho_idx) {
    throw std::invalid_argument("correlations report lacks discipline/rho columns");
  }
  for (const auto& row : correlations.rows) {
    if (const auto* rho = std::get_if<double>(&row[*rho_idx])) {
      rho_by_discipline[std::get<std::string>(row[*disc_idx])] = *rho;
    }
  }
  std::map<std::string, const RatioSet*> ratio_by_discipline;
  for (const auto& r : ratios) ratio_by_discipline[r.discipline] = &r;

  std::vector<std::string> known;
  for (const auto& [name, rho] : rho_by_discipline) known.push_back(name);
  for (const auto& [name, r] : ratio_by_discipline) {
    if (!rho_by_discipline.contains(name)) known.push_back(name);
  }

  std::vector<stats::Point> points;
  for (const auto& token : selected) {
    const std::string name = resolve_discipline(token, known);
    const auto rho_it = rho_by_discipline.find(name);
    if (rho_it == rho_by_discipline.end()) {
      throw MissingDisciplineError("discipline '" + name + "' has no correlation value");
    }
    const auto ratio_it = ratio_by_discipline.find(name);
    if (ratio_it == ratio_by_discipline.end()) {
      throw MissingDisciplineError("discipline '" + name + "' has no ratio row");
    }
    const RatioSet& rs = *ratio_it->second;
    const std::optional<double>& x = which == RatioKind::All       ? rs.all
                                     : which == RatioKind::Student ? rs.student
                                                                   : rs.faculty;
    if (!x) {
      throw MissingDisciplineError("discipline '" + name + "' has no '" +
                                   std::string(to_string(which)) + "' ratio");
    }
    points.push_back(stats::Point{*x, rho_it->second});
  }
  return stats::ols_regression(points);
}

AnalysisReport regression_report(const AnalysisReport& correlations,
                                 std::span<const RatioSet> ratios,
                                 std::span<const std::string> selected, RatioKind which) {
  const stats::RegressionResult fit = ratio_regression(correlations, ratios, selected, which);

  AnalysisReport report;
  report.kind = ReportKind::RatioRegression;
  report.columns = {"slope", "intercept", "r_squared", "n"};
  report.rows.push_back(
      {Cell{fit.slope}, Cell{fit.intercept}, Cell{fit.r_squared}, Cell{fit.n}});
  report.add_metadata("which", std::string(to_string(which)));
  std::string names;
  for (const auto& s : selected) {
    if (!names.empty()) names += ",";
    names += s;
  }
  report.add_metadata("selected", names);
  return report;
}

AnalysisReport longitudinal_correlation(const std::map<std::string, double>& uif_by_journal,
                                        const ingest::CitationTable& if_series,
                                        const stats::SpearmanOptions& options) {
  if (if_series.empty()) {
    throw std::invalid_argument("longitudinal_correlation: empty citation series");
  }
  std::set<int> years;
  for (const auto& [key, entry] : if_series) years.insert(key.second);

  AnalysisReport report;
  report.kind = ReportKind::Longitudinal;
  report.columns = {"year", "rho", "n", "p_value", "method", "status"};
  for (int year : years) {
    std::vector<double> uif, ifv;
    for (const auto& [journal, uif_value] : uif_by_journal) {
      const auto it = if_series.find(ingest::CitationKey{journal, year});
      if (it == if_series.end() || it->second.if_value == 0.0) continue;
      uif.push_back(uif_value);
      ifv.push_back(it->second.if_value);
    }
    const SubsetCorrelation corr = correlate_subset(uif, ifv, options);
    std::vector<Cell> cells(6);
    cells[0] = static_cast<std::int64_t>(year);
    if (corr.result) {
      cells[1] = corr.result->rho;
      cells[2] = corr.result->n;
      cells[3] = corr.result->p_value;
      cells[4] = std::string(stats::to_string(corr.result->method));
    } else {
      cells[2] = corr.n;
    }
    cells[5] = std::string(corr.result ? kStatusOk : corr.status);
    report.rows.push_back(std::move(cells));
  }
  return report;
}

AnalysisReport overall_report(std::span<const JournalYearRecord> records,
                              const stats::SpearmanOptions& options) {
  const stats::CorrelationResult r = correlate_all(records, options);
  AnalysisReport report;
  report.kind = ReportKind::OverallCorrelation;
  report.columns = {"rho", "n", "p_value", "method"};
  report.rows.push_back({Cell{r.rho}, Cell{r.n}, Cell{r.p_value},
                         Cell{std::string(stats::to_string(r.method))}});
  return report;
}

AnalysisReport top_k_report(std::span<const JournalYearRecord> records, int k,
                            metrics::RankKey key) {
  if (k < 1) throw std::invalid_argument("top_k_report: k must be >= 1");
  const auto ranked = metrics::rank_journals(records, key);

  AnalysisReport report;
  report.kind = ReportKind::Ranking;
  report.columns = {"rank", "journal_key", "uif", "if"};
  report.add_metadata("by", key == metrics::RankKey::ByUIF ? "uif" : "if");
  report.add_metadata("k", std::to_string(k));
  const std::size_t count = std::min<std::size_t>(ranked.size(), static_cast<std::size_t>(k));
  for (std::size_t i = 0; i < count; ++i) {
    const auto& rj = ranked[i];
    std::vector<Cell> cells(4);
    cells[0] = static_cast<std::int64_t>(rj.rank);
    cells[1] = rj.record.journal_key;
    if (rj.record.uif_value) cells[2] = *rj.record.uif_value;
    if (rj.record.if_value) cells[3] = *rj.record.if_value;
    report.rows.push_back(std::move(cells));
  }
  return report;
}

std::int64_t write_plot_data(std::ostream& out, std::span<const JournalYearRecord> records,
                             std::span<const std::pair<std::string, std::string>> metadata) {
  std::int64_t excluded = 0;
  for (const auto& r : records) {
    require_both_values(r);
    if (*r.uif_value == 0.0 || *r.if_value == 0.0) ++excluded;
  }
  for (const auto& [key, value] : metadata) {
    out << "# " << key << ": " << value << "\n";
  }
  out << "# excluded_zero: " << excluded << "\n";
  out << "journal_key\tlog10_uif\tlog10_if\n";
  char buf[64];
  for (const auto& r : records) {
    if (*r.uif_value == 0.0 || *r.if_value == 0.0) continue;
    out << r.journal_key << '\t';
    std::snprintf(buf, sizeof buf, "%.6f", std::log10(*r.uif_value));
    out << buf << '\t';
    std::snprintf(buf, sizeof buf, "%.6f", std::log10(*r.if_value));
    out << buf << '\n';
  }
  return excluded;
}

}  // namespace uimpact::analysis
