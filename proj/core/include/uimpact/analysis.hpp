#pragma once

#include <iosfwd>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "uimpact/ingest.hpp"
#include "uimpact/metrics.hpp"
#include "uimpact/model.hpp"
#include "uimpact/report.hpp"
#include "uimpact/stats.hpp"

namespace uimpact::analysis {

class EmptyMapError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class MissingDisciplineError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Graduate-over-undergraduate community size ratios for one discipline.
// A ratio is absent when its undergraduate denominator is zero (the library
// tends to have no undergraduates).
struct RatioSet {
  std::string discipline;
  std::optional<double> all;
  std::optional<double> student;
  std::optional<double> faculty;
};

// student = grad/ugrad students, faculty = grad FTEF / (low+high FTEF),
// all = (grad students + grad FTEF) / (ugrad students + low FTEF + high FTEF).
RatioSet demographic_ratios(const DemographicsRecord& d);

// Pools a literal ratio table (preferred where present) into RatioSets.
std::vector<RatioSet> ratios_from_table(std::span<const ingest::RatioRow> rows);

// Spearman(UIF, IF) over every record; propagates stats errors.
stats::CorrelationResult correlate_all(std::span<const JournalYearRecord> records,
                                       const stats::SpearmanOptions& options = {});

// One row per discipline whose codes intersect a record's journal codes;
// a journal counts toward each of its disciplines, unweighted. Disciplines
// with fewer than 3 joined journals or a constant column get a status flag
// instead of a correlation. Correlation rows sort by p ascending then
// discipline; flagged rows follow, sorted by discipline.
// Columns: discipline, rho, n, p_value, method, status.
AnalysisReport per_discipline_correlations(std::span<const JournalYearRecord> records,
                                           const DisciplineMap& dmap,
                                           const stats::SpearmanOptions& options = {});

enum class RatioKind { All, Student, Faculty };

std::string_view to_string(RatioKind k);

// Regresses each selected discipline's UIF/IF correlation (y) on its
// demographic ratio (x). selected entries may be exact names or unique
// case-insensitive prefixes. Throws MissingDisciplineError when a selected
// discipline lacks a correlation row or the requested ratio.
stats::RegressionResult ratio_regression(const AnalysisReport& correlations,
                                         std::span<const RatioSet> ratios,
                                         std::span<const std::string> selected,
                                         RatioKind which);

// Ratio regression wrapped as a one-row report; the fitted points are
// recorded in metadata for traceability.
AnalysisReport regression_report(const AnalysisReport& correlations,
                                 std::span<const RatioSet> ratios,
                                 std::span<const std::string> selected, RatioKind which);

// One row per impact-factor year: the UIF list joined against that year's
// non-zero-IF journals, so n may differ per year. Rows ascend by year;
// years with n < 3 or a constant column are flagged, not dropped.
// Columns: year, rho, n, p_value, method, status.
AnalysisReport longitudinal_correlation(const std::map<std::string, double>& uif_by_journal,
                                        const ingest::CitationTable& if_series,
                                        const stats::SpearmanOptions& options = {});

// correlate_all wrapped as a one-row report (rho, n, p_value, method).
AnalysisReport overall_report(std::span<const JournalYearRecord> records,
                              const stats::SpearmanOptions& options = {});

// First k of rank_journals, columns: rank, journal_key, uif, if.
// Fewer than k records means all of them.
AnalysisReport top_k_report(std::span<const JournalYearRecord> records, int k,
                            metrics::RankKey key);

// TSV of (journal_key, log10_uif, log10_if) for log-log scatterplots.
// Journals with UIF = 0 or IF = 0 are excluded (log undefined); returns the
// exclusion count, which is also recorded in a '#' metadata line.
std::int64_t write_plot_data(std::ostream& out, std::span<const JournalYearRecord> records,
                             std::span<const std::pair<std::string, std::string>> metadata = {});

}  // namespace uimpact::analysis
