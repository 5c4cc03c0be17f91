#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "uimpact/model.hpp"

namespace uimpact::ingest {

// ---------------------------------------------------------------------------
// Errors (fatal; per-line problems are rejections, not exceptions)

class UnreadableStreamError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class SchemaMismatchError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DuplicateKeyError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class BadNumericError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// ---------------------------------------------------------------------------
// Filtering

enum class DedupPolicy { CountAll, OncePerUserArticleDay };

std::string_view to_string(DedupPolicy p);

// Which events enter the tally: request type, download year, and the
// publication window of the requested article. Defaults reproduce the
// two-preceding-years convention; the window stays configurable because the
// same ratio generalizes to other windows.
struct FilterSpec {
  int metric_year = 0;
  std::set<RequestType> request_types = {RequestType::FullText};
  std::set<int> publication_window;
  DedupPolicy dedup = DedupPolicy::CountAll;

  // metric_year = year, window = {year-1, year-2}.
  static FilterSpec for_year(int year);

  // Throws std::invalid_argument on an empty window or a window that does
  // not precede metric_year.
  void validate() const;

  // The pure predicate part (no dedup).
  bool matches(const UsageEvent& e) const;
};

// Parse/filter funnel counters. lines_read counts data-candidate lines
// only; header and '#' comment lines are excluded, so
// events_parsed + events_rejected == lines_read.
struct IngestStats {
  std::int64_t lines_read = 0;
  std::int64_t events_parsed = 0;
  std::int64_t events_rejected = 0;
  std::int64_t events_after_filter = 0;
  std::map<std::string, std::int64_t> rejection_breakdown;

  bool operator==(const IngestStats&) const = default;
};

// ---------------------------------------------------------------------------
// Usage log parsing

enum class LogColumn {
  Timestamp,
  UserKey,
  JournalKey,
  ArticleKey,
  RequestType,
  PublicationYear,
};

std::string_view to_string(LogColumn c);

// Declared log layout. The schema is never sniffed from the data; a header
// that contradicts the declared column order is a fatal SchemaMismatchError
// rather than a silent misparse.
struct LogSchema {
  std::vector<LogColumn> columns;
  RequestAliasMap aliases;
  std::optional<CoverageWindow> coverage;

  // The canonical column order:
  // timestamp  user_key  journal_key  article_key  request_type  publication_year
  static LogSchema standard();
};

struct ParsedLog {
  std::vector<UsageEvent> events;
  IngestStats stats;
};

// One UsageEvent per well-formed data line, order preserving. Malformed
// lines are counted per reason and written (line number, reason, raw text)
// to reject_sink when one is given; they are never fatal. '#' lines and
// blank lines are ignored. A leading header row is recognized when every
// field names a column; it must then match the schema exactly.
ParsedLog parse_usage_log(std::istream& in, const LogSchema& schema,
                          std::ostream* reject_sink = nullptr);

// Events satisfying the spec predicate, deduplicated per policy, ordered by
// (timestamp, input order). Output is always a subset of the input.
std::vector<UsageEvent> filter_events(std::span<const UsageEvent> events,
                                      const FilterSpec& spec);

// Multiset cardinality per journal_key; the counts sum to events.size().
std::map<std::string, std::int64_t> tally_downloads(std::span<const UsageEvent> events);

// ---------------------------------------------------------------------------
// Citation data

struct CitationEntry {
  double if_value = 0.0;
  std::int64_t citable_items = 0;
};

using CitationKey = std::pair<std::string, int>;  // (journal_key, year)
using CitationTable = std::map<CitationKey, CitationEntry>;

// TSV with header: journal_key  year  if_value  citable_items.
// Journal keys are canonicalized on load. Duplicate (journal, year) rows
// are a hard DuplicateKeyError.
CitationTable load_citation_table(std::istream& in);

enum class JoinFault { NoCitationRow, ZeroIF };

std::string_view to_string(JoinFault f);

struct JoinMiss {
  std::string journal_key;
  JoinFault fault;
};

struct JoinResult {
  std::vector<JournalYearRecord> records;  // journal_key ascending
  std::vector<JoinMiss> misses;            // journal_key ascending
};

// Inner join of the download tally with the citation table for one year,
// keeping only journals with a non-zero citation impact factor. Journals
// failing the join land in misses with the reason. uif_value is left unset;
// computing it is the metrics module's job.
JoinResult join_with_citation(const std::map<std::string, std::int64_t>& tally,
                              const CitationTable& citations, int year);

// ---------------------------------------------------------------------------
// Auxiliary tables

// TSV, two columns: alias  request_type. '#' comments allowed.
RequestAliasMap load_request_aliases(std::istream& in);

// Two TSVs: code  discipline (codes may repeat across disciplines) and
// journal_key  code (journals may carry several codes).
DisciplineMap load_discipline_map(std::istream& codes, std::istream& journal_codes);

// TSV with header:
// discipline  ugrad_students  grad_students  ftef_low  ftef_high  ftef_grad
std::vector<DemographicsRecord> load_demographics(std::istream& in);

// Literal ratio table override, TSV with header:
// discipline  ratio_student  ratio_faculty  ratio_all
// Empty fields mean the ratio is undefined for that row.
struct RatioRow {
  std::string discipline;
  std::optional<double> student;
  std::optional<double> faculty;
  std::optional<double> all;
};
std::vector<RatioRow> load_ratio_table(std::istream& in);

// ---------------------------------------------------------------------------
// Journal table data product (pipeline output, analysis input)

// TSV with optional '# key: value' metadata lines and header:
// journal_key  year  downloads  citable_items  uif  if
void write_journal_table(std::ostream& out, std::span<const JournalYearRecord> records,
                         std::span<const std::pair<std::string, std::string>> metadata = {});

// uif is re-derived from the exact integer columns on load so the TSV
// round-trip loses nothing.
std::vector<JournalYearRecord> load_journal_table(std::istream& in);

}  // namespace uimpact::ingest
