#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "uimpact/datetime.hpp"

namespace uimpact {

// ---------------------------------------------------------------------------
// Request types

enum class RequestType { FullText, Abstract, Holdings, CitationData, Other };

std::string_view to_string(RequestType t);

// Case-insensitive match against the canonical enum names
// ("fulltext", "abstract", "holdings", "citationdata", "other").
std::optional<RequestType> request_type_from_token(std::string_view token);

// Site-specific log vocabularies ("download-pdf" and friends) are mapped
// through an alias table loaded from a config file, never hard-coded.
// Keys are stored lowercase.
using RequestAliasMap = std::map<std::string, RequestType, std::less<>>;

// Canonical names first, then the alias table.
std::optional<RequestType> resolve_request_type(std::string_view token,
                                                const RequestAliasMap& aliases);

// ---------------------------------------------------------------------------
// Domain records

// One service request from a usage log. user_key is an opaque, non-unique
// requester identifier (typically a hashed IP).
struct UsageEvent {
  UtcTime timestamp;
  std::string user_key;
  std::string journal_key;  // canonical, see canonical_journal_key()
  std::string article_key;
  RequestType request_type = RequestType::Other;
  int publication_year = 0;  // year the requested article was published
};

// Per-journal, per-year facts. downloads counts qualifying full-text
// requests for articles published in the two preceding years;
// citable_items is the matching denominator population taken from the
// citation data source (never re-derived from usage).
struct JournalYearRecord {
  std::string journal_key;
  int metric_year = 0;
  std::int64_t downloads = 0;
  std::int64_t citable_items = 0;
  std::optional<double> if_value;
  std::optional<double> uif_value;
};

// Many-to-many mapping journal -> classification codes -> disciplines.
// A code may belong to several disciplines and a journal to several codes.
struct DisciplineMap {
  std::map<std::string, std::vector<std::string>> code_to_disciplines;
  std::map<std::string, std::set<std::string>> journal_to_codes;

  // Sorted unique discipline names.
  std::vector<std::string> disciplines() const;
  // Codes referenced by journals but missing from code_to_disciplines.
  std::vector<std::string> unmapped_codes() const;
  // Sorted journal keys whose code set intersects the discipline's codes.
  std::vector<std::string> journals_in(const std::string& discipline) const;
};

// Per-discipline enrollment and Full Time Equivalent Faculty counts.
// Undergraduate FTEF is split into low and high divisions; total
// undergraduate FTEF is their sum.
struct DemographicsRecord {
  std::string discipline;
  std::int64_t undergrad_students = 0;
  std::int64_t grad_students = 0;
  double ftef_low = 0.0;
  double ftef_high = 0.0;
  double ftef_grad = 0.0;
};

// ---------------------------------------------------------------------------
// Event validation

enum class EventFault {
  FieldMissing,
  BadEnumValue,
  YearInconsistent,  // publication_year after the download timestamp
  OutOfCoverage,     // timestamp outside the log's declared window
};

std::string_view to_string(EventFault f);

struct EventRejection {
  EventFault fault;
  std::string detail;
};

// Closed interval of timestamps a log declares itself to cover.
struct CoverageWindow {
  UtcTime begin;
  UtcTime end;
};

// Returns nullopt when all invariants hold, otherwise the first violated
// invariant. Events are value types; a valid event passes through unchanged.
std::optional<EventRejection> validate_event(
    const UsageEvent& e, const std::optional<CoverageWindow>& coverage = {});

// ---------------------------------------------------------------------------
// Journal identity

class EmptyKeyError : public std::invalid_argument {
 public:
  EmptyKeyError() : std::invalid_argument("journal key is empty") {}
};

// True for ISSN-shaped strings: four digits, hyphen, three digits and a
// digit-or-X check character.
bool is_issn(std::string_view s);

// Deterministic normalization used as the join key everywhere: trim,
// uppercase, collapse internal whitespace, strip trailing punctuation.
// ISSN-shaped keys skip title normalization (only the check character is
// uppercased). Idempotent. Throws EmptyKeyError when nothing remains.
std::string canonical_journal_key(std::string_view raw);

}  // namespace uimpact
