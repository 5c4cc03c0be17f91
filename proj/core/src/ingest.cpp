#include "uimpact/ingest.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <initializer_list>
#include <istream>
#include <ostream>
#include <tuple>

#include "uimpact/metrics.hpp"
#include "uimpact/report.hpp"
#include "textio.hpp"

namespace uimpact::ingest {

using detail::is_blank;
using detail::parse_int;
using detail::parse_real;
using detail::split_tabs;
using detail::strip_spaces;

namespace {

// Reads logical lines, skipping blanks and '#' comments, tracking the
// physical line number.
class LineReader {
 public:
  explicit LineReader(std::istream& in) : in_(in) {}

  bool next(std::string& line) {
    while (std::getline(in_, line)) {
      ++line_no_;
      if (!line.empty() && line.back() == '\r') line.pop_back();
      if (is_blank(line) || line.starts_with('#')) continue;
      return true;
    }
    if (in_.bad()) throw UnreadableStreamError("stream failed while reading");
    return false;
  }

  std::int64_t line_no() const { return line_no_; }

 private:
  std::istream& in_;
  std::int64_t line_no_ = 0;
};

std::string join_fields(std::span<const std::string_view> fields) {
  std::string out;
  for (std::size_t i = 0; i < fields.size(); ++i) {
    if (i) out += ", ";
    out += fields[i];
  }
  return out;
}

void expect_header(const std::string& line, std::initializer_list<std::string_view> names,
                   const char* what) {
  const auto fields = split_tabs(line);
  if (fields.size() != names.size() ||
      !std::equal(fields.begin(), fields.end(), names.begin(),
                  [](std::string_view f, std::string_view n) { return strip_spaces(f) == n; })) {
    throw SchemaMismatchError(std::string(what) + ": bad header '" + line + "'");
  }
}

}  // namespace

std::string_view to_string(DedupPolicy p) {
  switch (p) {
    case DedupPolicy::CountAll: return "count-all";
    case DedupPolicy::OncePerUserArticleDay: return "once-per-user-article-day";
  }
  return "count-all";
}

std::string_view to_string(LogColumn c) {
  switch (c) {
    case LogColumn::Timestamp: return "timestamp";
    case LogColumn::UserKey: return "user_key";
    case LogColumn::JournalKey: return "journal_key";
    case LogColumn::ArticleKey: return "article_key";
    case LogColumn::RequestType: return "request_type";
    case LogColumn::PublicationYear: return "publication_year";
  }
  return "timestamp";
}

std::string_view to_string(JoinFault f) {
  switch (f) {
    case JoinFault::NoCitationRow: return "no_citation_row";
    case JoinFault::ZeroIF: return "zero_if";
  }
  return "no_citation_row";
}

FilterSpec FilterSpec::for_year(int year) {
  FilterSpec spec;
  spec.metric_year = year;
  spec.publication_window = {year - 1, year - 2};
  return spec;
}

void FilterSpec::validate() const {
  if (publication_window.empty()) {
    throw std::invalid_argument("FilterSpec: publication_window is empty");
  }
  if (request_types.empty()) {
    throw std::invalid_argument("FilterSpec: request_types is empty");
  }
  if (metric_year <= *publication_window.rbegin()) {
    throw std::invalid_argument("FilterSpec: metric_year must follow the publication window");
  }
}

bool FilterSpec::matches(const UsageEvent& e) const {
  return request_types.contains(e.request_type) &&
         utc_year(e.timestamp) == metric_year &&
         publication_window.contains(e.publication_year);
}

LogSchema LogSchema::standard() {
  LogSchema schema;
  schema.columns = {LogColumn::Timestamp,   LogColumn::UserKey,
                    LogColumn::JournalKey,  LogColumn::ArticleKey,
                    LogColumn::RequestType, LogColumn::PublicationYear};
  return schema;
}

namespace {

bool looks_like_header(std::span<const std::string_view> fields) {
  static constexpr std::string_view kNames[] = {
      "timestamp", "user_key", "journal_key", "article_key", "request_type",
      "publication_year"};
  for (auto field : fields) {
    const auto name = strip_spaces(field);
    if (std::find(std::begin(kNames), std::end(kNames), name) == std::end(kNames)) {
      return false;
    }
  }
  return !fields.empty();
}

struct LineOutcome {
  std::optional<UsageEvent> event;
  std::string reason;  // set when rejected
};

LineOutcome parse_data_line(std::span<const std::string_view> fields,
                            const LogSchema& schema) {
  if (fields.size() != schema.columns.size()) {
    return {std::nullopt, "FieldMissing"};
  }
  UsageEvent event;
  for (std::size_t i = 0; i < fields.size(); ++i) {
    const auto value = strip_spaces(fields[i]);
    switch (schema.columns[i]) {
      case LogColumn::Timestamp: {
        const auto ts = parse_iso8601_utc(value);
        if (!ts) return {std::nullopt, "BadField"};
        event.timestamp = *ts;
        break;
      }
      case LogColumn::UserKey:
        event.user_key = std::string(value);
        break;
      case LogColumn::JournalKey: {
        if (strip_spaces(value).empty()) return {std::nullopt, "FieldMissing"};
        try {
          event.journal_key = canonical_journal_key(value);
        } catch (const EmptyKeyError&) {
          return {std::nullopt, "FieldMissing"};
        }
        break;
      }
      case LogColumn::ArticleKey:
        event.article_key = std::string(value);
        break;
      case LogColumn::RequestType: {
        const auto type = resolve_request_type(value, schema.aliases);
        if (!type) return {std::nullopt, "BadEnumValue"};
        event.request_type = *type;
        break;
      }
      case LogColumn::PublicationYear: {
        const auto year = parse_int(value);
        if (!year || *year < 0 || *year > 9999) return {std::nullopt, "BadField"};
        event.publication_year = static_cast<int>(*year);
        break;
      }
    }
  }
  if (const auto rejection = validate_event(event, schema.coverage)) {
    return {std::nullopt, std::string(to_string(rejection->fault))};
  }
  return {std::move(event), {}};
}

}  // namespace

ParsedLog parse_usage_log(std::istream& in, const LogSchema& schema,
                          std::ostream* reject_sink) {
  if (!in) throw UnreadableStreamError("usage log stream is not readable");
  if (schema.columns.empty()) throw SchemaMismatchError("log schema declares no columns");

  ParsedLog log;
  LineReader reader(in);
  std::string line;
  bool first_data_candidate = true;
  while (reader.next(line)) {
    const auto fields = split_tabs(line);
    if (first_data_candidate) {
      first_data_candidate = false;
      if (looks_like_header(fields)) {
        if (fields.size() != schema.columns.size()) {
          throw SchemaMismatchError("usage log header does not match declared schema: " +
                                    join_fields(fields));
        }
        for (std::size_t i = 0; i < fields.size(); ++i) {
          if (strip_spaces(fields[i]) != to_string(schema.columns[i])) {
            throw SchemaMismatchError(
                "usage log header does not match declared schema: " + join_fields(fields));
          }
        }
        continue;  // header consumed; not a data line
      }
    }
    ++log.stats.lines_read;
    auto outcome = parse_data_line(fields, schema);
    if (outcome.event) {
      ++log.stats.events_parsed;
      log.events.push_back(std::move(*outcome.event));
    } else {
      ++log.stats.events_rejected;
      ++log.stats.rejection_breakdown[outcome.reason];
      if (reject_sink) {
        *reject_sink << reader.line_no() << '\t' << outcome.reason << '\t' << line << '\n';
      }
    }
  }
  return log;
}

std::vector<UsageEvent> filter_events(std::span<const UsageEvent> events,
                                      const FilterSpec& spec) {
  spec.validate();

  std::vector<const UsageEvent*> kept;
  for (const UsageEvent& e : events) {
    if (spec.matches(e)) kept.push_back(&e);
  }
  // timestamp order, input order within equal timestamps
  std::stable_sort(kept.begin(), kept.end(),
                   [](const UsageEvent* a, const UsageEvent* b) {
                     return a->timestamp < b->timestamp;
                   });

  std::vector<UsageEvent> out;
  out.reserve(kept.size());
  if (spec.dedup == DedupPolicy::OncePerUserArticleDay) {
    std::set<std::tuple<std::string, std::string, std::int64_t>> seen;
    for (const UsageEvent* e : kept) {
      if (seen.emplace(e->user_key, e->article_key, utc_day_index(e->timestamp)).second) {
        out.push_back(*e);
      }
    }
  } else {
    for (const UsageEvent* e : kept) out.push_back(*e);
  }
  return out;
}

std::map<std::string, std::int64_t> tally_downloads(std::span<const UsageEvent> events) {
  std::map<std::string, std::int64_t> tally;
  for (const UsageEvent& e : events) ++tally[e.journal_key];
  return tally;
}

CitationTable load_citation_table(std::istream& in) {
  if (!in) throw UnreadableStreamError("citation table stream is not readable");
  LineReader reader(in);
  std::string line;
  if (!reader.next(line)) {
    throw SchemaMismatchError("citation table: missing header");
  }
  expect_header(line, {"journal_key", "year", "if_value", "citable_items"},
                "citation table");

  CitationTable table;
  while (reader.next(line)) {
    const auto fields = split_tabs(line);
    if (fields.size() != 4) {
      throw SchemaMismatchError("citation table line " + std::to_string(reader.line_no()) +
                                ": expected 4 fields");
    }
    std::string journal;
    try {
      journal = canonical_journal_key(fields[0]);
    } catch (const EmptyKeyError&) {
      throw SchemaMismatchError("citation table line " + std::to_string(reader.line_no()) +
                                ": empty journal key");
    }
    const auto year = parse_int(fields[1]);
    const auto if_value = parse_real(fields[2]);
    const auto citable = parse_int(fields[3]);
    if (!year || !if_value || !citable || *citable < 0 || *if_value < 0 ||
        !std::isfinite(*if_value)) {
      throw BadNumericError("citation table line " + std::to_string(reader.line_no()) +
                            ": bad numeric field");
    }
    const CitationKey key{journal, static_cast<int>(*year)};
    if (table.contains(key)) {
      throw DuplicateKeyError("citation table line " + std::to_string(reader.line_no()) +
                              ": duplicate entry for (" + journal + ", " +
                              std::to_string(*year) + ")");
    }
    table.emplace(key, CitationEntry{*if_value, *citable});
  }
  return table;
}

JoinResult join_with_citation(const std::map<std::string, std::int64_t>& tally,
                              const CitationTable& citations, int year) {
  JoinResult result;
  for (const auto& [journal, downloads] : tally) {
    const auto it = citations.find(CitationKey{journal, year});
    if (it == citations.end()) {
      result.misses.push_back(JoinMiss{journal, JoinFault::NoCitationRow});
      continue;
    }
    if (it->second.if_value == 0.0) {
      result.misses.push_back(JoinMiss{journal, JoinFault::ZeroIF});
      continue;
    }
    JournalYearRecord record;
    record.journal_key = journal;
    record.metric_year = year;
    record.downloads = downloads;
    record.citable_items = it->second.citable_items;
    record.if_value = it->second.if_value;
    result.records.push_back(std::move(record));
  }
  return result;
}

RequestAliasMap load_request_aliases(std::istream& in) {
  if (!in) throw UnreadableStreamError("alias table stream is not readable");
  RequestAliasMap aliases;
  LineReader reader(in);
  std::string line;
  while (reader.next(line)) {
    const auto fields = split_tabs(line);
    if (fields.size() != 2) {
      throw SchemaMismatchError("alias table line " + std::to_string(reader.line_no()) +
                                ": expected 'alias<TAB>request_type'");
    }
    if (strip_spaces(fields[0]) == "alias") continue;  // optional header
    const auto type = request_type_from_token(fields[1]);
    if (!type) {
      throw SchemaMismatchError("alias table line " + std::to_string(reader.line_no()) +
                                ": unknown request type '" + std::string(fields[1]) + "'");
    }
    std::string alias(strip_spaces(fields[0]));
    std::transform(alias.begin(), alias.end(), alias.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    aliases[alias] = *type;
  }
  return aliases;
}

DisciplineMap load_discipline_map(std::istream& codes, std::istream& journal_codes) {
  if (!codes || !journal_codes) {
    throw UnreadableStreamError("discipline map stream is not readable");
  }
  DisciplineMap map;
  {
    LineReader reader(codes);
    std::string line;
    while (reader.next(line)) {
      const auto fields = split_tabs(line);
      if (fields.size() != 2) {
        throw SchemaMismatchError("code table line " + std::to_string(reader.line_no()) +
                                  ": expected 'code<TAB>discipline'");
      }
      const auto code = strip_spaces(fields[0]);
      const auto discipline = strip_spaces(fields[1]);
      if (code == "code" && discipline == "discipline") continue;  // optional header
      if (code.empty() || discipline.empty()) {
        throw SchemaMismatchError("code table line " + std::to_string(reader.line_no()) +
                                  ": empty field");
      }
      auto& list = map.code_to_disciplines[std::string(code)];
      if (std::find(list.begin(), list.end(), discipline) == list.end()) {
        list.emplace_back(discipline);
      }
    }
  }
  {
    LineReader reader(journal_codes);
    std::string line;
    while (reader.next(line)) {
      const auto fields = split_tabs(line);
      if (fields.size() != 2) {
        throw SchemaMismatchError("journal code table line " +
                                  std::to_string(reader.line_no()) +
                                  ": expected 'journal_key<TAB>code'");
      }
      const auto raw_journal = strip_spaces(fields[0]);
      const auto code = strip_spaces(fields[1]);
      if (raw_journal == "journal_key" && code == "code") continue;  // optional header
      if (code.empty()) {
        throw SchemaMismatchError("journal code table line " +
                                  std::to_string(reader.line_no()) + ": empty code");
      }
      map.journal_to_codes[canonical_journal_key(raw_journal)].insert(std::string(code));
    }
  }
  return map;
}

std::vector<DemographicsRecord> load_demographics(std::istream& in) {
  if (!in) throw UnreadableStreamError("demographics stream is not readable");
  LineReader reader(in);
  std::string line;
  if (!reader.next(line)) {
    throw SchemaMismatchError("demographics table: missing header");
  }
  expect_header(line,
                {"discipline", "ugrad_students", "grad_students", "ftef_low", "ftef_high",
                 "ftef_grad"},
                "demographics table");

  std::vector<DemographicsRecord> records;
  while (reader.next(line)) {
    const auto fields = split_tabs(line);
    if (fields.size() != 6) {
      throw SchemaMismatchError("demographics line " + std::to_string(reader.line_no()) +
                                ": expected 6 fields");
    }
    DemographicsRecord r;
    r.discipline = std::string(strip_spaces(fields[0]));
    const auto ugrad = parse_int(fields[1]);
    const auto grad = parse_int(fields[2]);
    const auto low = parse_real(fields[3]);
    const auto high = parse_real(fields[4]);
    const auto gradf = parse_real(fields[5]);
    if (!ugrad || !grad || !low || !high || !gradf || *ugrad < 0 || *grad < 0 ||
        *low < 0 || *high < 0 || *gradf < 0) {
      throw BadNumericError("demographics line " + std::to_string(reader.line_no()) +
                            ": bad numeric field");
    }
    r.undergrad_students = *ugrad;
    r.grad_students = *grad;
    r.ftef_low = *low;
    r.ftef_high = *high;
    r.ftef_grad = *gradf;
    records.push_back(std::move(r));
  }
  return records;
}

std::vector<RatioRow> load_ratio_table(std::istream& in) {
  if (!in) throw UnreadableStreamError("ratio table stream is not readable");
  LineReader reader(in);
  std::string line;
  if (!reader.next(line)) {
    throw SchemaMismatchError("ratio table: missing header");
  }
  expect_header(line, {"discipline", "ratio_student", "ratio_faculty", "ratio_all"},
                "ratio table");

  std::vector<RatioRow> rows;
  while (reader.next(line)) {
    const auto fields = split_tabs(line);
    if (fields.size() != 4) {
      throw SchemaMismatchError("ratio table line " + std::to_string(reader.line_no()) +
                                ": expected 4 fields");
    }
    RatioRow row;
    row.discipline = std::string(strip_spaces(fields[0]));
    const auto read_optional = [&](std::string_view field) -> std::optional<double> {
      if (strip_spaces(field).empty()) return std::nullopt;
      const auto v = parse_real(field);
      if (!v || *v < 0 || !std::isfinite(*v)) {
        throw BadNumericError("ratio table line " + std::to_string(reader.line_no()) +
                              ": bad ratio value");
      }
      return v;
    };
    row.student = read_optional(fields[1]);
    row.faculty = read_optional(fields[2]);
    row.all = read_optional(fields[3]);
    rows.push_back(std::move(row));
  }
  return rows;
}

void write_journal_table(std::ostream& out, std::span<const JournalYearRecord> records,
                         std::span<const std::pair<std::string, std::string>> metadata) {
  for (const auto& [key, value] : metadata) {
    out << "# " << key << ": " << value << "\n";
  }
  out << "journal_key\tyear\tdownloads\tcitable_items\tuif\tif\n";
  for (const auto& r : records) {
    out << r.journal_key << '\t' << r.metric_year << '\t' << r.downloads << '\t'
        << r.citable_items << '\t'
        << (r.uif_value ? format_double(*r.uif_value) : std::string()) << '\t'
        << (r.if_value ? format_double(*r.if_value) : std::string()) << '\n';
  }
}

std::vector<JournalYearRecord> load_journal_table(std::istream& in) {
  if (!in) throw UnreadableStreamError("journal table stream is not readable");
  LineReader reader(in);
  std::string line;
  if (!reader.next(line)) {
    throw SchemaMismatchError("journal table: missing header");
  }
  expect_header(line, {"journal_key", "year", "downloads", "citable_items", "uif", "if"},
                "journal table");

  std::vector<JournalYearRecord> records;
  while (reader.next(line)) {
    const auto fields = split_tabs(line);
    if (fields.size() != 6) {
      throw SchemaMismatchError("journal table line " + std::to_string(reader.line_no()) +
                                ": expected 6 fields");
    }
    JournalYearRecord r;
    r.journal_key = canonical_journal_key(fields[0]);
    const auto year = parse_int(fields[1]);
    const auto downloads = parse_int(fields[2]);
    const auto citable = parse_int(fields[3]);
    if (!year || !downloads || !citable || *downloads < 0 || *citable < 0) {
      throw BadNumericError("journal table line " + std::to_string(reader.line_no()) +
                            ": bad numeric field");
    }
    r.metric_year = static_cast<int>(*year);
    r.downloads = *downloads;
    r.citable_items = *citable;
    // uif column is display only; the exact value comes from the integers
    if (r.citable_items > 0) {
      r.uif_value = metrics::compute_uif(r.downloads, r.citable_items);
    }
    if (!strip_spaces(fields[5]).empty()) {
      const auto if_value = parse_real(fields[5]);
      if (!if_value || *if_value < 0 || !std::isfinite(*if_value)) {
        throw BadNumericError("journal table line " + std::to_string(reader.line_no()) +
                              ": bad if value");
      }
      r.if_value = if_value;
    }
    records.push_back(std::move(r));
  }
  return records;
}

}  // namespace uimpact::ingest
