#include "uimpact/model.hpp"

#include <algorithm>
#include <cctype>

namespace uimpact {

namespace {

std::string to_lower(std::string_view s) {
  std::string out(s);
  std::transform(out.begin(), out.end(), out.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return out;
}

bool is_trailing_punct(char c) {
  switch (c) {
    case '.':
    case ',':
    case ';':
    case ':':
    case '!':
    case '?':
      return true;
    default:
      return false;
  }
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace

std::string_view to_string(RequestType t) {
  switch (t) {
    case RequestType::FullText: return "fulltext";
    case RequestType::Abstract: return "abstract";
    case RequestType::Holdings: return "holdings";
    case RequestType::CitationData: return "citationdata";
    case RequestType::Other: return "other";
  }
  return "other";
}

std::optional<RequestType> request_type_from_token(std::string_view token) {
  const std::string lowered = to_lower(trim(token));
  if (lowered == "fulltext") return RequestType::FullText;
  if (lowered == "abstract") return RequestType::Abstract;
  if (lowered == "holdings") return RequestType::Holdings;
  if (lowered == "citationdata") return RequestType::CitationData;
  if (lowered == "other") return RequestType::Other;
  return std::nullopt;
}

std::optional<RequestType> resolve_request_type(std::string_view token,
                                                const RequestAliasMap& aliases) {
  if (auto direct = request_type_from_token(token)) return direct;
  const std::string lowered = to_lower(trim(token));
  if (auto it = aliases.find(lowered); it != aliases.end()) return it->second;
  return std::nullopt;
}

std::vector<std::string> DisciplineMap::disciplines() const {
  std::set<std::string> names;
  for (const auto& [code, list] : code_to_disciplines) {
    names.insert(list.begin(), list.end());
  }
  return {names.begin(), names.end()};
}

std::vector<std::string> DisciplineMap::unmapped_codes() const {
  std::set<std::string> missing;
  for (const auto& [journal, codes] : journal_to_codes) {
    for (const auto& code : codes) {
      if (!code_to_disciplines.contains(code)) missing.insert(code);
    }
  }
  return {missing.begin(), missing.end()};
}

std::vector<std::string> DisciplineMap::journals_in(const std::string& discipline) const {
  std::set<std::string> wanted_codes;
  for (const auto& [code, list] : code_to_disciplines) {
    if (std::find(list.begin(), list.end(), discipline) != list.end()) {
      wanted_codes.insert(code);
    }
  }
  std::vector<std::string> journals;
  for (const auto& [journal, codes] : journal_to_codes) {
    for (const auto& code : codes) {
      if (wanted_codes.contains(code)) {
        journals.push_back(journal);
        break;
      }
    }
  }
  return journals;
}

std::string_view to_string(EventFault f) {
  switch (f) {
    case EventFault::FieldMissing: return "FieldMissing";
    case EventFault::BadEnumValue: return "BadEnumValue";
    case EventFault::YearInconsistent: return "YearInconsistent";
    case EventFault::OutOfCoverage: return "OutOfCoverage";
  }
  return "FieldMissing";
}

std::optional<EventRejection> validate_event(const UsageEvent& e,
                                             const std::optional<CoverageWindow>& coverage) {
  if (e.user_key.empty()) return EventRejection{EventFault::FieldMissing, "user_key"};
  if (e.journal_key.empty()) return EventRejection{EventFault::FieldMissing, "journal_key"};
  if (e.article_key.empty()) return EventRejection{EventFault::FieldMissing, "article_key"};
  if (e.publication_year > utc_year(e.timestamp)) {
    return EventRejection{EventFault::YearInconsistent,
                          "publication_year after download timestamp"};
  }
  if (coverage && (e.timestamp < coverage->begin || coverage->end < e.timestamp)) {
    return EventRejection{EventFault::OutOfCoverage, "timestamp outside coverage window"};
  }
  return std::nullopt;
}

bool is_issn(std::string_view s) {
  if (s.size() != 9 || s[4] != '-') return false;
  for (std::size_t i : {0u, 1u, 2u, 3u, 5u, 6u, 7u}) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  }
  const char check = s[8];
  return std::isdigit(static_cast<unsigned char>(check)) || check == 'X' || check == 'x';
}

std::string canonical_journal_key(std::string_view raw) {
  std::string_view trimmed = trim(raw);
  if (trimmed.empty()) throw EmptyKeyError();

  if (is_issn(trimmed)) {
    std::string key(trimmed);
    key.back() = static_cast<char>(std::toupper(static_cast<unsigned char>(key.back())));
    return key;
  }

  std::string key;
  key.reserve(trimmed.size());
  bool pending_space = false;
  for (char c : trimmed) {
    if (std::isspace(static_cast<unsigned char>(c))) {
      pending_space = true;
      continue;
    }
    if (pending_space && !key.empty()) key.push_back(' ');
    pending_space = false;
    key.push_back(static_cast<char>(std::toupper(static_cast<unsigned char>(c))));
  }
  while (!key.empty() && (is_trailing_punct(key.back()) || key.back() == ' ')) {
    key.pop_back();
  }
  if (key.empty()) throw EmptyKeyError();
  return key;
}

}  // namespace uimpact
