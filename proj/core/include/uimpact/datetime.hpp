#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace uimpact {

// A point in time with second resolution, always interpreted in UTC.
// Calendar arithmetic is done with proleptic-Gregorian civil math; no
// locale or timezone state is consulted anywhere.
struct UtcTime {
  std::int64_t seconds = 0;  // since 1970-01-01T00:00:00Z

  friend auto operator<=>(const UtcTime&, const UtcTime&) = default;
};

// Accepts "YYYY-MM-DDThh:mm:ss" with an optional trailing 'Z'.
// Returns nullopt for anything else (bad shape, out-of-range fields).
std::optional<UtcTime> parse_iso8601_utc(std::string_view text);

std::string format_iso8601_utc(UtcTime t);

// Civil calendar year of t.
int utc_year(UtcTime t);

// Day index since 1970-01-01, useful as a dedup bucket.
std::int64_t utc_day_index(UtcTime t);

// Civil <-> epoch-day conversions (Gregorian, proleptic).
std::int64_t days_from_civil(int year, unsigned month, unsigned day);
void civil_from_days(std::int64_t days, int& year, unsigned& month, unsigned& day);

}  // namespace uimpact
