#include "uimpact/datetime.hpp"

#include <cstdio>

namespace uimpact {

namespace {

constexpr std::int64_t kSecondsPerDay = 86400;

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (c < '0' || c > '9') return false;
  }
  return true;
}

int to_int(std::string_view s) {
  int v = 0;
  for (char c : s) v = v * 10 + (c - '0');
  return v;
}

bool is_leap(int y) { return y % 4 == 0 && (y % 100 != 0 || y % 400 == 0); }

unsigned days_in_month(int y, unsigned m) {
  static constexpr unsigned lengths[] = {31, 28, 31, 30, 31, 30, 31, 31, 30, 31, 30, 31};
  if (m == 2 && is_leap(y)) return 29;
  return lengths[m - 1];
}

}  // namespace

// Howard Hinnant's days_from_civil / civil_from_days.
std::int64_t days_from_civil(int y, unsigned m, unsigned d) {
  y -= m <= 2;
  const std::int64_t era = (y >= 0 ? y : y - 399) / 400;
  const unsigned yoe = static_cast<unsigned>(y - era * 400);
  const unsigned doy = (153 * (m + (m > 2 ? -3 : 9)) + 2) / 5 + d - 1;
  const unsigned doe = yoe * 365 + yoe / 4 - yoe / 100 + doy;
  return era * 146097 + static_cast<std::int64_t>(doe) - 719468;
}

void civil_from_days(std::int64_t z, int& year, unsigned& month, unsigned& day) {
  z += 719468;
  const std::int64_t era = (z >= 0 ? z : z - 146096) / 146097;
  const unsigned doe = static_cast<unsigned>(z - era * 146097);
  const unsigned yoe = (doe - doe / 1460 + doe / 36524 - doe / 146096) / 365;
  const std::int64_t y = static_cast<std::int64_t>(yoe) + era * 400;
  const unsigned doy = doe - (365 * yoe + yoe / 4 - yoe / 100);
  const unsigned mp = (5 * doy + 2) / 153;
  day = doy - (153 * mp + 2) / 5 + 1;
  month = mp + (mp < 10 ? 3 : -9);
  year = static_cast<int>(y + (month <= 2));
}

std::optional<UtcTime> parse_iso8601_utc(std::string_view text) {
  // YYYY-MM-DDThh:mm:ss with optional trailing Z
  if (!text.empty() && text.back() == 'Z') text.remove_suffix(1);
  if (text.size() != 19) return std::nullopt;
  if (text[4] != '-' || text[7] != '-' || text[10] != 'T' || text[13] != ':' ||
      text[16] != ':') {
    return std::nullopt;
  }
  const auto year_s = text.substr(0, 4);
  const auto month_s = text.substr(5, 2);
  const auto day_s = text.substr(8, 2);
  const auto hour_s = text.substr(11, 2);
  const auto min_s = text.substr(14, 2);
  const auto sec_s = text.substr(17, 2);
  for (auto part : {year_s, month_s, day_s, hour_s, min_s, sec_s}) {
    if (!all_digits(part)) return std::nullopt;
  }
  const int year = to_int(year_s);
  const unsigned month = static_cast<unsigned>(to_int(month_s));
  const unsigned day = static_cast<unsigned>(to_int(day_s));
  const int hour = to_int(hour_s);
  const int minute = to_int(min_s);
  const int second = to_int(sec_s);
  if (month < 1 || month > 12) return std::nullopt;
  if (day < 1 || day > days_in_month(year, month)) return std::nullopt;
  if (hour > 23 || minute > 59 || second > 60) return std::nullopt;
  const std::int64_t days = days_from_civil(year, month, day);
  return UtcTime{days * kSecondsPerDay + hour * 3600 + minute * 60 + second};
}

std::string format_iso8601_utc(UtcTime t) {
  const std::int64_t day = utc_day_index(t);
  std::int64_t rem = t.seconds - day * kSecondsPerDay;
  int year;
  unsigned month, d;
  civil_from_days(day, year, month, d);
  char buf[64];
  std::snprintf(buf, sizeof buf, "%04d-%02u-%02uT%02lld:%02lld:%02lldZ", year, month, d,
                static_cast<long long>(rem / 3600), static_cast<long long>(rem / 60 % 60),
                static_cast<long long>(rem % 60));
  return buf;
}

int utc_year(UtcTime t) {
  int year;
  unsigned month, day;
  civil_from_days(utc_day_index(t), year, month, day);
  return year;
}

std::int64_t utc_day_index(UtcTime t) {
  std::int64_t day = t.seconds / kSecondsPerDay;
  if (t.seconds % kSecondsPerDay < 0) --day;  // floor for pre-epoch times
  return day;
}

}  // namespace uimpact
