#include <doctest.h>

#include "uimpact/datetime.hpp"

using namespace uimpact;

TEST_CASE("iso8601 parse and format round trip") {
  const auto t = parse_iso8601_utc("2004-03-15T12:34:56Z");
  REQUIRE(t.has_value());
  CHECK(format_iso8601_utc(*t) == "2004-03-15T12:34:56Z");
  CHECK(utc_year(*t) == 2004);

  // trailing Z optional
  CHECK(parse_iso8601_utc("2004-03-15T12:34:56") == t);
}

TEST_CASE("epoch reference") {
  const auto t = parse_iso8601_utc("1970-01-01T00:00:00Z");
  REQUIRE(t.has_value());
  CHECK(t->seconds == 0);
  CHECK(utc_day_index(*t) == 0);
}

TEST_CASE("leap day handling") {
  CHECK(parse_iso8601_utc("2004-02-29T00:00:00Z").has_value());   // leap year
  CHECK(!parse_iso8601_utc("2003-02-29T00:00:00Z").has_value());  // not one
  CHECK(parse_iso8601_utc("2000-02-29T00:00:00Z").has_value());   // century leap
  CHECK(!parse_iso8601_utc("1900-02-29T00:00:00Z").has_value());
}

TEST_CASE("malformed timestamps rejected") {
  CHECK(!parse_iso8601_utc("").has_value());
  CHECK(!parse_iso8601_utc("2004-03-15").has_value());
  CHECK(!parse_iso8601_utc("2004-03-15 12:34:56").has_value());
  CHECK(!parse_iso8601_utc("2004-13-01T00:00:00Z").has_value());
  CHECK(!parse_iso8601_utc("2004-00-01T00:00:00Z").has_value());
  CHECK(!parse_iso8601_utc("2004-01-32T00:00:00Z").has_value());
  CHECK(!parse_iso8601_utc("2004-01-01T24:00:00Z").has_value());
  CHECK(!parse_iso8601_utc("2004-01-01T00:60:00Z").has_value());
  CHECK(!parse_iso8601_utc("20O4-01-01T00:00:00Z").has_value());
  CHECK(!parse_iso8601_utc("2004-01-01T00:00:00.5Z").has_value());
}

TEST_CASE("year and day boundaries") {
  const auto last = parse_iso8601_utc("2003-12-31T23:59:59Z");
  const auto first = parse_iso8601_utc("2004-01-01T00:00:00Z");
  REQUIRE(last);
  REQUIRE(first);
  CHECK(utc_year(*last) == 2003);
  CHECK(utc_year(*first) == 2004);
  CHECK(first->seconds - last->seconds == 1);
  CHECK(utc_day_index(*first) - utc_day_index(*last) == 1);
}

TEST_CASE("civil conversions invert each other") {
  for (std::int64_t day : {-1000L, 0L, 11016L, 12418L, 20000L}) {
    int year;
    unsigned month, dom;
    civil_from_days(day, year, month, dom);
    CHECK(days_from_civil(year, month, dom) == day);
  }
}
