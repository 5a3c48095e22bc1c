#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

namespace picksim {

/// Calendar day, stored as days since 1970-01-01.
struct Date {
  std::int32_t days = 0;

  static Date parse(std::string_view iso);  // YYYY-MM-DD
  static Date from_ymd(int year, unsigned month, unsigned day);
  std::string iso() const;

  Date plus_days(std::int32_t n) const { return Date{days + n}; }
  friend auto operator<=>(const Date&, const Date&) = default;
};

/// Calendar timestamp with one-second resolution.
struct DateTime {
  Date date;
  std::int32_t second_of_day = 0;

  /// Accepts `YYYY-MM-DD`, `YYYY-MM-DDTHH:MM[:SS]` or the same with a space.
  static DateTime parse(std::string_view iso);
  std::string iso() const;

  friend auto operator<=>(const DateTime&, const DateTime&) = default;
};

}  // namespace picksim
