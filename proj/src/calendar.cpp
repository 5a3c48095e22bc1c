#include "picksim/calendar.hpp"

#include <charconv>
#include <chrono>
#include <cstdio>
#include <stdexcept>

namespace picksim {
namespace {

int parse_int(std::string_view text, std::string_view whole) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || ptr != text.data() + text.size()) {
    throw std::invalid_argument("malformed date/time '" + std::string(whole) + "'");
  }
  return value;
}

}  // namespace

Date Date::from_ymd(int year, unsigned month, unsigned day) {
  using namespace std::chrono;
  const year_month_day ymd{std::chrono::year{year}, std::chrono::month{month}, std::chrono::day{day}};
  if (!ymd.ok()) throw std::invalid_argument("invalid calendar date");
  return Date{static_cast<std::int32_t>(sys_days{ymd}.time_since_epoch().count())};
}

Date Date::parse(std::string_view iso) {
  if (iso.size() != 10 || iso[4] != '-' || iso[7] != '-') {
    throw std::invalid_argument("malformed date '" + std::string(iso) + "' (want YYYY-MM-DD)");
  }
  const int y = parse_int(iso.substr(0, 4), iso);
  const int m = parse_int(iso.substr(5, 2), iso);
  const int d = parse_int(iso.substr(8, 2), iso);
  try {
    return from_ymd(y, static_cast<unsigned>(m), static_cast<unsigned>(d));
  } catch (const std::invalid_argument&) {
    throw std::invalid_argument("invalid date '" + std::string(iso) + "'");
  }
}

std::string Date::iso() const {
  using namespace std::chrono;
  const year_month_day ymd{sys_days{std::chrono::days{days}}};
  char buf[40];
  std::snprintf(buf, sizeof buf, "%04d-%02u-%02u", static_cast<int>(ymd.year()),
                static_cast<unsigned>(ymd.month()), static_cast<unsigned>(ymd.day()));
  return buf;
}

DateTime DateTime::parse(std::string_view iso) {
  DateTime out;
  out.date = Date::parse(iso.substr(0, std::min<std::size_t>(iso.size(), 10)));
  if (iso.size() == 10) return out;
  if (iso.size() < 16 || (iso[10] != 'T' && iso[10] != ' ') || iso[13] != ':') {
    throw std::invalid_argument("malformed timestamp '" + std::string(iso) + "'");
  }
  const int hh = parse_int(iso.substr(11, 2), iso);
  const int mm = parse_int(iso.substr(14, 2), iso);
  int ss = 0;
  if (iso.size() > 16) {
    if (iso.size() != 19 || iso[16] != ':') {
      throw std::invalid_argument("malformed timestamp '" + std::string(iso) + "'");
    }
    ss = parse_int(iso.substr(17, 2), iso);
  }
  if (hh > 23 || mm > 59 || ss > 59) throw std::invalid_argument("timestamp out of range '" + std::string(iso) + "'");
  out.second_of_day = hh * 3600 + mm * 60 + ss;
  return out;
}

std::string DateTime::iso() const {
  char buf[40];
  std::snprintf(buf, sizeof buf, "T%02d:%02d:%02d", second_of_day / 3600, second_of_day / 60 % 60,
                second_of_day % 60);
  return date.iso() + buf;
}

}  // namespace picksim
