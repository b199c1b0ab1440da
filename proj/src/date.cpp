#include "speechrank/date.hpp"

#include <array>
#include <cctype>
#include <charconv>

#include "speechrank/errors.hpp"

namespace speechrank {

namespace {

constexpr std::array<std::string_view, 12> kMonths = {
    "January", "February", "March",     "April",   "May",      "June",
    "July",    "August",   "September", "October", "November", "December"};

bool parse_int(std::string_view s, int& out) {
  if (s.empty()) return false;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
  return ec == std::errc{} && ptr == s.data() + s.size();
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
    s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
    s.remove_suffix(1);
  return s;
}

}  // namespace

bool is_valid_date(int year, int month, int day) {
  if (year < 1 || month < 1 || month > 12 || day < 1) return false;
  static constexpr int days[] = {31, 28, 31, 30, 31, 30, 31, 31, 30, 31, 30, 31};
  int maxday = days[month - 1];
  bool leap = (year % 4 == 0 && year % 100 != 0) || year % 400 == 0;
  if (month == 2 && leap) maxday = 29;
  return day <= maxday;
}

Date parse_date(std::string_view text) {
  text = trim(text);
  Date d;
  // ISO 8601: YYYY-MM-DD
  if (text.size() == 10 && text[4] == '-' && text[7] == '-') {
    if (parse_int(text.substr(0, 4), d.year) &&
        parse_int(text.substr(5, 2), d.month) &&
        parse_int(text.substr(8, 2), d.day) &&
        is_valid_date(d.year, d.month, d.day)) {
      return d;
    }
    throw ParseError("invalid ISO date: \"" + std::string(text) + "\"");
  }
  // "Month D, YYYY"
  auto space = text.find(' ');
  auto comma = text.find(',');
  if (space != std::string_view::npos && comma != std::string_view::npos &&
      space < comma) {
    std::string_view month_name = text.substr(0, space);
    std::string_view day_part = trim(text.substr(space + 1, comma - space - 1));
    std::string_view year_part = trim(text.substr(comma + 1));
    for (std::size_t m = 0; m < kMonths.size(); ++m) {
      if (month_name == kMonths[m]) {
        d.month = static_cast<int>(m) + 1;
        if (parse_int(day_part, d.day) && parse_int(year_part, d.year) &&
            is_valid_date(d.year, d.month, d.day)) {
          return d;
        }
        break;
      }
    }
  }
  throw ParseError("unparsable date: \"" + std::string(text) + "\"");
}

std::string Date::to_iso() const {
  char buf[16];
  std::snprintf(buf, sizeof buf, "%04d-%02d-%02d", year, month, day);
  return buf;
}

}  // namespace speechrank
