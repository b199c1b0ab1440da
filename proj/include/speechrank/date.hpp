#pragma once

#include <compare>
#include <string>
#include <string_view>

namespace speechrank {

// Gregorian calendar date. Parsed from "Month D, YYYY" or ISO 8601
// "YYYY-MM-DD"; anything else is a ParseError, never a guess.
struct Date {
  int year = 0;
  int month = 0;
  int day = 0;

  auto operator<=>(const Date&) const = default;

  std::string to_iso() const;
};

Date parse_date(std::string_view text);

bool is_valid_date(int year, int month, int day);

}  // namespace speechrank
