#pragma once
// Calendar dates at day granularity. Work-order timestamps are compared as
// plain calendar dates; time-of-day fields in the input are parsed where the
// format names them and then discarded.

#include <chrono>
#include <compare>
#include <cstdio>
#include <optional>
#include <string>
#include <string_view>

namespace scngen {

struct Date {
  int year = 0;
  unsigned month = 1;
  unsigned day = 1;

  friend auto operator<=>(const Date&, const Date&) = default;

  bool valid() const {
    return std::chrono::year_month_day{std::chrono::year{year},
                                       std::chrono::month{month},
                                       std::chrono::day{day}}
        .ok();
  }

  std::chrono::sys_days to_days() const {
    return std::chrono::sys_days{std::chrono::year_month_day{
        std::chrono::year{year}, std::chrono::month{month},
        std::chrono::day{day}}};
  }

  static Date from_days(std::chrono::sys_days sd) {
    const std::chrono::year_month_day ymd{sd};
    return Date{int(ymd.year()), unsigned(ymd.month()), unsigned(ymd.day())};
  }

  Date plus_days(int n) const {
    return from_days(to_days() + std::chrono::days{n});
  }

  std::string iso() const {
    char buf[16];
    std::snprintf(buf, sizeof buf, "%04d-%02u-%02u", year, month, day);
    return buf;
  }
};

/// True when `format` uses only supported fields: %Y %m %d %H %M %S and %%.
/// Everything else in the descriptor must be a literal character.
inline bool valid_date_format(std::string_view format) {
  bool has_y = false, has_m = false, has_d = false;
  for (std::size_t i = 0; i < format.size(); ++i) {
    if (format[i] != '%') continue;
    if (i + 1 >= format.size()) return false;
    switch (format[++i]) {
      case 'Y': has_y = true; break;
      case 'm': has_m = true; break;
      case 'd': has_d = true; break;
      case 'H':
      case 'M':
      case 'S':
      case '%': break;
      default: return false;
    }
  }
  return has_y && has_m && has_d;
}

/// Parses `text` against a strftime-like descriptor. %Y takes four digits,
/// the other fields one or two. The whole input must be consumed. Returns
/// std::nullopt on any mismatch or an impossible calendar date.
inline std::optional<Date> parse_date(std::string_view text,
                                      std::string_view format) {
  std::size_t pos = 0;
  int y = -1, mo = -1, d = -1;

  auto read_int = [&](std::size_t min_digits,
                      std::size_t max_digits) -> std::optional<int> {
    const std::size_t start = pos;
    int value = 0;
    while (pos < text.size() && pos - start < max_digits &&
           text[pos] >= '0' && text[pos] <= '9') {
      value = value * 10 + (text[pos] - '0');
      ++pos;
    }
    if (pos - start < min_digits) return std::nullopt;
    return value;
  };

  for (std::size_t f = 0; f < format.size(); ++f) {
    const char c = format[f];
    if (c == '%' && f + 1 < format.size()) {
      switch (format[++f]) {
        case 'Y': {
          auto v = read_int(4, 4);
          if (!v) return std::nullopt;
          y = *v;
          break;
        }
        case 'm': {
          auto v = read_int(1, 2);
          if (!v) return std::nullopt;
          mo = *v;
          break;
        }
        case 'd': {
          auto v = read_int(1, 2);
          if (!v) return std::nullopt;
          d = *v;
          break;
        }
        case 'H':
        case 'M':
        case 'S': {
          // Time-of-day: consumed, then dropped.
          if (!read_int(1, 2)) return std::nullopt;
          break;
        }
        case '%': {
          if (pos >= text.size() || text[pos] != '%') return std::nullopt;
          ++pos;
          break;
        }
        default:
          return std::nullopt;
      }
    } else {
      if (pos >= text.size() || text[pos] != c) return std::nullopt;
      ++pos;
    }
  }
  if (pos != text.size()) return std::nullopt;
  if (y < 0 || mo < 0 || d < 0) return std::nullopt;

  const Date date{y, unsigned(mo), unsigned(d)};
  if (!date.valid()) return std::nullopt;
  return date;
}

inline constexpr std::string_view kIsoDateFormat = "%Y-%m-%d";

// Inclusive calendar window. start <= end is validated where ranges are
// constructed from user input.
struct DateRange {
  Date start;
  Date end;

  bool contains(const Date& d) const { return start <= d && d <= end; }

  friend bool operator==(const DateRange&, const DateRange&) = default;
};

}  // namespace scngen
