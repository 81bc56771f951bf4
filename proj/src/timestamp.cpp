#include "routeval/timestamp.hpp"

#include <chrono>
#include <cmath>
#include <cstdint>
#include <stdexcept>

#include <fmt/core.h>

namespace routeval {

namespace {

int parse_digits(std::string_view text, std::size_t pos, std::size_t count) {
  if (pos + count > text.size()) throw std::invalid_argument("truncated timestamp");
  int value = 0;
  for (std::size_t i = pos; i < pos + count; ++i) {
    const char c = text[i];
    if (c < '0' || c > '9') throw std::invalid_argument(fmt::format("bad digit in timestamp '{}'", text));
    value = value * 10 + (c - '0');
  }
  return value;
}

void expect(std::string_view text, std::size_t pos, char c) {
  if (pos >= text.size() || text[pos] != c) {
    throw std::invalid_argument(fmt::format("timestamp '{}' is not ISO-8601 UTC", text));
  }
}

}  // namespace

Timestamp parse_iso8601(std::string_view text) {
  using namespace std::chrono;
  const int y = parse_digits(text, 0, 4);
  expect(text, 4, '-');
  const int mo = parse_digits(text, 5, 2);
  expect(text, 7, '-');
  const int d = parse_digits(text, 8, 2);
  if (text.size() <= 10 || text[10] != 'T') {
    throw std::invalid_argument(fmt::format("timestamp '{}' is not ISO-8601 UTC", text));
  }
  const int h = parse_digits(text, 11, 2);
  expect(text, 13, ':');
  const int mi = parse_digits(text, 14, 2);
  expect(text, 16, ':');
  const int s = parse_digits(text, 17, 2);
  std::size_t pos = 19;
  double frac = 0.0;
  if (pos < text.size() && text[pos] == '.') {
    ++pos;
    std::int64_t digits = 0;
    double denom = 1.0;
    const std::size_t start = pos;
    while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') {
      if (pos - start < 15) {
        digits = digits * 10 + (text[pos] - '0');
        denom *= 10.0;
      }
      ++pos;
    }
    frac = static_cast<double>(digits) / denom;
    if (pos == start) throw std::invalid_argument(fmt::format("empty fraction in timestamp '{}'", text));
  }
  const std::string_view zone = text.substr(pos);
  if (zone != "Z" && zone != "+00:00") {
    throw std::invalid_argument(fmt::format("timestamp '{}' must be UTC (Z)", text));
  }
  const year_month_day ymd{year{y}, month{static_cast<unsigned>(mo)}, day{static_cast<unsigned>(d)}};
  if (!ymd.ok() || h > 23 || mi > 59 || s > 60) {
    throw std::invalid_argument(fmt::format("timestamp '{}' is out of range", text));
  }
  const auto days = sys_days{ymd}.time_since_epoch().count();
  const std::int64_t whole = static_cast<std::int64_t>(days) * 86400 + h * 3600 + mi * 60 + s;
  return static_cast<double>(whole) + frac;
}

Timestamp round_to_millis(Timestamp t) {
  const double whole = std::floor(t);
  const double millis = std::round((t - whole) * 1000.0);
  return whole + millis / 1000.0;
}

std::string format_iso8601(Timestamp t) {
  using namespace std::chrono;
  if (!std::isfinite(t)) throw std::invalid_argument("non-finite timestamp");
  std::int64_t whole = static_cast<std::int64_t>(std::floor(t));
  std::int64_t millis = std::llround((t - std::floor(t)) * 1000.0);
  if (millis == 1000) {
    ++whole;
    millis = 0;
  }
  std::int64_t days = whole / 86400;
  std::int64_t rem = whole % 86400;
  if (rem < 0) {
    rem += 86400;
    --days;
  }
  const year_month_day ymd{sys_days{std::chrono::days{days}}};
  const auto h = rem / 3600;
  const auto mi = (rem % 3600) / 60;
  const auto s = rem % 60;
  std::string out = fmt::format("{:04d}-{:02d}-{:02d}T{:02d}:{:02d}:{:02d}", static_cast<int>(ymd.year()),
                                static_cast<unsigned>(ymd.month()), static_cast<unsigned>(ymd.day()), h, mi, s);
  if (millis != 0) out += fmt::format(".{:03d}", millis);
  out += 'Z';
  return out;
}

}  // namespace routeval
