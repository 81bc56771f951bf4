#pragma once

#include <string>
#include <string_view>

namespace routeval {

/// UTC seconds since the Unix epoch. Fractional seconds are allowed.
using Timestamp = double;

/// Parses `YYYY-MM-DDTHH:MM:SS[.fff...](Z|+00:00)`. Throws std::invalid_argument.
Timestamp parse_iso8601(std::string_view text);

/// Formats with `Z`; fractional part rounded to milliseconds and omitted when zero.
std::string format_iso8601(Timestamp t);

/// Rounds to the millisecond grid used by format_iso8601.
Timestamp round_to_millis(Timestamp t);

}  // namespace routeval
