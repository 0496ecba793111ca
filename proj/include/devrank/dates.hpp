#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace devrank {

/// Calendar date with day precision, stored as days since 1970-01-01.
struct Date {
    std::int32_t days = 0;

    auto operator<=>(const Date&) const = default;

    /// Latest representable date (9999-12-31); used as an "include everything" cutoff.
    static Date max();
};

/// Parses a strict ISO-8601 calendar date (YYYY-MM-DD). Rejects impossible
/// dates such as 2011-02-29. Returns nullopt on any malformation.
std::optional<Date> parse_date(std::string_view text);

/// Formats as YYYY-MM-DD.
std::string to_string(Date date);

/// Builds a date from civil components; throws std::invalid_argument if invalid.
Date make_date(int year, int month, int day);

}  // namespace devrank
