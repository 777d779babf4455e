#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace optomech::csv {

/// Shortest decimal that round-trips to the same double.
std::string format_number(double x);
std::string format_optional(const std::optional<double>& x);

/// Quotes the field when it contains a comma, quote or newline.
std::string escape(std::string_view field);

std::string join_row(const std::vector<std::string>& fields);

/// 64-bit FNV-1a, rendered as 16 hex digits.
std::string fnv1a_hex(std::string_view data);

}  // namespace optomech::csv
