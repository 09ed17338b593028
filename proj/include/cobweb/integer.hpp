#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <optional>
#include <string_view>

namespace cobweb {

using integer = boost::multiprecision::cpp_int;

// base^exp by binary exponentiation; exact for any result that fits in memory.
integer int_pow(integer base, std::uint64_t exp);

// Strict decimal parser: optional sign followed by digits, nothing else.
std::optional<integer> parse_integer(std::string_view text);

}  // namespace cobweb
