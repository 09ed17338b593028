#include "cobweb/errors.hpp"

namespace cobweb {

non_positive_term::non_positive_term(std::size_t index)
    : error("term " + std::to_string(index) + " must be positive"), index_(index) {}

index_out_of_range::index_out_of_range(std::size_t value, std::size_t limit)
    : error("index " + std::to_string(value) + " out of range (length " +
            std::to_string(limit) + ")"),
      value_(value),
      limit_(limit) {}

length_mismatch::length_mismatch(std::size_t expected, std::size_t got)
    : error("length mismatch: expected " + std::to_string(expected) + ", got " +
            std::to_string(got)) {}

non_positive_value::non_positive_value() : error("value must be positive") {}

input_too_large::input_too_large(const integer& value, const integer& ceiling)
    : error("value " + value.str() + " exceeds the factorization ceiling " + ceiling.str()) {}

not_prime::not_prime(const integer& value) : error(value.str() + " is not prime") {}

below_minimum::below_minimum(std::uint64_t exponent, std::uint64_t minimum)
    : error("exponent " + std::to_string(exponent) + " is below the admissible minimum " +
            std::to_string(minimum)),
      minimum_(minimum) {}

parse_error::parse_error(std::size_t line, const std::string& message)
    : error("line " + std::to_string(line) + ": " + message), line_(line) {}

}  // namespace cobweb
