#include "cobweb/integer.hpp"

#include <string>

namespace cobweb {

integer int_pow(integer base, std::uint64_t exp) {
  integer result = 1;
  while (exp != 0) {
    if (exp & 1u) result *= base;
    exp >>= 1u;
    if (exp != 0) base *= base;
  }
  return result;
}

std::optional<integer> parse_integer(std::string_view text) {
  std::size_t start = 0;
  if (!text.empty() && (text[0] == '+' || text[0] == '-')) start = 1;
  if (start == text.size()) return std::nullopt;
  for (std::size_t i = start; i < text.size(); ++i) {
    if (text[i] < '0' || text[i] > '9') return std::nullopt;
  }
  integer magnitude(std::string(text.substr(start)));
  if (text[0] == '-') magnitude = -magnitude;
  return magnitude;
}

}  // namespace cobweb
