#include "cobweb/sequence_io.hpp"

#include <fstream>
#include <istream>
#include <string>
#include <string_view>

namespace cobweb {
namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) {
    s.remove_prefix(1);
  }
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) {
    s.remove_suffix(1);
  }
  return s;
}

}  // namespace

sequence parse_sequence_text(std::istream& in) {
  std::vector<integer> terms;
  std::string raw;
  std::size_t line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    const std::string_view line = trim(raw);
    if (line.empty() || line.front() == '#') continue;
    auto value = parse_integer(line);
    if (!value) throw parse_error(line_no, "not an integer");
    if (*value < 1) throw parse_error(line_no, "term must be positive");
    terms.push_back(std::move(*value));
  }
  return sequence(std::move(terms));
}

sequence read_sequence_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw error("cannot open file: " + path);
  return parse_sequence_text(in);
}

}  // namespace cobweb
