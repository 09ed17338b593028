#pragma once

#include "cobweb/sequence.hpp"

#include <iosfwd>
#include <string>

namespace cobweb {

// Sequence text format: one decimal integer per data line, the i-th data line
// holding term i. Blank lines and lines starting with '#' are skipped; LF and
// CRLF both accepted. Diagnostics carry the physical line number.
sequence parse_sequence_text(std::istream& in);  // throws parse_error

sequence read_sequence_file(const std::string& path);

}  // namespace cobweb
