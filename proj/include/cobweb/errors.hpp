#pragma once

#include "cobweb/integer.hpp"

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace cobweb {

// Base class for all library errors. The CLI maps every cobweb::error to
// exit code 2.
class error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A sequence term was zero or negative. Carries the 1-based term position.
class non_positive_term : public error {
 public:
  explicit non_positive_term(std::size_t index);
  std::size_t index() const noexcept { return index_; }

 private:
  std::size_t index_;
};

class index_out_of_range : public error {
 public:
  index_out_of_range(std::size_t value, std::size_t limit);
  std::size_t value() const noexcept { return value_; }
  std::size_t limit() const noexcept { return limit_; }

 private:
  std::size_t value_;
  std::size_t limit_;
};

class length_mismatch : public error {
 public:
  length_mismatch(std::size_t expected, std::size_t got);
};

// factorize_value received a value below 1.
class non_positive_value : public error {
 public:
  non_positive_value();
};

// The trial-division ceiling would be exceeded; raise it explicitly to proceed.
class input_too_large : public error {
 public:
  input_too_large(const integer& value, const integer& ceiling);
};

class not_prime : public error {
 public:
  explicit not_prime(const integer& value);
};

// A path extension fell short of the admissible minimum weight.
class below_minimum : public error {
 public:
  below_minimum(std::uint64_t exponent, std::uint64_t minimum);
  std::uint64_t minimum() const noexcept { return minimum_; }

 private:
  std::uint64_t minimum_;
};

// Sequence-file syntax error; what() reads "line N: <message>".
class parse_error : public error {
 public:
  parse_error(std::size_t line, const std::string& message);
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

}  // namespace cobweb
