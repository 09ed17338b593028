#pragma once

#include "cobweb/integer.hpp"

#include <string>

namespace cobweb {

// Exact nonnegative rational, always kept in lowest terms with a positive
// denominator.
class rational {
 public:
  rational() = default;  // 0/1
  rational(integer num, integer den);
  static rational whole(integer value) { return rational(std::move(value), 1); }

  const integer& numerator() const noexcept { return num_; }
  const integer& denominator() const noexcept { return den_; }
  bool is_integer() const noexcept { return den_ == 1; }

  rational& operator*=(const rational& rhs);
  friend rational operator*(rational lhs, const rational& rhs) {
    lhs *= rhs;
    return lhs;
  }
  friend bool operator==(const rational&, const rational&) = default;

  // "a" when the denominator is 1, otherwise "a/b".
  std::string str() const;

 private:
  integer num_ = 0;
  integer den_ = 1;
};

}  // namespace cobweb
