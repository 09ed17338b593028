#include "cobweb/rational.hpp"

#include "cobweb/errors.hpp"

namespace cobweb {

rational::rational(integer num, integer den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_ < 1) throw error("rational denominator must be positive");
  if (num_ < 0) throw error("rational numerator must be nonnegative");
  if (num_ == 0) {
    den_ = 1;
    return;
  }
  integer g = gcd(num_, den_);
  if (g > 1) {
    num_ /= g;
    den_ /= g;
  }
}

rational& rational::operator*=(const rational& rhs) {
  // Cross-reduce before multiplying to keep intermediates small.
  integer g1 = gcd(num_, rhs.den_);
  integer g2 = gcd(rhs.num_, den_);
  num_ = (num_ / g1) * (rhs.num_ / g2);
  den_ = (den_ / g2) * (rhs.den_ / g1);
  if (num_ == 0) den_ = 1;
  return *this;
}

std::string rational::str() const {
  if (den_ == 1) return num_.str();
  return num_.str() + "/" + den_.str();
}

}  // namespace cobweb
