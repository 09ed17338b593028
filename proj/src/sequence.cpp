#include "cobweb/sequence.hpp"

namespace cobweb {

sequence::sequence(std::vector<integer> terms) : terms_(std::move(terms)) {
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    if (terms_[i] < 1) throw non_positive_term(i + 1);
  }
}

const integer& sequence::term(std::size_t n) const {
  if (n < 1 || n > terms_.size()) throw index_out_of_range(n, terms_.size());
  return terms_[n - 1];
}

sequence make_sequence(std::vector<integer> values) { return sequence(std::move(values)); }

rational f_binomial(const sequence& seq, std::size_t n, std::size_t k) {
  if (n > seq.length()) throw index_out_of_range(n, seq.length());
  if (k > n) return rational(0, 1);
  if (k == 0 || k == n) return rational(1, 1);
  if (k > n - k) k = n - k;  // C(n, k) == C(n, n-k) exactly

  integer num = 1;
  integer den = 1;
  for (std::size_t i = 0; i < k; ++i) {
    num *= seq.term(n - i);
    den *= seq.term(i + 1);
    integer g = gcd(num, den);
    if (g > 1) {
      num /= g;
      den /= g;
    }
  }
  return rational(std::move(num), std::move(den));
}

admissibility_report is_admissible(const sequence& seq) {
  const std::size_t len = seq.length();
  for (std::size_t n = 2; n <= len; ++n) {
    for (std::size_t k = 1; k <= n / 2; ++k) {
      rational c = f_binomial(seq, n, k);
      if (!c.is_integer()) {
        return {false, std::make_pair(n, k), std::move(c), len};
      }
    }
  }
  return {true, std::nullopt, std::nullopt, len};
}

std::vector<std::vector<rational>> binomial_triangle(const sequence& seq, std::size_t depth) {
  if (depth > seq.length()) throw index_out_of_range(depth, seq.length());
  std::vector<std::vector<rational>> rows;
  rows.reserve(depth + 1);
  for (std::size_t n = 0; n <= depth; ++n) {
    std::vector<rational> row;
    row.reserve(n + 1);
    for (std::size_t k = 0; k <= n; ++k) row.push_back(f_binomial(seq, n, k));
    rows.push_back(std::move(row));
  }
  return rows;
}

sequence pointwise_product(const sequence& lhs, const sequence& rhs) {
  if (lhs.length() != rhs.length()) throw length_mismatch(lhs.length(), rhs.length());
  std::vector<integer> terms;
  terms.reserve(lhs.length());
  for (std::size_t n = 1; n <= lhs.length(); ++n) terms.push_back(lhs.term(n) * rhs.term(n));
  return sequence(std::move(terms));
}

}  // namespace cobweb
