#pragma once

#include "cobweb/errors.hpp"
#include "cobweb/rational.hpp"

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

namespace cobweb {

// Finite prefix of a positive-integer-valued sequence. Terms are addressed by
// their 1-based position; position 0 never enters any coefficient and is not
// stored.
class sequence {
 public:
  sequence() = default;
  explicit sequence(std::vector<integer> terms);  // throws non_positive_term

  std::size_t length() const noexcept { return terms_.size(); }
  bool empty() const noexcept { return terms_.empty(); }

  // 1-based access; n must lie in 1..length().
  const integer& term(std::size_t n) const;

  const std::vector<integer>& terms() const noexcept { return terms_; }

  friend bool operator==(const sequence&, const sequence&) = default;

 private:
  std::vector<integer> terms_;
};

sequence make_sequence(std::vector<integer> values);

// Outcome of an admissibility scan over a sequence prefix.
struct admissibility_report {
  bool admissible = true;
  // Least failing (n, k), scanned n ascending over 2..N and k ascending over
  // 1..floor(n/2).
  std::optional<std::pair<std::size_t, std::size_t>> first_failure;
  // The offending non-integer coefficient at first_failure.
  std::optional<rational> witness;
  std::size_t checked_depth = 0;

  friend bool operator==(const admissibility_report&, const admissibility_report&) = default;
};

// Generalized binomial coefficient over the sequence:
//
//   C(n, k) = term(n) * term(n-1) * ... * term(n-k+1)
//           / (term(1) * term(2)   * ... * term(k))
//
// computed exactly. Returns 1 for k == 0 or k == n, and 0 for k > n.
// Specializes to ordinary binomials (naturals), fibonomials (Fibonacci) and
// Gaussian q-binomials (q-integers). Throws index_out_of_range when
// n > length().
rational f_binomial(const sequence& seq, std::size_t n, std::size_t k);

// A sequence is cobweb-admissible when every generalized binomial coefficient
// over it is an integer. Only 1 <= k <= floor(n/2) is scanned: C(n, k) and
// C(n, n-k) are equal as exact ratios, so the half range decides the rest.
admissibility_report is_admissible(const sequence& seq);

// Rows 0..depth of the coefficient triangle; row n holds C(n, 0) .. C(n, n).
// Throws index_out_of_range when depth > length().
std::vector<std::vector<rational>> binomial_triangle(const sequence& seq, std::size_t depth);

// Termwise product of two prefixes of equal length.
sequence pointwise_product(const sequence& lhs, const sequence& rhs);

}  // namespace cobweb
