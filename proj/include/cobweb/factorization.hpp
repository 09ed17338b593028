#pragma once

#include "cobweb/sequence.hpp"

#include <cstdint>
#include <map>
#include <vector>

namespace cobweb {

// Trial division refuses inputs above this bound unless a caller raises it
// explicitly; the bound caps runtime, not correctness.
inline const integer k_default_factor_ceiling = integer(1) << 64;

// Deterministic primality by trial division up to sqrt(value).
bool is_prime(const integer& value, const integer& ceiling = k_default_factor_ceiling);

// Complete prime factorization of value >= 1; the empty map encodes 1.
// Throws non_positive_value below 1 and input_too_large above the ceiling.
std::map<integer, std::uint64_t> factorize_value(
    const integer& value, const integer& ceiling = k_default_factor_ceiling);

// A prime together with the exponent it carries at each position of a
// sequence prefix: position n stands for prime^exponent(n).
class exponent_sequence {
 public:
  exponent_sequence(integer prime, std::vector<std::uint64_t> exponents,
                    const integer& ceiling = k_default_factor_ceiling);  // throws not_prime

  const integer& prime() const noexcept { return prime_; }
  const std::vector<std::uint64_t>& exponents() const noexcept { return exponents_; }
  std::size_t length() const noexcept { return exponents_.size(); }
  std::uint64_t exponent(std::size_t n) const;  // 1-based
  bool all_zero() const noexcept;

  // The single-prime sequence with term(n) = prime^exponent(n); every term
  // lies in {1, p, p^2, ...}.
  sequence to_sequence() const;

  friend bool operator==(const exponent_sequence&, const exponent_sequence&) = default;

 private:
  integer prime_;
  std::vector<std::uint64_t> exponents_;
};

// Single-prime admissibility decided on exponents alone: the prefix is
// admissible iff for every n and every 1 <= k <= floor(n/2), the k exponents
// ending at position n sum to at least the first k exponents. Agrees with
// is_admissible(exps.to_sequence()) verdict for verdict, failure for failure.
admissibility_report is_admissible(const exponent_sequence& exps);

// Factorization of a sequence prefix into single-prime components whose
// pointwise product reconstructs the original. Canonical form: components
// sorted by ascending prime, none identically zero.
class primary_decomposition {
 public:
  explicit primary_decomposition(std::size_t length) : length_(length) {}
  primary_decomposition(std::size_t length, std::vector<exponent_sequence> components);

  std::size_t length() const noexcept { return length_; }
  bool empty() const noexcept { return components_.empty(); }
  const std::vector<exponent_sequence>& components() const noexcept { return components_; }
  const exponent_sequence* find(const integer& prime) const;

  friend bool operator==(const primary_decomposition&, const primary_decomposition&) = default;

 private:
  std::size_t length_ = 0;
  std::vector<exponent_sequence> components_;
};

// Per-term trial division: component of prime p holds, at position n, the
// multiplicity of p in term(n).
primary_decomposition decompose(const sequence& seq,
                                const integer& ceiling = k_default_factor_ceiling);

// Inverse of decompose: term(n) is the product of prime^exponent(n) over all
// components.
sequence reconstruct(const primary_decomposition& decomp);

// Classification of a sequence as single-prime valued.
struct primary_check {
  enum class kind { not_primary, any_prime, single_prime };
  kind result = kind::not_primary;
  integer prime;  // meaningful only when result == single_prime

  friend bool operator==(const primary_check&, const primary_check&) = default;
};

// single_prime(p) when every term lies in {1, p, p^2, ...} for exactly one
// prime p; any_prime when all terms equal 1 (every prime fits); not_primary
// otherwise.
primary_check is_primary(const sequence& seq, const integer& ceiling = k_default_factor_ceiling);

}  // namespace cobweb
