#include "cobweb/factorization.hpp"

#include <algorithm>
#include <limits>
#include <utility>

namespace cobweb {
namespace {

using uint128 = unsigned __int128;

// Divides out the maximal power of p from rest, returning its multiplicity.
std::uint64_t strip_factor(integer& rest, const integer& p) {
  std::uint64_t count = 0;
  while (rest % p == 0) {
    rest /= p;
    ++count;
  }
  return count;
}

}  // namespace

bool is_prime(const integer& value, const integer& ceiling) {
  if (value > ceiling) throw input_too_large(value, ceiling);
  if (value < 2) return false;
  if (value < 4) return true;
  if (value % 2 == 0 || value % 3 == 0) return false;
  for (integer d = 5; d * d <= value; d += 6) {
    if (value % d == 0 || value % (d + 2) == 0) return false;
  }
  return true;
}

std::map<integer, std::uint64_t> factorize_value(const integer& value, const integer& ceiling) {
  if (value < 1) throw non_positive_value();
  if (value > ceiling) throw input_too_large(value, ceiling);

  std::map<integer, std::uint64_t> factors;
  integer rest = value;
  auto strip = [&](const integer& p) {
    if (std::uint64_t e = strip_factor(rest, p); e > 0) factors[p] = e;
  };
  strip(2);
  strip(3);
  for (integer d = 5; d * d <= rest; d += 6) {
    strip(d);
    strip(d + 2);
  }
  if (rest > 1) factors[rest] += 1;  // remaining cofactor is prime
  return factors;
}

exponent_sequence::exponent_sequence(integer prime, std::vector<std::uint64_t> exponents,
                                     const integer& ceiling)
    : prime_(std::move(prime)), exponents_(std::move(exponents)) {
  if (!is_prime(prime_, ceiling)) throw not_prime(prime_);
}

std::uint64_t exponent_sequence::exponent(std::size_t n) const {
  if (n < 1 || n > exponents_.size()) throw index_out_of_range(n, exponents_.size());
  return exponents_[n - 1];
}

bool exponent_sequence::all_zero() const noexcept {
  return std::all_of(exponents_.begin(), exponents_.end(),
                     [](std::uint64_t e) { return e == 0; });
}

sequence exponent_sequence::to_sequence() const {
  std::vector<integer> terms;
  terms.reserve(exponents_.size());
  for (std::uint64_t e : exponents_) terms.push_back(int_pow(prime_, e));
  return sequence(std::move(terms));
}

admissibility_report is_admissible(const exponent_sequence& exps) {
  const auto& a = exps.exponents();
  const std::size_t len = a.size();

  // prefix[i] = a(1) + ... + a(i); 128-bit sums cannot overflow here.
  std::vector<uint128> prefix(len + 1, 0);
  for (std::size_t i = 1; i <= len; ++i) prefix[i] = prefix[i - 1] + a[i - 1];

  for (std::size_t n = 2; n <= len; ++n) {
    for (std::size_t k = 1; k <= n / 2; ++k) {
      const uint128 tail = prefix[n] - prefix[n - k];
      const uint128 head = prefix[k];
      if (tail < head) {
        const uint128 deficit = head - tail;
        if (deficit > std::numeric_limits<std::uint64_t>::max()) {
          throw error("exponent deficit too large to materialize a witness");
        }
        rational witness(1, int_pow(exps.prime(), static_cast<std::uint64_t>(deficit)));
        return {false, std::make_pair(n, k), std::move(witness), len};
      }
    }
  }
  return {true, std::nullopt, std::nullopt, len};
}

primary_decomposition::primary_decomposition(std::size_t length,
                                             std::vector<exponent_sequence> components)
    : length_(length), components_(std::move(components)) {
  for (const auto& c : components_) {
    if (c.length() != length_) throw length_mismatch(length_, c.length());
  }
  std::erase_if(components_, [](const exponent_sequence& c) { return c.all_zero(); });
  std::sort(components_.begin(), components_.end(),
            [](const exponent_sequence& a, const exponent_sequence& b) {
              return a.prime() < b.prime();
            });
  for (std::size_t i = 1; i < components_.size(); ++i) {
    if (components_[i - 1].prime() == components_[i].prime()) {
      throw error("duplicate prime " + components_[i].prime().str() + " in decomposition");
    }
  }
}

const exponent_sequence* primary_decomposition::find(const integer& prime) const {
  auto it = std::lower_bound(components_.begin(), components_.end(), prime,
                             [](const exponent_sequence& c, const integer& p) {
                               return c.prime() < p;
                             });
  if (it == components_.end() || it->prime() != prime) return nullptr;
  return &*it;
}

primary_decomposition decompose(const sequence& seq, const integer& ceiling) {
  const std::size_t len = seq.length();
  std::map<integer, std::vector<std::uint64_t>> exps;
  for (std::size_t n = 1; n <= len; ++n) {
    for (const auto& [p, e] : factorize_value(seq.term(n), ceiling)) {
      auto [it, inserted] = exps.try_emplace(p, std::vector<std::uint64_t>(len, 0));
      it->second[n - 1] = e;
    }
  }
  std::vector<exponent_sequence> components;
  components.reserve(exps.size());
  for (auto& [p, e] : exps) components.emplace_back(p, std::move(e), ceiling);
  return primary_decomposition(len, std::move(components));
}

sequence reconstruct(const primary_decomposition& decomp) {
  std::vector<integer> terms(decomp.length(), integer(1));
  for (const auto& c : decomp.components()) {
    for (std::size_t i = 0; i < terms.size(); ++i) {
      if (std::uint64_t e = c.exponents()[i]; e > 0) terms[i] *= int_pow(c.prime(), e);
    }
  }
  return sequence(std::move(terms));
}

primary_check is_primary(const sequence& seq, const integer& ceiling) {
  integer base = 0;
  for (std::size_t n = 1; n <= seq.length(); ++n) {
    const integer& t = seq.term(n);
    if (t == 1) continue;
    auto factors = factorize_value(t, ceiling);
    if (factors.size() > 1) return {primary_check::kind::not_primary, integer(0)};
    const integer& p = factors.begin()->first;
    if (base == 0) {
      base = p;
    } else if (base != p) {
      return {primary_check::kind::not_primary, integer(0)};
    }
  }
  if (base == 0) return {primary_check::kind::any_prime, integer(0)};
  return {primary_check::kind::single_prime, base};
}

}  // namespace cobweb
