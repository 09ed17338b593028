#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace cobweb::verify {

// Scale knobs for the cross-check suites. Exhaustive suites range over
// max_depth and max_cap; randomized suites run `trials` cases from `seed`.
// trials == 0 leaves only the exhaustive suites doing work.
struct options {
  std::size_t max_depth = 6;
  std::uint64_t max_cap = 2;
  std::uint64_t trials = 200;
  std::uint64_t seed = 1;
};

struct suite_result {
  std::string name;
  std::uint64_t cases = 0;
  bool passed = true;
  std::string counterexample;  // empty when passed
};

// Exhaustive: the exponent-sum criterion against direct coefficient
// divisibility, over all exponent tuples of length <= max_depth with entries
// <= max_cap, rendered over primes 2 and 3.
suite_result check_criterion_equivalence(const options& opts);

// Exhaustive: tree enumeration against the brute-force filter of all capped
// tuples through the direct admissibility scan, for every depth <= max_depth
// and cap <= max_cap; contents, counts and order must match.
suite_result check_enumeration_completeness(const options& opts);

// Random: decompose/reconstruct is the identity on products of sampled
// single-prime paths over {2, 3, 5}; the product is admissible and every
// decomposed component passes the exponent-sum criterion.
suite_result check_roundtrip(const options& opts);

// Random: the successor minimum is sharp. extend(path, m) succeeds,
// extend(path, m - 1) fails whenever m >= 1, and every tested offset above m
// succeeds.
suite_result check_successor_exactness(const options& opts);

// Random: coefficients of a pointwise product equal the product of the
// factors' coefficients, as exact ratios.
suite_result check_multiplicativity(const options& opts);

// All five suites in a fixed order.
std::vector<suite_result> run_all(const options& opts);

}  // namespace cobweb::verify
