#pragma once

#include "cobweb/sequence.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace cobweb {

// Weight path descending from the (implicit, zero-weight) root of the
// successor tree. Valid paths are exactly the exponent prefixes of
// single-prime admissible sequences: for every 2 <= m <= depth and every
// 1 <= k <= floor(m/2), the k weights ending at position m sum to at least
// the first k weights. The invariant is enforced at construction and on
// every extension. Weights are prime-independent; a prime enters only when a
// path is rendered into a sequence.
class tree_path {
 public:
  tree_path() = default;
  explicit tree_path(std::vector<std::uint64_t> weights);  // throws below_minimum

  std::size_t depth() const noexcept { return weights_.size(); }
  bool empty() const noexcept { return weights_.empty(); }
  const std::vector<std::uint64_t>& weights() const noexcept { return weights_; }

  friend bool operator==(const tree_path&, const tree_path&) = default;

 private:
  struct unchecked_tag {};
  tree_path(unchecked_tag, std::vector<std::uint64_t> weights) : weights_(std::move(weights)) {}

  friend tree_path extend(const tree_path& path, std::uint64_t exponent);
  friend class path_enumerator;
  friend tree_path sample_random(std::size_t depth, double offset_mean, std::uint64_t seed);

  std::vector<std::uint64_t> weights_;
};

// Least weight that admissibly extends the path by one position: the largest
// shortfall, over the constrained k, between the sum of the first k weights
// and the sum of the k-1 weights preceding the new position. Zero when no k
// constrains (the first extension is free).
std::uint64_t min_successor_exponent(const tree_path& path);

// The admissible next weights for a path: the lower-closed infinite set
// {min_exponent, min_exponent + 1, ...}; never empty.
struct successor_set {
  std::uint64_t min_exponent = 0;
  bool contains(std::uint64_t exponent) const noexcept { return exponent >= min_exponent; }
};

successor_set successors(const tree_path& path);

// One position longer; throws below_minimum when the weight falls short of
// min_successor_exponent(path).
tree_path extend(const tree_path& path, std::uint64_t exponent);

// Finite enumeration window: every valid path with exactly `depth` weights,
// each weight <= exponent_cap. The cap bounds branching; the tree itself is
// infinitely wide at every vertex.
struct enumeration_config {
  std::size_t depth = 0;
  std::uint64_t exponent_cap = 0;
};

// Lazy depth-first producer of the configured paths in ascending
// lexicographic order.
class path_enumerator {
 public:
  explicit path_enumerator(enumeration_config config);

  // Next path, or nullopt once exhausted. The stream is finite.
  std::optional<tree_path> next();

 private:
  bool bump();
  bool fill_minimal();

  enumeration_config config_;
  std::vector<std::uint64_t> weights_;
  bool started_ = false;
  bool done_ = false;
};

// All configured paths, materialized in enumeration order.
std::vector<tree_path> enumerate(const enumeration_config& config);

// Number of paths enumerate(config) yields, without storing them.
std::uint64_t count_paths(const enumeration_config& config);

// Random valid path of the given depth: each weight is the admissible
// minimum plus a geometric offset with the given mean. A fixed seed yields
// an identical path; no state is shared between calls.
tree_path sample_random(std::size_t depth, double offset_mean, std::uint64_t seed);

// Renders a path over a prime: term(n) = p^weight(n). The result is always
// admissible. Throws not_prime when p fails the primality check.
sequence path_to_sequence(const tree_path& path, const integer& p);

}  // namespace cobweb
