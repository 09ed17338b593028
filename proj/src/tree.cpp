#include "cobweb/tree.hpp"

#include "cobweb/factorization.hpp"

#include <cmath>
#include <random>

namespace cobweb {
namespace {

using int128 = __int128;

// Minimal admissible weight for extending `w` to position w.size() + 1.
// The new weight e must satisfy, for every 1 <= k <= floor((size+1)/2),
//   e + (sum of last k-1 entries of w) >= (sum of first k entries of w),
// so the minimum is the largest of those differences, clamped at zero by the
// k = 1 term (or by the empty range when size == 0).
std::uint64_t min_exponent_for_next(std::span<const std::uint64_t> w) {
  const std::size_t next = w.size() + 1;
  int128 best = 0;
  int128 head = 0;  // sum of first k entries
  int128 tail = 0;  // sum of last k-1 entries
  for (std::size_t k = 1; k <= next / 2; ++k) {
    head += w[k - 1];
    if (k >= 2) tail += w[w.size() - (k - 1)];
    const int128 diff = head - tail;
    if (diff > best) best = diff;
  }
  // On a valid prefix the shortfall never exceeds a single weight, so the
  // cast is exact.
  return static_cast<std::uint64_t>(best);
}

void validate_weights(const std::vector<std::uint64_t>& w) {
  for (std::size_t i = 0; i < w.size(); ++i) {
    const std::uint64_t m = min_exponent_for_next(std::span(w.data(), i));
    if (w[i] < m) throw below_minimum(w[i], m);
  }
}

double unit_draw(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

// Geometric offset with P(J = j) = (1-q) q^j and mean q / (1-q).
std::uint64_t geometric_draw(std::mt19937_64& rng, double q) {
  std::uint64_t j = 0;
  while (unit_draw(rng) < q) ++j;
  return j;
}

}  // namespace

tree_path::tree_path(std::vector<std::uint64_t> weights) : weights_(std::move(weights)) {
  validate_weights(weights_);
}

std::uint64_t min_successor_exponent(const tree_path& path) {
  return min_exponent_for_next(std::span(path.weights()));
}

successor_set successors(const tree_path& path) {
  return successor_set{min_successor_exponent(path)};
}

tree_path extend(const tree_path& path, std::uint64_t exponent) {
  const std::uint64_t m = min_successor_exponent(path);
  if (exponent < m) throw below_minimum(exponent, m);
  std::vector<std::uint64_t> w = path.weights();
  w.push_back(exponent);
  return tree_path(tree_path::unchecked_tag{}, std::move(w));
}

path_enumerator::path_enumerator(enumeration_config config) : config_(config) {
  weights_.reserve(config_.depth);
}

// Pops every trailing weight already at the cap, then raises the last
// remaining one. Raising a weight keeps the prefix valid since it was valid
// at a smaller value.
bool path_enumerator::bump() {
  while (!weights_.empty() && weights_.back() >= config_.exponent_cap) weights_.pop_back();
  if (weights_.empty()) return false;
  ++weights_.back();
  return true;
}

// Extends the current prefix with minimal weights until it reaches full
// depth, bumping out of subtrees whose minimum exceeds the cap.
bool path_enumerator::fill_minimal() {
  for (;;) {
    if (weights_.size() == config_.depth) return true;
    const std::uint64_t m = min_exponent_for_next(std::span(weights_));
    if (m > config_.exponent_cap) {
      if (!bump()) return false;
      continue;
    }
    weights_.push_back(m);
  }
}

std::optional<tree_path> path_enumerator::next() {
  if (done_) return std::nullopt;
  if (started_ && !bump()) {
    done_ = true;
    return std::nullopt;
  }
  started_ = true;
  if (!fill_minimal()) {
    done_ = true;
    return std::nullopt;
  }
  return tree_path(tree_path::unchecked_tag{}, std::vector<std::uint64_t>(weights_));
}

std::vector<tree_path> enumerate(const enumeration_config& config) {
  std::vector<tree_path> paths;
  path_enumerator gen(config);
  while (auto p = gen.next()) paths.push_back(std::move(*p));
  return paths;
}

std::uint64_t count_paths(const enumeration_config& config) {
  std::uint64_t count = 0;
  path_enumerator gen(config);
  while (gen.next()) ++count;
  return count;
}

tree_path sample_random(std::size_t depth, double offset_mean, std::uint64_t seed) {
  if (!(offset_mean > 0.0) || !std::isfinite(offset_mean) || offset_mean > 1e9) {
    throw error("offset mean must be positive and finite");
  }
  const double q = offset_mean / (1.0 + offset_mean);
  std::mt19937_64 rng(seed);
  std::vector<std::uint64_t> w;
  w.reserve(depth);
  for (std::size_t i = 0; i < depth; ++i) {
    const std::uint64_t m = min_exponent_for_next(std::span(w));
    w.push_back(m + geometric_draw(rng, q));
  }
  return tree_path(tree_path::unchecked_tag{}, std::move(w));
}

sequence path_to_sequence(const tree_path& path, const integer& p) {
  if (!is_prime(p)) throw not_prime(p);
  std::vector<integer> terms;
  terms.reserve(path.depth());
  for (std::uint64_t w : path.weights()) terms.push_back(int_pow(p, w));
  return sequence(std::move(terms));
}

}  // namespace cobweb
