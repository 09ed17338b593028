#include "cobweb/tree.hpp"

#include "cobweb/errors.hpp"
#include "cobweb/factorization.hpp"

#include <doctest.h>

#include <algorithm>
#include <random>
#include <vector>

using cobweb::enumeration_config;
using cobweb::exponent_sequence;
using cobweb::integer;
using cobweb::sequence;
using cobweb::tree_path;

namespace {

bool next_tuple(std::vector<std::uint64_t>& t, std::uint64_t cap) {
  for (std::size_t i = t.size(); i-- > 0;) {
    if (t[i] < cap) {
      ++t[i];
      std::fill(t.begin() + static_cast<std::ptrdiff_t>(i) + 1, t.end(), 0);
      return true;
    }
  }
  return false;
}

std::vector<std::vector<std::uint64_t>> enumerated_weights(const enumeration_config& config) {
  std::vector<std::vector<std::uint64_t>> out;
  for (const tree_path& p : cobweb::enumerate(config)) out.push_back(p.weights());
  return out;
}

}  // namespace

TEST_CASE("minimal successor weights") {
  CHECK(cobweb::min_successor_exponent(tree_path()) == 0);
  CHECK(cobweb::min_successor_exponent(tree_path({1})) == 1);
  CHECK(cobweb::min_successor_exponent(tree_path({1, 1, 2})) == 1);
  CHECK(cobweb::min_successor_exponent(tree_path({0, 3, 5})) == 0);
  CHECK(cobweb::successors(tree_path({1})).min_exponent == 1);
  CHECK(cobweb::successors(tree_path({1})).contains(1));
  CHECK_FALSE(cobweb::successors(tree_path({1})).contains(0));
}

TEST_CASE("extension accepts exactly the weights at or above the minimum") {
  try {
    cobweb::extend(tree_path({1, 1}), 0);
    FAIL("expected below_minimum");
  } catch (const cobweb::below_minimum& e) {
    CHECK(e.minimum() == 1);
  }
  CHECK(cobweb::extend(tree_path({1, 1}), 1) == tree_path({1, 1, 1}));
  CHECK(cobweb::extend(tree_path(), 7) == tree_path({7}));
}

TEST_CASE("path construction validates every prefix") {
  CHECK_THROWS_AS(tree_path({1, 0}), cobweb::below_minimum);
  CHECK_THROWS_AS(tree_path({0, 2, 1, 0}), cobweb::below_minimum);
  CHECK(tree_path({0, 1, 2, 0}).depth() == 4);  // last two sum past the first two
  CHECK(tree_path({0, 1, 2, 1}).depth() == 4);
  CHECK(tree_path({5, 5, 5, 5}).depth() == 4);
}

TEST_CASE("enumerate matches the worked examples") {
  CHECK(enumerated_weights({2, 1}) ==
        std::vector<std::vector<std::uint64_t>>{{0, 0}, {0, 1}, {1, 1}});
  CHECK(enumerated_weights({3, 1}) ==
        std::vector<std::vector<std::uint64_t>>{
            {0, 0, 0}, {0, 0, 1}, {0, 1, 0}, {0, 1, 1}, {1, 1, 1}});

  for (std::uint64_t cap = 0; cap <= 4; ++cap) {
    const auto paths = enumerated_weights({1, cap});
    REQUIRE(paths.size() == cap + 1);
    for (std::uint64_t e = 0; e <= cap; ++e) CHECK(paths[e] == std::vector<std::uint64_t>{e});
  }

  const auto empty_depth = enumerated_weights({0, 3});
  REQUIRE(empty_depth.size() == 1);
  CHECK(empty_depth[0].empty());
}

TEST_CASE("count_paths agrees with enumeration") {
  CHECK(cobweb::count_paths({2, 1}) == 3);
  CHECK(cobweb::count_paths({3, 1}) == 5);
  CHECK(cobweb::count_paths({0, 7}) == 1);
  for (std::size_t depth = 0; depth <= 5; ++depth) {
    for (std::uint64_t cap = 0; cap <= 3; ++cap) {
      CHECK(cobweb::count_paths({depth, cap}) == enumerated_weights({depth, cap}).size());
    }
  }
}

TEST_CASE("enumeration equals the brute-force filter") {
  for (std::size_t depth = 0; depth <= 5; ++depth) {
    for (std::uint64_t cap = 0; cap <= 2; ++cap) {
      std::vector<std::vector<std::uint64_t>> expected;
      std::vector<std::uint64_t> tuple(depth, 0);
      do {
        if (cobweb::is_admissible(exponent_sequence(2, tuple).to_sequence()).admissible) {
          expected.push_back(tuple);
        }
      } while (next_tuple(tuple, cap));
      CHECK(enumerated_weights({depth, cap}) == expected);
    }
  }
}

TEST_CASE("enumeration order is lexicographic and reproducible") {
  const auto a = enumerated_weights({5, 2});
  const auto b = enumerated_weights({5, 2});
  CHECK(a == b);
  CHECK(std::is_sorted(a.begin(), a.end()));
  CHECK(std::adjacent_find(a.begin(), a.end()) == a.end());  // no duplicates
}

TEST_CASE("the successor minimum is sharp on sampled paths") {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t depth = rng() % 11;
    const tree_path path = cobweb::sample_random(depth, 1.0, rng());
    const std::uint64_t m = cobweb::min_successor_exponent(path);
    CHECK_NOTHROW(cobweb::extend(path, m));
    if (m >= 1) CHECK_THROWS_AS(cobweb::extend(path, m - 1), cobweb::below_minimum);
    for (std::uint64_t j = 1; j <= 10; ++j) CHECK_NOTHROW(cobweb::extend(path, m + j));
  }
}

TEST_CASE("the successor minimum matches the least weight passing the criterion") {
  std::mt19937_64 rng(100);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t depth = rng() % 8;
    const tree_path path = cobweb::sample_random(depth, 0.8, rng());
    const std::uint64_t m = cobweb::min_successor_exponent(path);
    for (std::uint64_t e = 0; e <= m + 3; ++e) {
      std::vector<std::uint64_t> weights = path.weights();
      weights.push_back(e);
      const bool valid = cobweb::is_admissible(exponent_sequence(2, weights)).admissible;
      CHECK(valid == (e >= m));
    }
  }
}

TEST_CASE("sampling is deterministic per seed and always valid") {
  CHECK(cobweb::sample_random(0, 1.0, 5).depth() == 0);
  CHECK(cobweb::sample_random(9, 2.0, 123) == cobweb::sample_random(9, 2.0, 123));

  std::mt19937_64 rng(101);
  for (int trial = 0; trial < 50; ++trial) {
    const tree_path path = cobweb::sample_random(rng() % 13, 0.7, rng());
    CHECK(cobweb::is_admissible(exponent_sequence(2, path.weights())).admissible);
    CHECK(cobweb::is_admissible(cobweb::path_to_sequence(path, 3)).admissible);
  }

  CHECK_THROWS_AS(cobweb::sample_random(3, 0.0, 1), cobweb::error);
  CHECK_THROWS_AS(cobweb::sample_random(3, -1.5, 1), cobweb::error);
}

TEST_CASE("rendering paths over a prime") {
  CHECK(cobweb::path_to_sequence(tree_path({0, 1, 2}), 3) == sequence({1, 3, 9}));
  CHECK(cobweb::path_to_sequence(tree_path({0, 0}), 2) == sequence({1, 1}));
  const sequence rendered = cobweb::path_to_sequence(tree_path({1, 1, 2}), 2);
  CHECK(rendered == sequence({2, 2, 4}));
  CHECK(cobweb::is_admissible(rendered).admissible);
  CHECK_THROWS_AS(cobweb::path_to_sequence(tree_path({1}), 4), cobweb::not_prime);
}

TEST_CASE("lazy enumeration yields the same stream as the materialized form") {
  cobweb::path_enumerator gen({4, 2});
  std::vector<std::vector<std::uint64_t>> streamed;
  while (auto p = gen.next()) streamed.push_back(p->weights());
  CHECK(streamed == enumerated_weights({4, 2}));
  CHECK_FALSE(gen.next().has_value());  // stays exhausted
}
