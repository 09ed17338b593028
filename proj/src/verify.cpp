#include "cobweb/verify.hpp"

#include "cobweb/factorization.hpp"
#include "cobweb/sequence.hpp"
#include "cobweb/tree.hpp"

#include <algorithm>
#include <random>
#include <sstream>

namespace cobweb::verify {
namespace {

std::string join(const std::vector<std::uint64_t>& values) {
  std::ostringstream out;
  out << "[";
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out << ",";
    out << values[i];
  }
  out << "]";
  return out.str();
}

std::string describe(const admissibility_report& r) {
  if (r.admissible) return "admissible";
  std::ostringstream out;
  out << "failure at (n=" << r.first_failure->first << ",k=" << r.first_failure->second
      << ") value " << r.witness->str();
  return out.str();
}

// Advances a tuple with entries in 0..cap to its lexicographic successor.
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

}  // namespace

suite_result check_criterion_equivalence(const options& opts) {
  suite_result result{"criterion-equivalence", 0, true, ""};
  for (std::size_t len = 0; len <= opts.max_depth; ++len) {
    std::vector<std::uint64_t> tuple(len, 0);
    do {
      for (const int p : {2, 3}) {
        exponent_sequence exps(p, tuple);
        const admissibility_report by_sums = is_admissible(exps);
        const admissibility_report direct = is_admissible(exps.to_sequence());
        ++result.cases;
        if (by_sums != direct) {
          result.passed = false;
          result.counterexample = "p=" + std::to_string(p) + " exponents=" + join(tuple) +
                                  ": criterion says " + describe(by_sums) +
                                  ", direct scan says " + describe(direct);
          return result;
        }
      }
    } while (next_tuple(tuple, opts.max_cap));
  }
  return result;
}

suite_result check_enumeration_completeness(const options& opts) {
  suite_result result{"enumeration-completeness", 0, true, ""};
  for (std::size_t depth = 0; depth <= opts.max_depth; ++depth) {
    for (std::uint64_t cap = 0; cap <= opts.max_cap; ++cap) {
      // Brute force: filter every capped tuple through the direct scan.
      std::vector<std::vector<std::uint64_t>> expected;
      std::vector<std::uint64_t> tuple(depth, 0);
      do {
        ++result.cases;
        if (is_admissible(exponent_sequence(2, tuple).to_sequence()).admissible) {
          expected.push_back(tuple);
        }
      } while (next_tuple(tuple, cap));

      std::vector<std::vector<std::uint64_t>> got;
      for (const tree_path& p : enumerate({depth, cap})) got.push_back(p.weights());

      if (got != expected) {
        result.passed = false;
        std::ostringstream out;
        out << "depth=" << depth << " cap=" << cap << ": enumerated " << got.size()
            << " paths, brute force found " << expected.size();
        for (const auto& t : expected) {
          if (std::find(got.begin(), got.end(), t) == got.end()) {
            out << "; missing " << join(t);
            break;
          }
        }
        for (const auto& t : got) {
          if (std::find(expected.begin(), expected.end(), t) == expected.end()) {
            out << "; spurious " << join(t);
            break;
          }
        }
        result.counterexample = out.str();
        return result;
      }
    }
  }
  return result;
}

suite_result check_roundtrip(const options& opts) {
  suite_result result{"decompose-roundtrip", 0, true, ""};
  std::mt19937_64 rng(opts.seed);
  for (std::uint64_t trial = 0; trial < opts.trials; ++trial) {
    const std::size_t depth = static_cast<std::size_t>(rng() % 11);
    std::vector<exponent_sequence> parts;
    sequence product(std::vector<integer>(depth, integer(1)));
    for (const int p : {2, 3, 5}) {
      const tree_path path = sample_random(depth, 0.5, rng());
      parts.emplace_back(p, path.weights());
      product = pointwise_product(product, path_to_sequence(path, p));
    }
    const primary_decomposition built(depth, std::move(parts));
    ++result.cases;

    auto fail = [&](const std::string& what) {
      result.passed = false;
      result.counterexample = "trial " + std::to_string(trial) + ": " + what;
    };

    if (reconstruct(decompose(product)) != product) {
      fail("reconstruct(decompose(s)) differs from s");
      return result;
    }
    if (decompose(reconstruct(built)) != built) {
      fail("decompose(reconstruct(d)) differs from canonical d");
      return result;
    }
    if (!is_admissible(product).admissible) {
      fail("product of admissible single-prime parts is not admissible");
      return result;
    }
    const primary_decomposition decomposed = decompose(product);
    for (const auto& component : decomposed.components()) {
      if (!is_admissible(component).admissible) {
        fail("decomposed component for prime " + component.prime().str() +
             " fails the exponent-sum criterion");
        return result;
      }
    }
  }
  return result;
}

suite_result check_successor_exactness(const options& opts) {
  suite_result result{"successor-exactness", 0, true, ""};
  std::mt19937_64 rng(opts.seed);
  for (std::uint64_t trial = 0; trial < opts.trials; ++trial) {
    const std::size_t depth = static_cast<std::size_t>(rng() % 13);
    const tree_path path = sample_random(depth, 1.0, rng());
    const std::uint64_t m = min_successor_exponent(path);
    ++result.cases;

    auto fail = [&](const std::string& what) {
      result.passed = false;
      result.counterexample =
          "path " + join(path.weights()) + " (m=" + std::to_string(m) + "): " + what;
    };

    try {
      extend(path, m);
    } catch (const below_minimum&) {
      fail("extend at the minimum was rejected");
      return result;
    }
    if (m >= 1) {
      bool rejected = false;
      try {
        extend(path, m - 1);
      } catch (const below_minimum&) {
        rejected = true;
      }
      if (!rejected) {
        fail("extend below the minimum was accepted");
        return result;
      }
    }
    for (std::uint64_t j = 1; j <= 10; ++j) {
      try {
        extend(path, m + j);
      } catch (const below_minimum&) {
        fail("extend at offset +" + std::to_string(j) + " was rejected");
        return result;
      }
    }
  }
  return result;
}

suite_result check_multiplicativity(const options& opts) {
  suite_result result{"multiplicativity", 0, true, ""};
  std::mt19937_64 rng(opts.seed);
  for (std::uint64_t trial = 0; trial < opts.trials; ++trial) {
    const std::size_t len = static_cast<std::size_t>(rng() % 11);
    std::vector<integer> f, g;
    for (std::size_t i = 0; i < len; ++i) {
      f.emplace_back(1 + rng() % 30);
      g.emplace_back(1 + rng() % 30);
    }
    const sequence lhs(std::move(f));
    const sequence rhs(std::move(g));
    const sequence product = pointwise_product(lhs, rhs);
    for (std::size_t n = 0; n <= len; ++n) {
      for (std::size_t k = 0; k <= n; ++k) {
        ++result.cases;
        if (f_binomial(product, n, k) != f_binomial(lhs, n, k) * f_binomial(rhs, n, k)) {
          result.passed = false;
          std::ostringstream out;
          out << "trial " << trial << ": C(" << n << "," << k << ") over the product is "
              << f_binomial(product, n, k).str() << ", factors give "
              << (f_binomial(lhs, n, k) * f_binomial(rhs, n, k)).str();
          result.counterexample = out.str();
          return result;
        }
      }
    }
  }
  return result;
}

std::vector<suite_result> run_all(const options& opts) {
  return {
      check_criterion_equivalence(opts), check_enumeration_completeness(opts),
      check_roundtrip(opts),             check_successor_exactness(opts),
      check_multiplicativity(opts),
  };
}

}  // namespace cobweb::verify
