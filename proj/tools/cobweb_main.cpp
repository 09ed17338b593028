#include "cobweb/factorization.hpp"
#include "cobweb/sequence.hpp"
#include "cobweb/sequence_io.hpp"
#include "cobweb/tree.hpp"
#include "cobweb/verify.hpp"
#include "cobweb/version.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

namespace {

using nlohmann::json;

enum class output_format { text, json_doc };

// --format wins, then COBWEB_FORMAT, then text.
output_format resolve_format(const std::string& flag_value) {
  std::string value = flag_value;
  if (value.empty()) {
    if (const char* env = std::getenv("COBWEB_FORMAT")) value = env;
  }
  if (value.empty() || value == "text") return output_format::text;
  if (value == "json") return output_format::json_doc;
  throw cobweb::error("invalid format '" + value + "' (expected text or json)");
}

void emit(const json& doc) { std::cout << doc.dump() << "\n"; }

json input_summary(const std::string& path, const cobweb::sequence& seq) {
  return json{{"length", seq.length()}, {"source", path}};
}

json failure_field(const cobweb::admissibility_report& report) {
  if (!report.first_failure) return nullptr;
  return json{{"n", report.first_failure->first}, {"k", report.first_failure->second}};
}

json witness_field(const cobweb::admissibility_report& report) {
  if (!report.witness) return nullptr;
  return report.witness->str();
}

std::string join_weights(const std::vector<std::uint64_t>& weights) {
  std::string out;
  for (std::size_t i = 0; i < weights.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(weights[i]);
  }
  return out;
}

std::string join_powers(const std::vector<std::uint64_t>& weights, const cobweb::integer& p) {
  std::string out;
  for (std::size_t i = 0; i < weights.size(); ++i) {
    if (i) out += ",";
    out += cobweb::int_pow(p, weights[i]).str();
  }
  return out;
}

std::vector<std::string> power_strings(const std::vector<std::uint64_t>& weights,
                                       const cobweb::integer& p) {
  std::vector<std::string> out;
  out.reserve(weights.size());
  for (std::uint64_t w : weights) out.push_back(cobweb::int_pow(p, w).str());
  return out;
}

cobweb::integer parse_prime_flag(const std::string& text) {
  auto value = cobweb::parse_integer(text);
  if (!value) throw cobweb::error("invalid prime '" + text + "'");
  if (!cobweb::is_prime(*value)) throw cobweb::not_prime(*value);
  return *value;
}

int run_check(const std::string& path, output_format fmt) {
  const cobweb::sequence seq = cobweb::read_sequence_file(path);
  const cobweb::admissibility_report report = cobweb::is_admissible(seq);
  if (fmt == output_format::json_doc) {
    emit(json{{"admissible", report.admissible},
              {"checked_depth", report.checked_depth},
              {"command", "check"},
              {"first_failure", failure_field(report)},
              {"input", input_summary(path, seq)},
              {"version", cobweb::k_version},
              {"witness", witness_field(report)}});
  } else if (report.admissible) {
    std::cout << "admissible\n";
  } else {
    std::cout << "not admissible at (n=" << report.first_failure->first
              << ",k=" << report.first_failure->second << "), value " << report.witness->str()
              << "\n";
  }
  return report.admissible ? 0 : 1;
}

int run_binomial(const std::string& path, std::size_t n, std::size_t k, output_format fmt) {
  const cobweb::sequence seq = cobweb::read_sequence_file(path);
  const cobweb::rational value = cobweb::f_binomial(seq, n, k);
  if (fmt == output_format::json_doc) {
    emit(json{{"command", "binomial"},
              {"input", input_summary(path, seq)},
              {"k", k},
              {"n", n},
              {"value", value.str()},
              {"version", cobweb::k_version}});
  } else {
    std::cout << value.str() << "\n";
  }
  return 0;
}

int run_factor(const std::string& path, output_format fmt) {
  const cobweb::sequence seq = cobweb::read_sequence_file(path);
  const cobweb::primary_decomposition decomp = cobweb::decompose(seq);
  if (fmt == output_format::json_doc) {
    json components = json::object();
    for (const auto& c : decomp.components()) components[c.prime().str()] = c.exponents();
    emit(json{{"command", "factor"},
              {"components", components},
              {"input", input_summary(path, seq)},
              {"version", cobweb::k_version}});
    return 0;
  }
  if (decomp.empty()) {
    std::cout << "(empty decomposition)\n";
    return 0;
  }
  for (const auto& c : decomp.components()) {
    std::cout << c.prime().str() << ": [";
    const auto& exps = c.exponents();
    for (std::size_t i = 0; i < exps.size(); ++i) {
      if (i) std::cout << ",";
      std::cout << exps[i];
    }
    std::cout << "]\n";
  }
  return 0;
}

int run_enumerate(std::size_t depth, std::uint64_t cap, const std::string& prime_text,
                  bool count_only, output_format fmt) {
  std::optional<cobweb::integer> prime;
  if (!prime_text.empty()) prime = parse_prime_flag(prime_text);
  const cobweb::enumeration_config config{depth, cap};

  if (fmt == output_format::json_doc) {
    json doc{{"cap", cap},
             {"command", "enumerate"},
             {"depth", depth},
             {"version", cobweb::k_version}};
    if (count_only) {
      doc["count"] = cobweb::count_paths(config);
    } else {
      json paths = json::array();
      json sequences = json::array();
      std::uint64_t count = 0;
      cobweb::path_enumerator gen(config);
      while (auto p = gen.next()) {
        ++count;
        paths.push_back(p->weights());
        if (prime) sequences.push_back(power_strings(p->weights(), *prime));
      }
      doc["count"] = count;
      doc["paths"] = std::move(paths);
      if (prime) {
        doc["prime"] = prime->str();
        doc["sequences"] = std::move(sequences);
      }
    }
    emit(doc);
    return 0;
  }

  if (count_only) {
    std::cout << cobweb::count_paths(config) << "\n";
    return 0;
  }
  cobweb::path_enumerator gen(config);
  while (auto p = gen.next()) {
    if (prime) {
      std::cout << join_powers(p->weights(), *prime) << "\n";
    } else {
      std::cout << join_weights(p->weights()) << "\n";
    }
  }
  return 0;
}

int run_sample(std::size_t depth, double mean, std::uint64_t seed, const std::string& prime_text,
               output_format fmt) {
  std::optional<cobweb::integer> prime;
  if (!prime_text.empty()) prime = parse_prime_flag(prime_text);
  const cobweb::tree_path path = cobweb::sample_random(depth, mean, seed);

  if (fmt == output_format::json_doc) {
    json doc{{"command", "sample"}, {"depth", depth},           {"mean", mean},
             {"path", path.weights()}, {"seed", seed},          {"version", cobweb::k_version}};
    if (prime) {
      doc["prime"] = prime->str();
      doc["sequence"] = power_strings(path.weights(), *prime);
    }
    emit(doc);
    return 0;
  }
  if (prime) {
    std::cout << join_powers(path.weights(), *prime) << "\n";
  } else {
    std::cout << join_weights(path.weights()) << "\n";
  }
  return 0;
}

int run_verify(const cobweb::verify::options& opts, output_format fmt) {
  const std::vector<cobweb::verify::suite_result> results = cobweb::verify::run_all(opts);
  std::size_t passed = 0;
  for (const auto& r : results) {
    if (r.passed) ++passed;
  }
  const bool all_passed = passed == results.size();

  if (fmt == output_format::json_doc) {
    json suites = json::array();
    for (const auto& r : results) {
      suites.push_back(json{{"cases", r.cases},
                            {"counterexample", r.counterexample},
                            {"name", r.name},
                            {"passed", r.passed}});
    }
    emit(json{{"command", "verify"},
              {"passed", all_passed},
              {"suites", std::move(suites)},
              {"version", cobweb::k_version}});
  } else {
    for (const auto& r : results) {
      if (r.passed) {
        std::cout << "[PASS] " << r.name << " (" << r.cases << " cases)\n";
      } else {
        std::cout << "[FAIL] " << r.name << ": " << r.counterexample << "\n";
      }
    }
    std::cout << passed << "/" << results.size() << " suites passed\n";
  }
  return all_passed ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact tooling for cobweb-admissible integer sequences"};
  app.require_subcommand(1);

  const auto format_values = CLI::IsMember({"text", "json"});

  std::string check_file, check_format;
  auto* check = app.add_subcommand("check", "Decide admissibility of a sequence file");
  check->add_option("file", check_file, "sequence file, one term per line")->required();
  check->add_option("--format", check_format, "output format")->check(format_values);

  std::string binom_file, binom_format;
  std::size_t binom_n = 0, binom_k = 0;
  auto* binom = app.add_subcommand("binomial", "Evaluate one generalized binomial coefficient");
  binom->add_option("file", binom_file, "sequence file")->required();
  binom->add_option("-n", binom_n, "row index")->required();
  binom->add_option("-k", binom_k, "column index")->required();
  binom->add_option("--format", binom_format, "output format")->check(format_values);

  std::string factor_file, factor_format;
  auto* factor = app.add_subcommand("factor", "Factor a sequence into single-prime components");
  factor->add_option("file", factor_file, "sequence file")->required();
  factor->add_option("--format", factor_format, "output format")->check(format_values);

  std::size_t enum_depth = 0;
  std::uint64_t enum_cap = 0;
  std::string enum_prime, enum_format;
  bool enum_count_only = false;
  auto* enumerate =
      app.add_subcommand("enumerate", "List every admissible exponent path under a cap");
  enumerate->add_option("--depth", enum_depth, "path length")->required();
  enumerate->add_option("--cap", enum_cap, "largest allowed exponent")->required();
  enumerate->add_option("--prime", enum_prime, "render paths as powers of this prime");
  enumerate->add_flag("--count-only", enum_count_only, "print only the path count");
  enumerate->add_option("--format", enum_format, "output format")->check(format_values);

  std::size_t sample_depth = 0;
  double sample_mean = 1.0;
  std::uint64_t sample_seed = 0;
  std::string sample_prime, sample_format;
  auto* sample = app.add_subcommand("sample", "Draw one random admissible exponent path");
  sample->add_option("--depth", sample_depth, "path length")->required();
  sample->add_option("--mean", sample_mean, "mean offset above the admissible minimum");
  sample->add_option("--seed", sample_seed, "random seed");
  sample->add_option("--prime", sample_prime, "render the path as powers of this prime");
  sample->add_option("--format", sample_format, "output format")->check(format_values);

  cobweb::verify::options verify_opts;
  std::string verify_format;
  auto* verify = app.add_subcommand("verify", "Run the cross-check suites");
  verify->add_option("--max-depth", verify_opts.max_depth, "bound for exhaustive suites");
  verify->add_option("--max-cap", verify_opts.max_cap, "exponent bound for exhaustive suites");
  verify->add_option("--trials", verify_opts.trials, "cases per randomized suite");
  verify->add_option("--seed", verify_opts.seed, "random seed");
  verify->add_option("--format", verify_format, "output format")->check(format_values);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (*check) return run_check(check_file, resolve_format(check_format));
    if (*binom)
      return run_binomial(binom_file, binom_n, binom_k, resolve_format(binom_format));
    if (*factor) return run_factor(factor_file, resolve_format(factor_format));
    if (*enumerate)
      return run_enumerate(enum_depth, enum_cap, enum_prime, enum_count_only,
                           resolve_format(enum_format));
    if (*sample)
      return run_sample(sample_depth, sample_mean, sample_seed, sample_prime,
                        resolve_format(sample_format));
    if (*verify) return run_verify(verify_opts, resolve_format(verify_format));
  } catch (const cobweb::error& e) {
    std::cerr << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
