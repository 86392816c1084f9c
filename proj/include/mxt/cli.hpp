// Copyright 2026 The mxt Authors. All Rights Reserved.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Subcommands of the mxt tool. Each takes its options plus output streams
// and returns the process exit code, so tests can drive them directly.

#ifndef MXT_CLI_HPP_
#define MXT_CLI_HPP_

#include <algorithm>
#include <charconv>
#include <chrono>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <limits>
#include <random>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#if defined(__GLIBC__)
#include <malloc.h>
#endif

#include "json.hpp"
#include "mxt/coding.hpp"
#include "mxt/core.hpp"
#include "mxt/integer_minimax.hpp"
#include "mxt/io.hpp"
#include "mxt/oracle.hpp"
#include "mxt/real_minimax.hpp"

namespace mxt::cli {

enum ExitCode : int {
  kOk = 0,
  kMismatch = 1,
  kParseError = 2,
  kBadFlags = 3,
  kZeroProbability = 4,
};

inline constexpr std::uint64_t kDefaultSeed = 42;

// MXT_SEED, when set to an unsigned integer, replaces the built-in default.
inline std::uint64_t default_seed() {
  if (const char* env = std::getenv("MXT_SEED")) {
    std::uint64_t v = 0;
    const std::string_view s(env);
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec == std::errc() && ptr == s.data() + s.size()) return v;
  }
  return kDefaultSeed;
}

namespace detail {

template <class Parse>
auto read_input(const std::string& path, Parse parse) {
  if (path == "-") return parse(std::cin);
  std::ifstream in(path);
  if (!in) throw io::ParseError(0, "cannot open '" + path + "'");
  return parse(in);
}

}  // namespace detail

struct TreeOptions {
  std::string input;
  // auto | int | real | heap
  std::string mode = "auto";
  // cost | json | dot
  std::string format = "cost";
};

inline int run_tree(const TreeOptions& opt, std::ostream& out,
                    std::ostream& err) {
  if (opt.mode != "auto" && opt.mode != "int" && opt.mode != "real" &&
      opt.mode != "heap") {
    err << "unknown mode '" << opt.mode << "'\n";
    return kBadFlags;
  }
  if (opt.format != "cost" && opt.format != "json" && opt.format != "dot") {
    err << "unknown format '" << opt.format << "'\n";
    return kBadFlags;
  }
  io::WeightFile file;
  try {
    file = detail::read_input(opt.input, io::parse_weight_file);
  } catch (const io::ParseError& e) {
    err << opt.input << ": " << e.what() << "\n";
    return kParseError;
  }
  if (opt.mode == "int" && !file.all_integer) {
    err << "--mode int needs integer weights\n";
    return kBadFlags;
  }

  auto emit = [&](const auto& tree) {
    if (opt.format == "cost") {
      out << io::format_cost(static_cast<double>(minimax_cost(tree))) << "\n";
    } else if (opt.format == "json") {
      out << io::tree_to_json(tree).dump() << "\n";
    } else {
      out << io::tree_to_dot(tree);
    }
  };
  try {
    const bool integer =
        file.all_integer && (opt.mode == "int" || opt.mode == "auto" ||
                             opt.mode == "heap");
    if (integer) {
      const IntWeightMultiset w(file.integers);
      if (opt.mode == "heap") {
        emit(build_minimax_heap(w));
      } else {
        emit(build_minimax_int(w));
      }
    } else {
      const RealWeightMultiset w(file.reals);
      if (opt.mode == "heap") {
        emit(build_minimax_heap(w));
      } else {
        emit(build_minimax_real(w));
      }
    }
  } catch (const std::overflow_error& e) {
    err << e.what() << "\n";
    return kParseError;
  }
  return kOk;
}

struct CodeOptions {
  std::string input;
  // minimax | shannon | huffman
  std::string algo = "minimax";
  // Distribution file for P; an optional "against:" prefix is accepted.
  std::string report;
};

namespace detail {

inline PrefixCode build_code(const std::string& algo, const Distribution& q) {
  if (algo == "minimax") return minimax_code(q);
  if (algo == "shannon") return shannon_code(q);
  return huffman_code(q);
}

inline nlohmann::json report_json(const RedundancyReport& r) {
  nlohmann::json j;
  j["entropy"] = r.entropy;
  if (r.relative_entropy_infinite) {
    j["relative_entropy"] = nullptr;
    j["avg_excess"] = nullptr;
  } else {
    j["relative_entropy"] = r.relative_entropy;
    j["avg_excess"] = r.avg_excess;
  }
  j["relative_entropy_infinite"] = r.relative_entropy_infinite;
  j["avg_length"] = r.avg_length;
  j["max_pointwise"] = r.max_pointwise;
  return j;
}

}  // namespace detail

inline int run_code(const CodeOptions& opt, std::ostream& out,
                    std::ostream& err) {
  if (opt.algo != "minimax" && opt.algo != "shannon" && opt.algo != "huffman") {
    err << "unknown algorithm '" << opt.algo << "'\n";
    return kBadFlags;
  }
  io::DistFile qfile;
  io::DistFile pfile;
  std::string report_path = opt.report;
  if (report_path.rfind("against:", 0) == 0) report_path.erase(0, 8);
  try {
    qfile = detail::read_input(opt.input, io::parse_dist_file);
    if (!report_path.empty()) {
      pfile = detail::read_input(report_path, io::parse_dist_file);
    }
  } catch (const io::ParseError& e) {
    err << e.what() << "\n";
    return kParseError;
  }
  const Distribution q = Distribution::from_counts(qfile.values);

  PrefixCode code;
  try {
    code = detail::build_code(opt.algo, q);
  } catch (const ZeroProbabilityError& e) {
    err << "symbol '" << qfile.symbols[e.symbol()]
        << "' has zero probability\n";
    return kZeroProbability;
  } catch (const std::invalid_argument& e) {
    err << e.what() << "\n";
    return kBadFlags;
  }
  for (std::size_t i = 0; i < code.size(); ++i) {
    out << qfile.symbols[i] << ' ' << code.lengths[i];
    if (!code.codewords[i].empty()) out << ' ' << code.codewords[i];
    out << '\n';
  }

  if (!report_path.empty()) {
    // Align P with Q's symbol order.
    std::vector<double> pvalues(qfile.symbols.size(), 0.0);
    if (pfile.symbols.size() != qfile.symbols.size()) {
      err << "report distribution has a different symbol set\n";
      return kParseError;
    }
    for (std::size_t i = 0; i < pfile.symbols.size(); ++i) {
      const auto it = std::find(qfile.symbols.begin(), qfile.symbols.end(),
                                pfile.symbols[i]);
      if (it == qfile.symbols.end()) {
        err << "symbol '" << pfile.symbols[i]
            << "' is missing from the code distribution\n";
        return kParseError;
      }
      pvalues[static_cast<std::size_t>(it - qfile.symbols.begin())] =
          pfile.values[i];
    }
    const Distribution p = Distribution::from_counts(std::move(pvalues));
    out << detail::report_json(redundancy_report(p, q, code)).dump() << "\n";
  }
  return kOk;
}

namespace detail {

inline nlohmann::json plan_node_json(const GroupTestPlan& plan, NodeId id,
                                     const std::vector<std::string>& labels) {
  const auto& node = plan.nodes[id];
  auto names = [&](const std::vector<std::size_t>& elems) {
    nlohmann::json a = nlohmann::json::array();
    for (std::size_t e : elems) a.push_back(labels[e]);
    return a;
  };
  nlohmann::json j;
  j["elements"] = names(node.elements);
  if (!node.is_leaf()) {
    j["query"] = names(plan.nodes[node.yes].elements);
    j["yes"] = plan_node_json(plan, node.yes, labels);
    j["no"] = plan_node_json(plan, node.no, labels);
  }
  return j;
}

}  // namespace detail

inline int run_grouptest(const std::string& input, std::ostream& out,
                         std::ostream& err) {
  io::DistFile file;
  try {
    file = detail::read_input(input, io::parse_dist_file);
  } catch (const io::ParseError& e) {
    err << e.what() << "\n";
    return kParseError;
  }
  const Distribution q = Distribution::from_counts(file.values);
  GroupTestPlan plan;
  try {
    plan = group_test_plan(q);
  } catch (const ZeroProbabilityError& e) {
    err << "symbol '" << file.symbols[e.symbol()] << "' has zero probability\n";
    return kZeroProbability;
  }
  std::size_t queries = 0;
  for (const auto& node : plan.nodes) queries += !node.is_leaf();
  nlohmann::json j;
  j["queries"] = queries;
  j["plan"] = detail::plan_node_json(plan, plan.root(), file.symbols);
  out << j.dump() << "\n";
  return kOk;
}

struct VerifyOptions {
  std::size_t n_max = 6;
  std::size_t trials = 1000;
  std::uint64_t seed = kDefaultSeed;
};

// Builders under test; replaced by tests to check that faults are caught.
struct VerifyHooks {
  std::function<std::int64_t(const IntWeightMultiset&)> int_cost =
      [](const IntWeightMultiset& w) { return minimax_cost(build_minimax_int(w)); };
  std::function<double(const RealWeightMultiset&)> real_cost =
      [](const RealWeightMultiset& w) { return minimax_cost(build_minimax_real(w)); };
  std::function<ThresholdResult(const FractionalDecomposition&)> threshold =
      [](const FractionalDecomposition& d) { return select_threshold(d); };
};

inline constexpr double kRealCostTolerance = 1e-9;

namespace detail {

template <class T>
std::string join(const std::vector<T>& v) {
  std::ostringstream os;
  os.precision(17);
  os << '{';
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? ", " : "") << v[i];
  os << '}';
  return os.str();
}

// Calls visit on every nondecreasing sequence of length n over [lo, hi].
template <class Visit>
void for_each_multiset(std::size_t n, std::int64_t lo, std::int64_t hi,
                       Visit&& visit) {
  std::vector<std::int64_t> cur(n, lo);
  for (;;) {
    visit(cur);
    std::size_t i = n;
    while (i > 0 && cur[i - 1] == hi) --i;
    if (i == 0) return;
    const std::int64_t next = cur[i - 1] + 1;
    for (std::size_t k = i - 1; k < n; ++k) cur[k] = next;
  }
}

inline std::vector<double> random_distribution(std::size_t n,
                                               std::mt19937_64& rng) {
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::vector<double> p(n);
  double total = 0.0;
  for (auto& v : p) {
    do v = unit(rng);
    while (v == 0.0);
    total += v;
  }
  for (auto& v : p) v /= total;
  return p;
}

}  // namespace detail

inline int run_verify(const VerifyOptions& opt, std::ostream& out,
                      std::ostream& err, const VerifyHooks& hooks = {}) {
  if (opt.n_max < 1 || opt.n_max > 10) {
    err << "--n-max must lie in [1, 10]\n";
    return kBadFlags;
  }
  std::mt19937_64 rng(opt.seed);
  std::size_t failures = 0;

  std::size_t int_cases = 0;
  for (std::size_t n = 1; n <= opt.n_max; ++n) {
    detail::for_each_multiset(n, -4, 4, [&](const std::vector<std::int64_t>& v) {
      ++int_cases;
      const IntWeightMultiset w(v);
      const auto expect = oracle_minimax_cost<std::int64_t>(v);
      const auto fast = hooks.int_cost(w);
      const auto heap = minimax_cost(build_minimax_heap(w));
      if (fast != expect || heap != expect) {
        if (failures++ < 10) {
          err << "integer mismatch on " << detail::join(v) << ": linear "
              << fast << ", heap " << heap << ", oracle " << expect << "\n";
        }
      }
    });
  }
  out << "integer exhaustive: " << int_cases << " multisets\n";

  std::size_t real_cases = 0;
  std::size_t threshold_cases = 0;
  if (opt.trials > 0) {
    std::uniform_int_distribution<std::size_t> size(1, opt.n_max);
    std::uniform_real_distribution<double> weight(-10.0, 0.0);
    for (std::size_t t = 0; t < opt.trials; ++t) {
      std::vector<double> v(size(rng));
      for (auto& x : v) x = weight(rng);
      ++real_cases;
      const double expect = oracle_minimax_cost<double>(v);
      const double got = hooks.real_cost(RealWeightMultiset(v));
      if (!(std::abs(got - expect) <= kRealCostTolerance)) {
        if (failures++ < 10) {
          err << "real mismatch on " << detail::join(v) << ": linear " << got
              << ", oracle " << expect << "\n";
        }
      }
    }
    out << "real randomized: " << real_cases << " multisets\n";

    std::uniform_int_distribution<std::size_t> dist_size(2, 100);
    for (std::size_t t = 0; t < opt.trials; ++t) {
      const auto p = detail::random_distribution(dist_size(rng), rng);
      std::vector<double> logs(p.size());
      for (std::size_t i = 0; i < p.size(); ++i) logs[i] = std::log2(p[i]);
      const auto dec = decompose(normalize(RealWeightMultiset(logs)));
      ++threshold_cases;
      const auto got = hooks.threshold(dec);
      const auto expect = oracle_threshold(dec);
      if (got.x_star != expect.x_star || got.lengths != expect.lengths) {
        if (failures++ < 10) {
          err << "threshold mismatch on " << detail::join(p) << ": selected "
              << got.x_star << ", oracle " << expect.x_star << "\n";
        }
      }
    }
    out << "threshold agreement: " << threshold_cases << " distributions\n";
  }

  if (failures > 0) {
    out << failures << " mismatches\n";
    return kMismatch;
  }
  out << "all passed\n";
  return kOk;
}

struct BenchRow {
  std::size_t n = 0;
  double median_ns = 0.0;
  double ns_per_elem = 0.0;
  double cost = 0.0;
};

// Accepts comma-separated sizes written as N or 2^K.
inline std::vector<std::size_t> parse_sizes(std::string_view text) {
  std::vector<std::size_t> sizes;
  while (!text.empty()) {
    const auto comma = text.find(',');
    const auto item = io::detail::trim(text.substr(0, comma));
    text = comma == std::string_view::npos ? std::string_view{}
                                           : text.substr(comma + 1);
    std::int64_t value = 0;
    if (const auto caret = item.find('^'); caret != std::string_view::npos) {
      std::int64_t base = 0;
      std::int64_t exp = 0;
      if (!io::detail::parse_int(item.substr(0, caret), base) ||
          !io::detail::parse_int(item.substr(caret + 1), exp) || base < 1 ||
          exp < 0 || exp > 40) {
        throw std::invalid_argument("bad size '" + std::string(item) + "'");
      }
      value = 1;
      for (std::int64_t k = 0; k < exp; ++k) value *= base;
    } else if (!io::detail::parse_int(item, value)) {
      throw std::invalid_argument("bad size '" + std::string(item) + "'");
    }
    if (value < 1) throw std::invalid_argument("sizes must be at least 1");
    sizes.push_back(static_cast<std::size_t>(value));
  }
  if (sizes.empty()) throw std::invalid_argument("no sizes given");
  return sizes;
}

namespace detail {

// glibc serves blocks above 32 MiB with fresh mmap pages on every call but
// recycles smaller ones, so only the largest sizes would pay page faults.
// Serving everything from the recycled heap keeps sizes comparable.
inline void keep_freed_memory() {
#if defined(__GLIBC__)
  mallopt(M_MMAP_MAX, 0);
  mallopt(M_TRIM_THRESHOLD, std::numeric_limits<int>::max());
#endif
}

}  // namespace detail

namespace detail {

// Wall time of one construction on fresh random input of size n.
inline double time_one_build(std::size_t n, const std::string& algo,
                             std::mt19937_64& rng, double& cost) {
  std::chrono::steady_clock::duration elapsed{};
  if (algo == "int") {
    std::uniform_int_distribution<std::int64_t> pick(
        0, static_cast<std::int64_t>(n) - 1);
    std::vector<std::int64_t> v(n);
    for (auto& x : v) x = pick(rng);
    const IntWeightMultiset w(std::move(v));
    const auto start = std::chrono::steady_clock::now();
    const auto tree = build_minimax_int(w);
    elapsed = std::chrono::steady_clock::now() - start;
    cost = static_cast<double>(minimax_cost(tree));
  } else {
    const auto p = random_distribution(n, rng);
    std::vector<double> v(n);
    for (std::size_t i = 0; i < n; ++i) v[i] = std::log2(p[i]);
    const RealWeightMultiset w(std::move(v));
    const auto start = std::chrono::steady_clock::now();
    const auto tree = build_minimax_real(w);
    elapsed = std::chrono::steady_clock::now() - start;
    cost = minimax_cost(tree);
  }
  const auto ns =
      std::chrono::duration_cast<std::chrono::nanoseconds>(elapsed).count();
  return static_cast<double>(std::max<std::int64_t>(1, ns));
}

}  // namespace detail

// Median wall time of construction alone; input generation is untimed. Each
// round builds every size once, so slow drift in machine load reaches all
// sizes alike. An untimed round comes first.
inline std::vector<BenchRow> bench(const std::vector<std::size_t>& sizes,
                                   const std::string& algo, std::size_t reps,
                                   std::uint64_t seed) {
  if (algo != "int" && algo != "real") {
    throw std::invalid_argument("unknown algorithm '" + algo + "'");
  }
  detail::keep_freed_memory();
  std::mt19937_64 rng(seed);
  std::vector<std::vector<double>> times(sizes.size());
  std::vector<double> costs(sizes.size(), 0.0);
  for (std::size_t r = 0; r <= std::max<std::size_t>(reps, 1); ++r) {
    for (std::size_t s = 0; s < sizes.size(); ++s) {
      const double t = detail::time_one_build(sizes[s], algo, rng, costs[s]);
      if (r > 0) times[s].push_back(t);
    }
  }
  std::vector<BenchRow> rows;
  for (std::size_t s = 0; s < sizes.size(); ++s) {
    auto& t = times[s];
    std::sort(t.begin(), t.end());
    const double median = t[t.size() / 2];
    rows.push_back({sizes[s], median, median / static_cast<double>(sizes[s]),
                    costs[s]});
  }
  return rows;
}

struct BenchOptions {
  std::string sizes = "2^16,2^20";
  std::string algo = "real";
  std::size_t reps = 5;
  std::uint64_t seed = kDefaultSeed;
};

inline int run_bench(const BenchOptions& opt, std::ostream& out,
                     std::ostream& err) {
  std::vector<BenchRow> rows;
  try {
    rows = bench(parse_sizes(opt.sizes), opt.algo, opt.reps, opt.seed);
  } catch (const std::invalid_argument& e) {
    err << e.what() << "\n";
    return kBadFlags;
  }
  out << "n time_ns ns_per_elem\n";
  for (const auto& row : rows) {
    char buf[128];
    std::snprintf(buf, sizeof buf, "%zu %.0f %.3f\n", row.n, row.median_ns,
                  row.ns_per_elem);
    out << buf;
  }
  return kOk;
}

}  // namespace mxt::cli

#endif  // MXT_CLI_HPP_
