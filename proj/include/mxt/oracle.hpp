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

// Brute-force references. These share no code with the builders and are
// allowed exponential time within their size caps.

#ifndef MXT_ORACLE_HPP_
#define MXT_ORACLE_HPP_

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <limits>
#include <numeric>
#include <span>
#include <stdexcept>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "mxt/real_minimax.hpp"

namespace mxt {

inline constexpr std::size_t kOracleHardMaxLeaves = 12;

namespace detail {

using DepthProfile = std::vector<std::int64_t>;

// Every nondecreasing depth sequence of a strictly binary tree with n leaves,
// i.e. every sequence with sum 2^-d == 1. Sums are kept as integers in units
// of 2^-(n-1), the smallest possible leaf mass.
inline std::vector<DepthProfile> enumerate_full_profiles(std::size_t n) {
  std::vector<DepthProfile> out;
  if (n == 1) {
    out.push_back({0});
    return out;
  }
  const std::int64_t max_depth = static_cast<std::int64_t>(n) - 1;
  DepthProfile current;
  std::function<void(std::int64_t, std::uint64_t)> extend =
      [&](std::int64_t min_depth, std::uint64_t remaining) {
        const std::size_t left = n - current.size();
        if (left == 0) {
          if (remaining == 0) out.push_back(current);
          return;
        }
        for (std::int64_t d = std::max<std::int64_t>(min_depth, 1);
             d <= max_depth; ++d) {
          const std::uint64_t unit = std::uint64_t{1} << (max_depth - d);
          if (remaining > unit * left) break;
          if (unit > remaining) continue;
          current.push_back(d);
          extend(d, remaining - unit);
          current.pop_back();
        }
      };
  extend(1, std::uint64_t{1} << max_depth);
  return out;
}

inline const std::vector<DepthProfile>& full_profiles(std::size_t n) {
  static const std::vector<std::vector<DepthProfile>> table = [] {
    std::vector<std::vector<DepthProfile>> t(kOracleHardMaxLeaves + 1);
    for (std::size_t k = 1; k <= kOracleHardMaxLeaves; ++k) {
      t[k] = enumerate_full_profiles(k);
    }
    return t;
  }();
  return table[n];
}

}  // namespace detail

// Exact minimum of max(w_i + depth_i) over all strictly binary trees on n
// leaves. Only depth profiles are enumerated: in some optimal tree the
// heavier of any two leaves is never the deeper one, so sorted weights pair
// with sorted depths.
template <class Weight>
Weight oracle_minimax_cost(std::span<const Weight> weights,
                           std::size_t max_n = 10) {
  const std::size_t n = weights.size();
  if (n == 0) throw std::invalid_argument("weight list must not be empty");
  if (n > std::min(max_n, kOracleHardMaxLeaves)) {
    throw std::out_of_range("too many weights for the exhaustive oracle");
  }
  std::vector<Weight> heavy_first(weights.begin(), weights.end());
  std::sort(heavy_first.begin(), heavy_first.end(), std::greater<Weight>{});
  bool have = false;
  Weight best{};
  for (const auto& profile : detail::full_profiles(n)) {
    Weight worst = heavy_first[0] + static_cast<Weight>(profile[0]);
    for (std::size_t i = 1; i < n; ++i) {
      worst = std::max(worst, heavy_first[i] + static_cast<Weight>(profile[i]));
    }
    if (!have || worst < best) {
      best = worst;
      have = true;
    }
  }
  return best;
}

// Largest x in X + {0} whose rounded depths satisfy the Kraft inequality,
// found by evaluating every candidate from scratch with big integers over the
// common denominator 2^D.
inline ThresholdResult oracle_threshold(const FractionalDecomposition& d) {
  using boost::multiprecision::cpp_int;
  const std::size_t n = d.size();
  ThresholdResult out;
  if (n <= 1) {
    out.lengths.assign(d.floor_part.begin(), d.floor_part.end());
    return out;
  }
  std::int64_t deepest = 0;
  for (std::int64_t c : d.ceil_part) deepest = std::max(deepest, c);

  std::vector<double> candidates(d.frac.begin(), d.frac.end());
  candidates.push_back(0.0);
  std::sort(candidates.begin(), candidates.end());
  candidates.erase(std::unique(candidates.begin(), candidates.end()),
                   candidates.end());

  const cpp_int one = cpp_int(1) << deepest;
  std::vector<std::uint64_t> count(static_cast<std::size_t>(deepest) + 1);
  for (double x : candidates) {
    std::fill(count.begin(), count.end(), 0);
    for (std::size_t j = 0; j < n; ++j) {
      const std::int64_t e = d.frac[j] <= x ? d.floor_part[j] : d.ceil_part[j];
      ++count[static_cast<std::size_t>(e)];
    }
    cpp_int sum = 0;
    for (std::size_t e = 0; e < count.size(); ++e) {
      if (count[e] != 0) sum += cpp_int(count[e]) << (deepest - static_cast<std::int64_t>(e));
    }
    if (sum <= one) out.x_star = std::max(out.x_star, x);
  }
  out.lengths.resize(n);
  for (std::size_t j = 0; j < n; ++j) {
    out.lengths[j] = d.frac[j] <= out.x_star ? d.floor_part[j] : d.ceil_part[j];
  }
  return out;
}

// Code lengths minimizing max(log2 q_i + length_i) over every Kraft-valid
// assignment with lengths in [1, max_len]. Longer lengths go to smaller
// probabilities.
inline std::vector<std::int64_t> oracle_optimal_lengths(
    std::span<const double> q, std::int64_t max_len) {
  const std::size_t n = q.size();
  if (n == 0) throw std::invalid_argument("distribution must not be empty");
  if (n > 8) throw std::out_of_range("too many symbols for the oracle");
  if (n == 1) return {0};
  if (max_len < 1 || max_len > 32) {
    throw std::out_of_range("maximum length outside [1, 32]");
  }
  std::vector<std::size_t> by_prob(n);
  std::iota(by_prob.begin(), by_prob.end(), std::size_t{0});
  std::stable_sort(by_prob.begin(), by_prob.end(),
                   [&](std::size_t a, std::size_t b) { return q[a] > q[b]; });

  std::vector<std::int64_t> best;
  double best_cost = std::numeric_limits<double>::infinity();
  std::vector<std::int64_t> lengths;
  std::function<void(std::int64_t, std::uint64_t)> extend =
      [&](std::int64_t min_len, std::uint64_t used) {
        if (lengths.size() == n) {
          double worst = -std::numeric_limits<double>::infinity();
          for (std::size_t r = 0; r < n; ++r) {
            worst = std::max(worst, std::log2(q[by_prob[r]]) +
                                        static_cast<double>(lengths[r]));
          }
          if (worst < best_cost) {
            best_cost = worst;
            best.assign(n, 0);
            for (std::size_t r = 0; r < n; ++r) best[by_prob[r]] = lengths[r];
          }
          return;
        }
        const std::uint64_t full = std::uint64_t{1} << max_len;
        for (std::int64_t len = min_len; len <= max_len; ++len) {
          const std::uint64_t unit = std::uint64_t{1} << (max_len - len);
          if (used + unit > full) continue;
          lengths.push_back(len);
          extend(len, used + unit);
          lengths.pop_back();
        }
      };
  extend(1, 0);
  return best;
}

}  // namespace mxt

#endif  // MXT_ORACLE_HPP_
