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

#ifndef MXT_TESTS_TEST_SUPPORT_HPP_
#define MXT_TESTS_TEST_SUPPORT_HPP_

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <map>
#include <random>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "mxt/core.hpp"

namespace mxt::testing {

using Rational = boost::multiprecision::cpp_rational;

inline Rational pow2_neg(std::size_t k) {
  return Rational(1, boost::multiprecision::cpp_int(1) << k);
}

// Minimax cost straight from the recursive definition: the root's two
// subtrees split the multiset in two, so
//   M(W) = min over splits W = A + B of max(M(A), M(B)) + 1.
// Exponential; meant for n <= 7. Independent of every builder and of the
// depth-profile oracle.
template <class Weight>
Weight partition_cost(std::vector<Weight> w) {
  std::sort(w.begin(), w.end());
  std::map<std::vector<Weight>, Weight> memo;
  auto solve = [&](auto& self, const std::vector<Weight>& s) -> Weight {
    if (s.size() == 1) return s[0];
    if (auto it = memo.find(s); it != memo.end()) return it->second;
    const std::size_t n = s.size();
    bool have = false;
    Weight best{};
    // Element 0 always goes to side A so each split is seen once.
    for (std::uint32_t mask = 1; mask < (1u << (n - 1)); ++mask) {
      std::vector<Weight> a{s[0]};
      std::vector<Weight> b;
      for (std::size_t i = 1; i < n; ++i) {
        ((mask >> (i - 1)) & 1u ? b : a).push_back(s[i]);
      }
      const Weight c = std::max(self(self, a), self(self, b)) + Weight{1};
      if (!have || c < best) {
        best = c;
        have = true;
      }
    }
    memo.emplace(s, best);
    return best;
  };
  return solve(solve, w);
}

template <class Weight>
Weight max_weight_plus_depth(const MinimaxTree<Weight>& tree,
                             std::span<const Weight> input) {
  const auto depths = leaf_depths(tree);
  Weight worst = input[0] + static_cast<Weight>(depths[0]);
  for (std::size_t i = 1; i < input.size(); ++i) {
    worst = std::max(worst, input[i] + static_cast<Weight>(depths[i]));
  }
  return worst;
}

inline std::vector<double> random_probabilities(std::size_t n,
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

inline std::vector<double> log2_all(const std::vector<double>& p) {
  std::vector<double> out(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) out[i] = std::log2(p[i]);
  return out;
}

// Fibonacci numbers F_1..F_n.
inline std::vector<double> fibonacci(std::size_t n) {
  std::vector<double> f;
  for (std::size_t i = 0; i < n; ++i) {
    f.push_back(i < 2 ? 1.0 : f[i - 1] + f[i - 2]);
  }
  return f;
}

// Random strictly binary tree with n leaves and the given weights, built by
// random merges.
template <class Weight>
MinimaxTree<Weight> random_tree(const std::vector<Weight>& weights,
                                std::mt19937_64& rng) {
  const std::size_t n = weights.size();
  std::vector<TreeNode<Weight>> nodes(2 * n - 1);
  std::vector<NodeId> pool;
  for (std::size_t i = 0; i < n; ++i) {
    nodes[i].weight = weights[i];
    nodes[i].leaf_index = static_cast<NodeId>(i);
    pool.push_back(static_cast<NodeId>(i));
  }
  auto fresh = static_cast<NodeId>(n);
  while (pool.size() > 1) {
    std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
    std::swap(pool[pick(rng)], pool.back());
    const NodeId a = pool.back();
    pool.pop_back();
    std::uniform_int_distribution<std::size_t> pick2(0, pool.size() - 1);
    std::swap(pool[pick2(rng)], pool.back());
    const NodeId b = pool.back();
    pool.pop_back();
    nodes[fresh] = {std::max(nodes[a].weight, nodes[b].weight) + Weight{1}, a,
                    b, kNoNode};
    pool.push_back(fresh++);
  }
  return MinimaxTree<Weight>(std::move(nodes), n);
}

}  // namespace mxt::testing

#endif  // MXT_TESTS_TEST_SUPPORT_HPP_
