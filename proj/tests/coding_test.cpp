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
#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "mxt/coding.hpp"
#include "mxt/oracle.hpp"
#include "test_support.hpp"

namespace mxt {
namespace {

using Lengths = std::vector<std::int64_t>;

Distribution dist(std::vector<double> p) {
  return Distribution::from_probabilities(std::move(p));
}

double max_pointwise(const Distribution& q, const Lengths& lengths) {
  double worst = -INFINITY;
  for (std::size_t i = 0; i < q.size(); ++i) {
    worst = std::max(worst, std::log2(q[i]) + static_cast<double>(lengths[i]));
  }
  return worst;
}

bool prefix_free(const PrefixCode& code) {
  for (std::size_t a = 0; a < code.size(); ++a) {
    for (std::size_t b = 0; b < code.size(); ++b) {
      if (a != b && code.codewords[b].rfind(code.codewords[a], 0) == 0) return false;
    }
  }
  return true;
}

TEST(DistributionTest, RejectsBadInput) {
  EXPECT_THROW(dist({}), std::invalid_argument);
  EXPECT_THROW(dist({0.5, 0.4}), std::invalid_argument);
  EXPECT_THROW(dist({1.5, -0.5}), std::invalid_argument);
  EXPECT_THROW(Distribution::from_counts({0.0, 0.0}), std::invalid_argument);
  const auto d = Distribution::from_counts({5, 3, 2, 1, 1});
  EXPECT_DOUBLE_EQ(d[0], 5.0 / 12.0);
  ASSERT_TRUE(d.counts().has_value());
}

TEST(MinimaxCodeTest, Examples) {
  const auto dyadic = dist({0.5, 0.25, 0.25});
  const auto a = minimax_code(dyadic);
  EXPECT_EQ(a.lengths, (Lengths{1, 2, 2}));
  EXPECT_EQ(max_pointwise(dyadic, a.lengths), 0.0);

  const auto q = dist({0.4, 0.3, 0.3});
  const auto b = minimax_code(q);
  EXPECT_EQ(b.lengths, (Lengths{1, 2, 2}));
  EXPECT_NEAR(max_pointwise(q, b.lengths), 0.2630, 1e-4);
  EXPECT_EQ(oracle_optimal_lengths(q.probs(), 3), b.lengths);
}

TEST(MinimaxCodeTest, ZeroProbabilityNamesSymbol) {
  try {
    minimax_code(dist({0.5, 0.0, 0.5}));
    FAIL() << "expected ZeroProbabilityError";
  } catch (const ZeroProbabilityError& e) {
    EXPECT_EQ(e.symbol(), 1u);
  }
  EXPECT_THROW(shannon_code(dist({1.0, 0.0})), ZeroProbabilityError);
}

TEST(MinimaxCodeTest, SingleSymbolHasEmptyCodeword) {
  const auto c = minimax_code(dist({1.0}));
  EXPECT_EQ(c.lengths, (Lengths{0}));
  EXPECT_EQ(c.codewords[0], "");
}

TEST(ShannonCodeTest, Examples) {
  EXPECT_EQ(shannon_code(dist({0.5, 0.5})).lengths, (Lengths{1, 1}));
  EXPECT_EQ(shannon_code(dist({0.4, 0.3, 0.3})).lengths, (Lengths{2, 2, 2}));
}

TEST(HuffmanCodeTest, Examples) {
  EXPECT_EQ(huffman_code(dist({0.5, 0.25, 0.25})).lengths, (Lengths{1, 2, 2}));
  EXPECT_EQ(huffman_code(Distribution::from_counts({5, 3, 2, 1, 1})).lengths,
            (Lengths{1, 2, 3, 4, 4}));
  EXPECT_THROW(huffman_code(dist({1.0})), std::invalid_argument);
}

TEST(PrefixCodeTest, CanonicalCodewords) {
  const auto c = PrefixCode::from_lengths({2, 1, 3, 3});
  EXPECT_EQ(c.codewords, (std::vector<std::string>{"10", "0", "110", "111"}));
  EXPECT_THROW(PrefixCode::from_lengths({1, 1, 1}), std::invalid_argument);
  EXPECT_THROW(PrefixCode::from_lengths({}), std::invalid_argument);
}

TEST(CodingProperty, MinimaxIsOptimalOnSmallAlphabets) {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<std::size_t> size(2, 6);
  for (int trial = 0; trial < 400; ++trial) {
    const auto q = dist(testing::random_probabilities(size(rng), rng));
    const auto code = minimax_code(q);
    const auto best = oracle_optimal_lengths(q.probs(), static_cast<std::int64_t>(q.size()) - 1);
    ASSERT_NEAR(max_pointwise(q, code.lengths), max_pointwise(q, best), 1e-12);
  }
}

TEST(CodingProperty, MinimaxDominatesShannonAndHuffman) {
  std::mt19937_64 rng(12);
  std::uniform_int_distribution<std::size_t> size(2, 300);
  for (int trial = 0; trial < 300; ++trial) {
    const auto q = dist(testing::random_probabilities(size(rng), rng));
    const auto code = minimax_code(q);
    ASSERT_TRUE(prefix_free(code));
    const double m = max_pointwise(q, code.lengths);
    ASSERT_LT(m, 1.0);
    ASSERT_LE(m, max_pointwise(q, shannon_code(q).lengths));
    ASSERT_LE(m, max_pointwise(q, huffman_code(q).lengths));
  }
}

TEST(CodingProperty, EncodeDecodeRoundTrip) {
  std::mt19937_64 rng(13);
  std::uniform_int_distribution<std::size_t> size(2, 50);
  for (int trial = 0; trial < 200; ++trial) {
    const auto q = dist(testing::random_probabilities(size(rng), rng));
    const auto code = minimax_code(q);
    std::uniform_int_distribution<std::size_t> sym(0, q.size() - 1);
    std::vector<std::size_t> msg(100);
    for (auto& s : msg) s = sym(rng);
    ASSERT_EQ(decode(code, encode(code, msg)), msg);
  }
  const auto code = PrefixCode::from_lengths({1, 2, 2});
  EXPECT_THROW(decode(code, "1"), std::invalid_argument);
  EXPECT_THROW(decode(code, "2"), std::invalid_argument);
}

TEST(RedundancyReportTest, DyadicSelfReport) {
  const auto q = dist({0.5, 0.25, 0.25});
  const auto r = redundancy_report(q, q, minimax_code(q));
  EXPECT_NEAR(r.entropy, 1.5, 1e-15);
  EXPECT_NEAR(r.relative_entropy, 0.0, 1e-15);
  EXPECT_NEAR(r.avg_excess, 0.0, 1e-15);
  EXPECT_EQ(r.max_pointwise, 0.0);
}

TEST(RedundancyReportTest, InfiniteRelativeEntropyIsFlagged) {
  const auto p = dist({0.5, 0.5});
  const auto q = dist({1.0, 0.0});
  const auto r = redundancy_report(p, q, PrefixCode::from_lengths({1, 1}));
  EXPECT_TRUE(r.relative_entropy_infinite);
  EXPECT_TRUE(std::isinf(r.relative_entropy));
}

TEST(RedundancyReportTest, IdentityHolds) {
  std::mt19937_64 rng(14);
  for (int trial = 0; trial < 200; ++trial) {
    const auto p = dist(testing::random_probabilities(20, rng));
    const auto q = dist(testing::random_probabilities(20, rng));
    const auto r = redundancy_report(p, q, minimax_code(q));
    ASSERT_LT(r.identity_residual, 1e-9);
    ASSERT_LT(r.avg_excess, 1.0);
  }
}

TEST(RedundancyReportTest, FibonacciHuffmanExcess) {
  const std::size_t n = 20;
  auto f = testing::fibonacci(n);
  std::reverse(f.begin(), f.end());
  const auto q = Distribution::from_counts(f);
  std::vector<double> pv(n, 1e-6);
  pv.back() = 1.0 - 19e-6;
  const auto p = dist(pv);
  const auto huff = huffman_code(q);
  // Lengths 1..n-1 with the last two tied, so the heavy symbol costs n - 1
  // bits against log2(sum F) of ideal length.
  const auto r = redundancy_report(p, q, huff);
  EXPECT_NEAR(r.avg_excess, 4.8877, 1e-4);
  EXPECT_LT(redundancy_report(p, q, minimax_code(q)).max_pointwise, 1.0);
}

TEST(GroupTestTest, UniformFourIsTwoLevels) {
  const auto q = dist({0.25, 0.25, 0.25, 0.25});
  const auto plan = group_test_plan(q);
  EXPECT_EQ(plan.depths(4), (Lengths{2, 2, 2, 2}));
  EXPECT_DOUBLE_EQ(plan.expected_checks(q), 2.0);
}

TEST(GroupTestTest, FirstQueryIsolatesLikeliestElement) {
  const auto plan = group_test_plan(dist({0.4, 0.3, 0.3}));
  const auto& root = plan.nodes[plan.root()];
  EXPECT_EQ(plan.nodes[root.yes].elements, (std::vector<std::size_t>{0}));
  EXPECT_EQ(plan.depths(3), (Lengths{1, 2, 2}));
}

TEST(GroupTestTest, SingleElementNeedsNoQuery) {
  const auto plan = group_test_plan(dist({1.0}));
  ASSERT_EQ(plan.nodes.size(), 1u);
  EXPECT_TRUE(plan.nodes[0].is_leaf());
  EXPECT_THROW(group_test_plan(dist({1.0, 0.0})), ZeroProbabilityError);
}

TEST(GroupTestTest, DepthsMatchCodeLengths) {
  std::mt19937_64 rng(15);
  for (int trial = 0; trial < 100; ++trial) {
    const auto q = dist(testing::random_probabilities(1 + trial % 40, rng));
    const auto code = minimax_code(q);
    const auto plan = plan_from_code(code);
    ASSERT_EQ(plan.depths(q.size()), code.lengths);
    for (const auto& node : plan.nodes) {
      if (node.is_leaf()) continue;
      const auto& yes = plan.nodes[node.yes].elements;
      const auto& no = plan.nodes[node.no].elements;
      ASSERT_EQ(yes.size() + no.size(), node.elements.size());
    }
  }
}

}  // namespace
}  // namespace mxt
