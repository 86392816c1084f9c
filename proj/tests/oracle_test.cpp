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

#include <cstdint>
#include <random>
#include <vector>

#include "mxt/integer_minimax.hpp"
#include "mxt/oracle.hpp"
#include "test_support.hpp"

namespace mxt {
namespace {

TEST(OracleTest, ProfileCountsMatchKnownSequence) {
  // Partitions of 1 into powers of 1/2, counted by number of parts.
  const std::vector<std::size_t> expect{1, 1, 1, 2, 3, 5, 9, 16};
  for (std::size_t n = 1; n <= expect.size(); ++n) {
    EXPECT_EQ(detail::full_profiles(n).size(), expect[n - 1]) << "n = " << n;
  }
}

TEST(OracleTest, Examples) {
  const std::vector<std::int64_t> a{1, 2, 3};
  EXPECT_EQ(oracle_minimax_cost<std::int64_t>(a), 4);
  const std::vector<std::int64_t> b{0};
  EXPECT_EQ(oracle_minimax_cost<std::int64_t>(b), 0);
  const std::vector<std::int64_t> big(11, 0);
  EXPECT_THROW(oracle_minimax_cost<std::int64_t>(big), std::out_of_range);
  EXPECT_EQ(oracle_minimax_cost<std::int64_t>(big, 12), 4);
  const std::vector<std::int64_t> none;
  EXPECT_THROW(oracle_minimax_cost<std::int64_t>(none), std::invalid_argument);
}

TEST(OracleTest, AgreesWithPartitionRecursion) {
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<std::size_t> size(1, 7);
  std::uniform_int_distribution<std::int64_t> iv(-6, 6);
  std::uniform_real_distribution<double> rv(-10.0, 0.0);
  for (int trial = 0; trial < 600; ++trial) {
    std::vector<std::int64_t> wi(size(rng));
    for (auto& x : wi) x = iv(rng);
    ASSERT_EQ(oracle_minimax_cost<std::int64_t>(wi), testing::partition_cost(wi));
    std::vector<double> wr(size(rng));
    for (auto& x : wr) x = rv(rng);
    ASSERT_EQ(oracle_minimax_cost<double>(wr), testing::partition_cost(wr));
  }
}

TEST(OracleTest, AgreesWithHeapBuilder) {
  std::mt19937_64 rng(4);
  std::uniform_int_distribution<std::size_t> size(1, 10);
  std::uniform_int_distribution<std::int64_t> iv(-20, 20);
  for (int trial = 0; trial < 2000; ++trial) {
    std::vector<std::int64_t> w(size(rng));
    for (auto& x : w) x = iv(rng);
    ASSERT_EQ(oracle_minimax_cost<std::int64_t>(w),
              minimax_cost(build_minimax_heap(IntWeightMultiset(w))));
  }
}

TEST(OracleTest, OptimalLengthsExamples) {
  const std::vector<double> q{0.4, 0.3, 0.3};
  EXPECT_EQ(oracle_optimal_lengths(q, 3), (std::vector<std::int64_t>{1, 2, 2}));
  const std::vector<double> one{1.0};
  EXPECT_EQ(oracle_optimal_lengths(one, 3), (std::vector<std::int64_t>{0}));
}

}  // namespace
}  // namespace mxt
