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

#ifndef MXT_KRAFT_HPP_
#define MXT_KRAFT_HPP_

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "mxt/core.hpp"

namespace mxt {

// Exact binary fraction with a fixed number of fractional bits, stored in
// 64-bit blocks. Bit k (1-based) has value 2^-k and lives in block (k-1)/64;
// block 0 is the most significant. Carries out of bit 1 accumulate in
// overflow_units().
class FixedPointFraction {
 public:
  using Block = std::uint64_t;
  static constexpr std::size_t kBlockBits = 64;

  explicit FixedPointFraction(std::size_t capacity_bits)
      : capacity_bits_(capacity_bits),
        blocks_((capacity_bits + kBlockBits - 1) / kBlockBits, 0) {}

  std::size_t capacity_bits() const { return capacity_bits_; }
  std::uint64_t overflow_units() const { return units_; }
  std::span<const Block> blocks() const { return blocks_; }

  bool bit(std::size_t k) const {
    if (k < 1 || k > capacity_bits_) return false;
    return (blocks_[(k - 1) / kBlockBits] >> shift_of(k)) & 1u;
  }

  bool is_zero() const {
    return units_ == 0 &&
           std::all_of(blocks_.begin(), blocks_.end(),
                       [](Block b) { return b == 0; });
  }

  // Adds 2^-k. Amortized O(1) by the binary-counter argument.
  void add_pow2(std::size_t k) {
    if (k < 1 || k > capacity_bits_) {
      throw std::out_of_range("exponent " + std::to_string(k) +
                              " outside [1, " + std::to_string(capacity_bits_) +
                              "]");
    }
    std::size_t b = (k - 1) / kBlockBits;
    Block add = Block{1} << shift_of(k);
    for (;;) {
      ++carry_work_;
      const Block before = blocks_[b];
      blocks_[b] = before + add;
      if (blocks_[b] >= before) return;
      if (b == 0) {
        ++units_;
        return;
      }
      --b;
      add = 1;
    }
  }

  // this += src, exactly.
  void merge(const FixedPointFraction& src) {
    require_same_capacity(*this, src);
    Block carry = 0;
    for (std::size_t b = blocks_.size(); b-- > 0;) {
      const Block s1 = blocks_[b] + src.blocks_[b];
      const Block c1 = s1 < blocks_[b];
      const Block s2 = s1 + carry;
      const Block c2 = s2 < s1;
      blocks_[b] = s2;
      carry = c1 | c2;
    }
    units_ += src.units_ + carry;
  }

  void reset() {
    std::fill(blocks_.begin(), blocks_.end(), Block{0});
    units_ = 0;
  }

  bool at_most_one() const {
    if (units_ == 0) return true;
    if (units_ > 1) return false;
    return std::all_of(blocks_.begin(), blocks_.end(),
                       [](Block b) { return b == 0; });
  }

  // Blocks touched by add_pow2 since construction.
  std::uint64_t carry_work() const { return carry_work_; }

  friend bool pair_at_most_one(const FixedPointFraction& a,
                               const FixedPointFraction& b);

  friend bool operator==(const FixedPointFraction& a,
                         const FixedPointFraction& b) {
    return a.capacity_bits_ == b.capacity_bits_ && a.units_ == b.units_ &&
           a.blocks_ == b.blocks_;
  }

 private:
  static unsigned shift_of(std::size_t k) {
    return static_cast<unsigned>(kBlockBits - 1 - (k - 1) % kBlockBits);
  }

  static void require_same_capacity(const FixedPointFraction& a,
                                    const FixedPointFraction& b) {
    if (a.capacity_bits_ != b.capacity_bits_) {
      throw std::invalid_argument("fraction capacities differ");
    }
  }

  std::size_t capacity_bits_;
  std::vector<Block> blocks_;
  std::uint64_t units_ = 0;
  std::uint64_t carry_work_ = 0;
};

// Whether a + b <= 1, without modifying either operand. Blocks are summed
// from least to most significant with a one-bit carry between them.
inline bool pair_at_most_one(const FixedPointFraction& a,
                             const FixedPointFraction& b) {
  FixedPointFraction::require_same_capacity(a, b);
  using Block = FixedPointFraction::Block;
  Block carry = 0;
  bool fraction_nonzero = false;
  for (std::size_t i = a.blocks_.size(); i-- > 0;) {
    const Block s1 = a.blocks_[i] + b.blocks_[i];
    const Block c1 = s1 < a.blocks_[i];
    const Block s2 = s1 + carry;
    const Block c2 = s2 < s1;
    carry = c1 | c2;
    fraction_nonzero |= s2 != 0;
  }
  const std::uint64_t units = a.units_ + b.units_ + carry;
  if (units == 0) return true;
  return units == 1 && !fraction_nonzero;
}

// Whether sum 2^-depth <= 1, computed exactly.
inline bool check_kraft_depths(std::span<const std::int64_t> depths) {
  std::int64_t deepest = 0;
  for (std::int64_t d : depths) {
    if (d < 0) throw std::invalid_argument("depths must be nonnegative");
    deepest = std::max(deepest, d);
  }
  FixedPointFraction sum(static_cast<std::size_t>(deepest));
  std::size_t whole = 0;
  for (std::int64_t d : depths) {
    if (d == 0) {
      if (++whole > 1) return false;
    } else {
      sum.add_pow2(static_cast<std::size_t>(d));
      if (sum.overflow_units() > 1) return false;
    }
  }
  if (whole == 1) return sum.is_zero();
  return sum.at_most_one();
}

// Ordered binary tree whose leaves, left to right, sit at the given
// nondecreasing depths and carry the aligned weights (leaf i gets leaf_index
// i). Each leaf takes the leftmost free slot at its depth. When the Kraft sum
// is below 1 some slots stay empty; those are pruned and their siblings move
// up, so every leaf ends at most as deep as requested.
template <class Weight>
MinimaxTree<Weight> tree_from_sorted_depths(std::span<const std::int64_t> depths,
                                            std::span<const Weight> weights) {
  const std::size_t n = depths.size();
  if (n == 0) throw std::invalid_argument("depth list must not be empty");
  if (weights.size() != n) {
    throw std::invalid_argument("weights and depths differ in length");
  }
  for (std::size_t i = 1; i < n; ++i) {
    if (depths[i] < depths[i - 1]) {
      throw std::invalid_argument("depths are not nondecreasing");
    }
  }
  if (!check_kraft_depths(depths)) {
    throw std::invalid_argument("depths violate the Kraft inequality");
  }

  std::vector<TreeNode<Weight>> nodes;
  nodes.reserve(2 * n - 1);
  struct Frame {
    std::int64_t depth;
    int stage;
    NodeId left;
  };
  std::vector<Frame> stack{{0, 0, kNoNode}};
  std::size_t next_leaf = 0;
  NodeId result = kNoNode;
  while (!stack.empty()) {
    Frame& f = stack.back();
    const std::int64_t depth = f.depth;
    if (f.stage == 0) {
      if (next_leaf == n) {
        result = kNoNode;
        stack.pop_back();
      } else if (depths[next_leaf] == depth) {
        TreeNode<Weight> leaf;
        leaf.weight = weights[next_leaf];
        leaf.leaf_index = static_cast<NodeId>(next_leaf);
        nodes.push_back(leaf);
        ++next_leaf;
        result = static_cast<NodeId>(nodes.size() - 1);
        stack.pop_back();
      } else {
        f.stage = 1;
        stack.push_back({depth + 1, 0, kNoNode});
      }
    } else if (f.stage == 1) {
      f.left = result;
      f.stage = 2;
      stack.push_back({depth + 1, 0, kNoNode});
    } else {
      const NodeId left = f.left;
      const NodeId right = result;
      stack.pop_back();
      if (left == kNoNode || right == kNoNode) {
        result = left == kNoNode ? right : left;
      } else {
        TreeNode<Weight> inner;
        inner.weight = std::max(nodes[left].weight, nodes[right].weight) +
                       Weight{1};
        inner.left = left;
        inner.right = right;
        nodes.push_back(inner);
        result = static_cast<NodeId>(nodes.size() - 1);
      }
    }
  }
  if (next_leaf != n) {
    throw std::logic_error("canonical placement left leaves unplaced");
  }
  return MinimaxTree<Weight>(std::move(nodes), n);
}

}  // namespace mxt

#endif  // MXT_KRAFT_HPP_
