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

// Minimax trees for integer weights in linear time: clamp every weight to
// within n - 1 of the maximum, radix-sort the clamped values, run
// Golumbic's merge over the sorted list with a forward-only insertion
// pointer, then put the original weights back on the leaves.

#ifndef MXT_INTEGER_MINIMAX_HPP_
#define MXT_INTEGER_MINIMAX_HPP_

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <limits>
#include <queue>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "mxt/core.hpp"

namespace mxt {

struct ClampedMultiset {
  std::vector<std::int64_t> clamped;
  std::vector<std::int64_t> original;
  // Positions whose weight was raised to the threshold.
  std::vector<std::size_t> replaced_indices;
  // max(original) - n + 1; the lowest value any clamped weight can take.
  std::int64_t threshold = 0;
  std::int64_t max_weight = 0;
};

namespace detail {

// max(w) - n + 1, after checking that n - 1 merges cannot overflow.
inline std::int64_t clamp_threshold(std::span<const std::int64_t> values) {
  const std::int64_t n = static_cast<std::int64_t>(values.size());
  const std::int64_t top = *std::max_element(values.begin(), values.end());
  // Internal weights reach at most top + n - 1.
  if (top > std::numeric_limits<std::int64_t>::max() - (n - 1) ||
      top < std::numeric_limits<std::int64_t>::min() + (n - 1)) {
    throw std::overflow_error(
        "weights leave no headroom for n - 1 merges in a 64-bit word");
  }
  return top - (n - 1);
}

}  // namespace detail

inline ClampedMultiset clamp_weights(const IntWeightMultiset& w) {
  const auto values = w.values();
  const std::int64_t threshold = detail::clamp_threshold(values);
  ClampedMultiset out;
  out.original.assign(values.begin(), values.end());
  out.threshold = threshold;
  out.max_weight = threshold + static_cast<std::int64_t>(values.size()) - 1;
  out.clamped.resize(values.size());
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (values[i] < out.threshold) {
      out.clamped[i] = out.threshold;
      out.replaced_indices.push_back(i);
    } else {
      out.clamped[i] = values[i];
    }
  }
  return out;
}

namespace detail {

inline constexpr unsigned kRadixDigitBits = 6;

// Stable sort of max(value, low) for values at most low + n - 1. Keys are
// below n < 2^31, so at most six counting-sort passes run over digits of
// equal width no wider than kRadixDigitBits; small digits keep every scatter
// within a few dozen cache lines and TLB entries. All digit histograms are
// filled while the keys are built. Returns (key << 32) | position for each
// element in sorted order.
inline std::vector<std::uint64_t> radix_order(
    std::span<const std::int64_t> values, std::int64_t low) {
  const std::size_t n = values.size();
  unsigned key_bits = 0;
  while (key_bits < 32 && ((n - 1) >> key_bits) != 0) ++key_bits;
  const unsigned passes = (key_bits + kRadixDigitBits - 1) / kRadixDigitBits;
  const unsigned digit = passes == 0 ? 1 : (key_bits + passes - 1) / passes;
  const std::uint64_t mask = (std::uint64_t{1} << digit) - 1;
  const std::size_t buckets = std::size_t{1} << digit;

  std::vector<std::size_t> start(passes * buckets, 0);
  std::vector<std::uint64_t> a(n);
  for (std::size_t i = 0; i < n; ++i) {
    const auto key = static_cast<std::uint64_t>(std::max(values[i], low) - low);
    if (key >= n) throw std::logic_error("radix key outside [0, n)");
    a[i] = key << 32 | i;
    for (unsigned p = 0; p < passes; ++p) {
      ++start[p * buckets + ((key >> (p * digit)) & mask)];
    }
  }
  if (passes == 0) return a;
  std::vector<std::uint64_t> b(n);
  for (unsigned p = 0; p < passes; ++p) {
    std::size_t* bucket = start.data() + p * buckets;
    std::size_t total = 0;
    for (std::size_t d = 0; d < buckets; ++d) {
      total += std::exchange(bucket[d], total);
    }
    const unsigned shift = 32 + p * digit;
    for (std::uint64_t x : a) b[bucket[(x >> shift) & mask]++] = x;
    a.swap(b);
  }
  return a;
}

inline std::vector<NodeId> counting_order(std::span<const std::int64_t> values,
                                          std::int64_t low) {
  const auto packed = radix_order(values, low);
  std::vector<NodeId> order(packed.size());
  for (std::size_t i = 0; i < packed.size(); ++i) {
    order[i] = static_cast<NodeId>(packed[i] & 0xffffffffu);
  }
  return order;
}

}  // namespace detail

inline std::vector<std::int64_t> sort_clamped(const ClampedMultiset& c) {
  const auto order = detail::counting_order(c.clamped, c.threshold);
  std::vector<std::int64_t> sorted(order.size());
  for (std::size_t i = 0; i < order.size(); ++i) sorted[i] = c.clamped[order[i]];
  return sorted;
}

// Work counters for the sorted merge.
struct SortedMergeStats {
  std::size_t pointer_advances = 0;
  std::size_t insertions = 0;
};

// Golumbic's algorithm on nondecreasing weights in O(n). The list is an
// index-linked list over the arena; the pointer only ever moves forward.
// Leaf i carries sorted_weights[i] and has leaf_index i.
inline MinimaxTree<std::int64_t> build_minimax_sorted(
    std::span<const std::int64_t> sorted_weights,
    SortedMergeStats* stats = nullptr) {
  const std::size_t n = sorted_weights.size();
  if (n == 0) throw std::invalid_argument("weight list must not be empty");
  if (n > static_cast<std::size_t>(std::numeric_limits<NodeId>::max() / 2)) {
    throw std::length_error("too many weights for the node arena");
  }
  for (std::size_t i = 1; i < n; ++i) {
    if (sorted_weights[i] < sorted_weights[i - 1]) {
      throw std::invalid_argument("weights are not sorted");
    }
  }
  if (sorted_weights.back() >
      std::numeric_limits<std::int64_t>::max() -
          static_cast<std::int64_t>(n - 1)) {
    throw std::overflow_error("weights leave no headroom for n - 1 merges");
  }

  const std::size_t total = 2 * n - 1;
  std::vector<TreeNode<std::int64_t>> nodes(total);
  std::vector<NodeId> next(total, kNoNode);
  for (std::size_t i = 0; i < n; ++i) {
    nodes[i].weight = sorted_weights[i];
    nodes[i].leaf_index = static_cast<NodeId>(i);
    if (i + 1 < n) next[i] = static_cast<NodeId>(i + 1);
  }

  SortedMergeStats local;
  NodeId head = 0;
  NodeId ptr = 0;
  for (auto fresh = static_cast<NodeId>(n); fresh < static_cast<NodeId>(total);
       ++fresh) {
    const NodeId a = head;
    const NodeId b = next[a];
    const std::int64_t merged = std::max(nodes[a].weight, nodes[b].weight) + 1;

    // Move to the last node whose weight is <= merged; on ties this is the
    // rightmost such node.
    if (ptr == a) {
      ptr = b;
      ++local.pointer_advances;
    }
    while (next[ptr] != kNoNode && nodes[next[ptr]].weight <= merged) {
      ptr = next[ptr];
      ++local.pointer_advances;
    }

    head = next[b];
    nodes[fresh] = {merged, a, b, kNoNode};
    if (ptr == b) {
      next[fresh] = head;
      head = fresh;
    } else {
      next[fresh] = next[ptr];
      next[ptr] = fresh;
    }
    ptr = fresh;
    ++local.insertions;
  }
  if (stats) *stats = local;
  return MinimaxTree<std::int64_t>(std::move(nodes), n);
}

// Reference O(n log n) Golumbic algorithm: repeatedly merge the two lightest
// nodes into one of weight max + 1. Ties are broken by node id.
template <class Weight>
MinimaxTree<Weight> build_minimax_heap(std::span<const Weight> weights) {
  const std::size_t n = weights.size();
  if (n == 0) throw std::invalid_argument("weight list must not be empty");
  using Entry = std::pair<Weight, NodeId>;
  std::vector<TreeNode<Weight>> nodes(2 * n - 1);
  std::vector<Entry> init;
  init.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    nodes[i].weight = weights[i];
    nodes[i].leaf_index = static_cast<NodeId>(i);
    init.emplace_back(weights[i], static_cast<NodeId>(i));
  }
  std::priority_queue<Entry, std::vector<Entry>, std::greater<Entry>> heap(
      std::greater<Entry>{}, std::move(init));
  auto fresh = static_cast<NodeId>(n);
  while (heap.size() > 1) {
    const auto [wa, a] = heap.top();
    heap.pop();
    const auto [wb, b] = heap.top();
    heap.pop();
    const Weight merged = std::max(wa, wb) + Weight{1};
    nodes[fresh] = {merged, a, b, kNoNode};
    heap.emplace(merged, fresh);
    ++fresh;
  }
  return MinimaxTree<Weight>(std::move(nodes), n);
}

inline MinimaxTree<std::int64_t> build_minimax_heap(const IntWeightMultiset& w) {
  return build_minimax_heap<std::int64_t>(w.values());
}

inline MinimaxTree<double> build_minimax_heap(const RealWeightMultiset& w) {
  return build_minimax_heap<double>(w.values());
}

// Linear-time minimax tree for integer weights. Leaves carry the original
// weights and their input positions.
inline MinimaxTree<std::int64_t> build_minimax_int(const IntWeightMultiset& w,
                                                   SortedMergeStats* stats =
                                                       nullptr) {
  const auto values = w.values();
  const std::int64_t threshold = detail::clamp_threshold(values);
  const std::size_t n = values.size();
  std::vector<NodeId> order(n);
  std::vector<std::int64_t> sorted(n);
  {
    const auto packed = detail::radix_order(values, threshold);
    for (std::size_t i = 0; i < n; ++i) {
      order[i] = static_cast<NodeId>(packed[i] & 0xffffffffu);
      sorted[i] = static_cast<std::int64_t>(packed[i] >> 32) + threshold;
    }
  }
  auto tree = build_minimax_sorted(sorted, stats);
  // Threshold leaves, a prefix of the sorted order, take back their original
  // weights; each goes to the leaf its own position was sorted into.
  for (std::size_t i = 0; i < n && sorted[i] == threshold; ++i) {
    sorted[i] = values[order[i]];
  }
  return std::move(tree).relabel_in_place(sorted, order);
}

}  // namespace mxt

#endif  // MXT_INTEGER_MINIMAX_HPP_
