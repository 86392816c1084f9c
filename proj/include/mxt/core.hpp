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

#ifndef MXT_CORE_HPP_
#define MXT_CORE_HPP_

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

namespace mxt {

using NodeId = std::int32_t;
inline constexpr NodeId kNoNode = -1;

// A nonempty multiset of integer weights. Order is kept only so that leaves
// can be mapped back to input positions; every algorithm treats it as a
// multiset.
class IntWeightMultiset {
 public:
  using value_type = std::int64_t;

  explicit IntWeightMultiset(std::vector<std::int64_t> weights)
      : weights_(std::move(weights)) {
    if (weights_.empty()) {
      throw std::invalid_argument("weight multiset must not be empty");
    }
  }
  IntWeightMultiset(std::initializer_list<std::int64_t> weights)
      : IntWeightMultiset(std::vector<std::int64_t>(weights)) {}

  std::size_t size() const { return weights_.size(); }
  std::int64_t operator[](std::size_t i) const { return weights_[i]; }
  std::span<const std::int64_t> values() const { return weights_; }

 private:
  std::vector<std::int64_t> weights_;
};

// A nonempty multiset of finite binary64 weights.
class RealWeightMultiset {
 public:
  using value_type = double;

  explicit RealWeightMultiset(std::vector<double> weights)
      : weights_(std::move(weights)) {
    if (weights_.empty()) {
      throw std::invalid_argument("weight multiset must not be empty");
    }
    for (std::size_t i = 0; i < weights_.size(); ++i) {
      if (!std::isfinite(weights_[i])) {
        throw std::invalid_argument("weight " + std::to_string(i) +
                                    " is not finite");
      }
    }
  }
  RealWeightMultiset(std::initializer_list<double> weights)
      : RealWeightMultiset(std::vector<double>(weights)) {}

  std::size_t size() const { return weights_.size(); }
  double operator[](std::size_t i) const { return weights_[i]; }
  std::span<const double> values() const { return weights_; }

 private:
  std::vector<double> weights_;
};

template <class Weight>
struct TreeNode {
  Weight weight{};
  NodeId left = kNoNode;
  NodeId right = kNoNode;
  // Input position of the weight carried by a leaf; kNoNode on internal nodes.
  NodeId leaf_index = kNoNode;

  bool is_leaf() const { return left == kNoNode; }
};

// Strictly binary tree stored in an index arena. Children always precede
// their parent and the root is the last node, so one forward pass visits the
// nodes bottom-up and one backward pass visits them top-down.
template <class Weight>
class MinimaxTree {
 public:
  using weight_type = Weight;
  using node_type = TreeNode<Weight>;

  MinimaxTree(std::vector<node_type> nodes, std::size_t leaf_count)
      : nodes_(std::move(nodes)), leaf_count_(leaf_count) {
    if (nodes_.empty()) throw std::invalid_argument("tree has no nodes");
    for (std::size_t i = 0; i < nodes_.size(); ++i) {
      const node_type& n = nodes_[i];
      if ((n.left == kNoNode) != (n.right == kNoNode)) {
        throw std::invalid_argument("node " + std::to_string(i) +
                                    " has exactly one child");
      }
      if (!n.is_leaf() &&
          (n.left < 0 || n.right < 0 || static_cast<std::size_t>(n.left) >= i ||
           static_cast<std::size_t>(n.right) >= i)) {
        throw std::invalid_argument("node " + std::to_string(i) +
                                    " does not follow its children");
      }
    }
  }

  NodeId root() const { return static_cast<NodeId>(nodes_.size() - 1); }
  std::size_t leaf_count() const { return leaf_count_; }
  std::size_t node_count() const { return nodes_.size(); }
  const node_type& node(NodeId id) const { return nodes_[id]; }
  std::span<const node_type> nodes() const { return nodes_; }

  // Moves leaf weights onto a new weight type, indexed by leaf_index, and
  // recomputes every internal weight. A nonempty remap also rewrites each
  // leaf_index to remap[leaf_index].
  template <class Other>
  MinimaxTree<Other> relabel(std::span<const Other> by_leaf_index,
                             std::span<const NodeId> remap = {}) const {
    std::vector<TreeNode<Other>> out(nodes_.size());
    for (std::size_t i = 0; i < nodes_.size(); ++i) {
      const node_type& n = nodes_[i];
      TreeNode<Other>& o = out[i];
      o.left = n.left;
      o.right = n.right;
      o.leaf_index = n.leaf_index;
      if (n.is_leaf()) {
        o.weight = by_leaf_index[n.leaf_index];
        if (!remap.empty()) o.leaf_index = remap[n.leaf_index];
      } else {
        o.weight = std::max(out[n.left].weight, out[n.right].weight) + Other{1};
      }
    }
    return MinimaxTree<Other>(std::move(out), leaf_count_);
  }

  // Same as relabel, reusing this tree's arena. Internal weights are only
  // recomputed once some leaf weight has changed, and the pass stops early
  // when every leaf has been seen unchanged.
  MinimaxTree relabel_in_place(std::span<const Weight> by_leaf_index,
                               std::span<const NodeId> remap = {}) && {
    bool changed = false;
    std::size_t leaves_seen = 0;
    for (node_type& n : nodes_) {
      if (n.is_leaf()) {
        changed |= n.weight != by_leaf_index[n.leaf_index];
        n.weight = by_leaf_index[n.leaf_index];
        if (!remap.empty()) n.leaf_index = remap[n.leaf_index];
        ++leaves_seen;
      } else if (!changed) {
        if (leaves_seen == leaf_count_) break;
      } else {
        n.weight = std::max(nodes_[n.left].weight, nodes_[n.right].weight) +
                   Weight{1};
      }
    }
    return std::move(*this);
  }

 private:
  std::vector<node_type> nodes_;
  std::size_t leaf_count_;
};

template <class Weight>
Weight minimax_cost(const MinimaxTree<Weight>& tree) {
  return tree.node(tree.root()).weight;
}

// Depth of every leaf, listed by leaf_index.
template <class Weight>
std::vector<std::int64_t> leaf_depths(const MinimaxTree<Weight>& tree) {
  auto nodes = tree.nodes();
  std::vector<std::int64_t> depth(nodes.size(), 0);
  std::vector<std::int64_t> out(tree.leaf_count(), 0);
  for (std::size_t i = nodes.size(); i-- > 0;) {
    const auto& n = nodes[i];
    if (n.is_leaf()) {
      out[n.leaf_index] = depth[i];
    } else {
      depth[n.left] = depth[i] + 1;
      depth[n.right] = depth[i] + 1;
    }
  }
  return out;
}

// Checks every structural and weight invariant against the input multiset.
// Returns one message per violation; an empty result means the tree is valid.
template <class Weight>
std::vector<std::string> validate_tree(const MinimaxTree<Weight>& tree,
                                       std::span<const Weight> input) {
  std::vector<std::string> issues;
  auto nodes = tree.nodes();
  const std::size_t n = input.size();

  std::vector<int> parents(nodes.size(), 0);
  std::size_t leaves = 0;
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    const auto& node = nodes[i];
    if (node.is_leaf()) {
      ++leaves;
      continue;
    }
    ++parents[node.left];
    ++parents[node.right];
    const Weight expect =
        std::max(nodes[node.left].weight, nodes[node.right].weight) + Weight{1};
    if (node.weight != expect) {
      issues.push_back("node " + std::to_string(i) +
                       ": weight is not max(children) + 1");
    }
  }
  for (std::size_t i = 0; i + 1 < nodes.size(); ++i) {
    if (parents[i] != 1) {
      issues.push_back("node " + std::to_string(i) + " has " +
                       std::to_string(parents[i]) + " parents");
    }
  }
  if (leaves != n || tree.leaf_count() != n) {
    issues.push_back("leaf count " + std::to_string(leaves) +
                     " does not match input size " + std::to_string(n));
    return issues;
  }
  if (nodes.size() != 2 * n - 1) {
    issues.push_back("node count is not 2n - 1");
  }

  std::vector<Weight> leaf_weights;
  std::vector<char> seen(n, 0);
  bool index_ok = true;
  for (const auto& node : nodes) {
    if (!node.is_leaf()) continue;
    leaf_weights.push_back(node.weight);
    if (node.leaf_index < 0 || static_cast<std::size_t>(node.leaf_index) >= n ||
        seen[node.leaf_index]) {
      index_ok = false;
      continue;
    }
    seen[node.leaf_index] = 1;
    if (node.weight != input[node.leaf_index]) index_ok = false;
  }
  std::vector<Weight> sorted_input(input.begin(), input.end());
  std::sort(sorted_input.begin(), sorted_input.end());
  std::sort(leaf_weights.begin(), leaf_weights.end());
  if (sorted_input != leaf_weights) {
    issues.push_back("leaf weights differ from the input multiset");
  }
  if (!index_ok) {
    issues.push_back("leaf indices do not map leaves onto input positions");
    return issues;
  }

  const auto depths = leaf_depths(tree);
  const std::int64_t height =
      *std::max_element(depths.begin(), depths.end());
  if (height > static_cast<std::int64_t>(n) - 1) {
    issues.push_back("height exceeds n - 1");
  }
  Weight worst = input[0] + static_cast<Weight>(depths[0]);
  for (std::size_t i = 1; i < n; ++i) {
    worst = std::max(worst, input[i] + static_cast<Weight>(depths[i]));
  }
  // Repeated +1 along a path may round differently from a single +depth.
  const Weight root = minimax_cost(tree);
  bool root_ok = worst == root;
  if constexpr (std::is_floating_point_v<Weight>) {
    root_ok = std::abs(worst - root) <=
              1e-12 * std::max(Weight{1}, std::abs(root));
  }
  if (!root_ok) {
    issues.push_back("root weight differs from max(weight + depth)");
  }
  return issues;
}

}  // namespace mxt

#endif  // MXT_CORE_HPP_
