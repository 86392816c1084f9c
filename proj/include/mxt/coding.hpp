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

// Prefix codes built from an estimated distribution Q. A code whose tree has
// the shape of a minimax tree for {log2 q_i} minimizes the worst pointwise
// redundancy max_i (log2 q_i + |c_i|), which also bounds how far the average
// length under the true distribution P can exceed H(P) + D(P||Q).

#ifndef MXT_CODING_HPP_
#define MXT_CODING_HPP_

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <limits>
#include <numeric>
#include <optional>
#include <queue>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "mxt/core.hpp"
#include "mxt/kraft.hpp"
#include "mxt/real_minimax.hpp"

namespace mxt {

inline constexpr double kDistributionTolerance = 1e-9;

class Distribution {
 public:
  // Probabilities must be nonnegative and sum to 1 within 1e-9.
  static Distribution from_probabilities(std::vector<double> probs) {
    check_entries(probs);
    const double total = std::accumulate(probs.begin(), probs.end(), 0.0);
    if (std::abs(total - 1.0) > kDistributionTolerance) {
      throw std::invalid_argument("probabilities sum to " +
                                  std::to_string(total) + ", not 1");
    }
    return Distribution(std::move(probs), std::nullopt);
  }

  // Nonnegative counts with at least one positive entry, normalized by
  // their total.
  static Distribution from_counts(std::vector<double> counts) {
    check_entries(counts);
    const double total = std::accumulate(counts.begin(), counts.end(), 0.0);
    if (!(total > 0.0)) {
      throw std::invalid_argument("counts must include a positive entry");
    }
    std::vector<double> probs(counts.size());
    for (std::size_t i = 0; i < counts.size(); ++i) probs[i] = counts[i] / total;
    return Distribution(std::move(probs), std::move(counts));
  }

  std::size_t size() const { return probs_.size(); }
  double operator[](std::size_t i) const { return probs_[i]; }
  std::span<const double> probs() const { return probs_; }
  const std::optional<std::vector<double>>& counts() const { return counts_; }

 private:
  Distribution(std::vector<double> probs,
               std::optional<std::vector<double>> counts)
      : probs_(std::move(probs)), counts_(std::move(counts)) {}

  static void check_entries(const std::vector<double>& v) {
    if (v.empty()) throw std::invalid_argument("distribution must not be empty");
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (!std::isfinite(v[i]) || v[i] < 0.0) {
        throw std::invalid_argument("entry " + std::to_string(i) +
                                    " is negative or not finite");
      }
    }
  }

  std::vector<double> probs_;
  std::optional<std::vector<double>> counts_;
};

// Thrown when a code needs a positive probability for every symbol.
class ZeroProbabilityError : public std::invalid_argument {
 public:
  explicit ZeroProbabilityError(std::size_t symbol)
      : std::invalid_argument("symbol " + std::to_string(symbol) +
                              " has zero probability"),
        symbol_(symbol) {}
  std::size_t symbol() const { return symbol_; }

 private:
  std::size_t symbol_;
};

struct PrefixCode {
  std::vector<std::int64_t> lengths;
  std::vector<std::string> codewords;

  std::size_t size() const { return lengths.size(); }

  // Canonical codewords: symbols ordered by (length, index) receive
  // consecutive binary values, each left-aligned to its length.
  static PrefixCode from_lengths(std::vector<std::int64_t> lengths) {
    if (lengths.empty()) throw std::invalid_argument("code has no symbols");
    if (!check_kraft_depths(lengths)) {
      throw std::invalid_argument("lengths violate the Kraft inequality");
    }
    PrefixCode code;
    code.codewords.resize(lengths.size());
    std::string word;
    bool first = true;
    for (std::size_t s : canonical_order(lengths)) {
      const auto len = static_cast<std::size_t>(lengths[s]);
      if (!first) {
        // Binary increment; Kraft rules out running off the top.
        std::size_t i = word.size();
        while (i > 0 && word[i - 1] == '1') word[--i] = '0';
        if (i == 0) throw std::logic_error("canonical code ran out of words");
        word[i - 1] = '1';
      }
      word.resize(len, '0');
      code.codewords[s] = word;
      first = false;
    }
    code.lengths = std::move(lengths);
    return code;
  }

  static std::vector<std::size_t> canonical_order(
      std::span<const std::int64_t> lengths) {
    std::vector<std::size_t> order(lengths.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) {
                       return lengths[a] < lengths[b];
                     });
    return order;
  }
};

namespace detail {

inline void require_positive(const Distribution& q) {
  for (std::size_t i = 0; i < q.size(); ++i) {
    if (!(q[i] > 0.0)) throw ZeroProbabilityError(i);
  }
}

}  // namespace detail

// Minimax tree for {log2 q_i}; its leaf depths are the minimax code lengths.
inline MinimaxTree<double> minimax_code_tree(const Distribution& q) {
  detail::require_positive(q);
  std::vector<double> logs(q.size());
  for (std::size_t i = 0; i < q.size(); ++i) logs[i] = std::log2(q[i]);
  return build_minimax_real(RealWeightMultiset(std::move(logs)));
}

inline PrefixCode minimax_code(const Distribution& q) {
  return PrefixCode::from_lengths(leaf_depths(minimax_code_tree(q)));
}

inline PrefixCode shannon_code(const Distribution& q) {
  detail::require_positive(q);
  std::vector<std::int64_t> lengths(q.size());
  for (std::size_t i = 0; i < q.size(); ++i) {
    lengths[i] = static_cast<std::int64_t>(std::ceil(-std::log2(q[i])));
  }
  return PrefixCode::from_lengths(std::move(lengths));
}

// Huffman's two-lightest merge; ties go to the lower node id.
inline PrefixCode huffman_code(const Distribution& q) {
  const std::size_t n = q.size();
  if (n < 2) throw std::invalid_argument("Huffman coding needs two symbols");
  using Entry = std::pair<double, std::size_t>;
  std::priority_queue<Entry, std::vector<Entry>, std::greater<Entry>> heap;
  std::vector<std::pair<std::size_t, std::size_t>> children(2 * n - 1);
  for (std::size_t i = 0; i < n; ++i) heap.emplace(q[i], i);
  std::size_t fresh = n;
  while (heap.size() > 1) {
    const auto [wa, a] = heap.top();
    heap.pop();
    const auto [wb, b] = heap.top();
    heap.pop();
    children[fresh] = {a, b};
    heap.emplace(wa + wb, fresh++);
  }
  std::vector<std::int64_t> depth(2 * n - 1, 0);
  for (std::size_t v = 2 * n - 1; v-- > n;) {
    depth[children[v].first] = depth[v] + 1;
    depth[children[v].second] = depth[v] + 1;
  }
  return PrefixCode::from_lengths(
      std::vector<std::int64_t>(depth.begin(), depth.begin() + n));
}

struct RedundancyReport {
  double entropy = 0.0;
  double relative_entropy = 0.0;
  bool relative_entropy_infinite = false;
  double avg_length = 0.0;
  // max_i (log2 q_i + |c_i|) over q_i > 0.
  double max_pointwise = 0.0;
  // avg_length - H(P) - D(P||Q).
  double avg_excess = 0.0;
  // |avg_excess - sum_i p_i (log2 q_i + |c_i|)|; zero up to rounding.
  double identity_residual = 0.0;
};

inline RedundancyReport redundancy_report(const Distribution& p,
                                          const Distribution& q,
                                          const PrefixCode& code) {
  if (p.size() != q.size() || q.size() != code.size()) {
    throw std::invalid_argument("distribution and code sizes differ");
  }
  RedundancyReport r;
  r.max_pointwise = -std::numeric_limits<double>::infinity();
  double direct = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    const double len = static_cast<double>(code.lengths[i]);
    r.avg_length += p[i] * len;
    if (q[i] > 0.0) {
      r.max_pointwise = std::max(r.max_pointwise, std::log2(q[i]) + len);
    }
    if (p[i] > 0.0) {
      r.entropy -= p[i] * std::log2(p[i]);
      if (q[i] > 0.0) {
        r.relative_entropy += p[i] * std::log2(p[i] / q[i]);
        direct += p[i] * (std::log2(q[i]) + len);
      } else {
        r.relative_entropy_infinite = true;
      }
    }
  }
  if (r.relative_entropy_infinite) {
    r.relative_entropy = std::numeric_limits<double>::infinity();
    r.avg_excess = -std::numeric_limits<double>::infinity();
  } else {
    r.avg_excess = r.avg_length - r.entropy - r.relative_entropy;
    r.identity_residual = std::abs(r.avg_excess - direct);
  }
  return r;
}

// Decision tree for locating one target: each internal node asks whether the
// target lies in its yes-child's element set.
struct GroupTestNode {
  std::vector<std::size_t> elements;
  NodeId yes = kNoNode;
  NodeId no = kNoNode;

  bool is_leaf() const { return yes == kNoNode; }
};

struct GroupTestPlan {
  // Children precede parents; the root is last.
  std::vector<GroupTestNode> nodes;

  NodeId root() const { return static_cast<NodeId>(nodes.size() - 1); }

  // Number of queries needed to isolate each element.
  std::vector<std::int64_t> depths(std::size_t elements) const {
    std::vector<std::int64_t> node_depth(nodes.size(), 0);
    std::vector<std::int64_t> out(elements, 0);
    for (std::size_t i = nodes.size(); i-- > 0;) {
      const auto& node = nodes[i];
      if (node.is_leaf()) {
        out[node.elements.front()] = node_depth[i];
      } else {
        node_depth[node.yes] = node_depth[i] + 1;
        node_depth[node.no] = node_depth[i] + 1;
      }
    }
    return out;
  }

  double expected_checks(const Distribution& p) const {
    const auto d = depths(p.size());
    double total = 0.0;
    for (std::size_t i = 0; i < p.size(); ++i) {
      total += p[i] * static_cast<double>(d[i]);
    }
    return total;
  }
};

// The code tree of a canonical prefix code as a query plan; the yes branch
// is the 0 bit.
inline GroupTestPlan plan_from_code(const PrefixCode& code) {
  const auto order = PrefixCode::canonical_order(code.lengths);
  std::vector<std::int64_t> sorted(order.size());
  for (std::size_t r = 0; r < order.size(); ++r) sorted[r] = code.lengths[order[r]];
  const std::vector<double> unused(order.size(), 0.0);
  const auto shape = tree_from_sorted_depths<double>(sorted, unused);

  GroupTestPlan plan;
  plan.nodes.resize(shape.node_count());
  for (std::size_t i = 0; i < shape.node_count(); ++i) {
    const auto& node = shape.node(static_cast<NodeId>(i));
    GroupTestNode& out = plan.nodes[i];
    if (node.is_leaf()) {
      out.elements = {order[node.leaf_index]};
    } else {
      out.yes = node.left;
      out.no = node.right;
      out.elements = plan.nodes[node.left].elements;
      const auto& rest = plan.nodes[node.right].elements;
      out.elements.insert(out.elements.end(), rest.begin(), rest.end());
    }
  }
  return plan;
}

inline GroupTestPlan group_test_plan(const Distribution& q) {
  return plan_from_code(minimax_code(q));
}

inline std::string encode(const PrefixCode& code,
                          std::span<const std::size_t> symbols) {
  std::string bits;
  for (std::size_t s : symbols) {
    if (s >= code.size()) throw std::out_of_range("symbol outside the code");
    bits += code.codewords[s];
  }
  return bits;
}

inline std::vector<std::size_t> decode(const PrefixCode& code,
                                       std::string_view bits) {
  if (code.size() < 2) {
    throw std::invalid_argument("a one-symbol code carries no information");
  }
  struct TrieNode {
    std::int64_t child[2] = {-1, -1};
    std::int64_t symbol = -1;
  };
  std::vector<TrieNode> trie(1);
  for (std::size_t s = 0; s < code.size(); ++s) {
    std::size_t at = 0;
    for (char c : code.codewords[s]) {
      const int b = c == '1';
      if (trie[at].child[b] < 0) {
        trie[at].child[b] = static_cast<std::int64_t>(trie.size());
        trie.emplace_back();
      }
      at = static_cast<std::size_t>(trie[at].child[b]);
    }
    trie[at].symbol = static_cast<std::int64_t>(s);
  }
  std::vector<std::size_t> out;
  std::size_t at = 0;
  for (char c : bits) {
    if (c != '0' && c != '1') throw std::invalid_argument("bits must be 0 or 1");
    const std::int64_t next = trie[at].child[c == '1'];
    if (next < 0) throw std::invalid_argument("bit string is not decodable");
    at = static_cast<std::size_t>(next);
    if (trie[at].symbol >= 0) {
      out.push_back(static_cast<std::size_t>(trie[at].symbol));
      at = 0;
    }
  }
  if (at != 0) throw std::invalid_argument("bit string ends mid-codeword");
  return out;
}

}  // namespace mxt

#endif  // MXT_CODING_HPP_
