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

// Text formats read and written by the mxt tool.
//
// Weight file: one integer or decimal weight per line.
// Distribution file: `symbol<TAB>count-or-probability` per line.
// In both, `#` starts a comment and blank lines are ignored.

#ifndef MXT_IO_HPP_
#define MXT_IO_HPP_

#include <charconv>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <cstdio>
#include <istream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <system_error>
#include <type_traits>
#include <unordered_set>
#include <vector>

#include "json.hpp"
#include "mxt/core.hpp"

namespace mxt::io {

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what),
        line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

namespace detail {

inline std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

inline std::string_view strip_comment(std::string_view s) {
  const auto hash = s.find('#');
  return hash == std::string_view::npos ? s : s.substr(0, hash);
}

inline bool parse_int(std::string_view s, std::int64_t& out) {
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
  return ec == std::errc() && ptr == s.data() + s.size();
}

inline bool parse_real(std::string_view s, double& out) {
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
  return ec == std::errc() && ptr == s.data() + s.size() && std::isfinite(out);
}

}  // namespace detail

struct WeightFile {
  std::vector<double> reals;
  // Filled only when every weight is an integer.
  std::vector<std::int64_t> integers;
  bool all_integer = true;
};

inline WeightFile parse_weight_file(std::istream& in) {
  WeightFile out;
  std::string raw;
  std::size_t line = 0;
  while (std::getline(in, raw)) {
    ++line;
    const auto text = detail::trim(detail::strip_comment(raw));
    if (text.empty()) continue;
    std::int64_t i = 0;
    double r = 0.0;
    if (detail::parse_int(text, i)) {
      out.integers.push_back(i);
      out.reals.push_back(static_cast<double>(i));
    } else if (detail::parse_real(text, r)) {
      out.all_integer = false;
      out.reals.push_back(r);
    } else {
      throw ParseError(line, "not a finite number: '" + std::string(text) + "'");
    }
  }
  if (out.reals.empty()) throw ParseError(line, "no weights");
  if (!out.all_integer) out.integers.clear();
  return out;
}

struct DistFile {
  std::vector<std::string> symbols;
  std::vector<double> values;
};

inline DistFile parse_dist_file(std::istream& in) {
  DistFile out;
  std::unordered_set<std::string> seen;
  std::string raw;
  std::size_t line = 0;
  bool positive = false;
  while (std::getline(in, raw)) {
    ++line;
    std::string_view text = raw;
    if (!text.empty() && text.back() == '\r') text.remove_suffix(1);
    if (detail::trim(text).empty() || detail::trim(text).front() == '#') continue;
    const auto tab = text.find('\t');
    if (tab == std::string_view::npos) {
      throw ParseError(line, "expected symbol<TAB>value");
    }
    const std::string symbol(text.substr(0, tab));
    const auto value_text = detail::trim(detail::strip_comment(text.substr(tab + 1)));
    double value = 0.0;
    if (symbol.empty()) throw ParseError(line, "empty symbol");
    if (!detail::parse_real(value_text, value) || value < 0.0) {
      throw ParseError(line, "value must be a nonnegative number");
    }
    if (!seen.insert(symbol).second) {
      throw ParseError(line, "duplicate symbol '" + symbol + "'");
    }
    positive |= value > 0.0;
    out.symbols.push_back(symbol);
    out.values.push_back(value);
  }
  if (out.symbols.empty()) throw ParseError(line, "no symbols");
  if (!positive) throw ParseError(line, "no positive value");
  return out;
}

inline std::string format_cost(double cost) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.9f", cost);
  return buf;
}

// {"nodes": [{"weight": w, "children": [l, r]} | {"weight": w,
// "leaf_index": i}], "root": r}
template <class Weight>
nlohmann::json tree_to_json(const MinimaxTree<Weight>& tree) {
  nlohmann::json nodes = nlohmann::json::array();
  for (const auto& node : tree.nodes()) {
    nlohmann::json j;
    j["weight"] = node.weight;
    if (node.is_leaf()) {
      j["leaf_index"] = node.leaf_index;
    } else {
      j["children"] = {node.left, node.right};
    }
    nodes.push_back(std::move(j));
  }
  return {{"nodes", std::move(nodes)}, {"root", tree.root()}};
}

// Reads the JSON arena in any node order and rebuilds it children-first.
inline MinimaxTree<double> tree_from_json(const nlohmann::json& j) {
  const auto& nodes = j.at("nodes");
  const auto count = nodes.size();
  const auto root = j.at("root").get<std::int64_t>();
  if (count == 0 || root < 0 || static_cast<std::size_t>(root) >= count) {
    throw std::invalid_argument("tree JSON has no valid root");
  }
  std::vector<NodeId> new_id(count, kNoNode);
  std::vector<TreeNode<double>> out;
  std::size_t leaves = 0;
  // Iterative post-order from the root.
  std::vector<std::pair<std::size_t, bool>> stack{{static_cast<std::size_t>(root), false}};
  while (!stack.empty()) {
    const auto [id, expanded] = stack.back();
    stack.pop_back();
    const auto& node = nodes.at(id);
    if (new_id[id] != kNoNode) {
      throw std::invalid_argument("node " + std::to_string(id) +
                                  " is reachable twice");
    }
    const bool leaf = !node.contains("children");
    if (!leaf && !expanded) {
      const auto& ch = node.at("children");
      if (ch.size() != 2) throw std::invalid_argument("children must be a pair");
      stack.emplace_back(id, true);
      for (const auto& c : ch) {
        const auto cid = c.get<std::int64_t>();
        if (cid < 0 || static_cast<std::size_t>(cid) >= count) {
          throw std::invalid_argument("child index out of range");
        }
        stack.emplace_back(static_cast<std::size_t>(cid), false);
      }
      continue;
    }
    TreeNode<double> t;
    t.weight = node.at("weight").get<double>();
    if (leaf) {
      t.leaf_index = node.at("leaf_index").get<NodeId>();
      ++leaves;
    } else {
      const auto& ch = node.at("children");
      t.left = new_id[ch[0].get<std::size_t>()];
      t.right = new_id[ch[1].get<std::size_t>()];
      if (t.left == kNoNode || t.right == kNoNode) {
        throw std::invalid_argument("tree JSON contains a cycle");
      }
    }
    new_id[id] = static_cast<NodeId>(out.size());
    out.push_back(t);
  }
  return MinimaxTree<double>(std::move(out), leaves);
}

template <class Weight>
std::string tree_to_dot(const MinimaxTree<Weight>& tree) {
  std::ostringstream os;
  os.precision(17);
  os << "digraph minimax {\n";
  const auto nodes = tree.nodes();
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    const auto& node = nodes[i];
    os << "  n" << i << " [label=\"" << node.weight << "\"";
    if (node.is_leaf()) os << ", shape=box, xlabel=\"#" << node.leaf_index << "\"";
    os << "];\n";
  }
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    if (nodes[i].is_leaf()) continue;
    os << "  n" << i << " -> n" << nodes[i].left << ";\n";
    os << "  n" << i << " -> n" << nodes[i].right << ";\n";
  }
  os << "}\n";
  return os.str();
}

}  // namespace mxt::io

#endif  // MXT_IO_HPP_
