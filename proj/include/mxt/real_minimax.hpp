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

// Minimax trees for real weights in linear time.
//
// The weights are shifted so that they become log2 of a probability
// distribution. Each |w_j| splits into an integer part and a fractional part
// x_j. The tree depths come from rounding |w_j| down for every j with
// x_j <= x* and up otherwise, where x* is the largest candidate in
// {x_j} + {0} whose rounded depths still satisfy the Kraft inequality. x* is
// found by repeatedly halving the candidate set around its median, with the
// Kraft sums kept in two exact fixed-point accumulators: `accepted` holds
// the sum for the largest threshold accepted so far and `window` holds the
// extra mass contributed by the candidates up to the current median.

#ifndef MXT_REAL_MINIMAX_HPP_
#define MXT_REAL_MINIMAX_HPP_

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

#include "mxt/core.hpp"
#include "mxt/integer_minimax.hpp"
#include "mxt/kraft.hpp"
#include "mxt/selection.hpp"

namespace mxt {

struct NormalizedWeights {
  // w_i + shift_c, each <= 0, with sum 2^shifted_i == 1 up to rounding.
  std::vector<double> shifted;
  double shift_c = 0.0;
  std::vector<double> original;
};

inline NormalizedWeights normalize(const RealWeightMultiset& w) {
  const auto values = w.values();
  const double top = *std::max_element(values.begin(), values.end());
  double sum = 0.0;
  for (double v : values) sum += std::exp2(v - top);
  const double log_sum = std::log2(sum);

  NormalizedWeights out;
  out.original.assign(values.begin(), values.end());
  out.shift_c = -(top + log_sum);
  out.shifted.resize(values.size());
  for (std::size_t i = 0; i < values.size(); ++i) {
    out.shifted[i] = std::min(0.0, (values[i] - top) - log_sum);
  }
  return out;
}

struct FractionalDecomposition {
  std::vector<std::int64_t> floor_part;
  std::vector<std::int64_t> ceil_part;
  // |w_j| - floor(|w_j|), in [0, 1).
  std::vector<double> frac;

  std::size_t size() const { return frac.size(); }
};

// Splits every |w_j| into integer and fractional parts. Depths beyond n - 1
// never matter, so any |w_j| > n - 1 is pinned to n - 1 with no fractional
// part. With n > 1 every leaf sits at depth >= 1, so a weight that rounded
// to exactly 0 is pinned to 1.
inline FractionalDecomposition decompose(const NormalizedWeights& norm) {
  const std::size_t n = norm.shifted.size();
  FractionalDecomposition d;
  d.floor_part.resize(n);
  d.ceil_part.resize(n);
  d.frac.resize(n);
  const double cap = static_cast<double>(n) - 1.0;
  for (std::size_t j = 0; j < n; ++j) {
    const double a = -norm.shifted[j];
    std::int64_t fl = 0;
    double x = 0.0;
    if (n == 1) {
      fl = 0;
    } else if (a > cap) {
      fl = static_cast<std::int64_t>(n - 1);
    } else {
      const double f = std::floor(a);
      fl = static_cast<std::int64_t>(f);
      x = a - f;
      if (x >= 1.0) {
        x = 0.0;
        ++fl;
      }
      if (fl == 0 && x == 0.0) fl = 1;
    }
    d.floor_part[j] = fl;
    d.frac[j] = x;
    d.ceil_part[j] = x > 0.0 ? fl + 1 : fl;
  }
  return d;
}

struct SelectionStats {
  std::size_t rounds = 0;
  // Sum of |X_r| over all rounds.
  std::size_t candidates_examined = 0;
  std::size_t invariant_checks = 0;
};

struct SelectionOptions {
  // Recompute the accepted-sum invariant from scratch every round and throw
  // std::logic_error on mismatch.
  bool check_invariant = false;
  SelectionStats* stats = nullptr;
};

struct ThresholdResult {
  double x_star = 0.0;
  std::vector<std::int64_t> lengths;
};

namespace detail {

struct Candidate {
  double x;
  // Weight position, or kNoNode for the extra zero candidate.
  NodeId index;
};

inline FixedPointFraction accepted_sum_from_scratch(
    const FractionalDecomposition& d, std::size_t capacity, double window_min) {
  FixedPointFraction s(capacity);
  for (std::size_t j = 0; j < d.size(); ++j) {
    s.add_pow2(static_cast<std::size_t>(d.ceil_part[j]));
    if (d.frac[j] > 0.0 && d.frac[j] < window_min) {
      s.add_pow2(static_cast<std::size_t>(d.ceil_part[j]));
    }
  }
  return s;
}

}  // namespace detail

inline ThresholdResult select_threshold(const FractionalDecomposition& d,
                                        SelectionOptions options = {}) {
  const std::size_t n = d.size();
  SelectionStats stats;
  ThresholdResult out;
  if (n <= 1) {
    out.lengths.assign(d.floor_part.begin(), d.floor_part.end());
    if (options.stats) *options.stats = stats;
    return out;
  }

  std::int64_t deepest = 1;
  for (std::int64_t c : d.ceil_part) deepest = std::max(deepest, c);
  const auto capacity = static_cast<std::size_t>(deepest);

  // accepted = sum_j 2^-ceil_j + sum_{0 < x_j < min(window)} 2^-ceil_j
  FixedPointFraction accepted(capacity);
  FixedPointFraction window(capacity);
  for (std::size_t j = 0; j < n; ++j) {
    accepted.add_pow2(static_cast<std::size_t>(d.ceil_part[j]));
  }

  std::vector<detail::Candidate> candidates;
  candidates.reserve(n + 1);
  for (std::size_t j = 0; j < n; ++j) {
    candidates.push_back({d.frac[j], static_cast<NodeId>(j)});
  }
  candidates.push_back({0.0, kNoNode});
  const auto by_x = [](const detail::Candidate& a, const detail::Candidate& b) {
    return a.x < b.x;
  };

  std::span<detail::Candidate> live(candidates);
  double best = 0.0;
  while (!live.empty()) {
    ++stats.rounds;
    stats.candidates_examined += live.size();
    if (options.check_invariant) {
      double lo = live[0].x;
      for (const auto& c : live) lo = std::min(lo, c.x);
      ++stats.invariant_checks;
      if (!(accepted == detail::accepted_sum_from_scratch(d, capacity, lo)) ||
          !window.is_zero()) {
        throw std::logic_error("threshold search invariant violated");
      }
    }

    const std::size_t mid = (live.size() - 1) / 2;
    select_nth(live, mid, by_x);
    const double median = live[mid].x;

    // Rounding x_j > 0 down doubles its term, so the extra mass is one more
    // 2^-ceil_j for each such candidate up to the median.
    for (const auto& c : live) {
      if (c.index != kNoNode && c.x > 0.0 && c.x <= median) {
        window.add_pow2(static_cast<std::size_t>(d.ceil_part[c.index]));
      }
    }

    const bool fits = pair_at_most_one(accepted, window);
    std::size_t kept = 0;
    if (fits) {
      best = median;
      accepted.merge(window);
      for (const auto& c : live) {
        if (c.x > median) live[kept++] = c;
      }
    } else {
      for (const auto& c : live) {
        if (c.x < median) live[kept++] = c;
      }
    }
    window.reset();
    live = live.first(kept);
  }

  out.x_star = best;
  out.lengths.resize(n);
  for (std::size_t j = 0; j < n; ++j) {
    out.lengths[j] = d.frac[j] <= best ? d.floor_part[j] : d.ceil_part[j];
  }
  if (options.stats) *options.stats = stats;
  return out;
}

// Linear-time minimax tree for real weights. Leaves carry the original
// weights and their input positions.
inline MinimaxTree<double> build_minimax_real(const RealWeightMultiset& w,
                                              SelectionOptions options = {}) {
  const NormalizedWeights norm = normalize(w);
  const FractionalDecomposition dec = decompose(norm);
  const ThresholdResult threshold = select_threshold(dec, options);

  std::vector<std::int64_t> integer_weights(threshold.lengths.size());
  for (std::size_t j = 0; j < integer_weights.size(); ++j) {
    integer_weights[j] = -threshold.lengths[j];
  }
  const auto tree =
      build_minimax_int(IntWeightMultiset(std::move(integer_weights)));
  // build_minimax_int keeps leaf_index equal to the input position, so each
  // leaf's rounded weight maps straight back to its own original weight.
  return tree.relabel<double>(w.values());
}

}  // namespace mxt

#endif  // MXT_REAL_MINIMAX_HPP_
