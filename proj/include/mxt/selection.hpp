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

#ifndef MXT_SELECTION_HPP_
#define MXT_SELECTION_HPP_

#include <algorithm>
#include <cstddef>
#include <functional>
#include <span>
#include <stdexcept>
#include <utility>

namespace mxt {

namespace detail {

template <class T, class Less>
void insertion_sort(std::span<T> data, Less& less) {
  for (std::size_t i = 1; i < data.size(); ++i) {
    for (std::size_t j = i; j > 0 && less(data[j], data[j - 1]); --j) {
      std::swap(data[j], data[j - 1]);
    }
  }
}

}  // namespace detail

// Deterministic worst-case linear selection (median of medians, groups of
// five). Rearranges data so that data[k] holds the element a full sort would
// put there; elements are three-way partitioned around it.
template <class T, class Less = std::less<T>>
void select_nth(std::span<T> data, std::size_t k, Less less = {}) {
  if (k >= data.size()) throw std::out_of_range("selection rank out of range");
  for (;;) {
    const std::size_t n = data.size();
    if (n <= 10) {
      detail::insertion_sort(data, less);
      return;
    }

    std::size_t medians = 0;
    for (std::size_t i = 0; i < n; i += 5) {
      const std::size_t len = std::min<std::size_t>(5, n - i);
      detail::insertion_sort(data.subspan(i, len), less);
      std::swap(data[medians++], data[i + (len - 1) / 2]);
    }
    const std::size_t mid = (medians - 1) / 2;
    select_nth(data.first(medians), mid, less);
    const T pivot = data[mid];

    // [0, lt) < pivot, [lt, i) == pivot, (gt, n) > pivot.
    std::size_t lt = 0;
    std::size_t i = 0;
    std::size_t gt = n;
    while (i < gt) {
      if (less(data[i], pivot)) {
        std::swap(data[lt++], data[i++]);
      } else if (less(pivot, data[i])) {
        std::swap(data[i], data[--gt]);
      } else {
        ++i;
      }
    }

    if (k < lt) {
      data = data.first(lt);
    } else if (k < gt) {
      return;
    } else {
      k -= gt;
      data = data.subspan(gt);
    }
  }
}

}  // namespace mxt

#endif  // MXT_SELECTION_HPP_
