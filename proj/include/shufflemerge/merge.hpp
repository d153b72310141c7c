#pragma once

#include <cassert>
#include <cstddef>
#include <functional>
#include <iterator>
#include <ranges>

#include "common.hpp"
#include "counters.hpp"
#include "merge_core.hpp"

namespace shufflemerge {

/// Stable in-place merge of the adjacent sorted runs [first, middle) and
/// [middle, last). Either run may be empty.
///
/// Runs of unequal length are handled by trimming the longer run to the
/// length of the shorter, merging the equal-length part with the inner
/// engine (left-going when the left run was trimmed), and repeating on the
/// leftover buffer and the trimmed piece when their origins differ.
///
/// Uses a constant number of index words and performs no allocation.
/// Worst case quadratic. On uniform random inputs the leftover buffer grows
/// like sqrt(n), so the measured average is about n^1.5, not linear.
template <std::random_access_iterator It, class Less = std::less<>, class Observer = NoObserver>
void merge(It first, It middle, It last, Less less = {}, const MergeOptions& opts = {},
           Observer&& observer = {}) {
  using diff = std::iter_difference_t<It>;
  It lo = first;
  It mid = middle;
  It hi = last;
  [[maybe_unused]] diff measure = hi - lo;

  for (;;) {
    const diff left = mid - lo;
    const diff right = hi - mid;
    if (left == 0 || right == 0) return;
    if (opts.counters != nullptr) opts.counters->outer_iterations += 1;

    if (right > left) {
      // Trim suffix T = [mid + left, hi) from the right run.
      It cut = mid + left;
      const auto res = right_going_merge(lo, mid, cut, less, Origin::left, opts, observer);
      if (res.origin != Origin::left) return;
      lo += static_cast<diff>(res.p.start);
      mid = cut;
    } else if (left > right) {
      // Trim prefix T = [lo, mid - right) from the left run.
      It cut = mid - right;
      const auto res = left_going_merge(cut, mid, hi, less, Origin::right, opts, observer);
      if (res.origin != Origin::right) return;
      mid = cut;
      hi = cut + static_cast<diff>(res.p.length);
    } else {
      right_going_merge(lo, mid, hi, less, Origin::left, opts, observer);
      return;
    }

    assert(hi - lo < measure);
    measure = hi - lo;
  }
}

/// Range convenience: merges range[0, middle) with range[middle, size).
template <std::ranges::random_access_range R, class Less = std::less<>>
void merge(R&& range, std::size_t middle, Less less = {}, const MergeOptions& opts = {}) {
  auto first = std::ranges::begin(range);
  const auto size = static_cast<std::size_t>(std::ranges::size(range));
  SHUFFLEMERGE_EXPECTS(middle <= size, "merge split point past end of range");
  merge(first, first + static_cast<std::ptrdiff_t>(middle),
        first + static_cast<std::ptrdiff_t>(size), less, opts);
}

/// Stable in-place bottom-up merge sort: run widths 1, 2, 4, ... with no
/// recursion and no allocation.
template <std::random_access_iterator It, class Less = std::less<>>
void sort(It first, It last, Less less = {}, const MergeOptions& opts = {}) {
  const auto n = static_cast<std::size_t>(last - first);
  for (std::size_t width = 1; width < n; width = width > n / 2 ? n : width * 2) {
    for (std::size_t lo = 0; lo + width < n; lo += 2 * width) {
      const std::size_t hi = n - lo > 2 * width ? lo + 2 * width : n;
      merge(first + static_cast<std::ptrdiff_t>(lo), first + static_cast<std::ptrdiff_t>(lo + width),
            first + static_cast<std::ptrdiff_t>(hi), less, opts);
    }
  }
}

template <std::ranges::random_access_range R, class Less = std::less<>>
void sort(R&& range, Less less = {}, const MergeOptions& opts = {}) {
  sort(std::ranges::begin(range), std::ranges::end(range), less, opts);
}

}  // namespace shufflemerge
