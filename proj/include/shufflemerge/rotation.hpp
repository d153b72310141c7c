#pragma once

#include <cstddef>
#include <cstdint>
#include <iterator>
#include <ranges>

#include "common.hpp"
#include "counters.hpp"

namespace shufflemerge {
namespace detail {

template <std::random_access_iterator It>
std::uint64_t reverse_counted(It first, It last) {
  std::uint64_t moves = 0;
  while (first < last && first < --last) {
    std::iter_swap(first, last);
    ++first;
    moves += 2;
  }
  return moves;
}

// Triple-reversal right rotation; returns element placements performed.
template <std::random_access_iterator It>
std::uint64_t rotate_right_counted(It first, It last, std::size_t r) {
  const auto n = static_cast<std::size_t>(last - first);
  if (n == 0) return 0;
  r %= n;
  if (r == 0) return 0;
  const auto cut = first + static_cast<std::iter_difference_t<It>>(r);
  return reverse_counted(first, last) + reverse_counted(first, cut) +
         reverse_counted(cut, last);
}

}  // namespace detail

/// Circular shift of [first, last) to the right by r: the element at offset t
/// ends up at (t + r) mod length. Constant extra space, at most 2*length
/// placements.
template <std::random_access_iterator It>
void rotate_right(It first, It last, std::size_t r, CostCounters* counters = nullptr) {
  const auto moves = detail::rotate_right_counted(first, last, r);
  if (counters != nullptr) {
    counters->add_moves(moves);
    counters->rotation_calls += 1;
    counters->rotated_length_total += static_cast<std::uint64_t>(last - first);
  }
}

/// Mirror of rotate_right: offset t moves to (t - r) mod length.
template <std::random_access_iterator It>
void rotate_left(It first, It last, std::size_t r, CostCounters* counters = nullptr) {
  const auto n = static_cast<std::size_t>(last - first);
  rotate_right(first, last, n == 0 ? 0 : n - r % n, counters);
}

template <std::ranges::random_access_range R>
void rotate_right(R&& range, Span s, std::size_t r, CostCounters* counters = nullptr) {
  detail::check_span(range, s);
  auto first = std::ranges::begin(range) + static_cast<std::ptrdiff_t>(s.start);
  rotate_right(first, first + static_cast<std::ptrdiff_t>(s.length), r, counters);
}

template <std::ranges::random_access_range R>
void rotate_left(R&& range, Span s, std::size_t r, CostCounters* counters = nullptr) {
  detail::check_span(range, s);
  auto first = std::ranges::begin(range) + static_cast<std::ptrdiff_t>(s.start);
  rotate_left(first, first + static_cast<std::ptrdiff_t>(s.length), r, counters);
}

}  // namespace shufflemerge
