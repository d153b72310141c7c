#pragma once

// In-place perfect shuffle by the cycle-leader method.
//
// A block of length 3^t - 1 under the in-shuffle map p -> 2p mod 3^t splits
// into exactly t cycles, one through each power of three (2 is a primitive
// root modulo every power of three). Arbitrary even lengths are handled by
// peeling off the largest such block from the front, after a rotation that
// gathers its two halves together.

#include <cstddef>
#include <cstdint>
#include <iterator>
#include <ranges>
#include <utility>
#include <vector>

#include "common.hpp"
#include "counters.hpp"
#include "rotation.hpp"

namespace shufflemerge {
namespace detail {

// Largest power of three <= limit, for limit >= 1.
constexpr std::size_t largest_pow3_at_most(std::size_t limit) noexcept {
  std::size_t p = 1;
  while (p <= limit / 3) p *= 3;
  return p;
}

// Half of the shuffle block for a remaining half-length m: the n with
// 2n + 1 the largest power of three not exceeding 2m + 1.
constexpr std::size_t block_half(std::size_t m) noexcept {
  // 2m + 1 cannot overflow: 2m is a valid length, so it is at most SIZE_MAX - 1.
  return (largest_pow3_at_most(2 * m + 1) - 1) / 2;
}

// p -> 2p mod modulus, for 0 < p < modulus, without forming 2p.
constexpr std::size_t double_mod(std::size_t p, std::size_t modulus) noexcept {
  const std::size_t gap = modulus - p;
  return p >= gap ? p - gap : p + p;
}

// p -> p / 2 mod modulus (modulus odd), without forming p + modulus.
constexpr std::size_t halve_mod(std::size_t p, std::size_t modulus) noexcept {
  return p % 2 == 0 ? p / 2 : p / 2 + modulus / 2 + 1;
}

// Walks every cycle of a block of length 3^t - 1 (1-based positions),
// filling position `cur` from position `source(cur)`.
template <std::random_access_iterator It, class SourceOf>
std::uint64_t pull_cycles(It block, std::size_t len, SourceOf source) {
  using diff = std::iter_difference_t<It>;
  const std::size_t modulus = len + 1;
  std::uint64_t moves = 0;
  for (std::size_t leader = 1; leader < modulus; leader *= 3) {
    auto held = std::move(block[static_cast<diff>(leader - 1)]);
    ++moves;
    std::size_t cur = leader;
    for (;;) {
      const std::size_t from = source(cur, modulus);
      if (from == leader) break;
      block[static_cast<diff>(cur - 1)] = std::move(block[static_cast<diff>(from - 1)]);
      ++moves;
      cur = from;
    }
    block[static_cast<diff>(cur - 1)] = std::move(held);
    ++moves;
  }
  return moves;
}

template <std::random_access_iterator It>
std::uint64_t in_shuffle_counted(It first, It last) {
  using diff = std::iter_difference_t<It>;
  const auto len = static_cast<std::size_t>(last - first);
  SHUFFLEMERGE_EXPECTS(len % 2 == 0, "in-shuffle requires an even-length span");
  std::uint64_t moves = 0;
  std::size_t m = len / 2;
  while (m > 0) {
    const std::size_t h = block_half(m);
    // x_{h+1..m} y_{1..h} -> y_{1..h} x_{h+1..m}
    if (h < m) {
      moves += rotate_right_counted(first + static_cast<diff>(h),
                                    first + static_cast<diff>(m + h), h);
    }
    // Element at p goes to 2p, so position p is filled from p/2.
    moves += pull_cycles(first, 2 * h, halve_mod);
    first += static_cast<diff>(2 * h);
    m -= h;
  }
  return moves;
}

// Exact inverse of in_shuffle_counted. The forward pass is a sequence of
// (rotate, cycle-block) pairs where each cycle block is disjoint from every
// later operation, so the inverse undoes all blocks first and then the
// rotations in reverse order. Block boundaries are recomputed rather than
// stored to keep the working set at a few words.
template <std::random_access_iterator It>
std::uint64_t in_unshuffle_counted(It first, It last) {
  using diff = std::iter_difference_t<It>;
  const auto len = static_cast<std::size_t>(last - first);
  SHUFFLEMERGE_EXPECTS(len % 2 == 0, "in-unshuffle requires an even-length span");
  std::uint64_t moves = 0;

  std::size_t blocks = 0;
  {
    std::size_t m = len / 2;
    std::size_t offset = 0;
    while (m > 0) {
      const std::size_t h = block_half(m);
      moves += pull_cycles(first + static_cast<diff>(offset), 2 * h, double_mod);
      offset += 2 * h;
      m -= h;
      ++blocks;
    }
  }

  while (blocks-- > 0) {
    std::size_t m = len / 2;
    std::size_t offset = 0;
    for (std::size_t b = 0; b < blocks; ++b) {
      const std::size_t h = block_half(m);
      offset += 2 * h;
      m -= h;
    }
    const std::size_t h = block_half(m);
    if (h < m) {
      // y_{1..h} x_{h+1..m} -> x_{h+1..m} y_{1..h}
      moves += rotate_right_counted(first + static_cast<diff>(offset + h),
                                    first + static_cast<diff>(offset + m + h), m - h);
    }
  }
  return moves;
}

// Interior of the ends-fixed alternation: drop the first element, and the
// last one too when the length is even.
template <std::random_access_iterator It>
std::pair<It, It> shuffle_interior(It first, It last) {
  const auto len = static_cast<std::size_t>(last - first);
  return {first + 1, len % 2 == 0 ? last - 1 : last};
}

}  // namespace detail

/// True in-shuffle of an even-length span: x1..xm y1..ym becomes
/// y1 x1 y2 x2 .. ym xm (1-based position p moves to 2p mod (2m+1)).
/// Throws std::invalid_argument on odd length.
template <std::random_access_iterator It>
void in_shuffle_core(It first, It last, CostCounters* counters = nullptr) {
  const auto moves = detail::in_shuffle_counted(first, last);
  if (counters != nullptr) counters->add_shuffle_moves(moves);
}

/// Interleaves the halves of [first, last): with k = ceil(len/2),
/// x1..xk y1..y(len-k) becomes x1 y1 x2 y2 ...
/// Linear time, constant extra space.
template <std::random_access_iterator It>
void interleave(It first, It last, CostCounters* counters = nullptr) {
  if (last - first <= 2) return;
  const auto [lo, hi] = detail::shuffle_interior(first, last);
  const auto moves = detail::in_shuffle_counted(lo, hi);
  if (counters != nullptr) counters->add_shuffle_moves(moves);
}

/// Inverse of interleave: odd (1-based) positions, in order, move to the
/// front ceil(len/2) slots, even positions follow.
template <std::random_access_iterator It>
void uninterleave(It first, It last, CostCounters* counters = nullptr) {
  if (last - first <= 2) return;
  const auto [lo, hi] = detail::shuffle_interior(first, last);
  const auto moves = detail::in_unshuffle_counted(lo, hi);
  if (counters != nullptr) counters->add_shuffle_moves(moves);
}

template <std::ranges::random_access_range R>
void in_shuffle_core(R&& range, Span s, CostCounters* counters = nullptr) {
  detail::check_span(range, s);
  auto first = std::ranges::begin(range) + static_cast<std::ptrdiff_t>(s.start);
  in_shuffle_core(first, first + static_cast<std::ptrdiff_t>(s.length), counters);
}

template <std::ranges::random_access_range R>
void interleave(R&& range, Span s, CostCounters* counters = nullptr) {
  detail::check_span(range, s);
  auto first = std::ranges::begin(range) + static_cast<std::ptrdiff_t>(s.start);
  interleave(first, first + static_cast<std::ptrdiff_t>(s.length), counters);
}

template <std::ranges::random_access_range R>
void uninterleave(R&& range, Span s, CostCounters* counters = nullptr) {
  detail::check_span(range, s);
  auto first = std::ranges::begin(range) + static_cast<std::ptrdiff_t>(s.start);
  uninterleave(first, first + static_cast<std::ptrdiff_t>(s.length), counters);
}

// Buffered reference versions. They allocate a scratch copy of the span and
// exist for cross-checking the in-place routines.

template <std::ranges::random_access_range R>
void oracle_interleave(R&& range, Span s) {
  detail::check_span(range, s);
  auto first = std::ranges::begin(range) + static_cast<std::ptrdiff_t>(s.start);
  std::vector<std::ranges::range_value_t<R>> scratch(first, first + static_cast<std::ptrdiff_t>(s.length));
  const std::size_t k = (s.length + 1) / 2;
  for (std::size_t t = 0; t < s.length; ++t) {
    first[static_cast<std::ptrdiff_t>(t)] = t % 2 == 0 ? scratch[t / 2] : scratch[k + t / 2];
  }
}

template <std::ranges::random_access_range R>
void oracle_uninterleave(R&& range, Span s) {
  detail::check_span(range, s);
  auto first = std::ranges::begin(range) + static_cast<std::ptrdiff_t>(s.start);
  std::vector<std::ranges::range_value_t<R>> scratch(first, first + static_cast<std::ptrdiff_t>(s.length));
  const std::size_t k = (s.length + 1) / 2;
  for (std::size_t t = 0; t < s.length; ++t) {
    const std::size_t dest = t % 2 == 0 ? t / 2 : k + t / 2;
    first[static_cast<std::ptrdiff_t>(dest)] = scratch[t];
  }
}

}  // namespace shufflemerge
