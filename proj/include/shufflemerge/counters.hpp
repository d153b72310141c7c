#pragma once

#include <array>
#include <cstddef>
#include <cstdint>

namespace shufflemerge {

/// Operation tallies for one merge or sort invocation.
///
/// Unit of movement is one element placement; a swap is two placements.
/// Counters are passed explicitly by pointer; a null pointer disables
/// counting altogether.
struct CostCounters {
  // Buckets 0..histogram_cap, plus one overflow bucket at the end.
  static constexpr std::size_t histogram_cap = 64;
  using Histogram = std::array<std::uint64_t, histogram_cap + 2>;

  std::uint64_t comparisons = 0;
  std::uint64_t element_moves = 0;
  std::uint64_t rotation_calls = 0;
  std::uint64_t rotated_length_total = 0;
  std::uint64_t scan_calls = 0;
  std::uint64_t scan_r_total = 0;
  std::uint64_t shuffle_moves = 0;
  std::uint64_t outer_iterations = 0;
  std::uint64_t loop_iterations = 0;

  // Per loop iteration: the r consumed by that iteration (0 when P[1] was
  // emitted, 1 for the single-element rotation, the scan result otherwise).
  Histogram histogram_r{};
  // Per loop iteration: |P| at the bottom of the iteration.
  Histogram histogram_pb{};

  static constexpr std::size_t bucket(std::uint64_t value) noexcept {
    return value <= histogram_cap ? static_cast<std::size_t>(value) : histogram_cap + 1;
  }

  void add_moves(std::uint64_t n) noexcept { element_moves += n; }
  void add_shuffle_moves(std::uint64_t n) noexcept {
    element_moves += n;
    shuffle_moves += n;
  }

  CostCounters& operator+=(const CostCounters& o) noexcept {
    comparisons += o.comparisons;
    element_moves += o.element_moves;
    rotation_calls += o.rotation_calls;
    rotated_length_total += o.rotated_length_total;
    scan_calls += o.scan_calls;
    scan_r_total += o.scan_r_total;
    shuffle_moves += o.shuffle_moves;
    outer_iterations += o.outer_iterations;
    loop_iterations += o.loop_iterations;
    for (std::size_t k = 0; k < histogram_r.size(); ++k) {
      histogram_r[k] += o.histogram_r[k];
      histogram_pb[k] += o.histogram_pb[k];
    }
    return *this;
  }

  friend bool operator==(const CostCounters&, const CostCounters&) = default;
};

/// Runs `fn(counters)` with a fresh counter block and returns the snapshot.
template <class Fn>
CostCounters with_counters(Fn&& fn) {
  CostCounters c;
  fn(c);
  return c;
}

}  // namespace shufflemerge
