#pragma once

// Inner merge engine for two equal-length sorted runs.
//
// The window is first interleaved, then consumed from the travel start.
// At every loop boundary it is split into three consecutive parts (in
// travel order):
//
//   S  = [0, i)     finished output
//   P  = [i, j)     sorted, single-origin buffer (origin tracked by a flag)
//   Sh = [j, size)  2-ordered remainder of the interleave
//
// The left-going engine is the same loop run over reverse iterators with the
// ordering flipped, so "travel order" is right-to-left in memory there.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <iterator>
#include <utility>

#include "common.hpp"
#include "counters.hpp"
#include "perfect_shuffle.hpp"
#include "rotation.hpp"

namespace shufflemerge {

enum class Direction : unsigned char { rightgoing, leftgoing };

/// How the scanned prefix D is cut when every odd element of Sh passes and
/// |Sh| is odd. `clipped` lets D take all of Sh; `even_only` keeps D even
/// and is known to be incorrect (test toggle only).
enum class ScanRule : unsigned char { clipped, even_only };

enum class StepBranch : unsigned char { extract_from_p, singleton_sh, scan_rotate };

struct MergeOptions {
  CostCounters* counters = nullptr;
  ScanRule scan_rule = ScanRule::clipped;
};

/// Live state of one inner merge, in travel order.
template <std::random_access_iterator It>
struct MergeState {
  It first;              // travel-order start of the window
  std::size_t size = 0;  // window length
  std::size_t i = 0;     // start of P
  std::size_t j = 0;     // start of Sh
  Origin origin = Origin::left;  // origin of every element of P
  Direction direction = Direction::rightgoing;

  std::size_t s_size() const noexcept { return i; }
  std::size_t p_size() const noexcept { return j - i; }
  std::size_t sh_size() const noexcept { return size - j; }

  decltype(auto) at(std::size_t k) const { return first[static_cast<std::iter_difference_t<It>>(k)]; }
  It iter(std::size_t k) const { return first + static_cast<std::iter_difference_t<It>>(k); }
};

/// Result of an inner merge: the final buffer P (offsets relative to the
/// window's memory start) and the origin of its elements.
struct MergeResult {
  Span p;
  Origin origin = Origin::left;
};

/// Origin whose elements come first among equal keys when read in travel
/// order.
constexpr Origin leading_origin(Direction d) noexcept {
  return d == Direction::rightgoing ? Origin::left : Origin::right;
}

/// Whether an odd-position Sh element must be emitted ahead of every current
/// P element. `origin` is the origin of P; the Sh element has the other one.
/// Ties favor the left-origin element.
template <class Less, class Key>
bool should_extract(const Key& sh_key, const Key& p_key, Origin origin, Less&& less) {
  return origin == Origin::left ? less(sh_key, p_key) : !less(p_key, sh_key);
}

namespace detail {

// Strict order in travel direction, tallying each predicate call.
template <class Less>
struct TravelOrder {
  Less& less;
  Direction direction;
  CostCounters* counters;

  template <class A, class B>
  bool operator()(const A& a, const B& b) const {
    if (counters != nullptr) ++counters->comparisons;
    return direction == Direction::rightgoing ? static_cast<bool>(less(a, b))
                                              : static_cast<bool>(less(b, a));
  }
};

// The P origin as seen by the travel-order engine: the leading origin plays
// the role of "left".
constexpr Origin travel_origin(Origin o, Direction d) noexcept {
  return d == Direction::rightgoing ? o : complement(o);
}

}  // namespace detail

/// Number of leading odd-position Sh elements (1st, 3rd, ...) that must
/// precede P[1]. At most one failing comparison is made.
template <std::random_access_iterator It, class Less>
std::size_t scan(const MergeState<It>& st, Less less, const MergeOptions& opts = {}) {
  const detail::TravelOrder<Less> order{less, st.direction, opts.counters};
  const Origin origin = detail::travel_origin(st.origin, st.direction);
  const auto& head = st.at(st.i);
  std::size_t r = 0;
  for (std::size_t k = st.j; k < st.size; k += 2) {
    if (!should_extract(st.at(k), head, origin, order)) break;
    ++r;
  }
  if (opts.counters != nullptr) {
    opts.counters->scan_calls += 1;
    opts.counters->scan_r_total += r;
  }
  return r;
}

/// One iteration of the merge loop. Requires a nonempty Sh.
template <std::random_access_iterator It, class Less>
StepBranch step(MergeState<It>& st, Less less, const MergeOptions& opts = {}) {
  SHUFFLEMERGE_EXPECTS(st.j < st.size, "step called with empty Sh");
  CostCounters* const c = opts.counters;
  const detail::TravelOrder<Less> order{less, st.direction, c};
  const Origin origin = detail::travel_origin(st.origin, st.direction);

  StepBranch branch;
  std::size_t r = 0;
  if (!should_extract(st.at(st.j), st.at(st.i), origin, order)) {
    branch = StepBranch::extract_from_p;
    ++st.i;
    if (st.i == st.j) {
      ++st.j;
      st.origin = complement(st.origin);
    }
  } else if (st.sh_size() == 1) {
    branch = StepBranch::singleton_sh;
    r = 1;
    rotate_right(st.iter(st.i), st.iter(st.j + 1), 1, c);
    ++st.i;
    ++st.j;
  } else {
    branch = StepBranch::scan_rotate;
    r = scan(st, less, opts);
    std::size_t d = std::min(2 * r, st.sh_size());
    if (opts.scan_rule == ScanRule::even_only && d % 2 == 1) {
      r = d / 2;
      d = 2 * r;
    }
    uninterleave(st.iter(st.j), st.iter(st.j + d), c);
    rotate_right(st.iter(st.i), st.iter(st.j + r), r, c);
    // P[1] may only join S when a failing odd element of Sh proves that
    // something outside S follows it. If D used up Sh there is no such
    // witness, and a trimmed piece of the right run outside this window
    // may still precede P[1], so P[1] stays in P.
    const bool exhausted = st.j + d == st.size;
    st.i += exhausted ? r : r + 1;
    st.j += d;
  }

  if (c != nullptr) {
    c->loop_iterations += 1;
    c->histogram_r[CostCounters::bucket(r)] += 1;
    c->histogram_pb[CostCounters::bucket(st.p_size())] += 1;
  }
  return branch;
}

struct NoObserver {
  template <class State>
  void operator()(const State&) const noexcept {}
};

namespace detail {

template <std::random_access_iterator It, class Less, class Observer>
MergeState<It> run_inner_merge(It first, std::size_t size, Less& less, Origin origin0,
                               Direction direction, const MergeOptions& opts,
                               Observer& observer) {
  interleave(first, first + static_cast<std::iter_difference_t<It>>(size), opts.counters);
  MergeState<It> st{first, size, 0, 1, origin0, direction};
  observer(std::as_const(st));
  while (st.j < st.size) {
    step(st, less, opts);
    observer(std::as_const(st));
  }
  return st;
}

}  // namespace detail

/// Merges the equal-length sorted runs [first, middle) and [middle, last),
/// scanning left to right. On return, [first, first + p.start) holds the
/// stable merge of everything except P, and P = [p.start, last - first) is a
/// sorted run of origin `origin` whose elements all follow that prefix.
///
/// `origin0` is the origin of the left run's elements; the observer is called
/// with the MergeState after the interleave and after every step.
template <std::random_access_iterator It, class Less, class Observer = NoObserver>
MergeResult right_going_merge(It first, It middle, It last, Less less,
                              Origin origin0 = Origin::left, const MergeOptions& opts = {},
                              Observer&& observer = {}) {
  const auto size = static_cast<std::size_t>(last - first);
  SHUFFLEMERGE_EXPECTS(middle - first == last - middle, "inner merge needs equal-length runs");
  SHUFFLEMERGE_EXPECTS(size > 0, "inner merge needs nonempty runs");
  const auto st = detail::run_inner_merge(first, size, less, origin0, Direction::rightgoing,
                                          opts, observer);
  return {Span{st.i, size - st.i}, st.origin};
}

/// Mirror of right_going_merge: output grows leftward from `last`, and the
/// final P sits at the low end of the window, [0, p.length). `origin0` is the
/// origin of the right run's elements.
template <std::random_access_iterator It, class Less, class Observer = NoObserver>
MergeResult left_going_merge(It first, It middle, It last, Less less,
                             Origin origin0 = Origin::right, const MergeOptions& opts = {},
                             Observer&& observer = {}) {
  const auto size = static_cast<std::size_t>(last - first);
  SHUFFLEMERGE_EXPECTS(middle - first == last - middle, "inner merge needs equal-length runs");
  SHUFFLEMERGE_EXPECTS(size > 0, "inner merge needs nonempty runs");
  const auto st = detail::run_inner_merge(std::make_reverse_iterator(last), size, less, origin0,
                                          Direction::leftgoing, opts, observer);
  return {Span{0, size - st.i}, st.origin};
}

}  // namespace shufflemerge
