#pragma once

// Diagnostic checks for the inner merge loop invariant. These need the true
// origin of every element, which the engine itself never stores, so callers
// supply it through `origin_of` (typically from a tagged element type).

#include <cstddef>
#include <optional>

#include "merge_core.hpp"

namespace shufflemerge {

enum class Invariant : unsigned char {
  p_nonempty,           // P has at least one element
  sorted_prefix,        // S ascending and nothing in S follows P or Sh
  uniform_buffer,       // P ascending and all of the flagged origin
  two_ordered_tail,     // Sh 2-ordered, odd/even positions of opposite origins
  buffer_precedes_tail, // P precedes every same-origin element of Sh
  heads_differ,         // P[1] and Sh[1] have different origins
};

constexpr const char* to_string(Invariant inv) noexcept {
  switch (inv) {
    case Invariant::p_nonempty: return "p_nonempty";
    case Invariant::sorted_prefix: return "sorted_prefix";
    case Invariant::uniform_buffer: return "uniform_buffer";
    case Invariant::two_ordered_tail: return "two_ordered_tail";
    case Invariant::buffer_precedes_tail: return "buffer_precedes_tail";
    case Invariant::heads_differ: return "heads_differ";
  }
  return "unknown";
}

/// Returns the first violated invariant, or nullopt if all hold.
template <std::random_access_iterator It, class Less, class OriginOf>
std::optional<Invariant> first_violation(const MergeState<It>& st, Less less, OriginOf origin_of) {
  const Origin lead = leading_origin(st.direction);
  auto ordered = [&](const auto& a, const auto& b) {
    return st.direction == Direction::rightgoing ? static_cast<bool>(less(a, b))
                                                 : static_cast<bool>(less(b, a));
  };
  // Strict stable order in travel direction.
  auto before = [&](const auto& a, const auto& b) {
    if (ordered(a, b)) return true;
    if (ordered(b, a)) return false;
    return origin_of(a) == lead && origin_of(b) != lead;
  };
  auto not_after = [&](const auto& a, const auto& b) { return !before(b, a); };

  if (!(st.i < st.j && st.j <= st.size)) return Invariant::p_nonempty;

  for (std::size_t k = 1; k < st.i; ++k) {
    if (!not_after(st.at(k - 1), st.at(k))) return Invariant::sorted_prefix;
  }
  if (st.i > 0) {
    const auto& last_s = st.at(st.i - 1);
    for (std::size_t k = st.i; k < st.size; ++k) {
      if (!not_after(last_s, st.at(k))) return Invariant::sorted_prefix;
    }
  }

  for (std::size_t k = st.i; k < st.j; ++k) {
    if (origin_of(st.at(k)) != st.origin) return Invariant::uniform_buffer;
    if (k > st.i && !not_after(st.at(k - 1), st.at(k))) return Invariant::uniform_buffer;
  }

  for (std::size_t k = st.j; k < st.size; ++k) {
    if (k >= st.j + 2 && !not_after(st.at(k - 2), st.at(k))) return Invariant::two_ordered_tail;
    if (k >= st.j + 1 && origin_of(st.at(k - 1)) == origin_of(st.at(k))) {
      return Invariant::two_ordered_tail;
    }
  }

  const auto& last_p = st.at(st.j - 1);
  for (std::size_t k = st.j; k < st.size; ++k) {
    if (origin_of(st.at(k)) == st.origin && !not_after(last_p, st.at(k))) {
      return Invariant::buffer_precedes_tail;
    }
  }

  if (st.j < st.size && origin_of(st.at(st.j)) == origin_of(st.at(st.i))) {
    return Invariant::heads_differ;
  }
  return std::nullopt;
}

/// True iff every loop invariant holds for `st`.
template <std::random_access_iterator It, class Less, class OriginOf>
bool check_invariants(const MergeState<It>& st, Less less, OriginOf origin_of) {
  return !first_violation(st, less, origin_of).has_value();
}

}  // namespace shufflemerge
