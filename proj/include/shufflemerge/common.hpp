#pragma once

#include <cstddef>
#include <ranges>
#include <stdexcept>
#include <string>

namespace shufflemerge {

// Checked precondition. Throws std::invalid_argument so callers can test
// the contract; no merge path throws once its preconditions hold.
#define SHUFFLEMERGE_EXPECTS(cond, what)                                      \
  do {                                                                        \
    if (!(cond)) {                                                            \
      throw std::invalid_argument(std::string("shufflemerge: ") + (what));   \
    }                                                                         \
  } while (false)

/// A contiguous index range [start, start + length) inside a key sequence.
struct Span {
  std::size_t start = 0;
  std::size_t length = 0;

  constexpr std::size_t end() const noexcept { return start + length; }
  constexpr bool empty() const noexcept { return length == 0; }
  friend constexpr bool operator==(const Span&, const Span&) = default;
};

/// Which input run an element came from.
enum class Origin : unsigned char { left, right };

constexpr Origin complement(Origin o) noexcept {
  return o == Origin::left ? Origin::right : Origin::left;
}

constexpr const char* to_string(Origin o) noexcept {
  return o == Origin::left ? "left" : "right";
}

namespace detail {

template <class Range>
void check_span(const Range& range, Span s) {
  const auto size = static_cast<std::size_t>(std::ranges::size(range));
  SHUFFLEMERGE_EXPECTS(s.start <= size && s.length <= size - s.start,
                       "span exceeds sequence bounds");
}

}  // namespace detail
}  // namespace shufflemerge
