#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "../invariants.hpp"
#include "../merge.hpp"
#include "instance.hpp"

namespace shufflemerge::harness {

struct VerifyOptions {
  ScanRule scan_rule = ScanRule::clipped;
  bool check_invariants = true;
  bool stop_on_first = true;
};

struct VerifyOutcome {
  bool ok = true;
  std::string diagnostic;
};

/// Merges one instance in place and compares key-and-payload output with
/// oracle_merge; optionally checks the loop invariant after every step.
inline VerifyOutcome verify_instance(const Instance& inst, const VerifyOptions& opts = {}) {
  if (!is_sorted_instance(inst)) return {false, "input runs are not sorted"};
  auto items = to_items(inst);
  const auto expected = oracle_merge(inst);

  std::optional<std::string> broken;
  std::uint64_t steps = 0;
  auto observer = [&](const auto& st) {
    if (!opts.check_invariants || broken) return;
    if (const auto v = first_violation(st, KeyLess{}, OriginOf{})) {
      broken = std::string("invariant ") + to_string(*v) + " violated at state " +
               std::to_string(steps) + " of a " +
               (st.direction == Direction::rightgoing ? "right" : "left") + "-going merge";
    }
    ++steps;
  };
  MergeOptions mo;
  mo.scan_rule = opts.scan_rule;
  merge(items.begin(), items.begin() + static_cast<std::ptrdiff_t>(inst.left.size()), items.end(),
        KeyLess{}, mo, observer);

  if (broken) return {false, *broken};
  if (items != expected) {
    for (std::size_t k = 0; k < items.size(); ++k) {
      if (!(items[k] == expected[k])) {
        return {false, "output differs from oracle at position " + std::to_string(k)};
      }
    }
  }
  return {};
}

struct VerifyReport {
  std::uint64_t instances = 0;
  std::uint64_t failures = 0;
  std::vector<Instance> counterexamples;
  std::string diagnostic;  // for the first counterexample

  bool ok() const noexcept { return failures == 0; }
};

/// Every distinct-key instance with total length 1..max_n: keys 1..n, each
/// subset of positions taken once as the left run.
inline VerifyReport verify_exhaustive(std::size_t max_n, const VerifyOptions& opts = {}) {
  SHUFFLEMERGE_EXPECTS(max_n <= 20, "exhaustive verification is limited to max_n <= 20");
  VerifyReport report;
  for (std::size_t n = 1; n <= max_n; ++n) {
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
      Instance inst;
      for (std::size_t p = 0; p < n; ++p) {
        ((mask >> p) & 1U ? inst.left : inst.right).push_back(static_cast<std::int64_t>(p + 1));
      }
      ++report.instances;
      const auto outcome = verify_instance(inst, opts);
      if (!outcome.ok) {
        if (report.failures == 0) report.diagnostic = outcome.diagnostic;
        ++report.failures;
        report.counterexamples.push_back(inst);
        if (opts.stop_on_first) return report;
      }
    }
  }
  return report;
}

}  // namespace shufflemerge::harness
