#pragma once

// Monte Carlo check of the geometric tail bounds that a linear average case
// would need: per loop iteration, Pr(scan consumes r odd elements) <= 2^-r
// and Pr(|P| = p after the iteration) <= 2^-(p-1).

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <ostream>
#include <vector>

#include "../merge.hpp"
#include "instance.hpp"
#include "splitmix64.hpp"

namespace shufflemerge::harness {

struct BucketCheck {
  std::size_t value = 0;
  std::uint64_t count = 0;
  double frequency = 0.0;
  double bound = 0.0;
  double allowed = 0.0;  // bound + 3 standard errors
  bool ok = true;
};

struct LemmaReport {
  std::size_t n = 0;
  std::size_t reps = 0;
  std::uint64_t samples = 0;  // loop iterations
  CostCounters totals;
  std::vector<BucketCheck> r_buckets;
  std::vector<BucketCheck> pb_buckets;
  double mean_scan_r = 0.0;
  double mean_rotated_length = 0.0;

  static constexpr double mean_scan_r_limit = 2.2;
  static constexpr double mean_rotated_limit = 3.3;

  bool buckets_ok() const {
    for (const auto& b : r_buckets) if (!b.ok) return false;
    for (const auto& b : pb_buckets) if (!b.ok) return false;
    return true;
  }
  bool means_ok() const {
    return mean_scan_r <= mean_scan_r_limit && mean_rotated_length <= mean_rotated_limit;
  }
  bool ok() const { return buckets_ok() && means_ok(); }
};

namespace detail {

inline std::vector<BucketCheck> check_histogram(const CostCounters::Histogram& h,
                                                std::uint64_t samples, int bound_shift) {
  std::vector<BucketCheck> out;
  for (std::size_t v = 0; v <= CostCounters::histogram_cap; ++v) {
    BucketCheck b;
    b.value = v;
    b.count = h[v];
    b.frequency = samples == 0 ? 0.0 : static_cast<double>(h[v]) / static_cast<double>(samples);
    const int exponent = static_cast<int>(v) - bound_shift;
    b.bound = exponent <= 0 ? 1.0 : std::ldexp(1.0, -exponent);
    b.allowed = b.bound + 3.0 * std::sqrt(b.frequency / static_cast<double>(samples));
    b.ok = b.frequency <= b.allowed;
    if (b.count > 0 || v < 8) out.push_back(b);
  }
  return out;
}

}  // namespace detail

/// Aggregates loop statistics over `reps` uniform random equal-length
/// instances of total length n.
inline LemmaReport lemma_stats(std::size_t n, std::size_t reps, std::uint64_t seed) {
  SHUFFLEMERGE_EXPECTS(n >= 64, "lemma_stats needs n >= 64");
  SHUFFLEMERGE_EXPECTS(reps >= 1000, "lemma_stats needs reps >= 1000");
  LemmaReport rep;
  rep.n = n;
  rep.reps = reps;
  std::vector<std::int64_t> keys;
  for (std::size_t k = 0; k < reps; ++k) {
    const auto inst = gen_random(n, n / 2, derive_seed(seed, n, k));
    keys.assign(inst.left.begin(), inst.left.end());
    keys.insert(keys.end(), inst.right.begin(), inst.right.end());
    MergeOptions opts;
    opts.counters = &rep.totals;
    merge(keys.begin(), keys.begin() + static_cast<std::ptrdiff_t>(inst.left.size()), keys.end(),
          std::less<>{}, opts);
  }
  const auto& t = rep.totals;
  rep.samples = t.loop_iterations;
  rep.r_buckets = detail::check_histogram(t.histogram_r, rep.samples, 0);
  rep.pb_buckets = detail::check_histogram(t.histogram_pb, rep.samples, 1);
  rep.mean_scan_r = t.scan_calls == 0 ? 0.0
                                      : static_cast<double>(t.scan_r_total) / static_cast<double>(t.scan_calls);
  rep.mean_rotated_length =
      t.rotation_calls == 0 ? 0.0
                            : static_cast<double>(t.rotated_length_total) / static_cast<double>(t.rotation_calls);
  return rep;
}

inline void print_lemma_report(std::ostream& os, const LemmaReport& rep) {
  os << "n=" << rep.n << " reps=" << rep.reps << " loop_iterations=" << rep.samples << '\n';
  auto table = [&](const char* name, const std::vector<BucketCheck>& buckets) {
    os << name << ",count,freq,bound,allowed,ok\n";
    for (const auto& b : buckets) {
      os << b.value << ',' << b.count << ',' << b.frequency << ',' << b.bound << ',' << b.allowed
         << ',' << (b.ok ? "yes" : "NO") << '\n';
    }
  };
  table("r", rep.r_buckets);
  table("p", rep.pb_buckets);
  os << "mean_scan_r=" << rep.mean_scan_r << " (limit " << LemmaReport::mean_scan_r_limit << ")\n";
  os << "mean_rotated_length=" << rep.mean_rotated_length << " (limit "
     << LemmaReport::mean_rotated_limit << ")\n";
  os << (rep.ok() ? "lemmas: PASS" : "lemmas: FAIL") << '\n';
}

}  // namespace shufflemerge::harness
