#pragma once

#include <chrono>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <map>
#include <ostream>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "../merge.hpp"
#include "instance.hpp"
#include "splitmix64.hpp"

namespace shufflemerge::harness {

struct BenchRecord {
  Kind kind = Kind::random;
  std::uint64_t n = 0;
  std::uint64_t seed = 0;
  std::uint64_t comparisons = 0;
  std::uint64_t moves = 0;
  std::uint64_t rotations = 0;
  std::uint64_t scan_steps = 0;
  std::uint64_t outer_iters = 0;
  std::uint64_t wall_ns = 0;
};

inline constexpr const char* kCsvHeader =
    "kind,n,seed,comparisons,moves,rotations,scan_steps,outer_iters,wall_ns";

inline void write_csv_header(std::ostream& os) { os << kCsvHeader << '\n'; }

inline void write_csv_row(std::ostream& os, const BenchRecord& r) {
  os << to_string(r.kind) << ',' << r.n << ',' << r.seed << ',' << r.comparisons << ','
     << r.moves << ',' << r.rotations << ',' << r.scan_steps << ',' << r.outer_iters << ','
     << r.wall_ns << '\n';
}

inline Instance make_bench_instance(Kind kind, std::size_t n, std::uint64_t seed) {
  switch (kind) {
    case Kind::random: return gen_random(n, n / 2, seed);
    case Kind::adversarial: return gen_adversarial(n / 4 == 0 ? 1 : n / 4);
    case Kind::dupes: return gen_duplicates(n, 4, seed);
  }
  throw std::invalid_argument("unknown instance kind");
}

/// Merges one instance with counters on and records the tallies.
inline BenchRecord bench_instance(const Instance& inst) {
  std::vector<std::int64_t> keys(inst.left);
  keys.insert(keys.end(), inst.right.begin(), inst.right.end());

  CostCounters c;
  MergeOptions opts;
  opts.counters = &c;
  const auto t0 = std::chrono::steady_clock::now();
  merge(keys.begin(), keys.begin() + static_cast<std::ptrdiff_t>(inst.left.size()), keys.end(),
        std::less<>{}, opts);
  const auto t1 = std::chrono::steady_clock::now();

  BenchRecord r;
  r.kind = inst.kind;
  r.n = inst.size();
  r.seed = inst.seed;
  r.comparisons = c.comparisons;
  r.moves = c.element_moves;
  r.rotations = c.rotation_calls;
  r.scan_steps = c.scan_r_total;
  r.outer_iters = c.outer_iterations;
  r.wall_ns = static_cast<std::uint64_t>(
      std::chrono::duration_cast<std::chrono::nanoseconds>(t1 - t0).count());
  return r;
}

struct BenchConfig {
  std::vector<Kind> kinds;
  std::size_t min_n = 1024;
  std::size_t max_n = 1 << 16;
  std::size_t reps = 1;
  std::uint64_t seed = 0;
};

/// Sizes min_n, 2*min_n, ... up to max_n.
inline std::vector<std::size_t> doubling_sizes(std::size_t min_n, std::size_t max_n) {
  SHUFFLEMERGE_EXPECTS(min_n >= 1 && min_n <= max_n, "need 1 <= min_n <= max_n");
  std::vector<std::size_t> sizes;
  for (std::size_t n = min_n; n <= max_n; n *= 2) {
    sizes.push_back(n);
    if (n > max_n / 2) break;
  }
  return sizes;
}

/// One record per (kind, n, rep), in that order. Deterministic apart from
/// wall_ns.
template <class Sink>
void run_bench(const BenchConfig& cfg, Sink&& sink) {
  SHUFFLEMERGE_EXPECTS(!cfg.kinds.empty(), "bench needs at least one kind");
  SHUFFLEMERGE_EXPECTS(cfg.reps >= 1, "bench needs reps >= 1");
  for (const Kind kind : cfg.kinds) {
    for (const std::size_t n : doubling_sizes(cfg.min_n, cfg.max_n)) {
      for (std::size_t rep = 0; rep < cfg.reps; ++rep) {
        auto inst = make_bench_instance(kind, n, derive_seed(cfg.seed, n, rep));
        sink(bench_instance(inst));
      }
    }
  }
}

inline std::vector<BenchRecord> run_bench(const BenchConfig& cfg) {
  std::vector<BenchRecord> out;
  run_bench(cfg, [&](const BenchRecord& r) { out.push_back(r); });
  return out;
}

enum class CostField : unsigned char {
  comparisons,
  moves,
  comparisons_plus_moves,
  rotations,
  scan_steps,
};

inline double cost_of(const BenchRecord& r, CostField f) {
  switch (f) {
    case CostField::comparisons: return static_cast<double>(r.comparisons);
    case CostField::moves: return static_cast<double>(r.moves);
    case CostField::comparisons_plus_moves: return static_cast<double>(r.comparisons + r.moves);
    case CostField::rotations: return static_cast<double>(r.rotations);
    case CostField::scan_steps: return static_cast<double>(r.scan_steps);
  }
  return 0.0;
}

struct FitResult {
  double exponent = 0.0;
  double r2 = 0.0;
  std::size_t points = 0;
};

/// Ordinary least squares of log2(mean cost) on log2(n), one point per
/// distinct n. Throws when fewer than three distinct n are present.
inline FitResult fit_loglog(std::span<const std::pair<double, double>> samples) {
  std::map<double, std::pair<double, std::size_t>> by_n;
  for (const auto& [n, cost] : samples) {
    auto& acc = by_n[n];
    acc.first += cost;
    acc.second += 1;
  }
  if (by_n.size() < 3) throw std::invalid_argument("fit needs at least 3 distinct sizes");

  std::vector<std::pair<double, double>> pts;
  for (const auto& [n, acc] : by_n) {
    const double mean = acc.first / static_cast<double>(acc.second);
    if (n <= 0.0 || mean <= 0.0) throw std::invalid_argument("fit needs positive sizes and costs");
    pts.emplace_back(std::log2(n), std::log2(mean));
  }
  const auto k = static_cast<double>(pts.size());
  double sx = 0, sy = 0;
  for (const auto& [x, y] : pts) {
    sx += x;
    sy += y;
  }
  const double mx = sx / k;
  const double my = sy / k;
  double sxx = 0, sxy = 0, syy = 0;
  for (const auto& [x, y] : pts) {
    sxx += (x - mx) * (x - mx);
    sxy += (x - mx) * (y - my);
    syy += (y - my) * (y - my);
  }
  FitResult fit;
  fit.points = pts.size();
  fit.exponent = sxy / sxx;
  fit.r2 = syy == 0.0 ? 1.0 : (sxy * sxy) / (sxx * syy);
  return fit;
}

inline FitResult fit_exponent(std::span<const BenchRecord> records, CostField field) {
  std::vector<std::pair<double, double>> samples;
  samples.reserve(records.size());
  for (const auto& r : records) samples.emplace_back(static_cast<double>(r.n), cost_of(r, field));
  return fit_loglog(samples);
}

/// Mean of cost(record) / normalizer(n) per distinct n.
template <class Normalizer>
std::map<std::uint64_t, double> mean_normalized_cost(std::span<const BenchRecord> records,
                                                     CostField field, Normalizer norm) {
  std::map<std::uint64_t, std::pair<double, std::size_t>> acc;
  for (const auto& r : records) {
    auto& a = acc[r.n];
    a.first += cost_of(r, field) / norm(static_cast<double>(r.n));
    a.second += 1;
  }
  std::map<std::uint64_t, double> out;
  for (const auto& [n, a] : acc) out[n] = a.first / static_cast<double>(a.second);
  return out;
}

}  // namespace shufflemerge::harness
