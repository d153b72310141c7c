#include <gtest/gtest.h>

#include <algorithm>
#include <cstdint>
#include <functional>
#include <random>
#include <vector>

#include "shufflemerge/harness/instance.hpp"
#include "shufflemerge/harness/verify.hpp"
#include "shufflemerge/merge.hpp"

namespace sm = shufflemerge;
namespace h = shufflemerge::harness;

namespace {

std::vector<std::int64_t> keys_of(const std::vector<h::Item>& items) {
  std::vector<std::int64_t> out;
  for (const auto& it : items) out.push_back(it.key);
  return out;
}

// Every sorted list of length len over {0, 1, 2}.
std::vector<std::vector<std::int64_t>> sorted_words(std::size_t len) {
  std::vector<std::vector<std::int64_t>> out;
  for (std::size_t zeros = 0; zeros <= len; ++zeros) {
    for (std::size_t ones = 0; zeros + ones <= len; ++ones) {
      std::vector<std::int64_t> w(zeros, 0);
      w.insert(w.end(), ones, 1);
      w.insert(w.end(), len - zeros - ones, 2);
      out.push_back(w);
    }
  }
  return out;
}

}  // namespace

TEST(Merge, ReversedRuns) {
  std::vector<int> v{4, 5, 6, 1, 2, 3};
  sm::merge(v, 3);
  EXPECT_EQ(v, (std::vector<int>{1, 2, 3, 4, 5, 6}));
}

TEST(Merge, EmptySides) {
  std::vector<int> v{1, 2};
  sm::merge(v, 0);
  EXPECT_EQ(v, (std::vector<int>{1, 2}));
  sm::merge(v, 2);
  EXPECT_EQ(v, (std::vector<int>{1, 2}));
  std::vector<int> e;
  sm::merge(e, 0);
  EXPECT_TRUE(e.empty());
}

TEST(Merge, SplitPastEndRejected) {
  std::vector<int> v{1, 2};
  EXPECT_THROW(sm::merge(v, 3), std::invalid_argument);
}

TEST(Merge, TaggedDuplicatesKeepLeftFirst) {
  h::Instance inst;
  inst.left = {1, 3, 3, 7};
  inst.right = {2, 3, 5};
  auto items = h::to_items(inst);
  sm::merge(items.begin(), items.begin() + 4, items.end(), h::KeyLess{});
  EXPECT_EQ(items, h::oracle_merge(inst));
  std::vector<std::uint32_t> tags_of_3;
  for (const auto& it : items) {
    if (it.key == 3) tags_of_3.push_back(it.tag.index);
  }
  EXPECT_EQ(tags_of_3, (std::vector<std::uint32_t>{1, 2, 5}));
}

TEST(Merge, UnequalLengthCounterexampleForLiteralBufferRule) {
  // A left element may not be finalised ahead of a trimmed right suffix.
  std::vector<int> v{4, 5, 1, 2, 3};
  sm::merge(v, 2);
  EXPECT_EQ(v, (std::vector<int>{1, 2, 3, 4, 5}));
}

TEST(Merge, CustomComparatorDescending) {
  std::vector<int> v{9, 7, 3, 8, 4, 2, 1};
  sm::merge(v, 3, std::greater<>{});
  EXPECT_EQ(v, (std::vector<int>{9, 8, 7, 4, 3, 2, 1}));
}

TEST(Merge, ExhaustiveDistinctKeysUpTo16) {
  const auto report = h::verify_exhaustive(16);
  EXPECT_EQ(report.failures, 0u) << report.diagnostic;
  EXPECT_EQ(report.instances, 131070u);
}

TEST(Merge, ExhaustiveSingleKey) {
  const auto report = h::verify_exhaustive(1);
  EXPECT_TRUE(report.ok());
  EXPECT_EQ(report.instances, 2u);
}

TEST(Merge, EvenOnlyScanRuleHasKnownCounterexample) {
  h::VerifyOptions opts;
  opts.scan_rule = sm::ScanRule::even_only;
  opts.stop_on_first = false;
  const auto report = h::verify_exhaustive(6, opts);
  EXPECT_GT(report.failures, 0u);
  h::Instance expected;
  expected.left = {4, 5, 6};
  expected.right = {1, 2, 3};
  EXPECT_NE(std::find(report.counterexamples.begin(), report.counterexamples.end(), expected),
            report.counterexamples.end());

  // Same instance, default rule: fine.
  EXPECT_TRUE(h::verify_instance(expected).ok);
  opts.stop_on_first = true;
  const auto first = h::verify_exhaustive(6, opts);
  EXPECT_EQ(first.failures, 1u);
  EXPECT_FALSE(first.diagnostic.empty());
}

TEST(Merge, ExhaustiveDuplicatesOverThreeLettersUpTo10) {
  std::size_t instances = 0;
  for (std::size_t n = 0; n <= 10; ++n) {
    for (std::size_t n_left = 0; n_left <= n; ++n_left) {
      for (const auto& left : sorted_words(n_left)) {
        for (const auto& right : sorted_words(n - n_left)) {
          h::Instance inst;
          inst.left = left;
          inst.right = right;
          inst.payloads = h::default_tags(left.size(), right.size());
          const auto outcome = h::verify_instance(inst);
          ASSERT_TRUE(outcome.ok) << outcome.diagnostic << "\n" << h::serialize(inst);
          ++instances;
        }
      }
    }
  }
  // sum over n <= 10 of C(n + 5, 5)
  EXPECT_EQ(instances, 8008u);
}

TEST(Merge, InnerMergeWindowsNeverGrow) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 500; ++trial) {
    const std::size_t n = 2 + rng() % 300;
    const std::size_t k = rng() % (n + 1);
    auto inst = h::gen_random(n, k, rng());
    auto items = h::to_items(inst);
    std::vector<std::size_t> windows;
    auto observer = [&](const auto& st) {
      if (st.i == 0 && st.j == 1) windows.push_back(st.size);
    };
    sm::merge(items.begin(), items.begin() + static_cast<std::ptrdiff_t>(k), items.end(), h::KeyLess{},
              {}, observer);
    ASSERT_EQ(items, h::oracle_merge(inst));
    for (std::size_t w = 1; w < windows.size(); ++w) ASSERT_LE(windows[w], windows[w - 1]);
    ASSERT_LE(windows.size(), n);
  }
}

TEST(Sort, SmallExample) {
  std::vector<int> v{3, 1, 2};
  sm::sort(v);
  EXPECT_EQ(v, (std::vector<int>{1, 2, 3}));
}

TEST(Sort, SortedInputUnchangedAndCheap) {
  std::vector<int> v(1000);
  for (std::size_t k = 0; k < v.size(); ++k) v[k] = static_cast<int>(k);
  const auto base = v;
  sm::CostCounters c;
  sm::sort(v, std::less<>{}, {&c});
  EXPECT_EQ(v, base);
  // Each merge of two ordered runs is one emit, one full scan, one rotation.
  EXPECT_LE(c.rotation_calls, v.size() - 1);
  EXPECT_LE(c.comparisons, v.size() * 10);
}

TEST(Sort, RandomKeysMatchStableSortWithPayloads) {
  std::mt19937_64 rng(2024);
  std::vector<h::Item> items(1 << 14);
  for (std::size_t k = 0; k < items.size(); ++k) {
    items[k] = {static_cast<std::int64_t>(rng() % 1000), {sm::Origin::left, static_cast<std::uint32_t>(k)}};
  }
  auto expected = items;
  std::stable_sort(expected.begin(), expected.end(), h::KeyLess{});
  sm::sort(items, h::KeyLess{});
  EXPECT_EQ(items, expected);
}

TEST(Sort, PermutationAndIdempotent) {
  std::mt19937_64 rng(77);
  for (std::size_t n : {0u, 1u, 2u, 5u, 17u, 100u, 1023u, 1025u}) {
    std::vector<int> v(n);
    for (auto& x : v) x = static_cast<int>(rng() % 64);
    auto ref = v;
    std::sort(ref.begin(), ref.end());
    sm::sort(v);
    ASSERT_EQ(v, ref) << "n=" << n;
    sm::sort(v);
    ASSERT_EQ(v, ref) << "n=" << n;
  }
}

TEST(Merge, AdversarialInstanceMergesCorrectly) {
  const auto inst = h::gen_adversarial(2);
  auto items = h::to_items(inst);
  sm::merge(items.begin(), items.begin() + static_cast<std::ptrdiff_t>(inst.left.size()), items.end(),
            h::KeyLess{});
  EXPECT_EQ(keys_of(items), (std::vector<std::int64_t>{-2, -1, 0, 1, 2, 3, 4, 6}));
  EXPECT_EQ(items, h::oracle_merge(inst));
}
