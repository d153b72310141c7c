#include <gtest/gtest.h>

#include <algorithm>
#include <cstdint>
#include <functional>
#include <random>
#include <vector>

#include "shufflemerge/harness/instance.hpp"
#include "shufflemerge/invariants.hpp"
#include "shufflemerge/merge_core.hpp"

namespace sm = shufflemerge;
using sm::harness::Item;
using sm::harness::KeyLess;
using sm::harness::OriginOf;

namespace {

using IntIt = std::vector<int>::iterator;

sm::MergeState<IntIt> state_of(std::vector<int>& v, std::size_t i, std::size_t j,
                               sm::Origin origin = sm::Origin::left) {
  return {v.begin(), v.size(), i, j, origin, sm::Direction::rightgoing};
}

std::vector<Item> tagged(const std::vector<std::int64_t>& left, const std::vector<std::int64_t>& right) {
  sm::harness::Instance inst;
  inst.left = left;
  inst.right = right;
  return sm::harness::to_items(inst);
}

std::vector<std::int64_t> keys_of(const std::vector<Item>& items) {
  std::vector<std::int64_t> out;
  for (const auto& it : items) out.push_back(it.key);
  return out;
}

}  // namespace

TEST(ShouldExtract, StrictlySmallerAlwaysExtracted) {
  EXPECT_TRUE(sm::should_extract(3, 5, sm::Origin::left, std::less<>{}));
  EXPECT_TRUE(sm::should_extract(3, 5, sm::Origin::right, std::less<>{}));
  EXPECT_FALSE(sm::should_extract(7, 5, sm::Origin::left, std::less<>{}));
  EXPECT_FALSE(sm::should_extract(7, 5, sm::Origin::right, std::less<>{}));
}

TEST(ShouldExtract, TiesFavorLeftOrigin) {
  // P is left-origin: it keeps priority over an equal right-origin Sh key.
  EXPECT_FALSE(sm::should_extract(5, 5, sm::Origin::left, std::less<>{}));
  // P is right-origin: the equal Sh key is left-origin and goes first.
  EXPECT_TRUE(sm::should_extract(5, 5, sm::Origin::right, std::less<>{}));
}

TEST(Scan, StopsAtFirstFailingOddElement) {
  std::vector<int> v{5, 2, 6, 3, 7, 9, 8};
  EXPECT_EQ(sm::scan(state_of(v, 0, 1), std::less<>{}), 2u);
}

TEST(Scan, RunsOffOddLengthTail) {
  std::vector<int> v{4, 1, 5, 2, 6, 3};
  EXPECT_EQ(sm::scan(state_of(v, 0, 1), std::less<>{}), 3u);
}

TEST(Scan, SinglePassingElementAtEvenBoundary) {
  std::vector<int> v{5, 6, 1, 9};
  sm::CostCounters c;
  EXPECT_EQ(sm::scan(state_of(v, 0, 2), std::less<>{}, {&c}), 1u);
  EXPECT_EQ(c.comparisons, 1u);  // 9 sits at an even position; the scan runs off the end
  EXPECT_EQ(c.scan_calls, 1u);
  EXPECT_EQ(c.scan_r_total, 1u);
}

TEST(Step, ScanBranchWithClippedTail) {
  std::vector<int> v{4, 1, 5, 2, 6, 3};
  auto st = state_of(v, 0, 1);
  EXPECT_EQ(sm::step(st, std::less<>{}), sm::StepBranch::scan_rotate);
  EXPECT_EQ(v, (std::vector<int>{1, 2, 3, 4, 5, 6}));
  // D used up Sh, so P[1] = 4 stays in P.
  EXPECT_EQ(st.i, 3u);
  EXPECT_EQ(st.j, 6u);
  EXPECT_EQ(st.origin, sm::Origin::left);
}

TEST(Step, ExtractFromPComplementsOriginWhenPEmpties) {
  std::vector<int> v{1, 5, 6};
  auto st = state_of(v, 0, 1);
  EXPECT_EQ(sm::step(st, std::less<>{}), sm::StepBranch::extract_from_p);
  EXPECT_EQ(st.i, 1u);
  EXPECT_EQ(st.j, 2u);
  EXPECT_EQ(st.origin, sm::Origin::right);
}

TEST(Step, SingletonShIsRotatedInFrontOfP) {
  std::vector<int> v{5, 6, 3};
  auto st = state_of(v, 0, 2);
  EXPECT_EQ(sm::step(st, std::less<>{}), sm::StepBranch::singleton_sh);
  EXPECT_EQ(v, (std::vector<int>{3, 5, 6}));
  EXPECT_EQ(st.i, 1u);
  EXPECT_EQ(st.j, 3u);
}

TEST(Step, EmptyShIsContractViolation) {
  std::vector<int> v{1, 2};
  auto st = state_of(v, 0, 2);
  EXPECT_THROW(sm::step(st, std::less<>{}), std::invalid_argument);
}

TEST(Step, EvenOnlyScanStrandsAnElement) {
  auto items = tagged({4, 5, 6}, {1, 2, 3});
  sm::interleave(items.begin(), items.end());
  sm::MergeState<std::vector<Item>::iterator> st{items.begin(), 6, 0, 1, sm::Origin::left,
                                                 sm::Direction::rightgoing};
  ASSERT_TRUE(sm::check_invariants(st, KeyLess{}, OriginOf{}));
  sm::MergeOptions opts;
  opts.scan_rule = sm::ScanRule::even_only;
  sm::step(st, KeyLess{}, opts);
  EXPECT_EQ(keys_of(items), (std::vector<std::int64_t>{1, 2, 4, 5, 6, 3}));
  EXPECT_EQ(st.i, 3u);
  EXPECT_EQ(st.j, 5u);
  EXPECT_FALSE(sm::check_invariants(st, KeyLess{}, OriginOf{}));
  EXPECT_EQ(sm::first_violation(st, KeyLess{}, OriginOf{}), sm::Invariant::sorted_prefix);
}

TEST(CheckInvariants, DetectsEachBrokenProperty) {
  // Layout S | P | Sh with origins given per element.
  auto make = [](std::vector<std::pair<int, sm::Origin>> entries) {
    std::vector<Item> items;
    std::uint32_t idx = 0;
    for (auto [k, o] : entries) items.push_back({k, {o, idx++}});
    return items;
  };
  constexpr auto L = sm::Origin::left;
  constexpr auto R = sm::Origin::right;
  using St = sm::MergeState<std::vector<Item>::iterator>;

  auto good = make({{1, R}, {2, L}, {5, L}, {3, R}, {6, L}, {4, R}});
  St st{good.begin(), good.size(), 2, 3, L, sm::Direction::rightgoing};
  EXPECT_EQ(sm::first_violation(st, KeyLess{}, OriginOf{}), std::nullopt);

  St empty_p = st;
  empty_p.j = empty_p.i;
  EXPECT_EQ(sm::first_violation(empty_p, KeyLess{}, OriginOf{}), sm::Invariant::p_nonempty);

  St wrong_flag = st;
  wrong_flag.origin = R;
  EXPECT_EQ(sm::first_violation(wrong_flag, KeyLess{}, OriginOf{}), sm::Invariant::uniform_buffer);

  auto not_two_ordered = make({{1, R}, {2, L}, {5, L}, {4, R}, {6, L}, {3, R}});
  St st2{not_two_ordered.begin(), 6, 2, 3, L, sm::Direction::rightgoing};
  EXPECT_EQ(sm::first_violation(st2, KeyLess{}, OriginOf{}), sm::Invariant::two_ordered_tail);

  auto tail_before_p = make({{1, R}, {2, L}, {5, L}, {3, R}, {4, L}, {6, R}});
  St st3{tail_before_p.begin(), 6, 2, 3, L, sm::Direction::rightgoing};
  EXPECT_EQ(sm::first_violation(st3, KeyLess{}, OriginOf{}), sm::Invariant::buffer_precedes_tail);

  auto same_heads = make({{1, R}, {2, L}, {5, L}, {6, L}, {7, R}});
  St st4{same_heads.begin(), 5, 2, 3, L, sm::Direction::rightgoing};
  EXPECT_EQ(sm::first_violation(st4, KeyLess{}, OriginOf{}), sm::Invariant::heads_differ);
  auto same_heads2 = make({{1, R}, {2, L}, {5, L}, {6, L}});
  St st5{same_heads2.begin(), 4, 2, 3, L, sm::Direction::rightgoing};
  EXPECT_EQ(sm::first_violation(st5, KeyLess{}, OriginOf{}), sm::Invariant::heads_differ);
}

TEST(RightGoingMerge, ReversedRuns) {
  std::vector<int> v{4, 5, 6, 1, 2, 3};
  const auto res = sm::right_going_merge(v.begin(), v.begin() + 3, v.end(), std::less<>{});
  EXPECT_EQ(v, (std::vector<int>{1, 2, 3, 4, 5, 6}));
  EXPECT_EQ(res.p, (sm::Span{3, 3}));
  EXPECT_EQ(res.origin, sm::Origin::left);
}

TEST(RightGoingMerge, AlreadyOrderedRuns) {
  std::vector<int> v{1, 2, 3, 4};
  const auto res = sm::right_going_merge(v.begin(), v.begin() + 2, v.end(), std::less<>{});
  EXPECT_EQ(v, (std::vector<int>{1, 2, 3, 4}));
  EXPECT_EQ(res.p, (sm::Span{2, 2}));
  EXPECT_EQ(res.origin, sm::Origin::right);
}

TEST(RightGoingMerge, UnequalRunsRejected) {
  std::vector<int> v{1, 2, 3};
  EXPECT_THROW(sm::right_going_merge(v.begin(), v.begin() + 1, v.end(), std::less<>{}),
               std::invalid_argument);
  std::vector<int> e;
  EXPECT_THROW(sm::right_going_merge(e.begin(), e.begin(), e.end(), std::less<>{}),
               std::invalid_argument);
}

TEST(LeftGoingMerge, Examples) {
  std::vector<int> a{1, 2, 3, 4, 5, 6};
  const auto ra = sm::left_going_merge(a.begin(), a.begin() + 3, a.end(), std::less<>{});
  EXPECT_EQ(a, (std::vector<int>{1, 2, 3, 4, 5, 6}));
  EXPECT_EQ(ra.p.start, 0u);
  EXPECT_GE(ra.p.length, 1u);

  std::vector<int> b{4, 5, 6, 1, 2, 3};
  const auto rb = sm::left_going_merge(b.begin(), b.begin() + 3, b.end(), std::less<>{});
  EXPECT_EQ(b, (std::vector<int>{1, 2, 3, 4, 5, 6}));
  EXPECT_EQ(rb.p.start, 0u);

  std::vector<int> c{2, 1};
  sm::left_going_merge(c.begin(), c.begin() + 1, c.end(), std::less<>{});
  EXPECT_EQ(c, (std::vector<int>{1, 2}));
}

TEST(LeftGoingMerge, IsReverseConjugateOfRightGoing) {
  std::mt19937 rng(99);
  for (int trial = 0; trial < 400; ++trial) {
    const std::size_t h = 1 + rng() % 40;
    std::vector<int> keys(2 * h);
    for (std::size_t k = 0; k < keys.size(); ++k) keys[k] = static_cast<int>(k);
    std::shuffle(keys.begin(), keys.end(), rng);
    std::sort(keys.begin(), keys.begin() + static_cast<std::ptrdiff_t>(h));
    std::sort(keys.begin() + static_cast<std::ptrdiff_t>(h), keys.end());

    auto left = keys;
    const auto rl = sm::left_going_merge(left.begin(), left.begin() + static_cast<std::ptrdiff_t>(h),
                                         left.end(), std::less<>{});

    std::vector<int> mirrored(keys.rbegin(), keys.rend());
    const auto rr = sm::right_going_merge(mirrored.begin(), mirrored.begin() + static_cast<std::ptrdiff_t>(h),
                                          mirrored.end(), std::greater<>{});
    std::reverse(mirrored.begin(), mirrored.end());

    ASSERT_EQ(left, mirrored);
    ASSERT_EQ(rl.p, (sm::Span{0, rr.p.length}));
    // The mirrored run that plays "left" is the original right run.
    ASSERT_EQ(rl.origin, sm::complement(rr.origin));
  }
}

namespace {

// Runs an inner merge over every balanced left/right assignment of 2h keys
// (h <= 8), checking the loop invariant and progress after every step.
template <class Merge>
void check_every_balanced_instance(Merge merge_fn, sm::Direction dir) {
  for (std::size_t n = 2; n <= 16; n += 2) {
    const std::size_t h = n / 2;
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
      if (static_cast<std::size_t>(__builtin_popcount(mask)) != h) continue;
      std::vector<std::int64_t> left, right;
      for (std::size_t p = 0; p < n; ++p) {
        ((mask >> p) & 1u ? left : right).push_back(static_cast<std::int64_t>(p + 1));
      }
      auto items = tagged(left, right);
      std::size_t states = 0;
      std::size_t last_i = 0;
      auto observer = [&](const auto& st) {
        ASSERT_EQ(st.direction, dir);
        ASSERT_TRUE(sm::check_invariants(st, KeyLess{}, OriginOf{}))
            << "mask=" << mask << " state=" << states << " violation="
            << sm::to_string(*sm::first_violation(st, KeyLess{}, OriginOf{}));
        if (states > 0) {
          ASSERT_GT(st.i, last_i);
        }
        last_i = st.i;
        ++states;
      };
      const auto res = merge_fn(items, h, observer);
      ASSERT_LE(states - 1, n) << "loop ran more than n iterations";
      const auto keys = keys_of(items);
      ASSERT_TRUE(std::is_sorted(keys.begin(), keys.end())) << "mask=" << mask;
      ASSERT_GE(res.p.length, 1u);
      for (std::size_t k = res.p.start; k < res.p.end(); ++k) {
        ASSERT_EQ(items[k].tag.origin, res.origin);
      }
    }
  }
}

}  // namespace

TEST(RightGoingMerge, InvariantsHoldForEveryBalancedInstanceUpTo16) {
  check_every_balanced_instance(
      [](std::vector<Item>& items, std::size_t h, auto& obs) {
        return sm::right_going_merge(items.begin(), items.begin() + static_cast<std::ptrdiff_t>(h),
                                     items.end(), KeyLess{}, sm::Origin::left, {}, obs);
      },
      sm::Direction::rightgoing);
}

TEST(LeftGoingMerge, InvariantsHoldForEveryBalancedInstanceUpTo16) {
  check_every_balanced_instance(
      [](std::vector<Item>& items, std::size_t h, auto& obs) {
        return sm::left_going_merge(items.begin(), items.begin() + static_cast<std::ptrdiff_t>(h),
                                    items.end(), KeyLess{}, sm::Origin::right, {}, obs);
      },
      sm::Direction::leftgoing);
}

TEST(Step, ScanBranchAccounting) {
  std::mt19937 rng(5);
  std::size_t checked = 0;
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t h = 2 + rng() % 60;
    std::vector<int> keys(2 * h);
    for (std::size_t k = 0; k < keys.size(); ++k) keys[k] = static_cast<int>(k);
    std::shuffle(keys.begin(), keys.end(), rng);
    std::sort(keys.begin(), keys.begin() + static_cast<std::ptrdiff_t>(h));
    std::sort(keys.begin() + static_cast<std::ptrdiff_t>(h), keys.end());
    sm::interleave(keys.begin(), keys.end());
    auto st = state_of(keys, 0, 1);
    while (st.j < st.size) {
      const auto before = st;
      sm::CostCounters c;
      const auto branch = sm::step(st, std::less<>{}, {&c});
      ASSERT_GT(st.i, before.i);
      if (branch != sm::StepBranch::scan_rotate) continue;
      const std::size_t r = c.rotated_length_total - before.p_size();
      const std::size_t d = st.j - before.j;
      const std::size_t e = d - r;
      ASSERT_GE(e, 1u);
      if (st.j < st.size) {
        ASSERT_EQ(d, 2 * r);
        ASSERT_EQ(st.p_size(), before.p_size() - 1 + e);
        ASSERT_EQ(c.rotated_length_total, st.p_size() + 1);
      } else {
        ASSERT_EQ(st.p_size(), before.p_size() + e);
      }
      ++checked;
    }
  }
  EXPECT_GT(checked, 1000u);
}
