#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <random>
#include <set>

#include "lambdalat/errors.hpp"
#include "lambdalat/poset.hpp"
#include "oracles.hpp"
#include "test_util.hpp"

namespace lambdalat {
namespace {

using testing::antichain;
using testing::chain;
using testing::el;
using testing::fig2_poset;
using testing::fx;
using testing::set_of;

ElementSet upper_bounds_by_scan(const Poset& p, Element x, Element y) {
  const auto m = oracle::matrix_of(p);
  ElementSet out;
  for (Element z = 0; z < p.size(); ++z) {
    if (m[x][z] && m[y][z]) out.insert(z);
  }
  return out;
}

ElementSet lower_bounds_by_scan(const Poset& p, Element x, Element y) {
  const auto m = oracle::matrix_of(p);
  ElementSet out;
  for (Element z = 0; z < p.size(); ++z) {
    if (m[z][x] && m[z][y]) out.insert(z);
  }
  return out;
}

TEST(PosetFromCovers, ThreeChainIsTransitive) {
  const Poset p = poset_from_covers(3, {{0, 1}, {1, 2}});
  EXPECT_TRUE(p.leq(0, 2));
  EXPECT_TRUE(p.lt(0, 2));
  EXPECT_FALSE(p.leq(2, 0));
  EXPECT_TRUE(p.covers(0, 1));
  EXPECT_FALSE(p.covers(0, 2));
}

TEST(PosetFromCovers, Fig2Incomparabilities) {
  const Poset p = fig2_poset();
  EXPECT_TRUE(p.incomparable(el(p, "a"), el(p, "b")));
  EXPECT_TRUE(p.incomparable(el(p, "c"), el(p, "d")));
  EXPECT_TRUE(p.incomparable(el(p, "d"), el(p, "e")));
  EXPECT_TRUE(p.leq(el(p, "c"), el(p, "e")));
  EXPECT_TRUE(oracle::is_partial_order(oracle::matrix_of(p)));
}

TEST(PosetFromCovers, RejectsTwoCycle) { EXPECT_THROW(poset_from_covers(2, {{0, 1}, {1, 0}}), CycleError); }

TEST(PosetFromCovers, RejectsLongCycleAndSelfLoop) {
  EXPECT_THROW(poset_from_covers(3, {{0, 1}, {1, 2}, {2, 0}}), CycleError);
  EXPECT_THROW(poset_from_covers(2, {{1, 1}}), CycleError);
}

TEST(PosetFromCovers, RejectsBadIndex) { EXPECT_THROW(poset_from_covers(2, {{0, 2}}), RangeError); }

TEST(PosetConstructor, RejectsNonTransitiveRows) {
  // 0 <= 1 <= 2 without 0 <= 2.
  EXPECT_THROW(Poset({ElementSet{0, 1}, ElementSet{1, 2}, ElementSet{2}}), Error);
}

TEST(Bounds, Fig2UpperBoundsOfAB) {
  const Poset p = fig2_poset();
  EXPECT_EQ(upper_bounds(p, el(p, "a"), el(p, "b")), set_of(p, {"d", "e", "1"}));
  EXPECT_EQ(upper_bounds(p, el(p, "a"), el(p, "b")), upper_bounds_by_scan(p, el(p, "a"), el(p, "b")));
}

TEST(Bounds, UpperBoundsOfSelfIsUpSet) {
  const Poset p = fig2_poset();
  for (Element x = 0; x < p.size(); ++x) EXPECT_EQ(upper_bounds(p, x, x), p.up_set(x));
}

TEST(Bounds, Fig3LowerBoundsOfCD) {
  const Poset& p = fx("FIG3").poset();
  EXPECT_EQ(lower_bounds(p, el(p, "c"), el(p, "d")), set_of(p, {"0", "a", "b"}));
  EXPECT_EQ(lower_bounds(p, el(p, "c"), el(p, "d")), lower_bounds_by_scan(p, el(p, "c"), el(p, "d")));
}

TEST(Bounds, RandomPosetsAgreeWithScan) {
  std::mt19937 rng(7);
  for (int round = 0; round < 200; ++round) {
    const Poset p = oracle::random_poset(rng, 1 + round % 8, 0.3);
    for (Element x = 0; x < p.size(); ++x) {
      for (Element y = 0; y < p.size(); ++y) {
        ASSERT_EQ(upper_bounds(p, x, y), upper_bounds_by_scan(p, x, y));
        ASSERT_EQ(lower_bounds(p, x, y), lower_bounds_by_scan(p, x, y));
      }
    }
  }
}

TEST(Directedness, Fig2IsDirectedAndBounded) {
  const Poset p = fig2_poset();
  EXPECT_TRUE(is_directed(p));
  auto b = bounds(p);
  ASSERT_TRUE(b);
  EXPECT_EQ(b->bottom, el(p, "0"));
  EXPECT_EQ(b->top, el(p, "1"));
}

TEST(Directedness, AntichainOfTwo) {
  const Poset p = antichain(2);
  EXPECT_FALSE(is_directed(p));
  EXPECT_FALSE(bounds(p));
}

TEST(Directedness, Singleton) {
  const Poset p;
  EXPECT_TRUE(is_directed(p));
  ASSERT_TRUE(bounds(p));
  EXPECT_EQ(*bounds(p), (Bounds{0, 0}));
}

TEST(Directedness, FiniteDirectedMeansBounded) {
  std::mt19937 rng(11);
  for (int round = 0; round < 300; ++round) {
    const Poset p = oracle::random_poset(rng, 1 + round % 7, 0.5);
    EXPECT_EQ(is_directed(p), bounds(p).has_value());
    EXPECT_EQ(bounds(p).has_value(), oracle::has_bounds(oracle::matrix_of(p)));
  }
}

TEST(Heights, Fig4) {
  const Poset& p = fx("FIG4").poset();
  const auto m = oracle::matrix_of(p);
  const Element zero = el(p, "0");
  EXPECT_EQ(height(p, el(p, "c")), 2);
  EXPECT_EQ(height(p, el(p, "g")), 3);
  EXPECT_EQ(length(p), 4);
  for (Element x = 0; x < p.size(); ++x) EXPECT_EQ(height(p, x), oracle::longest_chain_length(m, zero, x));
}

TEST(Heights, Fig2) {
  const Poset p = fig2_poset();
  EXPECT_EQ(height(p, el(p, "d")), 2);
  EXPECT_EQ(height(p, el(p, "e")), 2);
  EXPECT_EQ(length(p), 3);
}

TEST(Heights, Singleton) {
  const Poset p;
  EXPECT_EQ(height(p, 0), 0);
  EXPECT_EQ(length(p), 0);
}

TEST(Heights, NeedsBottom) {
  EXPECT_THROW(height(antichain(2), 0), UnboundedError);
  EXPECT_THROW(length(antichain(3)), UnboundedError);
}

TEST(Heights, ShortestMaximalChainOnNonGradedPoset) {
  // Fig. 5 is not graded: 0-a-c-1 and 0-a-b-d-1.
  const Poset& p = fx("FIG5").poset();
  const auto longest = heights(p, HeightMeasure::LongestChain);
  const auto shortest = heights(p, HeightMeasure::ShortestMaximalChain);
  EXPECT_EQ(longest[el(p, "1")], 4);
  EXPECT_EQ(shortest[el(p, "1")], 3);
  EXPECT_EQ(shortest[el(p, "d")], 3);
}

TEST(Heights, MeasuresAgreeOnChains) {
  for (std::size_t n = 1; n <= 6; ++n) {
    EXPECT_EQ(heights(chain(n)), heights(chain(n), HeightMeasure::ShortestMaximalChain));
  }
}

TEST(Heights, PropertyCoverRaisesHeight) {
  std::mt19937 rng(3);
  for (int round = 0; round < 200; ++round) {
    const Poset p = oracle::random_bounded_poset(rng, round % 7, 0.35);
    const auto m = oracle::matrix_of(p);
    const auto h = heights(p);
    const Element b = bottom(p).value();
    for (auto [x, y] : p.cover_pairs()) ASSERT_GE(h[y], h[x] + 1);
    for (Element x = 0; x < p.size(); ++x) ASSERT_EQ(h[x], oracle::longest_chain_length(m, b, x));
    ASSERT_EQ(h[b], 0);
    ASSERT_EQ(length(p), h[top(p).value()]);
  }
}

TEST(Covers, PropertyClosureRoundTrip) {
  std::mt19937 rng(5);
  for (int round = 0; round < 300; ++round) {
    const Poset p = oracle::random_poset(rng, 1 + round % 9, 0.4);
    const Poset again = poset_from_covers(p.size(), p.cover_pairs());
    ASSERT_TRUE(again.same_order(p));
    const auto m = oracle::matrix_of(p);
    for (Element x = 0; x < p.size(); ++x) {
      for (Element y = 0; y < p.size(); ++y) ASSERT_EQ(p.covers(x, y), oracle::covers(m, x, y));
    }
  }
}

TEST(Chains, Fig2FromBottom) {
  const Poset p = fig2_poset();
  const auto chains = maximal_chains_to_top(p, el(p, "0"));
  EXPECT_EQ(chains.size(), 5U);
  for (const Chain& c : chains) EXPECT_EQ(c.length(), 3U);
  EXPECT_TRUE(std::is_sorted(chains.begin(), chains.end()));
}

TEST(Chains, FromTopIsSingleZeroLengthChain) {
  const Poset p = fig2_poset();
  const auto chains = maximal_chains_to_top(p, el(p, "1"));
  ASSERT_EQ(chains.size(), 1U);
  EXPECT_EQ(chains.front().length(), 0U);
  EXPECT_EQ(chains.front().elements, std::vector<Element>{el(p, "1")});
}

TEST(Chains, Fig5FromBottom) {
  const Poset& p = fx("FIG5").poset();
  const auto chains = maximal_chains_to_top(p, el(p, "0"));
  ASSERT_EQ(chains.size(), 2U);
  std::set<std::vector<Element>> got;
  for (const Chain& c : chains) got.insert(c.elements);
  EXPECT_TRUE(got.count(testing::els(p, {"0", "a", "b", "d", "1"})));
  EXPECT_TRUE(got.count(testing::els(p, {"0", "a", "c", "1"})));
}

TEST(Chains, NeedsTop) { EXPECT_THROW(maximal_chains_to_top(antichain(2), 0), NoTopError); }

TEST(Chains, PropertyChainsAreMaximalAndExhaustive) {
  std::mt19937 rng(9);
  for (int round = 0; round < 100; ++round) {
    const Poset p = oracle::random_bounded_poset(rng, round % 6, 0.4);
    const auto m = oracle::matrix_of(p);
    const Element t = top(p).value();
    for (Element a = 0; a < p.size(); ++a) {
      const auto chains = maximal_chains_to_top(p, a);
      std::set<std::vector<Element>> distinct;
      for (const Chain& c : chains) {
        ASSERT_EQ(c.elements.front(), a);
        ASSERT_EQ(c.elements.back(), t);
        for (std::size_t i = 0; i + 1 < c.elements.size(); ++i) {
          ASSERT_TRUE(oracle::covers(m, c.elements[i], c.elements[i + 1]));
        }
        distinct.insert(c.elements);
      }
      ASSERT_EQ(distinct.size(), chains.size());
      // Count cover paths a → top independently.
      std::vector<std::uint64_t> paths(p.size(), 0);
      paths[t] = 1;
      std::vector<Element> order(p.size());
      std::iota(order.begin(), order.end(), Element{0});
      const auto h = heights(p);
      std::sort(order.begin(), order.end(), [&](Element x, Element y) { return h[x] > h[y]; });
      for (Element x : order) {
        for (Element y = 0; y < p.size(); ++y) {
          if (oracle::covers(m, x, y)) paths[x] += paths[y];
        }
      }
      ASSERT_EQ(chains.size(), paths[a]);
    }
  }
}

TEST(LuCovering, Fig2Holds) { EXPECT_TRUE(has_lu_covering(fig2_poset()).holds); }

TEST(LuCovering, Fig5FailsAtABC) {
  const Poset& p = fx("FIG5").poset();
  const Verdict v = has_lu_covering(p);
  EXPECT_FALSE(v.holds);
  EXPECT_EQ(v.witness, testing::els(p, {"a", "b", "c"}));
  EXPECT_EQ(v.witness, oracle::lu_violation(oracle::matrix_of(p)));
}

TEST(LuCovering, ChainsHoldVacuously) {
  for (std::size_t n = 1; n <= 6; ++n) EXPECT_TRUE(has_lu_covering(chain(n)).holds);
}

TEST(LuCovering, RemovingUniqueCommonCoverBreaksIt) {
  // In Fig. 2, e is the only element covering both a and c.
  const Poset p = fig2_poset();
  EXPECT_EQ(p.upper_covers(el(p, "a")) & p.upper_covers(el(p, "c")), set_of(p, {"e"}));
  const Poset q = poset_from_covers(6, {{0, 1}, {0, 2}, {0, 3}, {1, 4}, {2, 4}, {4, 5}, {3, 5}},
                                    {"0", "a", "b", "c", "d", "1"});
  const Verdict v = has_lu_covering(q);
  EXPECT_FALSE(v.holds);
  EXPECT_EQ(v.witness, testing::els(q, {"0", "a", "c"}));
}

TEST(LuCovering, RandomAgreesWithOracle) {
  std::mt19937 rng(13);
  for (int round = 0; round < 300; ++round) {
    const Poset p = oracle::random_poset(rng, 1 + round % 8, 0.35);
    const Verdict v = has_lu_covering(p);
    const auto expected = oracle::lu_violation(oracle::matrix_of(p));
    ASSERT_EQ(v.holds, expected.empty());
    ASSERT_EQ(v.witness, expected);
  }
}

TEST(Convexity, Fig2Examples) {
  const Poset p = fig2_poset();
  EXPECT_TRUE(is_convex(p, set_of(p, {"0", "a", "b"})));
  EXPECT_FALSE(is_convex(p, set_of(p, {"0", "d"})));
  EXPECT_TRUE(is_convex(p, ElementSet{}));
  EXPECT_TRUE(is_convex(p, p.carrier()));
}

TEST(Atoms, Fig3) {
  const Poset& p = fx("FIG3").poset();
  EXPECT_EQ(atoms(p), set_of(p, {"a", "b"}));
  EXPECT_EQ(coatoms(p), set_of(p, {"c", "d"}));
}

}  // namespace
}  // namespace lambdalat
