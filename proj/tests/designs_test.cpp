#include <gtest/gtest.h>

#include <random>

#include "ddr/constructions.hpp"
#include "ddr/designs.hpp"

namespace ddr {
namespace {

// Brute-force t-design check for block sets, independent of the library ranks.
bool is_block_t_design(const PointSet& set, int t) {
  const auto& s = set.space();
  long expected = -1;
  bool ok = true;
  detail::for_each_subset(s.n, t, [&](const std::vector<int>& sub) {
    long count = 0;
    for (const auto& b : set.elements()) {
      const auto& e = b.entries();
      count += std::all_of(sub.begin(), sub.end(), [&](int v) { return std::find(e.begin(), e.end(), v) != e.end(); });
    }
    if (expected < 0) expected = count;
    ok = ok && count == expected;
    return ok;
  });
  return ok;
}

TEST(DesignsTest, DualFrequenciesOfEvenWeightCode) {
  auto set = even_weight_code(3);
  auto sys = gram_schmidt(set.space(), 3);
  auto hat = dual_frequencies(frequencies(set), sys);
  ASSERT_EQ(hat.size(), 4u);
  EXPECT_EQ(hat.numerators[0], 1);
  EXPECT_EQ(hat.numerators[1], 0);
  EXPECT_EQ(hat.numerators[2], 0);
  EXPECT_NE(hat.numerators[3], 0);
  EXPECT_EQ(strength_by_dual(hat), 2);
}

TEST(DesignsTest, WholeSpaceReachesCapacity) {
  for (auto s : {hamming_space(5, 2), johnson_space(9, 4), symmetric_space(5)}) {
    auto r = design_report(all_points(s));
    EXPECT_EQ(r.strength_moments, r.capacity) << s.name();
    EXPECT_EQ(r.strength_dual, r.capacity);
    EXPECT_TRUE(r.capacity_reached);
    EXPECT_TRUE(r.agree);
  }
}

TEST(DesignsTest, KnownStrengths) {
  auto eh = design_report(extended_hamming_code(4), {4});
  EXPECT_EQ(eh.strength_moments, 7);
  EXPECT_EQ(eh.strength_dual, 7);
  EXPECT_EQ(eh.combinatorial_strength, 7);
  EXPECT_TRUE(eh.agree);

  auto ew = design_report(even_weight_code(3));
  EXPECT_EQ(ew.strength_moments, 2);
  EXPECT_FALSE(ew.capacity_reached);

  auto simplex = design_report(simplex_code(3));
  EXPECT_EQ(simplex.strength_moments, 2);
  EXPECT_EQ(simplex.combinatorial_strength, 2);

  auto fano = design_report(fano_plane());
  EXPECT_EQ(fano.capacity, 3);
  EXPECT_EQ(fano.strength_moments, 2);
  EXPECT_EQ(fano.combinatorial_strength, 2);
  ASSERT_TRUE(fano.eta.has_value());
  EXPECT_EQ(*fano.eta, 1);
  EXPECT_TRUE(fano.agree);
}

TEST(DesignsTest, OrthogonalArrayEdgeCases) {
  PointSet single(hamming_space(3, 2), {Point::word({1, 0, 1})});
  EXPECT_EQ(oa_strength(single), 0);
  // Two complementary words: every column balanced, no pair of columns is.
  PointSet pair(hamming_space(3, 2), {Point::word({0, 0, 0}), Point::word({1, 1, 1})});
  EXPECT_EQ(oa_strength(pair), 1);
  EXPECT_EQ(design_report(pair).strength_moments, 1);
  EXPECT_THROW(oa_strength(fano_plane()), Error);
}

TEST(DesignsTest, BlockDesignEdgeCases) {
  PointSet one(johnson_space(7, 3), {Point::block({0, 1, 2})});
  auto b = block_design_strength(one);
  EXPECT_EQ(b.t, 0);
  EXPECT_EQ(b.eta, 1);
  auto all = block_design_strength(all_points(johnson_space(8, 3)));
  EXPECT_EQ(all.t, 3);
  EXPECT_EQ(all.eta, 1);
}

TEST(DesignsTest, RandomBlockSetsAgreeWithBruteForce) {
  std::mt19937 rng(11);
  auto s = johnson_space(8, 3);
  auto pts = enumerate_points(s);
  for (int trial = 0; trial < 40; ++trial) {
    std::shuffle(pts.begin(), pts.end(), rng);
    PointSet set(s, std::vector<Point>(pts.begin(), pts.begin() + 1 + trial));
    auto b = block_design_strength(set);
    int brute = 0;
    for (int t = 1; t <= 3 && is_block_t_design(set, t); ++t) brute = t;
    EXPECT_EQ(b.t, brute);
    auto r = design_report(set);
    EXPECT_EQ(r.strength_moments, brute);
    EXPECT_EQ(r.strength_dual, brute);
  }
}

TEST(DesignsTest, RandomCodesAgreeAcrossRoutes) {
  std::mt19937 rng(5);
  auto s = hamming_space(6, 2);
  auto pts = enumerate_points(s);
  for (int size : {8, 16, 32, 16, 8, 32, 4, 2}) {
    std::shuffle(pts.begin(), pts.end(), rng);
    auto r = design_report(PointSet(s, std::vector<Point>(pts.begin(), pts.begin() + size)));
    EXPECT_TRUE(r.agree);
  }
  // Linear codes: the affine span of random generators.
  for (int trial = 0; trial < 10; ++trial) {
    std::vector<Point> words;
    std::uniform_int_distribution<int> bit(0, 1);
    std::vector<std::vector<int>> gens(3, std::vector<int>(6));
    for (auto& g : gens)
      for (auto& v : g) v = bit(rng);
    std::set<std::vector<int>> seen;
    for (int mask = 0; mask < 8; ++mask) {
      std::vector<int> w(6, 0);
      for (int i = 0; i < 3; ++i)
        if (mask >> i & 1)
          for (int j = 0; j < 6; ++j) w[static_cast<std::size_t>(j)] ^= gens[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
      if (seen.insert(w).second) words.push_back(Point::word(w));
    }
    EXPECT_TRUE(design_report(PointSet(s, words)).agree);
  }
}

TEST(DesignsTest, Transitivity) {
  EXPECT_EQ(transitivity_degree(alternating_group(4)), 2);
  EXPECT_EQ(transitivity_degree(alternating_group(5)), 3);
  for (int n = 2; n <= 5; ++n) EXPECT_EQ(transitivity_degree(symmetric_group(n)), n);
  EXPECT_EQ(transitivity_degree(cyclic_group(3)), 1);
  EXPECT_EQ(transitivity_degree(cyclic_group(5)), 1);
  PointSet not_group(symmetric_space(3), {Point::permutation({0, 1, 2}), Point::permutation({1, 2, 0})});
  EXPECT_FALSE(is_group(not_group));
  try {
    transitivity_degree(not_group);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::not_a_group);
  }
}

TEST(DesignsTest, GroupsAreDesignsOfTheirTransitivity) {
  for (const auto& g : {alternating_group(4), alternating_group(5), cyclic_group(5), symmetric_group(4)}) {
    auto r = design_report(g);
    ASSERT_TRUE(r.combinatorial_strength.has_value());
    EXPECT_GE(r.strength_moments, std::min(*r.combinatorial_strength, r.capacity));
    EXPECT_TRUE(r.agree);
  }
  EXPECT_EQ(design_report(alternating_group(4)).strength_moments, 2);
}

TEST(DesignsTest, FixedPointMoments) {
  auto s3 = fixed_point_moments(symmetric_group(3), 4);
  EXPECT_EQ(s3, (std::vector<Rational>{1, 2, 5, 14}));
  auto a4 = fixed_point_moments(alternating_group(4), 3);
  EXPECT_EQ(a4, (std::vector<Rational>{1, 2, 6}));
  // A t-transitive group matches the Poisson(1) moments up to t.
  auto bell = bell_numbers(6);
  EXPECT_EQ(bell, (std::vector<Integer>{1, 1, 2, 5, 15, 52, 203}));
  auto s5 = fixed_point_moments(symmetric_group(5), 5);
  for (int i = 1; i <= 5; ++i) EXPECT_EQ(s5[static_cast<std::size_t>(i - 1)], Rational(bell[static_cast<std::size_t>(i)]));
}

}  // namespace
}  // namespace ddr
