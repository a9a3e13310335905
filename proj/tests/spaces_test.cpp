#include <gtest/gtest.h>

#include <random>

#include "ddr/spaces.hpp"

namespace ddr {
namespace {

std::vector<Integer> ints(std::initializer_list<long> v) {
  std::vector<Integer> out;
  for (long x : v) out.emplace_back(x);
  return out;
}

TEST(SpacesTest, ValenciesByClosedForm) {
  EXPECT_EQ(hamming_space(3, 2).valencies, ints({1, 3, 3, 1}));
  EXPECT_EQ(johnson_space(7, 3).valencies, ints({1, 12, 18, 4}));
  EXPECT_EQ(johnson_space(7, 3).cardinality, 35);
  EXPECT_EQ(symmetric_space(4).valencies, ints({1, 0, 6, 8, 9}));
  EXPECT_EQ(symmetric_space(4).cardinality, 24);
}

TEST(SpacesTest, DerangementRecurrence) {
  EXPECT_EQ(derangement_table(6), ints({1, 0, 1, 2, 9, 44, 265}));
  EXPECT_EQ(derangement_table(0), ints({1}));
}

TEST(SpacesTest, ValencySumsAreExact) {
  for (int n = 1; n <= 12; ++n) {
    for (int q = 2; q <= 5; ++q) {
      auto s = hamming_space(n, q);
      Integer sum = 0;
      for (const auto& v : s.valencies) sum += v;
      EXPECT_EQ(sum, s.cardinality);
      EXPECT_EQ(s.diameter, n);
    }
    auto s = symmetric_space(n);
    Integer sum = 0;
    for (const auto& v : s.valencies) sum += v;
    EXPECT_EQ(sum, s.cardinality);
    EXPECT_EQ(s.valencies[1], 0);
  }
  // 30! overflows 64 bits; the sum must still be exact.
  auto big = symmetric_space(30);
  Integer sum = 0;
  for (const auto& v : big.valencies) sum += v;
  EXPECT_EQ(sum, factorial(30));
}

TEST(SpacesTest, RejectsInvalidParameters) {
  EXPECT_THROW(hamming_space(3, 1), Error);
  EXPECT_THROW(hamming_space(0, 2), Error);
  EXPECT_THROW(johnson_space(6, 3), Error);  // 2d == nu
  EXPECT_THROW(symmetric_space(0), Error);
  try {
    johnson_space(6, 3);
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::invalid_parameters);
  }
  const int params[] = {3};
  EXPECT_THROW(make_space(Family::hamming, params), Error);
}

TEST(SpacesTest, Distances) {
  auto h = hamming_space(3, 2);
  EXPECT_EQ(distance(h, Point::word({0, 0, 0}), Point::word({0, 1, 1})), 2);
  auto s = symmetric_space(4);
  EXPECT_EQ(distance(s, Point::permutation({0, 1, 2, 3}), Point::permutation({1, 0, 2, 3})), 2);
  auto j = johnson_space(7, 3);
  EXPECT_EQ(distance(j, Point::block({0, 1, 2}), Point::block({3, 1, 0})), 1);
}

TEST(SpacesTest, PointSpaceMismatch) {
  auto h = hamming_space(3, 2);
  try {
    distance(h, Point::word({0, 0}), Point::word({0, 1, 1}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::point_space_mismatch);
  }
  EXPECT_THROW(distance(h, Point::word({0, 0, 2}), Point::word({0, 1, 1})), Error);
  EXPECT_THROW(distance(h, Point::block({0, 1, 2}), Point::word({0, 1, 1})), Error);
  auto s = symmetric_space(3);
  EXPECT_THROW(validate_point(s, Point::permutation({0, 0, 1})), Error);
  auto j = johnson_space(7, 3);
  EXPECT_THROW(validate_point(j, Point::block({1, 1, 2})), Error);
  EXPECT_THROW(validate_point(j, Point::block({1, 2, 7})), Error);
}

TEST(SpacesTest, VerifyDdrSmallSpaces) {
  auto r = verify_ddr(hamming_space(2, 2));
  EXPECT_TRUE(r.pass);
  EXPECT_EQ(r.expected, ints({1, 2, 1}));
  EXPECT_TRUE(verify_ddr(symmetric_space(3)).pass);
  EXPECT_EQ(symmetric_space(3).valencies, ints({1, 0, 3, 2}));
  EXPECT_TRUE(verify_ddr(johnson_space(5, 2)).pass);
  EXPECT_EQ(johnson_space(5, 2).valencies, ints({1, 6, 3}));
}

TEST(SpacesTest, VerifyDdrExhaustiveUpToTenThousand) {
  for (auto s : {hamming_space(4, 3), hamming_space(8, 2), johnson_space(9, 4), symmetric_space(5), symmetric_space(6)})
    EXPECT_TRUE(verify_ddr(s, 10000, 4).pass) << s.name();
}

TEST(SpacesTest, VerifyDdrGuardsCardinality) {
  try {
    verify_ddr(symmetric_space(8), 10000);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::too_large);
  }
}

TEST(SpacesTest, VerifyDdrReportsCounterexample) {
  // Corrupt the valencies: the first enumerated point is the reported counterexample.
  auto s = hamming_space(2, 2);
  s.valencies = ints({1, 1, 2});
  auto r = verify_ddr(s, 100, 3);
  EXPECT_FALSE(r.pass);
  ASSERT_TRUE(r.counterexample.has_value());
  EXPECT_EQ(*r.counterexample, Point::word({0, 0}));
  EXPECT_EQ(r.counterexample_degrees, ints({1, 2, 1}));
}

TEST(SpacesTest, MetricAxiomsOnSampledTriples) {
  std::mt19937 rng(1);
  for (auto s : {hamming_space(6, 3), johnson_space(11, 4), symmetric_space(7)}) {
    auto pts = enumerate_points(s);
    std::uniform_int_distribution<std::size_t> pick(0, pts.size() - 1);
    for (int trial = 0; trial < 2000; ++trial) {
      const auto& a = pts[pick(rng)];
      const auto& b = pts[pick(rng)];
      const auto& c = pts[pick(rng)];
      EXPECT_EQ(distance(s, a, a), 0);
      EXPECT_EQ(distance(s, a, b), distance(s, b, a));
      EXPECT_LE(distance(s, a, c), distance(s, a, b) + distance(s, b, c));
      EXPECT_EQ(distance(s, a, b) == 0, a == b);
      EXPECT_LE(distance(s, a, b), s.diameter);
    }
  }
}

TEST(SpacesTest, EnumerationCountsMatchCardinality) {
  for (auto s : {hamming_space(3, 3), johnson_space(8, 3), symmetric_space(5)})
    EXPECT_EQ(Integer(static_cast<unsigned long>(enumerate_points(s).size())), s.cardinality);
}

}  // namespace
}  // namespace ddr
