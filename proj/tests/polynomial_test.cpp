#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "ddr/polynomial.hpp"

namespace ddr {
namespace {

Polynomial from_roots(const std::vector<Rational>& roots) {
  Polynomial p = Polynomial::constant(1);
  for (const auto& r : roots) p = p * Polynomial({Rational(-r), Rational(1)});
  return p;
}

TEST(PolynomialTest, EvaluatesByHorner) {
  Polynomial p{Rational(3), Rational(-6), Rational(2)};  // 2x^2 - 6x + 3
  EXPECT_EQ(p(Rational(2)), Rational(-1));
  EXPECT_EQ(p.degree(), 2);
  EXPECT_EQ(Polynomial{}.degree(), -1);
  EXPECT_EQ(Polynomial({Rational(0), Rational(0)}).degree(), -1);
}

TEST(PolynomialTest, DivmodReconstructs) {
  Polynomial a{Rational(1), Rational(2), Rational(0), Rational(5)};
  Polynomial b{ratio(-1, 2), Rational(3)};
  auto [q, r] = a.divmod(b);
  EXPECT_EQ(q * b + r, a);
  EXPECT_LT(r.degree(), b.degree());
}

TEST(PolynomialTest, ExactRationalRootsAreHitExactly) {
  auto roots = real_roots(from_roots({Rational(6), Rational(10)}));
  ASSERT_EQ(roots.size(), 2u);
  EXPECT_TRUE(roots[0].exact());
  EXPECT_EQ(roots[0].lo, Rational(6));
  EXPECT_EQ(roots[1].lo, Rational(10));
}

TEST(PolynomialTest, IrrationalRootsAreBracketedWithinTolerance) {
  // x^2 - 2
  auto roots = real_roots(Polynomial{Rational(-2), Rational(0), Rational(1)}, 1e-12);
  ASSERT_EQ(roots.size(), 2u);
  EXPECT_LE(to_double(roots[1].hi - roots[1].lo), 1e-12);
  EXPECT_LE(roots[1].lo * roots[1].lo, Rational(2));
  EXPECT_GE(roots[1].hi * roots[1].hi, Rational(2));
  EXPECT_NEAR(roots[0].value(), -std::sqrt(2.0), 1e-12);
}

TEST(PolynomialTest, NoRealRoots) {
  EXPECT_TRUE(real_roots(Polynomial{Rational(1), Rational(0), Rational(1)}).empty());
}

TEST(PolynomialTest, RandomSquareFreeProductsRecoverTheirRoots) {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> num(-40, 40), den(1, 7), count(1, 6);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<Rational> rs;
    const int k = count(rng);
    while (static_cast<int>(rs.size()) < k) {
      Rational r(num(rng), den(rng));
      r.canonicalize();
      if (std::find(rs.begin(), rs.end(), r) == rs.end()) rs.push_back(r);
    }
    std::sort(rs.begin(), rs.end());
    auto found = real_roots(from_roots(rs) * ratio(3, 5), 1e-10);
    ASSERT_EQ(found.size(), rs.size());
    for (std::size_t i = 0; i < rs.size(); ++i) {
      EXPECT_LE(found[i].lo, rs[i]);
      EXPECT_GE(found[i].hi, rs[i]);
    }
  }
}

}  // namespace
}  // namespace ddr
