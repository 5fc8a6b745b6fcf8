#include <gtest/gtest.h>

#include "dope/dope.hpp"
#include "support.hpp"

namespace dope {
namespace {

using testing::Gen;

RationalPolynomial from_roots(const std::vector<long>& roots) {
  RationalPolynomial p({1});
  for (long r : roots) p = p * RationalPolynomial::linear_root(Rational(r));
  return p;
}

TEST(DopeMatrix, NonGenericExample) {
  const auto m = dope_matrix(from_roots({0, 2}), PointTuple({Rational(0), Rational(1), Rational(2)}));
  EXPECT_EQ(m, DopePattern::from_rows({"100", "010", "100"}));
  EXPECT_FALSE(is_safe(m));
}

TEST(DopeMatrix, AgreesWithDirectEvaluation) {
  Gen g(41);
  for (int iter = 0; iter < 100; ++iter) {
    const auto p = g.polynomial(8);
    std::vector<Rational> pts;
    std::set<Rational> seen;
    while (pts.size() < 4) {
      const Rational x = g.rational(4, 2);
      if (seen.insert(x).second) pts.push_back(x);
    }
    const auto m = dope_matrix(p, PointTuple(pts));
    for (std::size_t i = 0; i < pts.size(); ++i)
      for (std::size_t j = 0; j < m.cols(); ++j)
        ASSERT_EQ(m.at(i, j), testing::oracle_derivative_at(p, j, pts[i]) == 0);
  }
  EXPECT_THROW(dope_matrix(RationalPolynomial(), PointTuple({Rational(0)})), Error);
}

// Exhaustive over subsets J: gcd of the chosen derivatives, no pruning.
std::size_t oracle_row_weight(const RationalPolynomial& p) {
  std::vector<RationalPolynomial> chain{p};
  for (long j = 1; j <= p.degree(); ++j) chain.push_back(poly_derivative(p, static_cast<std::size_t>(j)));
  std::size_t best = 0;
  for (std::uint32_t mask = 1; mask < (1U << chain.size()); ++mask) {
    RationalPolynomial g;
    for (std::size_t j = 0; j < chain.size(); ++j)
      if ((mask >> j) & 1U) g = g.is_zero() ? chain[j] : poly_gcd(g, chain[j]);
    if (g.degree() >= 1) best = std::max(best, static_cast<std::size_t>(std::popcount(mask)));
  }
  return best;
}

TEST(RowWeight, KnownValues) {
  EXPECT_EQ(max_row_weight(from_roots({0, 0, 0})), 3U);
  EXPECT_EQ(max_row_weight(from_roots({1, 2, 3})), 2U);
  EXPECT_EQ(max_row_weight(RationalPolynomial({5})), 0U);
  // x^2 + 1: roots are not rational, the derivative root 0 still counts
  EXPECT_EQ(max_row_weight(RationalPolynomial({1, 0, 1})), 1U);
}

TEST(RowWeight, AgreesWithExhaustiveSubsets) {
  Gen g(42);
  for (int iter = 0; iter < 120; ++iter) {
    RationalPolynomial p;
    if (g.coin()) {
      std::vector<long> roots;
      const auto k = g.range(1, 6);
      for (int i = 0; i < k; ++i) roots.push_back(static_cast<long>(g.range(-2, 2)));
      p = from_roots(roots);
    } else {
      p = g.polynomial(6);
    }
    ASSERT_EQ(max_row_weight(p), oracle_row_weight(p));
  }
}

TEST(Synthesis, ThreeRowCubic) {
  const auto target = DopePattern::from_rows({"0100", "0010", "0000"});
  const auto cert = synthesize(target, 7);
  EXPECT_TRUE(cert.verified);
  EXPECT_TRUE(verify_certificate(cert));
  EXPECT_EQ(cert.poly.degree(), 3);
  EXPECT_EQ(cert.prepended_columns, 1U);
  EXPECT_EQ(dope_matrix(cert.poly, cert.points), target);
}

TEST(Synthesis, EverySmallSafePattern) {
  for (std::size_t m = 1; m <= 2; ++m)
    for (std::size_t n = 0; n <= 3; ++n)
      for_each_safe(m, n, std::nullopt, [&](const DopePattern& p) {
        const auto cert = synthesize(p, 1);
        ASSERT_EQ(dope_matrix(cert.poly, cert.points), p);
        ASSERT_EQ(cert.padded_row, m == 1);
      });
}

TEST(Synthesis, RandomSafePatterns) {
  Gen g(43);
  for (int iter = 0; iter < 20; ++iter) {
    const auto rows = static_cast<std::size_t>(g.range(1, 5));
    const auto n = static_cast<std::size_t>(g.range(0, 5));
    const auto p = g.safe_pattern(rows, n);
    ASSERT_TRUE(testing::brute_safe(p));
    const auto cert = synthesize(p, static_cast<std::uint64_t>(iter));
    ASSERT_EQ(dope_matrix(cert.poly, cert.points), p);
  }
}

TEST(Synthesis, SameSeedSameCertificate) {
  const auto target = DopePattern::from_rows({"100", "010"});
  const auto a = synthesize(target, 99);
  const auto b = synthesize(target, 99);
  EXPECT_EQ(a.poly, b.poly);
  EXPECT_EQ(a.points, b.points);
}

TEST(Synthesis, RejectsUnsafe) {
  try {
    synthesize(DopePattern::from_rows({"001"}), 0);
    FAIL() << "expected NotSafe";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotSafe);
  }
}

TEST(Synthesis, DegeneratePointsReturnNothing) {
  // roots 0 and 2
  const auto target = DopePattern::from_rows({"100", "100"});
  EXPECT_TRUE(synthesize_at(target, PointTuple({Rational(0), Rational(2)})).has_value());
  // the midpoint 1 is forced to be a root of P', so row "000" there is impossible
  const auto with_zero_row = DopePattern::from_rows({"100", "100", "000"});
  EXPECT_FALSE(synthesize_at(with_zero_row, PointTuple({Rational(0), Rational(2), Rational(1)})).has_value());
  EXPECT_THROW(synthesize_at(target, PointTuple({Rational(0)})), Error);
}

TEST(Synthesis, LimitedOneOnePerRow) {
  const auto target = DopePattern::from_rows({"1000", "1000", "1000"});
  const auto cert = synthesize_limited(target, 1, 5);
  EXPECT_EQ(max_row_weight(cert.poly), 1U);
  EXPECT_EQ(dope_matrix(cert.poly, cert.points), target);
}

TEST(Synthesis, LimitedPreconditions) {
  EXPECT_THROW(synthesize_limited(DopePattern::from_rows({"110", "000"}), 1, 0), Error);
  try {
    synthesize_limited(DopePattern::from_rows({"1010"}), 2, 0);
    FAIL() << "expected NotSaturated";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotSaturated);
  }
  const auto cert = synthesize_limited(DopePattern::from_rows({"1010"}), 2, 0, 20, true);
  EXPECT_LE(max_row_weight(cert.poly), 2U);
  EXPECT_EQ(dope_matrix(cert.poly, cert.points), DopePattern::from_rows({"1010"}));
}

TEST(Synthesis, VerifyCertificateDetectsTampering) {
  auto cert = synthesize(DopePattern::from_rows({"100", "010"}), 3);
  ASSERT_TRUE(verify_certificate(cert));
  cert.poly = cert.poly + RationalPolynomial({1});
  EXPECT_FALSE(verify_certificate(cert));
}

}  // namespace
}  // namespace dope
