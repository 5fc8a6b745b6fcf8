#include <gtest/gtest.h>

#include <cmath>

#include "dope/dope.hpp"
#include "support.hpp"

namespace dope {
namespace {

TEST(GenericCount, KnownValues) {
  EXPECT_EQ(count_generic_k(3, 3, 2), 33);
  EXPECT_EQ(count_generic_k(3, 3, 4), 0);
  EXPECT_EQ(count_generic_total(1, 3), 8);
  EXPECT_THROW(count_generic_total(0, 3), Error);
}

TEST(GenericCount, MatchesBruteForcePerK) {
  for (std::size_t m = 1; m <= 3; ++m)
    for (std::size_t n = 0; n <= 3; ++n) {
      std::vector<BigInt> by_k(n + 2, 0);
      BigInt total = 0;
      for (const auto& p : testing::all_patterns(m, n))
        if (testing::brute_safe(p)) {
          by_k[p.ones()] += 1;
          total += 1;
        }
      for (std::size_t k = 0; k <= n + 1; ++k) ASSERT_EQ(count_generic_k(m, n, k), by_k[k]) << m << n << k;
      ASSERT_EQ(count_generic_total(m, n), total);
    }
}

TEST(GenericCount, ClosedFormsForOneAndTwoRows) {
  for (std::size_t n = 0; n <= 30; ++n) {
    ASSERT_EQ(count_generic_total(1, n), pow_int(2, n));
    ASSERT_EQ(count_generic_total(2, n), binomial(static_cast<std::int64_t>(2 * n + 1), static_cast<std::int64_t>(n)));
  }
}

TEST(Bounds, GenericSandwichKnownValues) {
  const auto r = generic_bounds(3, 2);
  EXPECT_EQ(std::get<Rational>(*r.lower), 12);
  EXPECT_EQ(std::get<Rational>(*r.upper), 48);
  EXPECT_THROW(generic_bounds(2, 2), Error);
  EXPECT_THROW(generic_bounds(3, 0), Error);
}

TEST(Bounds, GenericSandwichContainsCount) {
  for (std::size_t m = 3; m <= 20; ++m)
    for (std::size_t n = 1; n <= 20; ++n) {
      const auto r = generic_bounds(m, n);
      const Rational c(count_generic_total(m, n));
      ASSERT_LE(std::get<Rational>(*r.lower), c);
      ASSERT_LE(c, std::get<Rational>(*r.upper));
    }
}

TEST(Bounds, LogEndpoints) {
  const auto r = small_m_log_bounds(2, 2);
  // log(2^2 * C(4,2)) = log 24, log(2^4 * 6) = log 96
  EXPECT_NEAR(std::get<BigFloat>(*r.lower).to_double(), std::log(24.0), 1e-12);
  EXPECT_NEAR(std::get<BigFloat>(*r.upper).to_double(), std::log(96.0), 1e-12);
  EXPECT_THROW(small_m_log_bounds(1, 2), Error);
  EXPECT_THROW(small_m_log_bounds(4, 2), Error);
}

TEST(Bounds, UpperBoundValue) {
  // C(4,2) * (4^2 + 2)
  EXPECT_EQ(upper_bound_count(2, 2), 108);
  EXPECT_THROW(upper_bound_count(0, 2), Error);
}

TEST(Bounds, GrossboundUsesEnumeratedCount) {
  // a = 0: C = [n == 0] so the bound collapses to 0 for n >= 1
  EXPECT_EQ(grossbound_lower(2, 4, 0, 1).to_double(), 0.0);
  // a = 2, n = 4, T = 2, m = 2: only the enumerated count remains
  const BigInt c = count_limited_saturated(2, 4, 2);
  EXPECT_NEAR(grossbound_lower(2, 4, 2, 2).to_double(), c.get_d(), 1e-9);
  const BigFloat one_step = grossbound_lower(3, 4, 2, 1);
  const double base = (5.0 / 2.0 - 2.0 / 4.0) / std::exp(1.0);
  EXPECT_NEAR(one_step.to_double(), count_limited_saturated(2, 4, 1).get_d() * base, 1e-9);
  EXPECT_THROW(grossbound_lower(11, 4, 0, 1), Error);
}

}  // namespace
}  // namespace dope
