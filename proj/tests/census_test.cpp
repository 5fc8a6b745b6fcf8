#include <gtest/gtest.h>

#include "dope/dope.hpp"
#include "support.hpp"

namespace dope {
namespace {

TEST(Census, KnownValues) {
  EXPECT_EQ(census_count(2, 3, v_table_small(2)), 22);
  EXPECT_EQ(census_count(2, 5, v_table_small(2)), 76);
  EXPECT_EQ(census_count(0, 4, v_table_small(0)), 1);
}

TEST(Census, ClosedFormsForSmallDegree) {
  for (std::size_t m = 1; m <= 12; ++m) {
    const auto mm = static_cast<std::int64_t>(m);
    ASSERT_EQ(census_count(1, m, v_table_small(1)), m + 1);
    ASSERT_EQ(census_count(2, m, v_table_small(2)), 3 * binomial(mm, 3) + 3 * binomial(mm, 2) + 3 * mm + 1);
  }
}

TEST(Census, MatchesHandAnalysis) {
  for (std::size_t n = 0; n <= 2; ++n)
    for (std::size_t m = 1; m <= 6; ++m)
      ASSERT_EQ(census_count(n, m, v_table_small(n)), testing::root_configuration_census(n, m)) << n << " " << m;
}

TEST(Census, MatchesSampledPolynomials) {
  // the hand analysis itself, checked against actual dope matrices
  for (std::size_t n = 0; n <= 2; ++n)
    for (std::size_t m = 1; m <= 3; ++m)
      ASSERT_EQ(census_count(n, m, v_table_small(n)), testing::sampled_census(n, m)) << n << " " << m;
}

TEST(Census, TableErrors) {
  EXPECT_THROW(v_table_small(3), Error);
  auto table = v_table_small(2);
  table.values.erase(3);
  EXPECT_THROW(census_count(2, 4, table), Error);
  EXPECT_THROW(census_count(1, 4, v_table_small(2)), Error);
  auto lead = v_table_small(2);
  lead.provenance = CensusProvenance::leading_terms_only;
  EXPECT_THROW(census_count(2, 4, lead), Error);
}

TEST(LeadingTerms, KnownCoefficients) {
  EXPECT_EQ(v_top(1), 1);
  EXPECT_EQ(v_top(2), 3);
  EXPECT_EQ(v_top(3), 60);
  EXPECT_EQ(v_top_minus1(3), 90);
  for (std::size_t n = 1; n <= 2; ++n) {
    const auto table = v_table_small(n);
    const std::size_t t = max_nonzero_rows(n);
    EXPECT_EQ(v_top(n), table.values.at(t));
    EXPECT_EQ(v_top_minus1(n), table.values.at(t - 1));
  }
}

TEST(LeadingTerms, Report) {
  const auto lt = census_leading_terms(3, 7);
  EXPECT_EQ(lt.value, 60 * binomial(7, 6) + 90 * binomial(7, 5));
  EXPECT_EQ(lt.error_term, "O(m^4)");
}

TEST(Sandwich, HoldsForSmallDegree) {
  for (std::size_t n = 1; n <= 2; ++n) {
    const auto table = v_table_small(n);
    for (std::size_t m = max_nonzero_rows(n) + 1; m <= 12; ++m) {
      const auto r = sandwich_bounds(n, m, table);
      const Rational exact(census_count(n, m, table));
      ASSERT_LE(std::get<Rational>(*r.lower), exact);
      ASSERT_LE(exact, std::get<Rational>(*r.upper));
    }
  }
  EXPECT_THROW(sandwich_bounds(2, 3, v_table_small(2)), Error);
}

TEST(UpperBound, DominatesExactCensus) {
  for (std::size_t n = 1; n <= 2; ++n)
    for (std::size_t m = 1; m <= 8; ++m)
      ASSERT_LE(census_count(n, m, v_table_small(n)), upper_bound_count(m, n));
}

}  // namespace
}  // namespace dope
