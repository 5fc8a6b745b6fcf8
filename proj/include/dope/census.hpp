#ifndef DOPE_CENSUS_HPP
#define DOPE_CENSUS_HPP

#include <cstddef>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>

#include "dope/counting.hpp"
#include "dope/error.hpp"
#include "dope/rational.hpp"

namespace dope {

/// T(n) = (n^2 + n)/2, the most nonzero rows a degree-n dope matrix can have.
constexpr std::size_t max_nonzero_rows(std::size_t n) noexcept { return (n * n + n) / 2; }

enum class CensusProvenance { exact_small_n, leading_terms_only };

/// V(k, n) for k in [0, T(n)]: k x (n+1) dope matrices without zero rows.
struct CensusTable {
  std::size_t n = 0;
  std::map<std::size_t, BigInt> values;
  CensusProvenance provenance = CensusProvenance::exact_small_n;
};

/**
 * Exact V(k, n) for n <= 2.
 *
 * Root configurations, per degree:
 *   n = 0: a nonzero constant never vanishes, so only V(0, 0) = 1.
 *   n = 1: one simple root, so one possible nonzero row (1,0).
 *   n = 2: distinct roots r1, r2 give rows (1,0,0) twice and (0,1,0) at the
 *          midpoint; a double root gives the single row (1,1,0).
 *          k = 1: {100, 010, 110}; k = 2: ordered pairs from {100, 100, 010}
 *          with at most one 010: 3; k = 3: arrangements of {100, 100, 010}: 3.
 */
inline CensusTable v_table_small(std::size_t n) {
  CensusTable t;
  t.n = n;
  t.provenance = CensusProvenance::exact_small_n;
  switch (n) {
    case 0: t.values = {{0, 1}}; break;
    case 1: t.values = {{0, 1}, {1, 1}}; break;
    case 2: t.values = {{0, 1}, {1, 3}, {2, 3}, {3, 3}}; break;
    default: throw Error(ErrorCode::OutOfDomain, "exact census tables exist only for n <= 2");
  }
  return t;
}

namespace detail {

inline void require_complete(const CensusTable& table) {
  if (table.provenance != CensusProvenance::exact_small_n)
    throw Error(ErrorCode::IncompleteTable, "table is not exact");
  for (std::size_t k = 0; k <= max_nonzero_rows(table.n); ++k)
    if (!table.values.contains(k)) throw Error(ErrorCode::IncompleteTable, "missing V(" + std::to_string(k) + ", n)");
}

}  // namespace detail

/// |D_n^m| = sum_k C(m, k) V(k, n).
inline BigInt census_count(std::size_t n, std::size_t m, const CensusTable& table) {
  if (table.n != n) throw Error(ErrorCode::IncompleteTable, "table belongs to a different n");
  detail::require_complete(table);
  BigInt total = 0;
  for (std::size_t k = 0; k <= max_nonzero_rows(n); ++k)
    total += binomial(static_cast<std::int64_t>(m), static_cast<std::int64_t>(k)) * table.values.at(k);
  return total;
}

/// V(T(n), n) = T(n)! / (1! 2! ... n!).
inline BigInt v_top(std::size_t n) {
  if (n < 1) throw Error(ErrorCode::OutOfDomain, "v_top needs n >= 1");
  BigInt denom = 1;
  for (std::size_t j = 1; j <= n; ++j) denom *= factorial(static_cast<std::int64_t>(j));
  const BigInt num = factorial(static_cast<std::int64_t>(max_nonzero_rows(n)));
  if (num % denom != 0) throw std::logic_error("multinomial not integral");
  return num / denom;
}

/// Coefficient of C(m, T(n) - 1): v_top(n) (1 + (n-1)(n-2)/4).
inline BigInt v_top_minus1(std::size_t n) {
  if (n < 1) throw Error(ErrorCode::OutOfDomain, "v_top_minus1 needs n >= 1");
  const BigInt scaled = v_top(n) * static_cast<unsigned long>(4 + (n - 1) * (n - 2));
  if (scaled % 4 != 0) throw std::logic_error("second leading coefficient not integral");
  return scaled / 4;
}

/// max(C(m,T) V(T,n), |D_n^T|) <= |D_n^m| <= C(m,T) |D_n^T| for m > T = T(n).
/// `at_threshold` is |D_n^T|; `top` is V(T, n).
inline BoundReport sandwich_bounds(std::size_t n, std::size_t m, const BigInt& at_threshold, const BigInt& top) {
  const std::size_t t = max_nonzero_rows(n);
  if (m <= t) throw Error(ErrorCode::OutOfDomain, "sandwich needs m > (n^2+n)/2");
  const BigInt choose = binomial(static_cast<std::int64_t>(m), static_cast<std::int64_t>(t));
  BigInt lower = choose * top;
  if (at_threshold > lower) lower = at_threshold;
  const BigInt upper = choose * at_threshold;
  return BoundReport{m, n, BoundKind::large_m_sandwich, Rational(lower), Rational(upper)};
}

inline BoundReport sandwich_bounds(std::size_t n, std::size_t m, const CensusTable& table) {
  const std::size_t t = max_nonzero_rows(n);
  if (m <= t) throw Error(ErrorCode::OutOfDomain, "sandwich needs m > (n^2+n)/2");
  return sandwich_bounds(n, m, census_count(n, t, table), table.values.at(t));
}

/// Leading part of the census polynomial for n without an exact table:
/// v_top(n) C(m, T) + v_top_minus1(n) C(m, T-1), error O(m^{T-2}).
struct LeadingTerms {
  std::size_t n = 0;
  std::size_t m = 0;
  BigInt top_coefficient;
  BigInt second_coefficient;
  BigInt value;  // the two terms evaluated at m
  std::string error_term;
};

inline LeadingTerms census_leading_terms(std::size_t n, std::size_t m) {
  const std::size_t t = max_nonzero_rows(n);
  LeadingTerms out;
  out.n = n;
  out.m = m;
  out.top_coefficient = v_top(n);
  out.second_coefficient = v_top_minus1(n);
  out.value = out.top_coefficient * binomial(static_cast<std::int64_t>(m), static_cast<std::int64_t>(t)) +
              out.second_coefficient * binomial(static_cast<std::int64_t>(m), static_cast<std::int64_t>(t) - 1);
  out.error_term = "O(m^" + std::to_string(static_cast<long>(t) - 2) + ")";
  return out;
}

}  // namespace dope

#endif  // DOPE_CENSUS_HPP
