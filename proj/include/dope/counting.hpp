#ifndef DOPE_COUNTING_HPP
#define DOPE_COUNTING_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string_view>
#include <variant>

#include "dope/error.hpp"
#include "dope/patterns.hpp"
#include "dope/rational.hpp"

namespace dope {

enum class BoundKind {
  generic_count_bounds,
  small_m_log_bounds,
  upper_bound_count,
  grossbound_lower,
  large_m_sandwich,
};

inline std::string_view to_string(BoundKind k) noexcept {
  switch (k) {
    case BoundKind::generic_count_bounds: return "generic_count_bounds";
    case BoundKind::small_m_log_bounds: return "small_m_log_bounds";
    case BoundKind::upper_bound_count: return "upper_bound_count";
    case BoundKind::grossbound_lower: return "grossbound_lower";
    case BoundKind::large_m_sandwich: return "large_m_sandwich";
  }
  return "unknown";
}

/// Exact values are Rational (integers have denominator 1); values that went
/// through log/exp are BigFloat.
using BoundValue = std::variant<Rational, BigFloat>;

struct BoundReport {
  std::size_t m = 0;
  std::size_t n = 0;
  BoundKind kind = BoundKind::generic_count_bounds;
  std::optional<BoundValue> lower;
  std::optional<BoundValue> upper;
};

/// Safe m x (n+1) patterns with exactly k ones.
///
/// Evaluated as C(N-1, k) - (m-1) C(N-1, k-1) with N = (n+1)m and checked
/// against (n+1-k)/(n+1) * C(N, k); the two must agree exactly.
inline BigInt count_generic_k(std::size_t m, std::size_t n, std::size_t k) {
  if (m == 0) throw Error(ErrorCode::OutOfDomain, "m must be positive");
  if (k > n) return 0;
  const auto big_n = static_cast<std::int64_t>((n + 1) * m);
  const auto kk = static_cast<std::int64_t>(k);
  const BigInt integer_form = binomial(big_n - 1, kk) - BigInt(static_cast<unsigned long>(m - 1)) * binomial(big_n - 1, kk - 1);

  const BigInt scaled = BigInt(static_cast<unsigned long>(n + 1 - k)) * binomial(big_n, kk);
  const BigInt divisor = static_cast<unsigned long>(n + 1);
  if (scaled % divisor != 0 || scaled / divisor != integer_form)
    throw std::logic_error("generic count closed forms disagree");
  return integer_form;
}

/// |D_n^gen(m)|, the number of safe m x (n+1) patterns.
inline BigInt count_generic_total(std::size_t m, std::size_t n) {
  if (m == 0) throw Error(ErrorCode::OutOfDomain, "m must be positive");
  const auto top = static_cast<std::int64_t>((n + 1) * m) - 1;
  BigInt tail = 0;
  for (std::size_t k = 0; k < n; ++k) tail += binomial(top, static_cast<std::int64_t>(k));
  const BigInt total = binomial(top, static_cast<std::int64_t>(n)) - (BigInt(static_cast<long>(m)) - 2) * tail;

  BigInt by_k = 0;
  for (std::size_t k = 0; k <= n; ++k) by_k += count_generic_k(m, n, k);
  if (by_k != total) throw std::logic_error("generic total disagrees with per-k sum");
  return total;
}

/// Lower C((n+1)m, n)/(n+1) and upper (1 + 1/(m-2))^2 times that, both exact.
inline BoundReport generic_bounds(std::size_t m, std::size_t n) {
  if (m < 3 || n < 1) throw Error(ErrorCode::OutOfDomain, "generic bounds need m >= 3 and n >= 1");
  const Rational lower = make_rational(binomial(static_cast<std::int64_t>((n + 1) * m), static_cast<std::int64_t>(n)),
                                       BigInt(static_cast<unsigned long>(n + 1)));
  const Rational factor = 1 + make_rational(1, BigInt(static_cast<unsigned long>(m - 2)));
  const Rational upper = factor * factor * lower;
  return BoundReport{m, n, BoundKind::generic_count_bounds, lower, upper};
}

/// Endpoints log(n^m C(mn, n)) and log(n^{2m} C(mn, n)); the (1+o(1))
/// factors in front of them are not modelled.
inline BoundReport small_m_log_bounds(std::size_t m, std::size_t n) {
  if (m <= 1 || 2 * m > n * n + n)
    throw Error(ErrorCode::OutOfDomain, "log bounds need 1 < m <= (n^2+n)/2");
  const BigInt c = binomial(static_cast<std::int64_t>(m * n), static_cast<std::int64_t>(n));
  const BigInt nn = static_cast<unsigned long>(n);
  const BigInt low = pow_int(nn, m) * c;
  const BigInt high = pow_int(nn, 2 * m) * c;
  return BoundReport{m, n, BoundKind::small_m_log_bounds, log(BigFloat(low)), log(BigFloat(high))};
}

/// C(mn, n) * (((n^2+n+2)/2)^m + n), an upper bound on |D_n^m|.
inline BigInt upper_bound_count(std::size_t m, std::size_t n) {
  if (m < 1 || n < 1) throw Error(ErrorCode::OutOfDomain, "upper bound needs m, n >= 1");
  const BigInt base = static_cast<unsigned long>((n * n + n + 2) / 2);
  return binomial(static_cast<std::int64_t>(m * n), static_cast<std::int64_t>(n)) *
         (pow_int(base, m) + static_cast<unsigned long>(n));
}

/// C(a,n,T) * ((n+1)/(e(T^2+T)) - a/(en))^{m-a}, with C(a,n,T) enumerated.
inline BigFloat grossbound_lower(std::size_t m, std::size_t n, std::size_t a, std::size_t limit,
                                 std::uint64_t budget = kDefaultEnumerationBudget) {
  if (n < 1 || limit < 1 || a > m || m * (limit * limit + limit) > n * n + n)
    throw Error(ErrorCode::OutOfDomain, "need n, T >= 1 and 0 <= a <= m <= (n^2+n)/(T^2+T)");
  const BigInt c = count_limited_saturated(a, n, limit, budget);
  const Rational inner = make_rational(static_cast<unsigned long>(n + 1), static_cast<unsigned long>(limit * limit + limit)) -
                         make_rational(static_cast<unsigned long>(a), static_cast<unsigned long>(n));
  const BigFloat base = BigFloat(inner) / BigFloat::e();
  return BigFloat(c) * pow(base, m - a);
}

inline BoundReport grossbound_report(std::size_t m, std::size_t n, std::size_t a, std::size_t limit) {
  return BoundReport{m, n, BoundKind::grossbound_lower, grossbound_lower(m, n, a, limit), std::nullopt};
}

inline BoundReport upper_bound_report(std::size_t m, std::size_t n) {
  return BoundReport{m, n, BoundKind::upper_bound_count, std::nullopt, Rational(upper_bound_count(m, n))};
}

}  // namespace dope

#endif  // DOPE_COUNTING_HPP
