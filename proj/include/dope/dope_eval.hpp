#ifndef DOPE_DOPE_EVAL_HPP
#define DOPE_DOPE_EVAL_HPP

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <vector>

#include "dope/error.hpp"
#include "dope/polynomial.hpp"
#include "dope/types.hpp"

namespace dope {

namespace detail {

inline std::vector<RationalPolynomial> derivative_chain(const RationalPolynomial& p) {
  if (p.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "dope patterns need a nonzero polynomial");
  const auto n = static_cast<std::size_t>(p.degree());
  std::vector<RationalPolynomial> chain;
  chain.reserve(n + 1);
  chain.push_back(p);
  for (std::size_t j = 1; j <= n; ++j) chain.push_back(poly_derivative(chain.back(), 1));
  return chain;
}

}  // namespace detail

/// Indicator row of length deg P + 1: entry j is 1 iff P^(j)(λ) = 0.
inline std::vector<std::uint8_t> dope_row(const RationalPolynomial& p, const Rational& lambda) {
  const auto chain = detail::derivative_chain(p);
  std::vector<std::uint8_t> row(chain.size(), 0);
  for (std::size_t j = 0; j < chain.size(); ++j) row[j] = poly_eval(chain[j], lambda) == 0 ? 1 : 0;
  return row;
}

/// D_P(Λ), computed with exact zero tests.
inline DopePattern dope_matrix(const RationalPolynomial& p, const PointTuple& points) {
  const auto chain = detail::derivative_chain(p);
  if (points.size() == 0) throw Error(ErrorCode::DimensionMismatch, "need at least one point");
  DopePattern out(points.size(), chain.size());
  for (std::size_t i = 0; i < points.size(); ++i)
    for (std::size_t j = 0; j < chain.size(); ++j)
      if (poly_eval(chain[j], points[i]) == 0) out.set(i, j);
  return out;
}

namespace detail {

// Grows J in increasing derivative order carrying gcd(P^(j) : j ∈ J);
// a constant gcd can only stay constant, so that branch stops.
inline std::size_t widest_common_root(const std::vector<RationalPolynomial>& chain, std::size_t next,
                                      const RationalPolynomial& running, std::size_t size) {
  std::size_t best = size;
  for (std::size_t j = next; j < chain.size(); ++j) {
    if (best >= size + (chain.size() - j)) break;  // cannot beat current best
    RationalPolynomial g = size == 0 ? poly_monic(chain[j]) : poly_gcd(running, chain[j]);
    if (g.degree() < 1) continue;
    best = std::max(best, widest_common_root(chain, j + 1, g, size + 1));
  }
  return best;
}

}  // namespace detail

/// max over complex λ of #{j : P^(j)(λ) = 0}, i.e. the largest J ⊆ [0, n]
/// whose derivatives share a nonconstant gcd. No root finding involved.
inline std::size_t max_row_weight(const RationalPolynomial& p) {
  const auto chain = detail::derivative_chain(p);
  return detail::widest_common_root(chain, 0, RationalPolynomial(), 0);
}

}  // namespace dope

#endif  // DOPE_DOPE_EVAL_HPP
