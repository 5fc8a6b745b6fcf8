#ifndef DOPE_TESTS_SUPPORT_HPP
#define DOPE_TESTS_SUPPORT_HPP

// Generators and brute-force oracles shared by the test binaries. Nothing in
// here calls the library routine it is meant to check.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "dope/dope.hpp"

namespace dope::testing {

class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  std::int64_t range(std::int64_t lo, std::int64_t hi) {
    return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng_);
  }
  std::size_t index(std::size_t n) { return static_cast<std::size_t>(range(0, static_cast<std::int64_t>(n) - 1)); }
  bool coin() { return range(0, 1) == 1; }

  Rational rational(std::int64_t num_radius = 20, std::int64_t den_max = 9) {
    return make_rational(BigInt(static_cast<long>(range(-num_radius, num_radius))),
                         BigInt(static_cast<long>(range(1, den_max))));
  }

  RationalPolynomial polynomial(std::size_t max_degree) {
    const auto deg = static_cast<std::size_t>(range(0, static_cast<std::int64_t>(max_degree)));
    std::vector<Rational> c;
    for (std::size_t i = 0; i < deg; ++i) c.push_back(rational());
    Rational lead = rational();
    while (lead == 0) lead = rational();
    c.push_back(lead);
    return RationalPolynomial(std::move(c));
  }

  std::vector<std::size_t> subset(std::size_t n, double density = 0.5) {
    std::vector<std::size_t> out;
    std::bernoulli_distribution b(density);
    for (std::size_t i = 0; i <= n; ++i)
      if (b(rng_)) out.push_back(i);
    return out;
  }

  /// Random safe pattern: drop random ones until the suffix budget holds.
  DopePattern safe_pattern(std::size_t rows, std::size_t n) {
    DopePattern m(rows, n + 1);
    for (std::size_t i = 0; i < rows; ++i)
      for (std::size_t j = 0; j <= n; ++j)
        if (range(0, static_cast<std::int64_t>(rows + 1)) == 0) m.set(i, j);
    // scan suffixes from the right, clearing ones that overflow
    std::size_t running = 0;
    for (std::size_t k = 0; k <= n; ++k) {
      const std::size_t col = n - k;
      for (std::size_t i = 0; i < rows; ++i) {
        if (!m.at(i, col)) continue;
        if (running + 1 > k) m.set(i, col, false);
        else ++running;
      }
    }
    return m;
  }

  std::mt19937_64& engine() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

/// Safe per the definition, recomputing every suffix sum from scratch.
inline bool brute_safe(const DopePattern& m, std::size_t slack = 0) {
  const std::size_t n = m.degree();
  for (std::size_t k = 0; k <= n; ++k) {
    std::size_t ones = 0;
    for (std::size_t j = n - k; j <= n; ++j)
      for (std::size_t i = 0; i < m.rows(); ++i) ones += m.at(i, j);
    if (ones > k + slack) return false;
  }
  return true;
}

/// Every 0/1 matrix of the given shape (rows*(n+1) <= 20).
inline std::vector<DopePattern> all_patterns(std::size_t rows, std::size_t n) {
  const std::size_t cells = rows * (n + 1);
  std::vector<DopePattern> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << cells); ++mask) {
    DopePattern m(rows, n + 1);
    for (std::size_t c = 0; c < cells; ++c)
      if ((mask >> c) & 1U) m.set(c / (n + 1), c % (n + 1));
    out.push_back(std::move(m));
  }
  return out;
}

/// Rank over Q by textbook Gaussian elimination on rationals.
inline std::size_t oracle_rank(std::vector<std::vector<Rational>> a) {
  std::size_t r = 0;
  const std::size_t rows = a.size();
  const std::size_t cols = rows ? a[0].size() : 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && a[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(a[p], a[r]);
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || a[i][c] == 0) continue;
      const Rational f = a[i][c] / a[r][c];
      for (std::size_t j = c; j < cols; ++j) a[i][j] -= f * a[r][j];
    }
    ++r;
  }
  return r;
}

inline std::vector<std::vector<Rational>> to_rows(const RationalMatrix& m) {
  std::vector<std::vector<Rational>> out(m.rows(), std::vector<Rational>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out[i][j] = m(i, j);
  return out;
}

/// Naive n-th derivative from the power rule, one coefficient at a time.
inline Rational oracle_derivative_at(const RationalPolynomial& p, std::size_t j, const Rational& x) {
  Rational acc = 0;
  for (std::size_t l = j; l < p.coeffs().size(); ++l) {
    Rational term = p.coeffs()[l];
    for (std::size_t f = l - j + 1; f <= l; ++f) term *= static_cast<long>(f);
    for (std::size_t e = 0; e < l - j; ++e) term *= x;
    acc += term;
  }
  return acc;
}

/// Random pair (G, H) with |G ∩ [0,c]| <= |H ∩ [0,c]| for all c, elements <= top.
inline std::pair<std::vector<std::size_t>, std::vector<std::size_t>> dominance_pair(Gen& g, std::size_t top) {
  std::vector<std::size_t> h = g.subset(top, 0.5);
  // walk upward, admitting a G element only while H stays ahead
  std::vector<std::size_t> gs;
  std::size_t hc = 0;
  for (std::size_t c = 0; c <= top; ++c) {
    if (std::binary_search(h.begin(), h.end(), c)) ++hc;
    if (gs.size() < hc && g.coin()) gs.push_back(c);
  }
  return {gs, h};
}

/**
 * Realizability of an m-row pattern for degree n <= 2, from the root
 * configurations written out by hand. Rows are codes with bit j set when
 * column j holds a one (so "100" is 1, "010" is 2, "110" is 3, "10" is 1).
 *   n = 0: a nonzero constant never vanishes; only zero rows.
 *   n = 1: one simple root, so at most one row "10".
 *   n = 2, distinct roots: nonzero rows form a sub-multiset of
 *          {"100", "100", "010"} (the two roots and their midpoint).
 *   n = 2, double root: at most one nonzero row, and it is "110".
 *   n = 2, no rational roots: at most the derivative root, "010", once.
 * Zero rows are always available since the points are otherwise free.
 */
inline bool root_configuration_realizable(const std::vector<unsigned>& rows, std::size_t n) {
  std::size_t c100 = 0, c010 = 0, c110 = 0, other = 0;
  for (unsigned r : rows) {
    if (r == 0) continue;
    if (n == 2 && r == 1) ++c100;
    else if (n == 2 && r == 2) ++c010;
    else if (n == 2 && r == 3) ++c110;
    else if (n == 1 && r == 1) ++c100;
    else ++other;
  }
  if (other) return false;
  if (n == 1) return c100 <= 1;
  if (c110) return c110 == 1 && c100 == 0 && c010 == 0;
  return c100 <= 2 && c010 <= 1;
}

/// Number of m-row patterns of width n+1 that the hand analysis admits,
/// running over every row tuple drawn from the 2^(n+1) possible rows.
inline std::size_t root_configuration_census(std::size_t n, std::size_t m) {
  const unsigned alphabet = 1U << (n + 1);
  std::vector<unsigned> rows(m, 0);
  std::size_t total = 0;
  while (true) {
    if (root_configuration_realizable(rows, n)) ++total;
    std::size_t i = 0;
    while (i < m && ++rows[i] == alphabet) rows[i++] = 0;
    if (i == m) break;
  }
  return total;
}

/// Distinct dope matrices hit by sweeping small integer-root polynomials of
/// degree n <= 2 over ordered tuples of half-integer points in [-3, 3].
inline std::size_t sampled_census(std::size_t n, std::size_t m) {
  std::vector<RationalPolynomial> polys;
  if (n == 0) polys.push_back(RationalPolynomial({1}));
  for (long r1 = -2; r1 <= 2; ++r1) {
    if (n == 1) polys.push_back(RationalPolynomial::linear_root(Rational(r1)));
    if (n == 2)
      for (long r2 = r1; r2 <= 2; ++r2)
        polys.push_back(RationalPolynomial::linear_root(Rational(r1)) * RationalPolynomial::linear_root(Rational(r2)));
  }
  if (n == 2) polys.push_back(RationalPolynomial({1, 0, 1}));
  std::vector<Rational> grid;
  for (long k = -6; k <= 6; ++k) grid.push_back(make_rational(k, 2));

  std::set<std::vector<std::string>> seen;
  std::vector<std::size_t> pick(m, 0);
  std::function<void(std::size_t)> rec = [&](std::size_t depth) {
    if (depth == m) {
      std::vector<Rational> pts;
      for (auto i : pick) pts.push_back(grid[i]);
      for (const auto& p : polys) seen.insert(dope_matrix(p, PointTuple(pts)).row_strings());
      return;
    }
    for (std::size_t i = 0; i < grid.size(); ++i) {
      if (std::find(pick.begin(), pick.begin() + static_cast<std::ptrdiff_t>(depth), i) !=
          pick.begin() + static_cast<std::ptrdiff_t>(depth))
        continue;
      pick[depth] = i;
      rec(depth + 1);
    }
  };
  rec(0);
  return seen.size();
}

}  // namespace dope::testing

#endif  // DOPE_TESTS_SUPPORT_HPP
