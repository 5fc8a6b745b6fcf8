#ifndef DOPE_EXACT_LINALG_HPP
#define DOPE_EXACT_LINALG_HPP

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "dope/error.hpp"
#include "dope/polynomial.hpp"
#include "dope/rational.hpp"
#include "dope/types.hpp"

namespace dope {

class RationalMatrix {
 public:
  RationalMatrix() = default;
  RationalMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), entries_(rows * cols, Rational(0)) {}
  RationalMatrix(std::size_t rows, std::size_t cols, std::vector<Rational> entries)
      : rows_(rows), cols_(cols), entries_(std::move(entries)) {
    if (entries_.size() != rows * cols) throw Error(ErrorCode::DimensionMismatch, "entry count must be rows*cols");
  }

  static RationalMatrix identity(std::size_t k) {
    RationalMatrix out(k, k);
    for (std::size_t i = 0; i < k; ++i) out(i, i) = 1;
    return out;
  }

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  Rational& operator()(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
  const Rational& operator()(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }

  std::vector<Rational> apply(const std::vector<Rational>& x) const {
    if (x.size() != cols_) throw Error(ErrorCode::DimensionMismatch, "vector length must equal column count");
    std::vector<Rational> out(rows_, Rational(0));
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) out[i] += (*this)(i, j) * x[j];
    return out;
  }

  RationalMatrix select_columns(const std::vector<std::size_t>& cols) const {
    RationalMatrix out(rows_, cols.size());
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t c = 0; c < cols.size(); ++c) out(i, c) = (*this)(i, cols[c]);
    return out;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> entries_;
};

namespace detail {

using IntRows = std::vector<std::vector<BigInt>>;

// Clears denominators row by row; `extra` (if any) is appended as a last column.
inline IntRows integer_rows(const RationalMatrix& a, const std::vector<Rational>* extra) {
  IntRows out(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    BigInt l = 1;
    for (std::size_t j = 0; j < a.cols(); ++j) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), a(i, j).get_den_mpz_t());
    if (extra) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), (*extra)[i].get_den_mpz_t());
    auto& row = out[i];
    row.reserve(a.cols() + (extra ? 1 : 0));
    for (std::size_t j = 0; j < a.cols(); ++j) row.push_back(a(i, j).get_num() * (l / a(i, j).get_den()));
    if (extra) row.push_back((*extra)[i].get_num() * (l / (*extra)[i].get_den()));
  }
  return out;
}

// Nonzero entry of column `col` in rows [from, end) with the fewest bits.
inline std::optional<std::size_t> smallest_pivot(const IntRows& m, std::size_t from, std::size_t col) {
  std::optional<std::size_t> best;
  std::size_t best_bits = 0;
  for (std::size_t r = from; r < m.size(); ++r) {
    if (m[r][col] == 0) continue;
    const std::size_t bits = bit_length(m[r][col]);
    if (!best || bits < best_bits) {
      best = r;
      best_bits = bits;
    }
  }
  return best;
}

// One Bareiss step: eliminate column `col` below `pivot_row`; division by
// the previous pivot is exact.
inline void bareiss_eliminate(IntRows& m, std::size_t pivot_row, std::size_t col, const BigInt& prev) {
  const BigInt& p = m[pivot_row][col];
  const std::size_t width = m[pivot_row].size();
  for (std::size_t r = pivot_row + 1; r < m.size(); ++r) {
    const BigInt factor = m[r][col];
    for (std::size_t j = col + 1; j < width; ++j) {
      BigInt v = m[r][j] * p - factor * m[pivot_row][j];
      mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
      m[r][j] = std::move(v);
    }
    m[r][col] = 0;
  }
}

}  // namespace detail

/// Exact solution of A x = b by fraction-free elimination, or nullopt when A
/// is singular.
inline std::optional<std::vector<Rational>> solve(const RationalMatrix& a, const std::vector<Rational>& b) {
  if (a.rows() != a.cols()) throw Error(ErrorCode::DimensionMismatch, "solve needs a square matrix");
  if (b.size() != a.rows()) throw Error(ErrorCode::DimensionMismatch, "right-hand side length mismatch");
  const std::size_t n = a.rows();
  auto m = detail::integer_rows(a, &b);

  BigInt prev = 1;
  for (std::size_t k = 0; k < n; ++k) {
    const auto pivot = detail::smallest_pivot(m, k, k);
    if (!pivot) return std::nullopt;
    std::swap(m[k], m[*pivot]);
    detail::bareiss_eliminate(m, k, k, prev);
    prev = m[k][k];
  }

  std::vector<Rational> x(n);
  for (std::size_t ii = n; ii-- > 0;) {
    Rational acc(m[ii][n]);
    for (std::size_t j = ii + 1; j < n; ++j) acc -= Rational(m[ii][j]) * x[j];
    x[ii] = acc / Rational(m[ii][ii]);
  }
  return x;
}

/// Exact rank over Q.
inline std::size_t rank(const RationalMatrix& a) {
  auto m = detail::integer_rows(a, nullptr);
  std::size_t r = 0;
  BigInt prev = 1;
  for (std::size_t col = 0; col < a.cols() && r < a.rows(); ++col) {
    const auto pivot = detail::smallest_pivot(m, r, col);
    if (!pivot) continue;
    std::swap(m[r], m[*pivot]);
    detail::bareiss_eliminate(m, r, col, prev);
    prev = m[r][col];
    ++r;
  }
  return r;
}

inline std::vector<std::size_t> sorted_unique(std::vector<std::size_t> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

/// [C(g, h)] with rows by increasing g and columns by increasing h.
inline RationalMatrix binomial_matrix(const std::vector<std::size_t>& g_set, const std::vector<std::size_t>& h_set) {
  const auto g = sorted_unique(g_set);
  const auto h = sorted_unique(h_set);
  RationalMatrix out(g.size(), h.size());
  for (std::size_t i = 0; i < g.size(); ++i)
    for (std::size_t j = 0; j < h.size(); ++j)
      out(i, j) = Rational(binomial(static_cast<std::int64_t>(g[i]), static_cast<std::int64_t>(h[j])));
  return out;
}

/// |G ∩ [0,c]| <= |H ∩ [0,c]| for every c.
inline bool prefix_dominated(const std::vector<std::size_t>& g_set, const std::vector<std::size_t>& h_set) {
  const auto g = sorted_unique(g_set);
  const auto h = sorted_unique(h_set);
  std::size_t top = 0;
  if (!g.empty()) top = std::max(top, g.back());
  if (!h.empty()) top = std::max(top, h.back());
  std::size_t gi = 0, hi = 0;
  for (std::size_t c = 0; c <= top; ++c) {
    while (gi < g.size() && g[gi] <= c) ++gi;
    while (hi < h.size() && h[hi] <= c) ++hi;
    if (gi > hi) return false;
  }
  return true;
}

/// Under prefix dominance the binomial matrix has full row rank |G|.
/// Returns that rank check; false would mean an arithmetic bug, not a valid
/// mathematical outcome.
inline bool gv_rank_check(const std::vector<std::size_t>& g_set, const std::vector<std::size_t>& h_set) {
  if (!prefix_dominated(g_set, h_set)) throw Error(ErrorCode::DominanceViolated, "|G ∩ [0,c]| > |H ∩ [0,c]| for some c");
  return rank(binomial_matrix(g_set, h_set)) == sorted_unique(g_set).size();
}

/// Coefficients expressing P^(d)(λ) as a combination of P^(s)(λ)/s! ε^{s-d}
/// (s ∈ S1) and P^(s)(λ+ε)/s! ε^{s-d} (s ∈ S2), up to O(ε).
struct LimitCoefficients {
  std::size_t d = 0;
  std::map<std::size_t, Rational> c1;
  std::map<std::size_t, Rational> c2;

  friend bool operator==(const LimitCoefficients&, const LimitCoefficients&) = default;
};

namespace detail {

inline void check_limit_condition(std::size_t d, const RowSet& s1, const RowSet& s2) {
  for (const RowSet* s : {&s1, &s2})
    if (!s->members().empty() && s->members().back() > d)
      throw Error(ErrorCode::ConditionViolated, "row sets must lie in [0, d]");
  for (std::size_t t = 0; t <= d; ++t) {
    const std::size_t c = s1.count_in(t, d) + s2.count_in(t, d);
    if (c > d - t + 1) throw Error(ErrorCode::ConditionViolated, "too many entries in columns [t, d]");
    if (t == 0 && c != d + 1) throw Error(ErrorCode::ConditionViolated, "columns [0, d] must hold exactly d+1 entries");
  }
}

}  // namespace detail

/**
 * Solves for the coefficients of the derivative-as-limit identity.
 *
 * For every t in [0, d]:
 *   [t ∈ S1] c1[t] + sum_{s ∈ S2, s <= t} C(t, s) c2[s] = d! [t = d].
 * The c2 part is the binomial system over G = [0,d] \ S1, H = S2. When it is
 * underdetermined, columns of H are taken greedily in increasing order while
 * they raise the rank; the rest of c2 is zero. c1 then follows directly.
 */
inline LimitCoefficients derivative_limit_coeffs(std::size_t d, const RowSet& s1, const RowSet& s2) {
  detail::check_limit_condition(d, s1, s2);
  const BigInt d_fact = factorial(static_cast<std::int64_t>(d));

  std::vector<std::size_t> g;
  for (std::size_t t = 0; t <= d; ++t)
    if (!s1.contains(t)) g.push_back(t);
  const std::vector<std::size_t>& h = s2.members();

  LimitCoefficients out;
  out.d = d;
  for (auto s : h) out.c2[s] = 0;

  if (!g.empty()) {
    const RationalMatrix full = binomial_matrix(g, h);
    std::vector<std::size_t> chosen;
    std::size_t current_rank = 0;
    for (std::size_t col = 0; col < h.size() && current_rank < g.size(); ++col) {
      auto trial = chosen;
      trial.push_back(col);
      const std::size_t r = rank(full.select_columns(trial));
      if (r > current_rank) {
        chosen = std::move(trial);
        current_rank = r;
      }
    }
    if (current_rank != g.size()) throw std::logic_error("binomial system lost full row rank");
    std::vector<Rational> rhs(g.size(), Rational(0));
    for (std::size_t i = 0; i < g.size(); ++i)
      if (g[i] == d) rhs[i] = Rational(d_fact);
    const auto sol = solve(full.select_columns(chosen), rhs);
    if (!sol) throw std::logic_error("square binomial subsystem unexpectedly singular");
    for (std::size_t c = 0; c < chosen.size(); ++c) out.c2[h[chosen[c]]] = (*sol)[c];
  }

  for (auto t : s1.members()) {
    Rational v = t == d ? Rational(d_fact) : Rational(0);
    for (auto s : h) {
      if (s > t) break;
      v -= Rational(binomial(static_cast<std::int64_t>(t), static_cast<std::int64_t>(s))) * out.c2[s];
    }
    out.c1[t] = v;
  }
  return out;
}

/**
 * Expands the residual
 *   R(ε) = P^(d)(λ) - Σ_{S1} c1[s] P^(s)(λ)/s! ε^{s-d} - Σ_{S2} c2[s] P^(s)(λ+ε)/s! ε^{s-d}
 * as a Laurent polynomial in ε (Taylor-expanding P^(s)(λ+ε) exactly) and
 * reports whether every term of degree <= 0 cancels.
 */
inline bool verify_limit_identity(const LimitCoefficients& coeffs, const RationalPolynomial& p, const Rational& lambda,
                                  const RowSet& s1, const RowSet& s2) {
  const long d = static_cast<long>(coeffs.d);
  const long deg = p.degree();
  auto lookup = [](const std::map<std::size_t, Rational>& m, std::size_t k) {
    auto it = m.find(k);
    return it == m.end() ? Rational(0) : it->second;
  };
  // derivative values at λ, scaled by 1/j!
  std::vector<Rational> taylor;
  for (long j = 0; j <= std::max(deg, d); ++j)
    taylor.push_back(poly_eval(poly_derivative(p, static_cast<std::size_t>(j)), lambda) /
                     Rational(factorial(j)));

  std::map<long, Rational> residual;
  residual[0] += taylor[static_cast<std::size_t>(d)] * Rational(factorial(d));
  for (auto s : s1.members())
    residual[static_cast<long>(s) - d] -= lookup(coeffs.c1, s) * taylor[s];
  for (auto s : s2.members()) {
    const Rational c = lookup(coeffs.c2, s);
    // P^(s)(λ+ε)/s! = Σ_k C(s+k, s) a_{s+k} ε^k with a_j = P^(j)(λ)/j!
    for (long k = 0; static_cast<long>(s) + k <= deg; ++k) {
      const auto j = static_cast<std::size_t>(static_cast<long>(s) + k);
      residual[static_cast<long>(s) - d + k] -=
          c * Rational(binomial(static_cast<std::int64_t>(j), static_cast<std::int64_t>(s))) * taylor[j];
    }
  }
  for (const auto& [exp, v] : residual)
    if (exp <= 0 && v != 0) return false;
  return true;
}

}  // namespace dope

#endif  // DOPE_EXACT_LINALG_HPP
