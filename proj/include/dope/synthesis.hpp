#ifndef DOPE_SYNTHESIS_HPP
#define DOPE_SYNTHESIS_HPP

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <set>
#include <vector>

#include "dope/dope_eval.hpp"
#include "dope/error.hpp"
#include "dope/exact_linalg.hpp"
#include "dope/patterns.hpp"
#include "dope/polynomial.hpp"
#include "dope/types.hpp"

namespace dope {

/// A polynomial/point witness that `target` is a dope matrix.
struct SynthesisCertificate {
  DopePattern target;
  PointTuple points;
  RationalPolynomial poly;
  std::size_t prepended_columns = 0;
  bool padded_row = false;
  std::size_t attempts_used = 0;
  bool verified = false;
};

/// Recomputes the dope matrix from the stored polynomial and points; does not
/// trust any stored flag.
inline bool verify_certificate(const SynthesisCertificate& cert) {
  try {
    if (cert.poly.degree() != static_cast<long>(cert.target.cols()) - 1) return false;
    if (cert.points.size() != cert.target.rows()) return false;
    return dope_matrix(cert.poly, cert.points) == cert.target;
  } catch (const Error&) {
    return false;
  }
}

inline constexpr std::int64_t kSampleRadius = std::int64_t{1} << 16;

namespace detail {

/// The matrix the linear system is actually built from.
struct ExtendedTarget {
  DopePattern pattern;      // m' x (n+c+1)
  std::size_t prepended = 0;
  bool padded = false;
};

// Pads a lone row with a zero row, then prepends c = n - z columns carrying
// ones in the first two rows, leaving exactly n + c ones.
inline ExtendedTarget extend_target(const DopePattern& m) {
  const std::size_t n = m.degree();
  const std::size_t z = m.ones();
  ExtendedTarget out;
  out.padded = m.rows() == 1;
  out.prepended = n - z;
  const std::size_t rows = m.rows() + (out.padded ? 1 : 0);
  out.pattern = DopePattern(rows, n + out.prepended + 1);
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j <= n; ++j)
      if (m.at(i, j)) out.pattern.set(i, j + out.prepended);
  for (std::size_t j = 0; j < out.prepended; ++j) {
    out.pattern.set(0, j);
    out.pattern.set(1, j);
  }
  return out;
}

// P^(j)(λ) as a linear form in a_0..a_deg.
inline std::vector<Rational> derivative_form(std::size_t j, const Rational& lambda, std::size_t deg) {
  std::vector<Rational> row(deg + 1, Rational(0));
  Rational power = 1;  // λ^{l-j}
  for (std::size_t l = j; l <= deg; ++l) {
    BigInt falling = 1;
    for (std::size_t f = l - j + 1; f <= l; ++f) falling *= static_cast<unsigned long>(f);
    row[l] = Rational(falling) * power;
    power *= lambda;
  }
  return row;
}

// Solves the vanishing conditions of `ext` at `points` plus a leading
// coefficient of 1. Returns P_0 only if its dope matrix is exactly `ext`.
inline std::optional<RationalPolynomial> solve_extended(const ExtendedTarget& ext, const PointTuple& points) {
  const DopePattern& pat = ext.pattern;
  const std::size_t deg = pat.degree();
  RationalMatrix system(deg + 1, deg + 1);
  std::vector<Rational> rhs(deg + 1, Rational(0));
  std::size_t r = 0;
  for (std::size_t i = 0; i < pat.rows(); ++i) {
    for (std::size_t j = 0; j <= deg; ++j) {
      if (!pat.at(i, j)) continue;
      if (r >= deg) throw std::logic_error("extended target has too many ones");
      const auto form = derivative_form(j, points[i], deg);
      for (std::size_t l = 0; l <= deg; ++l) system(r, l) = form[l];
      ++r;
    }
  }
  if (r != deg) throw std::logic_error("extended target must carry exactly deg ones");
  system(deg, deg) = 1;
  rhs[deg] = 1;

  auto coeffs = solve(system, rhs);
  if (!coeffs) return std::nullopt;
  RationalPolynomial p0(std::move(*coeffs));
  if (dope_matrix(p0, points) != pat) return std::nullopt;
  return p0;
}

inline std::optional<SynthesisCertificate> finish(const DopePattern& target, const ExtendedTarget& ext,
                                                  const PointTuple& points, const RationalPolynomial& p0) {
  SynthesisCertificate cert;
  cert.target = target;
  cert.prepended_columns = ext.prepended;
  cert.padded_row = ext.padded;
  cert.poly = poly_derivative(p0, ext.prepended);
  std::vector<Rational> kept(points.points().begin(), points.points().begin() + static_cast<std::ptrdiff_t>(target.rows()));
  if (ext.padded) {
    const auto extra = dope_row(cert.poly, points[target.rows()]);
    for (auto e : extra)
      if (e) return std::nullopt;
  }
  cert.points = PointTuple(std::move(kept));
  cert.verified = verify_certificate(cert);
  if (!cert.verified) return std::nullopt;
  return cert;
}

inline PointTuple sample_points(std::mt19937_64& rng, std::size_t count, std::size_t attempt) {
  const std::int64_t radius = kSampleRadius * static_cast<std::int64_t>(attempt);
  const auto span = static_cast<std::uint64_t>(2 * radius + 1);
  std::set<std::int64_t> seen;
  std::vector<Rational> pts;
  while (pts.size() < count) {
    const std::int64_t v = static_cast<std::int64_t>(rng() % span) - radius;
    if (seen.insert(v).second) pts.emplace_back(static_cast<long>(v));
  }
  return PointTuple(std::move(pts));
}

inline SynthesisCertificate synthesize_loop(const DopePattern& target, const DopePattern& solve_for,
                                            std::uint64_t seed, std::size_t max_attempts,
                                            const std::function<bool(const RationalPolynomial&)>& accept) {
  const ExtendedTarget ext = extend_target(solve_for);
  std::mt19937_64 rng(seed);
  for (std::size_t attempt = 1; attempt <= max_attempts; ++attempt) {
    const PointTuple points = sample_points(rng, ext.pattern.rows(), attempt);
    const auto p0 = solve_extended(ext, points);
    if (!p0) continue;
    const RationalPolynomial p = poly_derivative(*p0, ext.prepended);
    if (!accept(p)) continue;
    // points beyond target.rows() belong to padding rows and are dropped
    auto cert = finish(target, ext, points, *p0);
    if (!cert) continue;
    cert->attempts_used = attempt;
    return *cert;
  }
  throw Error(ErrorCode::RetriesExhausted, "no verified witness within the attempt budget");
}

}  // namespace detail

/**
 * Builds P and Λ with D_P(Λ) = M for a safe M (Las Vegas).
 *
 * Each attempt draws m distinct integers from [-B k, B k] (B = 2^16, k the
 * attempt number), solves the vanishing conditions of the extended matrix
 * together with a_{n+c} = 1, rejects singular systems and spurious zeros,
 * and differentiates c times. Anything returned has been rechecked exactly.
 */
inline SynthesisCertificate synthesize(const DopePattern& m, std::uint64_t seed, std::size_t max_attempts = 20) {
  if (!is_safe(m)) throw Error(ErrorCode::NotSafe, "target pattern is not safe");
  return detail::synthesize_loop(m, m, seed, max_attempts, [](const RationalPolynomial&) { return true; });
}

/// Synthesis at caller-chosen points (one per row, plus one for the padding
/// row when M has a single row). nullopt when those points are degenerate.
inline std::optional<SynthesisCertificate> synthesize_at(const DopePattern& m, const PointTuple& points) {
  if (!is_safe(m)) throw Error(ErrorCode::NotSafe, "target pattern is not safe");
  const auto ext = detail::extend_target(m);
  if (points.size() != ext.pattern.rows())
    throw Error(ErrorCode::DimensionMismatch, "need one point per row of the extended target");
  const auto p0 = detail::solve_extended(ext, points);
  if (!p0) return std::nullopt;
  auto cert = detail::finish(m, ext, points, *p0);
  if (cert) cert->attempts_used = 1;
  return cert;
}

/**
 * Synthesis for a safe, saturated, T-limited M that additionally guarantees
 * at most T vanishing derivatives at every complex point (checked with
 * max_row_weight; failing draws are resampled).
 *
 * With `saturate` set, a non-saturated M is first completed with rows
 * (1, 0, ..., 0) until it holds n ones; their points are dropped from the
 * returned certificate.
 */
inline SynthesisCertificate synthesize_limited(const DopePattern& m, std::size_t limit, std::uint64_t seed,
                                               std::size_t max_attempts = 20, bool saturate = false) {
  if (!is_safe(m)) throw Error(ErrorCode::NotSafe, "target pattern is not safe");
  if (!is_t_limited(m, limit)) throw Error(ErrorCode::NotLimited, "a row exceeds the ones limit");
  DopePattern work = m;
  if (!is_saturated(m)) {
    if (!saturate) throw Error(ErrorCode::NotSaturated, "target pattern is not saturated");
    if (limit < 1) throw Error(ErrorCode::NotLimited, "saturating rows need T >= 1");
    const std::size_t missing = m.degree() - m.ones();
    work = DopePattern(m.rows() + missing, m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
      for (std::size_t j = 0; j < m.cols(); ++j)
        if (m.at(i, j)) work.set(i, j);
    for (std::size_t i = m.rows(); i < work.rows(); ++i) work.set(i, 0);
  }
  return detail::synthesize_loop(m, work, seed, max_attempts,
                                 [limit](const RationalPolynomial& p) { return max_row_weight(p) <= limit; });
}

}  // namespace dope

#endif  // DOPE_SYNTHESIS_HPP
