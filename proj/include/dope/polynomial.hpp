#ifndef DOPE_POLYNOMIAL_HPP
#define DOPE_POLYNOMIAL_HPP

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <utility>
#include <vector>

#include "dope/error.hpp"
#include "dope/rational.hpp"

namespace dope {

/**
 * Dense polynomial over Q, coefficients stored ascending (a_0 first).
 *
 * The zero polynomial has no coefficients and degree -1. Trailing zeros are
 * stripped on every construction path, so two polynomials compare equal iff
 * their coefficient vectors do.
 */
class RationalPolynomial {
 public:
  RationalPolynomial() = default;
  explicit RationalPolynomial(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }
  RationalPolynomial(std::initializer_list<Rational> coeffs) : coeffs_(coeffs) { trim(); }

  static RationalPolynomial constant(const Rational& c) { return RationalPolynomial({c}); }

  /// x^k
  static RationalPolynomial monomial(std::size_t k, const Rational& c = 1) {
    std::vector<Rational> v(k + 1, Rational(0));
    v[k] = c;
    return RationalPolynomial(std::move(v));
  }

  /// (x - r)
  static RationalPolynomial linear_root(const Rational& r) { return RationalPolynomial({-r, Rational(1)}); }

  const std::vector<Rational>& coeffs() const noexcept { return coeffs_; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  long degree() const noexcept { return static_cast<long>(coeffs_.size()) - 1; }
  const Rational& leading() const { return coeffs_.back(); }
  Rational coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Rational(0); }

  friend bool operator==(const RationalPolynomial&, const RationalPolynomial&) = default;

  friend RationalPolynomial operator+(const RationalPolynomial& a, const RationalPolynomial& b) {
    std::vector<Rational> out(std::max(a.coeffs_.size(), b.coeffs_.size()), Rational(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) out[i] += a.coeffs_[i];
    for (std::size_t i = 0; i < b.coeffs_.size(); ++i) out[i] += b.coeffs_[i];
    return RationalPolynomial(std::move(out));
  }

  friend RationalPolynomial operator-(const RationalPolynomial& a) {
    std::vector<Rational> out(a.coeffs_);
    for (auto& c : out) c = -c;
    return RationalPolynomial(std::move(out));
  }

  friend RationalPolynomial operator-(const RationalPolynomial& a, const RationalPolynomial& b) { return a + (-b); }

  friend RationalPolynomial operator*(const RationalPolynomial& a, const RationalPolynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Rational> out(a.coeffs_.size() + b.coeffs_.size() - 1, Rational(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
    return RationalPolynomial(std::move(out));
  }

  friend RationalPolynomial operator*(const Rational& s, const RationalPolynomial& a) {
    std::vector<Rational> out(a.coeffs_);
    for (auto& c : out) c *= s;
    return RationalPolynomial(std::move(out));
  }

 private:
  void trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
  }

  std::vector<Rational> coeffs_;
};

/// order-th formal derivative; zero once order exceeds the degree.
inline RationalPolynomial poly_derivative(const RationalPolynomial& p, std::size_t order) {
  const auto& c = p.coeffs();
  if (order >= c.size()) return {};
  std::vector<Rational> out(c.size() - order);
  for (std::size_t i = order; i < c.size(); ++i) {
    // i! / (i - order)!
    BigInt falling = 1;
    for (std::size_t f = i - order + 1; f <= i; ++f) falling *= static_cast<unsigned long>(f);
    out[i - order] = c[i] * Rational(falling);
  }
  return RationalPolynomial(std::move(out));
}

/// Horner evaluation; the zero polynomial evaluates to 0.
inline Rational poly_eval(const RationalPolynomial& p, const Rational& x) {
  Rational acc = 0;
  const auto& c = p.coeffs();
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + *it;
  return acc;
}

/// Euclidean division: returns (q, r) with a = q*b + r and deg r < deg b.
inline std::pair<RationalPolynomial, RationalPolynomial> poly_divmod(const RationalPolynomial& a,
                                                                     const RationalPolynomial& b) {
  if (b.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "division by the zero polynomial");
  std::vector<Rational> rem = a.coeffs();
  const long db = b.degree();
  if (a.degree() < db) return {RationalPolynomial(), a};
  std::vector<Rational> quot(static_cast<std::size_t>(a.degree() - db + 1), Rational(0));
  const Rational& lead = b.leading();
  for (long k = a.degree(); k >= db; --k) {
    const Rational factor = rem[static_cast<std::size_t>(k)] / lead;
    if (factor == 0) continue;
    quot[static_cast<std::size_t>(k - db)] = factor;
    for (long j = 0; j <= db; ++j) rem[static_cast<std::size_t>(k - db + j)] -= factor * b.coeffs()[static_cast<std::size_t>(j)];
  }
  rem.resize(static_cast<std::size_t>(db));
  return {RationalPolynomial(std::move(quot)), RationalPolynomial(std::move(rem))};
}

inline RationalPolynomial poly_monic(const RationalPolynomial& p) {
  if (p.is_zero()) return p;
  const Rational inv = 1 / p.leading();
  return inv * p;
}

/// Monic gcd over Q.
inline RationalPolynomial poly_gcd(RationalPolynomial a, RationalPolynomial b) {
  if (a.is_zero() && b.is_zero()) throw Error(ErrorCode::BothZero, "gcd of two zero polynomials");
  while (!b.is_zero()) {
    auto r = poly_divmod(a, b).second;
    a = std::move(b);
    b = poly_monic(r);
  }
  return poly_monic(a);
}

}  // namespace dope

#endif  // DOPE_POLYNOMIAL_HPP
