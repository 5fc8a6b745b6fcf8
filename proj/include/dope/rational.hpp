#ifndef DOPE_RATIONAL_HPP
#define DOPE_RATIONAL_HPP

#include <gmpxx.h>
#include <mpfr.h>

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>

#include "dope/error.hpp"

namespace dope {

using BigInt = mpz_class;

// mpq_class keeps values canonical (reduced, positive denominator) after
// every arithmetic operation; only raw construction needs canonicalize().
using Rational = mpq_class;

inline Rational make_rational(const BigInt& num, const BigInt& den = 1) {
  if (den == 0) throw Error(ErrorCode::InvalidInput, "zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

/// Parses "p" or "p/q" (optional leading '-', decimal digits only).
inline Rational parse_rational(std::string_view text) {
  auto valid_int = [](std::string_view s, bool allow_sign) {
    if (s.empty()) return false;
    std::size_t i = 0;
    if (allow_sign && (s[0] == '-' || s[0] == '+')) i = 1;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
      if (s[i] < '0' || s[i] > '9') return false;
    return true;
  };
  const auto slash = text.find('/');
  const std::string_view num = text.substr(0, slash);
  const std::string_view den = slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
  if (!valid_int(num, true) || !valid_int(den, false))
    throw Error(ErrorCode::InvalidInput, "malformed rational '" + std::string(text) + "'");
  std::string num_s(num);
  if (num_s[0] == '+') num_s.erase(0, 1);
  return make_rational(BigInt(num_s, 10), BigInt(std::string(den), 10));
}

/// Canonical text form: "p" when the denominator is 1, else "p/q".
inline std::string format_rational(const Rational& r) {
  if (r.get_den() == 1) return r.get_num().get_str();
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

/// Binomial coefficient with the convention C(N, K) = 0 for K < 0 or K > N.
inline BigInt binomial(std::int64_t n, std::int64_t k) {
  if (n < 0) throw Error(ErrorCode::OutOfDomain, "binomial with negative N");
  if (k < 0 || k > n) return 0;
  BigInt out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return out;
}

inline BigInt factorial(std::int64_t n) {
  if (n < 0) throw Error(ErrorCode::OutOfDomain, "factorial of negative");
  BigInt out;
  mpz_fac_ui(out.get_mpz_t(), static_cast<unsigned long>(n));
  return out;
}

inline BigInt pow_int(const BigInt& base, std::uint64_t exp) {
  BigInt out;
  mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), static_cast<unsigned long>(exp));
  return out;
}

inline std::size_t bit_length(const BigInt& v) {
  return v == 0 ? 0 : mpz_sizeinbase(v.get_mpz_t(), 2);
}

/// Owning wrapper around an MPFR value. Used only where an exact integer
/// has to be pushed through log/exp; everything else stays exact.
class BigFloat {
 public:
  static constexpr mpfr_prec_t kPrecision = 256;

  BigFloat() { mpfr_init2(v_, kPrecision); mpfr_set_zero(v_, 1); }
  explicit BigFloat(const BigInt& z) { mpfr_init2(v_, kPrecision); mpfr_set_z(v_, z.get_mpz_t(), MPFR_RNDN); }
  explicit BigFloat(const Rational& q) { mpfr_init2(v_, kPrecision); mpfr_set_q(v_, q.get_mpq_t(), MPFR_RNDN); }
  BigFloat(const BigFloat& o) { mpfr_init2(v_, kPrecision); mpfr_set(v_, o.v_, MPFR_RNDN); }
  BigFloat(BigFloat&& o) noexcept { mpfr_init2(v_, kPrecision); mpfr_swap(v_, o.v_); }
  BigFloat& operator=(BigFloat o) noexcept { mpfr_swap(v_, o.v_); return *this; }
  ~BigFloat() { mpfr_clear(v_); }

  static BigFloat e() {
    BigFloat one(BigInt(1));
    BigFloat out;
    mpfr_exp(out.v_, one.v_, MPFR_RNDN);
    return out;
  }

  friend BigFloat log(const BigFloat& x) {
    BigFloat out;
    mpfr_log(out.v_, x.v_, MPFR_RNDN);
    return out;
  }
  friend BigFloat pow(const BigFloat& x, std::uint64_t k) {
    BigFloat out;
    mpfr_pow_ui(out.v_, x.v_, static_cast<unsigned long>(k), MPFR_RNDN);
    return out;
  }
  friend BigFloat operator*(const BigFloat& a, const BigFloat& b) {
    BigFloat out;
    mpfr_mul(out.v_, a.v_, b.v_, MPFR_RNDN);
    return out;
  }
  friend BigFloat operator/(const BigFloat& a, const BigFloat& b) {
    BigFloat out;
    mpfr_div(out.v_, a.v_, b.v_, MPFR_RNDN);
    return out;
  }
  friend BigFloat operator-(const BigFloat& a, const BigFloat& b) {
    BigFloat out;
    mpfr_sub(out.v_, a.v_, b.v_, MPFR_RNDN);
    return out;
  }
  friend bool operator<(const BigFloat& a, const BigFloat& b) { return mpfr_less_p(a.v_, b.v_) != 0; }
  friend bool operator<=(const BigFloat& a, const BigFloat& b) { return mpfr_lessequal_p(a.v_, b.v_) != 0; }

  bool is_negative() const { return mpfr_sgn(v_) < 0; }
  double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }

  /// Fixed-point text with the given number of fractional digits.
  std::string to_fixed(int fraction_digits = 15) const {
    char* buf = nullptr;
    const std::string fmt = "%." + std::to_string(fraction_digits) + "Rf";
    mpfr_asprintf(&buf, fmt.c_str(), v_);
    std::string out(buf);
    mpfr_free_str(buf);
    return out;
  }

  /// Scientific/fixed choice left to MPFR ("%Rg") with `significant` digits.
  std::string to_general(int significant = 20) const {
    char* buf = nullptr;
    const std::string fmt = "%." + std::to_string(significant) + "Rg";
    mpfr_asprintf(&buf, fmt.c_str(), v_);
    std::string out(buf);
    mpfr_free_str(buf);
    return out;
  }

 private:
  mpfr_t v_;
};

}  // namespace dope

#endif  // DOPE_RATIONAL_HPP
