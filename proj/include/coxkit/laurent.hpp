#pragma once

#include <cstdint>
#include <map>
#include <ostream>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace coxkit {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Element of Z[q, q^-1]: a finitely supported map exponent -> integer coefficient.
///
/// Coefficients are 64-bit; arithmetic throws std::overflow_error instead of wrapping.
class LaurentPoly {
 public:
  LaurentPoly() = default;
  LaurentPoly(std::int64_t constant);  // NOLINT: integers embed as constants

  /// c * q^exponent
  static LaurentPoly monomial(int exponent, std::int64_t coefficient = 1);
  static LaurentPoly q() { return monomial(1); }

  bool is_zero() const { return terms_.empty(); }
  std::int64_t coefficient(int exponent) const;
  const std::map<int, std::int64_t>& terms() const { return terms_; }

  /// q -> q^-1
  LaurentPoly bar() const;
  /// Integer power; negative exponents only for monomials.
  LaurentPoly pow(int n) const;
  /// Evaluate at q = t (t != 0 when negative exponents occur).
  Rational evaluate(const Rational& t) const;

  LaurentPoly operator-() const;
  LaurentPoly& operator+=(const LaurentPoly& rhs);
  LaurentPoly& operator-=(const LaurentPoly& rhs);
  LaurentPoly& operator*=(const LaurentPoly& rhs);
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(LaurentPoly a, const LaurentPoly& b) { return a *= b; }
  friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;

  /// Descending powers, e.g. "q^-1 - 1", "-q^2 + 1", "0".
  std::string to_string() const;
  friend std::ostream& operator<<(std::ostream& os, const LaurentPoly& p) { return os << p.to_string(); }

 private:
  void add_term(int exponent, std::int64_t coefficient);
  std::map<int, std::int64_t> terms_;
};

inline bool is_zero(const LaurentPoly& p) { return p.is_zero(); }
inline bool is_zero(std::int64_t x) { return x == 0; }
inline bool is_zero(const Rational& x) { return x == 0; }

/// (q^n - (-1)^n) for any integer n.
LaurentPoly q_power_minus_sign(int n);

/// Parse the to_string() format back.
LaurentPoly parse_laurent(const std::string& text);

}  // namespace coxkit
