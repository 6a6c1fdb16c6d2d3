#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <map>
#include <string>

namespace rpoly {

using BigInt = boost::multiprecision::cpp_int;

/// Integer Laurent polynomial in q, kept in canonical form (no zero coefficients).
class LaurentPoly {
 public:
  using Terms = std::map<int, BigInt>;

  LaurentPoly() = default;
  /// Constant polynomial.
  LaurentPoly(long long c);  // NOLINT(google-explicit-constructor)

  static LaurentPoly monomial(const BigInt& coeff, int exponent);
  static LaurentPoly q() { return monomial(1, 1); }
  /// (q - 1)^k.
  static LaurentPoly q_minus_one_pow(int k);
  static LaurentPoly from_terms(const Terms& terms);

  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  BigInt coeff(int exponent) const;
  /// Highest exponent; undefined for zero (throws).
  int degree() const;
  /// Lowest exponent; undefined for zero (throws).
  int low_degree() const;

  LaurentPoly operator-() const;
  LaurentPoly& operator+=(const LaurentPoly& other);
  LaurentPoly& operator-=(const LaurentPoly& other);
  LaurentPoly& operator*=(const LaurentPoly& other);
  /// Add c * q^e in place.
  void add_term(const BigInt& c, int e);
  /// Multiply by q^k.
  LaurentPoly shifted(int k) const;

  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(LaurentPoly a, const LaurentPoly& b) { return a *= b; }
  friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;

  /// `q^4 - 3*q^3 + ...`, exponents descending.
  std::string to_string() const;

 private:
  Terms terms_;
};

LaurentPoly pow(const LaurentPoly& p, int k);
/// f(q) -> f(q^{-1}).
LaurentPoly bar(const LaurentPoly& p);

std::ostream& operator<<(std::ostream& os, const LaurentPoly& p);

}  // namespace rpoly
