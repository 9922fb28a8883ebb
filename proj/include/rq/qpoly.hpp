#pragma once

#include <cstddef>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "rq/rational.hpp"

namespace rq {

/// Univariate polynomial in q with rational coefficients.
///
/// coeffs_[i] is the coefficient of q^i.  Trailing zeros are always trimmed,
/// so the zero polynomial has no coefficients and equality is structural.
class QPoly {
 public:
  QPoly() = default;
  QPoly(long c);  // NOLINT(google-explicit-constructor)
  explicit QPoly(const Rational& c);
  explicit QPoly(std::vector<Rational> coeffs);
  QPoly(std::initializer_list<long> coeffs);

  /// c * q^k
  static QPoly monomial(const Rational& c, std::size_t k);
  static QPoly q() { return monomial(Rational(1), 1); }

  bool is_zero() const { return coeffs_.empty(); }
  bool is_one() const;
  bool is_constant() const { return coeffs_.size() <= 1; }
  /// Degree; -1 for the zero polynomial.
  long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
  /// Lowest exponent with a nonzero coefficient; 0 for the zero polynomial.
  std::size_t order() const;
  std::size_t term_count() const;

  const std::vector<Rational>& coeffs() const { return coeffs_; }
  Rational coeff(std::size_t i) const;
  const Rational& leading() const;

  QPoly operator-() const;
  QPoly& operator+=(const QPoly& o);
  QPoly& operator-=(const QPoly& o);
  QPoly& operator*=(const QPoly& o);
  QPoly& operator*=(const Rational& c);

  friend QPoly operator+(QPoly a, const QPoly& b) { return a += b; }
  friend QPoly operator-(QPoly a, const QPoly& b) { return a -= b; }
  friend QPoly operator*(const QPoly& a, const QPoly& b);
  friend QPoly operator*(QPoly a, const Rational& c) { return a *= c; }
  friend bool operator==(const QPoly& a, const QPoly& b) = default;

  /// Multiplies by q^k.
  QPoly shifted(std::size_t k) const;
  /// Divides by q^k; requires order() >= k.
  QPoly unshifted(std::size_t k) const;
  QPoly pow(unsigned e) const;
  /// p(q^k)
  QPoly substitute_power(unsigned k) const;

  /// Euclidean division over Q.  Throws ArithmeticError on a zero divisor.
  std::pair<QPoly, QPoly> divmod(const QPoly& divisor) const;
  /// Exact division; throws ArithmeticError if a remainder is left.
  QPoly exact_div(const QPoly& divisor) const;

  QPoly monic() const;
  Rational eval(const Rational& x) const;

  /// Ascending-order text, e.g. "1 + q - 2*q^3".  compact drops the spaces.
  std::string to_string(bool compact = false) const;

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

/// Monic gcd over Q (zero if both are zero).
QPoly gcd(const QPoly& a, const QPoly& b);

/// Splits p into (s, P) with p = s * P, where P has coprime integer
/// coefficients and a positive leading coefficient.
std::pair<Rational, std::vector<Integer>> primitive_integer_form(const QPoly& p);

}  // namespace rq
