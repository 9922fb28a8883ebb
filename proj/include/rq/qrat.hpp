#pragma once

#include <string>

#include "rq/qpoly.hpp"

namespace rq {

/// Element of the coefficient field Q(q).
///
/// Canonical form: gcd(num, den) = 1 and den is monic, so two QRat values are
/// equal exactly when their stored polynomials are equal.
class QRat {
 public:
  QRat() : den_(1) {}
  QRat(long c) : num_(c), den_(1) {}  // NOLINT(google-explicit-constructor)
  QRat(const Rational& c) : num_(c), den_(1) {}  // NOLINT(google-explicit-constructor)
  QRat(QPoly p) : num_(std::move(p)), den_(1) {}  // NOLINT(google-explicit-constructor)
  /// Reduces num/den to canonical form.  Throws ArithmeticError if den = 0.
  QRat(QPoly num, QPoly den);

  static QRat q() { return QRat(QPoly::q()); }
  /// q^k for any integer k.
  static QRat q_pow(long k);

  const QPoly& num() const { return num_; }
  const QPoly& den() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return num_.is_one() && den_.is_one(); }
  bool is_polynomial() const { return den_.is_one(); }

  QRat operator-() const;
  QRat& operator+=(const QRat& o);
  QRat& operator-=(const QRat& o);
  QRat& operator*=(const QRat& o);
  QRat& operator/=(const QRat& o);

  friend QRat operator+(QRat a, const QRat& b) { return a += b; }
  friend QRat operator-(QRat a, const QRat& b) { return a -= b; }
  friend QRat operator*(QRat a, const QRat& b) { return a *= b; }
  friend QRat operator/(QRat a, const QRat& b) { return a /= b; }
  friend bool operator==(const QRat& a, const QRat& b) = default;

  QRat inverse() const;
  /// Integer power; negative exponents invert (throws on zero base).
  QRat pow(long e) const;

  /// Specializes q to a rational value.  Throws ArithmeticError when the
  /// denominator vanishes there.
  Rational eval(const Rational& q_value) const;

  /// Text form with integer coefficients, e.g. "(1 + q - 2*q^3)/(1 - q)".
  /// compact drops the spaces around + and -.
  std::string to_string(bool compact = false) const;

  /// Integer-coefficient display pair (n, d): coprime overall content and
  /// the lowest nonzero coefficient of d positive.  value = n / d.
  std::pair<QPoly, QPoly> display_form() const;

 private:
  void canonicalize();
  QPoly num_;
  QPoly den_;
};

}  // namespace rq
