#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <string_view>

namespace rq {

/// Arbitrary-precision rational number, always kept in lowest terms with a
/// positive denominator.
using Rational = mpq_class;
using Integer = mpz_class;

/// Thrown when an exact computation hits an impossible state (division by
/// zero, inexact division that should be exact, ...).
class ArithmeticError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

Rational make_rational(const Integer& num, const Integer& den);

/// Parses "3", "-7", "2/3".  Throws std::invalid_argument on bad input.
Rational parse_rational(std::string_view text);

std::string to_string(const Rational& r);

}  // namespace rq
