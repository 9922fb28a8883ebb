#pragma once

#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "rq/ncpoly.hpp"
#include "rq/rewrite.hpp"

namespace rq::cli {

class ParseError : public std::invalid_argument {
 public:
  ParseError(const std::string& what, unsigned line, unsigned column);
  unsigned line() const { return line_; }
  unsigned column() const { return column_; }
  /// Message without the position prefix.
  const std::string& message() const { return message_; }

 private:
  std::string message_;
  unsigned line_, column_;
};

struct Expr {
  enum class Kind { Number, QSymbol, Letter, Identity, Sum, Difference, Negate, Product, Quotient, Power, Bracket };
  Kind kind;
  Rational number;  // Number
  rq::Letter letter = rq::Letter::A;
  unsigned exponent = 0;  // Power
  std::vector<std::unique_ptr<Expr>> args;
  unsigned line = 1, column = 1;
};

/// Largest exponent accepted by the grammar.
inline constexpr unsigned kMaxExponent = 4096;

std::unique_ptr<Expr> parse(std::string_view text);
/// Throws ParseError when a divisor is not a nonzero scalar.
NcPoly elaborate(const Expr& e);
NcPoly parse_poly(std::string_view text);

/// Reduction system file: one `name: LHS -> rhs` per line; blank lines and
/// lines starting with '#' are skipped.  LHS must be a single word.
ReductionSystem parse_reduction_system(std::string_view text, const std::string& name);

}  // namespace rq::cli
