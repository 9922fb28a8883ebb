#pragma once

#include <map>
#include <string>

#include "rq/qrat.hpp"
#include "rq/word.hpp"

namespace rq {

/// Element of the free unital associative algebra Q(q)<A, B, C, gamma>:
/// a finite linear combination of words.  Zero coefficients are never stored,
/// and terms iterate in increasing admissible order.
class NcPoly {
 public:
  using Terms = std::map<Word, QRat>;

  NcPoly() = default;
  NcPoly(const QRat& scalar);  // NOLINT(google-explicit-constructor)
  NcPoly(long scalar) : NcPoly(QRat(scalar)) {}  // NOLINT(google-explicit-constructor)
  NcPoly(Letter l);  // NOLINT(google-explicit-constructor)
  explicit NcPoly(const Word& w, QRat coeff = QRat(1));

  static NcPoly identity() { return NcPoly(Word()); }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  QRat coeff(const Word& w) const;
  /// Largest word in the admissible order.  Requires !is_zero().
  const Word& leading_word() const { return terms_.rbegin()->first; }
  unsigned max_weight() const;
  bool is_homogeneous() const;
  /// Terms of exactly the given weight.
  NcPoly homogeneous_part(unsigned w) const;

  /// Adds c*w in place.
  void add_term(const Word& w, const QRat& c);

  NcPoly operator-() const;
  NcPoly& operator+=(const NcPoly& o);
  NcPoly& operator-=(const NcPoly& o);
  NcPoly& operator*=(const QRat& c);
  NcPoly& operator*=(const NcPoly& o) { return *this = *this * o; }
  friend NcPoly operator+(NcPoly a, const NcPoly& b) { return a += b; }
  friend NcPoly operator-(NcPoly a, const NcPoly& b) { return a -= b; }
  friend NcPoly operator*(NcPoly a, const QRat& c) { return a *= c; }
  friend NcPoly operator*(const QRat& c, NcPoly a) { return a *= c; }
  /// Concatenation product, extended bilinearly.
  friend NcPoly operator*(const NcPoly& a, const NcPoly& b);
  friend bool operator==(const NcPoly&, const NcPoly&) = default;

  NcPoly pow(unsigned n) const;

  /// Human-readable form, e.g. "(1+q)*g*A + q^2*B*A*A".  Parses back via the
  /// CLI grammar.
  std::string to_string(bool unicode = false) const;

 private:
  Terms terms_;
};

/// [x, y] = xy - yx
NcPoly lie_bracket(const NcPoly& x, const NcPoly& y);

/// Applies (sign * ad x) n times to y; sign must be +1 or -1.
NcPoly ad_power(const NcPoly& x, int sign, unsigned n, const NcPoly& y);

/// Text of a coefficient as it appears in front of a word: sign split off,
/// the magnitude parenthesized when needed ("q^2", "(1+q)", "(1/(1-q))").
/// Returns {negative, text}; text is empty for magnitude 1 when a word follows.
std::pair<bool, std::string> coefficient_text(const QRat& c, bool before_word);

}  // namespace rq
