#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <optional>
#include <string>
#include <string_view>
#include <utility>

namespace rq {

/// Generators of R(q).  The enumerator value is the rank in the fixed total
/// order A > B > C > Gamma.
enum class Letter : std::uint8_t { Gamma = 0, C = 1, B = 2, A = 3 };

inline constexpr Letter kAllLetters[] = {Letter::A, Letter::B, Letter::C, Letter::Gamma};

/// Weight grading: A, B have weight 1; C and gamma have weight 2.
constexpr unsigned weight(Letter l) { return (l == Letter::A || l == Letter::B) ? 1 : 2; }

/// ASCII symbol: 'A', 'B', 'C', 'g'.
char symbol(Letter l);
std::optional<Letter> letter_from_symbol(char c);

/// A finite sequence of letters; the empty word is the identity I.
class Word {
 public:
  Word() = default;
  explicit Word(Letter l) : code_(1, symbol(l)) {}
  /// Parses a compact letter string like "gBBA".  Throws std::invalid_argument.
  static Word parse(std::string_view compact);
  static Word power(Letter l, unsigned n);
  /// Concatenation of letter powers, e.g. {{Gamma, h}, {C, n}, {A, m}}.
  static Word powers(std::initializer_list<std::pair<Letter, unsigned>> parts);

  std::size_t size() const { return code_.size(); }
  bool empty() const { return code_.empty(); }
  unsigned weight() const;
  Letter operator[](std::size_t i) const { return *letter_from_symbol(code_[i]); }

  Word operator*(const Word& o) const;
  Word& operator*=(const Word& o);
  Word& operator*=(Letter l);
  Word subword(std::size_t pos, std::size_t len) const;
  /// First occurrence of pattern at or after from; npos if none.
  std::size_t find(const Word& pattern, std::size_t from = 0) const { return code_.find(pattern.code_, from); }
  bool contains(const Word& pattern) const { return find(pattern) != npos; }
  bool starts_with(const Word& p) const { return code_.compare(0, p.code_.size(), p.code_) == 0; }
  bool ends_with(const Word& p) const {
    return code_.size() >= p.code_.size() &&
           code_.compare(code_.size() - p.code_.size(), p.code_.size(), p.code_) == 0;
  }
  std::size_t count(Letter l) const;

  /// "gBA" style string ("" for I).
  const std::string& compact() const { return code_; }
  /// "g*B*A" style, "I" for the empty word; unicode renders gamma as γ.
  std::string to_string(bool unicode = false) const;

  friend bool operator==(const Word&, const Word&) = default;
  /// Admissible order: weight, then length, then lexicographic A > B > C > g.
  friend std::strong_ordering operator<=>(const Word& a, const Word& b);

  static constexpr std::size_t npos = std::string::npos;

 private:
  std::string code_;
};

}  // namespace rq

template <>
struct std::hash<rq::Word> {
  std::size_t operator()(const rq::Word& w) const noexcept { return std::hash<std::string>{}(w.compact()); }
};
