#include "rq/word.hpp"

#include <algorithm>
#include <stdexcept>

namespace rq {

char symbol(Letter l) {
  switch (l) {
    case Letter::A: return 'A';
    case Letter::B: return 'B';
    case Letter::C: return 'C';
    case Letter::Gamma: return 'g';
  }
  return '?';
}

std::optional<Letter> letter_from_symbol(char c) {
  switch (c) {
    case 'A': return Letter::A;
    case 'B': return Letter::B;
    case 'C': return Letter::C;
    case 'g': return Letter::Gamma;
    default: return std::nullopt;
  }
}

namespace {

int rank(char c) {
  switch (c) {
    case 'A': return 3;
    case 'B': return 2;
    case 'C': return 1;
    default: return 0;
  }
}

}  // namespace

Word Word::parse(std::string_view compact) {
  Word w;
  for (char c : compact) {
    if (!letter_from_symbol(c)) throw std::invalid_argument(std::string("unknown letter '") + c + "'");
  }
  w.code_ = std::string(compact);
  return w;
}

Word Word::power(Letter l, unsigned n) {
  Word w;
  w.code_.assign(n, symbol(l));
  return w;
}

Word Word::powers(std::initializer_list<std::pair<Letter, unsigned>> parts) {
  Word w;
  for (const auto& [l, n] : parts) w.code_.append(n, symbol(l));
  return w;
}

unsigned Word::weight() const {
  unsigned w = 0;
  for (char c : code_) w += (c == 'A' || c == 'B') ? 1 : 2;
  return w;
}

Word Word::operator*(const Word& o) const {
  Word w;
  w.code_.reserve(code_.size() + o.code_.size());
  w.code_ = code_;
  w.code_ += o.code_;
  return w;
}

Word& Word::operator*=(const Word& o) {
  code_ += o.code_;
  return *this;
}

Word& Word::operator*=(Letter l) {
  code_ += symbol(l);
  return *this;
}

Word Word::subword(std::size_t pos, std::size_t len) const {
  Word w;
  w.code_ = code_.substr(pos, len);
  return w;
}

std::size_t Word::count(Letter l) const {
  return static_cast<std::size_t>(std::count(code_.begin(), code_.end(), symbol(l)));
}

std::string Word::to_string(bool unicode) const {
  if (code_.empty()) return "I";
  std::string out;
  for (std::size_t i = 0; i < code_.size(); ++i) {
    if (i) out += '*';
    if (unicode && code_[i] == 'g') out += "γ";
    else out += code_[i];
  }
  return out;
}

std::strong_ordering operator<=>(const Word& a, const Word& b) {
  if (auto c = a.weight() <=> b.weight(); c != 0) return c;
  if (auto c = a.code_.size() <=> b.code_.size(); c != 0) return c;
  for (std::size_t i = 0; i < a.code_.size(); ++i) {
    if (auto c = rank(a.code_[i]) <=> rank(b.code_[i]); c != 0) return c;
  }
  return std::strong_ordering::equal;
}

}  // namespace rq
