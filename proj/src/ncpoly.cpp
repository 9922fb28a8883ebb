#include "rq/ncpoly.hpp"

#include <algorithm>
#include <stdexcept>

namespace rq {

NcPoly::NcPoly(const QRat& scalar) {
  if (!scalar.is_zero()) terms_.emplace(Word(), scalar);
}

NcPoly::NcPoly(Letter l) { terms_.emplace(Word(l), QRat(1)); }

NcPoly::NcPoly(const Word& w, QRat coeff) {
  if (!coeff.is_zero()) terms_.emplace(w, std::move(coeff));
}

QRat NcPoly::coeff(const Word& w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? QRat() : it->second;
}

unsigned NcPoly::max_weight() const {
  unsigned m = 0;
  for (const auto& [w, c] : terms_) m = std::max(m, w.weight());
  return m;
}

bool NcPoly::is_homogeneous() const {
  if (terms_.empty()) return true;
  const unsigned w0 = terms_.begin()->first.weight();
  return std::all_of(terms_.begin(), terms_.end(), [w0](const auto& t) { return t.first.weight() == w0; });
}

NcPoly NcPoly::homogeneous_part(unsigned w) const {
  NcPoly r;
  for (const auto& [word, c] : terms_) {
    if (word.weight() == w) r.terms_.emplace(word, c);
  }
  return r;
}

void NcPoly::add_term(const Word& w, const QRat& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(w, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

NcPoly NcPoly::operator-() const {
  NcPoly r = *this;
  for (auto& [w, c] : r.terms_) c = -c;
  return r;
}

NcPoly& NcPoly::operator+=(const NcPoly& o) {
  for (const auto& [w, c] : o.terms_) add_term(w, c);
  return *this;
}

NcPoly& NcPoly::operator-=(const NcPoly& o) {
  for (const auto& [w, c] : o.terms_) add_term(w, -c);
  return *this;
}

NcPoly& NcPoly::operator*=(const QRat& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  if (c.is_one()) return *this;
  for (auto& [w, x] : terms_) x *= c;
  return *this;
}

NcPoly operator*(const NcPoly& a, const NcPoly& b) {
  NcPoly r;
  for (const auto& [wa, ca] : a.terms_) {
    for (const auto& [wb, cb] : b.terms_) r.add_term(wa * wb, ca * cb);
  }
  return r;
}

NcPoly NcPoly::pow(unsigned n) const {
  NcPoly r = identity();
  for (unsigned i = 0; i < n; ++i) r = r * *this;
  return r;
}

std::pair<bool, std::string> coefficient_text(const QRat& c, bool before_word) {
  auto [n, d] = c.display_form();
  bool negative = n.coeff(n.order()) < 0;
  if (negative) n = -n;
  std::string text;
  if (d.is_one()) {
    if (n.is_one() && before_word) return {negative, ""};
    text = n.term_count() > 1 ? "(" + n.to_string(true) + ")" : n.to_string(true);
  } else {
    std::string ns = n.term_count() > 1 ? "(" + n.to_string(true) + ")" : n.to_string(true);
    text = "(" + ns + "/(" + d.to_string(true) + "))";
  }
  return {negative, text};
}

std::string NcPoly::to_string(bool unicode) const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [w, c] : terms_) {
    auto [negative, text] = coefficient_text(c, !w.empty());
    if (first) {
      if (negative) out += '-';
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    if (w.empty()) {
      out += text;
    } else {
      if (!text.empty()) out += text + "*";
      out += w.to_string(unicode);
    }
  }
  return out;
}

NcPoly lie_bracket(const NcPoly& x, const NcPoly& y) { return x * y - y * x; }

NcPoly ad_power(const NcPoly& x, int sign, unsigned n, const NcPoly& y) {
  if (sign != 1 && sign != -1) throw std::invalid_argument("ad_power sign must be +1 or -1");
  NcPoly r = y;
  for (unsigned i = 0; i < n; ++i) {
    r = lie_bracket(x, r);
    if (sign < 0) r = -r;
  }
  return r;
}

}  // namespace rq
