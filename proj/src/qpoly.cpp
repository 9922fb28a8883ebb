#include "rq/qpoly.hpp"

#include <algorithm>
#include <sstream>

namespace rq {

QPoly::QPoly(long c) {
  if (c != 0) coeffs_.emplace_back(c);
}

QPoly::QPoly(const Rational& c) {
  if (c != 0) coeffs_.push_back(c);
}

QPoly::QPoly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

QPoly::QPoly(std::initializer_list<long> coeffs) {
  coeffs_.reserve(coeffs.size());
  for (long c : coeffs) coeffs_.emplace_back(c);
  trim();
}

QPoly QPoly::monomial(const Rational& c, std::size_t k) {
  QPoly p;
  if (c == 0) return p;
  p.coeffs_.assign(k + 1, Rational(0));
  p.coeffs_[k] = c;
  return p;
}

void QPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

bool QPoly::is_one() const { return coeffs_.size() == 1 && coeffs_[0] == 1; }

std::size_t QPoly::order() const {
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] != 0) return i;
  }
  return 0;
}

std::size_t QPoly::term_count() const {
  return static_cast<std::size_t>(
      std::count_if(coeffs_.begin(), coeffs_.end(), [](const Rational& c) { return c != 0; }));
}

Rational QPoly::coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Rational(0); }

const Rational& QPoly::leading() const {
  if (coeffs_.empty()) throw ArithmeticError("leading coefficient of zero polynomial");
  return coeffs_.back();
}

QPoly QPoly::operator-() const {
  QPoly r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

QPoly& QPoly::operator+=(const QPoly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Rational(0));
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  trim();
  return *this;
}

QPoly& QPoly::operator-=(const QPoly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Rational(0));
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  trim();
  return *this;
}

QPoly operator*(const QPoly& a, const QPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> out(a.coeffs_.size() + b.coeffs_.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
      if (b.coeffs_[j] == 0) continue;
      out[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
  }
  return QPoly(std::move(out));
}

QPoly& QPoly::operator*=(const QPoly& o) { return *this = *this * o; }

QPoly& QPoly::operator*=(const Rational& c) {
  if (c == 0) {
    coeffs_.clear();
    return *this;
  }
  for (auto& x : coeffs_) x *= c;
  return *this;
}

QPoly QPoly::shifted(std::size_t k) const {
  if (is_zero() || k == 0) return *this;
  QPoly r;
  r.coeffs_.assign(k, Rational(0));
  r.coeffs_.insert(r.coeffs_.end(), coeffs_.begin(), coeffs_.end());
  return r;
}

QPoly QPoly::unshifted(std::size_t k) const {
  if (is_zero() || k == 0) return *this;
  if (order() < k) throw ArithmeticError("unshift below order");
  QPoly r;
  r.coeffs_.assign(coeffs_.begin() + static_cast<std::ptrdiff_t>(k), coeffs_.end());
  return r;
}

QPoly QPoly::pow(unsigned e) const {
  QPoly result(1);
  QPoly base = *this;
  while (e > 0) {
    if (e & 1U) result *= base;
    e >>= 1U;
    if (e > 0) base *= base;
  }
  return result;
}

QPoly QPoly::substitute_power(unsigned k) const {
  if (k == 1 || is_constant()) return *this;
  if (k == 0) {
    Rational sum = 0;
    for (const auto& c : coeffs_) sum += c;
    return QPoly(sum);
  }
  std::vector<Rational> out((coeffs_.size() - 1) * k + 1, Rational(0));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) out[i * k] = coeffs_[i];
  return QPoly(std::move(out));
}

std::pair<QPoly, QPoly> QPoly::divmod(const QPoly& divisor) const {
  if (divisor.is_zero()) throw ArithmeticError("polynomial division by zero");
  QPoly rem = *this;
  if (rem.degree() < divisor.degree()) return {QPoly(), rem};
  const std::size_t dd = divisor.coeffs_.size() - 1;
  const Rational inv_lead = 1 / divisor.leading();
  std::vector<Rational> quot(rem.coeffs_.size() - dd, Rational(0));
  for (std::size_t i = rem.coeffs_.size(); i-- > dd;) {
    if (rem.coeffs_[i] == 0) continue;
    Rational t = rem.coeffs_[i] * inv_lead;
    quot[i - dd] = t;
    for (std::size_t j = 0; j <= dd; ++j) rem.coeffs_[i - dd + j] -= t * divisor.coeffs_[j];
  }
  rem.trim();
  return {QPoly(std::move(quot)), rem};
}

QPoly QPoly::exact_div(const QPoly& divisor) const {
  if (divisor.is_one()) return *this;
  if (divisor.is_constant()) {
    QPoly r = *this;
    r *= 1 / divisor.leading();
    return r;
  }
  auto [quot, rem] = divmod(divisor);
  if (!rem.is_zero()) throw ArithmeticError("inexact polynomial division");
  return quot;
}

QPoly QPoly::monic() const {
  if (is_zero() || leading() == 1) return *this;
  QPoly r = *this;
  r *= 1 / leading();
  return r;
}

Rational QPoly::eval(const Rational& x) const {
  Rational acc = 0;
  for (std::size_t i = coeffs_.size(); i-- > 0;) acc = acc * x + coeffs_[i];
  return acc;
}

std::string QPoly::to_string(bool compact) const {
  if (is_zero()) return "0";
  const char* plus = compact ? "+" : " + ";
  const char* minus = compact ? "-" : " - ";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    const Rational& c = coeffs_[i];
    if (c == 0) continue;
    Rational mag = abs(c);
    if (first) {
      if (c < 0) os << '-';
    } else {
      os << (c < 0 ? minus : plus);
    }
    first = false;
    if (i == 0) {
      os << mag.get_str();
      continue;
    }
    if (mag != 1) os << mag.get_str() << '*';
    os << 'q';
    if (i > 1) os << '^' << i;
  }
  return os.str();
}

namespace {

using IntPoly = std::vector<Integer>;

void trim_int(IntPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

Integer content(const IntPoly& p) {
  Integer g = 0;
  for (const auto& c : p) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

void make_primitive(IntPoly& p) {
  Integer g = content(p);
  if (g > 1) {
    for (auto& c : p) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
  }
  if (!p.empty() && p.back() < 0) {
    for (auto& c : p) c = -c;
  }
}

// Pseudo-remainder of a by b over Z (up to a power of lc(b)).
IntPoly pseudo_rem(IntPoly a, const IntPoly& b) {
  const std::size_t db = b.size() - 1;
  const Integer& lb = b.back();
  while (!a.empty() && a.size() - 1 >= db) {
    Integer t = a.back();
    const std::size_t shift = a.size() - 1 - db;
    for (auto& c : a) c *= lb;
    for (std::size_t j = 0; j <= db; ++j) a[shift + j] -= t * b[j];
    trim_int(a);
    make_primitive(a);
  }
  return a;
}

}  // namespace

std::pair<Rational, std::vector<Integer>> primitive_integer_form(const QPoly& p) {
  if (p.is_zero()) return {Rational(0), {}};
  Integer lcm_den = 1;
  for (const auto& c : p.coeffs()) {
    mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), c.get_den_mpz_t());
  }
  IntPoly ip;
  ip.reserve(p.coeffs().size());
  for (const auto& c : p.coeffs()) {
    Integer v = c.get_num() * (lcm_den / c.get_den());
    ip.push_back(std::move(v));
  }
  Integer g = content(ip);
  if (ip.back() < 0) g = -g;
  for (auto& c : ip) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
  return {make_rational(g, lcm_den), std::move(ip)};
}

QPoly gcd(const QPoly& a, const QPoly& b) {
  if (a.is_zero()) return b.monic();
  if (b.is_zero()) return a.monic();
  const std::size_t low = std::min(a.order(), b.order());
  const QPoly ar = a.unshifted(a.order());
  const QPoly br = b.unshifted(b.order());
  if (ar.is_constant() || br.is_constant()) return QPoly::monomial(Rational(1), low);

  IntPoly x = primitive_integer_form(ar).second;
  IntPoly y = primitive_integer_form(br).second;
  if (x.size() < y.size()) std::swap(x, y);
  while (!y.empty()) {
    if (y.size() == 1) return QPoly::monomial(Rational(1), low);
    IntPoly r = pseudo_rem(x, y);
    x = std::move(y);
    y = std::move(r);
  }
  std::vector<Rational> out;
  out.reserve(x.size());
  for (auto& c : x) out.emplace_back(c);
  return QPoly(std::move(out)).monic().shifted(low);
}

}  // namespace rq
