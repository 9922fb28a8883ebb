#include "rq/qrat.hpp"

namespace rq {

QRat::QRat(QPoly num, QPoly den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw ArithmeticError("rational function with zero denominator");
  canonicalize();
}

void QRat::canonicalize() {
  if (num_.is_zero()) {
    den_ = QPoly(1);
    return;
  }
  if (!den_.is_constant()) {
    QPoly g = gcd(num_, den_);
    if (!g.is_one()) {
      num_ = num_.exact_div(g);
      den_ = den_.exact_div(g);
    }
  }
  const Rational lead = den_.leading();
  if (lead != 1) {
    Rational inv = 1 / lead;
    num_ *= inv;
    den_ *= inv;
  }
}

QRat QRat::q_pow(long k) {
  if (k >= 0) return QRat(QPoly::monomial(Rational(1), static_cast<std::size_t>(k)));
  QRat r;
  r.num_ = QPoly(1);
  r.den_ = QPoly::monomial(Rational(1), static_cast<std::size_t>(-k));
  return r;
}

QRat QRat::operator-() const {
  QRat r = *this;
  r.num_ = -r.num_;
  return r;
}

QRat& QRat::operator+=(const QRat& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  if (den_ == o.den_) {
    num_ += o.num_;
    if (!den_.is_one()) canonicalize();
    else if (num_.is_zero()) den_ = QPoly(1);
    return *this;
  }
  // a/b + c/d with g = gcd(b, d): (a*(d/g) + c*(b/g)) / (b*d/g)
  QPoly g = gcd(den_, o.den_);
  QPoly bd = den_.exact_div(g);
  QPoly dd = o.den_.exact_div(g);
  num_ = num_ * dd + o.num_ * bd;
  den_ = den_ * dd;
  canonicalize();
  return *this;
}

QRat& QRat::operator-=(const QRat& o) { return *this += -o; }

QRat& QRat::operator*=(const QRat& o) {
  if (is_zero() || o.is_zero()) return *this = QRat();
  if (den_.is_one() && o.den_.is_one()) {
    num_ *= o.num_;
    return *this;
  }
  QPoly g1 = gcd(num_, o.den_);
  QPoly g2 = gcd(o.num_, den_);
  num_ = num_.exact_div(g1) * o.num_.exact_div(g2);
  den_ = den_.exact_div(g2) * o.den_.exact_div(g1);
  const Rational lead = den_.leading();
  if (lead != 1) {
    Rational inv = 1 / lead;
    num_ *= inv;
    den_ *= inv;
  }
  return *this;
}

QRat QRat::inverse() const {
  if (is_zero()) throw ArithmeticError("inverse of zero");
  QRat r;
  r.num_ = den_;
  r.den_ = num_;
  const Rational lead = r.den_.leading();
  if (lead != 1) {
    Rational inv = 1 / lead;
    r.num_ *= inv;
    r.den_ *= inv;
  }
  return r;
}

QRat& QRat::operator/=(const QRat& o) { return *this *= o.inverse(); }

QRat QRat::pow(long e) const {
  if (e < 0) return inverse().pow(-e);
  QRat r;
  r.num_ = num_.pow(static_cast<unsigned>(e));
  r.den_ = den_.pow(static_cast<unsigned>(e));
  return r;
}

Rational QRat::eval(const Rational& q_value) const {
  Rational d = den_.eval(q_value);
  if (d == 0) {
    throw ArithmeticError("coefficient " + to_string() + " has a pole at q = " + q_value.get_str());
  }
  return num_.eval(q_value) / d;
}

std::pair<QPoly, QPoly> QRat::display_form() const {
  if (den_.is_one()) return {num_, den_};
  // Scale so that every coefficient of num and den is an integer and the
  // combined content is 1.
  auto [sn, pn] = primitive_integer_form(num_);
  auto [sd, pd] = primitive_integer_form(den_);
  Rational ratio = sn / sd;  // value = ratio * pn / pd
  Integer rn = ratio.get_num();
  Integer rd = ratio.get_den();
  std::vector<Rational> n, d;
  for (auto& c : pn) n.emplace_back(c * rn);
  for (auto& c : pd) d.emplace_back(c * rd);
  QPoly np(std::move(n));
  QPoly dp(std::move(d));
  if (dp.coeff(dp.order()) < 0) {
    np = -np;
    dp = -dp;
  }
  return {np, dp};
}

std::string QRat::to_string(bool compact) const {
  auto [n, d] = display_form();
  if (d.is_one()) return n.to_string(compact);
  std::string ns = n.term_count() > 1 ? "(" + n.to_string(compact) + ")" : n.to_string(compact);
  return ns + "/(" + d.to_string(compact) + ")";
}

}  // namespace rq
