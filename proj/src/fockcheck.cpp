#include "rq/fockcheck.hpp"

#include <stdexcept>
#include <string>

namespace rq {

RatMatrix RatMatrix::identity(unsigned n) {
  RatMatrix m(n);
  for (unsigned i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

bool RatMatrix::is_zero() const {
  for (const auto& v : data)
    if (v != 0) return false;
  return true;
}

bool RatMatrix::column_zero(unsigned c) const {
  for (unsigned r = 0; r < dim; ++r)
    if (at(r, c) != 0) return false;
  return true;
}

RatMatrix operator*(const RatMatrix& x, const RatMatrix& y) {
  if (x.dim != y.dim) throw std::invalid_argument("matrix size mismatch");
  RatMatrix out(x.dim);
  for (unsigned i = 0; i < x.dim; ++i)
    for (unsigned k = 0; k < x.dim; ++k) {
      if (x.at(i, k) == 0) continue;
      for (unsigned j = 0; j < x.dim; ++j)
        if (y.at(k, j) != 0) out.at(i, j) += x.at(i, k) * y.at(k, j);
    }
  return out;
}

RatMatrix operator-(const RatMatrix& x, const RatMatrix& y) {
  if (x.dim != y.dim) throw std::invalid_argument("matrix size mismatch");
  RatMatrix out = x;
  for (std::size_t i = 0; i < out.data.size(); ++i) out.data[i] -= y.data[i];
  return out;
}

FockRep::FockRep(unsigned dim, const Rational& q_val, const Rational& b_val) : dim_(dim), q_(q_val), b_(b_val) {
  if (dim < 2) throw std::invalid_argument("Fock dimension must be at least 2");
  if (q_val == 0 || q_val == 1) throw std::invalid_argument("q must differ from 0 and 1");
  RatMatrix a(dim), b(dim);
  Rational qk = 1, bracket = 0;  // [k]_q
  for (unsigned k = 1; k < dim; ++k) {
    bracket += qk;
    qk *= q_val;
    a.at(k - 1, k) = b_val * bracket;
  }
  for (unsigned k = 0; k + 1 < dim; ++k) b.at(k + 1, k) = 1;
  mats_[static_cast<int>(Letter::A)] = a;
  mats_[static_cast<int>(Letter::B)] = b;
  mats_[static_cast<int>(Letter::C)] = a * b - b * a;
  RatMatrix g = RatMatrix::identity(dim);
  for (auto& v : g.data) v *= b_val;
  mats_[static_cast<int>(Letter::Gamma)] = g;
  for (Letter l : kAllLetters) build_map(l);
}

const RatMatrix& FockRep::matrix(Letter l) const { return mats_[static_cast<int>(l)]; }

void FockRep::build_map(Letter l) {
  const RatMatrix& m = matrix(l);
  ColumnMap& cm = maps_[static_cast<int>(l)];
  cm.row.assign(dim_, -1);
  cm.val.assign(dim_, Rational(0));
  for (unsigned c = 0; c < dim_; ++c)
    for (unsigned r = 0; r < dim_; ++r) {
      if (m.at(r, c) == 0) continue;
      if (cm.row[c] != -1) throw std::logic_error("generator matrix is not monomial");
      cm.row[c] = static_cast<int>(r);
      cm.val[c] = m.at(r, c);
    }
}

RatMatrix FockRep::evaluate(const NcPoly& x) const {
  RatMatrix out(dim_);
  for (const auto& [w, c] : x.terms()) {
    Rational coeff;
    try {
      coeff = c.eval(q_);
    } catch (const ArithmeticError& e) {
      throw ArithmeticError(std::string(e.what()) + " (word " + w.to_string() + ")");
    }
    if (coeff == 0) continue;
    for (unsigned col = 0; col < dim_; ++col) {
      int row = static_cast<int>(col);
      Rational v = coeff;
      for (std::size_t i = w.size(); i-- > 0 && row >= 0;) {
        const ColumnMap& cm = maps_[static_cast<int>(w[i])];
        v *= cm.val[row];
        row = cm.row[row];
      }
      if (row >= 0) out.at(static_cast<unsigned>(row), col) += v;
    }
  }
  return out;
}

bool agree_on_block(const NcPoly& x, const NcPoly& y, const FockRep& rep) {
  const unsigned d = std::max(x.is_zero() ? 0u : x.max_weight(), y.is_zero() ? 0u : y.max_weight());
  if (rep.dim() <= d) {
    throw std::invalid_argument("Fock dimension " + std::to_string(rep.dim()) + " too small for weight " +
                                std::to_string(d));
  }
  const RatMatrix diff = rep.evaluate(x - y);
  for (unsigned c = 0; c + d < rep.dim(); ++c)
    if (!diff.column_zero(c)) return false;
  return true;
}

}  // namespace rq
