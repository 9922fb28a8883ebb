#pragma once

#include <vector>

#include "rq/ncpoly.hpp"
#include "rq/rational.hpp"

namespace rq {

/// Dense N x N matrix over Q, row-major.
struct RatMatrix {
  unsigned dim = 0;
  std::vector<Rational> data;

  explicit RatMatrix(unsigned n = 0) : dim(n), data(std::size_t(n) * n) {}
  static RatMatrix identity(unsigned n);
  Rational& at(unsigned r, unsigned c) { return data[std::size_t(r) * dim + c]; }
  const Rational& at(unsigned r, unsigned c) const { return data[std::size_t(r) * dim + c]; }
  bool is_zero() const;
  /// Column c is zero.
  bool column_zero(unsigned c) const;
  friend RatMatrix operator*(const RatMatrix& x, const RatMatrix& y);
  friend RatMatrix operator-(const RatMatrix& x, const RatMatrix& y);
  friend bool operator==(const RatMatrix&, const RatMatrix&) = default;
};

/// Truncated ladder representation on span(e_0..e_{N-1}):
///   B e_k = e_{k+1} (e_{N-1} -> 0), A e_k = b [k]_q e_{k-1}, C -> AB - BA, gamma -> b I.
class FockRep {
 public:
  static constexpr unsigned kDefaultDim = 32;
  static Rational default_q() { return Rational(2, 3); }
  static Rational default_b() { return Rational(5, 7); }

  /// Throws std::invalid_argument for dim < 2 or q in {0, 1}.
  FockRep(unsigned dim, const Rational& q_val, const Rational& b_val);

  unsigned dim() const { return dim_; }
  const Rational& q() const { return q_; }
  const Rational& b() const { return b_; }
  const RatMatrix& matrix(Letter l) const;

  RatMatrix evaluate(const NcPoly& x) const;

 private:
  // Every generator has at most one nonzero entry per column.
  struct ColumnMap {
    std::vector<int> row;  // -1: column is zero
    std::vector<Rational> val;
  };
  void build_map(Letter l);

  unsigned dim_;
  Rational q_, b_;
  RatMatrix mats_[4];
  ColumnMap maps_[4];
};

/// Largest weight D over both inputs; compares columns 0..N-1-D, where the
/// truncation cannot be felt.  Throws std::invalid_argument if N <= D.
bool agree_on_block(const NcPoly& x, const NcPoly& y, const FockRep& rep);

}  // namespace rq
