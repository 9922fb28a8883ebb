#pragma once

#include <map>
#include <optional>
#include <vector>

#include "rq/rqalg.hpp"

namespace rq {

/// Spanning vectors of the Lie subalgebra generated by A and B.
///   CA(h, n, m)  = gamma^h C^n A^m          (n, m >= 1)
///   BC(h, m, n)  = gamma^h B^m C^n          (n, m >= 1)
///   Beta(h, n)   = {n+1} gamma^h C^{n+1} - {n} gamma^{h+1} C^n   (n >= 1)
struct LieBasisVector {
  enum class Kind { A, B, C, CA, BC, Beta };
  Kind kind = Kind::A;
  unsigned h = 0, m = 0, n = 0;

  static LieBasisVector letter_a() { return {Kind::A}; }
  static LieBasisVector letter_b() { return {Kind::B}; }
  static LieBasisVector letter_c() { return {Kind::C}; }
  static LieBasisVector ca(unsigned h, unsigned n, unsigned m);
  static LieBasisVector bc(unsigned h, unsigned m, unsigned n);
  static LieBasisVector beta(unsigned h, unsigned n);

  unsigned weight() const;
  /// e.g. "CA(0,1,2)", "Beta(1,1)"
  std::string to_string() const;

  auto operator<=>(const LieBasisVector&) const = default;
};

/// Parses the text produced by LieBasisVector::to_string.
LieBasisVector parse_lie_basis_vector(std::string_view text);

/// R-normal form of the vector.
CanonicalElement lie_basis_normal_form(const LieBasisVector& v);

/// All spanning vectors of exactly this weight, in a fixed order.
std::vector<LieBasisVector> lie_basis(unsigned weight);

/// Incrementally row-reduced span of homogeneous or inhomogeneous vectors.
/// Each stored vector has a pivot word that no other stored vector contains.
class SpanBasis {
 public:
  /// Reduces x against the span; returns the remainder and, through combo,
  /// the coefficients c_i with x = remainder + sum c_i * input_i.
  NcPoly reduce(const NcPoly& x, std::map<std::size_t, QRat>* combo = nullptr) const;
  /// Adds x; returns false when x is already in the span.
  bool insert(const NcPoly& x);
  std::size_t rank() const { return rows_.size(); }
  /// The reduced vectors.
  std::vector<NcPoly> vectors() const;

 private:
  struct Row {
    Word pivot;
    NcPoly vec;                       // pivot coefficient is 1
    std::map<std::size_t, QRat> from;  // in terms of inserted inputs
  };
  std::vector<Row> rows_;
  std::size_t inputs_ = 0;
};

struct MembershipVerdict {
  bool member = false;
  std::vector<std::pair<LieBasisVector, QRat>> decomposition;
  CanonicalElement residual;
};

MembershipVerdict is_lie_polynomial(const NcPoly& x);

inline constexpr unsigned kMaxBruteforceWeight = 10;

/// Closure of {A, B} under brackets of pairs with weight sum <= max_weight,
/// returned as a row-reduced basis of R-normal forms.
std::vector<CanonicalElement> lie_span_bruteforce(unsigned max_weight);

}  // namespace rq
