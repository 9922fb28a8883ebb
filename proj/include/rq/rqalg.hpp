#pragma once

#include "rq/rewrite.hpp"

namespace rq {

/// The two working presentations of R(q).
///
/// S (generators A, B, gamma):
///   lambda: AB -> gamma + q BA,  sigma: A gamma -> gamma A,  tau: B gamma -> gamma B
/// R (generators A, B, C, gamma):
///   sigma1: AB -> (gamma - qC)/(1-q)   sigma2: BA -> (gamma - C)/(1-q)
///   sigma3: AC -> qCA                  sigma4: BC -> CB/q
///   sigma5..7: X gamma -> gamma X for X = A, B, C
enum class Presentation { S, R };

const ReductionSystem& presentation(Presentation which);
Presentation parse_presentation(std::string_view name);

/// A thread-local memoizing normalizer for a presentation.
Normalizer& normalizer(Presentation which);

/// gamma^h B^m A^n
struct SBasisVector {
  unsigned h = 0, m = 0, n = 0;
  unsigned weight() const { return 2 * h + m + n; }
  Word word() const;
};

/// gamma^h C^k B^l (B-type, l >= 0) or gamma^h C^k A^t (A-type, t >= 1).
struct RBasisVector {
  enum class Kind { BType, AType };
  Kind kind = Kind::BType;
  unsigned h = 0, k = 0, tail = 0;
  unsigned weight() const { return 2 * h + 2 * k + tail; }
  Word word() const;
};

struct ExponentBounds {
  unsigned expand = 64;
  unsigned product = 16;
  unsigned commute = 64;
};
inline constexpr ExponentBounds kDefaultBounds{};

enum class Side { Left, Right };

/// S-normal form of A^n B (left) or A B^n (right) from the closed formula
/// {n}_q gamma A^{n-1} + q^n B A^n  /  {n}_q gamma B^{n-1} + q^n B^n A.
CanonicalElement expand_AnB(unsigned n, Side side, const ExponentBounds& bounds = kDefaultBounds);

enum class ProductOrder { AB, BA };
enum class ProductStyle { SStyle, CStyle };

/// Closed form of A^n B^n (order AB) or B^n A^n (order BA).
///
/// `scaled` is the right-hand side exactly as the identity is usually written
/// (the product over BA and gamma for S-style, the q-binomial sum over
/// gamma^{n-i} C^i for C-style); it equals `scale` times the monomial.
/// `value` is the canonical form of the bare monomial.
struct ClosedForm {
  QRat scale;
  CanonicalElement scaled;
  CanonicalElement value;
};
ClosedForm product_closed_form(unsigned n, ProductOrder order, ProductStyle style,
                               const ExponentBounds& bounds = kDefaultBounds);

/// R-normal form of A^k C^n (letter A), which is q^{kn} C^n A^k, or of
/// B^k C^n (letter B), which is q^{-kn} C^n B^k.
CanonicalElement commute_bracket_power(Letter letter, unsigned k, unsigned n,
                                       const ExponentBounds& bounds = kDefaultBounds);

/// Replaces every C by AB - BA.
NcPoly substitute_commutator(const NcPoly& x);

/// Moves a canonical element to the other presentation's basis.
CanonicalElement convert_basis(const CanonicalElement& x, Presentation target);

}  // namespace rq
