#include "rq/rqalg.hpp"

#include <stdexcept>

#include "rq/qcombinatorics.hpp"

namespace rq {

namespace {

const QRat kOneMinusQ = QRat(QPoly{1, -1});

NcPoly letter_poly(Letter l) { return NcPoly(l); }

ReductionSystem make_s() {
  using L = Letter;
  std::vector<ReductionRule> rules;
  rules.push_back({"lambda", Word::powers({{L::A, 1}, {L::B, 1}}),
                   NcPoly(L::Gamma) + QRat::q() * NcPoly(Word::powers({{L::B, 1}, {L::A, 1}}))});
  rules.push_back({"sigma", Word::powers({{L::A, 1}, {L::Gamma, 1}}), NcPoly(Word::powers({{L::Gamma, 1}, {L::A, 1}}))});
  rules.push_back({"tau", Word::powers({{L::B, 1}, {L::Gamma, 1}}), NcPoly(Word::powers({{L::Gamma, 1}, {L::B, 1}}))});
  return ReductionSystem("S", std::move(rules), {L::A, L::B, L::Gamma});
}

ReductionSystem make_r() {
  using L = Letter;
  const QRat inv = kOneMinusQ.inverse();
  auto w = [](std::initializer_list<std::pair<Letter, unsigned>> p) { return Word::powers(p); };
  std::vector<ReductionRule> rules;
  rules.push_back({"sigma1", w({{L::A, 1}, {L::B, 1}}), inv * (NcPoly(L::Gamma) - QRat::q() * NcPoly(L::C))});
  rules.push_back({"sigma2", w({{L::B, 1}, {L::A, 1}}), inv * (NcPoly(L::Gamma) - NcPoly(L::C))});
  rules.push_back({"sigma3", w({{L::A, 1}, {L::C, 1}}), NcPoly(w({{L::C, 1}, {L::A, 1}}), QRat::q())});
  rules.push_back({"sigma4", w({{L::B, 1}, {L::C, 1}}), NcPoly(w({{L::C, 1}, {L::B, 1}}), QRat::q_pow(-1))});
  rules.push_back({"sigma5", w({{L::A, 1}, {L::Gamma, 1}}), NcPoly(w({{L::Gamma, 1}, {L::A, 1}}))});
  rules.push_back({"sigma6", w({{L::B, 1}, {L::Gamma, 1}}), NcPoly(w({{L::Gamma, 1}, {L::B, 1}}))});
  rules.push_back({"sigma7", w({{L::C, 1}, {L::Gamma, 1}}), NcPoly(w({{L::Gamma, 1}, {L::C, 1}}))});
  return ReductionSystem("R", std::move(rules));
}

void check_bound(unsigned value, unsigned bound, const char* what) {
  if (value > bound) {
    throw std::out_of_range(std::string(what) + ": exponent " + std::to_string(value) + " exceeds bound " +
                            std::to_string(bound));
  }
}

}  // namespace

const ReductionSystem& presentation(Presentation which) {
  static const ReductionSystem s = make_s();
  static const ReductionSystem r = make_r();
  return which == Presentation::S ? s : r;
}

Presentation parse_presentation(std::string_view name) {
  if (name == "S") return Presentation::S;
  if (name == "R") return Presentation::R;
  throw std::invalid_argument("unknown presentation '" + std::string(name) + "' (expected S or R)");
}

Normalizer& normalizer(Presentation which) {
  thread_local Normalizer s(presentation(Presentation::S));
  thread_local Normalizer r(presentation(Presentation::R));
  return which == Presentation::S ? s : r;
}

Word SBasisVector::word() const {
  return Word::powers({{Letter::Gamma, h}, {Letter::B, m}, {Letter::A, n}});
}

Word RBasisVector::word() const {
  return Word::powers({{Letter::Gamma, h}, {Letter::C, k}, {kind == Kind::AType ? Letter::A : Letter::B, tail}});
}

CanonicalElement expand_AnB(unsigned n, Side side, const ExponentBounds& bounds) {
  check_bound(n, bounds.expand, "expand_AnB");
  const Letter rep = side == Side::Left ? Letter::A : Letter::B;
  NcPoly out;
  if (n >= 1) out.add_term(Word::powers({{Letter::Gamma, 1}, {rep, n - 1}}), QRat(q_number(n)));
  const Word tail = side == Side::Left ? Word::powers({{Letter::B, 1}, {Letter::A, n}})
                                       : Word::powers({{Letter::B, n}, {Letter::A, 1}});
  out.add_term(tail, QRat::q_pow(n));
  return {"S", std::move(out)};
}

ClosedForm product_closed_form(unsigned n, ProductOrder order, ProductStyle style, const ExponentBounds& bounds) {
  check_bound(n, bounds.product, "product_closed_form");
  const long nl = static_cast<long>(n);
  ClosedForm cf;
  if (style == ProductStyle::SStyle) {
    const NcPoly ba(Word::powers({{Letter::B, 1}, {Letter::A, 1}}));
    const NcPoly g = letter_poly(Letter::Gamma);
    NcPoly product = NcPoly::identity();
    if (order == ProductOrder::AB) {
      for (long i = 1; i <= nl; ++i) product = product * (QRat::q_pow(i) * ba + QRat(q_number(i)) * g);
      cf.scale = QRat(1);
    } else {
      for (long j = 0; j < nl; ++j) product = product * (ba - QRat(q_number(j)) * g);
      cf.scale = QRat::q_pow(choose2(nl));
    }
    cf.scaled = normalizer(Presentation::S).canonical(product);
  } else {
    NcPoly sum;
    for (long i = 0; i <= nl; ++i) {
      const long e = order == ProductOrder::AB ? choose2(i + 1) : choose2(nl - i);
      QRat c = QRat::q_pow(e) * QRat(q_binomial(nl, i));
      if (i % 2 == 1) c = -c;
      sum.add_term(Word::powers({{Letter::Gamma, n - static_cast<unsigned>(i)}, {Letter::C, static_cast<unsigned>(i)}}),
                   c);
    }
    cf.scale = kOneMinusQ.pow(nl);
    if (order == ProductOrder::BA) cf.scale *= QRat::q_pow(choose2(nl));
    cf.scaled = {"R", std::move(sum)};
  }
  cf.value = {cf.scaled.system, cf.scaled.value * cf.scale.inverse()};
  return cf;
}

CanonicalElement commute_bracket_power(Letter letter, unsigned k, unsigned n, const ExponentBounds& bounds) {
  check_bound(k, bounds.commute, "commute_bracket_power");
  check_bound(n, bounds.commute, "commute_bracket_power");
  const long kn = static_cast<long>(k) * static_cast<long>(n);
  if (letter == Letter::A) {
    return {"R", NcPoly(Word::powers({{Letter::C, n}, {Letter::A, k}}), QRat::q_pow(kn))};
  }
  if (letter == Letter::B) {
    return {"R", NcPoly(Word::powers({{Letter::C, n}, {Letter::B, k}}), QRat::q_pow(-kn))};
  }
  throw std::invalid_argument("commute_bracket_power: letter must be A or B");
}

NcPoly substitute_commutator(const NcPoly& x) {
  const NcPoly c = NcPoly(Word::powers({{Letter::A, 1}, {Letter::B, 1}})) -
                   NcPoly(Word::powers({{Letter::B, 1}, {Letter::A, 1}}));
  NcPoly out;
  for (const auto& [w, coeff] : x.terms()) {
    NcPoly term = NcPoly(coeff);
    for (std::size_t i = 0; i < w.size(); ++i) term = term * (w[i] == Letter::C ? c : NcPoly(w[i]));
    out += term;
  }
  return out;
}

CanonicalElement convert_basis(const CanonicalElement& x, Presentation target) {
  if (target == Presentation::R) return normalizer(Presentation::R).canonical(x.value);
  return normalizer(Presentation::S).canonical(substitute_commutator(x.value));
}

}  // namespace rq
