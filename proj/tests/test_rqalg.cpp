#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "rq/qcombinatorics.hpp"
#include "rq/rqalg.hpp"
#include "test_support.hpp"

using namespace rq;
using rq::testing::word;

namespace {

const ReductionSystem& S() { return presentation(Presentation::S); }
const ReductionSystem& R() { return presentation(Presentation::R); }

QRat qn(long n) { return QRat(q_number(n)); }

NcPoly pow_word(Letter l, unsigned n) { return NcPoly(Word::power(l, n)); }

NcPoly nf(const NcPoly& x, Presentation p) { return normalizer(p).normalize(x); }

}  // namespace

TEST_CASE("presentations") {
  CHECK(S().rules().size() == 3);
  CHECK(R().rules().size() == 7);
  CHECK(R().rule("sigma4").rhs == word("CB", QRat::q_pow(-1)));
  CHECK(R().rule("sigma2").rhs == QRat(QPoly{1}, QPoly{1, -1}) * (word("g") - word("C")));
  for (const ReductionSystem* sys : {&S(), &R()}) {
    for (const auto& a : find_ambiguities(*sys)) CHECK(check_resolvable(a, *sys).resolvable);
  }
  CHECK(parse_presentation("R") == Presentation::R);
  CHECK_THROWS(parse_presentation("T"));
}

TEST_CASE("expand_AnB") {
  CHECK(expand_AnB(1, Side::Left).value == word("g") + word("BA", QRat::q()));
  CHECK(expand_AnB(2, Side::Left).value == word("gA", QRat(QPoly{1, 1})) + word("BAA", QRat::q_pow(2)));
  CHECK(expand_AnB(0, Side::Right).value == word("A"));
  CHECK(expand_AnB(0, Side::Left).value == word("B"));
  CHECK_THROWS_AS(expand_AnB(65, Side::Left), std::out_of_range);
  for (unsigned n = 0; n <= 20; ++n) {
    CHECK(expand_AnB(n, Side::Left).value == normalize(pow_word(Letter::A, n) * NcPoly(Letter::B), S()).value);
    CHECK(expand_AnB(n, Side::Right).value == normalize(NcPoly(Letter::A) * pow_word(Letter::B, n), S()).value);
  }
}

TEST_CASE("product_closed_form examples") {
  CHECK(product_closed_form(1, ProductOrder::AB, ProductStyle::SStyle).scaled.value ==
        word("BA", QRat::q()) + word("g"));

  auto two = product_closed_form(2, ProductOrder::AB, ProductStyle::CStyle);
  CHECK(two.scale == QRat(QPoly{1, -2, 1}));
  CHECK(two.scaled.value == word("gg") - word("gC", QRat(QPoly{0, 1, 1})) + word("CC", QRat::q_pow(3)));

  auto three = product_closed_form(3, ProductOrder::BA, ProductStyle::CStyle);
  NcPoly expected = word("ggg", QRat::q_pow(3)) - word("ggC", QRat(QPoly{0, 1, 1, 1})) +
                    word("gCC", QRat(QPoly{1, 1, 1})) - word("CCC");
  CHECK(three.scaled.value == expected);
  CHECK_THROWS_AS(product_closed_form(17, ProductOrder::AB, ProductStyle::SStyle), std::out_of_range);
}

TEST_CASE("product_closed_form agrees with the engine") {
  for (unsigned n = 0; n <= 10; ++n) {
    INFO("n = " << n);
    NcPoly anbn = pow_word(Letter::A, n) * pow_word(Letter::B, n);
    NcPoly bnan = pow_word(Letter::B, n) * pow_word(Letter::A, n);
    auto ab_s = product_closed_form(n, ProductOrder::AB, ProductStyle::SStyle).value.value;
    auto ba_s = product_closed_form(n, ProductOrder::BA, ProductStyle::SStyle).value.value;
    auto ab_c = product_closed_form(n, ProductOrder::AB, ProductStyle::CStyle).value.value;
    auto ba_c = product_closed_form(n, ProductOrder::BA, ProductStyle::CStyle).value.value;
    CHECK(ab_s == nf(anbn, Presentation::S));
    CHECK(ba_s == nf(bnan, Presentation::S));
    CHECK(ab_c == nf(anbn, Presentation::R));
    CHECK(ba_c == nf(bnan, Presentation::R));
    CHECK(convert_basis({"S", ab_s}, Presentation::R).value == ab_c);
    // the literal worklist strategy is exponential in n under S
    if (n <= 6) {
      CHECK(ab_s == normalize(anbn, S()).value);
      CHECK(ba_c == normalize(bnan, R()).value);
    }
  }
}

TEST_CASE("commute_bracket_power") {
  CHECK(commute_bracket_power(Letter::A, 1, 1).value == word("CA", QRat::q()));
  // [A,B] B = q B [A,B]: the irreducible side under R is CB.
  auto b11 = commute_bracket_power(Letter::B, 1, 1).value;
  CHECK(b11 == word("CB", QRat::q_pow(-1)));
  CHECK(QRat::q() * b11 == word("CB"));
  CHECK(commute_bracket_power(Letter::A, 0, 5).value == word("CCCCC"));
  for (unsigned k = 0; k <= 10; ++k) {
    for (unsigned n = 0; n <= 10; ++n) {
      CHECK(commute_bracket_power(Letter::A, k, n).value ==
            normalize(pow_word(Letter::A, k) * pow_word(Letter::C, n), R()).value);
      CHECK(commute_bracket_power(Letter::B, k, n).value ==
            normalize(pow_word(Letter::B, k) * pow_word(Letter::C, n), R()).value);
    }
  }
  CHECK_THROWS(commute_bracket_power(Letter::C, 1, 1));
}

TEST_CASE("convert_basis") {
  auto gc = convert_basis({"R", word("gC")}, Presentation::S);
  CHECK(gc.value == word("gg") + word("gBA", QRat(QPoly{-1, 1})));
  auto ba = convert_basis({"S", word("BA")}, Presentation::R);
  QRat inv(QPoly{1}, QPoly{1, -1});
  CHECK(ba.value == word("g", inv) - word("C", inv));
  CHECK(convert_basis({"S", NcPoly::identity()}, Presentation::R).value == NcPoly::identity());

  for (unsigned w = 0; w <= 10; ++w) {
    for (const auto& x : enumerate_irreducible(S(), w)) {
      auto r = convert_basis({"S", NcPoly(x)}, Presentation::R);
      CHECK(convert_basis(r, Presentation::S).value == NcPoly(x));
    }
    for (const auto& x : enumerate_irreducible(R(), w)) {
      auto s = convert_basis({"R", NcPoly(x)}, Presentation::S);
      CHECK(convert_basis(s, Presentation::R).value == NcPoly(x));
    }
  }
}

TEST_CASE("telescoping products") {
  const NcPoly ba = word("BA");
  const NcPoly g = NcPoly(Letter::Gamma);
  for (unsigned n = 0; n <= 10; ++n) {
    const long nl = n;
    NcPoly anbn = pow_word(Letter::A, n) * pow_word(Letter::B, n);
    NcPoly lhs17 = anbn * (QRat::q_pow(nl + 1) * ba + qn(nl + 1) * g);
    CHECK(nf(lhs17, Presentation::S) == nf(pow_word(Letter::A, n + 1) * pow_word(Letter::B, n + 1), Presentation::S));
    NcPoly bnan = pow_word(Letter::B, n) * pow_word(Letter::A, n);
    NcPoly lhs18 = bnan * (ba - qn(nl) * g);
    CHECK(nf(lhs18, Presentation::S) ==
          nf(QRat::q_pow(nl) * pow_word(Letter::B, n + 1) * pow_word(Letter::A, n + 1), Presentation::S));
  }
}

TEST_CASE("defining relations") {
  CHECK(normalize(word("AB") - word("BA") - word("C"), R()).value.is_zero());
  CHECK(normalize(QRat(QPoly{1, -1}) * word("BA") - word("g") + word("C"), R()).value.is_zero());
  NcPoly cent = word("AB") - word("BA", QRat::q());
  NcPoly a = NcPoly(Letter::A), b = NcPoly(Letter::B);
  CHECK(normalize(a * cent - cent * a, S()).value.is_zero());
  CHECK(normalize(b * cent - cent * b, S()).value.is_zero());
  CHECK(normalize(substitute_commutator(word("AC") - word("CA", QRat::q())), S()).value.is_zero());
}
