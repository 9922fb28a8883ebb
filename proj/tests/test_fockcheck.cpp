#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <tuple>

#include "rq/fockcheck.hpp"
#include "rq/identities.hpp"
#include "rq/rqalg.hpp"
#include "test_support.hpp"

using namespace rq;
using rq::testing::word;

namespace {

FockRep default_rep(unsigned n = FockRep::kDefaultDim) {
  return FockRep(n, FockRep::default_q(), FockRep::default_b());
}

// Dense reference: multiply the generator matrices out word by word.
RatMatrix dense_eval(const NcPoly& x, const FockRep& rep) {
  RatMatrix out(rep.dim());
  for (const auto& [w, c] : x.terms()) {
    RatMatrix m = RatMatrix::identity(rep.dim());
    for (std::size_t i = 0; i < w.size(); ++i) m = m * rep.matrix(w[i]);
    const Rational v = c.eval(rep.q());
    for (std::size_t i = 0; i < m.data.size(); ++i) out.data[i] += v * m.data[i];
  }
  return out;
}

}  // namespace

TEST_CASE("generator matrices") {
  FockRep rep(6, Rational(1, 2), Rational(3));
  const RatMatrix& a = rep.matrix(Letter::A);
  const RatMatrix& b = rep.matrix(Letter::B);
  CHECK(a.column_zero(0));
  CHECK(a.at(0, 1) == 3);
  CHECK(a.at(1, 2) == Rational(9, 2));        // 3 (1 + 1/2)
  CHECK(a.at(2, 3) == Rational(21, 4));
  CHECK(b.at(1, 0) == 1);
  CHECK(b.column_zero(5));
  const RatMatrix& c = rep.matrix(Letter::C);
  // diagonal b q^k below the cut, last entry feels the truncation
  for (unsigned k = 0; k + 1 < 6; ++k) {
    Rational qk = 1;
    for (unsigned i = 0; i < k; ++i) qk *= Rational(1, 2);
    CHECK(c.at(k, k) == 3 * qk);
  }
  CHECK(c.at(5, 5) == -Rational(3) * Rational(31, 16));
  CHECK(rep.matrix(Letter::Gamma) == [] {
    RatMatrix g = RatMatrix::identity(6);
    for (auto& v : g.data) v *= 3;
    return g;
  }());
}

TEST_CASE("construction errors") {
  CHECK_THROWS_AS(FockRep(1, Rational(1, 2), Rational(1)), std::invalid_argument);
  CHECK_THROWS_AS(FockRep(4, Rational(1), Rational(1)), std::invalid_argument);
  CHECK_THROWS_AS(FockRep(4, Rational(0), Rational(1)), std::invalid_argument);
  CHECK_NOTHROW(FockRep(2, Rational(-1), Rational(0)));
}

TEST_CASE("defining relation of S on the ladder") {
  FockRep rep(5, Rational(1, 2), Rational(1));
  const NcPoly rel = word("AB") - QRat::q_pow(1) * word("BA") - word("g");
  const RatMatrix m = rep.evaluate(rel);
  for (unsigned c = 0; c < 4; ++c) CHECK(m.column_zero(c));
  CHECK_FALSE(m.column_zero(4));
  CHECK(agree_on_block(rel, NcPoly(), rep));
}

TEST_CASE("simple evaluations") {
  const FockRep rep = default_rep(8);
  CHECK(rep.evaluate(NcPoly::identity()) == RatMatrix::identity(8));
  CHECK(rep.evaluate(NcPoly()).is_zero());
  CHECK(rep.evaluate(word("Ag") - word("gA")).is_zero());
  CHECK(rep.evaluate(word("C") - word("AB") + word("BA")).is_zero());
  CHECK(rep.evaluate(QRat::q_pow(2) * word("g")) == [] {
    RatMatrix g = RatMatrix::identity(8);
    for (auto& v : g.data) v *= Rational(4, 9) * Rational(5, 7);
    return g;
  }());
}

TEST_CASE("monomial evaluation matches dense products") {
  std::mt19937 rng(11);
  const FockRep rep = default_rep(10);
  for (int i = 0; i < 60; ++i) {
    const NcPoly x = rq::testing::random_poly(rng, 7, 4);
    CHECK(rep.evaluate(x) == dense_eval(x, rep));
  }
}

TEST_CASE("agreement examples") {
  const FockRep rep = default_rep(16);
  const NcPoly aab = word("AAB");
  CHECK(agree_on_block(aab, normalizer(Presentation::S).normalize(aab), rep));
  CHECK(agree_on_block(aab, normalizer(Presentation::R).normalize(aab), rep));
  CHECK_FALSE(agree_on_block(word("AB"), word("BA"), rep));
  CHECK(agree_on_block(word("AB"), word("AB"), rep));
  CHECK_FALSE(agree_on_block(word("g"), NcPoly(), rep));
}

TEST_CASE("block too small") {
  const FockRep rep = default_rep(4);
  CHECK_THROWS_AS(agree_on_block(word("AAAA"), NcPoly(), rep), std::invalid_argument);
  CHECK_THROWS_AS(agree_on_block(word("gg"), word("C"), rep), std::invalid_argument);
  CHECK_NOTHROW(agree_on_block(word("AAB"), NcPoly(), rep));
}

TEST_CASE("pole at the chosen q") {
  FockRep rep(4, Rational(2), Rational(1));
  const NcPoly x(Word::parse("A"), QRat(QPoly{1}, QPoly{2, -1}));  // 1/(2-q)
  CHECK_THROWS_AS(rep.evaluate(x), ArithmeticError);
  try {
    rep.evaluate(x);
  } catch (const ArithmeticError& e) {
    CHECK(std::string(e.what()).find("pole") != std::string::npos);
  }
}

TEST_CASE("normal forms agree on the block") {
  std::mt19937 rng(2024);
  const FockRep rep = default_rep();
  for (int i = 0; i < 200; ++i) {
    const NcPoly x = rq::testing::random_poly(rng, 8, 4);
    const NcPoly r = normalizer(Presentation::R).normalize(x);
    REQUIRE(agree_on_block(x, r, rep));
    const NcPoly y = rq::testing::random_poly(rng, 8, 4, "ABg");
    REQUIRE(agree_on_block(y, normalizer(Presentation::S).normalize(y), rep));
  }
}

TEST_CASE("discrimination") {
  std::mt19937 rng(7);
  const FockRep rep = default_rep();
  int separated = 0;
  for (int i = 0; i < 100; ++i) {
    const NcPoly x = rq::testing::random_poly(rng, 8, 3);
    const NcPoly y = rq::testing::random_poly(rng, 8, 3);
    const NcPoly d = normalizer(Presentation::R).normalize(x - y);
    if (d.is_zero()) continue;
    if (!agree_on_block(x, y, rep)) ++separated;
  }
  CHECK(separated >= 95);
  // distinct basis words stay distinct
  CHECK_FALSE(agree_on_block(word("CA"), word("AC"), rep));
  CHECK_FALSE(agree_on_block(word("gB"), word("BB"), rep));
}

TEST_CASE("catalog sides agree") {
  const FockRep rep = default_rep();
  for (const char* id : {"c-is-commutator", "ad-a-on-c", "bracket-b-a", "beta-bridge", "product-ab-binomial"}) {
    const IdentityEntry& e = find_identity(id);
    for (const auto& p : parameter_sweep(e, 0.5)) {
      const auto sides = identity_sides(e, p);
      CHECK_MESSAGE(agree_on_block(sides.front().lhs, sides.front().rhs, rep), id);
    }
  }
}

TEST_CASE("q-commutation invariant") {
  for (const auto& [n, q, b] : {std::tuple{5u, Rational(1, 2), Rational(1)}, std::tuple{12u, Rational(2, 3), Rational(5, 7)},
                                std::tuple{7u, Rational(-3), Rational(-1, 4)}}) {
    const FockRep rep(n, q, b);
    const RatMatrix& a = rep.matrix(Letter::A);
    const RatMatrix& bm = rep.matrix(Letter::B);
    RatMatrix ba = bm * a;
    for (auto& v : ba.data) v *= q;
    const RatMatrix m = a * bm - ba;
    for (unsigned k = 0; k + 1 < n; ++k)
      for (unsigned r = 0; r < n; ++r) CHECK(m.at(r, k) == (r == k ? b : Rational(0)));
  }
}

TEST_CASE("defining relations vanish away from the boundary") {
  const FockRep rep = default_rep(12);
  for (Presentation p : {Presentation::S, Presentation::R}) {
    for (const auto& rule : presentation(p).rules()) {
      const NcPoly lhs(rule.lhs);
      const RatMatrix m = rep.evaluate(lhs - rule.rhs);
      const unsigned d = std::max(lhs.max_weight(), rule.rhs.max_weight());
      for (unsigned c = 0; c + d < rep.dim(); ++c) CHECK_MESSAGE(m.column_zero(c), rule.name);
      if (rule.lhs.count(Letter::Gamma)) {
        CHECK(m.is_zero());
      } else if (rule.lhs.count(Letter::A) && rule.lhs.count(Letter::B)) {
        CHECK_FALSE_MESSAGE(m.column_zero(rep.dim() - 1), rule.name);
      }
    }
  }
}
