#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <functional>

#include "rq/rqalg.hpp"
#include "test_support.hpp"

using namespace rq;
using rq::testing::word;

namespace {

const ReductionSystem& S() { return presentation(Presentation::S); }
const ReductionSystem& R() { return presentation(Presentation::R); }

const QRat kInvOneMinusQ = QRat(QPoly{1}, QPoly{1, -1});

// Every word of exactly weight w over the alphabet, no pruning.
std::vector<Word> all_words(const std::vector<Letter>& alphabet, unsigned w) {
  std::vector<Word> out;
  std::function<void(Word, unsigned)> go = [&](Word cur, unsigned left) {
    if (left == 0) {
      out.push_back(cur);
      return;
    }
    for (Letter l : alphabet) {
      if (weight(l) > left) continue;
      Word next = cur;
      next *= l;
      go(next, left - weight(l));
    }
  };
  go(Word(), w);
  return out;
}

std::vector<Word> brute_irreducible(const ReductionSystem& sys, unsigned w) {
  std::vector<Word> out;
  for (auto& x : all_words(sys.alphabet(), w))
    if (is_irreducible(x, sys)) out.push_back(x);
  std::sort(out.begin(), out.end());
  return out;
}

// gamma^h B^m A^n
bool has_s_shape(const Word& w) {
  std::size_t i = 0;
  while (i < w.size() && w[i] == Letter::Gamma) ++i;
  while (i < w.size() && w[i] == Letter::B) ++i;
  while (i < w.size() && w[i] == Letter::A) ++i;
  return i == w.size();
}

// gamma^h C^k B^l or gamma^h C^k A^t
bool has_r_shape(const Word& w) {
  std::size_t i = 0;
  while (i < w.size() && w[i] == Letter::Gamma) ++i;
  while (i < w.size() && w[i] == Letter::C) ++i;
  if (i == w.size()) return true;
  const Letter tail = w[i];
  if (tail != Letter::A && tail != Letter::B) return false;
  while (i < w.size() && w[i] == tail) ++i;
  return i == w.size();
}

}  // namespace

TEST_CASE("normalize examples") {
  CHECK(normalize(word("AB"), S()).value == word("g") + word("BA", QRat::q()));
  CHECK(normalize(word("AAB"), S()).value == word("gA", QRat(QPoly{1, 1})) + word("BAA", QRat::q_pow(2)));
  CHECK(normalize(word("AB"), R()).value == word("g", kInvOneMinusQ) - word("C", kInvOneMinusQ * QRat::q()));
  CHECK(normalize(NcPoly(), R()).value.is_zero());
  CHECK(normalize(NcPoly(5), R()).value == NcPoly(5));
}

TEST_CASE("normalize trace and step count") {
  Trace trace;
  std::size_t steps = 0;
  normalize(word("AAB"), S(), {.trace = &trace, .steps_taken = &steps});
  CHECK(steps == trace.size());
  REQUIRE(!trace.empty());
  CHECK(trace.front().word == Word::parse("AAB"));
  CHECK(trace.front().position == 1);
  CHECK(trace.front().rule == "lambda");
  CHECK_THROWS(normalize(word("AAAABBBB"), S(), {.max_steps = 3}));
}

TEST_CASE("find_ambiguities") {
  auto s = find_ambiguities(S());
  REQUIRE(s.size() == 1);
  CHECK(s[0].kind == Ambiguity::Kind::Overlap);
  CHECK(s[0].witness == Word::parse("ABg"));
  CHECK(s[0].rule_left == "lambda");
  CHECK(s[0].rule_right == "tau");

  auto r = find_ambiguities(R());
  std::vector<std::string> witnesses;
  for (const auto& a : r) {
    CHECK(a.kind == Ambiguity::Kind::Overlap);
    CHECK(a.witness.size() < 4);
    witnesses.push_back(a.witness.compact());
  }
  CHECK(witnesses == std::vector<std::string>{"ABA", "ABC", "ABg", "BAB", "BAC", "BAg", "ACg", "BCg"});

  CHECK(find_ambiguities(ReductionSystem("empty", {})).empty());
}

TEST_CASE("ambiguities of user systems") {
  // ABA overlaps itself on the letter A.
  ReductionSystem self("self", {{"r", Word::parse("ABA"), word("BAA")}});
  auto amb = find_ambiguities(self);
  REQUIRE(amb.size() == 1);
  CHECK(amb[0].witness == Word::parse("ABABA"));
  CHECK(amb[0].middle == Word::parse("A"));

  ReductionSystem incl("incl", {{"long", Word::parse("AAB"), word("ABA")}, {"short", Word::parse("AB"), word("BA")}});
  auto ia = find_ambiguities(incl);
  int inclusions = 0;
  for (const auto& a : ia) {
    if (a.kind != Ambiguity::Kind::Inclusion) continue;
    ++inclusions;
    CHECK(a.rule_left == "long");
    CHECK(a.witness == Word::parse("AAB"));
    CHECK(a.left == Word::parse("A"));
    CHECK(a.middle == Word::parse("AB"));
  }
  CHECK(inclusions == 1);
}

TEST_CASE("reduction system validation") {
  CHECK_THROWS_AS(ReductionSystem("bad", {{"r", Word::parse("BA"), word("AB")}}), std::invalid_argument);
  CHECK_THROWS_AS(ReductionSystem("bad", {{"r", Word::parse("A"), word("B")}}), std::invalid_argument);
  CHECK_THROWS_AS(ReductionSystem("bad", {{"r", Word::parse("AB"), word("A")}}), std::invalid_argument);
  CHECK_THROWS_AS(ReductionSystem("bad", {{"r", Word::parse("AB"), word("BA")}, {"s", Word::parse("AB"), word("g")}}),
                  std::invalid_argument);
}

TEST_CASE("check_resolvable") {
  auto s = find_ambiguities(S());
  CHECK(check_resolvable(s[0], S()).resolvable);

  auto r = find_ambiguities(R());
  auto first = check_resolvable(r[0], R());
  CHECK(first.resolvable);
  CHECK(first.left_normal == kInvOneMinusQ * (word("gA") - word("CA", QRat::q())));
  for (const auto& a : r) {
    auto res = check_resolvable(a, R());
    CHECK_MESSAGE(res.resolvable, a.witness.compact());
    CHECK(!(res.left_trace.empty() && res.right_trace.empty()));
  }
}

TEST_CASE("non-confluent system is detected") {
  // AB -> BA together with AB ... BA -> g makes ABA ambiguous.
  ReductionSystem sys("nc", {{"x", Word::parse("AB"), word("BA")}, {"y", Word::parse("BA"), word("g")}},
                      {Letter::A, Letter::B, Letter::Gamma});
  bool any_unresolvable = false;
  for (const auto& a : find_ambiguities(sys)) any_unresolvable |= !check_resolvable(a, sys).resolvable;
  CHECK(any_unresolvable);
}

TEST_CASE("is_irreducible") {
  CHECK(is_irreducible(Word::parse("gBBAA"), S()));
  CHECK_FALSE(is_irreducible(Word::parse("AABg"), S()));
  CHECK(is_irreducible(Word(), S()));
  CHECK(is_irreducible(Word(), R()));
  CHECK(is_irreducible(Word::parse("gCCA"), R()));
  CHECK_FALSE(is_irreducible(Word::parse("CB"), S()) == false);
}

TEST_CASE("enumerate_irreducible") {
  auto s2 = enumerate_irreducible(S(), 2);
  std::vector<std::string> s2c;
  for (auto& w : s2) s2c.push_back(w.compact());
  std::sort(s2c.begin(), s2c.end());
  CHECK(s2c == std::vector<std::string>{"AA", "BA", "BB", "g"});

  auto r2 = enumerate_irreducible(R(), 2);
  std::vector<std::string> r2c;
  for (auto& w : r2) r2c.push_back(w.compact());
  std::sort(r2c.begin(), r2c.end());
  CHECK(r2c == std::vector<std::string>{"AA", "BB", "C", "g"});

  CHECK(enumerate_irreducible(S(), 0) == std::vector<Word>{Word()});
  CHECK_THROWS_AS(enumerate_irreducible(R(), 25), std::out_of_range);

  for (unsigned w = 0; w <= 8; ++w) {
    CHECK(enumerate_irreducible(S(), w) == brute_irreducible(S(), w));
    CHECK(enumerate_irreducible(R(), w) == brute_irreducible(R(), w));
  }
}

TEST_CASE("irreducible words have the basis shapes (weight <= 10)") {
  for (unsigned w = 0; w <= 10; ++w) {
    for (const auto& x : all_words(S().alphabet(), w)) CHECK(is_irreducible(x, S()) == has_s_shape(x));
    for (const auto& x : all_words(R().alphabet(), w)) CHECK(is_irreducible(x, R()) == has_r_shape(x));
  }
}

TEST_CASE("basis counts of S and R agree per weight") {
  for (unsigned w = 0; w <= 12; ++w) {
    INFO("weight " << w);
    CHECK(enumerate_irreducible(S(), w).size() == enumerate_irreducible(R(), w).size());
  }
  CHECK(enumerate_irreducible(S(), 2).size() == 4);
}

TEST_CASE("normalize properties on random inputs") {
  std::mt19937 rng(99);
  for (int i = 0; i < 40; ++i) {
    NcPoly x = rq::testing::random_poly(rng, 6, 3);
    NcPoly y = rq::testing::random_poly(rng, 6, 3);
    for (const ReductionSystem* sys : {&S(), &R()}) {
      NcPoly nx = normalize(x, *sys).value;
      CHECK(normalize(nx, *sys).value == nx);
      for (const auto& [w, c] : nx.terms()) CHECK(is_irreducible(w, *sys));
      CHECK(normalize(x * y, *sys).value == normalize(nx * normalize(y, *sys).value, *sys).value);
    }
  }
}

TEST_CASE("termination within the step ceiling up to weight 12") {
  std::mt19937 rng(5);
  for (int i = 0; i < 30; ++i) {
    NcPoly x = NcPoly(rq::testing::random_word(rng, 12));
    std::size_t steps = 0;
    CHECK_NOTHROW(normalize(x, R(), {.max_steps = 100000, .steps_taken = &steps}));
    CHECK(steps <= 100000);
  }
}

TEST_CASE("memoized normalizer agrees with the worklist strategy") {
  std::mt19937 rng(1234);
  Normalizer norm(R());
  for (int i = 0; i < 40; ++i) {
    NcPoly x = rq::testing::random_poly(rng, 9, 4);
    CHECK(norm.normalize(x) == normalize(x, R()).value);
  }
}

TEST_CASE("memoized normalizer on long structured words") {
  Normalizer s(S());
  Normalizer r(R());
  for (unsigned n = 1; n <= 6; ++n) {
    NcPoly x(Word::power(Letter::A, n) * Word::power(Letter::B, n) * Word::power(Letter::A, 1));
    CHECK(s.normalize(x) == normalize(x, S()).value);
    CHECK(r.normalize(x) == normalize(x, R()).value);
    NcPoly y(Word::parse("BAgAC") * Word::power(Letter::B, n));
    CHECK(r.normalize(y) == normalize(y, R()).value);
  }
  std::mt19937 rng(77);
  for (int i = 0; i < 40; ++i) {
    NcPoly x = rq::testing::random_poly(rng, 9, 4, "ABg");
    CHECK(s.normalize(x) == normalize(x, S()).value);
  }
}
