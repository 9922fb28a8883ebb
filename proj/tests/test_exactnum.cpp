#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "rq/qcombinatorics.hpp"
#include "rq/qrat.hpp"

using namespace rq;

namespace {

// Naive integer-coefficient polynomial product, independent of QPoly.
std::vector<long> naive_mul(const std::vector<long>& a, const std::vector<long>& b) {
  std::vector<long> out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  return out;
}

// Gaussian binomial by subset enumeration: sum over p-subsets S of {0..n-1}
// of q^(sum(S) - p(p-1)/2).
std::vector<long> subset_binomial(int n, int p) {
  std::vector<long> out(static_cast<std::size_t>(p * (n - p) + 1), 0);
  for (unsigned mask = 0; mask < (1U << n); ++mask) {
    if (__builtin_popcount(mask) != p) continue;
    int s = 0;
    for (int i = 0; i < n; ++i)
      if (mask & (1U << i)) s += i;
    out[static_cast<std::size_t>(s - p * (p - 1) / 2)] += 1;
  }
  return out;
}

QPoly from_longs(const std::vector<long>& c) {
  std::vector<Rational> r;
  for (long x : c) r.emplace_back(x);
  return QPoly(std::move(r));
}

QRat random_qrat(std::mt19937& rng) {
  std::uniform_int_distribution<int> deg(0, 3), coef(-4, 4);
  auto poly = [&] {
    std::vector<Rational> c;
    int d = deg(rng);
    for (int i = 0; i <= d; ++i) c.push_back(make_rational(coef(rng), 1 + (rng() % 3)));
    return QPoly(std::move(c));
  };
  QPoly den = poly();
  while (den.is_zero()) den = poly();
  return QRat(poly(), den);
}

}  // namespace

TEST_CASE("q_number") {
  CHECK(q_number(3) == QPoly{1, 1, 1});
  CHECK(q_number(0).is_zero());
  CHECK(q_number(-2).is_zero());
  CHECK(q_number(1) == QPoly(1));
}

TEST_CASE("q_factorial") {
  CHECK(q_factorial(0) == QPoly(1));
  CHECK(q_factorial(1) == QPoly(1));
  auto oracle = naive_mul(naive_mul({1}, {1, 1}), {1, 1, 1});
  CHECK(oracle == std::vector<long>{1, 2, 2, 1});
  CHECK(q_factorial(3) == from_longs(oracle));
  CHECK(q_factorial(-4) == QPoly(1));
}

TEST_CASE("q_binomial") {
  auto oracle = subset_binomial(4, 2);
  CHECK(oracle == std::vector<long>{1, 1, 2, 1, 1});
  CHECK(q_binomial(4, 2) == from_longs(oracle));
  CHECK(q_binomial(3, 5).is_zero());
  CHECK(q_binomial(3, -1).is_zero());
  CHECK(q_binomial(7, 0) == QPoly(1));
  CHECK(q_binomial(7, 7) == QPoly(1));

  SUBCASE("recurrence, factorial quotient and subset count agree") {
    for (int n = 0; n <= 10; ++n) {
      for (int p = 0; p <= n; ++p) {
        INFO("n=" << n << " p=" << p);
        CHECK(q_binomial(n, p) == from_longs(subset_binomial(n, p)));
        CHECK(q_binomial_by_factorials(n, p) == q_binomial(n, p));
      }
    }
  }
}

TEST_CASE("Pascal identity, both forms") {
  for (long n = 0; n <= 12; ++n) {
    for (long p = 0; p <= n; ++p) {
      QPoly mid = q_binomial(n + 1, p);
      CHECK(q_binomial(n, p - 1) + q_binomial(n, p).shifted(static_cast<std::size_t>(p)) == mid);
      CHECK(q_binomial(n, p - 1).shifted(static_cast<std::size_t>(n + 1 - p)) + q_binomial(n, p) == mid);
    }
  }
}

TEST_CASE("q-number identities") {
  const QPoly one_minus_q{1, -1};
  for (long n = 0; n <= 30; ++n) {
    CHECK(one_minus_q * q_number(n) == QPoly(1) - QPoly::monomial(Rational(1), static_cast<std::size_t>(n)));
  }
  for (long n = 0; n <= 20; ++n)
    for (long k = 0; k <= 20; ++k)
      CHECK(q_number(n + k) == q_number(n).shifted(static_cast<std::size_t>(k)) + q_number(k));
  for (long r = 0; r <= 10; ++r)
    for (unsigned n = 0; n <= 10; ++n)
      CHECK(q_number(r * n) == q_number(n) * q_number_at_power(r, n));
}

TEST_CASE("polynomial gcd") {
  const QPoly a = QPoly{1, -1} * QPoly{2, 0, 3} * QPoly::q();
  const QPoly b = QPoly{1, -1} * QPoly{5, 1} * QPoly::q().pow(3);
  CHECK(gcd(a, b) == (QPoly{1, -1} * QPoly::q()).monic());
  CHECK(gcd(QPoly{1, 1}, QPoly{1, -1}) == QPoly(1));
  CHECK(gcd(QPoly(), QPoly{2, 4}) == QPoly{2, 4}.monic());
}

TEST_CASE("QRat canonical form") {
  // (1 - q^2)/(2 - 2q) = (1 + q)/2
  QRat x(QPoly{1, 0, -1}, QPoly{2, -2});
  CHECK(x.den() == QPoly(1));
  CHECK(x.num() == QPoly(std::vector<Rational>{Rational(1, 2), Rational(1, 2)}));
  // same value from a differently scaled, unreduced pair
  QRat y(QPoly{3, 3} * QPoly{7, 1}, QPoly{6} * QPoly{7, 1});
  CHECK(x == y);
  CHECK(QRat(QPoly{0}, QPoly{1, 1}) == QRat());
  CHECK_THROWS_AS(QRat(QPoly{1}, QPoly()), ArithmeticError);
}

TEST_CASE("QRat text form") {
  QRat x(QPoly{1, 1, 0, 2}, QPoly{1, -1});
  CHECK(x.to_string() == "(1 + q + 2*q^3)/(1 - q)");
  CHECK(x.to_string(true) == "(1+q+2*q^3)/(1-q)");
  // (1 + q - 2q^3) has the factor (1 - q)
  CHECK(QRat(QPoly{1, 1, 0, -2}, QPoly{1, -1}).to_string() == "1 + 2*q + 2*q^2");
  CHECK(QRat(QPoly{1}, QPoly{2, -2}).to_string() == "1/(2 - 2*q)");
  CHECK(QRat::q_pow(-2).to_string() == "1/(q^2)");
  CHECK(QRat(-3).to_string() == "-3");
  CHECK(QRat().to_string() == "0");
}

TEST_CASE("QRat field axioms on random samples") {
  std::mt19937 rng(20240917);
  for (int i = 0; i < 200; ++i) {
    QRat a = random_qrat(rng), b = random_qrat(rng), c = random_qrat(rng);
    CHECK(a * (b + c) == a * b + a * c);
    CHECK((a + b) - b == a);
    if (!a.is_zero()) CHECK(a * a.inverse() == QRat(1));
    if (!b.is_zero()) CHECK((a / b) * b == a);
  }
}

TEST_CASE("QRat evaluation") {
  QRat x(QPoly{1}, QPoly{1, -1});
  CHECK(x.eval(Rational(2, 3)) == Rational(3));
  CHECK_THROWS_AS(x.eval(Rational(1)), ArithmeticError);
  CHECK(QRat::q_pow(-1).eval(Rational(2, 3)) == Rational(3, 2));
}
