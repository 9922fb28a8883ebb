#include "rq/identities.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

#include "rq/qcombinatorics.hpp"
#include "rq/rqalg.hpp"

namespace rq {

namespace {

constexpr Letter A = Letter::A;
constexpr Letter B = Letter::B;
constexpr Letter C = Letter::C;
constexpr Letter G = Letter::Gamma;

NcPoly w(std::initializer_list<std::pair<Letter, long>> parts) {
  Word out;
  for (const auto& [l, e] : parts) {
    if (e < 0) throw std::invalid_argument("negative exponent in identity builder");
    out *= Word::power(l, static_cast<unsigned>(e));
  }
  return NcPoly(out);
}

NcPoly pw(Letter l, long e) { return w({{l, e}}); }

QRat qn(long n) { return QRat(q_number(n)); }
QRat qp(long k) { return QRat::q_pow(k); }
QRat qbin(long n, long k) { return QRat(q_binomial(n, k)); }
QRat omq(long k) { return QRat(QPoly{1, -1}).pow(k); }
/// 1 - q^k
QRat one_minus_qp(long k) { return QRat(1) - qp(k); }
QRat sgn(long i) { return QRat(i % 2 == 0 ? 1 : -1); }
/// {n}_{q^k}
QRat qn_at(long n, long k) { return QRat(q_number_at_power(n, static_cast<unsigned>(k))); }

NcPoly beta(long h, long n) { return qn(n + 1) * w({{G, h}, {C, n + 1}}) - qn(n) * w({{G, h + 1}, {C, n}}); }

NcPoly a() { return NcPoly(A); }
NcPoly b() { return NcPoly(B); }
NcPoly c() { return NcPoly(C); }
NcPoly g() { return NcPoly(G); }

using Build = std::function<IdentitySides(const Params&)>;

IdentityReading stated(Build f) { return {"stated", "", std::move(f)}; }

std::vector<IdentityEntry> build_catalog() {
  std::vector<IdentityEntry> cat;
  auto add = [&](std::string id, std::string statement, std::vector<ParamSpec> params,
                 std::vector<IdentityReading> readings, bool check_s = false,
                 std::function<bool(const Params&)> admissible = {}) {
    cat.push_back({std::move(id), std::move(statement), std::move(params), std::move(admissible), std::move(readings),
                   check_s});
  };

  // -- reordering in A, B, gamma ------------------------------------------
  add("power-a-times-b", "A^n B = {n} g A^(n-1) + q^n B A^n", {{"n", 0, 30, 64}},
      {stated([](const Params& p) {
        const long n = p.at("n");
        NcPoly rhs = qp(n) * w({{B, 1}, {A, n}});
        if (n >= 1) rhs += qn(n) * w({{G, 1}, {A, n - 1}});
        return IdentitySides{w({{A, n}, {B, 1}}), rhs};
      })},
      true);
  add("a-times-power-b", "A B^n = {n} g B^(n-1) + q^n B^n A", {{"n", 0, 30, 64}},
      {stated([](const Params& p) {
        const long n = p.at("n");
        NcPoly rhs = qp(n) * w({{B, n}, {A, 1}});
        if (n >= 1) rhs += qn(n) * w({{G, 1}, {B, n - 1}});
        return IdentitySides{w({{A, 1}, {B, n}}), rhs};
      })},
      true);
  add("product-step-ab", "A^n B^n (q^(n+1) B A + {n+1} g) = A^(n+1) B^(n+1)", {{"n", 0, 10, 16}},
      {stated([](const Params& p) {
        const long n = p.at("n");
        return IdentitySides{w({{A, n}, {B, n}}) * (qp(n + 1) * w({{B, 1}, {A, 1}}) + qn(n + 1) * g()),
                             w({{A, n + 1}, {B, n + 1}})};
      })},
      true);
  add("product-step-ba", "B^n A^n (B A - {n} g) = q^n B^(n+1) A^(n+1)", {{"n", 0, 10, 16}},
      {stated([](const Params& p) {
        const long n = p.at("n");
        return IdentitySides{w({{B, n}, {A, n}}) * (w({{B, 1}, {A, 1}}) - qn(n) * g()),
                             qp(n) * w({{B, n + 1}, {A, n + 1}})};
      })},
      true);
  add("a-times-power-b-solved", "A B^n - {n} g B^(n-1) = q^n B^n A", {{"n", 1, 10, 64}},
      {stated([](const Params& p) {
        const long n = p.at("n");
        return IdentitySides{w({{A, 1}, {B, n}}) - qn(n) * w({{G, 1}, {B, n - 1}}), qp(n) * w({{B, n}, {A, 1}})};
      })},
      true);
  add("product-ab-factored", "A^n B^n = prod_{i=1..n} (q^i B A + {i} g)", {{"n", 0, 10, 16}},
      {stated([](const Params& p) {
        const long n = p.at("n");
        NcPoly rhs = NcPoly::identity();
        for (long i = 1; i <= n; ++i) rhs = rhs * (qp(i) * w({{B, 1}, {A, 1}}) + qn(i) * g());
        return IdentitySides{w({{A, n}, {B, n}}), rhs};
      })},
      true);
  add("product-ba-factored", "q^C(n,2) B^n A^n = prod_{j=0..n-1} (B A - {j} g)", {{"n", 0, 10, 16}},
      {stated([](const Params& p) {
        const long n = p.at("n");
        NcPoly rhs = NcPoly::identity();
        for (long j = 0; j < n; ++j) rhs = rhs * (w({{B, 1}, {A, 1}}) - qn(j) * g());
        return IdentitySides{qp(choose2(n)) * w({{B, n}, {A, n}}), rhs};
      })},
      true);

  // -- the commutator C ------------------------------------------------------
  add("c-is-commutator", "C = A B - B A", {},
      {stated([](const Params&) { return IdentitySides{c(), lie_bracket(a(), b())}; })});
  add("power-a-commutes-c", "A^k C = q^k C A^k", {{"k", 0, 10, 64}},
      {stated([](const Params& p) {
        const long k = p.at("k");
        return IdentitySides{w({{A, k}, {C, 1}}), qp(k) * w({{C, 1}, {A, k}})};
      })});
  add("c-commutes-power-b", "C B^k = q^k B^k C", {{"k", 0, 10, 64}},
      {stated([](const Params& p) {
        const long k = p.at("k");
        return IdentitySides{w({{C, 1}, {B, k}}), qp(k) * w({{B, k}, {C, 1}})};
      })});
  add("power-a-commutes-power-c", "A^k C^n = q^(kn) C^n A^k", {{"k", 0, 10, 64}, {"n", 0, 10, 64}},
      {stated([](const Params& p) {
        const long k = p.at("k"), n = p.at("n");
        return IdentitySides{w({{A, k}, {C, n}}), qp(k * n) * w({{C, n}, {A, k}})};
      })});
  add("power-c-commutes-power-b", "C^n B^k = q^(kn) B^k C^n", {{"k", 0, 10, 64}, {"n", 0, 10, 64}},
      {stated([](const Params& p) {
        const long k = p.at("k"), n = p.at("n");
        return IdentitySides{w({{C, n}, {B, k}}), qp(k * n) * w({{B, k}, {C, n}})};
      })});
  add("ab-via-c", "A B = C + B A", {},
      {stated([](const Params&) { return IdentitySides{w({{A, 1}, {B, 1}}), c() + w({{B, 1}, {A, 1}})}; })});
  add("ba-via-c", "(1-q) B A = g - C", {},
      {stated([](const Params&) { return IdentitySides{omq(1) * w({{B, 1}, {A, 1}}), g() - c()}; })});
  add("product-ab-c-factored", "(1-q)^n A^n B^n = prod_{i=1..n} (g - q^i C)", {{"n", 0, 10, 16}},
      {stated([](const Params& p) {
        const long n = p.at("n");
        NcPoly rhs = NcPoly::identity();
        for (long i = 1; i <= n; ++i) rhs = rhs * (g() - qp(i) * c());
        return IdentitySides{omq(n) * w({{A, n}, {B, n}}), rhs};
      })});
  add("product-ba-c-factored", "q^C(n,2) (1-q)^n B^n A^n = prod_{j=0..n-1} (q^j g - C)", {{"n", 0, 10, 16}},
      {stated([](const Params& p) {
        const long n = p.at("n");
        NcPoly rhs = NcPoly::identity();
        for (long j = 0; j < n; ++j) rhs = rhs * (qp(j) * g() - c());
        return IdentitySides{qp(choose2(n)) * omq(n) * w({{B, n}, {A, n}}), rhs};
      })});
  add("product-ab-binomial", "(1-q)^n A^n B^n = sum_i (-1)^i q^C(i+1,2) [n i] g^(n-i) C^i", {{"n", 0, 10, 16}},
      {stated([](const Params& p) {
        const long n = p.at("n");
        NcPoly rhs;
        for (long i = 0; i <= n; ++i) rhs += sgn(i) * qp(choose2(i + 1)) * qbin(n, i) * w({{G, n - i}, {C, i}});
        return IdentitySides{omq(n) * w({{A, n}, {B, n}}), rhs};
      })});
  add("product-ba-binomial", "q^C(n,2) (1-q)^n B^n A^n = sum_i (-1)^i q^C(n-i,2) [n i] g^(n-i) C^i",
      {{"n", 0, 10, 16}},
      {stated([](const Params& p) {
        const long n = p.at("n");
        NcPoly rhs;
        for (long i = 0; i <= n; ++i) rhs += sgn(i) * qp(choose2(n - i)) * qbin(n, i) * w({{G, n - i}, {C, i}});
        return IdentitySides{qp(choose2(n)) * omq(n) * w({{B, n}, {A, n}}), rhs};
      })});

  // -- ad-power formulas ------------------------------------------------------
  add("ad-a-on-c", "(-ad A)^n (C) = (1-q)^n C A^n", {{"n", 0, 8, 12}},
      {stated([](const Params& p) {
        const long n = p.at("n");
        return IdentitySides{ad_power(a(), -1, n, c()), omq(n) * w({{C, 1}, {A, n}})};
      })});
  add("ad-b-on-c", "(ad B)^n (C) = (1-q)^n B^n C", {{"n", 0, 8, 12}},
      {stated([](const Params& p) {
        const long n = p.at("n");
        return IdentitySides{ad_power(b(), 1, n, c()), omq(n) * w({{B, n}, {C, 1}})};
      })});
  add("ad-c-on-b", "(-ad C)^n (B) = (1-q)^n B C^n", {{"n", 0, 8, 12}},
      {stated([](const Params& p) {
        const long n = p.at("n");
        return IdentitySides{ad_power(c(), -1, n, b()), omq(n) * w({{B, 1}, {C, n}})};
      })});
  add("ad-c-on-a", "(ad C)^n (A) = (1-q)^n C^n A", {{"n", 0, 8, 12}},
      {stated([](const Params& p) {
        const long n = p.at("n");
        return IdentitySides{ad_power(c(), 1, n, a()), omq(n) * w({{C, n}, {A, 1}})};
      })});
  add("ad-c-on-ca", "(ad C)^m (C A^n) = (1-q^n)^m C^(m+1) A^n", {{"m", 0, 6, 10}, {"n", 0, 6, 10}},
      {stated([](const Params& p) {
        const long m = p.at("m"), n = p.at("n");
        return IdentitySides{ad_power(c(), 1, m, w({{C, 1}, {A, n}})), one_minus_qp(n).pow(m) * w({{C, m + 1}, {A, n}})};
      })});
  add("ad-c-on-bc", "(-ad C)^m (B^n C) = (1-q^n)^m B^n C^(m+1)", {{"m", 0, 6, 10}, {"n", 0, 6, 10}},
      {stated([](const Params& p) {
        const long m = p.at("m"), n = p.at("n");
        return IdentitySides{ad_power(c(), -1, m, w({{B, n}, {C, 1}})),
                             one_minus_qp(n).pow(m) * w({{B, n}, {C, m + 1}})};
      })});
  add("ad-b-ad-c-on-a", "q^n (ad B)(ad C)^n (A) = (1-q)^n ({n} g C^n - {n+1} C^(n+1))", {{"n", 0, 8, 12}},
      {stated([](const Params& p) {
        const long n = p.at("n");
        return IdentitySides{qp(n) * lie_bracket(b(), ad_power(c(), 1, n, a())),
                             omq(n) * (qn(n) * w({{G, 1}, {C, n}}) - qn(n + 1) * pw(C, n + 1))};
      })});
  add("ad-a-chain", "q^n (-ad A)^m (ad B)(ad C)^n (A) = (1-q)^(n+m) ({n}^(m+1) g C^n A^m - {n+1}^(m+1) C^(n+1) A^m)",
      {{"m", 0, 5, 8}, {"n", 0, 5, 8}},
      {stated([](const Params& p) {
        const long m = p.at("m"), n = p.at("n");
        NcPoly lhs = qp(n) * ad_power(a(), -1, m, lie_bracket(b(), ad_power(c(), 1, n, a())));
        NcPoly rhs = omq(n + m) * (qn(n).pow(m + 1) * w({{G, 1}, {C, n}, {A, m}}) -
                                   qn(n + 1).pow(m + 1) * w({{C, n + 1}, {A, m}}));
        return IdentitySides{lhs, rhs};
      })});
  {
    auto lhs = [](long m, long n) {
      return qp(n) * ad_power(b(), -1, m, lie_bracket(b(), ad_power(c(), 1, n, a())));
    };
    auto rhs = [](long m, long n) {
      return omq(n + m) * (qn(n + 1).pow(m + 1) * w({{B, m}, {C, n + 1}}) - qn(n).pow(m + 1) * w({{G, 1}, {B, m}, {C, n}}));
    };
    add("ad-b-chain", "q^n (-ad B)^m (ad B)(ad C)^n (A) = (1-q)^(n+m) ({n+1}^(m+1) B^m C^(n+1) - {n}^(m+1) g B^m C^n)",
        {{"m", 0, 5, 8}, {"n", 0, 5, 8}},
        {stated([=](const Params& p) {
           const long m = p.at("m"), n = p.at("n");
           return IdentitySides{lhs(m, n), rhs(m, n)};
         }),
         {"sign-corrected", "right-hand side multiplied by (-1)^(m+1)", [=](const Params& p) {
            const long m = p.at("m"), n = p.at("n");
            return IdentitySides{lhs(m, n), sgn(m + 1) * rhs(m, n)};
          }}});
  }

  // -- reordering gamma^h C^n A^m B^l ----------------------------------------
  add("reorder-cab-short-a",
      "(1-q)^m g^h C^n A^m B^l = sum_i (-1)^i q^(C(i+1,2)+(l-m)(n+i)) [m i] g^(h+m-i) B^(l-m) C^(n+i), m < l",
      {{"h", 0, 2, 8}, {"n", 1, 4, 8}, {"m", 1, 4, 8}, {"l", 1, 4, 8}},
      {stated([](const Params& p) {
        const long h = p.at("h"), n = p.at("n"), m = p.at("m"), l = p.at("l");
        NcPoly rhs;
        for (long i = 0; i <= m; ++i)
          rhs += sgn(i) * qp(choose2(i + 1) + (l - m) * (n + i)) * qbin(m, i) * w({{G, h + m - i}, {B, l - m}, {C, n + i}});
        return IdentitySides{omq(m) * w({{G, h}, {C, n}, {A, m}, {B, l}}), rhs};
      })},
      false, [](const Params& p) { return p.at("m") < p.at("l"); });
  add("reorder-cab-long-a",
      "(1-q)^l g^h C^n A^m B^l = sum_i (-1)^i q^(C(i+1,2)+i(m-l)) [l i] g^(h+l-i) C^(n+i) A^(m-l), m > l",
      {{"h", 0, 2, 8}, {"n", 1, 4, 8}, {"m", 1, 4, 8}, {"l", 1, 4, 8}},
      {stated([](const Params& p) {
        const long h = p.at("h"), n = p.at("n"), m = p.at("m"), l = p.at("l");
        NcPoly rhs;
        for (long i = 0; i <= l; ++i)
          rhs += sgn(i) * qp(choose2(i + 1) + i * (m - l)) * qbin(l, i) * w({{G, h + l - i}, {C, n + i}, {A, m - l}});
        return IdentitySides{omq(l) * w({{G, h}, {C, n}, {A, m}, {B, l}}), rhs};
      })},
      false, [](const Params& p) { return p.at("m") > p.at("l"); });

  // -- brackets of gamma^k B^m C^n with gamma^j C^h A^m ------------------------
  const std::vector<ParamSpec> mixed = {{"m", 1, 4, 6}, {"n", 1, 4, 6}, {"h", 1, 4, 6}, {"j", 0, 2, 4}, {"k", 0, 2, 4}};
  auto mixed_lhs = [](long m, long n, long h, long j, long k) {
    return omq(m - 1) * qp(choose2(m) + m * (n + h)) *
           lie_bracket(w({{G, k}, {B, m}, {C, n}}), w({{G, j}, {C, h}, {A, m}}));
  };
  add("bracket-bc-ca-sum",
      "(1-q)^(m-1) q^(C(m,2)+m(n+h)) [g^k B^m C^n, g^j C^h A^m] = "
      "sum_i (-1)^i q^C(m-i,2) {mn+mh+im} [m i] g^(m-i+j+k) C^(i+h+n)",
      mixed, {stated([=](const Params& p) {
        const long m = p.at("m"), n = p.at("n"), h = p.at("h"), j = p.at("j"), k = p.at("k");
        NcPoly rhs;
        for (long i = 0; i <= m; ++i)
          rhs += sgn(i) * qp(choose2(m - i)) * qn(m * n + m * h + i * m) * qbin(m, i) *
                 w({{G, m - i + j + k}, {C, i + h + n}});
        return IdentitySides{mixed_lhs(m, n, h, j, k), rhs};
      })});
  {
    // psi_t in the stated form: gamma exponent j+k for every t.
    auto psi_flat = [](long t, long n, long h, long j, long k) {
      return qn(t + h + n) * w({{G, j + k}, {C, t + h + n}}) - qn(t - 1 + h + n) * w({{G, 1 + j + k}, {C, t - 1 + h + n}});
    };
    // psi_t with gamma exponent m-t+j+k, t >= 1.
    auto psi_graded = [](long t, long m, long n, long h, long j, long k) {
      return qn(t + h + n) * w({{G, m - t + j + k}, {C, t + h + n}}) -
             qn(t + h + n - 1) * w({{G, m - t + j + k + 1}, {C, t + h + n - 1}});
    };
    auto sum_with = [](long m, long n, long h, const std::function<NcPoly(long)>& psi) {
      NcPoly out;
      for (long i = 0; i <= m; ++i) {
        NcPoly inner;
        for (long t = 0; t <= i; ++t) inner += psi(t);
        out += sgn(i) * qp(choose2(m - i)) * qn_at(m, n + h + i) * qbin(m, i) * inner;
      }
      return out;
    };
    auto reading = [=](std::string name, std::string note, std::function<NcPoly(long, long, long, long, long, long)> psi) {
      return IdentityReading{std::move(name), std::move(note), [=](const Params& p) {
                               const long m = p.at("m"), n = p.at("n"), h = p.at("h"), j = p.at("j"), k = p.at("k");
                               return IdentitySides{mixed_lhs(m, n, h, j, k),
                                                    sum_with(m, n, h, [&](long t) { return psi(t, m, n, h, j, k); })};
                             }};
    };
    add("bracket-bc-ca-telescoped",
        "(1-q)^(m-1) q^(C(m,2)+m(n+h)) [g^k B^m C^n, g^j C^h A^m] = "
        "sum_i (-1)^i q^C(m-i,2) {m}_(q^(n+h+i)) [m i] sum_{t=0..i} psi_t",
        mixed,
        {reading("stated", "psi_t = {t+h+n} g^(j+k) C^(t+h+n) - {t-1+h+n} g^(1+j+k) C^(t-1+h+n) for all t",
                 [=](long t, long, long n, long h, long j, long k) { return psi_flat(t, n, h, j, k); }),
         reading("psi0-flat", "psi_0 in the flat form above, psi_t (t >= 1) with g^(m-t+j+k)",
                 [=](long t, long m, long n, long h, long j, long k) {
                   return t == 0 ? psi_flat(0, n, h, j, k) : psi_graded(t, m, n, h, j, k);
                 }),
         reading("psi0-base", "psi_0 = {h+n} g^(m+j+k) C^(h+n), psi_t (t >= 1) with g^(m-t+j+k)",
                 [=](long t, long m, long n, long h, long j, long k) {
                   return t == 0 ? qn(h + n) * w({{G, m + j + k}, {C, h + n}}) : psi_graded(t, m, n, h, j, k);
                 }),
         reading("psi0-zero", "psi_0 = 0, psi_t (t >= 1) with g^(m-t+j+k)",
                 [=](long t, long m, long n, long h, long j, long k) {
                   return t == 0 ? NcPoly() : psi_graded(t, m, n, h, j, k);
                 })});
  }
  add("q-binomial-vanishing", "sum_i (-1)^i q^C(m-i,2) (q^(n+h+i))^r [m i] = 0 for m > r",
      {{"m", 1, 10, 16}, {"r", 0, 9, 15}, {"n", 1, 5, 8}, {"h", 1, 5, 8}},
      {stated([](const Params& p) {
        const long m = p.at("m"), r = p.at("r"), n = p.at("n"), h = p.at("h");
        QRat s;
        for (long i = 0; i <= m; ++i) s += sgn(i) * qp(choose2(m - i)) * qp((n + h + i) * r) * qbin(m, i);
        return IdentitySides{NcPoly(s), NcPoly()};
      })},
      false, [](const Params& p) { return p.at("m") > p.at("r") && p.at("n") + p.at("h") <= 6; });

  // -- bracket table ------------------------------------------------------------
  add("bracket-b-a", "[B, A] = -C", {}, {stated([](const Params&) { return IdentitySides{lie_bracket(b(), a()), -c()}; })});
  add("bracket-c-a", "[C, A] = (1-q) C A", {},
      {stated([](const Params&) { return IdentitySides{lie_bracket(c(), a()), omq(1) * w({{C, 1}, {A, 1}})}; })});
  add("bracket-c-b", "[C, B] = (q-1) B C", {},
      {stated([](const Params&) { return IdentitySides{lie_bracket(c(), b()), -omq(1) * w({{B, 1}, {C, 1}})}; })});
  add("beta-bridge", "q^n [g^h C^n A, B] = {n+1} g^h C^(n+1) - {n} g^(h+1) C^n", {{"h", 0, 5, 8}, {"n", 1, 5, 8}},
      {stated([](const Params& p) {
        const long h = p.at("h"), n = p.at("n");
        return IdentitySides{qp(n) * lie_bracket(w({{G, h}, {C, n}, {A, 1}}), b()), beta(h, n)};
      })});
  const std::vector<ParamSpec> hln = {{"h", 0, 3, 6}, {"l", 1, 3, 6}, {"n", 1, 3, 6}};
  add("bracket-bc-a", "q^n [g^h B^l C^n, A] = {n} g^(h+1) B^(l-1) C^n - {n+l} g^h B^(l-1) C^(n+1)", hln,
      {stated([](const Params& p) {
        const long h = p.at("h"), l = p.at("l"), n = p.at("n");
        return IdentitySides{qp(n) * lie_bracket(w({{G, h}, {B, l}, {C, n}}), a()),
                             qn(n) * w({{G, h + 1}, {B, l - 1}, {C, n}}) - qn(n + l) * w({{G, h}, {B, l - 1}, {C, n + 1}})};
      })});
  add("bracket-bc-b", "[g^h B^l C^n, B] = (q^n-1) g^h B^(l+1) C^n", hln,
      {stated([](const Params& p) {
        const long h = p.at("h"), l = p.at("l"), n = p.at("n");
        return IdentitySides{lie_bracket(w({{G, h}, {B, l}, {C, n}}), b()), -one_minus_qp(n) * w({{G, h}, {B, l + 1}, {C, n}})};
      })});
  add("bracket-bc-c", "[g^h B^l C^n, C] = (1-q^l) g^h B^l C^(n+1)", hln,
      {stated([](const Params& p) {
        const long h = p.at("h"), l = p.at("l"), n = p.at("n");
        return IdentitySides{lie_bracket(w({{G, h}, {B, l}, {C, n}}), c()), one_minus_qp(l) * w({{G, h}, {B, l}, {C, n + 1}})};
      })});
  add("bracket-ca-ca", "[g^h C^n A^m, g^j C^h A^l] = (q^(mh)-q^(ln)) g^(h+j) C^(n+h) A^(m+l)",
      {{"h", 0, 3, 6}, {"n", 1, 3, 6}, {"m", 1, 3, 6}, {"j", 0, 3, 6}, {"l", 1, 3, 6}},
      {stated([](const Params& p) {
        const long h = p.at("h"), n = p.at("n"), m = p.at("m"), j = p.at("j"), l = p.at("l");
        return IdentitySides{lie_bracket(w({{G, h}, {C, n}, {A, m}}), w({{G, j}, {C, h}, {A, l}})),
                             (qp(m * h) - qp(l * n)) * w({{G, h + j}, {C, n + h}, {A, m + l}})};
      })});
  {
    auto lhs = [](const Params& p) {
      const long h = p.at("h"), l = p.at("l"), n = p.at("n"), j = p.at("j"), m = p.at("m");
      return lie_bracket(w({{G, h}, {B, l}, {C, n}}), w({{G, j}, {B, m}, {C, h}}));
    };
    auto word = [](const Params& p) {
      return w({{G, p.at("h") + p.at("j")}, {B, p.at("l") + p.at("m")}, {C, p.at("h") + p.at("n")}});
    };
    add("bracket-bc-bc", "[g^h B^l C^n, g^j B^m C^h] = (q^(2mn)-q^(2lh)) g^(h+j) B^(l+m) C^(h+n)",
        {{"h", 0, 3, 6}, {"l", 1, 3, 6}, {"n", 1, 3, 6}, {"j", 0, 3, 6}, {"m", 1, 3, 6}},
        {stated([=](const Params& p) {
           const long m = p.at("m"), n = p.at("n"), l = p.at("l"), h = p.at("h");
           return IdentitySides{lhs(p), (qp(2 * m * n) - qp(2 * l * h)) * word(p)};
         }),
         {"halved-exponents", "coefficient q^(mn) - q^(lh)", [=](const Params& p) {
            const long m = p.at("m"), n = p.at("n"), l = p.at("l"), h = p.at("h");
            return IdentitySides{lhs(p), (qp(m * n) - qp(l * h)) * word(p)};
          }}});
  }
  add("bracket-ca-bc",
      "q^(l(k+n)) [g^h C^n A^m, g^j B^l C^k] = q^(ln+km) g^(h+j) C^(n+k) A^m B^l - g^(h+j) C^(k+n) B^l A^m",
      {{"h", 0, 3, 6}, {"n", 1, 3, 6}, {"m", 1, 3, 6}, {"j", 0, 3, 6}, {"l", 1, 3, 6}, {"k", 1, 3, 6}},
      {stated([](const Params& p) {
        const long h = p.at("h"), n = p.at("n"), m = p.at("m"), j = p.at("j"), l = p.at("l"), k = p.at("k");
        return IdentitySides{qp(l * (k + n)) * lie_bracket(w({{G, h}, {C, n}, {A, m}}), w({{G, j}, {B, l}, {C, k}})),
                             qp(l * n + k * m) * w({{G, h + j}, {C, n + k}, {A, m}, {B, l}}) -
                                 w({{G, h + j}, {C, k + n}, {B, l}, {A, m}})};
      })});
  const std::vector<ParamSpec> hn = {{"h", 0, 3, 6}, {"n", 1, 3, 6}};
  add("bracket-beta-a", "[Beta(h,n), A] = (1-q^(n+1)) {n+1} g^h C^(n+1) A - (1-q^n) {n} g^(h+1) C^n A", hn,
      {stated([](const Params& p) {
        const long h = p.at("h"), n = p.at("n");
        return IdentitySides{lie_bracket(beta(h, n), a()),
                             one_minus_qp(n + 1) * qn(n + 1) * w({{G, h}, {C, n + 1}, {A, 1}}) -
                                 one_minus_qp(n) * qn(n) * w({{G, h + 1}, {C, n}, {A, 1}})};
      })});
  add("bracket-beta-b", "[Beta(h,n), B] = (q^(n+1)-1) {n+1} g^h B C^(n+1) - (q^n-1) {n} g^(h+1) B C^n", hn,
      {stated([](const Params& p) {
        const long h = p.at("h"), n = p.at("n");
        return IdentitySides{lie_bracket(beta(h, n), b()),
                             -one_minus_qp(n + 1) * qn(n + 1) * w({{G, h}, {B, 1}, {C, n + 1}}) +
                                 one_minus_qp(n) * qn(n) * w({{G, h + 1}, {B, 1}, {C, n}})};
      })});
  add("bracket-beta-c", "[Beta(h,n), C] = 0", hn,
      {stated([](const Params& p) { return IdentitySides{lie_bracket(beta(p.at("h"), p.at("n")), c()), NcPoly()}; })});
  add("bracket-beta-beta", "[Beta(h,n), Beta(j,m)] = 0", {{"h", 0, 3, 6}, {"n", 1, 3, 6}, {"j", 0, 3, 6}, {"m", 1, 3, 6}},
      {stated([](const Params& p) {
        return IdentitySides{lie_bracket(beta(p.at("h"), p.at("n")), beta(p.at("j"), p.at("m"))), NcPoly()};
      })});
  add("bracket-ca-beta",
      "[g^h C^n A^m, Beta(k,n)] = (1-q^(mn)) {n} g^(h+k+1) C^(2n) A^m - (1-q^(m(n+1))) {n+1} g^(h+k) C^(2n+1) A^m",
      {{"h", 0, 3, 6}, {"n", 1, 3, 6}, {"m", 1, 3, 6}, {"k", 0, 3, 6}},
      {stated([](const Params& p) {
        const long h = p.at("h"), n = p.at("n"), m = p.at("m"), k = p.at("k");
        return IdentitySides{lie_bracket(w({{G, h}, {C, n}, {A, m}}), beta(k, n)),
                             one_minus_qp(m * n) * qn(n) * w({{G, h + k + 1}, {C, 2 * n}, {A, m}}) -
                                 one_minus_qp(m * (n + 1)) * qn(n + 1) * w({{G, h + k}, {C, 2 * n + 1}, {A, m}})};
      })});
  {
    auto build = [](const Params& p, bool corrected) {
      const long h = p.at("h"), l = p.at("l"), n = p.at("n"), j = p.at("j"), m = p.at("m");
      const long tail = corrected ? n + m : m + 1;
      return IdentitySides{lie_bracket(w({{G, h}, {B, l}, {C, n}}), beta(j, m)),
                           one_minus_qp(l * (m + 1)) * qn(m + 1) * w({{G, j + h}, {B, l}, {C, n + m + 1}}) -
                               one_minus_qp(l * m) * qn(m) * w({{G, j + 1 + h}, {B, l}, {C, tail}})};
    };
    add("bracket-bc-beta",
        "[g^h B^l C^n, Beta(j,m)] = (1-q^(l(m+1))) {m+1} g^(j+h) B^l C^(n+m+1) - (1-q^(lm)) {m} g^(j+1+h) B^l C^(m+1)",
        {{"h", 0, 3, 6}, {"l", 1, 3, 6}, {"n", 1, 3, 6}, {"j", 0, 3, 6}, {"m", 1, 3, 6}},
        {stated([=](const Params& p) { return build(p, false); }),
         {"c-exponent-n+m", "last term with C^(n+m)", [=](const Params& p) { return build(p, true); }}});
  }
  const std::vector<ParamSpec> knm = {{"k", 0, 3, 6}, {"n", 1, 3, 6}, {"m", 1, 3, 6}};
  add("bracket-ca-a", "[g^k C^n A^m, A] = (1-q^n) g^k C^n A^(m+1)", knm,
      {stated([](const Params& p) {
        const long k = p.at("k"), n = p.at("n"), m = p.at("m");
        return IdentitySides{lie_bracket(w({{G, k}, {C, n}, {A, m}}), a()), one_minus_qp(n) * w({{G, k}, {C, n}, {A, m + 1}})};
      })});
  add("bracket-ca-b", "(1-q) q^n [g^k C^n A^(m+1), B] = (1-q) {n+m+1} g^k C^(n+1) A^m - (1-q) {n} g^(k+1) C^n A^m",
      {{"k", 0, 3, 6}, {"n", 1, 3, 6}, {"m", 0, 3, 6}},
      {stated([](const Params& p) {
        const long k = p.at("k"), n = p.at("n"), m = p.at("m");
        return IdentitySides{omq(1) * qp(n) * lie_bracket(w({{G, k}, {C, n}, {A, m + 1}}), b()),
                             omq(1) * qn(n + m + 1) * w({{G, k}, {C, n + 1}, {A, m}}) -
                                 omq(1) * qn(n) * w({{G, k + 1}, {C, n}, {A, m}})};
      })});
  add("bracket-ca-c", "[g^k C^n A^m, C] = (q^m-1) g^k C^(n+1) A^m", knm,
      {stated([](const Params& p) {
        const long k = p.at("k"), n = p.at("n"), m = p.at("m");
        return IdentitySides{lie_bracket(w({{G, k}, {C, n}, {A, m}}), c()), -one_minus_qp(m) * w({{G, k}, {C, n + 1}, {A, m}})};
      })});
  return cat;
}

void check_params(const IdentityEntry& e, const Params& p) {
  for (const auto& spec : e.params) {
    auto it = p.find(spec.name);
    if (it == p.end()) throw std::invalid_argument(e.id + ": missing parameter '" + spec.name + "'");
    if (it->second < spec.lo || it->second > spec.limit) {
      throw std::invalid_argument(e.id + ": parameter " + spec.name + "=" + std::to_string(it->second) +
                                  " outside [" + std::to_string(spec.lo) + ", " + std::to_string(spec.limit) + "]");
    }
  }
  for (const auto& [name, v] : p) {
    bool known = false;
    for (const auto& spec : e.params) known |= spec.name == name;
    if (!known) throw std::invalid_argument(e.id + ": unknown parameter '" + name + "'");
  }
  if (e.admissible && !e.admissible(p)) {
    throw std::invalid_argument(e.id + ": parameters " + params_to_string(e, p) + " do not satisfy the side condition");
  }
}

}  // namespace

const std::vector<IdentityEntry>& identity_catalog() {
  static const std::vector<IdentityEntry> cat = build_catalog();
  return cat;
}

const IdentityEntry& find_identity(std::string_view id) {
  for (const auto& e : identity_catalog())
    if (e.id == id) return e;
  throw std::invalid_argument("unknown identity '" + std::string(id) + "'");
}

std::vector<IdentitySides> identity_sides(const IdentityEntry& entry, const Params& params) {
  check_params(entry, params);
  std::vector<IdentitySides> out;
  for (const auto& r : entry.readings) out.push_back(r.build(params));
  return out;
}

IdentityVerdict verify_identity(std::string_view id, const Params& params) {
  const IdentityEntry& e = find_identity(id);
  const auto sides = identity_sides(e, params);
  IdentityVerdict v;
  v.id = e.id;
  v.params = params;
  Normalizer& r = normalizer(Presentation::R);
  for (std::size_t i = 0; i < sides.size(); ++i) {
    const auto& s = sides[i];
    ReadingResult res;
    res.name = e.readings[i].name;
    res.lhs_normal = r.normalize(s.lhs);
    res.rhs_normal = r.normalize(s.rhs);
    res.holds = res.lhs_normal == res.rhs_normal;
    if (res.holds && e.check_s) {
      Normalizer& sn = normalizer(Presentation::S);
      res.holds = sn.normalize(s.lhs) == sn.normalize(s.rhs);
    }
    if (!s.lhs.is_zero()) v.weight = std::max(v.weight, s.lhs.max_weight());
    if (!s.rhs.is_zero()) v.weight = std::max(v.weight, s.rhs.max_weight());
    if (res.holds && v.reading.empty()) v.reading = res.name;
    v.readings.push_back(std::move(res));
  }
  v.stated_holds = !v.readings.empty() && v.readings.front().holds;
  v.holds = !v.reading.empty();
  return v;
}

std::vector<Params> parameter_sweep(const IdentityEntry& entry, double scale) {
  std::vector<Params> out;
  Params cur;
  std::function<void(std::size_t)> go = [&](std::size_t i) {
    if (i == entry.params.size()) {
      if (!entry.admissible || entry.admissible(cur)) out.push_back(cur);
      return;
    }
    const auto& spec = entry.params[i];
    const long scaled = static_cast<long>(std::floor(static_cast<double>(spec.hi) * scale));
    const long hi = std::max(spec.lo, std::min(scaled, spec.limit));
    for (long v = spec.lo; v <= hi; ++v) {
      cur[spec.name] = v;
      go(i + 1);
    }
  };
  go(0);
  return out;
}

std::string params_to_string(const IdentityEntry& entry, const Params& params) {
  std::ostringstream os;
  bool first = true;
  for (const auto& spec : entry.params) {
    auto it = params.find(spec.name);
    if (it == params.end()) continue;
    if (!first) os << ",";
    os << spec.name << "=" << it->second;
    first = false;
  }
  return os.str();
}

}  // namespace rq
