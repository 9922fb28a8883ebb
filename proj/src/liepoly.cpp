#include "rq/liepoly.hpp"

#include <mutex>
#include <stdexcept>

#include "rq/qcombinatorics.hpp"

namespace rq {

namespace {

NcPoly gcn(unsigned h, unsigned n, Letter tail, unsigned t, const QRat& c) {
  return NcPoly(Word::powers({{Letter::Gamma, h}, {Letter::C, n}, {tail, t}}), c);
}

long q_degree(const QRat& c) { return c.num().degree() + c.den().degree(); }

void require(bool ok, const std::string& what) {
  if (!ok) throw std::invalid_argument(what);
}

}  // namespace

LieBasisVector LieBasisVector::ca(unsigned h, unsigned n, unsigned m) {
  require(n >= 1 && m >= 1, "CA vector needs n, m >= 1");
  return {Kind::CA, h, m, n};
}

LieBasisVector LieBasisVector::bc(unsigned h, unsigned m, unsigned n) {
  require(n >= 1 && m >= 1, "BC vector needs m, n >= 1");
  return {Kind::BC, h, m, n};
}

LieBasisVector LieBasisVector::beta(unsigned h, unsigned n) {
  require(n >= 1, "Beta vector needs n >= 1");
  return {Kind::Beta, h, 0, n};
}

unsigned LieBasisVector::weight() const {
  switch (kind) {
    case Kind::A:
    case Kind::B: return 1;
    case Kind::C: return 2;
    case Kind::CA:
    case Kind::BC: return 2 * h + 2 * n + m;
    case Kind::Beta: return 2 * h + 2 * n + 2;
  }
  return 0;
}

std::string LieBasisVector::to_string() const {
  auto s = [](unsigned x) { return std::to_string(x); };
  switch (kind) {
    case Kind::A: return "A";
    case Kind::B: return "B";
    case Kind::C: return "C";
    case Kind::CA: return "CA(" + s(h) + "," + s(n) + "," + s(m) + ")";
    case Kind::BC: return "BC(" + s(h) + "," + s(m) + "," + s(n) + ")";
    case Kind::Beta: return "Beta(" + s(h) + "," + s(n) + ")";
  }
  return {};
}

LieBasisVector parse_lie_basis_vector(std::string_view text) {
  if (text == "A") return LieBasisVector::letter_a();
  if (text == "B") return LieBasisVector::letter_b();
  if (text == "C") return LieBasisVector::letter_c();
  const auto open = text.find('(');
  require(open != std::string_view::npos && text.back() == ')', "bad basis vector '" + std::string(text) + "'");
  const std::string_view head = text.substr(0, open);
  std::vector<unsigned> args;
  std::string cur;
  for (char ch : text.substr(open + 1, text.size() - open - 2)) {
    if (ch == ',') {
      args.push_back(static_cast<unsigned>(std::stoul(cur)));
      cur.clear();
    } else {
      cur += ch;
    }
  }
  args.push_back(static_cast<unsigned>(std::stoul(cur)));
  if (head == "CA" && args.size() == 3) return LieBasisVector::ca(args[0], args[1], args[2]);
  if (head == "BC" && args.size() == 3) return LieBasisVector::bc(args[0], args[1], args[2]);
  if (head == "Beta" && args.size() == 2) return LieBasisVector::beta(args[0], args[1]);
  throw std::invalid_argument("bad basis vector '" + std::string(text) + "'");
}

CanonicalElement lie_basis_normal_form(const LieBasisVector& v) {
  using K = LieBasisVector::Kind;
  NcPoly out;
  switch (v.kind) {
    case K::A: out = NcPoly(Letter::A); break;
    case K::B: out = NcPoly(Letter::B); break;
    case K::C: out = NcPoly(Letter::C); break;
    case K::CA: out = gcn(v.h, v.n, Letter::A, v.m, QRat(1)); break;
    // B^m C^n = q^{-mn} C^n B^m
    case K::BC: out = gcn(v.h, v.n, Letter::B, v.m, QRat::q_pow(-static_cast<long>(v.m * v.n))); break;
    case K::Beta:
      out = gcn(v.h, v.n + 1, Letter::A, 0, QRat(q_number(v.n + 1))) -
            gcn(v.h + 1, v.n, Letter::A, 0, QRat(q_number(v.n)));
      break;
  }
  return {"R", std::move(out)};
}

std::vector<LieBasisVector> lie_basis(unsigned weight) {
  std::vector<LieBasisVector> out;
  if (weight == 1) {
    out.push_back(LieBasisVector::letter_a());
    out.push_back(LieBasisVector::letter_b());
  }
  if (weight == 2) out.push_back(LieBasisVector::letter_c());
  // 2h + 2n + m = weight
  for (unsigned h = 0; 2 * h + 3 <= weight; ++h)
    for (unsigned n = 1; 2 * h + 2 * n + 1 <= weight; ++n)
      out.push_back(LieBasisVector::ca(h, n, weight - 2 * h - 2 * n));
  for (unsigned h = 0; 2 * h + 3 <= weight; ++h)
    for (unsigned n = 1; 2 * h + 2 * n + 1 <= weight; ++n)
      out.push_back(LieBasisVector::bc(h, weight - 2 * h - 2 * n, n));
  if (weight % 2 == 0)
    for (unsigned h = 0; 2 * h + 4 <= weight; ++h) out.push_back(LieBasisVector::beta(h, (weight - 2 * h - 2) / 2));
  return out;
}

NcPoly SpanBasis::reduce(const NcPoly& x, std::map<std::size_t, QRat>* combo) const {
  NcPoly r = x;
  for (const auto& row : rows_) {
    const QRat c = r.coeff(row.pivot);
    if (c.is_zero()) continue;
    r -= c * row.vec;
    if (combo) {
      for (const auto& [i, f] : row.from) {
        QRat& slot = (*combo)[i];
        slot += c * f;
        if (slot.is_zero()) combo->erase(i);
      }
    }
  }
  return r;
}

bool SpanBasis::insert(const NcPoly& x) {
  const std::size_t idx = inputs_++;
  std::map<std::size_t, QRat> combo;
  NcPoly r = reduce(x, &combo);
  if (r.is_zero()) return false;

  // Lowest q-degree coefficient pivots; ties go to the largest word.
  const Word* pivot = nullptr;
  long best = 0;
  for (const auto& [w, c] : r.terms()) {
    const long d = q_degree(c);
    if (!pivot || d <= best) {
      pivot = &w;
      best = d;
    }
  }
  Row row;
  row.pivot = *pivot;
  const QRat inv = r.coeff(row.pivot).inverse();
  row.vec = inv * r;
  row.from[idx] = inv;
  for (const auto& [i, c] : combo) row.from[i] = -(c * inv);

  for (auto& other : rows_) {
    const QRat c = other.vec.coeff(row.pivot);
    if (c.is_zero()) continue;
    other.vec -= c * row.vec;
    for (const auto& [i, f] : row.from) {
      QRat& slot = other.from[i];
      slot -= c * f;
      if (slot.is_zero()) other.from.erase(i);
    }
  }
  rows_.push_back(std::move(row));
  return true;
}

std::vector<NcPoly> SpanBasis::vectors() const {
  std::vector<NcPoly> out;
  out.reserve(rows_.size());
  for (const auto& r : rows_) out.push_back(r.vec);
  return out;
}

namespace {

struct WeightSlice {
  std::vector<LieBasisVector> vectors;
  SpanBasis span;
};

const WeightSlice& slice(unsigned weight) {
  static std::mutex mu;
  static std::map<unsigned, WeightSlice> cache;
  std::lock_guard lock(mu);
  auto it = cache.find(weight);
  if (it != cache.end()) return it->second;
  WeightSlice s;
  s.vectors = lie_basis(weight);
  for (const auto& v : s.vectors) s.span.insert(lie_basis_normal_form(v).value);
  return cache.emplace(weight, std::move(s)).first->second;
}

}  // namespace

MembershipVerdict is_lie_polynomial(const NcPoly& x) {
  const NcPoly nf = normalizer(Presentation::R).normalize(x);
  std::map<unsigned, NcPoly> parts;
  for (const auto& [w, c] : nf.terms()) parts[w.weight()].add_term(w, c);

  MembershipVerdict verdict;
  verdict.residual.system = "R";
  for (const auto& [weight, part] : parts) {
    const WeightSlice& s = slice(weight);
    std::map<std::size_t, QRat> combo;
    NcPoly rem = s.span.reduce(part, &combo);
    verdict.residual.value += rem;
    for (const auto& [i, c] : combo) verdict.decomposition.emplace_back(s.vectors[i], c);
  }
  verdict.member = verdict.residual.value.is_zero();
  if (!verdict.member) verdict.decomposition.clear();
  return verdict;
}

std::vector<CanonicalElement> lie_span_bruteforce(unsigned max_weight) {
  if (max_weight > kMaxBruteforceWeight) {
    throw std::out_of_range("lie_span_bruteforce: weight " + std::to_string(max_weight) + " exceeds bound " +
                            std::to_string(kMaxBruteforceWeight));
  }
  Normalizer& nf = normalizer(Presentation::R);
  std::vector<std::pair<unsigned, NcPoly>> gens;
  SpanBasis span;
  for (Letter l : {Letter::A, Letter::B}) {
    if (max_weight >= 1 && span.insert(NcPoly(l))) gens.emplace_back(1, NcPoly(l));
  }
  for (std::size_t i = 0; i < gens.size(); ++i) {
    for (std::size_t j = 0; j <= i; ++j) {
      const unsigned w = gens[i].first + gens[j].first;
      if (w > max_weight) continue;
      NcPoly b = nf.normalize(lie_bracket(gens[i].second, gens[j].second));
      if (span.insert(b)) gens.emplace_back(w, std::move(b));
    }
  }
  std::vector<CanonicalElement> out;
  for (auto& v : span.vectors()) out.push_back({"R", std::move(v)});
  return out;
}

}  // namespace rq
