#include "rq/rewrite.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <stdexcept>

namespace rq {

ReductionSystem::ReductionSystem(std::string name, std::vector<ReductionRule> rules, std::vector<Letter> alphabet)
    : name_(std::move(name)), rules_(std::move(rules)), alphabet_(std::move(alphabet)) {
  std::set<std::string> seen_names;
  std::set<std::string> seen_lhs;
  for (const auto& r : rules_) {
    if (r.lhs.size() < 2) throw std::invalid_argument("rule " + r.name + ": lhs must have length >= 2");
    if (!seen_lhs.insert(r.lhs.compact()).second) {
      throw std::invalid_argument("rule " + r.name + ": duplicate lhs " + r.lhs.compact());
    }
    if (!seen_names.insert(r.name).second) throw std::invalid_argument("duplicate rule name " + r.name);
    for (const auto& [w, c] : r.rhs.terms()) {
      if (w.weight() != r.lhs.weight()) {
        throw std::invalid_argument("rule " + r.name + ": rhs word " + w.to_string() + " changes weight");
      }
      if (!(w < r.lhs)) {
        throw std::invalid_argument("rule " + r.name + ": rhs word " + w.to_string() + " is not smaller than lhs");
      }
    }
  }
}

const ReductionRule& ReductionSystem::rule(const std::string& name) const {
  for (const auto& r : rules_) {
    if (r.name == name) return r;
  }
  throw std::out_of_range("no rule named " + name + " in system " + name_);
}

const ReductionRule* ReductionSystem::first_match(const Word& w, std::size_t* position) const {
  for (const auto& r : rules_) {
    std::size_t p = w.find(r.lhs);
    if (p != Word::npos) {
      if (position) *position = p;
      return &r;
    }
  }
  return nullptr;
}

namespace {

// Replaces the occurrence of rule.lhs at pos and accumulates c * result.
template <typename Sink>
void apply_at(const Word& w, std::size_t pos, const ReductionRule& rule, const QRat& c, Sink&& sink) {
  const Word prefix = w.subword(0, pos);
  const Word suffix = w.subword(pos + rule.lhs.size(), Word::npos);
  for (const auto& [rw, rc] : rule.rhs.terms()) sink(prefix * rw * suffix, c * rc);
}

}  // namespace

CanonicalElement normalize(const NcPoly& x, const ReductionSystem& sys, const NormalizeOptions& opts) {
  std::map<Word, QRat> pending;
  for (const auto& [w, c] : x.terms()) pending.emplace(w, c);
  NcPoly result;
  std::size_t steps = 0;
  while (!pending.empty()) {
    auto node = pending.extract(std::prev(pending.end()));
    const Word& w = node.key();
    const QRat& c = node.mapped();
    std::size_t pos = 0;
    const ReductionRule* rule = sys.first_match(w, &pos);
    if (!rule) {
      result.add_term(w, c);
      continue;
    }
    if (++steps > opts.max_steps) throw std::runtime_error("normalize: step ceiling exceeded");
    if (opts.trace) opts.trace->push_back({w, pos, rule->name});
    apply_at(w, pos, *rule, c, [&](Word nw, QRat nc) {
      auto [it, inserted] = pending.try_emplace(std::move(nw), nc);
      if (!inserted) {
        it->second += nc;
        if (it->second.is_zero()) pending.erase(it);
      }
    });
  }
  if (opts.steps_taken) *opts.steps_taken = steps;
  return {sys.name(), std::move(result)};
}

// Words are built one letter at a time from irreducible prefixes, so the
// cache only ever holds (irreducible word) * letter plus the queried words.
// Sound because the system is assumed confluent.
const NcPoly& Normalizer::normal_form(const Word& w) {
  if (auto it = cache_.find(w); it != cache_.end()) return it->second;
  NcPoly result;
  if (is_irreducible(w, *sys_)) {
    result = NcPoly(w);
  } else {
    const NcPoly& head = normal_form(w.subword(0, w.size() - 1));
    result = append(head, w[w.size() - 1]);
  }
  return cache_.emplace(w, std::move(result)).first->second;
}

NcPoly Normalizer::append(const NcPoly& x, Letter l) {
  NcPoly out;
  for (const auto& [u, c] : x.terms()) {
    for (const auto& [v, vc] : append_irreducible(u, l).terms()) out.add_term(v, c * vc);
  }
  return out;
}

// u is irreducible, so any redex of u*l ends at the last letter.
const NcPoly& Normalizer::append_irreducible(const Word& u, Letter l) {
  Word w = u;
  w *= l;
  if (auto it = cache_.find(w); it != cache_.end()) return it->second;
  std::size_t pos = 0;
  const ReductionRule* rule = sys_->first_match(w, &pos);
  NcPoly result;
  if (!rule) {
    result = NcPoly(w);
  } else {
    const Word prefix = w.subword(0, pos);
    for (const auto& [rw, rc] : rule->rhs.terms()) {
      NcPoly acc(prefix, rc);
      for (std::size_t i = 0; i < rw.size(); ++i) acc = append(acc, rw[i]);
      result += acc;
    }
  }
  return cache_.emplace(std::move(w), std::move(result)).first->second;
}

NcPoly Normalizer::normalize(const NcPoly& x) {
  NcPoly result;
  for (const auto& [w, c] : x.terms()) {
    const NcPoly& nf = normal_form(w);
    for (const auto& [nw, nc] : nf.terms()) result.add_term(nw, nc * c);
  }
  return result;
}

bool is_irreducible(const Word& w, const ReductionSystem& sys) { return sys.first_match(w, nullptr) == nullptr; }

std::vector<Ambiguity> find_ambiguities(const ReductionSystem& sys) {
  std::vector<Ambiguity> out;
  const auto& rules = sys.rules();
  for (const auto& r1 : rules) {
    for (const auto& r2 : rules) {
      const Word& a = r1.lhs;
      const Word& b = r2.lhs;
      const std::size_t max_k = std::min(a.size(), b.size()) - 1;
      for (std::size_t k = 1; k <= max_k; ++k) {
        if (a.subword(a.size() - k, k) == b.subword(0, k)) {
          Ambiguity amb{Ambiguity::Kind::Overlap, r1.name, r2.name, a * b.subword(k, Word::npos),
                        a.subword(0, a.size() - k), b.subword(0, k), b.subword(k, Word::npos)};
          out.push_back(std::move(amb));
        }
      }
      if (&r1 != &r2 && b.size() < a.size()) {
        for (std::size_t p = a.find(b); p != Word::npos; p = a.find(b, p + 1)) {
          out.push_back({Ambiguity::Kind::Inclusion, r1.name, r2.name, a, a.subword(0, p), b,
                         a.subword(p + b.size(), Word::npos)});
        }
      }
    }
  }
  return out;
}

Resolution check_resolvable(const Ambiguity& amb, const ReductionSystem& sys) {
  const ReductionRule& r1 = sys.rule(amb.rule_left);
  const ReductionRule& r2 = sys.rule(amb.rule_right);
  Resolution res;
  auto into = [](NcPoly& target) { return [&target](const Word& w, const QRat& c) { target.add_term(w, c); }; };
  apply_at(amb.witness, 0, r1, QRat(1), into(res.left_step));
  const std::size_t pos2 = amb.left.size();
  apply_at(amb.witness, pos2, r2, QRat(1), into(res.right_step));
  res.left_normal = normalize(res.left_step, sys, {.trace = &res.left_trace}).value;
  res.right_normal = normalize(res.right_step, sys, {.trace = &res.right_trace}).value;
  res.resolvable = res.left_normal == res.right_normal;
  return res;
}

std::vector<Word> enumerate_irreducible(const ReductionSystem& sys, unsigned weight, unsigned bound) {
  if (weight > bound) {
    throw std::out_of_range("weight " + std::to_string(weight) + " exceeds enumeration bound " + std::to_string(bound));
  }
  std::vector<Word> out;
  Word current;
  // Extending a reducible word never makes it irreducible, so prune on the
  // suffixes created by each appended letter.
  std::function<void(unsigned)> dfs = [&](unsigned w) {
    if (w == weight) {
      out.push_back(current);
      return;
    }
    for (Letter l : sys.alphabet()) {
      if (w + rq::weight(l) > weight) continue;
      Word next = current;
      next *= l;
      bool reducible = std::any_of(sys.rules().begin(), sys.rules().end(),
                                   [&](const ReductionRule& r) { return next.ends_with(r.lhs); });
      if (reducible) continue;
      Word saved = std::move(current);
      current = std::move(next);
      dfs(w + rq::weight(l));
      current = std::move(saved);
    }
  };
  dfs(0);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace rq
