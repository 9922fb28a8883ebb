#pragma once

#include <cstddef>
#include <string>
#include <unordered_map>
#include <vector>

#include "rq/ncpoly.hpp"

namespace rq {

/// A rewrite rule lhs -> rhs.  Every word of rhs has the weight of lhs and is
/// strictly smaller than lhs in the admissible order.
struct ReductionRule {
  std::string name;
  Word lhs;
  NcPoly rhs;
};

/// Ordered list of rules over an alphabet.  Construction validates the rule
/// invariants and throws std::invalid_argument on violation.
class ReductionSystem {
 public:
  ReductionSystem(std::string name, std::vector<ReductionRule> rules,
                  std::vector<Letter> alphabet = {std::begin(kAllLetters), std::end(kAllLetters)});

  const std::string& name() const { return name_; }
  const std::vector<ReductionRule>& rules() const { return rules_; }
  const std::vector<Letter>& alphabet() const { return alphabet_; }
  const ReductionRule& rule(const std::string& name) const;

  /// Earliest-listed rule whose lhs occurs in w, with its leftmost position.
  /// Returns nullptr when w is irreducible.
  const ReductionRule* first_match(const Word& w, std::size_t* position) const;

 private:
  std::string name_;
  std::vector<ReductionRule> rules_;
  std::vector<Letter> alphabet_;
};

/// An element of R(q) written in the basis of irreducible words of a system.
struct CanonicalElement {
  std::string system;
  NcPoly value;
  friend bool operator==(const CanonicalElement&, const CanonicalElement&) = default;
};

struct RewriteStep {
  Word word;            // word that was rewritten
  std::size_t position;  // offset of the rule lhs inside word
  std::string rule;
};
using Trace = std::vector<RewriteStep>;

struct NormalizeOptions {
  /// Hard ceiling on rewrite steps; exceeding it throws std::runtime_error.
  std::size_t max_steps = 50'000'000;
  Trace* trace = nullptr;
  std::size_t* steps_taken = nullptr;
};

/// Rewrites the largest reducible word first, at the leftmost occurrence of
/// the earliest-listed applicable rule, until every word is irreducible.
CanonicalElement normalize(const NcPoly& x, const ReductionSystem& sys, const NormalizeOptions& opts = {});

/// Memoizing normalizer.  Only valid for confluent systems, where the normal
/// form of a word does not depend on the rewriting strategy.  Not thread-safe;
/// use one instance per thread.
class Normalizer {
 public:
  explicit Normalizer(const ReductionSystem& sys) : sys_(&sys) {}

  const ReductionSystem& system() const { return *sys_; }
  const NcPoly& normal_form(const Word& w);
  NcPoly normalize(const NcPoly& x);
  CanonicalElement canonical(const NcPoly& x) { return {sys_->name(), normalize(x)}; }
  std::size_t cache_size() const { return cache_.size(); }

 private:
  NcPoly append(const NcPoly& x, Letter l);
  const NcPoly& append_irreducible(const Word& u, Letter l);

  const ReductionSystem* sys_;
  std::unordered_map<Word, NcPoly> cache_;
};

bool is_irreducible(const Word& w, const ReductionSystem& sys);

struct Ambiguity {
  enum class Kind { Overlap, Inclusion };
  Kind kind;
  std::string rule_left;
  std::string rule_right;
  Word witness;
  /// Overlap: lhs(rule_left) = left*middle, lhs(rule_right) = middle*right.
  /// Inclusion: lhs(rule_left) = left*middle*right, lhs(rule_right) = middle.
  Word left, middle, right;
};

/// All overlap and inclusion ambiguities, ordered by (rule_left, rule_right)
/// in rule-list order, then by overlap length.
std::vector<Ambiguity> find_ambiguities(const ReductionSystem& sys);

struct Resolution {
  bool resolvable = false;
  /// One-step results of applying rule_left / rule_right to the witness.
  NcPoly left_step, right_step;
  NcPoly left_normal, right_normal;
  Trace left_trace, right_trace;
};

Resolution check_resolvable(const Ambiguity& amb, const ReductionSystem& sys);

/// Bound on enumerate_irreducible's weight argument.
inline constexpr unsigned kDefaultEnumerationBound = 24;

/// Irreducible words of exactly the given weight over the system alphabet,
/// in admissible order.  Throws std::out_of_range above bound.
std::vector<Word> enumerate_irreducible(const ReductionSystem& sys, unsigned weight,
                                        unsigned bound = kDefaultEnumerationBound);

}  // namespace rq
