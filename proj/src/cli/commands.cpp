#include "rq/cli/commands.hpp"

#include <chrono>
#include <fstream>
#include <iomanip>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "rq/cli/parser.hpp"
#include "rq/fockcheck.hpp"
#include "rq/identities.hpp"
#include "rq/liepoly.hpp"
#include "rq/rqalg.hpp"

namespace rq::cli {

namespace {

using nlohmann::ordered_json;

inline constexpr unsigned kMaxLieWeight = 64;
inline constexpr unsigned kMaxFockDim = 512;

struct Options {
  bool json = false;
  bool unicode = false;
};

std::string word_text(const Word& w, const Options& o) { return w.to_string(o.unicode); }

ordered_json powers_json(const Word& w) {
  ordered_json out = ordered_json::array();
  const std::string& code = w.compact();
  for (std::size_t i = 0; i < code.size();) {
    std::size_t j = i;
    while (j < code.size() && code[j] == code[i]) ++j;
    out.push_back({std::string(1, code[i]), j - i});
    i = j;
  }
  return out;
}

ordered_json poly_json(const NcPoly& p, const Options& o) {
  ordered_json terms = ordered_json::array();
  for (const auto& [w, c] : p.terms()) {
    terms.push_back({{"word", w.compact()}, {"coeff", c.to_string(true)}, {"powers", powers_json(w)}});
  }
  return {{"text", p.to_string(o.unicode)}, {"terms", terms}};
}

std::string rational_text(const Rational& r) { return r.get_str(); }

Presentation presentation_flag(const std::string& s) { return parse_presentation(s); }

NcPoly normalize_in(Presentation which, const NcPoly& x) {
  if (which == Presentation::S) return normalizer(Presentation::S).normalize(substitute_commutator(x));
  return normalizer(Presentation::R).normalize(x);
}

void emit(std::ostream& out, const ordered_json& j) { out << j.dump(2) << '\n'; }

int cmd_normalize(const Options& o, const std::string& system, const std::string& expr, std::ostream& out) {
  const Presentation p = presentation_flag(system);
  const NcPoly nf = normalize_in(p, parse_poly(expr));
  if (o.json) {
    emit(out, {{"command", "normalize"}, {"system", system}, {"input", expr}, {"result", poly_json(nf, o)}});
  } else {
    out << nf.to_string(o.unicode) << '\n';
  }
  return kOk;
}

int cmd_bracket(const Options& o, const std::string& system, const std::string& x, const std::string& y,
                std::ostream& out) {
  const NcPoly nf = normalize_in(presentation_flag(system), lie_bracket(parse_poly(x), parse_poly(y)));
  if (o.json) {
    emit(out, {{"command", "bracket"}, {"system", system}, {"left", x}, {"right", y}, {"result", poly_json(nf, o)}});
  } else {
    out << nf.to_string(o.unicode) << '\n';
  }
  return kOk;
}

int cmd_confluence(const Options& o, const std::string& system, std::ostream& out) {
  std::unique_ptr<ReductionSystem> owned;
  const ReductionSystem* sys = nullptr;
  if (system == "S" || system == "R") {
    sys = &presentation(parse_presentation(system));
  } else {
    std::ifstream in(system);
    if (!in) throw std::invalid_argument("cannot read reduction system file '" + system + "'");
    std::stringstream buf;
    buf << in.rdbuf();
    try {
      owned = std::make_unique<ReductionSystem>(parse_reduction_system(buf.str(), system));
    } catch (const ParseError& e) {
      throw std::invalid_argument(system + ":" + e.what());
    }
    sys = owned.get();
  }
  const auto ambs = find_ambiguities(*sys);
  unsigned overlaps = 0, inclusions = 0;
  bool all = true;
  ordered_json list = ordered_json::array();
  std::ostringstream text;
  for (const auto& a : ambs) {
    const bool overlap = a.kind == Ambiguity::Kind::Overlap;
    (overlap ? overlaps : inclusions)++;
    const Resolution r = check_resolvable(a, *sys);
    all = all && r.resolvable;
    list.push_back({{"kind", overlap ? "overlap" : "inclusion"},
                    {"rules", {a.rule_left, a.rule_right}},
                    {"witness", a.witness.compact()},
                    {"resolvable", r.resolvable},
                    {"left_normal", poly_json(r.left_normal, o)},
                    {"right_normal", poly_json(r.right_normal, o)}});
    text << "  " << (overlap ? "overlap  " : "inclusion") << ' ' << a.rule_left << '/' << a.rule_right << " at "
         << word_text(a.witness, o) << ": " << (r.resolvable ? "resolvable" : "NOT resolvable") << '\n';
  }
  if (o.json) {
    emit(out, {{"command", "confluence"},
               {"system", sys->name()},
               {"ambiguities", list},
               {"count", ambs.size()},
               {"overlaps", overlaps},
               {"inclusions", inclusions},
               {"all_resolvable", all}});
  } else {
    out << sys->name() << ": " << ambs.size() << " ambiguities (" << overlaps << " overlap, " << inclusions
        << " inclusion)\n"
        << text.str() << (all ? "all resolvable" : "some ambiguities do not resolve") << '\n';
  }
  return all ? kOk : kFalse;
}

int cmd_member(const Options& o, const std::string& expr, std::ostream& out) {
  const MembershipVerdict v = is_lie_polynomial(parse_poly(expr));
  if (o.json) {
    ordered_json dec = ordered_json::array();
    for (const auto& [vec, c] : v.decomposition) dec.push_back({{"vector", vec.to_string()}, {"coeff", c.to_string(true)}});
    emit(out, {{"command", "member"},
               {"input", expr},
               {"member", v.member},
               {"decomposition", dec},
               {"residual", poly_json(v.residual.value, o)}});
  } else {
    out << "member: " << (v.member ? "true" : "false") << '\n';
    if (v.member) {
      out << "decomposition: {";
      for (std::size_t i = 0; i < v.decomposition.size(); ++i)
        out << (i ? ", " : "") << v.decomposition[i].first.to_string() << ": " << v.decomposition[i].second.to_string(true);
      out << "}\n";
    } else {
      out << "residual: " << v.residual.value.to_string(o.unicode) << '\n';
    }
  }
  return v.member ? kOk : kFalse;
}

std::vector<std::string> split_ids(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream in(s);
  for (std::string item; std::getline(in, item, ',');)
    if (!item.empty()) out.push_back(item);
  return out;
}

int cmd_suite(const Options& o, const std::string& only, double scale, bool strict, std::ostream& out) {
  if (!(scale > 0)) throw std::invalid_argument("--params-scale must be positive");
  std::vector<const IdentityEntry*> entries;
  if (only.empty()) {
    for (const auto& e : identity_catalog()) entries.push_back(&e);
  } else {
    for (const auto& id : split_ids(only)) entries.push_back(&find_identity(id));
  }
  bool all_hold = true, all_stated = true;
  ordered_json list = ordered_json::array();
  const auto t0 = std::chrono::steady_clock::now();
  for (const IdentityEntry* e : entries) {
    std::size_t instances = 0, stated = 0;
    std::map<std::string, std::size_t> via;
    ordered_json failures = ordered_json::array();
    for (const auto& p : parameter_sweep(*e, scale)) {
      const IdentityVerdict v = verify_identity(e->id, p);
      ++instances;
      if (v.stated_holds) ++stated;
      if (v.holds) ++via[v.reading];
      else failures.push_back(params_to_string(*e, p));
    }
    const bool holds = failures.empty();
    all_hold = all_hold && holds;
    all_stated = all_stated && stated == instances;
    ordered_json readings = ordered_json::object();
    for (const auto& [name, n] : via) readings[name] = n;
    list.push_back({{"id", e->id},
                    {"statement", e->statement},
                    {"instances", instances},
                    {"holds", holds},
                    {"stated_holds", stated},
                    {"readings", readings},
                    {"failures", failures}});
    if (!o.json) {
      out << e->id << ": ";
      if (!holds) out << "FAIL on " << failures.size() << '/' << instances;
      else if (stated == instances) out << "ok";
      else out << "ok via alternative reading (stated form holds on " << stated << '/' << instances << ")";
      out << "  [" << instances << " instances]\n";
    }
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (o.json) {
    emit(out, {{"command", "suite"},
               {"params_scale", scale},
               {"entries", list},
               {"all_hold", all_hold},
               {"all_stated_hold", all_stated}});
  } else {
    out << (all_hold ? "all entries hold" : "failures present") << (all_stated ? "" : "; some only via alternative readings")
        << " (" << std::fixed << std::setprecision(2) << secs << " s)\n";
  }
  if (!all_hold) return kFalse;
  return strict && !all_stated ? kFalse : kOk;
}

int cmd_fock(const Options& o, unsigned dim, const std::string& q, const std::string& b, const std::string& x,
             const std::string& y, std::ostream& out) {
  if (dim > kMaxFockDim) throw std::out_of_range("--dim exceeds " + std::to_string(kMaxFockDim));
  const FockRep rep(dim, parse_rational(q), parse_rational(b));
  const NcPoly px = parse_poly(x), py = parse_poly(y);
  const bool agree = agree_on_block(px, py, rep);
  const unsigned d = std::max(px.is_zero() ? 0u : px.max_weight(), py.is_zero() ? 0u : py.max_weight());
  if (o.json) {
    emit(out, {{"command", "fock"},
               {"dim", dim},
               {"q", rational_text(rep.q())},
               {"b", rational_text(rep.b())},
               {"columns", dim - d},
               {"agree", agree}});
  } else {
    out << (agree ? "agree" : "differ") << " on columns 0.." << dim - d - 1 << '\n';
  }
  return agree ? kOk : kFalse;
}

int cmd_basis(const Options& o, const std::string& system, unsigned weight, std::ostream& out) {
  ordered_json list = ordered_json::array();
  std::ostringstream text;
  if (system == "lie") {
    if (weight > kMaxLieWeight) throw std::out_of_range("--weight exceeds " + std::to_string(kMaxLieWeight));
    for (const auto& v : lie_basis(weight)) {
      const NcPoly nf = lie_basis_normal_form(v).value;
      list.push_back({{"vector", v.to_string()}, {"normal_form", poly_json(nf, o)}});
      text << v.to_string() << " = " << nf.to_string(o.unicode) << '\n';
    }
  } else {
    const ReductionSystem& sys = presentation(parse_presentation(system));
    for (const Word& w : enumerate_irreducible(sys, weight)) {
      list.push_back({{"word", w.compact()}, {"powers", powers_json(w)}});
      text << word_text(w, o) << '\n';
    }
  }
  if (o.json) {
    emit(out, {{"command", "basis"}, {"system", system}, {"weight", weight}, {"count", list.size()}, {"elements", list}});
  } else {
    out << text.str() << list.size() << " elements\n";
  }
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact computations in the centrally extended q-deformed Heisenberg algebra", "rqcas"};
  app.require_subcommand(1);
  Options o;
  app.add_flag("--json", o.json, "Structured JSON output");
  app.add_flag("--unicode", o.unicode, "Print the central letter as a Greek gamma");

  std::string system = "R", expr, expr2, only, q = "2/3", b = "5/7";
  unsigned weight = 0, dim = FockRep::kDefaultDim;
  double scale = 1.0;
  bool strict = false;

  auto* normalize = app.add_subcommand("normalize", "Normal form of an expression");
  normalize->add_option("--system", system, "S or R")->check(CLI::IsMember({"S", "R"}));
  normalize->add_option("EXPR", expr)->required();

  auto* bracket = app.add_subcommand("bracket", "Normal form of [X, Y]");
  bracket->add_option("--system", system, "S or R")->check(CLI::IsMember({"S", "R"}));
  bracket->add_option("X", expr)->required();
  bracket->add_option("Y", expr2)->required();

  auto* confluence = app.add_subcommand("confluence", "Ambiguities of a reduction system");
  confluence->add_option("--system", system, "S, R or a rule file")->required();

  auto* member = app.add_subcommand("member", "Lie polynomial membership");
  member->add_option("EXPR", expr)->required();

  auto* suite = app.add_subcommand("suite", "Verify the identity catalog");
  suite->add_option("--only", only, "Comma-separated identity ids");
  suite->add_option("--params-scale", scale, "Multiply default parameter bounds");
  suite->add_flag("--strict", strict, "Exit 1 unless every identity holds as stated");

  auto* fock = app.add_subcommand("fock", "Compare two expressions in the ladder representation");
  fock->add_option("--dim", dim, "Matrix size")->check(CLI::Range(2u, kMaxFockDim));
  fock->add_option("--q", q, "Rational value of q");
  fock->add_option("--b", b, "Rational value of the central scalar");
  fock->add_option("X", expr)->required();
  fock->add_option("Y", expr2)->required();

  auto* basis = app.add_subcommand("basis", "Basis elements of one weight");
  basis->add_option("--system", system, "S, R or lie")->required()->check(CLI::IsMember({"S", "R", "lie"}));
  basis->add_option("--weight", weight, "Weight")->required();

  std::vector<std::string> argv_store{"rqcas"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& s : argv_store) argv.push_back(s.data());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "rqcas: " << e.what() << '\n';
    return kError;
  }

  try {
    if (*normalize) return cmd_normalize(o, system, expr, out);
    if (*bracket) return cmd_bracket(o, system, expr, expr2, out);
    if (*confluence) return cmd_confluence(o, system, out);
    if (*member) return cmd_member(o, expr, out);
    if (*suite) return cmd_suite(o, only, scale, strict, out);
    if (*fock) return cmd_fock(o, dim, q, b, expr, expr2, out);
    if (*basis) return cmd_basis(o, system, weight, out);
  } catch (const ParseError& e) {
    err << "rqcas: parse error at " << e.what() << '\n';
    return kError;
  } catch (const std::exception& e) {
    err << "rqcas: " << e.what() << '\n';
    return kError;
  }
  return kError;
}

}  // namespace rq::cli
