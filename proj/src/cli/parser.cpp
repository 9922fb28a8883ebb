#include "rq/cli/parser.hpp"

#include <cctype>
#include <optional>

namespace rq::cli {

ParseError::ParseError(const std::string& what, unsigned line, unsigned column)
    : std::invalid_argument(std::to_string(line) + ":" + std::to_string(column) + ": " + what),
      message_(what),
      line_(line),
      column_(column) {}

namespace {

using K = Expr::Kind;

class Parser {
 public:
  explicit Parser(std::string_view s) : s_(s) {}

  std::unique_ptr<Expr> run() {
    auto e = sum();
    skip();
    if (pos_ < s_.size()) fail(std::string("unexpected '") + s_[pos_] + "'");
    return e;
  }

 private:
  std::string_view s_;
  std::size_t pos_ = 0;
  unsigned line_ = 1, col_ = 1;

  [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, line_, col_); }

  void advance() {
    if (s_[pos_] == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    ++pos_;
  }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) advance();
  }

  char peek() {
    skip();
    return pos_ < s_.size() ? s_[pos_] : '\0';
  }

  void expect(char c) {
    if (peek() != c) {
      if (pos_ >= s_.size()) fail(std::string("expected '") + c + "' before end of input");
      fail(std::string("expected '") + c + "', found '" + s_[pos_] + "'");
    }
    advance();
  }

  std::unique_ptr<Expr> node(K k) {
    auto e = std::make_unique<Expr>();
    e->kind = k;
    e->line = line_;
    e->column = col_;
    return e;
  }

  std::unique_ptr<Expr> binary(K k, std::unique_ptr<Expr> a, std::unique_ptr<Expr> b, unsigned line, unsigned col) {
    auto e = std::make_unique<Expr>();
    e->kind = k;
    e->line = line;
    e->column = col;
    e->args.push_back(std::move(a));
    e->args.push_back(std::move(b));
    return e;
  }

  // sum := signed (('+'|'-') signed)*
  std::unique_ptr<Expr> sum() {
    auto e = signed_term();
    for (char c = peek(); c == '+' || c == '-'; c = peek()) {
      const unsigned l = line_, co = col_;
      advance();
      e = binary(c == '+' ? K::Sum : K::Difference, std::move(e), signed_term(), l, co);
    }
    return e;
  }

  // unary minus binds looser than '*'
  std::unique_ptr<Expr> signed_term() {
    if (peek() == '-') {
      auto e = node(K::Negate);
      advance();
      e->args.push_back(signed_term());
      return e;
    }
    if (peek() == '+') {
      advance();
      return signed_term();
    }
    return product();
  }

  std::unique_ptr<Expr> product() {
    auto e = power();
    for (char c = peek(); c == '*' || c == '/'; c = peek()) {
      const unsigned l = line_, co = col_;
      advance();
      e = binary(c == '*' ? K::Product : K::Quotient, std::move(e), power(), l, co);
    }
    return e;
  }

  std::unique_ptr<Expr> power() {
    auto base = atom();
    if (peek() != '^') return base;
    auto e = node(K::Power);
    advance();
    const char c = peek();
    if (c == '-') fail("negative exponent");
    if (!std::isdigit(static_cast<unsigned char>(c))) fail("exponent must be a nonnegative integer literal");
    unsigned long v = 0;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
      v = v * 10 + static_cast<unsigned>(s_[pos_] - '0');
      if (v > kMaxExponent) fail("exponent exceeds " + std::to_string(kMaxExponent));
      advance();
    }
    if (pos_ < s_.size() && (s_[pos_] == '.' || s_[pos_] == '/')) fail("exponent must be a nonnegative integer literal");
    e->exponent = static_cast<unsigned>(v);
    e->args.push_back(std::move(base));
    return e;
  }

  std::unique_ptr<Expr> atom() {
    const char c = peek();
    if (c == '\0') fail("unexpected end of input");
    if (c == '(') {
      advance();
      auto e = sum();
      expect(')');
      return e;
    }
    if (c == '[') {
      auto e = node(K::Bracket);
      advance();
      e->args.push_back(sum());
      expect(',');
      e->args.push_back(sum());
      expect(']');
      return e;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      auto e = node(K::Number);
      std::string digits;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
        digits += s_[pos_];
        advance();
      }
      if (pos_ < s_.size() && s_[pos_] == '.') fail("decimal literals are not supported; use a fraction");
      e->number = Rational(Integer(digits));
      return e;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || static_cast<unsigned char>(c) >= 0x80) {
      auto e = node(K::Letter);
      std::string ident;
      while (pos_ < s_.size() &&
             (std::isalnum(static_cast<unsigned char>(s_[pos_])) || static_cast<unsigned char>(s_[pos_]) >= 0x80 ||
              s_[pos_] == '_')) {
        ident += s_[pos_];
        advance();
      }
      if (ident == "A") e->letter = Letter::A;
      else if (ident == "B") e->letter = Letter::B;
      else if (ident == "C") e->letter = Letter::C;
      else if (ident == "g" || ident == "γ") e->letter = Letter::Gamma;
      else if (ident == "q") e->kind = K::QSymbol;
      else if (ident == "I") e->kind = K::Identity;
      else throw ParseError("unknown symbol '" + ident + "'", e->line, e->column);
      return e;
    }
    fail(std::string("unexpected '") + c + "'");
  }
};

std::optional<QRat> as_scalar(const NcPoly& p) {
  if (p.is_zero()) return QRat(0);
  if (p.size() == 1 && p.terms().begin()->first.empty()) return p.terms().begin()->second;
  return std::nullopt;
}

}  // namespace

std::unique_ptr<Expr> parse(std::string_view text) { return Parser(text).run(); }

NcPoly elaborate(const Expr& e) {
  switch (e.kind) {
    case K::Number: return NcPoly(QRat(e.number));
    case K::QSymbol: return NcPoly(QRat::q());
    case K::Letter: return NcPoly(e.letter);
    case K::Identity: return NcPoly::identity();
    case K::Sum: return elaborate(*e.args[0]) + elaborate(*e.args[1]);
    case K::Difference: return elaborate(*e.args[0]) - elaborate(*e.args[1]);
    case K::Negate: return -elaborate(*e.args[0]);
    case K::Product: return elaborate(*e.args[0]) * elaborate(*e.args[1]);
    case K::Quotient: {
      const auto d = as_scalar(elaborate(*e.args[1]));
      if (!d) throw ParseError("divisor must be a scalar in q", e.line, e.column);
      if (d->is_zero()) throw ParseError("division by zero", e.line, e.column);
      return elaborate(*e.args[0]) * d->inverse();
    }
    case K::Power: return elaborate(*e.args[0]).pow(e.exponent);
    case K::Bracket: return lie_bracket(elaborate(*e.args[0]), elaborate(*e.args[1]));
  }
  return {};
}

NcPoly parse_poly(std::string_view text) { return elaborate(*parse(text)); }

ReductionSystem parse_reduction_system(std::string_view text, const std::string& name) {
  std::vector<ReductionRule> rules;
  unsigned lineno = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    start = end + 1;
    ++lineno;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string_view::npos || line[first] == '#') continue;
    const auto colon = line.find(':');
    const auto arrow = line.find("->");
    if (colon == std::string_view::npos || arrow == std::string_view::npos || arrow < colon) {
      throw ParseError("expected 'name: LHS -> rhs'", lineno, static_cast<unsigned>(first + 1));
    }
    auto trim = [](std::string_view v) {
      const auto a = v.find_first_not_of(" \t\r");
      const auto b = v.find_last_not_of(" \t\r");
      return a == std::string_view::npos ? std::string_view() : v.substr(a, b - a + 1);
    };
    ReductionRule r;
    r.name = std::string(trim(line.substr(0, colon)));
    if (r.name.empty()) throw ParseError("empty rule name", lineno, static_cast<unsigned>(first + 1));
    auto sub = [&](std::size_t from, std::size_t len) {
      try {
        return parse_poly(line.substr(from, len));
      } catch (const ParseError& e) {
        throw ParseError(e.message(), lineno,
                         static_cast<unsigned>(from + e.column()));
      }
    };
    const NcPoly lhs = sub(colon + 1, arrow - colon - 1);
    r.rhs = sub(arrow + 2, std::string_view::npos);
    if (lhs.size() != 1 || !lhs.terms().begin()->second.is_one() || lhs.terms().begin()->first.empty()) {
      throw ParseError("rule '" + r.name + "': left side must be a single word", lineno,
                       static_cast<unsigned>(colon + 2));
    }
    r.lhs = lhs.terms().begin()->first;
    rules.push_back(std::move(r));
  }
  if (rules.empty()) throw std::invalid_argument("reduction system file has no rules");
  return ReductionSystem(name, std::move(rules));
}

}  // namespace rq::cli
