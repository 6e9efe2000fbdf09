#include <algorithm>
#include <random>

#include <fmt/format.h>
#include <json.hpp>

#include "zform/expr.hpp"

namespace zform {

namespace {

using nlohmann::json;

// ---------------------------------------------------------------------------
// Tokenizer

enum class Tok {
  Int,
  Word,
  Plus,
  Minus,
  Star,
  Caret,
  LParen,
  RParen,
  LBracket,
  RBracket,
  Comma,
  Slash,
  End,
};

struct Token {
  Tok kind = Tok::End;
  std::string text;
  std::size_t offset = 0;
};

std::vector<Token> tokenize(const std::string& s) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < s.size()) {
    char c = s[i];
    if (c == ' ' || c == '\t' || c == '\n' || c == '\r') {
      ++i;
      continue;
    }
    std::size_t start = i;
    if (c >= '0' && c <= '9') {
      while (i < s.size() && s[i] >= '0' && s[i] <= '9') ++i;
      out.push_back({Tok::Int, s.substr(start, i - start), start});
      continue;
    }
    if ((c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z')) {
      while (i < s.size() && ((s[i] >= 'a' && s[i] <= 'z') ||
                              (s[i] >= 'A' && s[i] <= 'Z') ||
                              (s[i] >= '0' && s[i] <= '9')))
        ++i;
      out.push_back({Tok::Word, s.substr(start, i - start), start});
      continue;
    }
    Tok k;
    switch (c) {
      case '+': k = Tok::Plus; break;
      case '-': k = Tok::Minus; break;
      case '*': k = Tok::Star; break;
      case '^': k = Tok::Caret; break;
      case '(': k = Tok::LParen; break;
      case ')': k = Tok::RParen; break;
      case '[': k = Tok::LBracket; break;
      case ']': k = Tok::RBracket; break;
      case ',': k = Tok::Comma; break;
      case '/': k = Tok::Slash; break;
      default:
        throw ParseError(fmt::format("unexpected character '{}'", c), start);
    }
    out.push_back({k, std::string(1, c), start});
    ++i;
  }
  out.push_back({Tok::End, "", s.size()});
  return out;
}

// ---------------------------------------------------------------------------
// Parser (recursive descent, LL(1))

class Parser {
 public:
  explicit Parser(const std::string& text) : toks_(tokenize(text)) {}

  Expr run() {
    Expr e = parse_expr();
    if (peek().kind != Tok::End)
      fail("'+', '-', '*', '^', or end of input");
    return e;
  }

 private:
  const Token& peek() const { return toks_[pos_]; }
  Token advance() { return toks_[pos_++]; }

  [[noreturn]] void fail(const std::string& expected) const {
    const Token& t = peek();
    std::string found =
        t.kind == Tok::End ? "end of input" : fmt::format("'{}'", t.text);
    throw ParseError(fmt::format("expected {}, found {}", expected, found),
                     t.offset);
  }

  Token expect(Tok k, const std::string& what) {
    if (peek().kind != k) fail(what);
    return advance();
  }

  long parse_long(const Token& t) const {
    try {
      return std::stol(t.text);
    } catch (const std::out_of_range&) {
      throw ParseError("integer literal out of range", t.offset);
    }
  }

  long parse_uint(const std::string& what) {
    if (peek().kind != Tok::Int) fail(what);
    return parse_long(advance());
  }

  long parse_sint(const std::string& what) {
    bool neg = false;
    if (peek().kind == Tok::Minus) {
      advance();
      neg = true;
    }
    long v = parse_uint(what);
    return neg ? -v : v;
  }

  // INT ['/' INT], with an optional already-consumed leading minus.
  Expr parse_number(std::size_t offset, bool negative) {
    Token num = expect(Tok::Int, "integer");
    long n = parse_long(num);
    long d = 1;
    if (peek().kind == Tok::Slash) {
      advance();
      Token den = expect(Tok::Int, "integer denominator");
      d = parse_long(den);
      if (d == 0) throw ParseError("zero denominator", den.offset);
    }
    Expr e;
    e.kind = ExprKind::Number;
    e.value = make_rat(negative ? -n : n, d);
    e.offset = offset;
    return e;
  }

  Expr parse_expr() {
    Expr lhs = parse_term();
    while (peek().kind == Tok::Plus || peek().kind == Tok::Minus) {
      bool plus = advance().kind == Tok::Plus;
      Expr rhs = parse_term();
      Expr node;
      node.kind = plus ? ExprKind::Add : ExprKind::Sub;
      node.offset = lhs.offset;
      node.children = {std::move(lhs), std::move(rhs)};
      lhs = std::move(node);
    }
    return lhs;
  }

  Expr parse_term() {
    Expr lhs = parse_factor();
    while (peek().kind == Tok::Star) {
      advance();
      Expr rhs = parse_factor();
      Expr node;
      node.kind = ExprKind::Mul;
      node.offset = lhs.offset;
      node.children = {std::move(lhs), std::move(rhs)};
      lhs = std::move(node);
    }
    return lhs;
  }

  Expr parse_factor() {
    Expr e = parse_primary();
    while (peek().kind == Tok::Caret) {
      advance();
      expect(Tok::LParen, "'(' after '^'");
      long k = parse_uint("nonnegative integer exponent");
      expect(Tok::RParen, "')'");
      Expr node;
      node.kind = ExprKind::DividedPower;
      node.k = k;
      node.offset = e.offset;
      node.children = {std::move(e)};
      e = std::move(node);
    }
    return e;
  }

  Expr call_1(ExprKind kind, std::size_t offset) {
    expect(Tok::LParen, "'('");
    Expr arg = parse_expr();
    expect(Tok::RParen, "')'");
    Expr node;
    node.kind = kind;
    node.offset = offset;
    node.children = {std::move(arg)};
    return node;
  }

  Expr parse_primary() {
    const Token& t = peek();
    switch (t.kind) {
      case Tok::Int:
        return parse_number(t.offset, false);
      case Tok::Minus: {
        std::size_t off = advance().offset;
        if (peek().kind == Tok::Int) return parse_number(off, true);
        Expr child = parse_factor();
        Expr node;
        node.kind = ExprKind::Neg;
        node.offset = off;
        node.children = {std::move(child)};
        return node;
      }
      case Tok::LParen: {
        advance();
        Expr e = parse_expr();
        expect(Tok::RParen, "')'");
        return e;
      }
      case Tok::Word:
        return parse_word();
      default:
        fail("a number, generator, 'u', 'v', '-', '(', or function name");
    }
  }

  Expr parse_word() {
    Token t = advance();
    const std::string& w = t.text;
    if (w == "u" || w == "v") {
      Expr e;
      e.kind = ExprKind::Var;
      e.var = w[0];
      e.offset = t.offset;
      return e;
    }
    if (w == "exp") return call_1(ExprKind::Exp, t.offset);
    if (w == "ln") return call_1(ExprKind::Ln, t.offset);
    if (w == "inv") return call_1(ExprKind::Inv, t.offset);
    if (w == "root") {
      expect(Tok::LParen, "'('");
      Expr arg = parse_expr();
      expect(Tok::Comma, "','");
      long m = parse_sint("nonzero integer root index");
      Token closing = expect(Tok::RParen, "')'");
      if (m == 0)
        throw ParseError("root index must be nonzero", closing.offset);
      Expr node;
      node.kind = ExprKind::Root;
      node.k = m;
      node.offset = t.offset;
      node.children = {std::move(arg)};
      return node;
    }
    if (w == "pow1p") {
      expect(Tok::LParen, "'('");
      Expr arg = parse_expr();
      expect(Tok::Comma, "','");
      bool neg = false;
      if (peek().kind == Tok::Minus) {
        advance();
        neg = true;
      }
      Expr num = parse_number(peek().offset, neg);
      expect(Tok::RParen, "')'");
      Expr node;
      node.kind = ExprKind::Pow1p;
      node.value = num.value;
      node.offset = t.offset;
      node.children = {std::move(arg)};
      return node;
    }
    if (w == "C") {
      expect(Tok::LParen, "'('");
      Expr arg = parse_expr();
      expect(Tok::Comma, "','");
      long k = parse_uint("nonnegative integer");
      expect(Tok::RParen, "')'");
      Expr node;
      node.kind = ExprKind::Binom;
      node.k = k;
      node.offset = t.offset;
      node.children = {std::move(arg)};
      return node;
    }
    if (w == "x" || w == "X") {
      Expr e;
      e.kind = ExprKind::Gen;
      e.family = w[0];
      e.offset = t.offset;
      if (peek().kind == Tok::Plus)
        e.sign = +1;
      else if (peek().kind == Tok::Minus)
        e.sign = -1;
      else
        fail(fmt::format("'+' or '-' after '{}'", w));
      advance();
      expect(Tok::LBracket, "'['");
      e.index = parse_sint("integer index");
      e.has_index = true;
      expect(Tok::RBracket, "']'");
      return e;
    }
    if (w == "h") {
      Expr e;
      e.kind = ExprKind::Gen;
      e.family = 'h';
      e.offset = t.offset;
      if (peek().kind == Tok::LBracket) {
        advance();
        e.index = parse_sint("integer index");
        e.has_index = true;
        expect(Tok::RBracket, "']'");
      }
      return e;
    }
    if (w == "c" || w == "e" || w == "f") {
      Expr e;
      e.kind = ExprKind::Gen;
      e.family = w[0];
      e.offset = t.offset;
      return e;
    }
    throw ParseError(
        fmt::format("unknown name '{}'; expected a generator (x, X, h, c, e, "
                    "f), a variable (u, v), or a function (exp, ln, inv, "
                    "root, pow1p, C)",
                    w),
        t.offset);
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
};

// ---------------------------------------------------------------------------
// Rendering

// Precedence levels: sums 1, products 2, prefix/postfix 3, atoms 4.
int prec(const Expr& e) {
  switch (e.kind) {
    case ExprKind::Add:
    case ExprKind::Sub:
      return 1;
    case ExprKind::Mul:
      return 2;
    case ExprKind::Neg:
    case ExprKind::DividedPower:
      return 3;
    default:
      return 4;
  }
}

std::string render_at(const Expr& e, int ctx);

std::string render_raw(const Expr& e) {
  switch (e.kind) {
    case ExprKind::Number:
      return e.value.get_str();
    case ExprKind::Gen: {
      std::string s(1, e.family);
      if (e.family == 'x' || e.family == 'X') s += e.sign > 0 ? '+' : '-';
      if (e.has_index) s += fmt::format("[{}]", e.index);
      return s;
    }
    case ExprKind::Var:
      return std::string(1, e.var);
    case ExprKind::Neg:
      return "-" + render_at(e.children[0], 4);
    case ExprKind::Add:
      return render_at(e.children[0], 1) + " + " + render_at(e.children[1], 2);
    case ExprKind::Sub:
      return render_at(e.children[0], 1) + " - " + render_at(e.children[1], 2);
    case ExprKind::Mul:
      return render_at(e.children[0], 2) + "*" + render_at(e.children[1], 3);
    case ExprKind::DividedPower:
      return render_at(e.children[0], 4) + fmt::format("^({})", e.k);
    case ExprKind::Binom:
      return fmt::format("C({}, {})", render_at(e.children[0], 1), e.k);
    case ExprKind::Exp:
      return fmt::format("exp({})", render_at(e.children[0], 1));
    case ExprKind::Ln:
      return fmt::format("ln({})", render_at(e.children[0], 1));
    case ExprKind::Inv:
      return fmt::format("inv({})", render_at(e.children[0], 1));
    case ExprKind::Root:
      return fmt::format("root({}, {})", render_at(e.children[0], 1), e.k);
    case ExprKind::Pow1p:
      return fmt::format("pow1p({}, {})", render_at(e.children[0], 1),
                         e.value.get_str());
  }
  return "";
}

std::string render_at(const Expr& e, int ctx) {
  std::string s = render_raw(e);
  return prec(e) < ctx ? "(" + s + ")" : s;
}

}  // namespace

bool operator==(const Expr& a, const Expr& b) {
  if (a.kind != b.kind || a.value != b.value || a.family != b.family ||
      a.sign != b.sign || a.index != b.index || a.has_index != b.has_index ||
      a.var != b.var || a.k != b.k || a.children.size() != b.children.size())
    return false;
  for (std::size_t i = 0; i < a.children.size(); ++i)
    if (!(a.children[i] == b.children[i])) return false;
  return true;
}

Expr parse(const std::string& text) { return Parser(text).run(); }

std::string render(const Expr& e) { return render_at(e, 1); }

std::string diagnostic(const std::string& msg, std::size_t offset,
                       const std::string& text) {
  std::string out = fmt::format("error at byte {}: {}\n", offset, msg);
  out += "  " + text + "\n";
  out += "  " + std::string(std::min(offset, text.size()), ' ') + "^";
  return out;
}

// ---------------------------------------------------------------------------
// Random trees for round-trip checks

namespace {

Expr random_node(std::mt19937_64& rng, int depth) {
  auto pick = [&](int lo, int hi) {
    return static_cast<int>(std::uniform_int_distribution<int>(lo, hi)(rng));
  };
  int roll = depth == 0 ? pick(0, 2) : pick(0, 11);
  Expr e;
  switch (roll) {
    case 0: {  // number
      e.kind = ExprKind::Number;
      e.value = make_rat(pick(-9, 9), pick(1, 9));
      return e;
    }
    case 1: {  // generator
      e.kind = ExprKind::Gen;
      const char fams[] = {'x', 'X', 'h', 'c', 'e', 'f'};
      e.family = fams[pick(0, 5)];
      if (e.family == 'x' || e.family == 'X') {
        e.sign = pick(0, 1) ? 1 : -1;
        e.index = pick(-3, 3);
        e.has_index = true;
      } else if (e.family == 'h' && pick(0, 1)) {
        e.index = pick(-3, 3);
        e.has_index = true;
      }
      return e;
    }
    case 2:  // variable
      e.kind = ExprKind::Var;
      e.var = pick(0, 1) ? 'u' : 'v';
      return e;
    case 3:
    case 4:
    case 5: {  // binary
      e.kind = roll == 3 ? ExprKind::Add : roll == 4 ? ExprKind::Sub : ExprKind::Mul;
      e.children.push_back(random_node(rng, depth - 1));
      e.children.push_back(random_node(rng, depth - 1));
      return e;
    }
    case 6: {  // negation (never directly of a literal, which renders signed)
      e.kind = ExprKind::Neg;
      Expr c = random_node(rng, depth - 1);
      while (c.kind == ExprKind::Number) c = random_node(rng, depth - 1);
      e.children.push_back(std::move(c));
      return e;
    }
    case 7:
      e.kind = ExprKind::DividedPower;
      e.k = pick(0, 4);
      e.children.push_back(random_node(rng, depth - 1));
      return e;
    case 8:
      e.kind = ExprKind::Binom;
      e.k = pick(0, 4);
      e.children.push_back(random_node(rng, depth - 1));
      return e;
    case 9: {
      int f = pick(0, 2);
      e.kind = f == 0 ? ExprKind::Exp : f == 1 ? ExprKind::Ln : ExprKind::Inv;
      e.children.push_back(random_node(rng, depth - 1));
      return e;
    }
    case 10:
      e.kind = ExprKind::Root;
      e.k = pick(1, 4);
      e.children.push_back(random_node(rng, depth - 1));
      return e;
    default:
      e.kind = ExprKind::Pow1p;
      e.value = make_rat(pick(-5, 5), pick(1, 4));
      e.children.push_back(random_node(rng, depth - 1));
      return e;
  }
}

}  // namespace

Expr random_expr(std::uint64_t seed) {
  std::mt19937_64 rng(seed * 0x9e3779b97f4a7c15ull + 1);
  return random_node(rng, 4);
}

// ---------------------------------------------------------------------------
// Evaluation

namespace {

Generator resolve_gen(const Expr& g, const AlgebraId& alg) {
  auto err = [&](const std::string& m) -> Generator {
    throw EvalError(m, g.offset);
  };
  bool affine = alg.kind == AlgKind::A1_1 || alg.kind == AlgKind::A2_2;
  switch (g.family) {
    case 'e':
    case 'f':
      if (alg.kind != AlgKind::SL2)
        return err(fmt::format(
            "generator '{}' is only defined for sl2; use x+[r]/x-[r] on {}",
            g.family, alg.name()));
      return make_gen(alg, g.family == 'e' ? GenKind::E : GenKind::F);
    case 'h':
      if (alg.kind == AlgKind::SL2) {
        if (g.has_index && g.index != 0)
          return err("sl2 has a single Cartan generator; write 'h'");
        return make_gen(alg, GenKind::H0);
      }
      if (!affine)
        return err(fmt::format("no 'h' generator in algebra {}", alg.name()));
      return make_gen(alg, GenKind::H, g.has_index ? static_cast<int>(g.index) : 0);
    case 'c':
      if (!affine)
        return err(fmt::format("no central 'c' in algebra {}", alg.name()));
      return make_gen(alg, GenKind::C);
    case 'x':
      if (!affine)
        return err(fmt::format(
            "loop generators x+/x- are not defined for algebra {}", alg.name()));
      return make_gen(alg, g.sign > 0 ? GenKind::XP : GenKind::XM,
                      static_cast<int>(g.index));
    case 'X':
      if (alg.kind != AlgKind::A2_2)
        return err(fmt::format(
            "long generators X+/X- are only defined for a2_2, not {}",
            alg.name()));
      if (g.index % 2 == 0)
        return err(fmt::format(
            "long generator index must be odd: X{}[{}] does not exist",
            g.sign > 0 ? '+' : '-', g.index));
      return make_gen(alg, g.sign > 0 ? GenKind::XXP : GenKind::XXM,
                      static_cast<int>(g.index));
    default:
      return err("unknown generator");
  }
}

UEASeries const_elem(int cap, const UEAElement& e) {
  UEASeries s(cap, uea_one());
  s.set(0, 0, e);
  return s;
}

bool constant_is_one(const UEASeries& s) { return s.get(0, 0) == uea_one(); }

UEASeries eval_node(const Expr& e, const EvalConfig& cfg) {
  int cap = cfg.order;
  switch (e.kind) {
    case ExprKind::Number:
      return const_elem(cap, uea_one().scaled(e.value));
    case ExprKind::Gen:
      return const_elem(cap, uea_gen(resolve_gen(e, cfg.algebra)));
    case ExprKind::Var:
      return tensor(scalar_mono(cap, e.var == 'u' ? 1 : 0, e.var == 'u' ? 0 : 1),
                    uea_one());
    case ExprKind::Neg:
      return eval_node(e.children[0], cfg).scaled(Rat(-1));
    case ExprKind::Add:
      return eval_node(e.children[0], cfg) + eval_node(e.children[1], cfg);
    case ExprKind::Sub:
      return eval_node(e.children[0], cfg) - eval_node(e.children[1], cfg);
    case ExprKind::Mul:
      return eval_node(e.children[0], cfg) * eval_node(e.children[1], cfg);
    case ExprKind::DividedPower: {
      const Expr& child = e.children[0];
      if (child.kind == ExprKind::Gen)
        return const_elem(
            cap, divided_power(resolve_gen(child, cfg.algebra),
                               static_cast<int>(e.k)));
      UEASeries s = eval_node(child, cfg);
      if (s.has_constant_term())
        throw EvalError(
            "divided power requires a single generator or a series without "
            "constant term",
            child.offset);
      if (!check_pairwise_commuting(s))
        throw EvalError("divided power of a sum of non-commuting terms",
                        child.offset);
      return divided_power_series(s, static_cast<int>(e.k));
    }
    case ExprKind::Binom: {
      UEASeries s = eval_node(e.children[0], cfg);
      LieElement z;
      Rat offset(0);
      for (const auto& [key, coeff] : s.terms()) {
        if (key != std::pair{0, 0})
          throw EvalError("binomial argument must not involve u or v",
                          e.children[0].offset);
        for (const auto& [mono, c] : coeff.terms()) {
          if (mono.empty()) {
            offset += c;
            continue;
          }
          bool cartan =
              mono.size() == 1 && mono[0].second == 1 &&
              (mono[0].first.kind == GenKind::C ||
               mono[0].first.kind == GenKind::H0 ||
               (mono[0].first.kind == GenKind::H && mono[0].first.index == 0));
          if (!cartan)
            throw EvalError(
                "binomial argument must be a rational combination of h, c, "
                "and constants",
                e.children[0].offset);
          z.add_term(mono[0].first, c);
        }
      }
      return const_elem(cap, binomial_of(z, offset, static_cast<int>(e.k)));
    }
    case ExprKind::Exp: {
      UEASeries s = eval_node(e.children[0], cfg);
      if (s.has_constant_term())
        throw EvalError("exp requires a series without constant term",
                        e.children[0].offset);
      return exp_series(s);
    }
    case ExprKind::Ln: {
      UEASeries s = eval_node(e.children[0], cfg);
      if (!constant_is_one(s))
        throw EvalError("ln requires a series with constant term 1",
                        e.children[0].offset);
      return log_series(s);
    }
    case ExprKind::Inv: {
      UEASeries s = eval_node(e.children[0], cfg);
      if (!constant_is_one(s))
        throw EvalError("inv requires a series with constant term 1",
                        e.children[0].offset);
      return invert_series(s);
    }
    case ExprKind::Root: {
      UEASeries s = eval_node(e.children[0], cfg);
      if (!constant_is_one(s))
        throw EvalError("root requires a series with constant term 1",
                        e.children[0].offset);
      return root_series(s, static_cast<int>(e.k));
    }
    case ExprKind::Pow1p: {
      UEASeries s = eval_node(e.children[0], cfg);
      if (s.has_constant_term())
        throw EvalError("pow1p requires a series without constant term",
                        e.children[0].offset);
      return pow_one_plus(s, e.value);
    }
  }
  throw EvalError("unreachable expression kind", e.offset);
}

}  // namespace

UEASeries evaluate(const Expr& e, const EvalConfig& cfg) {
  if (cfg.order < 0) throw EvalError("order must be nonnegative", e.offset);
  return eval_node(e, cfg);
}

// ---------------------------------------------------------------------------
// Command layer

namespace {

// PBW rendering with the longest monomials first (the straightened products),
// then ties in basis order; sign handling as in render_uea.
std::string render_pbw_sorted(const UEAElement& e) {
  if (e.is_zero()) return "0";
  std::vector<std::pair<const PBWMonomial*, const Rat*>> terms;
  for (const auto& [m, c] : e.terms()) terms.push_back({&m, &c});
  auto length = [](const PBWMonomial& m) {
    long n = 0;
    for (const auto& [g, k] : m) n += k;
    return n;
  };
  std::stable_sort(terms.begin(), terms.end(),
                   [&](const auto& a, const auto& b) {
                     return length(*a.first) > length(*b.first);
                   });
  std::string s;
  for (const auto& [m, c] : terms) {
    if (!s.empty())
      s += (*c > 0) ? " + " : " - ";
    else if (*c < 0)
      s += "-";
    Rat a = abs(*c);
    if (m->empty())
      s += a.get_str();
    else if (a == 1)
      s += render_monomial(*m);
    else
      s += a.get_str() + "*" + render_monomial(*m);
  }
  return s;
}

std::string basis_name(ZBasis b) {
  return b == ZBasis::Drinfeld ? "drinfeld" : "mitzman";
}

struct ParsedInput {
  Expr ast;
  UEASeries series;
};

// Shared front end: parse + evaluate, converting failures into a status-2
// CommandResult.
std::optional<ParsedInput> eval_input(const std::string& text,
                                      const CommandConfig& cfg, int order,
                                      CommandResult& res) {
  try {
    Expr ast = parse(text);
    UEASeries s = evaluate(ast, {cfg.algebra, order});
    return ParsedInput{std::move(ast), std::move(s)};
  } catch (const ParseError& ex) {
    res.status = 2;
    res.error = diagnostic(ex.what(), ex.offset, text);
  } catch (const EvalError& ex) {
    res.status = 2;
    res.error = diagnostic(ex.what(), ex.offset, text);
  }
  return std::nullopt;
}

bool element_only(const UEASeries& s) {
  for (const auto& [key, c] : s.terms())
    if (key != std::pair{0, 0}) return false;
  return true;
}

}  // namespace

CommandResult cmd_straighten(const std::string& text, const CommandConfig& cfg) {
  CommandResult res;
  int order = cfg.order.value_or(8);
  auto in = eval_input(text, cfg, order, res);
  if (!in) return res;
  const UEASeries& S = in->series;

  // Integrality across all bidegrees; first witness wins.
  bool integral = true;
  std::optional<std::tuple<int, int, ZMonomial, Rat>> witness;
  for (const auto& [key, coeff] : S.terms()) {
    ZFormCheck chk = is_in_Z_form(coeff);
    if (!chk.integral) {
      integral = false;
      witness = {key.first, key.second, chk.witness->first, chk.witness->second};
      break;
    }
  }

  bool elem = element_only(S);
  if (cfg.json) {
    json j;
    j["input"] = text;
    j["algebra"] = cfg.algebra.name();
    j["order"] = order;
    json pbw = json::array();
    for (const auto& [key, coeff] : S.terms())
      pbw.push_back({{"deg_u", key.first},
                     {"deg_v", key.second},
                     {"value", render_pbw_sorted(coeff)}});
    j["pbw"] = pbw;
    j["integral"] = integral;
    if (witness) {
      auto& [du, dv, zm, c] = *witness;
      j["witness"] = {{"deg_u", du},
                      {"deg_v", dv},
                      {"monomial", render_zmonomial(cfg.algebra, zm, ZBasis::Drinfeld)},
                      {"coefficient", render_rat(c)}};
    } else {
      j["witness"] = nullptr;
    }
    if (elem) {
      json coords = json::array();
      for (const auto& [zm, c] : integral_coordinates(S.get(0, 0)))
        coords.push_back(
            {{"monomial", render_zmonomial(cfg.algebra, zm, ZBasis::Drinfeld)},
             {"coefficient", render_rat(c)}});
      j["coordinates"] = coords;
    } else {
      j["coordinates"] = nullptr;
    }
    res.output = j.dump(2);
    return res;
  }

  std::string out;
  if (elem) {
    out += render_pbw_sorted(S.get(0, 0)) + "\n";
  } else {
    for (const auto& [key, coeff] : S.terms())
      out += fmt::format("u^{}*v^{}: {}\n", key.first, key.second,
                         render_pbw_sorted(coeff));
  }
  out += fmt::format("integral: {}\n", integral ? "yes" : "no");
  if (witness) {
    auto& [du, dv, zm, c] = *witness;
    out += fmt::format("witness: {} -> {} (at u^{}*v^{})\n",
                       render_zmonomial(cfg.algebra, zm, ZBasis::Drinfeld),
                       render_rat(c), du, dv);
  }
  if (elem && !S.get(0, 0).is_zero()) {
    out += "coordinates:\n";
    for (const auto& [zm, c] : integral_coordinates(S.get(0, 0)))
      out += fmt::format("  {}: {}\n",
                         render_zmonomial(cfg.algebra, zm, ZBasis::Drinfeld),
                         render_rat(c));
  }
  res.output = out;
  return res;
}

CommandResult cmd_verify(const std::string& tag_or_all, const CommandConfig& cfg) {
  CommandResult res;
  VerifyOptions vo;
  vo.order = cfg.order;
  vo.ceiling_ms = cfg.ceiling_ms;
  try {
    std::vector<Report> reports;
    if (tag_or_all == "all")
      reports = run_all(vo, cfg.parallel);
    else
      reports.push_back(verify(tag_or_all, vo));
    res.output = cfg.json ? reports_to_json(reports) : reports_to_table(reports);
    for (const auto& r : reports)
      if (!r.pass) res.status = 1;
  } catch (const CostCeilingError& ex) {
    res.status = 2;
    res.error = fmt::format("refused: {}", ex.what());
  } catch (const std::invalid_argument& ex) {
    res.status = 2;
    res.error = ex.what();
  }
  return res;
}

CommandResult cmd_symfun(const std::string& what, const std::string& series,
                         const std::string& family, int upto,
                         const CommandConfig& cfg) {
  CommandResult res;
  if (upto < 1) {
    res.status = 2;
    res.error = "--upto must be at least 1";
    return res;
  }

  if (what == "is-integral") {
    std::vector<SymFunc> vec;
    if (series == "hat")
      vec = hat_h(upto);
    else if (series == "tilde")
      vec = tilde_h(upto);
    else if (series == "d")
      vec = hd(upto);
    else {
      res.status = 2;
      res.error = fmt::format("unknown --series '{}'; expected hat, tilde, or d",
                              series);
      return res;
    }
    if (family != "hat" && family != "tilde") {
      res.status = 2;
      res.error =
          fmt::format("unknown --family '{}'; expected hat or tilde", family);
      return res;
    }
    GeneratorFamily fam = family == "hat" ? family_hat() : family_tilde();
    bool pass = true;
    std::optional<std::tuple<int, Partition, Rat>> first;
    std::vector<bool> per_n;
    for (int n = 1; n <= upto; ++n) {
      IntegralityResult r = is_integral(vec[static_cast<std::size_t>(n)], fam);
      per_n.push_back(r.integral);
      if (!r.integral && pass) {
        pass = false;
        first = {n, r.witness->monomial, r.witness->coefficient};
      }
    }
    auto render_fam_mono = [&](const Partition& p) {
      std::string s = family + "[";
      for (std::size_t i = 0; i < p.size(); ++i)
        s += (i ? "," : "") + std::to_string(p[i]);
      return s + "]";
    };
    if (cfg.json) {
      json j;
      j["series"] = series;
      j["family"] = family;
      j["upto"] = upto;
      j["pass"] = pass;
      json per = json::array();
      for (int n = 1; n <= upto; ++n)
        per.push_back({{"n", n}, {"integral", static_cast<bool>(per_n[static_cast<std::size_t>(n - 1)])}});
      j["per_degree"] = per;
      if (first) {
        auto& [n, mono, c] = *first;
        j["first_failure"] = {{"n", n},
                              {"monomial", render_fam_mono(mono)},
                              {"coefficient", render_rat(c)}};
      } else {
        j["first_failure"] = nullptr;
      }
      res.output = j.dump(2);
    } else {
      std::string out = fmt::format("series: {}  family: {}  upto: {}\n",
                                    series, family, upto);
      for (int n = 1; n <= upto; ++n)
        out += fmt::format("n={}: {}\n", n,
                           per_n[static_cast<std::size_t>(n - 1)]
                               ? "integral"
                               : "not integral");
      if (first) {
        auto& [n, mono, c] = *first;
        out += fmt::format("first failure: n={} coefficient {} on {}\n", n,
                           render_rat(c), render_fam_mono(mono));
      }
      out += fmt::format("result: {}\n", pass ? "true" : "false");
      res.output = out;
    }
    return res;
  }

  if (what == "hat" || what == "tilde") {
    GeneratorFamily fam = what == "hat" ? family_hat() : family_tilde();
    if (cfg.json) {
      json arr = json::array();
      for (int n = 1; n <= upto; ++n)
        arr.push_back({{"n", n}, {"value", render_symfunc(fam.g(n))}});
      res.output = arr.dump(2);
    } else {
      std::string out;
      for (int n = 1; n <= upto; ++n)
        out += fmt::format("{}[{}] = {}\n", what, n, render_symfunc(fam.g(n)));
      res.output = out;
    }
    return res;
  }

  if (what == "garland") {
    GarlandCheck g = verify_garland_basis(upto);
    if (cfg.json) {
      json j;
      j["upto"] = upto;
      j["pass"] = g.ok;
      j["detail"] = g.detail;
      res.output = j.dump(2);
    } else {
      res.output = fmt::format("{}: {}\n", g.ok ? "pass" : "FAIL", g.detail);
    }
    res.status = g.ok ? 0 : 1;
    return res;
  }

  res.status = 2;
  res.error = fmt::format(
      "unknown symfun subcommand '{}'; expected is-integral, hat, tilde, or "
      "garland",
      what);
  return res;
}

CommandResult cmd_coords(const std::string& text, const CommandConfig& cfg) {
  CommandResult res;
  if (cfg.basis == ZBasis::Mitzman && cfg.algebra.kind != AlgKind::A2_2) {
    res.status = 2;
    res.error = "the mitzman basis is only defined for a2_2";
    return res;
  }
  int order = cfg.order.value_or(8);
  auto in = eval_input(text, cfg, order, res);
  if (!in) return res;
  if (!element_only(in->series)) {
    res.status = 2;
    res.error = "coords requires an element expression (no u or v)";
    return res;
  }
  UEAElement e = in->series.get(0, 0);
  IntegralCoordinates coords = cfg.basis == ZBasis::Drinfeld
                                   ? integral_coordinates(e)
                                   : mitzman_coordinates(e);
  bool integral = true;
  for (const auto& [zm, c] : coords)
    if (!is_integer(c)) integral = false;

  if (cfg.json) {
    json j;
    j["input"] = text;
    j["algebra"] = cfg.algebra.name();
    j["basis"] = basis_name(cfg.basis);
    json arr = json::array();
    for (const auto& [zm, c] : coords)
      arr.push_back({{"monomial", render_zmonomial(cfg.algebra, zm, cfg.basis)},
                     {"coefficient", render_rat(c)}});
    j["coordinates"] = arr;
    j["integral"] = integral;
    res.output = j.dump(2);
  } else {
    std::string out;
    for (const auto& [zm, c] : coords)
      out += fmt::format("{}: {}\n", render_zmonomial(cfg.algebra, zm, cfg.basis),
                         render_rat(c));
    out += fmt::format("integral: {}\n", integral ? "yes" : "no");
    res.output = out;
  }
  return res;
}

}  // namespace zform
