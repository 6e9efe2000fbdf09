#pragma once
// ASCII expression language and command layer for the command-line tool.
//
// Surface syntax: generators (`x+[r]`, `x-[r]`, `X+[r]`, `X-[r]`, `h[r]`,
// `h`, `c`, `e`, `f`), formal variables `u`, `v`, rational literals,
// operators `*`, `+`, `-`, the postfix divided power `^(k)`, the Cartan
// binomial `C(z,k)`, and the series functions `exp(s)`, `ln(s)`, `inv(s)`,
// `root(s,m)`, `pow1p(s,a)` = (1+s)^a.  Precedence: `^(k)` binds tightest,
// then `*`, then `+`/`-`.  The grammar is LL(1); parse errors carry the byte
// offset and the expected-token set, and parse(render(ast)) == ast.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "zform/verify.hpp"

namespace zform {

enum class ExprKind {
  Number,        // rational literal
  Gen,           // generator symbol
  Var,           // u or v
  Neg,           // -a (prefix, primary level)
  Add,           // a + b
  Sub,           // a - b
  Mul,           // a * b
  DividedPower,  // a^(k) = a^k / k!
  Binom,         // C(z, k) = z(z-1)...(z-k+1)/k!
  Exp,           // exp(s)
  Ln,            // ln(s)
  Inv,           // inv(s) = 1/s
  Root,          // root(s, m): the m-th root with constant term 1
  Pow1p,         // pow1p(s, a) = (1+s)^a
};

struct Expr {
  ExprKind kind = ExprKind::Number;
  Rat value;               // Number payload, or the Pow1p exponent
  char family = 0;         // Gen: one of x X h c e f
  int sign = +1;           // Gen: +1/-1 raising/lowering for x and X
  long index = 0;          // Gen index
  bool has_index = false;  // h vs h[r]
  char var = 0;            // Var: 'u' or 'v'
  long k = 0;              // DividedPower / Binom / Root parameter
  std::size_t offset = 0;  // byte offset in the source text, for diagnostics
  std::vector<Expr> children;
};

// Structural equality; source offsets are ignored, so a rendered-and-reparsed
// tree compares equal to the original.
bool operator==(const Expr& a, const Expr& b);
inline bool operator!=(const Expr& a, const Expr& b) { return !(a == b); }

// Syntax error: byte offset plus a rendering of the expected-token set.
struct ParseError : std::runtime_error {
  ParseError(const std::string& msg, std::size_t off)
      : std::runtime_error(msg), offset(off) {}
  std::size_t offset;
};

// Well-typedness error raised during evaluation (unknown generator for the
// configured algebra, divided power of non-commuting terms, non-Cartan
// binomial argument, wrong constant term for a series function).
struct EvalError : std::runtime_error {
  EvalError(const std::string& msg, std::size_t off)
      : std::runtime_error(msg), offset(off) {}
  std::size_t offset;
};

Expr parse(const std::string& text);

// Canonical rendering; parse(render(e)) == e for every well-formed tree
// (well-formed excludes Neg directly around a Number, which renders as the
// signed literal instead).
std::string render(const Expr& e);

// "error at byte N: <msg>" plus the offending line with a caret.
std::string diagnostic(const std::string& msg, std::size_t offset,
                       const std::string& text);

// Deterministic pseudo-random well-formed trees for round-trip tests.
Expr random_expr(std::uint64_t seed);

// ---------------------------------------------------------------------------
// Evaluation

struct EvalConfig {
  AlgebraId algebra = alg_a11();
  int order = 8;  // truncation cap for the series the expression denotes
};

// Evaluate to a truncated two-variable series with enveloping-algebra
// coefficients; an element-only expression comes back concentrated in
// bidegree (0,0).
UEASeries evaluate(const Expr& e, const EvalConfig& cfg);

// ---------------------------------------------------------------------------
// Command layer (shared by the CLI binary and the tests)

struct CommandConfig {
  AlgebraId algebra = alg_a11();
  std::optional<int> order;  // unset: per-command / per-entry default
  bool json = false;
  double ceiling_ms = 600000.0;
  ZBasis basis = ZBasis::Drinfeld;  // coords
  bool parallel = false;            // verify
};

struct CommandResult {
  int status = 0;      // 0 ok; 1 failed check; 2 usage/parse/type error
  std::string output;  // for stdout
  std::string error;   // for stderr
};

// PBW form, integral coordinates and the integrality verdict of an
// expression.  For element expressions the first output line is the PBW
// normal form itself.
CommandResult cmd_straighten(const std::string& text, const CommandConfig& cfg);

// Run one catalog entry (or "all"); reports as table or JSON.
CommandResult cmd_verify(const std::string& tag_or_all, const CommandConfig& cfg);

// what = "is-integral" (--series hat|tilde|d against --family hat|tilde),
// "hat" / "tilde" (print the family members), or "garland" (change-of-basis
// check); `upto` bounds the degree.
CommandResult cmd_symfun(const std::string& what, const std::string& series,
                         const std::string& family, int upto,
                         const CommandConfig& cfg);

// Integral coordinates of an element expression in the chosen basis.
CommandResult cmd_coords(const std::string& text, const CommandConfig& cfg);

}  // namespace zform
