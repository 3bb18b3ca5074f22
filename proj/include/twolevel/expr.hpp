#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "twolevel/errors.hpp"

namespace twolevel {

// ---------------------------------------------------------------------------
// Extended-real evaluation result. Exceptional values travel in-band: a
// division by zero with nonzero numerator yields a signed infinity (the
// denominator is treated as +0, i.e. the limit from the side where it is
// positive), while 0/0, log of a nonpositive argument, sqrt/even-root of a
// negative argument and inf-inf style indeterminates yield Undefined.
// ---------------------------------------------------------------------------
struct EvalResult {
  enum class Kind : std::uint8_t { Finite, PosInf, NegInf, Undefined };
  Kind kind = Kind::Undefined;
  double value = 0.0;  // meaningful only when kind == Finite

  bool finite() const { return kind == Kind::Finite; }
  bool undefined() const { return kind == Kind::Undefined; }
  bool infinite() const { return kind == Kind::PosInf || kind == Kind::NegInf; }

  // Finite value, or +-HUGE_VAL / NaN for the exceptional kinds.
  double as_double() const;

  static EvalResult from_double(double v);
  static EvalResult finite_value(double v) { return {Kind::Finite, v}; }
};

// ---------------------------------------------------------------------------
// Immutable expression tree over one real variable `x`.
// Node set: constant, variable, add, sub, mul, div, rational power,
// exp, log, sqrt, sinh, cosh, tanh.
// ---------------------------------------------------------------------------
enum class ExprKind : std::uint8_t {
  Constant,
  Variable,
  Add,
  Sub,
  Mul,
  Div,
  Pow,  // rational exponent pow_num / pow_den, pow_den >= 1
  Exp,
  Log,
  Sqrt,
  Sinh,
  Cosh,
  Tanh,
};

class Expr;
using ExprPtr = std::shared_ptr<const Expr>;

class Expr {
 public:
  ExprKind kind;
  double constant = 0.0;                  // Constant
  long long pow_num = 1, pow_den = 1;     // Pow
  ExprPtr a, b;                           // children (b only for binary ops)

  explicit Expr(ExprKind k) : kind(k) {}
};

// Factory functions with peephole constant folding. Folding only fires when
// the folded value is finite, so pole/indeterminate structure written by the
// user survives (e.g. x/x stays a quotient). The one semantic shortcut is
// 0*f -> 0 and 0/f -> 0, which differentiation relies on to keep derivative
// trees small.
ExprPtr constant(double v);
ExprPtr variable();
ExprPtr add(ExprPtr a, ExprPtr b);
ExprPtr sub(ExprPtr a, ExprPtr b);
ExprPtr mul(ExprPtr a, ExprPtr b);
ExprPtr div(ExprPtr a, ExprPtr b);
ExprPtr negate(ExprPtr a);
ExprPtr pow_rat(ExprPtr a, long long num, long long den = 1);
ExprPtr exp_(ExprPtr a);
ExprPtr log_(ExprPtr a);
ExprPtr sqrt_(ExprPtr a);
ExprPtr sinh_(ExprPtr a);
ExprPtr cosh_(ExprPtr a);
ExprPtr tanh_(ExprPtr a);

// Parse expression text. Grammar (a superset of the documented core grammar:
// leading unary minus and signed exponents are accepted):
//   expr     := ['+'|'-'] term (('+'|'-') term)*
//   term     := factor (('*'|'/') factor)*
//   factor   := base ('^' exponent)?
//   base     := number | 'x' | func '(' expr ')' | '(' expr ')'
//   func     := exp | log | sqrt | sinh | cosh | tanh
//   exponent := ['-'] integer | '(' ['-'] integer ['/' integer] ')'
// Throws ParseError with byte offset and expected-token message.
ExprPtr parse(std::string_view text);

// Exact symbolic derivative; every representable expression stays inside the
// node set. order must be in 1..3.
ExprPtr differentiate(const ExprPtr& f, int order = 1);

// Recursive AST evaluation (reference path; the compiled tape below is the
// fast path and must agree bit-for-bit).
EvalResult evaluate(const ExprPtr& f, double x);

// Render as parseable text (used by reports and debugging).
std::string to_string(const ExprPtr& f);

// ---------------------------------------------------------------------------
// Flat postfix tape compiled from an expression DAG. Shared subtrees are
// evaluated once into a slot. Evaluation is pure and thread-safe.
// ---------------------------------------------------------------------------
class CompiledExpr {
 public:
  CompiledExpr() = default;
  explicit CompiledExpr(const ExprPtr& f);

  double eval_raw(double x) const;  // NaN encodes Undefined, +-inf pass through
  EvalResult eval(double x) const { return EvalResult::from_double(eval_raw(x)); }

  std::size_t size() const { return ops_.size(); }

 private:
  enum class Code : std::uint8_t {
    PushConst, PushX, LoadSlot, StoreSlot,
    Add, Sub, Mul, Div, Pow, Exp, Log, Sqrt, Sinh, Cosh, Tanh,
  };
  struct Op {
    Code code;
    std::int32_t slot = 0;
    double imm = 0.0;
    long long p = 0, q = 1;
  };
  std::vector<Op> ops_;
  int n_slots_ = 0;
  int max_stack_ = 0;
};

// ---------------------------------------------------------------------------
// A parsed function bundled with its first three exact symbolic derivatives,
// compiled for fast evaluation. Immutable and safe for concurrent use.
// ---------------------------------------------------------------------------
class ParsedFunction {
 public:
  explicit ParsedFunction(ExprPtr base_expr);
  static ParsedFunction from_text(std::string_view text) { return ParsedFunction(parse(text)); }

  const ExprPtr& base() const { return exprs_[0]; }
  const ExprPtr& d1() const { return exprs_[1]; }
  const ExprPtr& d2() const { return exprs_[2]; }
  const ExprPtr& d3() const { return exprs_[3]; }
  const ExprPtr& deriv(int order) const { return exprs_.at(static_cast<std::size_t>(order)); }

  EvalResult operator()(double x) const { return tapes_[0].eval(x); }
  EvalResult eval(double x) const { return tapes_[0].eval(x); }
  EvalResult eval_deriv(int order, double x) const {
    return tapes_.at(static_cast<std::size_t>(order)).eval(x);
  }
  double raw(int order, double x) const {
    return tapes_[static_cast<std::size_t>(order)].eval_raw(x);
  }

 private:
  std::vector<ExprPtr> exprs_;        // f, f', f'', f'''
  std::vector<CompiledExpr> tapes_;
};

// ---------------------------------------------------------------------------
// Root and pole location on a finite interval.
// ---------------------------------------------------------------------------
struct Root {
  enum class Kind : std::uint8_t { Zero, Pole };
  double location = 0.0;
  Kind kind = Kind::Zero;
  double residual = 0.0;  // |f(root)| for zeros, |1/f(root)| for poles
};

struct RootSet {
  std::vector<Root> roots;               // strictly increasing locations
  std::vector<std::string> warnings;     // resolution warnings, near-touch dips

  std::size_t size() const { return roots.size(); }
  bool empty() const { return roots.empty(); }
  const Root& operator[](std::size_t i) const { return roots[i]; }
};

// All sign-change roots of f at the scan resolution, refined by bisection and
// Newton polish. Every reported zero is verified simple; an even-order touch
// (|f'| below tolerance at the root) throws SimplicityViolation. A pair of
// roots closer than one scan cell is reported in RootSet::warnings.
RootSet locate_roots(const ParsedFunction& f, std::pair<double, double> interval,
                     int scan_points = 2048);

// Simple poles, found as sign-change zeros of 1/f that pass a magnitude
// growth test; (x - p) * f(x) must tend to a finite nonzero residue from both
// sides, otherwise SimplicityViolation.
RootSet locate_poles(const ParsedFunction& f, std::pair<double, double> interval,
                     int scan_points = 2048);

}  // namespace twolevel
