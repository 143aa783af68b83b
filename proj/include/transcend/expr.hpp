// Expression trees over the fixed grammar: exact constants, the variable x,
// the formal transcendental tau, named constants e/pi/i, arithmetic, integer
// powers, and applications of the supported function vocabulary.  Trees are
// immutable and shared; all operations are pure.
#pragma once

#include <complex>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "transcend/errors.hpp"
#include "transcend/rational.hpp"

namespace transcend {

enum class Func {
  Exp, Ln,
  Sin, Cos, Tan, Csc, Sec, Cot,
  Sinh, Cosh, Tanh, Coth,
  Asin, Acos, Atan, Acot, Asec, Acsc,
};

enum class BinOp { Add, Sub, Mul, Div };

enum class Named { E, Pi, I };

// Canonical lowercase name ("exp", "asin", ...).
const char* func_name(Func f);
// Accepts canonical names plus the arc- aliases ("arcsin" for "asin", ...).
std::optional<Func> func_from_name(std::string_view name);
std::optional<Named> named_from_string(std::string_view name);

class Expr {
 public:
  enum class Kind { RationalConst, NamedConst, FormalTau, Var, Binary, IntPow, Apply };

  struct Node;
  using NodePtr = std::shared_ptr<const Node>;

  // --- factories -----------------------------------------------------------
  static Expr rational(Rational r);
  static Expr integer(long long n) { return rational(Rational(n)); }
  static Expr named(Named tag);
  static Expr e() { return named(Named::E); }
  static Expr pi() { return named(Named::Pi); }
  static Expr i() { return named(Named::I); }
  static Expr tau();
  static Expr var();
  static Expr sum(Expr a, Expr b);
  static Expr difference(Expr a, Expr b);
  static Expr product(Expr a, Expr b);
  static Expr quotient(Expr a, Expr b);
  // Integer power.  Negative exponents are kept only on Var, tau, and nonzero
  // constants; 0^-n throws DivisionByZero and any other base is normalized to
  // Quotient(1, base^n).
  static Expr int_pow(Expr base, long long exponent);
  // General power, normalized at construction: integer-constant exponents
  // become IntPow, e^u becomes Apply(Exp, u), everything else becomes
  // exp(exponent * ln(base)).
  static Expr gen_pow(Expr base, Expr exponent);
  static Expr apply(Func f, Expr arg);
  // Constant folds on rationals, otherwise Product(-1, a).
  static Expr negate(Expr a);

  // --- observers -----------------------------------------------------------
  Kind kind() const;
  const Rational& rational_value() const;  // RationalConst
  Named named_tag() const;                 // NamedConst
  BinOp bin_op() const;                    // Binary
  Expr left() const;                       // Binary
  Expr right() const;                      // Binary
  Expr base() const;                       // IntPow
  long long exponent() const;              // IntPow
  Func func() const;                       // Apply
  Expr arg() const;                        // Apply

  bool is_rational(const Rational& v) const {
    return kind() == Kind::RationalConst && rational_value() == v;
  }
  bool contains_var() const;
  bool contains_tau() const;
  bool contains_named(Named tag) const;

  // Structural equality.
  friend bool operator==(const Expr& a, const Expr& b);
  friend bool operator!=(const Expr& a, const Expr& b) { return !(a == b); }

  // Minimal-parentheses round-trippable text; exact constants print as finite
  // decimals when the denominator allows, "p/q" otherwise.
  std::string to_string() const;

  const NodePtr& node() const { return node_; }
  explicit Expr(NodePtr node) : node_(std::move(node)) {}

 private:
  NodePtr node_;
};

struct Equation {
  Expr lhs;
  Expr rhs;
  std::string to_string() const { return lhs.to_string() + " = " + rhs.to_string(); }
};

inline bool operator==(const Equation& a, const Equation& b) {
  return a.lhs == b.lhs && a.rhs == b.rhs;
}

using Parsed = std::variant<Expr, Equation>;

// Parses an expression or (with a single '=') an equation.
// Throws SyntaxError / UnknownFunction.
Parsed parse(std::string_view text);
Expr parse_expr(std::string_view text);          // rejects '='
Equation parse_equation(std::string_view text);  // requires '='

// Exact constant folding; eval-preserving at non-singular points, idempotent.
Expr simplify_constants(const Expr& e);

// d/dx, with tau and named constants treated as constants; the result is
// simplify_constants-normalized.  Total on the grammar.
Expr differentiate(const Expr& e);

// Replace every occurrence of the variable x.
Expr substitute_var(const Expr& e, const Expr& replacement);

enum class EvalMode { Complex, RealOnly };

// Numeric evaluation at x = z.  Complex mode uses principal branches;
// RealOnly restricts to real arithmetic and throws DomainError outside real
// domains.  Poles are detected within 1e-14 of the exact location.
std::complex<double> eval(const Expr& e, std::complex<double> z,
                          std::optional<double> tau_value = std::nullopt,
                          EvalMode mode = EvalMode::Complex);

double eval_real(const Expr& e, double x,
                 std::optional<double> tau_value = std::nullopt);

}  // namespace transcend
