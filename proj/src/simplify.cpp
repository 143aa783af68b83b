// Exact constant folding.  Bottom-up, eval-preserving at non-singular points,
// idempotent by construction (folded results are already normal forms).
#include "transcend/expr.hpp"

namespace transcend {

namespace {

bool is_const(const Expr& e) { return e.kind() == Expr::Kind::RationalConst; }

// Nonzero constant in the structural sense: safe to cancel against.
bool is_nonzero_const(const Expr& e) {
  switch (e.kind()) {
    case Expr::Kind::RationalConst:
      return !e.rational_value().is_zero();
    case Expr::Kind::NamedConst:
    case Expr::Kind::FormalTau:
      return true;
    default:
      return false;
  }
}

Expr fold_binary(BinOp op, const Expr& a, const Expr& b) {
  if (is_const(a) && is_const(b)) {
    const Rational& x = a.rational_value();
    const Rational& y = b.rational_value();
    switch (op) {
      case BinOp::Add: return Expr::rational(x + y);
      case BinOp::Sub: return Expr::rational(x - y);
      case BinOp::Mul: return Expr::rational(x * y);
      case BinOp::Div:
        if (y.is_zero()) {
          throw DivisionByZero("constant quotient with zero denominator");
        }
        return Expr::rational(x / y);
    }
  }
  const Rational zero(0), one(1);
  switch (op) {
    case BinOp::Add:
      if (a.is_rational(zero)) return b;
      if (b.is_rational(zero)) return a;
      break;
    case BinOp::Sub:
      if (b.is_rational(zero)) return a;
      break;
    case BinOp::Mul:
      if (a.is_rational(zero) || b.is_rational(zero)) return Expr::integer(0);
      if (a.is_rational(one)) return b;
      if (b.is_rational(one)) return a;
      break;
    case BinOp::Div:
      if (b.is_rational(zero)) {
        throw DivisionByZero("constant quotient with zero denominator");
      }
      if (b.is_rational(one)) return a;
      if (a.is_rational(zero) && is_nonzero_const(b)) return Expr::integer(0);
      break;
  }
  switch (op) {
    case BinOp::Add: return Expr::sum(a, b);
    case BinOp::Sub: return Expr::difference(a, b);
    case BinOp::Mul: return Expr::product(a, b);
    case BinOp::Div: return Expr::quotient(a, b);
  }
  return Expr::sum(a, b);  // unreachable
}

}  // namespace

Expr simplify_constants(const Expr& e) {
  switch (e.kind()) {
    case Expr::Kind::RationalConst:
    case Expr::Kind::NamedConst:
    case Expr::Kind::FormalTau:
    case Expr::Kind::Var:
      return e;
    case Expr::Kind::Binary:
      return fold_binary(e.bin_op(), simplify_constants(e.left()),
                         simplify_constants(e.right()));
    case Expr::Kind::IntPow: {
      Expr base = simplify_constants(e.base());
      long long n = e.exponent();
      if (n == 0) return Expr::integer(1);  // 0^0 = 1 by eval convention
      if (n == 1) return base;
      if (is_const(base)) {
        if (n < 0 && base.rational_value().is_zero()) {
          throw DivisionByZero("0 raised to a negative power");
        }
        return Expr::rational(base.rational_value().pow(n));
      }
      return Expr::int_pow(base, n);
    }
    case Expr::Kind::Apply: {
      Expr arg = simplify_constants(e.arg());
      if (e.func() == Func::Exp && arg.is_rational(Rational(0))) {
        return Expr::integer(1);
      }
      if (e.func() == Func::Ln) {
        if (arg.is_rational(Rational(1))) return Expr::integer(0);
        if (arg.kind() == Expr::Kind::NamedConst &&
            arg.named_tag() == Named::E) {
          return Expr::integer(1);
        }
      }
      return Expr::apply(e.func(), arg);
    }
  }
  return e;  // unreachable
}

}  // namespace transcend
