// Symbolic differentiation d/dx; tau and the named constants differentiate
// to 0, inverse functions use the principal-branch derivatives with square
// roots expressed through the GenPow normalization exp(r*ln(u)).
#include "transcend/expr.hpp"

namespace transcend {

namespace {

Expr sqrt_of(const Expr& u) {
  return Expr::gen_pow(u, Expr::rational(Rational(Int(1), Int(2))));
}

Expr one_minus_sq(const Expr& u) {
  return Expr::difference(Expr::integer(1), Expr::int_pow(u, 2));
}

// d f(u) / du
Expr func_derivative(Func f, const Expr& u) {
  switch (f) {
    case Func::Exp:
      return Expr::apply(Func::Exp, u);
    case Func::Ln:
      return Expr::quotient(Expr::integer(1), u);
    case Func::Sin:
      return Expr::apply(Func::Cos, u);
    case Func::Cos:
      return Expr::negate(Expr::apply(Func::Sin, u));
    case Func::Tan:  // canonical form 1 + tan^2
      return Expr::sum(Expr::integer(1),
                       Expr::int_pow(Expr::apply(Func::Tan, u), 2));
    case Func::Cot:  // canonical form -(1 + cot^2)
      return Expr::negate(Expr::sum(
          Expr::integer(1), Expr::int_pow(Expr::apply(Func::Cot, u), 2)));
    case Func::Sec:
      return Expr::product(Expr::apply(Func::Sec, u), Expr::apply(Func::Tan, u));
    case Func::Csc:
      return Expr::negate(Expr::product(Expr::apply(Func::Csc, u),
                                        Expr::apply(Func::Cot, u)));
    case Func::Sinh:
      return Expr::apply(Func::Cosh, u);
    case Func::Cosh:
      return Expr::apply(Func::Sinh, u);
    case Func::Tanh:
      return Expr::difference(Expr::integer(1),
                              Expr::int_pow(Expr::apply(Func::Tanh, u), 2));
    case Func::Coth:
      return Expr::difference(Expr::integer(1),
                              Expr::int_pow(Expr::apply(Func::Coth, u), 2));
    case Func::Asin:
      return Expr::quotient(Expr::integer(1), sqrt_of(one_minus_sq(u)));
    case Func::Acos:
      return Expr::negate(
          Expr::quotient(Expr::integer(1), sqrt_of(one_minus_sq(u))));
    case Func::Atan:
      return Expr::quotient(Expr::integer(1),
                            Expr::sum(Expr::integer(1), Expr::int_pow(u, 2)));
    case Func::Acot:
      return Expr::negate(Expr::quotient(
          Expr::integer(1), Expr::sum(Expr::integer(1), Expr::int_pow(u, 2))));
    case Func::Asec:
      return Expr::quotient(
          Expr::integer(1),
          Expr::product(Expr::int_pow(u, 2),
                        sqrt_of(Expr::difference(
                            Expr::integer(1),
                            Expr::quotient(Expr::integer(1),
                                           Expr::int_pow(u, 2))))));
    case Func::Acsc:
      return Expr::negate(Expr::quotient(
          Expr::integer(1),
          Expr::product(Expr::int_pow(u, 2),
                        sqrt_of(Expr::difference(
                            Expr::integer(1),
                            Expr::quotient(Expr::integer(1),
                                           Expr::int_pow(u, 2)))))));
  }
  return Expr::integer(0);  // unreachable
}

Expr diff(const Expr& e) {
  switch (e.kind()) {
    case Expr::Kind::RationalConst:
    case Expr::Kind::NamedConst:
    case Expr::Kind::FormalTau:
      return Expr::integer(0);
    case Expr::Kind::Var:
      return Expr::integer(1);
    case Expr::Kind::Binary: {
      Expr a = e.left(), b = e.right();
      Expr da = diff(a), db = diff(b);
      switch (e.bin_op()) {
        case BinOp::Add:
          return Expr::sum(da, db);
        case BinOp::Sub:
          return Expr::difference(da, db);
        case BinOp::Mul:
          return Expr::sum(Expr::product(da, b), Expr::product(a, db));
        case BinOp::Div:
          return Expr::quotient(
              Expr::difference(Expr::product(da, b), Expr::product(a, db)),
              Expr::int_pow(b, 2));
      }
      return Expr::integer(0);  // unreachable
    }
    case Expr::Kind::IntPow: {
      Expr base = e.base();
      long long n = e.exponent();
      if (n == 0) return Expr::integer(0);
      return Expr::product(
          Expr::product(Expr::integer(n), Expr::int_pow(base, n - 1)),
          diff(base));
    }
    case Expr::Kind::Apply:
      return Expr::product(func_derivative(e.func(), e.arg()), diff(e.arg()));
  }
  return Expr::integer(0);  // unreachable
}

}  // namespace

Expr differentiate(const Expr& e) { return simplify_constants(diff(e)); }

Expr substitute_var(const Expr& e, const Expr& replacement) {
  switch (e.kind()) {
    case Expr::Kind::RationalConst:
    case Expr::Kind::NamedConst:
    case Expr::Kind::FormalTau:
      return e;
    case Expr::Kind::Var:
      return replacement;
    case Expr::Kind::Binary: {
      Expr a = substitute_var(e.left(), replacement);
      Expr b = substitute_var(e.right(), replacement);
      switch (e.bin_op()) {
        case BinOp::Add: return Expr::sum(std::move(a), std::move(b));
        case BinOp::Sub: return Expr::difference(std::move(a), std::move(b));
        case BinOp::Mul: return Expr::product(std::move(a), std::move(b));
        case BinOp::Div: return Expr::quotient(std::move(a), std::move(b));
      }
      return e;  // unreachable
    }
    case Expr::Kind::IntPow:
      return Expr::int_pow(substitute_var(e.base(), replacement), e.exponent());
    case Expr::Kind::Apply:
      return Expr::apply(e.func(), substitute_var(e.arg(), replacement));
  }
  return e;  // unreachable
}

}  // namespace transcend
