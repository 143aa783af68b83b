// Grammar parsing, printing, exact simplification, symbolic differentiation,
// and numeric evaluation.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <complex>
#include <optional>

#include "testutil.hpp"
#include "transcend/errors.hpp"
#include "transcend/expr.hpp"

using namespace transcend;
using testutil::TreeOptions;

TEST_CASE("parse: e^x + x - 12 = 0 tree shape") {
  Parsed p = parse("e^x + x - 12 = 0");
  REQUIRE(std::holds_alternative<Equation>(p));
  const Equation& eq = std::get<Equation>(p);
  const Expr expected = Expr::difference(
      Expr::sum(Expr::apply(Func::Exp, Expr::var()), Expr::var()),
      Expr::integer(12));
  CHECK(eq.lhs == expected);
  CHECK(eq.rhs == Expr::integer(0));
}

TEST_CASE("parse: decimal literals are exact rationals") {
  Expr e = parse_expr("2.5");
  REQUIRE(e.kind() == Expr::Kind::RationalConst);
  CHECK(e.rational_value() == Rational(5, 2));
  CHECK(parse_expr("1.7701").rational_value() == Rational(17701, 10000));
  CHECK(parse_expr("0.125").rational_value() == Rational(1, 8));
}

TEST_CASE("parse: errors carry positions") {
  try {
    parse("sin(");
    FAIL("expected SyntaxError");
  } catch (const SyntaxError& e) {
    CHECK(e.position() == 4);
  }
  CHECK_THROWS_AS(parse("2x"), SyntaxError);      // no implicit multiplication
  CHECK_THROWS_AS(parse("(1 + 2"), SyntaxError);  // unbalanced
  CHECK_THROWS_AS(parse("1 = 2 = 3"), SyntaxError);
  try {
    parse("foo(x)");
    FAIL("expected UnknownFunction");
  } catch (const UnknownFunction& e) {
    CHECK(e.name() == "foo");
  }
}

TEST_CASE("parse: precedence and associativity") {
  // ^ > unary - > * / > + -
  CHECK(parse_expr("-x^2") ==
        Expr::negate(Expr::int_pow(Expr::var(), 2)));
  CHECK(parse_expr("2*x^3") ==
        Expr::product(Expr::integer(2), Expr::int_pow(Expr::var(), 3)));
  CHECK(parse_expr("1 - 2 - 3") ==
        Expr::difference(Expr::difference(Expr::integer(1), Expr::integer(2)),
                         Expr::integer(3)));
  CHECK(parse_expr("x^-2") == Expr::int_pow(Expr::var(), -2));
  CHECK(parse_expr("1 + 2*x") ==
        Expr::sum(Expr::integer(1),
                  Expr::product(Expr::integer(2), Expr::var())));
}

TEST_CASE("parse: named constants, tau, and function aliases") {
  CHECK(parse_expr("e") == Expr::e());
  CHECK(parse_expr("pi") == Expr::pi());
  CHECK(parse_expr("i") == Expr::i());
  CHECK(parse_expr("tau").kind() == Expr::Kind::FormalTau);
  CHECK(parse_expr("arcsin(x)") == parse_expr("asin(x)"));
  CHECK(parse_expr("arccot(x)") == parse_expr("acot(x)"));
}

TEST_CASE("parse: pi^x normalizes to exp(x*ln(pi))") {
  Expr e = parse_expr("pi^x");
  REQUIRE(e.kind() == Expr::Kind::Apply);
  CHECK(e.func() == Func::Exp);
  CHECK(e.arg() == Expr::product(Expr::var(), Expr::apply(Func::Ln, Expr::pi())));
  // e^u stays an exponential directly
  CHECK(parse_expr("e^(2*x)") ==
        Expr::apply(Func::Exp, Expr::product(Expr::integer(2), Expr::var())));
}

TEST_CASE("simplify_constants: worked examples") {
  CHECK(simplify_constants(parse_expr("(1/2 + 1/3)*x")) ==
        Expr::product(Expr::rational(Rational(5, 6)), Expr::var()));
  CHECK(simplify_constants(parse_expr("exp(0)")) == Expr::integer(1));
  CHECK(simplify_constants(parse_expr("pi + 0")) == Expr::pi());
  CHECK(simplify_constants(parse_expr("ln(1)")) == Expr::integer(0));
  CHECK(simplify_constants(parse_expr("x^1")) == Expr::var());
  CHECK(simplify_constants(parse_expr("1*x + 0")) == Expr::var());
  CHECK_THROWS_AS(simplify_constants(parse_expr("1/(2 - 2)")), DivisionByZero);
}

TEST_CASE("simplify_constants: idempotent and eval-preserving") {
  testutil::Rng rng(0x5eed0010ULL);
  TreeOptions opt;
  opt.decimal_constants = false;
  int checked = 0;
  for (int it = 0; it < 400; ++it) {
    Expr t = testutil::random_tree(rng, testutil::uniform_int(rng, 1, 4), opt);
    std::optional<Expr> s;
    try {
      s = simplify_constants(t);
    } catch (const DivisionByZero&) {
      continue;  // the tree folds onto a zero denominator
    }
    CHECK(simplify_constants(*s) == *s);
    for (int pt = 0; pt < 5; ++pt) {
      const std::complex<double> z(testutil::uniform_real(rng, -2.0, 2.0),
                                   testutil::uniform_real(rng, -2.0, 2.0));
      std::complex<double> a, b;
      try {
        a = eval(t, z);
        b = eval(*s, z);
      } catch (const Error&) {
        continue;  // singular point; both throw or the point is skipped
      }
      if (!std::isfinite(std::abs(a)) || std::abs(a) > 1e8) continue;
      ++checked;
      CHECK(std::abs(a - b) <= 1e-9 * (1.0 + std::abs(a)));
    }
  }
  CHECK(checked > 500);  // the property was exercised, not vacuous
}

TEST_CASE("differentiate: worked examples") {
  CHECK(differentiate(parse_expr("e^x + x - 12")) == parse_expr("exp(x) + 1"));
  CHECK(differentiate(parse_expr("tan(x)")) == parse_expr("1 + tan(x)^2"));
  CHECK(differentiate(parse_expr("cot(x)")) == parse_expr("-(1 + cot(x)^2)"));
  // chain rule result compared numerically
  Expr d = differentiate(parse_expr("sin(x^2 - 1)"));
  Expr expect = parse_expr("2*x*cos(x^2 - 1)");
  for (double x : {-1.7, -0.3, 0.4, 1.1, 2.6}) {
    CHECK(eval_real(d, x) ==
          doctest::Approx(eval_real(expect, x)).epsilon(1e-12));
  }
  CHECK(differentiate(parse_expr("tau + pi")) == Expr::integer(0));
}

TEST_CASE("differentiate: finite differences on random trees") {
  testutil::Rng rng(0x5eed0011ULL);
  TreeOptions opt;
  int points_checked = 0;
  for (int tree = 0; tree < 200; ++tree) {
    Expr t = testutil::random_tree(rng, testutil::uniform_int(rng, 1, 3), opt);
    Expr d = differentiate(t);
    int got = 0;
    for (int trial = 0; trial < 40 && got < 10; ++trial) {
      const double x = testutil::uniform_real(rng, -2.0, 2.0);
      const double h = 1e-6;
      double fp, fm, fd, dv;
      try {
        // keep clear of poles/branch points: the whole 0.1-neighborhood must
        // evaluate and stay bounded
        for (int k = -2; k <= 2; ++k) {
          const double probe = std::fabs(eval_real(t, x + 0.05 * k));
          if (!std::isfinite(probe) || probe > 1e6) throw DomainError("large");
        }
        fp = eval_real(t, x + h);
        fm = eval_real(t, x - h);
        dv = eval_real(d, x);
      } catch (const Error&) {
        continue;
      }
      if (!std::isfinite(dv) || std::fabs(dv) > 1e4) continue;
      fd = (fp - fm) / (2.0 * h);
      ++got;
      ++points_checked;
      CHECK(std::fabs(fd - dv) <= 1e-5 * (1.0 + std::fabs(dv)));
    }
  }
  CHECK(points_checked >= 1000);
}

TEST_CASE("eval: worked examples") {
  Expr f = parse_expr("e^x + x - 12");
  CHECK(std::abs(eval(f, 2.27472787147)) < 1e-9);
  CHECK(eval(parse_expr("sin(x)"), 0.0) == std::complex<double>(0.0, 0.0));
  CHECK_THROWS_AS(eval_real(parse_expr("ln(x)"), -1.0), DomainError);
  // complex mode takes the principal branch instead
  const std::complex<double> lnm1 = eval(parse_expr("ln(x)"), -1.0);
  CHECK(std::abs(lnm1 - std::complex<double>(0.0, std::acos(-1.0))) < 1e-12);
}

TEST_CASE("eval: poles raise DomainError within 1e-14") {
  const double half_pi = std::acos(-1.0) / 2.0;
  CHECK_THROWS_AS(eval_real(parse_expr("tan(x)"), half_pi), DomainError);
  CHECK_THROWS_AS(eval_real(parse_expr("csc(x)"), 0.0), DomainError);
  CHECK_THROWS_AS(eval_real(parse_expr("cot(x)"), 0.0), DomainError);
  CHECK_THROWS_AS(eval_real(parse_expr("ln(x)"), 0.0), DomainError);
  CHECK(eval_real(parse_expr("tan(x)"), half_pi - 0.1) ==
        doctest::Approx(std::tan(half_pi - 0.1)));
}

TEST_CASE("eval: tau needs a value") {
  Expr t = parse_expr("tau^2 + 1");
  CHECK_THROWS_AS(eval(t, 0.0), MissingTau);
  CHECK(eval(t, 0.0, 3.0).real() == doctest::Approx(10.0));
}

TEST_CASE("eval: real results from real subtrees have zero imaginary part") {
  CHECK(eval(parse_expr("sin(x) + cosh(x)"), 0.7).imag() == 0.0);
  CHECK(eval(parse_expr("e^x - x^3"), -1.2).imag() == 0.0);
}

TEST_CASE("eval: Euler identity through gen_pow") {
  const std::complex<double> v = eval(parse_expr("e^(i*pi)"), 0.0);
  CHECK(std::abs(v - std::complex<double>(-1.0, 0.0)) < 1e-12);
}

TEST_CASE("print/parse round trip is the identity on grammar trees") {
  testutil::Rng rng(0x5eed0012ULL);
  TreeOptions opt;
  opt.allow_tau = true;
  for (int it = 0; it < 1000; ++it) {
    Expr t = testutil::random_tree(rng, testutil::uniform_int(rng, 0, 4), opt);
    CAPTURE(t.to_string());
    CHECK(parse_expr(t.to_string()) == t);
  }
}

TEST_CASE("printing non-decimal rationals preserves values") {
  // p/q constants print as "p/q", which reparses as a quotient node rather
  // than a literal; the trees differ structurally but must agree numerically.
  testutil::Rng rng(0x5eed0013ULL);
  TreeOptions opt;
  opt.decimal_constants = false;
  int checked = 0;
  for (int it = 0; it < 500; ++it) {
    Expr t = testutil::random_tree(rng, testutil::uniform_int(rng, 0, 3), opt);
    Expr back = parse_expr(t.to_string());
    for (int pt = 0; pt < 3; ++pt) {
      const std::complex<double> z(testutil::uniform_real(rng, -2.0, 2.0),
                                   testutil::uniform_real(rng, -2.0, 2.0));
      std::complex<double> a, b;
      try {
        a = eval(t, z);
        b = eval(back, z);
      } catch (const Error&) {
        continue;
      }
      if (!std::isfinite(std::abs(a)) || std::abs(a) > 1e8) continue;
      ++checked;
      CAPTURE(t.to_string());
      CHECK(std::abs(a - b) <= 1e-9 * (1.0 + std::abs(a)));
    }
  }
  CHECK(checked > 500);
}

TEST_CASE("conjugate symmetry for trees real-valued on the real line") {
  testutil::Rng rng(0x5eed0014ULL);
  TreeOptions opt;
  int checked = 0;
  for (int it = 0; it < 300; ++it) {
    Expr t = testutil::random_tree(rng, testutil::uniform_int(rng, 1, 3), opt);
    // Schwarz reflection needs real values on the real axis; constants like
    // acos(3) sit on a branch cut and legitimately break it, so screen them
    // out with two real probe points.
    bool real_valued = true;
    int probes = 0;
    for (double x0 : {0.37, -0.81}) {
      try {
        if (eval(t, {x0, 0.0}).imag() != 0.0) real_valued = false;
        ++probes;
      } catch (const Error&) {
      }
    }
    if (!real_valued || probes == 0) continue;
    for (int pt = 0; pt < 4; ++pt) {
      const std::complex<double> z(testutil::uniform_real(rng, -2.0, 2.0),
                                   testutil::uniform_real(rng, -2.0, 2.0));
      std::complex<double> a, b;
      try {
        a = eval(t, z);
        b = eval(t, std::conj(z));
      } catch (const Error&) {
        continue;
      }
      if (!std::isfinite(std::abs(a)) || std::abs(a) > 1e6) continue;
      ++checked;
      CAPTURE(t.to_string());
      CHECK(std::abs(b - std::conj(a)) <= 1e-12 * (1.0 + std::abs(a)));
    }
  }
  CHECK(checked > 200);
}

TEST_CASE("substitute_var replaces every occurrence") {
  Expr t = parse_expr("sin(x) + x^2");
  const Expr c = Expr::rational(Rational(3, 2));
  Expr s = substitute_var(t, c);
  CHECK_FALSE(s.contains_var());
  CHECK(s == Expr::sum(Expr::apply(Func::Sin, c), Expr::int_pow(c, 2)));
}

TEST_CASE("contains_ observers") {
  CHECK(parse_expr("x + 1").contains_var());
  CHECK_FALSE(parse_expr("tau + 1").contains_var());
  CHECK(parse_expr("tau + 1").contains_tau());
  CHECK(parse_expr("e + pi").contains_named(Named::E));
  CHECK(parse_expr("e + pi").contains_named(Named::Pi));
  CHECK_FALSE(parse_expr("e + pi").contains_named(Named::I));
}
