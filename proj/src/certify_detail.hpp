// Internals shared between the rule matcher and the classifier.
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "transcend/certify.hpp"

namespace transcend::detail {

// --- dense Q[x] utilities (index = degree, no trailing zeros) ---------------

QPoly qnormalize(QPoly p);
int qdeg(const QPoly& p);  // -1 for the zero polynomial
bool qis_zero(const QPoly& p);
bool qis_const(const QPoly& p);
QPoly qadd(const QPoly& a, const QPoly& b);
QPoly qsub(const QPoly& a, const QPoly& b);
QPoly qmul(const QPoly& a, const QPoly& b);
QPoly qscale(const Rational& c, const QPoly& p);
Rational qeval(const QPoly& p, const Rational& x);
// Divide by (x - r); quotient returned, remainder must be handled by caller
// testing qeval first.
QPoly qdeflate(const QPoly& p, const Rational& r);

// Rational-root scan.  `complete` is false when a nontrivial factor with no
// rational roots remains (or divisor enumeration hit its cap); `remaining`
// then holds that factor for reporting.
struct RootScan {
  std::vector<Rational> roots;
  bool complete = true;
  QPoly remaining;
};
RootScan rational_roots(const QPoly& p);

// Polynomial in x with rational coefficients, or nullopt (any function
// application, tau, named constant, or non-constant division fails).
std::optional<QPoly> extract_qpoly(const Expr& e);

// Matching with the fallback information classify_equation needs: when no
// rule applies but lhs - rhs reduces to a pure rational polynomial in x
// (after even-trig consolidation), that polynomial is reported.
struct MatchOutcome {
  RuleForm form = NoMatch{};
  std::optional<QPoly> residual_poly;
};
MatchOutcome match_rule_full(const Equation& eq);

// --- transcendence base points ---------------------------------------------

// Exact value at the finitely many rational points where f takes an algebraic
// value (sin(0) = 0, ln(1) = 0, sec(0) = 1, asin(0) = 0, ...).
std::optional<Rational> algebraic_point_value(Func f, const Rational& arg);
// Rational arguments where f is undefined (ln(0), csc(0), cot(0), coth(0)).
bool is_pole_point(Func f, const Rational& arg);
// One-line statement of the transcendence axiom for f.
std::string generic_axiom_claim(Func f);

bool is_direct_func(Func f);   // the T1/T2 function list
bool is_inverse_func(Func f);  // asin..acsc

}  // namespace transcend::detail
