// Rule matching for the supported equation shapes, exceptional-candidate
// enumeration, transcendence classification of equations and closed-form
// numbers, and certificate trees explaining every verdict.
#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "transcend/expr.hpp"
#include "transcend/laurent.hpp"
#include "transcend/rational.hpp"

namespace transcend {

enum class Status { Algebraic, Transcendental, Unknown };

const char* status_name(Status s);

// Dense univariate polynomial over Q; index = degree, no trailing zeros.
using QPoly = std::vector<Rational>;

std::string qpoly_to_string(const QPoly& p, const std::string& var = "x");

// --- matched rule shapes ---------------------------------------------------

// g(f(x)) = h(x): g a rational polynomial applied to a single direct
// function atom f(x), remainder h on the right.
struct T1 {
  Func f;
  QPoly g;  // in the atom f(x); g[0] is the constant term
  QPoly h;  // in x
};

// h1(x) * f(g(x)) = h2(x)
struct T2 {
  Func f;
  QPoly h1;
  QPoly g;
  QPoly h2;
};

// (f(x^j) + a1)^k = g(x) with f = exp
struct P1 {
  Func f;
  int j = 0;
  Rational a1;
  int k = 0;
  QPoly g;
};

// inv(x) = f(x): an inverse function equal to a rational polynomial.
struct C1 {
  Func inv;
  QPoly f;
};

struct NoMatch {
  std::string reason;
};

using RuleForm = std::variant<T1, T2, P1, C1, NoMatch>;

const char* rule_name(const RuleForm& r);  // "T1".."C1", "none"

// Rewrite cos^2 -> 1 - sin^2, tan^2 -> sec^2 - 1, cot^2 -> csc^2 - 1 at even
// powers, recursively, to exhaustion.
Expr rewrite_even_trig(const Expr& e);
Equation rewrite_even_trig(const Equation& eq);

// Attempt the rules in priority order T2, T1, P1, C1; first match wins.
// Matching is invariant under rewrite_even_trig (even trig powers are
// consolidated before matching).
RuleForm match_rule(const Equation& eq);

// Rational roots of g (and h1 for T2; g - 1 roots for f = ln) by the
// rational-root theorem; deduplicated, sorted.  `unexamined` describes
// factors whose roots are irrational and were left untested.
struct CandidateSet {
  std::vector<Rational> roots;
  std::vector<std::string> unexamined;
};

CandidateSet exceptional_candidates(const RuleForm& form);

// --- certificates -----------------------------------------------------------

struct ExceptionEntry {
  Rational root;
  Status status = Status::Algebraic;
  double residual = 0.0;
};

struct Certificate {
  std::string claim;   // human-readable statement being certified
  Status status = Status::Unknown;
  std::string rule;    // rule identifier or "axiom"; empty for notes
  std::vector<Certificate> premises;
  std::vector<ExceptionEntry> exceptions;
};

// Transcendence facts for f(p/q) at exact rational arguments.  Returns an
// Algebraic certificate at the finitely many algebraic points (sin(0)=0,
// ln(1)=0, ...), a Transcendental one elsewhere; throws UndefinedAtPoint at
// poles (ln(0), csc(0), cot(0), coth(0)).
Certificate axiom_lookup(Func f, const Rational& arg);

// Classifies the solutions of an equation in x.  Transcendental verdicts list
// the exceptional algebraic roots; no matching rule yields Algebraic for pure
// rational-polynomial equations and Unknown otherwise.
Certificate classify_equation(const Equation& eq);

// Classifies a variable-free closed form (throws VariablePresent otherwise):
// Laurent-in-base reduction for a single transcendental base, real/imaginary
// split for numbers involving i.
Certificate classify_number(const Expr& e);

// Structural well-formedness: statuses consistent with premises, every
// Transcendental leaf is an axiom or Laurent/complex-split node, exceptions
// only on Transcendental equation nodes.
bool certificate_wellformed(const Certificate& c);

}  // namespace transcend
