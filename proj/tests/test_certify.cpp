// Rule matching, even-trig rewriting, exceptional candidates, axiom lookup,
// and the equation/number classifiers with their certificates.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <string>
#include <variant>

#include "testutil.hpp"
#include "transcend/certify.hpp"
#include "transcend/errors.hpp"
#include "transcend/expr.hpp"

using namespace transcend;

namespace {

QPoly qp(std::initializer_list<Rational> cs) { return QPoly(cs); }

const Certificate* find_rule_node(const Certificate& c, const std::string& rule) {
  if (c.rule == rule) return &c;
  for (const auto& p : c.premises) {
    if (const Certificate* hit = find_rule_node(p, rule)) return hit;
  }
  return nullptr;
}

}  // namespace

TEST_CASE("match_rule: e^x + x - 12 = 0 is T1 with identity outer polynomial") {
  RuleForm form = match_rule(parse_equation("e^x + x - 12 = 0"));
  REQUIRE(std::holds_alternative<T1>(form));
  const T1& t1 = std::get<T1>(form);
  CHECK(t1.f == Func::Exp);
  CHECK(t1.g == qp({Rational(0), Rational(1)}));
  CHECK(t1.h == qp({Rational(12), Rational(-1)}));  // h = 12 - x
}

TEST_CASE("match_rule: polynomial in sin is T1") {
  RuleForm form = match_rule(parse_equation("sin(x)^2 + 2*sin(x) - 3 = 0"));
  REQUIRE(std::holds_alternative<T1>(form));
  const T1& t1 = std::get<T1>(form);
  CHECK(t1.f == Func::Sin);
  CHECK(t1.g == qp({Rational(-3), Rational(2), Rational(1)}));
  CHECK(qpoly_to_string(t1.h) == "0");
}

TEST_CASE("match_rule: composite argument with polynomial factor is T2") {
  RuleForm form = match_rule(parse_equation("x*sin(x^2 - 1) = x^3"));
  REQUIRE(std::holds_alternative<T2>(form));
  const T2& t2 = std::get<T2>(form);
  CHECK(t2.f == Func::Sin);
  CHECK(t2.h1 == qp({Rational(0), Rational(1)}));
  CHECK(t2.g == qp({Rational(-1), Rational(0), Rational(1)}));
  CHECK(t2.h2 == qp({Rational(0), Rational(0), Rational(0), Rational(1)}));
}

TEST_CASE("match_rule: T2 defers to T1 when the factor is constant") {
  // h1 constant and argument x is exactly the T1 shape; T2 must decline so
  // the more specific rule reports.
  CHECK(std::holds_alternative<T1>(match_rule(parse_equation("e^x = 12 - x"))));
  CHECK(std::holds_alternative<T2>(
      match_rule(parse_equation("x*e^x = -x + 12"))));
}

TEST_CASE("match_rule: binomial power of exp is P1") {
  RuleForm form = match_rule(parse_equation("(e^(x^2) + 1)^3 = x"));
  REQUIRE(std::holds_alternative<P1>(form));
  const P1& p1 = std::get<P1>(form);
  CHECK(p1.f == Func::Exp);
  CHECK(p1.j == 2);
  CHECK(p1.a1 == Rational(1));
  CHECK(p1.k == 3);
  CHECK(p1.g == qp({Rational(0), Rational(1)}));
}

TEST_CASE("match_rule: inverse function equals a polynomial is C1") {
  RuleForm form = match_rule(parse_equation("asin(x) = x/2"));
  REQUIRE(std::holds_alternative<C1>(form));
  const C1& c1 = std::get<C1>(form);
  CHECK(c1.inv == Func::Asin);
  CHECK(c1.f == qp({Rational(0), Rational(1, 2)}));

  RuleForm form2 = match_rule(parse_equation("atan(x) = 1 - x"));
  REQUIRE(std::holds_alternative<C1>(form2));
  CHECK(std::get<C1>(form2).inv == Func::Atan);
  CHECK(std::get<C1>(form2).f == qp({Rational(1), Rational(-1)}));
}

TEST_CASE("match_rule: no-match cases") {
  CHECK(std::holds_alternative<NoMatch>(
      match_rule(parse_equation("pi^x + 4*x = 49"))));
  CHECK(std::holds_alternative<NoMatch>(
      match_rule(parse_equation("x^2 - 4 = 0"))));
  CHECK(std::holds_alternative<NoMatch>(
      match_rule(parse_equation("sin(x) + cos(x) = 0"))));
  CHECK(std::holds_alternative<NoMatch>(
      match_rule(parse_equation("sin(x) + sin(x^2) = 1"))));
}

TEST_CASE("rule_name covers every variant") {
  CHECK(std::string(rule_name(match_rule(parse_equation("sin(x) = x")))) ==
        "T1");
  CHECK(std::string(rule_name(
            match_rule(parse_equation("x*sin(x^2 - 1) = x^3")))) == "T2");
  CHECK(std::string(rule_name(
            match_rule(parse_equation("(e^(x^2) + 1)^3 = x")))) == "P1");
  CHECK(std::string(rule_name(match_rule(parse_equation("asin(x) = x/2")))) ==
        "C1");
  CHECK(std::string(rule_name(match_rule(parse_equation("pi + x = 0")))) ==
        "none");
}

TEST_CASE("rewrite_even_trig: identities at even powers") {
  Expr r = rewrite_even_trig(parse_expr("2*cos(x)^2 + 3*sin(x) + 1"));
  CHECK(r == parse_expr("2*(1 - sin(x)^2) + 3*sin(x) + 1"));
  CHECK(rewrite_even_trig(parse_expr("tan(x)^2")) ==
        parse_expr("sec(x)^2 - 1"));
  CHECK(rewrite_even_trig(parse_expr("cot(x)^2")) ==
        parse_expr("csc(x)^2 - 1"));
  // fixed points: odd powers and other functions untouched
  CHECK(rewrite_even_trig(parse_expr("sin(x)")) == parse_expr("sin(x)"));
  CHECK(rewrite_even_trig(parse_expr("cos(x)^3")) == parse_expr("cos(x)^3"));
  // numeric equivalence for a fourth power
  Expr quartic = parse_expr("cos(x)^4");
  Expr rewritten = rewrite_even_trig(quartic);
  for (double x : {-1.3, -0.2, 0.5, 1.1}) {
    CHECK(eval_real(rewritten, x) ==
          doctest::Approx(eval_real(quartic, x)).epsilon(1e-12));
  }
}

TEST_CASE("matching is invariant under rewrite_even_trig") {
  for (const char* text :
       {"cos(x)^2 + 2*sin(x) - 3 = 0", "tan(x)^2 = 3", "cot(x)^2 = x",
        "sin(x)^2 + 2*sin(x) - 3 = 0"}) {
    Equation eq = parse_equation(text);
    RuleForm a = match_rule(eq);
    RuleForm b = match_rule(rewrite_even_trig(eq));
    CHECK(std::string(rule_name(a)) == std::string(rule_name(b)));
  }
  // the mixed-cosine equation lands on a sin polynomial
  RuleForm m = match_rule(parse_equation("cos(x)^2 + 2*sin(x) - 3 = 0"));
  REQUIRE(std::holds_alternative<T1>(m));
  CHECK(std::get<T1>(m).f == Func::Sin);
  // a pure tangent power already matches directly, no rewrite required
  RuleForm t = match_rule(parse_equation("tan(x)^2 = 3"));
  REQUIRE(std::holds_alternative<T1>(t));
  CHECK(std::get<T1>(t).f == Func::Tan);
}

TEST_CASE("exceptional_candidates: worked examples") {
  // T2 with h1 = x and g = x^2 - 1: roots of x, x^2 - 1
  T2 t2{Func::Sin, qp({Rational(0), Rational(1)}),
        qp({Rational(-1), Rational(0), Rational(1)}),
        qp({Rational(0), Rational(0), Rational(0), Rational(1)})};
  CandidateSet cs = exceptional_candidates(RuleForm(t2));
  REQUIRE(cs.roots.size() == 3);
  CHECK(cs.roots[0] == Rational(-1));
  CHECK(cs.roots[1] == Rational(0));
  CHECK(cs.roots[2] == Rational(1));

  // T1 with a direct function: the argument is x itself
  T1 t1{Func::Sin, qp({Rational(0), Rational(1)}), qp({Rational(0), Rational(1)})};
  CandidateSet one = exceptional_candidates(RuleForm(t1));
  REQUIRE(one.roots.size() == 1);
  CHECK(one.roots[0] == Rational(0));

  // ln additionally tests where its argument equals 1
  T1 t1ln{Func::Ln, qp({Rational(0), Rational(1)}), qp({Rational(0)})};
  CandidateSet ln_set = exceptional_candidates(RuleForm(t1ln));
  REQUIRE(ln_set.roots.size() == 2);
  CHECK(ln_set.roots[0] == Rational(0));
  CHECK(ln_set.roots[1] == Rational(1));
}

TEST_CASE("exceptional_candidates: irrational factors reported unexamined") {
  // g = x^2 - 2 has no rational roots; it must be flagged, not dropped
  T2 t2{Func::Sin, qp({Rational(1)}), qp({Rational(-2), Rational(0), Rational(1)}),
        qp({Rational(0)})};
  CandidateSet cs = exceptional_candidates(RuleForm(t2));
  CHECK(cs.roots.empty());
  REQUIRE_FALSE(cs.unexamined.empty());
}

TEST_CASE("axiom_lookup: transcendental, algebraic, and pole points") {
  Certificate t = axiom_lookup(Func::Exp, Rational(3, 2));
  CHECK(t.status == Status::Transcendental);
  CHECK(t.rule == "axiom");
  CHECK(t.premises.empty());

  Certificate s = axiom_lookup(Func::Sin, Rational(0));
  CHECK(s.status == Status::Algebraic);
  CHECK(s.claim.find("= 0") != std::string::npos);

  Certificate l = axiom_lookup(Func::Ln, Rational(1));
  CHECK(l.status == Status::Algebraic);
  CHECK(l.claim.find("= 0") != std::string::npos);

  CHECK(axiom_lookup(Func::Cos, Rational(0)).status == Status::Algebraic);
  CHECK(axiom_lookup(Func::Sec, Rational(0)).status == Status::Algebraic);
  CHECK(axiom_lookup(Func::Acos, Rational(1)).status == Status::Algebraic);
  CHECK(axiom_lookup(Func::Sin, Rational(1)).status == Status::Transcendental);
  CHECK(axiom_lookup(Func::Ln, Rational(2)).status == Status::Transcendental);

  CHECK_THROWS_AS(axiom_lookup(Func::Ln, Rational(0)), UndefinedAtPoint);
  CHECK_THROWS_AS(axiom_lookup(Func::Csc, Rational(0)), UndefinedAtPoint);
  CHECK_THROWS_AS(axiom_lookup(Func::Cot, Rational(0)), UndefinedAtPoint);
  CHECK_THROWS_AS(axiom_lookup(Func::Coth, Rational(0)), UndefinedAtPoint);
}

TEST_CASE("classify_equation: corpus statuses, rules, exceptions") {
  auto corpus = testutil::load_corpus(std::string(TEST_DATA_DIR) +
                                      "/classifier_corpus.txt");
  REQUIRE(corpus.size() >= 12);
  for (const auto& entry : corpus) {
    CAPTURE(entry.equation);
    Certificate cert = classify_equation(parse_equation(entry.equation));
    CHECK(std::string(status_name(cert.status)) == entry.status);
    const std::string rule = cert.rule.empty() ? "none" : cert.rule;
    CHECK(rule == entry.rule);
    REQUIRE(cert.exceptions.size() == entry.exceptions.size());
    for (std::size_t i = 0; i < entry.exceptions.size(); ++i) {
      CHECK(cert.exceptions[i].root == entry.exceptions[i]);
      CHECK(cert.exceptions[i].status == Status::Algebraic);
    }
    CHECK(certificate_wellformed(cert));
  }
}

TEST_CASE("classify_equation: exceptions really solve the equation") {
  auto corpus = testutil::load_corpus(std::string(TEST_DATA_DIR) +
                                      "/classifier_corpus.txt");
  for (const auto& entry : corpus) {
    Equation eq = parse_equation(entry.equation);
    Certificate cert = classify_equation(eq);
    for (const auto& ex : cert.exceptions) {
      CAPTURE(entry.equation);
      CAPTURE(ex.root.to_string());
      const double x = ex.root.to_double();
      const double lhs = eval_real(eq.lhs, x);
      const double rhs = eval_real(eq.rhs, x);
      CHECK(std::fabs(lhs - rhs) < 1e-12);
    }
  }
}

TEST_CASE("classify_equation: certified residual for the rejected candidate") {
  Certificate cert = classify_equation(parse_equation("e^x + x - 12 = 0"));
  CHECK(cert.status == Status::Transcendental);
  CHECK(cert.exceptions.empty());
  // the rejected candidate-0 note carries the exact residual -11
  bool found = false;
  for (const auto& p : cert.premises) {
    if (p.claim.find("-11") != std::string::npos) found = true;
  }
  CHECK(found);
}

TEST_CASE("classify_equation: status and exceptions commute with rewrite") {
  auto corpus = testutil::load_corpus(std::string(TEST_DATA_DIR) +
                                      "/classifier_corpus.txt");
  for (const auto& entry : corpus) {
    Equation eq = parse_equation(entry.equation);
    Certificate a = classify_equation(eq);
    Certificate b = classify_equation(rewrite_even_trig(eq));
    CAPTURE(entry.equation);
    CHECK(a.status == b.status);
    REQUIRE(a.exceptions.size() == b.exceptions.size());
    for (std::size_t i = 0; i < a.exceptions.size(); ++i) {
      CHECK(a.exceptions[i].root == b.exceptions[i].root);
      CHECK(a.exceptions[i].status == b.exceptions[i].status);
    }
  }
}

TEST_CASE("classify_equation: polynomial edge cases") {
  CHECK(classify_equation(parse_equation("x^2 - 4 = 0")).status ==
        Status::Algebraic);
  CHECK(classify_equation(parse_equation("3*x + 1 = 2*x + 1")).status ==
        Status::Algebraic);
  // an identity holds everywhere; no transcendence claim is possible
  CHECK(classify_equation(parse_equation("x + 1 = x + 1")).status ==
        Status::Unknown);
  // constant falsity: vacuously algebraic solution set
  CHECK(classify_equation(parse_equation("1 = 2")).status == Status::Algebraic);
}

TEST_CASE("classify_number: Laurent reduction in a single base") {
  Certificate c = classify_number(parse_expr("e + 4"));
  CHECK(c.status == Status::Transcendental);
  CHECK(c.rule == "NUM_LAURENT");
  CHECK(certificate_wellformed(c));

  CHECK(classify_number(parse_expr("pi^2 - 3*pi")).status ==
        Status::Transcendental);
  CHECK(classify_number(parse_expr("2*e - e - e")).status == Status::Algebraic);
  CHECK(classify_number(parse_expr("3/4")).status == Status::Algebraic);
  CHECK(classify_number(parse_expr("e^2 + e^-1")).status ==
        Status::Transcendental);
  CHECK(classify_number(parse_expr("sin(1)")).status == Status::Transcendental);
  CHECK(classify_number(parse_expr("ln(2)")).status == Status::Transcendental);
  CHECK(classify_number(parse_expr("pi + e")).status == Status::Unknown);
  CHECK(classify_number(parse_expr("sin(1) + cos(1)")).status ==
        Status::Unknown);
}

TEST_CASE("classify_number: complex split via the NUM_COMPLEX route") {
  Certificate c = classify_number(parse_expr("e + pi*i"));
  CHECK(c.status == Status::Transcendental);
  CHECK(c.rule == "NUM_COMPLEX");
  CHECK(certificate_wellformed(c));

  CHECK(classify_number(parse_expr("e - pi*i")).status ==
        Status::Transcendental);
  CHECK(classify_number(parse_expr("1/2 + 3*i")).status == Status::Algebraic);
  CHECK(classify_number(parse_expr("2*i - i - i")).status == Status::Algebraic);
  CHECK(classify_number(parse_expr("(1 + i)*(1 - i)")).status ==
        Status::Algebraic);
}

TEST_CASE("classify_number: conjugate consistency") {
  const char* pairs[][2] = {
      {"e + pi*i", "e - pi*i"},
      {"pi*i", "-pi*i"},
      {"1/2 + 3*i", "1/2 - 3*i"},
      {"e*i", "-e*i"},
      {"sin(1) + 2*i", "sin(1) - 2*i"},
  };
  for (const auto& pair : pairs) {
    CAPTURE(pair[0]);
    CHECK(classify_number(parse_expr(pair[0])).status ==
          classify_number(parse_expr(pair[1])).status);
  }
}

TEST_CASE("classify_number: errors and unknowns") {
  CHECK_THROWS_AS(classify_number(parse_expr("x + 1")), VariablePresent);
  // undefined closed forms degrade to Unknown rather than crashing
  CHECK(classify_number(parse_expr("ln(0)")).status == Status::Unknown);
  CHECK(classify_number(parse_expr("1/(e - e)")).status == Status::Unknown);
}

TEST_CASE("certificate_wellformed: positive and negative shapes") {
  for (const char* text : {"e^x + x - 12 = 0", "sin(x) = x", "x^2 - 4 = 0",
                           "pi^x + 4*x = 49", "tan(x)^2 = 3"}) {
    CHECK(certificate_wellformed(classify_equation(parse_equation(text))));
  }
  Certificate bad;
  bad.claim = "unsupported leaf";
  bad.status = Status::Transcendental;
  bad.rule = "T1";  // rule node without the axiom premise it requires
  CHECK_FALSE(certificate_wellformed(bad));

  Certificate bad2;
  bad2.claim = "axiom with premises";
  bad2.status = Status::Transcendental;
  bad2.rule = "axiom";
  bad2.premises.push_back(axiom_lookup(Func::Exp, Rational(1)));
  CHECK_FALSE(certificate_wellformed(bad2));
}

TEST_CASE("T1 certificates in the quartic range mention the solvable route") {
  Certificate cert = classify_equation(parse_equation("sin(x)^2 + 2*sin(x) - 3 = 0"));
  const Certificate* t1 = find_rule_node(cert, "T1");
  REQUIRE(t1 != nullptr);
  CHECK(t1->claim.find("quartic range") != std::string::npos);
}
