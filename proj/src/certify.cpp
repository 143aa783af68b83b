// Axiom table, exact residual testing of exceptional candidates, equation and
// number classification, and certificate construction/validation.
#include <algorithm>
#include <cmath>
#include <utility>

#include "certify_detail.hpp"
#include "transcend/errors.hpp"

namespace transcend {

namespace {

constexpr double kNumericResidualTol = 1e-10;

}  // namespace

const char* status_name(Status s) {
  switch (s) {
    case Status::Algebraic: return "algebraic";
    case Status::Transcendental: return "transcendental";
    case Status::Unknown: return "unknown";
  }
  return "unknown";
}

const char* rule_name(const RuleForm& r) {
  if (std::holds_alternative<T1>(r)) return "T1";
  if (std::holds_alternative<T2>(r)) return "T2";
  if (std::holds_alternative<P1>(r)) return "P1";
  if (std::holds_alternative<C1>(r)) return "C1";
  return "none";
}

std::string qpoly_to_string(const QPoly& p, const std::string& var) {
  if (detail::qis_zero(p)) return "0";
  std::string out;
  bool first = true;
  for (std::size_t i = p.size(); i-- > 0;) {
    const Rational& c = p[i];
    if (c.is_zero()) continue;
    Rational a = c.abs();
    if (first) {
      if (c.is_negative()) out += "-";
      first = false;
    } else {
      out += c.is_negative() ? " - " : " + ";
    }
    if (i == 0) {
      out += a.to_string();
    } else {
      if (a != Rational(1)) out += a.to_string() + "*";
      out += var;
      if (i != 1) out += "^" + std::to_string(i);
    }
  }
  return out;
}

// --- axiom table ------------------------------------------------------------

namespace detail {

std::optional<Rational> algebraic_point_value(Func f, const Rational& arg) {
  const Rational zero(0), one(1);
  switch (f) {
    case Func::Exp:
      if (arg == zero) return one;
      break;
    case Func::Ln:
      if (arg == one) return zero;
      break;
    case Func::Sin:
    case Func::Tan:
    case Func::Sinh:
    case Func::Tanh:
      if (arg == zero) return zero;
      break;
    case Func::Cos:
    case Func::Sec:
    case Func::Cosh:
      if (arg == zero) return one;
      break;
    case Func::Asin:
    case Func::Atan:
      if (arg == zero) return zero;
      break;
    case Func::Acos:
    case Func::Asec:
      if (arg == one) return zero;
      break;
    default:
      break;
  }
  return std::nullopt;
}

bool is_pole_point(Func f, const Rational& arg) {
  switch (f) {
    case Func::Ln:
    case Func::Csc:
    case Func::Cot:
    case Func::Coth:
    case Func::Asec:  // 1/0 inside
    case Func::Acsc:
      return arg == Rational(0);
    default:
      return false;
  }
}

std::string generic_axiom_claim(Func f) {
  switch (f) {
    case Func::Exp:
      return "exp takes transcendental values at every nonzero algebraic point";
    case Func::Ln:
      return "ln takes transcendental values at every algebraic point other "
             "than 0 and 1";
    case Func::Acos:
    case Func::Asec:
      return std::string(func_name(f)) +
             " takes transcendental values at every algebraic point in its "
             "domain other than 1";
    case Func::Acot:
    case Func::Acsc:
      return std::string(func_name(f)) +
             " takes transcendental values at every algebraic point in its "
             "domain";
    default:
      return std::string(func_name(f)) +
             " takes transcendental values at every nonzero algebraic point "
             "in its domain";
  }
}

}  // namespace detail

Certificate axiom_lookup(Func f, const Rational& arg) {
  if (detail::is_pole_point(f, arg)) {
    throw UndefinedAtPoint(std::string(func_name(f)) + "(" + arg.to_string() +
                           ") is undefined");
  }
  Certificate c;
  c.rule = "axiom";
  if (auto v = detail::algebraic_point_value(f, arg)) {
    c.status = Status::Algebraic;
    c.claim = std::string(func_name(f)) + "(" + arg.to_string() +
              ") = " + v->to_string() + ", an algebraic value";
  } else {
    c.status = Status::Transcendental;
    c.claim = std::string(func_name(f)) + "(" + arg.to_string() +
              ") is transcendental: " + detail::generic_axiom_claim(f);
  }
  return c;
}

// --- exact residual evaluation ----------------------------------------------

namespace {

enum class ExactKind { Rat, Trans, Undef, Unknown };

struct ExactVal {
  ExactKind kind = ExactKind::Unknown;
  Rational value;

  static ExactVal rat(Rational v) { return {ExactKind::Rat, std::move(v)}; }
  static ExactVal trans() { return {ExactKind::Trans, Rational(0)}; }
  static ExactVal undef() { return {ExactKind::Undef, Rational(0)}; }
  static ExactVal unknown() { return {ExactKind::Unknown, Rational(0)}; }
};

// Conservative exact evaluation of a variable-free expression: rationals are
// tracked exactly, single transcendental factors are tracked as nonzero
// markers, anything unresolvable degrades to Unknown.
ExactVal exact_eval(const Expr& e) {
  switch (e.kind()) {
    case Expr::Kind::RationalConst:
      return ExactVal::rat(e.rational_value());
    case Expr::Kind::NamedConst:
      return e.named_tag() == Named::I ? ExactVal::unknown()
                                       : ExactVal::trans();
    case Expr::Kind::FormalTau:
      return ExactVal::trans();
    case Expr::Kind::Var:
      return ExactVal::unknown();  // caller substitutes first
    case Expr::Kind::Binary: {
      ExactVal a = exact_eval(e.left());
      ExactVal b = exact_eval(e.right());
      if (a.kind == ExactKind::Undef || b.kind == ExactKind::Undef) {
        return ExactVal::undef();
      }
      switch (e.bin_op()) {
        case BinOp::Add:
        case BinOp::Sub: {
          const bool sub = e.bin_op() == BinOp::Sub;
          if (a.kind == ExactKind::Rat && b.kind == ExactKind::Rat) {
            return ExactVal::rat(sub ? a.value - b.value : a.value + b.value);
          }
          if ((a.kind == ExactKind::Rat && b.kind == ExactKind::Trans) ||
              (a.kind == ExactKind::Trans && b.kind == ExactKind::Rat)) {
            return ExactVal::trans();  // rational + transcendental
          }
          return ExactVal::unknown();
        }
        case BinOp::Mul:
          if (a.kind == ExactKind::Rat && b.kind == ExactKind::Rat) {
            return ExactVal::rat(a.value * b.value);
          }
          if (a.kind == ExactKind::Rat && a.value.is_zero()) {
            return b.kind == ExactKind::Unknown ? ExactVal::unknown()
                                                : ExactVal::rat(Rational(0));
          }
          if (b.kind == ExactKind::Rat && b.value.is_zero()) {
            return a.kind == ExactKind::Unknown ? ExactVal::unknown()
                                                : ExactVal::rat(Rational(0));
          }
          if ((a.kind == ExactKind::Rat && b.kind == ExactKind::Trans) ||
              (a.kind == ExactKind::Trans && b.kind == ExactKind::Rat)) {
            return ExactVal::trans();
          }
          return ExactVal::unknown();
        case BinOp::Div:
          if (b.kind == ExactKind::Rat && b.value.is_zero()) {
            return ExactVal::undef();
          }
          if (a.kind == ExactKind::Rat && b.kind == ExactKind::Rat) {
            return ExactVal::rat(a.value / b.value);
          }
          if (a.kind == ExactKind::Rat && a.value.is_zero() &&
              b.kind == ExactKind::Trans) {
            return ExactVal::rat(Rational(0));
          }
          if ((a.kind == ExactKind::Rat && b.kind == ExactKind::Trans) ||
              (a.kind == ExactKind::Trans && b.kind == ExactKind::Rat)) {
            return ExactVal::trans();  // nonzero rational over transcendental
          }
          return ExactVal::unknown();
      }
      return ExactVal::unknown();  // unreachable
    }
    case Expr::Kind::IntPow: {
      ExactVal base = exact_eval(e.base());
      long long n = e.exponent();
      if (base.kind == ExactKind::Undef) return ExactVal::undef();
      if (n == 0) return ExactVal::rat(Rational(1));
      if (base.kind == ExactKind::Rat) {
        if (n < 0 && base.value.is_zero()) return ExactVal::undef();
        return ExactVal::rat(base.value.pow(n));
      }
      if (base.kind == ExactKind::Trans) return ExactVal::trans();
      return ExactVal::unknown();
    }
    case Expr::Kind::Apply: {
      ExactVal u = exact_eval(e.arg());
      if (u.kind == ExactKind::Undef) return ExactVal::undef();
      if (u.kind != ExactKind::Rat) return ExactVal::unknown();
      if (detail::is_pole_point(e.func(), u.value)) return ExactVal::undef();
      if (auto v = detail::algebraic_point_value(e.func(), u.value)) {
        return ExactVal::rat(*v);
      }
      // real-domain holes (asin(2), ...) still have well-defined principal
      // values; transcendence is what matters here
      return ExactVal::trans();
    }
  }
  return ExactVal::unknown();  // unreachable
}

// --- candidate testing ------------------------------------------------------

struct CandidateOutcome {
  bool solves = false;
  double residual = 0.0;
  std::string note;  // set when not solving (or untestable)
};

CandidateOutcome test_candidate(const Equation& eq, const Rational& r) {
  CandidateOutcome out;
  const std::string at = "candidate " + r.to_string();
  Expr diff = Expr::difference(eq.lhs, eq.rhs);
  try {
    Expr sub = substitute_var(diff, Expr::rational(r));
    ExactVal v = exact_eval(simplify_constants(sub));
    switch (v.kind) {
      case ExactKind::Rat:
        if (v.value.is_zero()) {
          out.solves = true;
          return out;
        }
        out.note = at + " does not solve: exact residual " + v.value.to_string();
        return out;
      case ExactKind::Trans:
        out.note = at + " does not solve: the residual is transcendental, "
                        "hence nonzero";
        return out;
      case ExactKind::Undef:
        out.note = at + " is outside the equation's domain";
        return out;
      case ExactKind::Unknown:
        break;
    }
    double num = std::abs(eval(sub, {0.0, 0.0}));
    if (num < kNumericResidualTol) {
      out.solves = true;
      out.residual = num;
      return out;
    }
    out.note = at + " does not solve: numeric residual " + std::to_string(num);
    return out;
  } catch (const DivisionByZero&) {
    out.note = at + " is outside the equation's domain";
  } catch (const DomainError&) {
    out.note = at + " is outside the equation's domain";
  } catch (const MissingTau&) {
    out.note = at + " not testable without a tau value";
  }
  return out;
}

Certificate note_cert(std::string claim) {
  Certificate c;
  c.claim = std::move(claim);
  c.status = Status::Unknown;
  c.rule = "";
  return c;
}

Certificate generic_axiom_cert(Func f) {
  Certificate c;
  c.claim = detail::generic_axiom_claim(f);
  c.status = Status::Transcendental;
  c.rule = "axiom";
  return c;
}

std::string form_description(const RuleForm& form) {
  if (const T1* t1 = std::get_if<T1>(&form)) {
    std::string fx = std::string(func_name(t1->f)) + "(x)";
    std::string d = "matched form g(f(x)) = h(x) with f = " +
                    std::string(func_name(t1->f)) +
                    ", g = " + qpoly_to_string(t1->g, fx) +
                    ", h = " + qpoly_to_string(t1->h);
    int deg = detail::qdeg(t1->g);
    if (deg >= 1 && deg <= 4) {
      d += "; outer degree " + std::to_string(deg) +
           " lies in the quartic range, so the low-degree solvable route (P2) "
           "reaches the same conclusion";
    }
    return d;
  }
  if (const T2* t2 = std::get_if<T2>(&form)) {
    return "matched form h1(x)*f(g(x)) = h2(x) with f = " +
           std::string(func_name(t2->f)) +
           ", h1 = " + qpoly_to_string(t2->h1) +
           ", g = " + qpoly_to_string(t2->g) +
           ", h2 = " + qpoly_to_string(t2->h2);
  }
  if (const P1* p1 = std::get_if<P1>(&form)) {
    return "matched form (f(x^j) + a1)^k = g(x) with f = " +
           std::string(func_name(p1->f)) + ", j = " + std::to_string(p1->j) +
           ", a1 = " + p1->a1.to_string() + ", k = " + std::to_string(p1->k) +
           ", g = " + qpoly_to_string(p1->g);
  }
  if (const C1* c1 = std::get_if<C1>(&form)) {
    return "matched form " + std::string(func_name(c1->inv)) +
           "(x) = f(x) with f = " + qpoly_to_string(c1->f);
  }
  return "no rule matched";
}

Func rule_function(const RuleForm& form) {
  if (const T1* t1 = std::get_if<T1>(&form)) return t1->f;
  if (const T2* t2 = std::get_if<T2>(&form)) return t2->f;
  if (const P1* p1 = std::get_if<P1>(&form)) return p1->f;
  return std::get<C1>(form).inv;
}

}  // namespace

// --- classification ---------------------------------------------------------

Certificate classify_equation(const Equation& eq) {
  detail::MatchOutcome m = detail::match_rule_full(eq);
  Certificate cert;
  if (std::holds_alternative<NoMatch>(m.form)) {
    std::optional<QPoly> p = m.residual_poly;
    if (!p) {
      // no consolidated form; a direct polynomial reading may still exist
      p = detail::extract_qpoly(
          simplify_constants(Expr::difference(eq.lhs, eq.rhs)));
    }
    if (p) {
      if (detail::qis_zero(*p)) {
        cert.status = Status::Unknown;
        cert.rule = "none";
        cert.claim = eq.to_string() +
                     ": the equation holds identically; every number solves it";
        return cert;
      }
      if (detail::qis_const(*p)) {
        cert.status = Status::Algebraic;
        cert.rule = "polynomial";
        cert.claim = eq.to_string() +
                     ": reduces to the false constant identity " +
                     qpoly_to_string(*p) +
                     " = 0; there are no solutions, so every solution is "
                     "(vacuously) algebraic";
        return cert;
      }
      cert.status = Status::Algebraic;
      cert.rule = "polynomial";
      cert.claim = eq.to_string() +
                   ": polynomial equation with rational coefficients (" +
                   qpoly_to_string(*p) +
                   " = 0); every solution is algebraic";
      return cert;
    }
    cert.status = Status::Unknown;
    cert.rule = "none";
    cert.claim = eq.to_string() + ": no applicable rule (" +
                 std::get<NoMatch>(m.form).reason + ")";
    return cert;
  }

  cert.status = Status::Transcendental;
  cert.rule = rule_name(m.form);
  cert.claim = eq.to_string() +
               ": every solution is transcendental except the listed "
               "algebraic roots; " +
               form_description(m.form);
  cert.premises.push_back(generic_axiom_cert(rule_function(m.form)));

  CandidateSet cands = exceptional_candidates(m.form);
  for (const auto& r : cands.roots) {
    CandidateOutcome t = test_candidate(eq, r);
    if (t.solves) {
      cert.exceptions.push_back({r, Status::Algebraic, t.residual});
    } else {
      cert.premises.push_back(note_cert(t.note));
    }
  }
  for (const auto& msg : cands.unexamined) {
    cert.premises.push_back(note_cert(msg));
  }
  return cert;
}

namespace {

// Fold function values at their finitely many algebraic rational points
// (sin(0) -> 0, ln(1) -> 0, ...) so they do not masquerade as transcendental
// bases.  Throws UndefinedAtPoint at exact poles.
Expr resolve_algebraic_points(const Expr& e) {
  switch (e.kind()) {
    case Expr::Kind::RationalConst:
    case Expr::Kind::NamedConst:
    case Expr::Kind::FormalTau:
    case Expr::Kind::Var:
      return e;
    case Expr::Kind::Binary: {
      Expr a = resolve_algebraic_points(e.left());
      Expr b = resolve_algebraic_points(e.right());
      switch (e.bin_op()) {
        case BinOp::Add: return Expr::sum(std::move(a), std::move(b));
        case BinOp::Sub: return Expr::difference(std::move(a), std::move(b));
        case BinOp::Mul: return Expr::product(std::move(a), std::move(b));
        case BinOp::Div: return Expr::quotient(std::move(a), std::move(b));
      }
      return e;  // unreachable
    }
    case Expr::Kind::IntPow:
      return Expr::int_pow(resolve_algebraic_points(e.base()), e.exponent());
    case Expr::Kind::Apply: {
      Expr arg = resolve_algebraic_points(e.arg());
      if (arg.kind() == Expr::Kind::RationalConst) {
        const Rational& r = arg.rational_value();
        if (detail::is_pole_point(e.func(), r)) {
          throw UndefinedAtPoint(std::string(func_name(e.func())) + "(" +
                                 r.to_string() + ") is undefined");
        }
        if (auto v = detail::algebraic_point_value(e.func(), r)) {
          return Expr::rational(*v);
        }
      }
      return Expr::apply(e.func(), std::move(arg));
    }
  }
  return e;  // unreachable
}

// Transcendental-base leaves: named constants e/pi, tau, and maximal constant
// function applications.
void collect_bases(const Expr& e, std::vector<Expr>& bases) {
  switch (e.kind()) {
    case Expr::Kind::NamedConst:
      if (e.named_tag() == Named::I) return;
      break;
    case Expr::Kind::FormalTau:
    case Expr::Kind::Apply:
      break;
    case Expr::Kind::Binary:
      collect_bases(e.left(), bases);
      collect_bases(e.right(), bases);
      return;
    case Expr::Kind::IntPow:
      collect_bases(e.base(), bases);
      return;
    default:
      return;
  }
  for (const auto& b : bases) {
    if (b == e) return;
  }
  bases.push_back(e);
}

// a + b*i decomposition with i-free components; fails on shapes needing
// complex division or functions of complex arguments.
std::optional<std::pair<Expr, Expr>> complex_split(const Expr& e) {
  switch (e.kind()) {
    case Expr::Kind::RationalConst:
    case Expr::Kind::FormalTau:
      return std::make_pair(e, Expr::integer(0));
    case Expr::Kind::NamedConst:
      if (e.named_tag() == Named::I) {
        return std::make_pair(Expr::integer(0), Expr::integer(1));
      }
      return std::make_pair(e, Expr::integer(0));
    case Expr::Kind::Var:
      return std::nullopt;
    case Expr::Kind::Apply:
      if (e.contains_named(Named::I)) return std::nullopt;
      return std::make_pair(e, Expr::integer(0));
    case Expr::Kind::Binary: {
      auto a = complex_split(e.left());
      auto b = complex_split(e.right());
      if (!a || !b) return std::nullopt;
      auto& [ar, ai] = *a;
      auto& [br, bi] = *b;
      switch (e.bin_op()) {
        case BinOp::Add:
          return std::make_pair(Expr::sum(ar, br), Expr::sum(ai, bi));
        case BinOp::Sub:
          return std::make_pair(Expr::difference(ar, br),
                                Expr::difference(ai, bi));
        case BinOp::Mul:
          return std::make_pair(
              Expr::difference(Expr::product(ar, br), Expr::product(ai, bi)),
              Expr::sum(Expr::product(ar, bi), Expr::product(ai, br)));
        case BinOp::Div: {
          if (!simplify_constants(bi).is_rational(Rational(0))) {
            return std::nullopt;  // complex denominator
          }
          return std::make_pair(Expr::quotient(ar, br),
                                Expr::quotient(ai, br));
        }
      }
      return std::nullopt;  // unreachable
    }
    case Expr::Kind::IntPow: {
      auto u = complex_split(e.base());
      if (!u) return std::nullopt;
      auto& [ur, ui] = *u;
      if (simplify_constants(ui).is_rational(Rational(0))) {
        return std::make_pair(Expr::int_pow(ur, e.exponent()),
                              Expr::integer(0));
      }
      long long n = e.exponent();
      if (n < 0 || n > 16) return std::nullopt;
      Expr rr = Expr::integer(1), ri = Expr::integer(0);
      for (long long k = 0; k < n; ++k) {
        Expr nr = Expr::difference(Expr::product(rr, ur), Expr::product(ri, ui));
        Expr ni = Expr::sum(Expr::product(rr, ui), Expr::product(ri, ur));
        rr = simplify_constants(nr);
        ri = simplify_constants(ni);
      }
      return std::make_pair(rr, ri);
    }
  }
  return std::nullopt;  // unreachable
}

Certificate classify_real_closed_form(const Expr& e);

Certificate unknown_number_cert(const Expr& e, const std::string& why) {
  Certificate c;
  c.status = Status::Unknown;
  c.rule = "none";
  c.claim = e.to_string() + ": " + why;
  return c;
}

Certificate base_axiom_cert(const Expr& base) {
  Certificate c;
  c.rule = "axiom";
  c.status = Status::Transcendental;
  if (base.kind() == Expr::Kind::NamedConst) {
    c.claim = base.named_tag() == Named::E ? "e is transcendental"
                                           : "pi is transcendental";
    return c;
  }
  if (base.kind() == Expr::Kind::FormalTau) {
    c.claim = "tau denotes a transcendental number";
    return c;
  }
  // constant function application at a rational point
  return axiom_lookup(base.func(), base.arg().rational_value());
}

Certificate classify_real_closed_form(const Expr& e) {
  if (e.kind() == Expr::Kind::RationalConst) {
    Certificate c;
    c.status = Status::Algebraic;
    c.rule = "axiom";
    c.claim = e.rational_value().to_string() + " is rational, hence algebraic";
    return c;
  }
  std::vector<Expr> bases;
  collect_bases(e, bases);
  if (bases.empty()) {
    return unknown_number_cert(e, "no transcendental base found and the value "
                                  "did not reduce to a rational");
  }
  if (bases.size() > 1) {
    return unknown_number_cert(
        e, "mixes independent transcendental bases (" + bases[0].to_string() +
               " and " + bases[1].to_string() +
               "); no rule covers their combinations");
  }
  const Expr& base = bases[0];
  if (base.kind() == Expr::Kind::Apply) {
    if (base.arg().kind() != Expr::Kind::RationalConst) {
      return unknown_number_cert(
          e, "function value at a non-rational point (" + base.to_string() +
                 ") is outside the axiom table");
    }
    Certificate axiom = axiom_lookup(base.func(), base.arg().rational_value());
    if (axiom.status != Status::Transcendental) {
      // algebraic-point values are folded before reaching here
      return unknown_number_cert(e, "base " + base.to_string() +
                                        " is not a transcendental value");
    }
  }
  auto p = extract_laurent(e, base);
  if (!p) {
    return unknown_number_cert(
        e, "not a Laurent polynomial with rational coefficients in " +
               base.to_string());
  }
  Certificate c;
  if (p->is_constant()) {
    c.status = Status::Algebraic;
    c.rule = "axiom";
    c.claim = e.to_string() + " reduces to the rational " +
              p->coeff(0).to_string();
    return c;
  }
  c.status = Status::Transcendental;
  c.rule = "NUM_LAURENT";
  c.claim = e.to_string() + " = p(" + base.to_string() +
            ") with p = " + p->to_string() +
            ", a non-constant Laurent polynomial with rational coefficients: "
            "an algebraic value would, after clearing denominators, make " +
            base.to_string() +
            " the root of a nonzero rational polynomial, contradicting its "
            "transcendence";
  c.premises.push_back(base_axiom_cert(base));
  return c;
}

}  // namespace

Certificate classify_number(const Expr& e0) {
  if (e0.contains_var()) {
    throw VariablePresent("classify_number requires a variable-free expression");
  }
  Expr e = Expr::integer(0);
  try {
    e = simplify_constants(resolve_algebraic_points(simplify_constants(e0)));
  } catch (const UndefinedAtPoint& ex) {
    Certificate c;
    c.status = Status::Unknown;
    c.rule = "none";
    c.claim = e0.to_string() + ": contains an undefined subterm (" +
              ex.what() + ")";
    return c;
  } catch (const DivisionByZero& ex) {
    Certificate c;
    c.status = Status::Unknown;
    c.rule = "none";
    c.claim = e0.to_string() + ": contains an undefined subterm (" +
              ex.what() + ")";
    return c;
  }
  if (!e.contains_named(Named::I)) {
    return classify_real_closed_form(e);
  }
  auto split = complex_split(e);
  if (!split) {
    return unknown_number_cert(
        e, "could not separate the value into real and imaginary parts");
  }
  Expr re = simplify_constants(split->first);
  Expr im = simplify_constants(split->second);
  if (im.is_rational(Rational(0))) {
    return classify_real_closed_form(re);
  }
  Certificate re_cert = classify_real_closed_form(re);
  Certificate im_cert = classify_real_closed_form(im);
  Certificate c;
  c.rule = "NUM_COMPLEX";
  c.claim = e.to_string() + " = (" + re.to_string() + ") + (" +
            im.to_string() +
            ")*i: a complex number is transcendental whenever its real or "
            "imaginary part is";
  if (re_cert.status == Status::Transcendental ||
      im_cert.status == Status::Transcendental) {
    c.status = Status::Transcendental;
  } else if (re_cert.status == Status::Algebraic &&
             im_cert.status == Status::Algebraic) {
    c.status = Status::Algebraic;
    c.claim = e.to_string() + " = (" + re.to_string() + ") + (" +
              im.to_string() +
              ")*i: both parts are algebraic, so the value is algebraic";
  } else {
    c.status = Status::Unknown;
    c.claim = e.to_string() +
              ": the real/imaginary split leaves at least one part "
              "unclassified";
  }
  c.premises.push_back(std::move(re_cert));
  c.premises.push_back(std::move(im_cert));
  return c;
}

// --- certificate validation -------------------------------------------------

bool certificate_wellformed(const Certificate& c) {
  // informational notes: empty rule, Unknown status, no children
  if (c.rule.empty()) {
    return c.status == Status::Unknown && c.premises.empty() &&
           c.exceptions.empty();
  }
  if (c.rule == "axiom" && !c.premises.empty()) return false;
  if (!c.exceptions.empty()) {
    if (c.status != Status::Transcendental) return false;
    const bool equation_rule = c.rule == "T1" || c.rule == "T2" ||
                               c.rule == "P1" || c.rule == "C1";
    if (!equation_rule) return false;
    for (const auto& ex : c.exceptions) {
      if (ex.status != Status::Algebraic) return false;
    }
  }
  if (c.status == Status::Transcendental) {
    if (c.premises.empty()) {
      // transcendental leaves must be axioms
      if (c.rule != "axiom") return false;
    } else if (c.rule == "NUM_COMPLEX") {
      bool has_transcendental = false;
      for (const auto& p : c.premises) {
        if (p.status == Status::Transcendental) has_transcendental = true;
      }
      if (!has_transcendental) return false;
    } else {
      // rule nodes need a transcendence basis among their premises
      bool has_axiom = false;
      for (const auto& p : c.premises) {
        if (p.rule == "axiom" && p.status == Status::Transcendental) {
          has_axiom = true;
        }
      }
      if (!has_axiom) return false;
    }
  }
  for (const auto& p : c.premises) {
    if (!certificate_wellformed(p)) return false;
  }
  return true;
}

}  // namespace transcend
