// Even-trig rewriting, polynomial extraction over function atoms, rule
// matching (T2 -> T1 -> P1 -> C1), and exceptional-candidate enumeration.
#include <algorithm>
#include <array>
#include <map>

#include "certify_detail.hpp"
#include "transcend/errors.hpp"

namespace transcend {

namespace detail {

// --- QPoly utilities --------------------------------------------------------

QPoly qnormalize(QPoly p) {
  while (!p.empty() && p.back().is_zero()) p.pop_back();
  return p;
}

int qdeg(const QPoly& p) { return static_cast<int>(p.size()) - 1; }
bool qis_zero(const QPoly& p) { return p.empty(); }
bool qis_const(const QPoly& p) { return p.size() <= 1; }

QPoly qadd(const QPoly& a, const QPoly& b) {
  QPoly r(std::max(a.size(), b.size()), Rational(0));
  for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] += b[i];
  return qnormalize(std::move(r));
}

QPoly qsub(const QPoly& a, const QPoly& b) {
  QPoly r(std::max(a.size(), b.size()), Rational(0));
  for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
  return qnormalize(std::move(r));
}

QPoly qmul(const QPoly& a, const QPoly& b) {
  if (a.empty() || b.empty()) return {};
  QPoly r(a.size() + b.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) {
      r[i + j] += a[i] * b[j];
    }
  }
  return qnormalize(std::move(r));
}

QPoly qscale(const Rational& c, const QPoly& p) {
  if (c.is_zero()) return {};
  QPoly r = p;
  for (auto& v : r) v *= c;
  return r;
}

Rational qeval(const QPoly& p, const Rational& x) {
  Rational acc(0);
  for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * x + *it;
  return acc;
}

QPoly qdeflate(const QPoly& p, const Rational& r) {
  if (p.empty()) return {};
  QPoly q(p.size() - 1, Rational(0));
  Rational carry(0);
  for (std::size_t i = p.size(); i-- > 1;) {
    carry = p[i] + carry * r;
    q[i - 1] = carry;
  }
  return qnormalize(std::move(q));
}

// --- rational-root theorem --------------------------------------------------

namespace {

constexpr long long kDivisorCap = 1'000'000;

// All positive divisors; `capped` set when trial division passes the cap.
std::vector<Int> divisors_of(Int n, bool& capped) {
  if (n < 0) n = -n;
  std::vector<Int> out;
  Int i = 1;
  long long steps = 0;
  for (; i * i <= n; ++i) {
    if (++steps > kDivisorCap) {
      capped = true;
      break;
    }
    if (n % i == 0) {
      out.push_back(i);
      if (i * i != n) out.push_back(n / i);
    }
  }
  return out;
}

Int lcm_int(const Int& a, const Int& b) {
  return a / boost::multiprecision::gcd(a, b) * b;
}

}  // namespace

RootScan rational_roots(const QPoly& p0) {
  RootScan scan;
  QPoly p = qnormalize(p0);
  if (qdeg(p) <= 0) return scan;  // constants: no roots
  // x^s factor: root 0
  std::size_t s = 0;
  while (s < p.size() && p[s].is_zero()) ++s;
  if (s > 0) {
    scan.roots.push_back(Rational(0));
    p.erase(p.begin(), p.begin() + static_cast<std::ptrdiff_t>(s));
  }
  if (qdeg(p) <= 0) return scan;
  // clear denominators
  Int scale = 1;
  for (const auto& c : p) scale = lcm_int(scale, c.denominator());
  std::vector<Int> ip;
  ip.reserve(p.size());
  for (const auto& c : p) ip.push_back(c.numerator() * (scale / c.denominator()));
  bool capped = false;
  std::vector<Int> ps = divisors_of(ip.front(), capped);
  std::vector<Int> qs = divisors_of(ip.back(), capped);
  std::vector<Rational> candidates;
  for (const auto& pp : ps) {
    for (const auto& qq : qs) {
      candidates.push_back(Rational(pp, qq));
      candidates.push_back(Rational(-pp, qq));
    }
  }
  std::sort(candidates.begin(), candidates.end());
  candidates.erase(std::unique(candidates.begin(), candidates.end()),
                   candidates.end());
  for (const auto& r : candidates) {
    bool was_root = false;
    while (qdeg(p) >= 1 && qeval(p, r).is_zero()) {
      p = qdeflate(p, r);
      was_root = true;
    }
    if (was_root) scan.roots.push_back(r);
  }
  std::sort(scan.roots.begin(), scan.roots.end());
  if (qdeg(p) >= 1 || capped) {
    scan.complete = false;
    scan.remaining = p;
  }
  return scan;
}

// --- extraction over function atoms ----------------------------------------

namespace {

// Sparse polynomial in x and at most two function atoms A, B; key =
// (deg_x, deg_A, deg_B).
struct MultiPoly {
  std::map<std::array<int, 3>, Rational> terms;

  static MultiPoly constant(const Rational& c) {
    MultiPoly p;
    if (!c.is_zero()) p.terms[{0, 0, 0}] = c;
    return p;
  }
  static MultiPoly monomial(int dx, int da, int db) {
    MultiPoly p;
    p.terms[{dx, da, db}] = Rational(1);
    return p;
  }

  void add_term(const std::array<int, 3>& key, const Rational& c) {
    auto it = terms.find(key);
    Rational v = (it == terms.end() ? Rational(0) : it->second) + c;
    if (v.is_zero()) {
      if (it != terms.end()) terms.erase(it);
    } else {
      terms[key] = v;
    }
  }
};

MultiPoly madd(const MultiPoly& a, const MultiPoly& b) {
  MultiPoly r = a;
  for (const auto& [k, c] : b.terms) r.add_term(k, c);
  return r;
}

MultiPoly msub(const MultiPoly& a, const MultiPoly& b) {
  MultiPoly r = a;
  for (const auto& [k, c] : b.terms) r.add_term(k, -c);
  return r;
}

MultiPoly mmul(const MultiPoly& a, const MultiPoly& b) {
  MultiPoly r;
  for (const auto& [ka, ca] : a.terms) {
    for (const auto& [kb, cb] : b.terms) {
      r.add_term({ka[0] + kb[0], ka[1] + kb[1], ka[2] + kb[2]}, ca * cb);
    }
  }
  return r;
}

MultiPoly mscale(const Rational& c, const MultiPoly& a) {
  MultiPoly r;
  if (c.is_zero()) return r;
  for (const auto& [k, v] : a.terms) r.terms[k] = c * v;
  return r;
}

std::optional<Rational> as_constant(const MultiPoly& p) {
  if (p.terms.empty()) return Rational(0);
  if (p.terms.size() == 1 &&
      p.terms.begin()->first == std::array<int, 3>{0, 0, 0}) {
    return p.terms.begin()->second;
  }
  return std::nullopt;
}

// Maximal function applications containing x, in traversal order.
void collect_atoms(const Expr& e, std::vector<Expr>& atoms) {
  switch (e.kind()) {
    case Expr::Kind::Apply:
      if (e.contains_var()) {
        for (const auto& a : atoms) {
          if (a == e) return;
        }
        atoms.push_back(e);
      }
      return;
    case Expr::Kind::Binary:
      collect_atoms(e.left(), atoms);
      collect_atoms(e.right(), atoms);
      return;
    case Expr::Kind::IntPow:
      collect_atoms(e.base(), atoms);
      return;
    default:
      return;
  }
}

std::optional<MultiPoly> extract_multi(const Expr& e,
                                       const std::vector<Expr>& atoms) {
  for (std::size_t i = 0; i < atoms.size(); ++i) {
    if (e == atoms[i]) {
      return MultiPoly::monomial(0, i == 0 ? 1 : 0, i == 1 ? 1 : 0);
    }
  }
  switch (e.kind()) {
    case Expr::Kind::RationalConst:
      return MultiPoly::constant(e.rational_value());
    case Expr::Kind::Var:
      return MultiPoly::monomial(1, 0, 0);
    case Expr::Kind::NamedConst:
    case Expr::Kind::FormalTau:
    case Expr::Kind::Apply:
      return std::nullopt;  // non-rational constant or foreign atom
    case Expr::Kind::Binary: {
      auto a = extract_multi(e.left(), atoms);
      auto b = extract_multi(e.right(), atoms);
      if (!a || !b) return std::nullopt;
      switch (e.bin_op()) {
        case BinOp::Add: return madd(*a, *b);
        case BinOp::Sub: return msub(*a, *b);
        case BinOp::Mul: return mmul(*a, *b);
        case BinOp::Div: {
          auto c = as_constant(*b);
          if (!c || c->is_zero()) return std::nullopt;
          return mscale(Rational(1) / *c, *a);
        }
      }
      return std::nullopt;  // unreachable
    }
    case Expr::Kind::IntPow: {
      auto u = extract_multi(e.base(), atoms);
      if (!u) return std::nullopt;
      long long n = e.exponent();
      if (n < 0) {
        auto c = as_constant(*u);
        if (!c || c->is_zero()) return std::nullopt;
        return MultiPoly::constant(c->pow(n));
      }
      MultiPoly acc = MultiPoly::constant(Rational(1));
      for (long long k = 0; k < n; ++k) acc = mmul(acc, *u);
      return acc;
    }
  }
  return std::nullopt;  // unreachable
}

// Identity partner for the even-power consolidation: X^2 = s0 + s1 * Y^2.
struct EvenIdentity {
  Func partner;
  Rational s0, s1;
};

std::optional<EvenIdentity> even_identity(Func f) {
  switch (f) {
    case Func::Cos: return EvenIdentity{Func::Sin, Rational(1), Rational(-1)};
    case Func::Sin: return EvenIdentity{Func::Cos, Rational(1), Rational(-1)};
    case Func::Tan: return EvenIdentity{Func::Sec, Rational(-1), Rational(1)};
    case Func::Sec: return EvenIdentity{Func::Tan, Rational(1), Rational(1)};
    case Func::Cot: return EvenIdentity{Func::Csc, Rational(-1), Rational(1)};
    case Func::Csc: return EvenIdentity{Func::Cot, Rational(1), Rational(1)};
    default: return std::nullopt;
  }
}

bool only_even_degree(const MultiPoly& p, int slot) {
  for (const auto& [k, c] : p.terms) {
    if (k[slot] % 2 != 0) return false;
  }
  return true;
}

// Replace atom `slot` (appearing only at even degrees) using X^2 = s0 + s1*Y^2
// where Y is the other atom; the result lives in slot 1 only.
MultiPoly eliminate_even_atom(const MultiPoly& p, int slot,
                              const Rational& s0, const Rational& s1) {
  int other = slot == 1 ? 2 : 1;
  MultiPoly out;
  for (const auto& [k, c] : p.terms) {
    int t = k[slot] / 2;
    // binomial expansion of (s0 + s1 * Y^2)^t
    Rational binom(1);
    for (int m = 0; m <= t; ++m) {
      Rational coeff = c * binom * s0.pow(t - m) * s1.pow(m);
      std::array<int, 3> key = {k[0], 0, 0};
      key[static_cast<std::size_t>(other)] = k[other] + 2 * m;
      out.add_term(key, coeff);
      binom = binom * Rational(t - m) / Rational(m + 1);
    }
  }
  // move everything into slot 1 for uniform downstream handling
  MultiPoly shifted;
  for (const auto& [k, c] : out.terms) {
    shifted.add_term({k[0], k[other], 0}, c);
  }
  return shifted;
}

// Coefficients of the atom-degree-i part, as polynomials in x.
std::vector<QPoly> atom_coefficients(const MultiPoly& p) {
  int dmax = 0;
  for (const auto& [k, c] : p.terms) dmax = std::max(dmax, k[1]);
  std::vector<QPoly> cs(static_cast<std::size_t>(dmax) + 1);
  for (const auto& [k, c] : p.terms) {
    auto& poly = cs[static_cast<std::size_t>(k[1])];
    if (qdeg(poly) < k[0]) poly.resize(static_cast<std::size_t>(k[0]) + 1, Rational(0));
    poly[static_cast<std::size_t>(k[0])] += c;
  }
  for (auto& poly : cs) poly = qnormalize(std::move(poly));
  return cs;
}

RuleForm match_single_atom(const Expr& atom, const MultiPoly& p,
                           std::optional<QPoly>* residual_poly);

}  // namespace

std::optional<QPoly> extract_qpoly(const Expr& e) {
  auto m = extract_multi(e, {});
  if (!m) return std::nullopt;
  auto cs = atom_coefficients(*m);
  if (cs.size() != 1) return std::nullopt;
  return cs[0];
}

MatchOutcome match_rule_full(const Equation& eq) {
  MatchOutcome out;
  Expr diff = simplify_constants(Expr::difference(eq.lhs, eq.rhs));
  std::vector<Expr> atoms;
  collect_atoms(diff, atoms);
  if (atoms.size() > 2) {
    out.form = NoMatch{"more than two distinct function atoms"};
    return out;
  }
  auto p = extract_multi(diff, atoms);
  if (!p) {
    out.form = NoMatch{"not a polynomial over the function atoms"};
    return out;
  }
  MultiPoly poly = *p;
  Expr atom = atoms.empty() ? Expr::var() : atoms[0];
  if (atoms.size() == 2) {
    // consolidate via an even-power identity on a shared argument
    const Expr &a = atoms[0], &b = atoms[1];
    if (a.arg() != b.arg()) {
      out.form = NoMatch{"two function atoms with different arguments"};
      return out;
    }
    auto ida = even_identity(a.func());
    auto idb = even_identity(b.func());
    // prefer eliminating cos/tan/cot (the rewrite direction)
    auto prefers = [](Func f) {
      return f == Func::Cos || f == Func::Tan || f == Func::Cot;
    };
    bool a_ok = ida && ida->partner == b.func() && only_even_degree(poly, 1);
    bool b_ok = idb && idb->partner == a.func() && only_even_degree(poly, 2);
    if (a_ok && (prefers(a.func()) || !b_ok)) {
      poly = eliminate_even_atom(poly, 1, ida->s0, ida->s1);
      atom = b;
    } else if (b_ok) {
      poly = eliminate_even_atom(poly, 2, idb->s0, idb->s1);
      atom = a;
    } else {
      out.form = NoMatch{"mixed function atoms with no even-power identity"};
      return out;
    }
  }
  out.form = match_single_atom(atom, poly, &out.residual_poly);
  return out;
}

namespace {

RuleForm match_single_atom(const Expr& atom, const MultiPoly& p,
                           std::optional<QPoly>* residual_poly) {
  auto cs = atom_coefficients(p);
  if (cs.size() == 1) {
    // no surviving function atom: pure polynomial in x
    *residual_poly = cs[0];
    return NoMatch{"no function of x"};
  }
  const Func f = atom.func();
  const Expr arg = atom.arg();
  const int d = static_cast<int>(cs.size()) - 1;
  const bool arg_is_x = arg.kind() == Expr::Kind::Var;

  auto upper_coeffs_constant = [&] {
    for (std::size_t i = 1; i < cs.size(); ++i) {
      if (!qis_const(cs[i])) return false;
    }
    return true;
  };

  if (is_direct_func(f)) {
    // T2 first (priority), but the arg = x, constant-h1, degree-1 overlap
    // belongs to T1.
    if (d == 1) {
      std::optional<QPoly> g;
      if (arg_is_x) {
        g = QPoly{Rational(0), Rational(1)};
      } else {
        g = extract_qpoly(arg);
      }
      if (g && !(arg_is_x && qis_const(cs[1]))) {
        return T2{f, cs[1], *g, qscale(Rational(-1), cs[0])};
      }
      if (!g) return NoMatch{"function argument is not a rational polynomial"};
    }
    if (arg_is_x && upper_coeffs_constant()) {
      // T1: g(f(x)) = h(x); an x-dependent remainder moves to h entirely
      QPoly g(cs.size(), Rational(0));
      for (std::size_t i = 1; i < cs.size(); ++i) {
        g[i] = cs[i].empty() ? Rational(0) : cs[i][0];
      }
      QPoly h;
      if (qis_const(cs[0])) {
        g[0] = cs[0].empty() ? Rational(0) : cs[0][0];
      } else {
        h = qscale(Rational(-1), cs[0]);
      }
      return T1{f, qnormalize(std::move(g)), std::move(h)};
    }
    if (!arg_is_x && d >= 2 && f == Func::Exp) {
      // P1: lambda * (exp(x^j) + a1)^k = g(x)
      auto garg = extract_qpoly(arg);
      bool monomial_arg = garg && qdeg(*garg) >= 1;
      if (monomial_arg) {
        for (int i = 0; i < qdeg(*garg); ++i) {
          if (!(*garg)[static_cast<std::size_t>(i)].is_zero()) {
            monomial_arg = false;
            break;
          }
        }
        if (monomial_arg && garg->back() != Rational(1)) monomial_arg = false;
      }
      if (monomial_arg && upper_coeffs_constant()) {
        const int k = d;
        const Rational lambda = cs.back()[0];
        if (!lambda.is_zero()) {
          const Rational a1 =
              (cs[static_cast<std::size_t>(k - 1)].empty()
                   ? Rational(0)
                   : cs[static_cast<std::size_t>(k - 1)][0]) /
              (Rational(k) * lambda);
          bool binomial = true;
          Rational binom(1);  // C(k, k-i) built iteratively from i = k down
          for (int i = k; i >= 1 && binomial; --i) {
            Rational expect =
                lambda * binom * a1.pow(k - i);
            Rational actual = cs[static_cast<std::size_t>(i)].empty()
                                  ? Rational(0)
                                  : cs[static_cast<std::size_t>(i)][0];
            if (actual != expect) binomial = false;
            binom = binom * Rational(i) / Rational(k - i + 1);
          }
          if (binomial) {
            QPoly g = qscale(Rational(-1) / lambda, cs[0]);
            QPoly a1k{a1.pow(k)};
            g = qadd(g, a1k);
            return P1{f, qdeg(*garg), a1, k, std::move(g)};
          }
        }
      }
      return NoMatch{"no supported shape for a higher-degree composite"};
    }
    return NoMatch{"no supported direct-function shape"};
  }

  if (is_inverse_func(f)) {
    if (arg_is_x && d == 1 && qis_const(cs[1])) {
      const Rational c1 = cs[1].empty() ? Rational(0) : cs[1][0];
      if (!c1.is_zero()) {
        return C1{f, qscale(Rational(-1) / c1, cs[0])};
      }
    }
    return NoMatch{"no supported inverse-function shape"};
  }
  return NoMatch{"unsupported function"};
}

}  // namespace

bool is_direct_func(Func f) {
  switch (f) {
    case Func::Exp:
    case Func::Ln:
    case Func::Sin:
    case Func::Cos:
    case Func::Tan:
    case Func::Csc:
    case Func::Sec:
    case Func::Cot:
    case Func::Sinh:
    case Func::Cosh:
    case Func::Tanh:
    case Func::Coth:
      return true;
    default:
      return false;
  }
}

bool is_inverse_func(Func f) { return !is_direct_func(f); }

}  // namespace detail

// --- public surface ---------------------------------------------------------

namespace {

Expr rewrite_even(const Expr& e) {
  switch (e.kind()) {
    case Expr::Kind::RationalConst:
    case Expr::Kind::NamedConst:
    case Expr::Kind::FormalTau:
    case Expr::Kind::Var:
      return e;
    case Expr::Kind::Binary: {
      Expr a = rewrite_even(e.left());
      Expr b = rewrite_even(e.right());
      switch (e.bin_op()) {
        case BinOp::Add: return Expr::sum(std::move(a), std::move(b));
        case BinOp::Sub: return Expr::difference(std::move(a), std::move(b));
        case BinOp::Mul: return Expr::product(std::move(a), std::move(b));
        case BinOp::Div: return Expr::quotient(std::move(a), std::move(b));
      }
      return e;  // unreachable
    }
    case Expr::Kind::Apply:
      return Expr::apply(e.func(), rewrite_even(e.arg()));
    case Expr::Kind::IntPow: {
      Expr base = rewrite_even(e.base());
      long long n = e.exponent();
      if (n >= 2 && n % 2 == 0 && base.kind() == Expr::Kind::Apply) {
        Expr u = base.arg();
        std::optional<Expr> sq;
        switch (base.func()) {
          case Func::Cos:  // cos^2 -> 1 - sin^2
            sq = Expr::difference(Expr::integer(1),
                                  Expr::int_pow(Expr::apply(Func::Sin, u), 2));
            break;
          case Func::Tan:  // tan^2 -> sec^2 - 1
            sq = Expr::difference(Expr::int_pow(Expr::apply(Func::Sec, u), 2),
                                  Expr::integer(1));
            break;
          case Func::Cot:  // cot^2 -> csc^2 - 1
            sq = Expr::difference(Expr::int_pow(Expr::apply(Func::Csc, u), 2),
                                  Expr::integer(1));
            break;
          default:
            break;
        }
        if (sq) return n == 2 ? *sq : Expr::int_pow(*sq, n / 2);
      }
      return Expr::int_pow(std::move(base), n);
    }
  }
  return e;  // unreachable
}

}  // namespace

Expr rewrite_even_trig(const Expr& e) { return rewrite_even(e); }

Equation rewrite_even_trig(const Equation& eq) {
  return {rewrite_even(eq.lhs), rewrite_even(eq.rhs)};
}

RuleForm match_rule(const Equation& eq) {
  return detail::match_rule_full(eq).form;
}

CandidateSet exceptional_candidates(const RuleForm& form) {
  CandidateSet out;
  auto add_scan = [&out](const detail::RootScan& scan, const char* what) {
    for (const auto& r : scan.roots) out.roots.push_back(r);
    if (!scan.complete) {
      out.unexamined.push_back(
          std::string("unexamined candidates: irrational roots of ") + what +
          (detail::qis_zero(scan.remaining)
               ? std::string()
               : " (" + qpoly_to_string(scan.remaining) + ")"));
    }
  };
  if (const T1* t1 = std::get_if<T1>(&form)) {
    out.roots.push_back(Rational(0));  // the function argument is x itself
    if (t1->f == Func::Ln) out.roots.push_back(Rational(1));
  } else if (const T2* t2 = std::get_if<T2>(&form)) {
    add_scan(detail::rational_roots(t2->g), "the argument polynomial");
    add_scan(detail::rational_roots(t2->h1), "the coefficient polynomial");
    if (t2->f == Func::Ln) {
      QPoly gm1 = detail::qsub(t2->g, QPoly{Rational(1)});
      add_scan(detail::rational_roots(gm1),
               "the argument-minus-one polynomial");
    }
  } else if (std::get_if<P1>(&form) != nullptr) {
    out.roots.push_back(Rational(0));  // argument x^j vanishes only at 0
  } else if (const C1* c1 = std::get_if<C1>(&form)) {
    // rational points where the inverse function takes an algebraic value
    switch (c1->inv) {
      case Func::Asin:
      case Func::Atan:
        out.roots.push_back(Rational(0));
        break;
      case Func::Acos:
      case Func::Asec:
        out.roots.push_back(Rational(1));
        break;
      default:  // acot, acsc: no rational algebraic points
        break;
    }
  }
  std::sort(out.roots.begin(), out.roots.end());
  out.roots.erase(std::unique(out.roots.begin(), out.roots.end()),
                  out.roots.end());
  return out;
}

}  // namespace transcend
