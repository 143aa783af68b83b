// Node machinery: construction (with the IntPow/GenPow normalizations),
// observers, structural equality, and the precedence-aware printer.
#include "transcend/expr.hpp"

#include <array>
#include <cassert>
#include <utility>

namespace transcend {

struct Expr::Node {
  Kind kind = Kind::Var;
  Rational rat;          // RationalConst
  Named named{};         // NamedConst
  BinOp op{};            // Binary
  long long expnt = 0;   // IntPow
  Func fn{};             // Apply
  NodePtr a;             // left / base / arg
  NodePtr b;             // right
};

namespace {

constexpr std::array<const char*, 18> kFuncNames = {
    "exp", "ln", "sin", "cos", "tan", "csc", "sec", "cot",
    "sinh", "cosh", "tanh", "coth", "asin", "acos", "atan",
    "acot", "asec", "acsc"};

Expr::NodePtr make_node(Expr::Node n) {
  return std::make_shared<const Expr::Node>(std::move(n));
}

}  // namespace

const char* func_name(Func f) { return kFuncNames[static_cast<int>(f)]; }

std::optional<Func> func_from_name(std::string_view name) {
  for (int i = 0; i < static_cast<int>(kFuncNames.size()); ++i) {
    if (name == kFuncNames[i]) return static_cast<Func>(i);
  }
  // arc- aliases for the inverse functions
  if (name.size() > 3 && name.substr(0, 3) == "arc") {
    return func_from_name(std::string("a") + std::string(name.substr(3)));
  }
  return std::nullopt;
}

std::optional<Named> named_from_string(std::string_view name) {
  if (name == "e") return Named::E;
  if (name == "pi") return Named::Pi;
  if (name == "i") return Named::I;
  return std::nullopt;
}

// --- factories -------------------------------------------------------------

Expr Expr::rational(Rational r) {
  Node n;
  n.kind = Kind::RationalConst;
  n.rat = std::move(r);
  return Expr(make_node(std::move(n)));
}

Expr Expr::named(Named tag) {
  Node n;
  n.kind = Kind::NamedConst;
  n.named = tag;
  return Expr(make_node(std::move(n)));
}

Expr Expr::tau() {
  Node n;
  n.kind = Kind::FormalTau;
  return Expr(make_node(std::move(n)));
}

Expr Expr::var() {
  Node n;
  n.kind = Kind::Var;
  return Expr(make_node(std::move(n)));
}

static Expr make_binary(BinOp op, Expr a, Expr b) {
  Expr::Node n;
  n.kind = Expr::Kind::Binary;
  n.op = op;
  n.a = a.node();
  n.b = b.node();
  return Expr(std::make_shared<const Expr::Node>(std::move(n)));
}

Expr Expr::sum(Expr a, Expr b) { return make_binary(BinOp::Add, std::move(a), std::move(b)); }
Expr Expr::difference(Expr a, Expr b) { return make_binary(BinOp::Sub, std::move(a), std::move(b)); }
Expr Expr::product(Expr a, Expr b) { return make_binary(BinOp::Mul, std::move(a), std::move(b)); }
Expr Expr::quotient(Expr a, Expr b) { return make_binary(BinOp::Div, std::move(a), std::move(b)); }

Expr Expr::int_pow(Expr base, long long exponent) {
  if (exponent < 0) {
    bool negatable_base = false;
    switch (base.kind()) {
      case Kind::Var:
      case Kind::FormalTau:
      case Kind::NamedConst:
        negatable_base = true;
        break;
      case Kind::RationalConst:
        if (base.rational_value().is_zero()) {
          throw DivisionByZero("0 raised to a negative power");
        }
        negatable_base = true;
        break;
      default:
        break;
    }
    if (!negatable_base) {
      return quotient(integer(1), int_pow(std::move(base), -exponent));
    }
  }
  Node n;
  n.kind = Kind::IntPow;
  n.expnt = exponent;
  n.a = base.node();
  return Expr(make_node(std::move(n)));
}

Expr Expr::gen_pow(Expr base, Expr exponent) {
  if (exponent.kind() == Kind::RationalConst &&
      exponent.rational_value().is_integer()) {
    const Int num = exponent.rational_value().numerator();
    if (num >= -(1ll << 40) && num <= (1ll << 40)) {
      return int_pow(std::move(base), num.convert_to<long long>());
    }
  }
  if (base.kind() == Kind::NamedConst && base.named_tag() == Named::E) {
    return apply(Func::Exp, std::move(exponent));
  }
  return apply(Func::Exp,
               product(std::move(exponent), apply(Func::Ln, std::move(base))));
}

Expr Expr::apply(Func f, Expr arg) {
  Node n;
  n.kind = Kind::Apply;
  n.fn = f;
  n.a = arg.node();
  return Expr(make_node(std::move(n)));
}

Expr Expr::negate(Expr a) {
  if (a.kind() == Kind::RationalConst) {
    return rational(-a.rational_value());
  }
  return product(integer(-1), std::move(a));
}

// --- observers -------------------------------------------------------------

Expr::Kind Expr::kind() const { return node_->kind; }
const Rational& Expr::rational_value() const {
  assert(kind() == Kind::RationalConst);
  return node_->rat;
}
Named Expr::named_tag() const {
  assert(kind() == Kind::NamedConst);
  return node_->named;
}
BinOp Expr::bin_op() const {
  assert(kind() == Kind::Binary);
  return node_->op;
}
Expr Expr::left() const {
  assert(kind() == Kind::Binary);
  return Expr(node_->a);
}
Expr Expr::right() const {
  assert(kind() == Kind::Binary);
  return Expr(node_->b);
}
Expr Expr::base() const {
  assert(kind() == Kind::IntPow);
  return Expr(node_->a);
}
long long Expr::exponent() const {
  assert(kind() == Kind::IntPow);
  return node_->expnt;
}
Func Expr::func() const {
  assert(kind() == Kind::Apply);
  return node_->fn;
}
Expr Expr::arg() const {
  assert(kind() == Kind::Apply);
  return Expr(node_->a);
}

namespace {

bool contains_kind(const Expr::Node* n, Expr::Kind k,
                   Named tag = Named::E, bool check_tag = false) {
  if (n == nullptr) return false;
  if (n->kind == k && (!check_tag || n->named == tag)) return true;
  return contains_kind(n->a.get(), k, tag, check_tag) ||
         contains_kind(n->b.get(), k, tag, check_tag);
}

}  // namespace

bool Expr::contains_var() const {
  return contains_kind(node_.get(), Kind::Var);
}
bool Expr::contains_tau() const {
  return contains_kind(node_.get(), Kind::FormalTau);
}
bool Expr::contains_named(Named tag) const {
  return contains_kind(node_.get(), Kind::NamedConst, tag, true);
}

namespace {

bool nodes_equal(const Expr::Node* x, const Expr::Node* y) {
  if (x == y) return true;
  if (x == nullptr || y == nullptr) return false;
  if (x->kind != y->kind) return false;
  switch (x->kind) {
    case Expr::Kind::RationalConst:
      return x->rat == y->rat;
    case Expr::Kind::NamedConst:
      return x->named == y->named;
    case Expr::Kind::FormalTau:
    case Expr::Kind::Var:
      return true;
    case Expr::Kind::Binary:
      return x->op == y->op && nodes_equal(x->a.get(), y->a.get()) &&
             nodes_equal(x->b.get(), y->b.get());
    case Expr::Kind::IntPow:
      return x->expnt == y->expnt && nodes_equal(x->a.get(), y->a.get());
    case Expr::Kind::Apply:
      return x->fn == y->fn && nodes_equal(x->a.get(), y->a.get());
  }
  return false;
}

}  // namespace

bool operator==(const Expr& a, const Expr& b) {
  return nodes_equal(a.node().get(), b.node().get());
}

// --- printer ---------------------------------------------------------------
//
// Precedence levels: 1 additive, 2 multiplicative, 3 unary minus, 4 power,
// 5 atoms.  A subexpression is parenthesized when its level is below the
// minimum its context requires.  Product(-1, u) prints as unary minus so
// parser output round-trips to the same tree.

namespace {

constexpr int kAdd = 1, kMul = 2, kNeg = 3, kPow = 4, kAtom = 5;

void print_node(const Expr& e, int min_level, std::string& out);

std::string rational_text(const Rational& r) {
  if (auto dec = r.decimal_string()) return *dec;
  return r.to_string();  // "p/q": reparses as a quotient of the same value
}

int rational_level(const Rational& r) {
  // "p/q" text reparses as a term-level quotient (its leading minus, if any,
  // binds tighter than the '/'), so it must take multiplicative precedence
  // even when negative; "e/-14/15" would otherwise regroup as (e/-14)/15.
  if (!r.is_integer() && !r.decimal_string()) return kMul;
  if (r.is_negative()) return kNeg;
  return kAtom;
}

void print_node(const Expr& e, int min_level, std::string& out) {
  switch (e.kind()) {
    case Expr::Kind::RationalConst: {
      const Rational& r = e.rational_value();
      int level = rational_level(r);
      if (level < min_level) {
        out += '(';
        out += rational_text(r);
        out += ')';
      } else {
        out += rational_text(r);
      }
      return;
    }
    case Expr::Kind::NamedConst:
      out += e.named_tag() == Named::E ? "e"
             : e.named_tag() == Named::Pi ? "pi"
                                          : "i";
      return;
    case Expr::Kind::FormalTau:
      out += "tau";
      return;
    case Expr::Kind::Var:
      out += "x";
      return;
    case Expr::Kind::Apply:
      out += func_name(e.func());
      out += '(';
      print_node(e.arg(), kAdd, out);
      out += ')';
      return;
    case Expr::Kind::IntPow: {
      bool parens = kPow < min_level;
      if (parens) out += '(';
      print_node(e.base(), kAtom, out);
      out += '^';
      out += std::to_string(e.exponent());
      if (parens) out += ')';
      return;
    }
    case Expr::Kind::Binary: {
      BinOp op = e.bin_op();
      // unary minus special case
      if (op == BinOp::Mul && e.left().is_rational(Rational(-1))) {
        bool parens = kNeg < min_level;
        if (parens) out += '(';
        out += '-';
        print_node(e.right(), kPow, out);
        if (parens) out += ')';
        return;
      }
      int level = (op == BinOp::Add || op == BinOp::Sub) ? kAdd : kMul;
      bool parens = level < min_level;
      if (parens) out += '(';
      // left-associative: the right operand needs a strictly tighter level
      print_node(e.left(), level, out);
      out += op == BinOp::Add   ? " + "
             : op == BinOp::Sub ? " - "
             : op == BinOp::Mul ? "*"
                                : "/";
      print_node(e.right(), level + 1, out);
      if (parens) out += ')';
      return;
    }
  }
}

}  // namespace

std::string Expr::to_string() const {
  std::string out;
  print_node(*this, kAdd, out);
  return out;
}

}  // namespace transcend
