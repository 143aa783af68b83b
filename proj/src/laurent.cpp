#include "transcend/laurent.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <utility>
#include <vector>

namespace transcend {

LaurentPoly LaurentPoly::constant(const Rational& c) {
  return monomial(c, 0);
}

LaurentPoly LaurentPoly::monomial(const Rational& c, int k) {
  LaurentPoly p;
  p.set_coeff(k, c);
  return p;
}

Rational LaurentPoly::coeff(int k) const {
  auto it = terms_.find(k);
  return it == terms_.end() ? Rational(0) : it->second;
}

void LaurentPoly::set_coeff(int k, const Rational& c) {
  if (c.is_zero()) {
    terms_.erase(k);
  } else {
    terms_[k] = c;
  }
}

bool LaurentPoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == 0);
}

std::optional<int> LaurentPoly::min_degree() const {
  if (terms_.empty()) return std::nullopt;
  return terms_.begin()->first;
}

std::optional<int> LaurentPoly::max_degree() const {
  if (terms_.empty()) return std::nullopt;
  return terms_.rbegin()->first;
}

std::vector<int> LaurentPoly::support() const {
  std::vector<int> s;
  s.reserve(terms_.size());
  for (const auto& [k, c] : terms_) s.push_back(k);
  return s;
}

std::string LaurentPoly::to_string() const {
  if (terms_.empty()) return "0";
  // Grade order: descending |k|, the positive exponent before its mirror, so
  // the text matches the decomposition order ("3*tau^2 - 1*tau^-1 + 1/2").
  std::vector<std::pair<int, Rational>> ordered(terms_.begin(), terms_.end());
  std::sort(ordered.begin(), ordered.end(), [](const auto& a, const auto& b) {
    const int ga = std::abs(a.first), gb = std::abs(b.first);
    if (ga != gb) return ga > gb;
    return a.first > b.first;
  });
  std::string out;
  bool first = true;
  for (const auto& [k, c] : ordered) {
    if (first) {
      if (c.is_negative()) out += "-";
      first = false;
    } else {
      out += c.is_negative() ? " - " : " + ";
    }
    Rational a = c.abs();
    if (k == 0) {
      out += a.to_string();
    } else {
      out += a.to_string() + "*tau";
      if (k != 1) out += "^" + std::to_string(k);
    }
  }
  return out;
}

double LaurentPoly::eval(double tau_value) const {
  double acc = 0.0;
  for (const auto& [k, c] : terms_) {
    acc += c.to_double() * std::pow(tau_value, static_cast<double>(k));
  }
  return acc;
}

LaurentPoly add(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly r = a;
  for (const auto& [k, c] : b.terms()) r.set_coeff(k, r.coeff(k) + c);
  return r;
}

LaurentPoly sub(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly r = a;
  for (const auto& [k, c] : b.terms()) r.set_coeff(k, r.coeff(k) - c);
  return r;
}

LaurentPoly mul(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly r;
  for (const auto& [ka, ca] : a.terms()) {
    for (const auto& [kb, cb] : b.terms()) {
      r.set_coeff(ka + kb, r.coeff(ka + kb) + ca * cb);
    }
  }
  return r;
}

LaurentPoly scalar_mul(const Rational& c, const LaurentPoly& p) {
  LaurentPoly r;
  if (c.is_zero()) return r;
  for (const auto& [k, v] : p.terms()) r.set_coeff(k, c * v);
  return r;
}

namespace {

std::optional<LaurentPoly> pow_laurent(const LaurentPoly& p, long long n) {
  if (n < 0) {
    // only monomials are invertible in the Laurent ring
    if (p.terms().size() != 1) return std::nullopt;
    auto [k, c] = *p.terms().begin();
    long long kk = static_cast<long long>(k) * n;
    return LaurentPoly::monomial(c.pow(n), static_cast<int>(kk));
  }
  LaurentPoly acc = LaurentPoly::constant(Rational(1));
  for (long long i = 0; i < n; ++i) acc = mul(acc, p);
  return acc;
}

}  // namespace

std::optional<LaurentPoly> extract_laurent(const Expr& e, const Expr& base) {
  if (e == base) return LaurentPoly::monomial(Rational(1), 1);
  switch (e.kind()) {
    case Expr::Kind::RationalConst:
      return LaurentPoly::constant(e.rational_value());
    case Expr::Kind::NamedConst:
    case Expr::Kind::FormalTau:
    case Expr::Kind::Var:
    case Expr::Kind::Apply:
      return std::nullopt;  // a symbol other than the base
    case Expr::Kind::Binary: {
      auto a = extract_laurent(e.left(), base);
      auto b = extract_laurent(e.right(), base);
      if (!a || !b) return std::nullopt;
      switch (e.bin_op()) {
        case BinOp::Add: return add(*a, *b);
        case BinOp::Sub: return sub(*a, *b);
        case BinOp::Mul: return mul(*a, *b);
        case BinOp::Div: {
          if (b->is_zero()) return std::nullopt;
          if (b->terms().size() != 1) return std::nullopt;
          auto [k, c] = *b->terms().begin();
          return mul(*a, LaurentPoly::monomial(Rational(1) / c, -k));
        }
      }
      return std::nullopt;  // unreachable
    }
    case Expr::Kind::IntPow: {
      auto u = extract_laurent(e.base(), base);
      if (!u) return std::nullopt;
      return pow_laurent(*u, e.exponent());
    }
  }
  return std::nullopt;  // unreachable
}

std::optional<LaurentPoly> parse_laurent(std::string_view text) {
  Expr e = parse_expr(text);
  return extract_laurent(e, Expr::tau());
}

int truncation_dim(int n, int m) { return n + m + 1; }

bool in_truncation(const LaurentPoly& p, int n, int m) {
  for (const auto& [k, c] : p.terms()) {
    if (k < -m || k > n) return false;
  }
  return true;
}

bool in_truncation_star(const LaurentPoly& p, int n, int m) {
  return in_truncation(p, n, m) && p.coeff(0).is_zero();
}

std::vector<GradedComponent> grade_decompose(const LaurentPoly& p) {
  std::map<int, LaurentPoly> levels;
  for (const auto& [k, c] : p.terms()) {
    levels[std::abs(k)].set_coeff(k, c);
  }
  std::vector<GradedComponent> out;
  out.reserve(levels.size());
  for (auto it = levels.rbegin(); it != levels.rend(); ++it) {
    out.push_back({it->first, it->second});
  }
  return out;
}

LaurentClass classify_element(const LaurentPoly& p) {
  return p.is_constant() ? LaurentClass::Rational
                         : LaurentClass::Transcendental;
}

bool same_class(const LaurentPoly& p, const LaurentPoly& q) {
  return classify_element(sub(p, q)) == LaurentClass::Rational;
}

DenseApprox dense_approx(double tau_value, double target, double eps) {
  if (!(eps > 0)) throw Error("dense_approx requires eps > 0");
  double gap = target - tau_value;
  for (int d = 0;; ++d) {
    double scale = std::pow(10.0, d);
    double m = std::round(gap * scale);
    double err = std::fabs(tau_value + m / scale - target);
    if (err < eps) {
      Rational offset(Int(static_cast<long long>(m)),
                      Rational(10).pow(d).numerator());
      return {offset, d, err};
    }
    if (d > 400) throw NonConvergence("dense_approx failed to reach eps");
  }
}

std::optional<std::vector<Rational>> to_poly_coeffs(const LaurentPoly& p) {
  if (auto lo = p.min_degree(); lo && *lo < 0) return std::nullopt;
  int deg = p.max_degree().value_or(0);
  std::vector<Rational> coeffs(static_cast<std::size_t>(deg) + 1, Rational(0));
  if (p.is_zero()) return std::vector<Rational>{Rational(0)};
  for (const auto& [k, c] : p.terms()) {
    coeffs[static_cast<std::size_t>(k)] = c;
  }
  return coeffs;
}

LaurentPoly from_poly_coeffs(const std::vector<Rational>& coeffs) {
  LaurentPoly p;
  for (std::size_t k = 0; k < coeffs.size(); ++k) {
    p.set_coeff(static_cast<int>(k), coeffs[k]);
  }
  return p;
}

}  // namespace transcend
