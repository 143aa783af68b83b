// Exact Laurent polynomials in the formal transcendental tau over Q, the
// graded-subspace membership predicates, grading utilities, classification,
// and decimal approximation of a real tau specialization.
#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "transcend/expr.hpp"
#include "transcend/rational.hpp"

namespace transcend {

// Sparse exact Laurent polynomial sum c_k tau^k, k in Z.  The map holds only
// nonzero coefficients.
class LaurentPoly {
 public:
  LaurentPoly() = default;
  static LaurentPoly zero() { return {}; }
  static LaurentPoly constant(const Rational& c);
  static LaurentPoly monomial(const Rational& c, int k);

  const std::map<int, Rational>& terms() const { return terms_; }
  Rational coeff(int k) const;
  void set_coeff(int k, const Rational& c);  // erases on zero

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;                      // support within {0}
  std::optional<int> min_degree() const;         // nullopt when zero
  std::optional<int> max_degree() const;
  // Exponents with nonzero coefficient, ascending.
  std::vector<int> support() const;

  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
    return a.terms_ == b.terms_;
  }
  friend bool operator!=(const LaurentPoly& a, const LaurentPoly& b) {
    return !(a == b);
  }

  // "3*tau^2 - 1*tau^-1 + 1/2", descending exponents; "0" for the zero
  // polynomial.  parse_laurent inverts this.
  std::string to_string() const;

  double eval(double tau_value) const;

 private:
  std::map<int, Rational> terms_;
};

LaurentPoly add(const LaurentPoly& a, const LaurentPoly& b);
LaurentPoly sub(const LaurentPoly& a, const LaurentPoly& b);
LaurentPoly mul(const LaurentPoly& a, const LaurentPoly& b);
LaurentPoly scalar_mul(const Rational& c, const LaurentPoly& p);

// Laurent form of a constant expression with `base` treated as tau: the base
// node itself maps to tau^1, rationals to coefficients; returns nullopt when
// the expression is not a Laurent polynomial in the base with rational
// coefficients (division only by monomials, negative powers only of
// monomials).  With base = Expr::tau() this reads grammar text like
// "3*tau^2 - 1*tau^-1 + 1/2".
std::optional<LaurentPoly> extract_laurent(const Expr& e, const Expr& base);

// Parse grammar text (no '=', no x) into a Laurent polynomial in tau.
// Throws SyntaxError/UnknownFunction on bad text; returns nullopt when the
// text parses but is not a Laurent polynomial in tau.
std::optional<LaurentPoly> parse_laurent(std::string_view text);

// Dimension of the truncation subspace [tau]_{n,m}: n + m + 1.
int truncation_dim(int n, int m);

// Membership in [tau]_{n,m} = span{tau^n, ..., tau^-m}: exponents within
// [-m, n].  The starred variant additionally excludes a constant term
// (degree 0 outside the allowed support).
bool in_truncation(const LaurentPoly& p, int n, int m);
bool in_truncation_star(const LaurentPoly& p, int n, int m);

// One level of the N-grading: the component spanned by {tau^k, tau^-k}
// (just constants for k = 0).
struct GradedComponent {
  int level = 0;
  LaurentPoly part;
};

// Splits p into graded components, descending by level, zero parts omitted;
// the parts sum back to p.
std::vector<GradedComponent> grade_decompose(const LaurentPoly& p);

enum class LaurentClass { Rational, Transcendental };

// Constant polynomials take rational values; everything else takes
// transcendental values at tau (clearing denominators would otherwise give an
// integer polynomial vanishing at tau).
LaurentClass classify_element(const LaurentPoly& p);

// Equivalence modulo rationals: p ~ q exactly when p - q is constant, i.e.
// the two elements differ by a rational value.  Distinct monomials tau^i,
// tau^j (i != j, both nonzero) always land in different classes.
bool same_class(const LaurentPoly& p, const LaurentPoly& q);

struct DenseApprox {
  Rational offset;       // q = m / 10^d added to tau
  int decimal_places;    // minimal d with |tau + q - target| < eps
  double achieved_error;
};

// Minimal-denominator decimal shift: smallest d >= 0 and integer m such that
// |tau_value + m/10^d - target| < eps (m = round((target - tau_value)*10^d)).
DenseApprox dense_approx(double tau_value, double target, double eps);

// The grade-preserving correspondence tau^k <-> x^k between nonnegative-
// support Laurent polynomials and Q[x] coefficient vectors (index = degree).
std::optional<std::vector<Rational>> to_poly_coeffs(const LaurentPoly& p);
LaurentPoly from_poly_coeffs(const std::vector<Rational>& coeffs);

}  // namespace transcend
