// Numeric root isolation for equations built from the expression grammar:
// sign-change scanning and hybrid bisection/Newton on the real line, argument-
// principle winding counts and recursive subdivision in the complex plane, and
// a small exhaustive algebraicity screen for computed roots.
#pragma once

#include <complex>
#include <optional>
#include <vector>

#include "transcend/expr.hpp"

namespace transcend {

struct Interval {
  double lo = 0.0;
  double hi = 0.0;
  double width() const { return hi - lo; }
  double mid() const { return 0.5 * (lo + hi); }
};

// Axis-aligned closed rectangle in the complex plane.
struct Region {
  double re_lo = 0.0, re_hi = 0.0;
  double im_lo = 0.0, im_hi = 0.0;
  std::complex<double> center() const {
    return {0.5 * (re_lo + re_hi), 0.5 * (im_lo + im_hi)};
  }
  double diameter() const;
  bool contains(std::complex<double> z) const {
    return z.real() >= re_lo && z.real() <= re_hi && z.imag() >= im_lo &&
           z.imag() <= im_hi;
  }
};

struct RootReal {
  double value = 0.0;
  double residual = 0.0;  // |F(value)|
  Interval bracket;       // the bracket the root was isolated in
};

struct RootComplex {
  std::complex<double> value;
  double residual = 0.0;  // |F(value)|
  Region region;          // isolating rectangle
  int count = 1;          // winding count of the isolating region
};

struct ScanReport {
  std::vector<Interval> brackets;  // sign changes: F(lo)*F(hi) < 0
  std::vector<Interval> skipped;   // steps where evaluation failed (poles...)
};

// F = lhs - rhs compiled with its derivative for the solvers.
class CompiledEquation {
 public:
  explicit CompiledEquation(const Equation& eq,
                            std::optional<double> tau_value = std::nullopt);
  double real(double x) const;                       // may throw DomainError
  std::complex<double> cplx(std::complex<double> z) const;
  double dreal(double x) const;
  std::complex<double> dcplx(std::complex<double> z) const;
  const Expr& f() const { return f_; }
  const Expr& df() const { return df_; }

 private:
  Expr f_;
  Expr df_;
  std::optional<double> tau_;
};

// Walk [domain.lo, domain.hi] in steps of `step`, recording sign-change
// brackets; sub-steps where evaluation throws are reported as skipped.
ScanReport bracket_scan(const CompiledEquation& F, Interval domain, double step);

// Bisection to width 1e-3, then Newton with the exact symbolic derivative;
// Newton steps that leave the bracket (or stall) fall back to bisection.
// Throws NoSignChange when the bracket has none, NonConvergence past the
// iteration cap.
RootReal solve_real(const CompiledEquation& F, Interval bracket,
                    double tol = 1e-12);

struct ContourOptions {
  int max_depth = 40;          // subdivision depth cap
  double min_diameter = 1e-6;  // stop refining below this region size
  double tol = 1e-12;          // Newton polish tolerance on |F|
};

// Number of zeros (with multiplicity) inside the region, by the argument
// principle: composite 16-node Gauss-Legendre panels per edge, panels split
// until the edge integral is stable, total snapped to the nearest integer
// (within 0.25, else the panels are refined further).  A zero on the boundary
// raises BoundaryZero after five deterministic jitter expansions.
int winding_count(const CompiledEquation& F, const Region& region,
                  const ContourOptions& opts = {});

// All zeros in the region by recursive four-way subdivision of winding
// counts, Newton-polished, deduplicated; count-1 regions isolate their zero.
std::vector<RootComplex> solve_complex_all(const CompiledEquation& F,
                                           const Region& region,
                                           const ContourOptions& opts = {});

// Smallest-modulus zero with |z| <= radius (squares circumscribing the disk,
// results filtered by modulus); nullopt when the disk is zero-free.
std::optional<RootComplex> min_modulus_zero(const CompiledEquation& F,
                                            double radius,
                                            const ContourOptions& opts = {});

// Exhaustive search for an integer polynomial p with deg <= max_degree,
// coefficients in [-max_height, max_height], content 1, positive leading
// coefficient, and |p(value)| < tol; degree ascending then lexicographic.
// Returns the first hit's coefficients (index = degree) or nullopt.
std::optional<std::vector<long long>> algebraicity_probe(double value,
                                                         int max_degree,
                                                         long long max_height,
                                                         double tol);

}  // namespace transcend
