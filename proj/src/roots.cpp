// Real root isolation (scan + hybrid bisection/Newton) and the exhaustive
// integer-polynomial algebraicity screen.
#include "transcend/roots.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace transcend {

double Region::diameter() const {
  return std::hypot(re_hi - re_lo, im_hi - im_lo);
}

CompiledEquation::CompiledEquation(const Equation& eq,
                                   std::optional<double> tau_value)
    : f_(simplify_constants(Expr::difference(eq.lhs, eq.rhs))),
      df_(differentiate(f_)),
      tau_(tau_value) {}

double CompiledEquation::real(double x) const {
  return eval_real(f_, x, tau_);
}

std::complex<double> CompiledEquation::cplx(std::complex<double> z) const {
  return eval(f_, z, tau_);
}

double CompiledEquation::dreal(double x) const {
  return eval_real(df_, x, tau_);
}

std::complex<double> CompiledEquation::dcplx(std::complex<double> z) const {
  return eval(df_, z, tau_);
}

ScanReport bracket_scan(const CompiledEquation& F, Interval domain,
                        double step) {
  if (!(step > 0)) throw Error("bracket_scan requires a positive step");
  ScanReport report;
  bool first = true;
  double prev_x = 0.0;
  std::optional<double> prev_v;
  for (double x = domain.lo; x < domain.hi + step * 0.5; x += step) {
    const double here = std::min(x, domain.hi);
    std::optional<double> v;
    try {
      const double val = F.real(here);
      if (std::isfinite(val)) v = val;
    } catch (const DomainError&) {
      // sample not evaluable; the surrounding steps land in `skipped`
    }
    if (!first) {
      if (prev_v && v) {
        // a sample hitting zero exactly yields a degenerate bracket
        if (*v == 0.0 || *prev_v * *v < 0.0) {
          report.brackets.push_back({prev_x, here});
        }
      } else {
        report.skipped.push_back({prev_x, here});
      }
    }
    first = false;
    prev_x = here;
    prev_v = v;
    if (here >= domain.hi) break;
  }
  return report;
}

RootReal solve_real(const CompiledEquation& F, Interval bracket, double tol) {
  double lo = bracket.lo, hi = bracket.hi;
  double flo = F.real(lo), fhi = F.real(hi);
  if (flo == 0.0) return {lo, 0.0, bracket};
  if (fhi == 0.0) return {hi, 0.0, bracket};
  if (flo * fhi > 0.0) {
    throw NoSignChange("no sign change on [" + std::to_string(lo) + ", " +
                       std::to_string(hi) + "]");
  }
  // stage 1: bisection to a narrow bracket
  constexpr double kNewtonWidth = 1e-3;
  while (hi - lo > kNewtonWidth) {
    double mid = 0.5 * (lo + hi);
    double fmid;
    try {
      fmid = F.real(mid);
    } catch (const DomainError&) {
      // nudge off the bad point, keeping the bracket valid
      mid = std::nextafter(mid, hi);
      fmid = F.real(mid);
    }
    if (fmid == 0.0) return {mid, 0.0, bracket};
    if (flo * fmid < 0.0) {
      hi = mid;
      fhi = fmid;
    } else {
      lo = mid;
      flo = fmid;
    }
  }
  // stage 2: Newton from the midpoint, bisection fallback on escape or stall
  double x = 0.5 * (lo + hi);
  double fx = F.real(x);
  constexpr int kMaxIter = 50;
  for (int it = 0; it < kMaxIter; ++it) {
    if (std::fabs(fx) < tol) return {x, std::fabs(fx), bracket};
    bool newton_ok = false;
    double xn = 0.0;
    try {
      double d = F.dreal(x);
      if (d != 0.0 && std::isfinite(d)) {
        xn = x - fx / d;
        newton_ok = std::isfinite(xn) && xn > lo && xn < hi;
      }
    } catch (const DomainError&) {
      newton_ok = false;
    }
    if (!newton_ok) {
      xn = 0.5 * (lo + hi);  // bisection step
    }
    double fn;
    try {
      fn = F.real(xn);
    } catch (const DomainError&) {
      xn = 0.5 * (lo + hi);
      fn = F.real(xn);
    }
    // maintain the bracket
    if (flo * fn <= 0.0) {
      hi = xn;
      fhi = fn;
    } else {
      lo = xn;
      flo = fn;
    }
    x = xn;
    fx = fn;
    if (hi - lo < 1e-17 && std::fabs(fx) < 1e-6) {
      // the bracket collapsed to adjacent doubles; accept the best point
      return {x, std::fabs(fx), bracket};
    }
  }
  if (std::fabs(fx) < std::sqrt(tol)) {
    return {x, std::fabs(fx), bracket};
  }
  throw NonConvergence("root refinement did not reach tolerance " +
                       std::to_string(tol) + " after " +
                       std::to_string(kMaxIter) + " iterations");
}

std::optional<std::vector<long long>> algebraicity_probe(double value,
                                                         int max_degree,
                                                         long long max_height,
                                                         double tol) {
  if (max_degree < 1 || max_height < 1) return std::nullopt;
  // powers of the value up to max_degree
  std::vector<double> powers(static_cast<std::size_t>(max_degree) + 1, 1.0);
  for (int i = 1; i <= max_degree; ++i) {
    powers[static_cast<std::size_t>(i)] =
        powers[static_cast<std::size_t>(i - 1)] * value;
  }
  std::vector<long long> coeffs;
  for (int deg = 1; deg <= max_degree; ++deg) {
    coeffs.assign(static_cast<std::size_t>(deg) + 1, -max_height);
    coeffs[static_cast<std::size_t>(deg)] = 1;  // positive leading coefficient
    while (true) {
      // content-1 check
      long long g = 0;
      for (long long c : coeffs) g = std::gcd(g, std::llabs(c));
      if (g == 1) {
        double acc = 0.0;
        for (int i = 0; i <= deg; ++i) {
          acc += static_cast<double>(coeffs[static_cast<std::size_t>(i)]) *
                 powers[static_cast<std::size_t>(i)];
        }
        if (std::fabs(acc) < tol) return coeffs;
      }
      // lexicographic advance: low-order coefficients fastest
      int pos = 0;
      for (; pos <= deg; ++pos) {
        if (coeffs[static_cast<std::size_t>(pos)] < max_height) {
          ++coeffs[static_cast<std::size_t>(pos)];
          break;
        }
        coeffs[static_cast<std::size_t>(pos)] =
            pos == deg ? 1 : -max_height;
      }
      if (pos > deg) break;  // all vectors of this degree exhausted
    }
  }
  return std::nullopt;
}

}  // namespace transcend
