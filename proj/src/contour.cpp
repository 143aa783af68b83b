// Argument-principle machinery: adaptive Gauss-Legendre contour integration
// of F'/F over rectangle boundaries, recursive subdivision to isolate zeros,
// and the minimum-modulus search.
#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <limits>

#include "transcend/roots.hpp"

namespace transcend {

namespace {

using Cplx = std::complex<double>;

const double kPi = std::acos(-1.0);

struct GaussLegendre16 {
  std::array<double, 16> x{};
  std::array<double, 16> w{};
};

// Nodes/weights for the 16-point rule on [-1, 1], by Newton iteration on the
// Legendre recurrence (deterministic, no transcription).
const GaussLegendre16& gl16() {
  static const GaussLegendre16 rule = [] {
    GaussLegendre16 r;
    constexpr int n = 16;
    for (int i = 0; i < n; ++i) {
      double x = std::cos(kPi * (i + 0.75) / (n + 0.5));
      double dp = 0.0;
      for (int it = 0; it < 64; ++it) {
        double p0 = 1.0, p1 = x;
        for (int k = 2; k <= n; ++k) {
          double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
          p0 = p1;
          p1 = p2;
        }
        dp = n * (x * p1 - p0) / (x * x - 1.0);
        double step = p1 / dp;
        x -= step;
        if (std::fabs(step) < 1e-15) break;
      }
      r.x[static_cast<std::size_t>(i)] = x;
      r.w[static_cast<std::size_t>(i)] = 2.0 / ((1.0 - x * x) * dp * dp);
    }
    return r;
  }();
  return rule;
}

// One Gauss-Legendre panel of the logarithmic derivative along [za, zb].
Cplx panel(const CompiledEquation& F, Cplx za, Cplx zb) {
  const auto& rule = gl16();
  const Cplx half = 0.5 * (zb - za);
  const Cplx mid = 0.5 * (za + zb);
  Cplx acc = 0.0;
  for (int i = 0; i < 16; ++i) {
    Cplx z = mid + rule.x[static_cast<std::size_t>(i)] * half;
    Cplx fz;
    try {
      fz = F.cplx(z);
    } catch (const DomainError&) {
      throw BoundaryZero("singular point on the integration contour");
    }
    if (fz == 0.0 || !std::isfinite(fz.real()) || !std::isfinite(fz.imag())) {
      throw BoundaryZero("zero encountered on the integration contour");
    }
    Cplx d = F.dcplx(z);
    acc += rule.w[static_cast<std::size_t>(i)] * (d / fz);
  }
  return acc * half;
}

Cplx edge_integral(const CompiledEquation& F, Cplx za, Cplx zb, double tol,
                   int depth) {
  Cplx whole = panel(F, za, zb);
  Cplx mid = 0.5 * (za + zb);
  Cplx split = panel(F, za, mid) + panel(F, mid, zb);
  if (std::abs(whole - split) < tol) return split;
  if (depth >= 16) {
    // A pole essentially on the contour: returning the principal-value-like
    // sum would silently split a zero's residue across the cut, so fail and
    // let the caller jitter the contour instead.
    throw BoundaryZero("contour integral did not converge near the boundary");
  }
  return edge_integral(F, za, mid, tol * 0.5, depth + 1) +
         edge_integral(F, mid, zb, tol * 0.5, depth + 1);
}

// Single winding attempt over the rectangle boundary; no jitter.  Throws
// BoundaryZero when a contour value vanishes or the total refuses to snap to
// an integer.
int winding_once(const CompiledEquation& F, const Region& r) {
  const Cplx c1(r.re_lo, r.im_lo), c2(r.re_hi, r.im_lo), c3(r.re_hi, r.im_hi),
      c4(r.re_lo, r.im_hi);
  for (double edge_tol : {1e-3, 1e-5, 1e-7}) {
    Cplx total = edge_integral(F, c1, c2, edge_tol, 0) +
                 edge_integral(F, c2, c3, edge_tol, 0) +
                 edge_integral(F, c3, c4, edge_tol, 0) +
                 edge_integral(F, c4, c1, edge_tol, 0);
    Cplx w = total / Cplx(0.0, 2.0 * kPi);
    double n = std::round(w.real());
    if (std::abs(w - Cplx(n, 0.0)) <= 0.25) return static_cast<int>(n);
  }
  throw BoundaryZero("winding total did not settle near an integer");
}

Region expanded(const Region& r, double amount) {
  return {r.re_lo - amount, r.re_hi + amount, r.im_lo - amount,
          r.im_hi + amount};
}

std::optional<Cplx> newton_polish(const CompiledEquation& F, Cplx z0,
                                  double tol) {
  Cplx z = z0;
  for (int it = 0; it < 100; ++it) {
    Cplx fz;
    try {
      fz = F.cplx(z);
    } catch (const DomainError&) {
      return std::nullopt;
    }
    if (std::abs(fz) < tol) return z;
    Cplx d;
    try {
      d = F.dcplx(z);
    } catch (const DomainError&) {
      return std::nullopt;
    }
    if (d == 0.0 || !std::isfinite(d.real()) || !std::isfinite(d.imag())) {
      return std::nullopt;
    }
    z -= fz / d;
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
      return std::nullopt;
    }
  }
  return std::nullopt;
}

constexpr std::array<double, 5> kSplitFractions = {0.5, 0.53, 0.47, 0.56,
                                                  0.44};

void subdivide(const CompiledEquation& F, const Region& r, int n, int depth,
               const ContourOptions& opts, std::vector<RootComplex>& out) {
  if (n <= 0) return;
  if (n == 1) {
    auto z = newton_polish(F, r.center(), opts.tol);
    if (z && r.contains(*z)) {
      out.push_back({*z, std::abs(F.cplx(*z)), r, 1});
      return;
    }
    // Newton failed or left the region: keep shrinking
  }
  if (depth >= opts.max_depth || r.diameter() < opts.min_diameter) {
    // A cluster that refuses to separate: report the (unpolished for n > 1)
    // center with its multiplicity.
    Cplx c = r.center();
    Cplx best = c;
    if (n == 1) {
      if (auto z = newton_polish(F, c, opts.tol)) best = *z;
    }
    double resid;
    try {
      resid = std::abs(F.cplx(best));
    } catch (const DomainError&) {
      resid = std::numeric_limits<double>::infinity();
    }
    out.push_back({best, resid, r, n});
    return;
  }
  for (double frac : kSplitFractions) {
    const double rm = r.re_lo + frac * (r.re_hi - r.re_lo);
    const double im = r.im_lo + frac * (r.im_hi - r.im_lo);
    const std::array<Region, 4> kids = {
        Region{r.re_lo, rm, r.im_lo, im}, Region{rm, r.re_hi, r.im_lo, im},
        Region{r.re_lo, rm, im, r.im_hi}, Region{rm, r.re_hi, im, r.im_hi}};
    std::array<int, 4> counts{};
    bool ok = true;
    int sum = 0;
    try {
      for (std::size_t i = 0; i < 4; ++i) {
        counts[i] = winding_once(F, kids[i]);
        sum += counts[i];
      }
    } catch (const BoundaryZero&) {
      ok = false;
    }
    if (ok && sum != n) ok = false;  // a zero slipped through a cut line
    if (!ok) continue;
    for (std::size_t i = 0; i < 4; ++i) {
      subdivide(F, kids[i], counts[i], depth + 1, opts, out);
    }
    return;
  }
  throw BoundaryZero(
      "could not find a zero-free subdivision cut; a zero sits on every "
      "candidate cut line");
}

}  // namespace

int winding_count(const CompiledEquation& F, const Region& region,
                  const ContourOptions& opts) {
  (void)opts;
  const double jitter = 1e-4 * region.diameter();
  for (int attempt = 0; attempt <= 5; ++attempt) {
    try {
      return winding_once(F, expanded(region, attempt * jitter));
    } catch (const BoundaryZero&) {
      if (attempt == 5) throw;
    }
  }
  throw BoundaryZero("winding count failed after jitter retries");
}

std::vector<RootComplex> solve_complex_all(const CompiledEquation& F,
                                           const Region& region,
                                           const ContourOptions& opts) {
  int n = winding_count(F, region, opts);
  std::vector<RootComplex> out;
  subdivide(F, region, n, 0, opts, out);
  std::sort(out.begin(), out.end(), [](const RootComplex& a,
                                       const RootComplex& b) {
    if (a.value.real() != b.value.real()) {
      return a.value.real() < b.value.real();
    }
    return a.value.imag() < b.value.imag();
  });
  // Merge zeros closer than the resolution limit.  Newton stops once
  // |F| < tol, which near a k-fold zero leaves |z - z*| ~ tol^(1/k); a double
  // zero split by a cut line therefore reports two copies ~2*sqrt(tol) apart
  // that are really one zero of multiplicity two.
  const double merge_radius = 10.0 * std::sqrt(opts.tol);
  std::vector<RootComplex> dedup;
  for (const auto& rc : out) {
    if (!dedup.empty() &&
        std::abs(dedup.back().value - rc.value) < merge_radius) {
      RootComplex& prev = dedup.back();
      const double total = prev.count + rc.count;
      prev.value = (prev.value * double(prev.count) +
                    rc.value * double(rc.count)) /
                   total;
      prev.count += rc.count;
      prev.region = {std::min(prev.region.re_lo, rc.region.re_lo),
                     std::max(prev.region.re_hi, rc.region.re_hi),
                     std::min(prev.region.im_lo, rc.region.im_lo),
                     std::max(prev.region.im_hi, rc.region.im_hi)};
      try {
        prev.residual = std::abs(F.cplx(prev.value));
      } catch (const DomainError&) {
        prev.residual = std::numeric_limits<double>::infinity();
      }
      continue;
    }
    dedup.push_back(rc);
  }
  return dedup;
}

std::optional<RootComplex> min_modulus_zero(const CompiledEquation& F,
                                            double radius,
                                            const ContourOptions& opts) {
  if (!(radius > 0)) throw Error("min_modulus_zero requires a positive radius");
  Region square{-radius, radius, -radius, radius};
  std::vector<RootComplex> zeros = solve_complex_all(F, square, opts);
  const double cut = radius * (1.0 + 1e-9);
  std::optional<RootComplex> best;
  for (const auto& z : zeros) {
    const double mod = std::abs(z.value);
    if (mod > cut) continue;
    if (!best) {
      best = z;
      continue;
    }
    const double best_mod = std::abs(best->value);
    const double tie_eps = 1e-9 * (1.0 + best_mod);
    if (mod < best_mod - tie_eps) {
      best = z;
    } else if (mod <= best_mod + tie_eps) {
      // Modulus tie: prefer positive imaginary part, then smaller real part.
      const bool z_pos = z.value.imag() > 0.0;
      const bool b_pos = best->value.imag() > 0.0;
      if (z_pos != b_pos) {
        if (z_pos) best = z;
      } else if (z.value.real() < best->value.real()) {
        best = z;
      }
    }
  }
  return best;
}

}  // namespace transcend
