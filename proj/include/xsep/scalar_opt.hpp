#pragma once

#include <algorithm>
#include <cmath>
#include <queue>
#include <utility>
#include <vector>

#include "xsep/cvec.hpp"

namespace xsep {

/// Brent local maximization on [a,b]: golden section with parabolic steps.
/// Returns (argmax, f(argmax)). Only function values at evaluated points are
/// reported, so the result is always a feasible value.
template <class F>
std::pair<double, double> brent_max(F&& f, double a, double b,
                                    double tol_x = 1e-12, int max_iter = 160) {
  constexpr double cgold = 0.3819660112501051;
  double x = a + cgold * (b - a), w = x, v = x;
  double fx = f(x), fw = fx, fv = fx;
  double d = 0.0, e = 0.0;
  for (int it = 0; it < max_iter; ++it) {
    double xm = 0.5 * (a + b);
    double tol1 = tol_x * std::abs(x) + 1e-15;
    double tol2 = 2.0 * tol1;
    if (std::abs(x - xm) <= tol2 - 0.5 * (b - a)) break;
    bool parabolic = false;
    if (std::abs(e) > tol1) {
      double r = (x - w) * (fx - fv);
      double q = (x - v) * (fx - fw);
      double p = (x - v) * q - (x - w) * r;
      q = 2.0 * (q - r);
      if (q > 0.0) p = -p;
      q = std::abs(q);
      double etemp = e;
      e = d;
      if (std::abs(p) < std::abs(0.5 * q * etemp) && p > q * (a - x) &&
          p < q * (b - x)) {
        parabolic = true;
        d = p / q;
        double u = x + d;
        if (u - a < tol2 || b - u < tol2) d = (xm > x) ? tol1 : -tol1;
      }
    }
    if (!parabolic) {
      e = (x >= xm) ? a - x : b - x;
      d = cgold * e;
    }
    double u = (std::abs(d) >= tol1) ? x + d : x + ((d > 0) ? tol1 : -tol1);
    double fu = f(u);
    if (fu >= fx) {
      if (u >= x) a = x; else b = x;
      v = w; w = x; x = u;
      fv = fw; fw = fx; fx = fu;
    } else {
      if (u < x) a = u; else b = u;
      if (fu >= fw || w == x) {
        v = w; fv = fw; w = u; fw = fu;
      } else if (fu >= fv || v == x || v == w) {
        v = u; fv = fu;
      }
    }
  }
  return {x, fx};
}

/// f(x) = sqrt(s1 + p1 cos(x - d1)) + sqrt(s2 + p2 cos(x - d2)), 2pi-periodic.
/// Covers the anti-diagonal functionals: both terms are moduli of two
/// interfering amplitudes, so s = r^2 + r'^2, p = 2 r r', lip = min(r,r').
struct TwoTerm {
  double s1 = 0, p1 = 0, d1 = 0;
  double s2 = 0, p2 = 0, d2 = 0;
  double lip = 0;

  double operator()(double x) const {
    double u = s1 + p1 * std::cos(x - d1);
    double v = s2 + p2 * std::cos(x - d2);
    return std::sqrt(u > 0 ? u : 0.0) + std::sqrt(v > 0 ? v : 0.0);
  }

  static TwoTerm from_pairs(double r1, double r4, double phi1, double r2,
                            double r3, double phi2) {
    TwoTerm t;
    t.s1 = r1 * r1 + r4 * r4;
    t.p1 = 2.0 * r1 * r4;
    t.d1 = phi1;
    t.s2 = r2 * r2 + r3 * r3;
    t.p2 = 2.0 * r2 * r3;
    t.d2 = phi2;
    t.lip = std::min(r1, r4) + std::min(r2, r3);
    return t;
  }

  double deriv(double x) const {
    double out = 0;
    double u = s1 + p1 * std::cos(x - d1);
    if (u > 0) out += -0.5 * p1 * std::sin(x - d1) / std::sqrt(u);
    double v = s2 + p2 * std::cos(x - d2);
    if (v > 0) out += -0.5 * p2 * std::sin(x - d2) / std::sqrt(v);
    return out;
  }

  /// Upper bound for f over [x - w, x + w], given fmid = f(x). Uses the
  /// Taylor bound with an interval curvature estimate when the moduli stay
  /// away from zero, else the Lipschitz bound.
  double interval_bound(double fmid, double x, double w) const;
};

struct ScalarMax {
  double value = 0;  // best evaluated f, a valid lower bound of the max
  double arg = 0;
  double hi = 0;  // certified upper bound (== value when not certified)
};

/// Grid scan plus Brent refinement of the best cells. No certification.
ScalarMax tt_max_fast(const TwoTerm& f, int grid_n = 32);

/// Grid pass, refinement, then Lipschitz branch-and-bound until
/// hi - value <= tol (or the evaluation cap is hit; the bracket stays valid).
ScalarMax tt_max_certified(const TwoTerm& f, double tol, int grid_n = 4096);

/// g(x) = sqrt(s14 e^{-2x} + t14 e^{2x} + c14) + sqrt(s23 e^{-2x} + t23 e^{2x} + c23),
/// the diagonal witness functional in log r coordinates.
struct AObjective {
  double s14 = 0, t14 = 0, c14 = 0;
  double s23 = 0, t23 = 0, c23 = 0;

  double operator()(double x) const {
    double em = std::exp(-2.0 * x), ep = std::exp(2.0 * x);
    double u = s14 * em + t14 * ep + c14;
    double v = s23 * em + t23 * ep + c23;
    return std::sqrt(u > 0 ? u : 0.0) + std::sqrt(v > 0 ? v : 0.0);
  }
};

struct ScalarMin {
  double value = 0;  // best evaluated g, a valid upper bound of the inf
  double arg = 0;
  double lo = 0;  // certified lower bound
};

/// Certified minimization on [x_lo, x_hi] using the multiplicative bound
/// g(y) >= g(x) exp(-|y-x|) (each term has |d log term / dx| <= 1).
ScalarMin a_min_certified(const AObjective& g, double x_lo, double x_hi,
                          double tol);

}  // namespace xsep
