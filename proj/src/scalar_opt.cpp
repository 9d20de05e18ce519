#include "xsep/scalar_opt.hpp"

#include <limits>

namespace xsep {

namespace {

// min of cos over [a, b] (b - a <= 2 pi): -1 if the interval crosses an odd
// multiple of pi, else the smaller endpoint value.
double cos_min(double a, double b) {
  double k = std::ceil((a - kPi) / (2.0 * kPi));
  double odd_pi = kPi + 2.0 * kPi * k;
  if (odd_pi >= a && odd_pi <= b) return -1.0;
  return std::min(std::cos(a), std::cos(b));
}

// curvature bound of sqrt(s + p cos u) over the u-interval, or +inf when the
// modulus can vanish there.
double term_curvature(double s, double p, double ua, double ub) {
  if (p <= 0) return 0.0;
  double g2 = s + p * cos_min(ua, ub);
  if (g2 <= 1e-30) return std::numeric_limits<double>::infinity();
  double g = std::sqrt(g2);
  return 0.5 * p / g + 0.25 * p * p / (g2 * g);
}

// Brent-refine around x0 +- h, update best in place.
template <class F>
void refine_cell(const F& f, double x0, double h, ScalarMax& best,
                 double tol_x = 1e-13, int iters = 160) {
  auto [xr, fr] = brent_max(f, x0 - h, x0 + h, tol_x, iters);
  if (fr > best.value) {
    best.value = fr;
    best.arg = xr;
  }
}

}  // namespace

double TwoTerm::interval_bound(double fmid, double x, double w) const {
  double lip_bound = fmid + lip * w;
  double m2 = term_curvature(s1, p1, x - d1 - w, x - d1 + w) +
              term_curvature(s2, p2, x - d2 - w, x - d2 + w);
  if (!std::isfinite(m2)) return lip_bound;
  double taylor = fmid + std::abs(deriv(x)) * w + 0.5 * m2 * w * w;
  return std::min(lip_bound, taylor);
}

ScalarMax tt_max_fast(const TwoTerm& f, int grid_n) {
  const double h = 2.0 * kPi / grid_n;
  ScalarMax best;
  best.value = -1.0;
  int ibest = 0, isecond = -1;
  double fbest = -1.0, fsecond = -1.0;
  std::vector<double> vals(static_cast<size_t>(grid_n));
  for (int i = 0; i < grid_n; ++i) {
    double v = f(i * h);
    vals[static_cast<size_t>(i)] = v;
    if (v > fbest) {
      fbest = v;
      ibest = i;
    }
  }
  // second basin: best local max at least two cells away from the winner
  for (int i = 0; i < grid_n; ++i) {
    int d = std::abs(i - ibest);
    d = std::min(d, grid_n - d);
    if (d <= 2) continue;
    double v = vals[static_cast<size_t>(i)];
    double prev = vals[static_cast<size_t>((i + grid_n - 1) % grid_n)];
    double next = vals[static_cast<size_t>((i + 1) % grid_n)];
    if (v >= prev && v >= next && v > fsecond) {
      fsecond = v;
      isecond = i;
    }
  }
  best.value = fbest;
  best.arg = ibest * h;
  refine_cell(f, ibest * h, h, best, 1e-9, 36);
  if (isecond >= 0 && fsecond >= 0.9 * fbest)
    refine_cell(f, isecond * h, h, best, 1e-9, 36);
  best.hi = best.value;
  return best;
}

ScalarMax tt_max_certified(const TwoTerm& f, double tol, int grid_n) {
  const double h = 2.0 * kPi / grid_n;
  ScalarMax best;
  best.value = -1.0;

  struct Node {
    double bound, center, halfwidth, fmid;
    bool operator<(const Node& o) const { return bound < o.bound; }
  };
  std::priority_queue<Node> heap;

  for (int i = 0; i < grid_n; ++i) {
    double x = (i + 0.5) * h;
    double v = f(x);
    if (v > best.value) {
      best.value = v;
      best.arg = x;
    }
    heap.push({f.interval_bound(v, x, 0.5 * h), x, 0.5 * h, v});
  }
  refine_cell(f, best.arg, h, best);

  long evals = 0;
  const long eval_cap = 4'000'000;
  while (!heap.empty()) {
    Node top = heap.top();
    if (top.bound <= best.value + tol) break;
    heap.pop();
    double w = 0.5 * top.halfwidth;
    for (int side = -1; side <= 1; side += 2) {
      double x = top.center + side * w;
      double v = f(x);
      ++evals;
      if (v > best.value) {
        best.value = v;
        best.arg = x;
        refine_cell(f, x, 2.0 * w, best);
      }
      double bound = f.interval_bound(v, x, w);
      if (bound > best.value + tol) heap.push({bound, x, w, v});
    }
    if (evals > eval_cap) break;
  }
  // Pruned intervals were bounded by best + tol at prune time and best only
  // grows, so the certified upper bound is best + tol unless the cap fired.
  best.hi = heap.empty() ? best.value + tol
                         : std::max(best.value + tol, heap.top().bound);
  return best;
}

ScalarMin a_min_certified(const AObjective& g, double x_lo, double x_hi,
                          double tol) {
  ScalarMin best;
  const int grid_n = 128;
  const double h = (x_hi - x_lo) / grid_n;
  best.value = std::numeric_limits<double>::infinity();

  struct Node {
    double bound, center, halfwidth, fmid;
    bool operator>(const Node& o) const { return bound > o.bound; }
  };
  std::priority_queue<Node, std::vector<Node>, std::greater<Node>> heap;

  for (int i = 0; i < grid_n; ++i) {
    double x = x_lo + (i + 0.5) * h;
    double v = g(x);
    if (v < best.value) {
      best.value = v;
      best.arg = x;
    }
    heap.push({v * std::exp(-0.5 * h), x, 0.5 * h, v});
  }
  {
    auto [xr, fr] = brent_max([&](double x) { return -g(x); }, best.arg - h,
                              best.arg + h, 1e-13);
    if (-fr < best.value) {
      best.value = -fr;
      best.arg = xr;
    }
  }

  long evals = 0;
  const long eval_cap = 4'000'000;
  while (!heap.empty()) {
    Node top = heap.top();
    if (top.bound >= best.value - tol) break;
    heap.pop();
    double w = 0.5 * top.halfwidth;
    for (int side = -1; side <= 1; side += 2) {
      double x = top.center + side * w;
      double v = g(x);
      ++evals;
      if (v < best.value) {
        best.value = v;
        best.arg = x;
        auto [xr, fr] = brent_max([&](double y) { return -g(y); }, x - 2.0 * w,
                                  x + 2.0 * w, 1e-13);
        if (-fr < best.value) {
          best.value = -fr;
          best.arg = xr;
        }
      }
      double bound = v * std::exp(-w);
      if (bound < best.value - tol) heap.push({bound, x, w, v});
    }
    if (evals > eval_cap) break;
  }
  best.lo = heap.empty() ? best.value - tol
                         : std::min(best.value - tol, heap.top().bound);
  return best;
}

}  // namespace xsep
