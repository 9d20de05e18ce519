#include "xsep/witness.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "xsep/scalar_opt.hpp"
#include "xsep/xnorm.hpp"

namespace xsep {

namespace {

constexpr double kHypRelTol = 1e-10;

bool block_psd(const std::array<double, 4>& s, const std::array<double, 4>& t,
               const CVec4& u) {
  constexpr double kEigTol = 1e-10;
  for (int i = 0; i < 4; ++i) {
    double a = s[static_cast<size_t>(i)];
    double b = t[static_cast<size_t>(i)];
    double m = std::abs(u[i]);
    double half = 0.5 * (a - b);
    if (0.5 * (a + b) - std::sqrt(half * half + m * m) < -kEigTol) return false;
  }
  return true;
}

}  // namespace

AValue a_value(const std::array<double, 4>& s, const std::array<double, 4>& t,
               double tol) {
  for (int i = 0; i < 4; ++i)
    if (s[static_cast<size_t>(i)] < 0 || t[static_cast<size_t>(i)] < 0)
      throw std::invalid_argument("a_value: entries must be nonnegative");

  double cross_s = s[0] * t[1] * t[2] * s[3];
  double cross_t = t[0] * s[1] * s[2] * t[3];
  double prods[4] = {s[0] * t[0], s[1] * t[1], s[2] * t[2], s[3] * t[3]};
  double scale = std::max({cross_s, cross_t, prods[0], prods[1], prods[2], prods[3], 1e-300});

  AValue out;
  if (std::abs(cross_s - cross_t) <= kHypRelTol * std::max(cross_s, cross_t) ||
      (cross_s == 0.0 && cross_t == 0.0)) {
    double v = 0;
    for (double p : prods) v += std::sqrt(p);
    out.value = out.lo = v;
    out.closed_form = true;
    return out;
  }
  double pmax = std::max({prods[0], prods[1], prods[2], prods[3]});
  double pmin = std::min({prods[0], prods[1], prods[2], prods[3]});
  if (pmax - pmin <= kHypRelTol * std::max(pmax, 1e-300)) {
    double v = 2.0 * std::pow(cross_s, 0.25) + 2.0 * std::pow(cross_t, 0.25);
    out.value = out.lo = v;
    out.closed_form = true;
    return out;
  }
  (void)scale;

  AObjective g;
  g.s14 = s[0] * s[3];
  g.t14 = t[0] * t[3];
  g.c14 = s[0] * t[0] + s[3] * t[3];
  g.s23 = s[1] * s[2];
  g.t23 = t[1] * t[2];
  g.c23 = s[1] * t[1] + s[2] * t[2];
  ScalarMin m = a_min_certified(g, -30.0, 30.0, tol);
  out.value = m.value;
  out.lo = m.lo;
  out.closed_form = false;
  return out;
}

double b_value(const CVec4& u) { return x_norm(u).value; }

double c_value(const CVec4& z) {
  return b_value({z[0], z[1], z[2], std::conj(z[3])});
}

WitnessCheck is_witness(const Witness& w, double tol) {
  if (block_psd(w.s, w.t, w.u)) return WitnessCheck::No;
  AValue a = a_value(w.s, w.t, tol);
  auto b = x_norm(w.u, tol);
  if (a.lo >= b.hi) return WitnessCheck::Yes;
  if (a.value < b.lo) return WitnessCheck::No;
  return WitnessCheck::Inconclusive;
}

double pair_value(const XState& rho, const Witness& w) {
  double out = 0;
  for (int i = 0; i < 4; ++i) {
    out += rho.a[static_cast<size_t>(i)] * w.s[static_cast<size_t>(i)];
    out += rho.b[static_cast<size_t>(i)] * w.t[static_cast<size_t>(i)];
  }
  cplx anti = 0;
  for (int i = 0; i < 4; ++i) anti += rho.c[i] * w.u[i];
  return out + 2.0 * anti.real();
}

double l_value(const XState& rho, const CVec4& z) {
  return (z[0] * rho.c[0] + z[1] * rho.c[1] + z[2] * rho.c[2] +
          z[3] * std::conj(rho.c[3]))
      .real();
}

BalanceFactors BalanceFactors::from_fourth_powers(double a4, double b4, double g4) {
  if (!(a4 > 0 && b4 > 0 && g4 > 0))
    throw std::invalid_argument("BalanceFactors: fourth powers must be positive");
  return {std::pow(a4, 0.25), std::pow(b4, 0.25), std::pow(g4, 0.25)};
}

namespace {

void scale_diagonals(std::array<double, 4>& x, std::array<double, 4>& y,
                     const BalanceFactors& f) {
  if (!(f.alpha > 0 && f.beta > 0 && f.gamma > 0))
    throw std::invalid_argument("scale_conjugate: factors must be positive");
  double a = f.alpha, b = f.beta, g = f.gamma;
  x = {a * b * g * x[0], a * b / g * x[1], a / b * g * x[2], a / (b * g) * x[3]};
  y = {y[0] / (a * b * g), g * y[1] / (a * b), b * y[2] / (a * g), b * g * y[3] / a};
}

}  // namespace

XState scale_conjugate(const XState& rho, const BalanceFactors& f) {
  XState out = rho;
  scale_diagonals(out.a, out.b, f);
  return out;
}

Witness scale_conjugate(const Witness& w, const BalanceFactors& f) {
  Witness out = w;
  scale_diagonals(out.s, out.t, f);
  return out;
}

BalanceFactors balance_sym(const std::array<double, 4>& a,
                           const std::array<double, 4>& b) {
  double cross_a = a[0] * b[1] * b[2] * a[3];
  double cross_b = b[0] * a[1] * a[2] * b[3];
  if (std::abs(cross_a - cross_b) > kHypRelTol * std::max({cross_a, cross_b, 1e-300}))
    throw std::invalid_argument("balance_sym: a1 b2 b3 a4 != b1 a2 a3 b4");
  if (!(a[0] > 0 && a[3] > 0 && b[2] > 0 && b[1] > 0 && b[0] > 0))
    throw std::invalid_argument("balance_sym: zero denominator");
  double a4 = b[0] * b[3] / (a[0] * a[3]);
  double b4 = b[0] * a[2] / (a[0] * b[2]);
  double g4 = b[0] * a[1] / (a[0] * b[1]);
  return BalanceFactors::from_fourth_powers(a4, b4, g4);
}

BalanceFactors balance_uni(const std::array<double, 4>& a,
                           const std::array<double, 4>& b) {
  double pmax = 0, pmin = std::numeric_limits<double>::infinity();
  for (int i = 0; i < 4; ++i) {
    double p = a[static_cast<size_t>(i)] * b[static_cast<size_t>(i)];
    pmax = std::max(pmax, p);
    pmin = std::min(pmin, p);
  }
  if (pmax - pmin > kHypRelTol * std::max(pmax, 1e-300))
    throw std::invalid_argument("balance_uni: a_i b_i are not all equal");
  if (!(a[0] > 0 && a[3] > 0 && b[1] > 0 && b[2] > 0))
    throw std::invalid_argument("balance_uni: zero denominator");
  double a4 = b[1] * b[2] / (a[0] * a[3]);
  double b4 = b[1] * a[3] / (a[0] * b[2]);
  double g4 = b[2] * a[3] / (a[0] * b[1]);
  return BalanceFactors::from_fourth_powers(a4, b4, g4);
}

Witness symmetrize(const Witness& x) {
  Witness out = x;
  for (int i = 0; i < 4; ++i) {
    double avg = 0.5 * (x.s[static_cast<size_t>(i)] + x.t[static_cast<size_t>(i)]);
    out.s[static_cast<size_t>(i)] = avg;
    out.t[static_cast<size_t>(i)] = avg;
  }
  return out;
}

Witness uniformize(const Witness& x) {
  Witness out = x;
  double fam1 = 0.25 * (x.s[0] + x.t[1] + x.t[2] + x.s[3]);
  double fam2 = 0.25 * (x.t[0] + x.s[1] + x.s[2] + x.t[3]);
  out.s = {fam1, fam2, fam2, fam1};
  out.t = {fam2, fam1, fam1, fam2};
  return out;
}

}  // namespace xsep
