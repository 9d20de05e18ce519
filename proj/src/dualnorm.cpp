#include "xsep/dualnorm.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <stdexcept>

#include "xsep/detail/frame.hpp"
#include "xsep/scalar_opt.hpp"
#include "xsep/xnorm.hpp"

namespace xsep {

std::string to_string(DualBranch b) {
  switch (b) {
    case DualBranch::TwoZeros: return "TwoZeros";
    case DualBranch::OneZero: return "OneZero";
    case DualBranch::RealEntries: return "RealEntries";
    case DualBranch::TwoTwo: return "TwoTwo";
    case DualBranch::VkShortcut: return "VkShortcut";
    case DualBranch::Numeric: return "Numeric";
  }
  return "?";
}

std::string to_string(RealCase c) {
  switch (c) {
    case RealCase::A: return "A";
    case RealCase::B: return "B";
    case RealCase::C: return "C";
  }
  return "?";
}

std::string to_string(TriangleClass t) {
  switch (t) {
    case TriangleClass::None: return "NoTriangle";
    case TriangleClass::Obtuse: return "Obtuse";
    case TriangleClass::Right: return "Right";
    case TriangleClass::Acute: return "Acute";
  }
  return "?";
}

namespace {

constexpr double kPhaseTol = 1e-12;
constexpr double kMagRelTol = 1e-12;
constexpr double kZeroRelTol = 1e-14;
constexpr double kCertTol = 8e-10;

// Lambda on possibly signed arguments; on every reachable input the three
// pairwise-sum factors and the product keep the ratio nonnegative.
double lambda_signed(const std::array<double, 4>& l) {
  double f1 = l[0] * l[1] + l[2] * l[3];
  double f2 = l[0] * l[2] + l[1] * l[3];
  double f3 = l[0] * l[3] + l[1] * l[2];
  double q = l[0] * l[1] * l[2] * l[3];
  double ratio = f1 * f2 * f3 / q;
  return std::sqrt(ratio > 0 ? ratio : 0.0);
}

// ||z||_X for real z of odd sign parity (phase difference pi), as a function
// of the magnitudes.
double norm_pi(const std::array<double, 4>& w) {
  for (int i = 0; i < 4; ++i)
    if (w[static_cast<size_t>(i)] <= 0.0)
      return w[0] + w[1] + w[2] + w[3] - 2.0 * w[static_cast<size_t>(i)];
  std::array<double, 4> inv{1 / w[0], 1 / w[1], 1 / w[2], 1 / w[3]};
  double s = inv[0] + inv[1] + inv[2] + inv[3];
  for (int i = 0; i < 4; ++i)
    if (inv[static_cast<size_t>(i)] >= s - inv[static_cast<size_t>(i)])
      return w[0] + w[1] + w[2] + w[3] - 2.0 * w[static_cast<size_t>(i)];
  return lambda_signed(w);
}

double linf_of(const std::array<double, 4>& r) {
  return std::max(std::max(r[0], r[1]), std::max(r[2], r[3]));
}

// Align the global phase of z so Re<c,z> = |<c,z>|.
CVec4 phase_align(const CVec4& c, const CVec4& z) {
  cplx w = pairing(c, z);
  double m = std::abs(w);
  if (m == 0.0) return z;
  return (std::conj(w) / m) * z;
}

// Certified lower-bound evaluation of a candidate: Re<c,z> over a certified
// upper bound of ||z||_X. Scale invariant, so z is normalized first.
double certified_value(const CVec4& c, CVec4 z, double cert_tol = kCertTol) {
  double n2 = 0;
  for (int i = 0; i < 4; ++i) n2 += std::norm(z[i]);
  if (n2 <= 0) return 0.0;
  double inv = 1.0 / std::sqrt(n2);
  for (int i = 0; i < 4; ++i) z[i] *= inv;
  double re = pairing(c, z).real();
  double hi = x_norm(z, cert_tol).hi;
  return (hi > 0) ? re / hi : 0.0;
}

double clamp_cert_tol(double tol) {
  return std::min(kCertTol, std::max(1e-11, 0.5 * tol));
}

// --- real phase-pi maximizer -------------------------------------------------
//
// max over w >= 0 of <rho, w> / norm_pi(w); the acute-triangle and real
// case C maximizers are real with a single sign flip, which norm_pi absorbs.
struct RealPiMax {
  std::array<double, 4> w{};
  double value = 0;
};

RealPiMax maximize_real_pi(const std::array<double, 4>& rho) {
  auto objective = [&](const std::array<double, 4>& w) {
    double num = 0, tot = 0;
    for (int i = 0; i < 4; ++i) {
      num += rho[static_cast<size_t>(i)] * w[static_cast<size_t>(i)];
      tot += w[static_cast<size_t>(i)];
    }
    if (tot <= 0) return 0.0;
    double den = norm_pi(w);
    return den > 0 ? num / den : 0.0;
  };

  std::vector<std::array<double, 4>> starts;
  starts.push_back({0.25, 0.25, 0.25, 0.25});
  double rs = rho[0] + rho[1] + rho[2] + rho[3];
  if (rs > 0)
    starts.push_back({rho[0] / rs, rho[1] / rs, rho[2] / rs, rho[3] / rs});
  starts.push_back({0.3, 0.3, 0.3, 0.1});
  starts.push_back({0.4, 0.3, 0.2, 0.1});
  for (int i = 0; i < 4; ++i)
    if (rho[static_cast<size_t>(i)] == 0.0) {
      std::array<double, 4> s{0.3, 0.3, 0.3, 0.3};
      s[static_cast<size_t>(i)] = 0.15;
      starts.push_back(s);
    }

  RealPiMax best;
  for (auto w : starts) {
    double val = objective(w);
    for (int cycle = 0; cycle < 80; ++cycle) {
      double prev = val;
      for (int i = 0; i < 4; ++i) {
        auto line = [&](double t) {
          auto ww = w;
          ww[static_cast<size_t>(i)] = t;
          return objective(ww);
        };
        auto [t, ft] = brent_max(line, 0.0, 2.0, 1e-14, 120);
        if (ft > val) {
          val = ft;
          w[static_cast<size_t>(i)] = t;
        }
      }
      double tot = w[0] + w[1] + w[2] + w[3];
      if (tot > 0)
        for (auto& x : w) x /= tot;
      if (val - prev <= 1e-15 * (1.0 + std::abs(val))) break;
    }
    if (val > best.value) {
      best.value = val;
      best.w = w;
    }
  }
  return best;
}

// --- numeric ascent ----------------------------------------------------------

double fast_objective(const CVec4& c, const CVec4& z) {
  double den = detail::x_norm_fast(z);
  if (den <= 0) return 0.0;
  return pairing(c, z).real() / den;
}

// Reduced ascent state: z magnitudes and the phase difference of z. The two
// remaining phase freedoms enter Re<c,z> through one interference angle per
// pair, and the optimal pair phases are available in closed form, so they are
// maximized inside the objective instead of being searched. Coordinate moves
// along single explicit phases stall on the phase-sum ridge; these do not.
struct ReducedState {
  std::array<double, 4> rho{};
  double psi = 0;
};

double reduced_objective(const CVec4& c, const std::array<double, 4>& rho,
                         double psi, int grid) {
  auto R = c.magnitudes();
  double phic = phase_difference(c);
  double a = R[0] * rho[0], b = R[3] * rho[3];
  double e = R[1] * rho[1], f = R[2] * rho[2];
  TwoTerm g = TwoTerm::from_pairs(a, b, 0.0, e, f, phic + psi);
  double num = tt_max_fast(g, grid).value;
  double den = detail::x_norm_fast_mag(rho, psi);
  return den > 0 ? num / den : 0.0;
}

ReducedState ascend(const CVec4& c, ReducedState st, int max_cycles = 14) {
  double tot = st.rho[0] + st.rho[1] + st.rho[2] + st.rho[3];
  if (tot <= 0) return st;
  for (auto& r : st.rho) r /= tot;

  double val = reduced_objective(c, st.rho, st.psi, 24);
  int fine_cycles = 0;
  for (int cycle = 0; cycle < max_cycles; ++cycle) {
    double prev = val;
    bool fine = fine_cycles > 0;
    int grid = fine ? 32 : 24;
    for (int coord = 0; coord < 5; ++coord) {
      auto line = [&](double t) {
        auto rho = st.rho;
        double psi = st.psi;
        if (coord < 4)
          rho[static_cast<size_t>(coord)] = t;
        else
          psi = t;
        return reduced_objective(c, rho, psi, grid);
      };
      double lo = (coord < 4) ? 0.0 : st.psi - 0.9 * kPi;
      double hi = (coord < 4) ? 1.2 : st.psi + 0.9 * kPi;
      auto [t, ft] = fine ? brent_max(line, lo, hi, 1e-11, 50)
                          : brent_max(line, lo, hi, 1e-7, 26);
      if (ft > val) {
        val = ft;
        if (coord < 4)
          st.rho[static_cast<size_t>(coord)] = t;
        else
          st.psi = t;
      }
    }
    double m = st.rho[0] + st.rho[1] + st.rho[2] + st.rho[3];
    if (m > 0)
      for (auto& r : st.rho) r /= m;
    st.psi = wrap_angle(st.psi);
    double gain = val - prev;
    if (fine_cycles > 0 && ++fine_cycles > 3) break;
    if (gain <= 1e-11 * (1.0 + std::abs(val))) {
      if (fine_cycles > 0) break;
      fine_cycles = 1;  // finishing passes at full line-search precision
    } else if (gain <= 1e-7 * (1.0 + std::abs(val)) && fine_cycles == 0) {
      fine_cycles = 1;
    }
  }
  return st;
}

// z with the given magnitudes and phase difference psi, with the free pair
// phases aligned to maximize Re<c,z> exactly.
CVec4 aligned_z(const CVec4& c, const std::array<double, 4>& rho, double psi) {
  auto th = c.phases();
  auto R = c.magnitudes();
  double phic = phase_difference(c);
  double a = R[0] * rho[0], b = R[3] * rho[3];
  double e = R[1] * rho[1], f = R[2] * rho[2];
  TwoTerm g = TwoTerm::from_pairs(a, b, 0.0, e, f, phic + psi);
  double s = tt_max_fast(g, 48).arg;
  double s23 = s - phic - psi;
  double x1 = std::atan2(b * std::sin(s), a + b * std::cos(s));
  double x2 = std::atan2(f * std::sin(s23), e + f * std::cos(s23));
  double psi1 = x1 - th[0];
  double psi4 = (s - th[0] - th[3]) - psi1;
  double psi2 = x2 - th[1];
  double psi3 = (s23 - th[1] - th[2]) - psi2;
  return {std::polar(rho[0], psi1), std::polar(rho[1], psi2),
          std::polar(rho[2], psi3), std::polar(rho[3], psi4)};
}

// Structured reduced-space seeds: the basis directions, the magnitudes of c
// and of its symmetrized average, and pair/small-slot patterns over a psi
// grid, ranked by a coarse objective evaluation.
std::vector<ReducedState> reduced_seeds(const CVec4& c, size_t keep) {
  auto R = c.magnitudes();
  std::vector<ReducedState> cands;
  std::vector<double> vals;
  auto consider = [&](std::array<double, 4> rho, double psi) {
    double tot = rho[0] + rho[1] + rho[2] + rho[3];
    if (tot <= 0) return;
    for (auto& x : rho) x /= tot;
    cands.push_back({rho, psi});
    vals.push_back(reduced_objective(c, rho, psi, 24));
  };
  for (int k = 0; k < 4; ++k) {
    std::array<double, 4> rho{0, 0, 0, 0};
    rho[static_cast<size_t>(k)] = 1.0;
    consider(rho, 0.0);
  }
  std::array<double, 4> avg{0.5 * (R[0] + R[3]), 0.5 * (R[1] + R[2]),
                            0.5 * (R[1] + R[2]), 0.5 * (R[0] + R[3])};
  const int npsi = 12;
  for (int ip = 0; ip < npsi; ++ip) {
    double psi = -kPi + 2.0 * kPi * (ip + 0.5) / npsi;
    consider(R, psi);
    consider(avg, psi);
    consider({0.25, 0.25, 0.25, 0.25}, psi);
    for (double t : {0.4, 1.8}) {
      consider({t, 1, 1, t}, psi);
      consider({1, t, t, 1}, psi);
      consider({t, 1, t, 1}, psi);
    }
    consider({1, 1, 1, 0.3}, psi);
  }
  std::vector<size_t> order(cands.size());
  for (size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(),
                   [&](size_t x, size_t y) { return vals[x] > vals[y]; });
  std::vector<ReducedState> out;
  for (size_t i = 0; i < std::min(keep, order.size()); ++i)
    out.push_back(cands[order[i]]);
  return out;
}

ReducedState to_reduced(const CVec4& z) {
  ReducedState st;
  st.rho = z.magnitudes();
  st.psi = phase_difference(z);
  double tot = st.rho[0] + st.rho[1] + st.rho[2] + st.rho[3];
  if (tot > 0)
    for (auto& r : st.rho) r /= tot;
  return st;
}

}  // namespace

// --- closed-form pieces --------------------------------------------------

std::pair<double, CaseData> dual_norm_real(const std::array<double, 4>& c) {
  std::array<double, 4> m{std::abs(c[0]), std::abs(c[1]), std::abs(c[2]),
                          std::abs(c[3])};
  bool has_zero = false;
  int negs = 0;
  for (int i = 0; i < 4; ++i) {
    if (c[static_cast<size_t>(i)] == 0.0) has_zero = true;
    if (c[static_cast<size_t>(i)] < 0.0) ++negs;
  }
  // With a zero entry the remaining signs are removable; otherwise odd sign
  // parity is normalized onto the first entry.
  std::array<double, 4> d = m;
  if (!has_zero && (negs % 2 == 1)) d[0] = -m[0];

  CaseData data;
  data.lambda = {2 * (d[0] + d[1] + d[2] + d[3]), 2 * (-d[0] - d[1] + d[2] + d[3]),
                 2 * (-d[0] + d[1] - d[2] + d[3]), 2 * (-d[0] + d[1] + d[2] - d[3])};
  double s2 = d[0] * d[0] + d[1] * d[1] + d[2] * d[2] + d[3] * d[3];
  data.t = {d[0] * (s2 - 2 * d[0] * d[0]) - 2 * d[1] * d[2] * d[3],
            d[1] * (s2 - 2 * d[1] * d[1]) - 2 * d[0] * d[2] * d[3],
            d[2] * (s2 - 2 * d[2] * d[2]) - 2 * d[0] * d[1] * d[3],
            d[3] * (s2 - 2 * d[3] * d[3]) - 2 * d[0] * d[1] * d[2]};

  double prod = data.lambda[0] * data.lambda[1] * data.lambda[2] * data.lambda[3];
  if (prod <= 0.0) {
    data.which = RealCase::A;
  } else if (data.t[0] * data.t[3] * data.lambda[1] * data.lambda[2] >= 0.0 ||
             data.t[1] * data.t[2] * data.lambda[0] * data.lambda[3] <= 0.0) {
    data.which = RealCase::B;
  } else {
    data.which = RealCase::C;
  }
  double value = (data.which == RealCase::C) ? 0.125 * lambda_signed(data.lambda)
                                             : linf_of(m);
  return {value, data};
}

std::pair<double, TriangleClass> dual_norm_three(const CVec4& c) {
  auto r = c.magnitudes();
  double scale = linf_of(r);
  int zero_at = -1;
  int nz = 0;
  for (int i = 0; i < 4; ++i) {
    if (r[static_cast<size_t>(i)] <= kZeroRelTol * scale) {
      zero_at = i;
      ++nz;
    }
  }
  if (nz != 1)
    throw std::invalid_argument("dual_norm_three: exactly one zero entry required");
  std::array<double, 3> s{};
  int k = 0;
  for (int i = 0; i < 4; ++i)
    if (i != zero_at) s[static_cast<size_t>(k++)] = r[static_cast<size_t>(i)];
  std::sort(s.begin(), s.end());

  double h3 = s[0] + s[1] - s[2];
  if (h3 <= 0.0) return {scale, TriangleClass::None};
  double gap = s[2] * s[2] - (s[0] * s[0] + s[1] * s[1]);
  if (std::abs(gap) <= kMagRelTol * scale * scale) return {scale, TriangleClass::Right};
  if (gap > 0.0) return {scale, TriangleClass::Obtuse};
  double heron = (s[0] + s[1] + s[2]) * (-s[0] + s[1] + s[2]) *
                 (s[0] - s[1] + s[2]) * h3;
  double value = 2.0 * s[0] * s[1] * s[2] / std::sqrt(heron);
  return {value, TriangleClass::Acute};
}

TwoTwoValue dual_norm_two_two(const CVec4& c, const std::array<int, 4>& partition) {
  auto m = c.magnitudes();
  double scale = linf_of(m);
  double r1 = m[static_cast<size_t>(partition[0])];
  double r2 = m[static_cast<size_t>(partition[1])];
  double s1 = m[static_cast<size_t>(partition[2])];
  double s2 = m[static_cast<size_t>(partition[3])];
  if (std::abs(r1 - r2) > 1e-9 * scale || std::abs(s1 - s2) > 1e-9 * scale)
    throw std::invalid_argument("dual_norm_two_two: partition magnitudes differ");
  double r = 0.5 * (r1 + r2), s = 0.5 * (s1 + s2);
  if (r <= 0.0 || s <= 0.0)
    throw std::invalid_argument("dual_norm_two_two: zero magnitude");
  double phi = phase_difference(c);
  TwoTwoValue out;
  if (std::abs(phi) <= kPhaseTol) {
    out.value = std::max(r, s);
    out.t0 = 0.0;
    return out;
  }
  double sp = std::abs(std::sin(0.5 * phi));
  double dd = r * r - s * s;
  out.t0 = (dd + std::sqrt(dd * dd + 4.0 * r * r * s * s * sp * sp)) /
           (2.0 * r * s * sp);
  out.value = std::sqrt(
      (r * r * out.t0 * out.t0 + 2.0 * r * s * out.t0 * sp + s * s) /
      (out.t0 * out.t0 + 1.0));
  return out;
}

VkData vk_test(const CVec4& c) {
  auto m = c.magnitudes();
  for (double mi : m)
    if (mi <= 0.0) throw std::invalid_argument("vk_test: zero magnitude");
  VkData out;
  double s2 = m[0] * m[0] + m[1] * m[1] + m[2] * m[2] + m[3] * m[3];
  double prod = m[0] * m[1] * m[2] * m[3];
  for (int k = 0; k < 4; ++k) {
    double mk = m[static_cast<size_t>(k)];
    out.v[static_cast<size_t>(k)] = mk * (s2 - 2.0 * mk * mk) + 2.0 * prod / mk;
    out.u[static_cast<size_t>(k)] = out.v[static_cast<size_t>(k)];
  }
  out.lambda_minus = {2 * (-m[0] + m[1] + m[2] + m[3]),
                      2 * (m[0] - m[1] + m[2] + m[3]),
                      2 * (m[0] + m[1] - m[2] + m[3]),
                      2 * (m[0] + m[1] + m[2] - m[3])};
  int nonpos = 0;
  for (int k = 0; k < 4; ++k)
    if (out.v[static_cast<size_t>(k)] <= 0.0) {
      ++nonpos;
      out.nonpositive_index = k;
    }
  out.one_nonpositive = (nonpos == 1);
  if (nonpos != 1) out.nonpositive_index = -1;
  out.quadrangle = out.lambda_minus[0] > 0 && out.lambda_minus[1] > 0 &&
                   out.lambda_minus[2] > 0 && out.lambda_minus[3] > 0;
  return out;
}

// --- bounds ------------------------------------------------------------------

namespace {

struct LowerBound {
  std::string name;
  double value;
  std::vector<CVec4> witnesses;  // feasible z attaining at least `value`
};

// 1221-family candidates for the pair partition {i1,i2} u {i3,i4}: the t0
// optimizer and the circumscribed-circle point, transported back. Their
// magnitudes are (t,1,1,t), so their norm has the exact partition form.
std::vector<CVec4> pair_family_candidates(const CVec4& c,
                                          const std::array<int, 4>& partition) {
  detail::Frame fr;
  std::array<int, 4> idx{partition[0], partition[2], partition[3], partition[1]};
  CVec4 arr = detail::arrange(c, idx, fr);
  CVec4 cn = detail::normal_phase_form(arr, fr);
  auto rm = cn.magnitudes();
  double phi = std::abs(phase_difference(cn));
  double m1 = 0.5 * (rm[0] + rm[3]);
  double m2 = 0.5 * (rm[1] + rm[2]);
  if (m1 <= 0 || m2 <= 0) return {};

  // split the phase evenly over the outer pair
  CVec4 u{std::exp(cplx(0.0, 0.5 * phi)), 1.0, 1.0, std::exp(cplx(0.0, -0.5 * phi))};
  fr.push_phase(u);
  CVec4 cs = cn;
  for (int i = 0; i < 4; ++i) cs[i] *= u[i];

  std::vector<CVec4> out;
  auto add = [&](double t, double tau) {
    if (!(t > 0) || !std::isfinite(t)) return;
    cplx zo = t * std::exp(cplx(0.0, tau));
    CVec4 z{zo, 1.0, 1.0, zo};
    out.push_back(fr.pull_z(phase_align(cs, z)));
  };

  double sp = std::abs(std::sin(0.5 * phi));
  if (sp > 0) {
    double dd = m1 * m1 - m2 * m2;
    double t0 = (dd + std::sqrt(dd * dd + 4 * m1 * m1 * m2 * m2 * sp * sp)) /
                (2 * m1 * m2 * sp);
    add(t0, -0.5 * kPi);
    add(t0, 0.5 * kPi);
    add(m2 / m1, -0.5 * kPi);
  }
  double cg = std::cos(0.5 * phi);
  if (cg > 0 && m1 > m2 * cg && m2 > m1 * cg) {
    double t = (m1 - m2 * cg) / (m2 - m1 * cg);
    add(t, -(0.5 * phi + kPi));
    add(t, 0.5 * phi + kPi);
  }
  return out;
}

// max_theta (|c1 e^{i th} + c3| + |c2 e^{i th} + c4 e^{i phi}|) and the
// attaining z with unit-modulus entries and phase difference phi.
std::pair<double, CVec4> maxphi_inner(const CVec4& c, double phi, bool fast) {
  auto r = c.magnitudes();
  auto th = c.phases();
  TwoTerm f = TwoTerm::from_pairs(r[0], r[2], th[2] - th[0], r[1], r[3],
                                  th[3] + phi - th[1]);
  ScalarMax m = fast ? tt_max_fast(f, 48) : tt_max_fast(f, 256);
  double theta = m.arg;
  cplx v1 = c[0] * std::exp(cplx(0.0, theta)) + c[2];
  cplx v2 = c[1] * std::exp(cplx(0.0, theta)) + c[3] * std::exp(cplx(0.0, phi));
  double tau = (std::abs(v1) > 0) ? -std::arg(v1) : 0.0;
  double psi = (std::abs(v2) > 0) ? -std::arg(v2) : 0.0;
  CVec4 z{std::exp(cplx(0.0, theta + tau)), std::exp(cplx(0.0, theta + psi)),
          std::exp(cplx(0.0, tau)), std::exp(cplx(0.0, phi + psi))};
  return {m.value, z};
}

std::vector<LowerBound> lower_bounds_impl(const CVec4& c, bool with_witnesses) {
  std::vector<LowerBound> out;
  auto r = c.magnitudes();
  auto th = c.phases();
  double phi = phase_difference(c);
  double sp = std::abs(std::sin(0.5 * phi));

  {
    LowerBound lb{"linf", linf_of(r), {}};
    if (with_witnesses) {
      int k = 0;
      for (int i = 1; i < 4; ++i)
        if (r[static_cast<size_t>(i)] > r[static_cast<size_t>(k)]) k = i;
      CVec4 z;
      z[k] = std::exp(cplx(0.0, -th[static_cast<size_t>(k)]));
      lb.witnesses.push_back(z);
    }
    out.push_back(std::move(lb));
  }

  static constexpr std::array<std::array<int, 4>, 3> partitions = {
      {{0, 1, 2, 3}, {0, 2, 1, 3}, {0, 3, 1, 2}}};
  static constexpr const char* pair_names[3] = {"pair_avg_12_34", "pair_avg_13_24",
                                                "pair_avg_14_23"};
  static constexpr const char* circ_names[3] = {"circumradius_12_34",
                                                "circumradius_13_24",
                                                "circumradius_14_23"};
  for (int p = 0; p < 3; ++p) {
    const auto& part = partitions[static_cast<size_t>(p)];
    double m1 =
        0.5 * (r[static_cast<size_t>(part[0])] + r[static_cast<size_t>(part[1])]);
    double m2 =
        0.5 * (r[static_cast<size_t>(part[2])] + r[static_cast<size_t>(part[3])]);
    if (m1 <= 0 || m2 <= 0) continue;
    std::vector<CVec4> wits;
    if (with_witnesses) wits = pair_family_candidates(c, part);
    double g = std::sqrt(2.0) * m1 * m2 / std::sqrt(m1 * m1 + m2 * m2) *
               std::sqrt(1.0 + sp);
    out.push_back({pair_names[static_cast<size_t>(p)], g, std::move(wits)});
    double cg = std::cos(0.5 * std::abs(phi));
    double sg = std::sin(0.5 * std::abs(phi));
    if (cg > 0 && sg > 0 && m1 > m2 * cg && m2 > m1 * cg) {
      double R = std::sqrt((m1 * m1 + m2 * m2 - 2 * m1 * m2 * cg) / (sg * sg));
      out.push_back({circ_names[static_cast<size_t>(p)], R, {}});
    }
  }

  {
    const int n = 48;
    double best = 0, best_phi = kPi;
    for (int i = 0; i <= n; ++i) {
      double ph = kPi * i / n;
      double num = maxphi_inner(c, ph, true).first;
      double val =
          num / (2.0 * std::sqrt(2.0) * std::sqrt(1.0 + std::abs(std::cos(0.5 * ph))));
      if (val > best) {
        best = val;
        best_phi = ph;
      }
    }
    LowerBound lb{"maxphi_ratio", best, {}};
    if (with_witnesses) lb.witnesses.push_back(maxphi_inner(c, best_phi, false).second);
    out.push_back(std::move(lb));
  }
  return out;
}

double min_upper_bound(const CVec4& c) {
  double hi = std::numeric_limits<double>::infinity();
  for (auto& [name, v] : dual_upper_bounds(c)) hi = std::min(hi, v);
  return hi;
}

}  // namespace

std::vector<std::pair<std::string, double>> dual_lower_bounds(const CVec4& c) {
  std::vector<std::pair<std::string, double>> out;
  for (auto& lb : lower_bounds_impl(c, false)) out.emplace_back(lb.name, lb.value);
  return out;
}

std::vector<std::pair<std::string, double>> dual_upper_bounds(const CVec4& c) {
  auto r = c.magnitudes();
  std::array<double, 4> s = r;
  std::sort(s.begin(), s.end());
  std::array<double, 4> flipped{-r[0], r[1], r[2], r[3]};
  return {
      {"second_plus_largest", s[1] + s[3]},
      {"sqrt2_linf", std::sqrt(2.0) * s[3]},
      {"l1", s[0] + s[1] + s[2] + s[3]},
      {"real_flip", dual_norm_real(flipped).first},
  };
}

// --- numeric fallback ----------------------------------------------------

namespace {

// Certified floor from the bound witnesses. They are cheap to certify: their
// magnitudes fall in closed partition forms of the norm.
double witness_floor(const CVec4& c, const std::vector<LowerBound>& bounds,
                     CVec4* best_z, double cert_tol = kCertTol) {
  double lo = 0;
  for (const auto& lb : bounds) {
    for (const auto& z : lb.witnesses) {
      double v = certified_value(c, z, cert_tol);
      if (v > lo) {
        lo = v;
        if (best_z) *best_z = z;
      }
    }
  }
  return lo;
}

NumericSearch numeric_impl(const CVec4& c, int starts, double tol,
                           std::uint64_t seed,
                           const std::vector<LowerBound>& bounds) {
  NumericSearch out;
  out.hi = min_upper_bound(c);
  const double cert_tol = clamp_cert_tol(tol);

  size_t n_scan = (starts >= 16) ? 6 : 3;
  std::vector<ReducedState> seeds = reduced_seeds(c, n_scan);
  {
    // the strongest bound witness also seeds the ascent; the full witness
    // set is cheap to certify and enters the floor below
    const CVec4* best_w = nullptr;
    double best_f = -1;
    for (auto& lb : bounds)
      for (auto& z : lb.witnesses) {
        double f = fast_objective(c, z);
        if (f > best_f) {
          best_f = f;
          best_w = &z;
        }
      }
    if (best_w) seeds.push_back(to_reduced(*best_w));
  }
  seeds.push_back(to_reduced(c.conjugated()));

  std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ULL);
  auto unit = [&]() { return (rng() >> 11) * 0x1.0p-53; };
  size_t total = seeds.size() + static_cast<size_t>(std::max(starts - 6, starts <= 2 ? 1 : 2));
  while (seeds.size() < total) {
    ReducedState st;
    st.rho = {unit(), unit(), unit(), unit()};
    st.psi = 2.0 * kPi * unit() - kPi;
    seeds.push_back(st);
  }

  struct Ranked {
    double fine;
    size_t index;
    ReducedState st;
  };
  std::vector<Ranked> ranked;
  ranked.reserve(seeds.size());
  int cycles = (starts >= 24) ? 16 : (starts > 4 ? 10 : (starts > 2 ? 8 : 7));
  for (size_t i = 0; i < seeds.size(); ++i) {
    ReducedState st = ascend(c, seeds[i], cycles);
    ranked.push_back({reduced_objective(c, st.rho, st.psi, 48), i, st});
  }
  std::stable_sort(ranked.begin(), ranked.end(),
                   [](const Ranked& a, const Ranked& b) {
                     if (a.fine != b.fine) return a.fine > b.fine;
                     return a.index < b.index;
                   });

  // certified floor from the witnesses, then certify the leading finals
  out.lo = witness_floor(c, bounds, &out.maximizer, cert_tol);
  int certified = 0;
  const int cert_cap = (starts > 4) ? 4 : 2;
  for (const auto& cand : ranked) {
    if (certified >= cert_cap || cand.fine < out.lo - 1e-9) break;
    CVec4 z = aligned_z(c, cand.st.rho, cand.st.psi);
    double v = certified_value(c, z, cert_tol);
    ++certified;
    if (v > out.lo) {
      out.lo = v;
      out.maximizer = z;
    }
  }
  out.lo = std::min(out.lo, out.hi);
  return out;
}

}  // namespace

NumericSearch dual_norm_numeric(const CVec4& c, int starts, double tol,
                                std::uint64_t seed) {
  if (starts < 1) throw std::invalid_argument("dual_norm_numeric: starts >= 1");
  return numeric_impl(c, starts, tol, seed, lower_bounds_impl(c, true));
}

// --- dispatch --------------------------------------------------------------

DualNormResult dual_norm(const CVec4& c, double tol, int starts) {
  DualNormOptions opt;
  opt.tol = tol;
  opt.starts = starts;
  return dual_norm(c, opt);
}

DualNormResult dual_norm(const CVec4& c, const DualNormOptions& opt) {
  if (!(opt.tol > 0)) throw std::invalid_argument("dual_norm: tol must be positive");
  DualNormResult out;
  auto r0 = c.magnitudes();
  double scale = linf_of(r0);
  if (scale == 0.0) {
    out.branch = DualBranch::TwoZeros;
    out.maximizer = CVec4{1.0, 0.0, 0.0, 0.0};
    return out;
  }

  detail::Frame fr;
  CVec4 cs = detail::sort_magnitudes(c, fr);
  CVec4 cn = detail::normal_phase_form(cs, fr);
  auto r = cn.magnitudes();  // descending
  double phi = std::abs(phase_difference(cn));
  double ztol = kZeroRelTol * scale;

  auto finish_exact = [&](double v, const CVec4& z_canon) {
    out.value = out.lo = out.hi = v;
    out.maximizer = fr.pull_z(phase_align(cn, z_canon));
  };
  const CVec4 e1{1.0, 0.0, 0.0, 0.0};

  if (r[2] <= ztol) {
    out.branch = DualBranch::TwoZeros;
    finish_exact(r[0], e1);
    return out;
  }

  if (r[3] <= ztol) {
    out.branch = DualBranch::OneZero;
    auto [v, cls] = dual_norm_three(cn);
    out.triangle = cls;
    if (cls == TriangleClass::Acute && opt.with_certificate) {
      auto mp = maximize_real_pi({r[0], r[1], r[2], 0.0});
      finish_exact(v, CVec4{mp.w[0], mp.w[1], mp.w[2], -mp.w[3]});
    } else {
      finish_exact(v, e1);
    }
    return out;
  }

  if (phi <= kPhaseTol || phi >= kPi - kPhaseTol) {
    out.branch = DualBranch::RealEntries;
    std::array<double, 4> d = r;
    if (phi >= kPi - kPhaseTol) d[0] = -r[0];
    auto [v, data] = dual_norm_real(d);
    out.real_case = data.which;
    if (data.which == RealCase::C && opt.with_certificate) {
      auto mp = maximize_real_pi(r);
      // canonical cn carries the pi phase on the last entry
      finish_exact(v, CVec4{mp.w[0], mp.w[1], mp.w[2], -mp.w[3]});
    } else {
      finish_exact(v, e1);
    }
    return out;
  }

  if (std::abs(r[0] - r[1]) <= kMagRelTol * scale &&
      std::abs(r[2] - r[3]) <= kMagRelTol * scale) {
    out.branch = DualBranch::TwoTwo;
    auto tt = dual_norm_two_two(cn, {0, 1, 2, 3});
    out.t0 = tt.t0;
    CVec4 best_z = e1;
    if (opt.with_certificate) {
      double best_v = -1;
      for (auto& z : pair_family_candidates(cn, {0, 1, 2, 3})) {
        double v = certified_value(cn, z);
        if (v > best_v) {
          best_v = v;
          best_z = z;
        }
      }
    }
    out.value = out.lo = out.hi = tt.value;
    out.maximizer = fr.pull_z(phase_align(cn, best_z));
    return out;
  }

  if (vk_test(cn).one_nonpositive) {
    out.branch = DualBranch::VkShortcut;
    finish_exact(r[0], e1);
    return out;
  }

  out.branch = DualBranch::Numeric;
  auto bounds = lower_bounds_impl(cn, true);
  if (opt.early_decision) {
    double hi = min_upper_bound(cn);
    CVec4 best_z = e1;
    double lo = witness_floor(cn, bounds, &best_z, clamp_cert_tol(opt.tol));
    double th = *opt.early_decision;
    if (th >= hi || th < lo) {
      out.lo = std::min(lo, hi);
      out.hi = hi;
      out.value = out.lo;
      out.maximizer = fr.pull_z(phase_align(cn, best_z));
      return out;
    }
  }

  NumericSearch ns = numeric_impl(cn, opt.starts, opt.tol, opt.seed, bounds);
  out.ascent_ran = true;
  out.lo = ns.lo;
  out.hi = ns.hi;
  out.value = ns.lo;
  out.maximizer = fr.pull_z(phase_align(cn, ns.maximizer));
  return out;
}

}  // namespace xsep
