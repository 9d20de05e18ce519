#include "xsep/xstate.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace xsep {

double delta(const XState& rho) {
  for (int i = 0; i < 4; ++i) {
    if (rho.a[static_cast<size_t>(i)] < 0.0 || rho.b[static_cast<size_t>(i)] < 0.0)
      throw std::domain_error("delta: negative diagonal entry");
  }
  double m = std::sqrt(rho.a[0] * rho.b[0]);
  for (int i = 1; i < 4; ++i)
    m = std::min(m, std::sqrt(rho.a[static_cast<size_t>(i)] * rho.b[static_cast<size_t>(i)]));
  m = std::min(m, std::pow(rho.a[0] * rho.b[1] * rho.b[2] * rho.a[3], 0.25));
  m = std::min(m, std::pow(rho.b[0] * rho.a[1] * rho.a[2] * rho.b[3], 0.25));
  return m;
}

bool is_state(const XState& rho) {
  // The X pattern is a direct sum of the 2x2 blocks [[a_i, c_i],[conj c_i, b_i]].
  constexpr double kEigTol = 1e-10;
  for (int i = 0; i < 4; ++i) {
    double a = rho.a[static_cast<size_t>(i)];
    double b = rho.b[static_cast<size_t>(i)];
    double m = std::abs(rho.c[i]);
    double half = 0.5 * (a - b);
    double lam_min = 0.5 * (a + b) - std::sqrt(half * half + m * m);
    if (lam_min < -kEigTol) return false;
  }
  return true;
}

Dense8 embed(const XState& rho) {
  Dense8 m{};
  for (auto& row : m) row.fill(cplx(0.0, 0.0));
  for (int i = 0; i < 4; ++i) {
    m[static_cast<size_t>(i)][static_cast<size_t>(i)] = rho.a[static_cast<size_t>(i)];
    m[static_cast<size_t>(7 - i)][static_cast<size_t>(7 - i)] = rho.b[static_cast<size_t>(i)];
    m[static_cast<size_t>(i)][static_cast<size_t>(7 - i)] = rho.c[i];
    m[static_cast<size_t>(7 - i)][static_cast<size_t>(i)] = std::conj(rho.c[i]);
  }
  return m;
}

XState xpart(const Dense8& m) {
  double scale = 0.0;
  for (const auto& row : m)
    for (const auto& v : row) scale = std::max(scale, std::abs(v));
  double herm_err = 0.0;
  for (int i = 0; i < 8; ++i)
    for (int j = 0; j < 8; ++j)
      herm_err = std::max(herm_err,
                          std::abs(m[static_cast<size_t>(i)][static_cast<size_t>(j)] -
                                   std::conj(m[static_cast<size_t>(j)][static_cast<size_t>(i)])));
  if (herm_err > 1e-12 * std::max(scale, 1e-300))
    throw std::invalid_argument("xpart: matrix is not Hermitian");

  XState rho;
  for (int i = 0; i < 4; ++i) {
    rho.a[static_cast<size_t>(i)] = m[static_cast<size_t>(i)][static_cast<size_t>(i)].real();
    rho.b[static_cast<size_t>(i)] = m[static_cast<size_t>(7 - i)][static_cast<size_t>(7 - i)].real();
    rho.c[i] = m[static_cast<size_t>(i)][static_cast<size_t>(7 - i)];
  }
  return rho;
}

PhaseNormalized phase_normalize(const XState& rho) {
  auto th = rho.c.phases();
  auto r = rho.c.magnitudes();
  double phi = wrap_angle((th[0] + th[3]) - (th[1] + th[2]));
  PhaseNormalized out;
  out.state.a = rho.a;
  out.state.b = rho.b;
  out.state.c = {r[0], r[1], r[2], r[3] * std::exp(cplx(0.0, phi))};
  out.phases.alpha = 0.5 * (th[1] + th[2]);
  out.phases.beta = 0.5 * (th[0] - th[2]);
  out.phases.gamma = 0.5 * (th[0] - th[1]);
  return out;
}

Dense8 conjugate_by_phases(const Dense8& m, const ProductPhases& p) {
  // Basis phase of |x1 x2 x3>: x1*alpha + x2*beta + x3*gamma.
  std::array<cplx, 8> d{};
  for (int k = 0; k < 8; ++k) {
    double ang = ((k >> 2) & 1) * p.alpha + ((k >> 1) & 1) * p.beta + (k & 1) * p.gamma;
    d[static_cast<size_t>(k)] = std::exp(cplx(0.0, ang));
  }
  Dense8 out{};
  for (int i = 0; i < 8; ++i)
    for (int j = 0; j < 8; ++j)
      out[static_cast<size_t>(i)][static_cast<size_t>(j)] =
          d[static_cast<size_t>(i)] * m[static_cast<size_t>(i)][static_cast<size_t>(j)] *
          std::conj(d[static_cast<size_t>(j)]);
  return out;
}

}  // namespace xsep
