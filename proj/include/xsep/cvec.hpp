#pragma once

#include <array>
#include <cmath>
#include <complex>
#include <numbers>

namespace xsep {

using cplx = std::complex<double>;

inline constexpr double kPi = std::numbers::pi;

/// Reduce an angle into (-pi, pi].
inline double wrap_angle(double phi) {
  double r = std::fmod(phi, 2.0 * kPi);
  if (r <= -kPi) r += 2.0 * kPi;
  if (r > kPi) r -= 2.0 * kPi;
  return r;
}

/// Ordered quadruple of complex anti-diagonal amplitudes (the vector c or z).
struct CVec4 {
  std::array<cplx, 4> e{};

  CVec4() = default;
  CVec4(cplx a, cplx b, cplx c, cplx d) : e{a, b, c, d} {}
  explicit CVec4(const std::array<cplx, 4>& v) : e(v) {}
  explicit CVec4(const std::array<double, 4>& v) : e{v[0], v[1], v[2], v[3]} {}

  cplx& operator[](int i) { return e[static_cast<size_t>(i)]; }
  const cplx& operator[](int i) const { return e[static_cast<size_t>(i)]; }

  std::array<double, 4> magnitudes() const {
    return {std::abs(e[0]), std::abs(e[1]), std::abs(e[2]), std::abs(e[3])};
  }

  /// Entry phases in (-pi, pi]; a zero entry has phase 0 by convention.
  std::array<double, 4> phases() const {
    std::array<double, 4> th{};
    for (int i = 0; i < 4; ++i)
      th[static_cast<size_t>(i)] = (e[static_cast<size_t>(i)] == cplx(0.0, 0.0))
                                       ? 0.0
                                       : std::arg(e[static_cast<size_t>(i)]);
    return th;
  }

  double l1() const {
    auto r = magnitudes();
    return r[0] + r[1] + r[2] + r[3];
  }
  double linf() const {
    auto r = magnitudes();
    return std::max(std::max(r[0], r[1]), std::max(r[2], r[3]));
  }

  CVec4 conjugated() const {
    return {std::conj(e[0]), std::conj(e[1]), std::conj(e[2]), std::conj(e[3])};
  }

  friend CVec4 operator*(cplx s, const CVec4& v) {
    return {s * v.e[0], s * v.e[1], s * v.e[2], s * v.e[3]};
  }
  friend CVec4 operator*(const CVec4& v, double s) { return cplx(s, 0.0) * v; }
  friend CVec4 operator+(const CVec4& x, const CVec4& y) {
    return {x.e[0] + y.e[0], x.e[1] + y.e[1], x.e[2] + y.e[2], x.e[3] + y.e[3]};
  }
};

/// Bilinear pairing <c,z> = sum_i c_i z_i (no conjugation).
inline cplx pairing(const CVec4& c, const CVec4& z) {
  return c.e[0] * z.e[0] + c.e[1] * z.e[1] + c.e[2] * z.e[2] + c.e[3] * z.e[3];
}

/// Phase difference (th1+th4)-(th2+th3) reduced into (-pi, pi].
inline double phase_difference(const CVec4& c) {
  auto th = c.phases();
  return wrap_angle((th[0] + th[3]) - (th[1] + th[2]));
}

}  // namespace xsep
