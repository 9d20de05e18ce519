#include "xsep/xnorm.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "xsep/scalar_opt.hpp"

namespace xsep {

std::string to_string(XNormBranch b) {
  switch (b) {
    case XNormBranch::Phase0: return "Phase0";
    case XNormBranch::OneZero: return "OneZero";
    case XNormBranch::PhasePi: return "PhasePi";
    case XNormBranch::TwoTwo: return "TwoTwo";
    case XNormBranch::Numeric: return "Numeric";
  }
  return "?";
}

double lambda_big(double a1, double a2, double a3, double a4) {
  if (!(a1 > 0 && a2 > 0 && a3 > 0 && a4 > 0))
    throw std::invalid_argument("lambda_big: arguments must be positive");
  return std::sqrt((a1 * a2 + a3 * a4) * (a1 * a3 + a2 * a4) *
                   (a1 * a4 + a2 * a3) / (a1 * a2 * a3 * a4));
}

namespace {

constexpr double kPhaseTol = 1e-12;
constexpr double kMagRelTol = 1e-12;
constexpr double kZeroRelTol = 1e-14;

TwoTerm b_of_sigma(const std::array<double, 4>& r, double phi) {
  return TwoTerm::from_pairs(r[0], r[3], phi, r[1], r[2], 0.0);
}

// argmax of B(sigma), refined; used to report maximizer_sigma cheaply.
double sigma_argmax(const std::array<double, 4>& r, double phi) {
  return tt_max_fast(b_of_sigma(r, phi), 64).arg;
}

bool two_two_partition(const std::array<double, 4>& r, double scale, double* rr,
                       double* ss) {
  auto eq = [&](double x, double y) { return std::abs(x - y) <= kMagRelTol * scale; };
  static constexpr int pairs[3][4] = {{0, 1, 2, 3}, {0, 2, 1, 3}, {0, 3, 1, 2}};
  for (const auto& p : pairs) {
    if (eq(r[static_cast<size_t>(p[0])], r[static_cast<size_t>(p[1])]) &&
        eq(r[static_cast<size_t>(p[2])], r[static_cast<size_t>(p[3])])) {
      *rr = 0.5 * (r[static_cast<size_t>(p[0])] + r[static_cast<size_t>(p[1])]);
      *ss = 0.5 * (r[static_cast<size_t>(p[2])] + r[static_cast<size_t>(p[3])]);
      return true;
    }
  }
  return false;
}

XNormResult exact_result(double v, XNormBranch branch,
                         const std::array<double, 4>& r, double phi) {
  XNormResult out;
  out.value = out.lo = out.hi = v;
  out.branch = branch;
  out.maximizer_sigma = sigma_argmax(r, phi);
  return out;
}

}  // namespace

XNormResult x_norm(const CVec4& z, double tol) {
  if (!(tol > 0)) throw std::invalid_argument("x_norm: tol must be positive");
  auto r = z.magnitudes();
  double scale = std::max(std::max(r[0], r[1]), std::max(r[2], r[3]));
  if (scale == 0.0) {
    XNormResult out;
    out.branch = XNormBranch::Phase0;
    return out;
  }
  double phi = phase_difference(z);
  double l1 = r[0] + r[1] + r[2] + r[3];

  bool has_zero = false;
  for (double ri : r) has_zero |= (ri <= kZeroRelTol * scale);
  if (has_zero) return exact_result(l1, XNormBranch::OneZero, r, phi);
  if (std::abs(phi) <= kPhaseTol) return exact_result(l1, XNormBranch::Phase0, r, phi);

  if (std::abs(std::abs(phi) - kPi) <= kPhaseTol) {
    std::array<double, 4> inv{1.0 / r[0], 1.0 / r[1], 1.0 / r[2], 1.0 / r[3]};
    double inv_sum = inv[0] + inv[1] + inv[2] + inv[3];
    int region = 0;
    for (int i = 0; i < 4; ++i) {
      if (inv[static_cast<size_t>(i)] >= inv_sum - inv[static_cast<size_t>(i)]) {
        region = i + 1;
        break;
      }
    }
    double v = (region > 0) ? l1 - 2.0 * r[static_cast<size_t>(region - 1)]
                            : lambda_big(r[0], r[1], r[2], r[3]);
    auto out = exact_result(v, XNormBranch::PhasePi, r, phi);
    out.omega_region = region;
    return out;
  }

  double rr = 0, ss = 0;
  if (two_two_partition(r, scale, &rr, &ss)) {
    double v = 2.0 * std::sqrt(rr * rr + ss * ss +
                               2.0 * rr * ss * std::abs(std::cos(0.5 * phi)));
    auto out = exact_result(v, XNormBranch::TwoTwo, r, phi);
    return out;
  }

  auto res = tt_max_certified(b_of_sigma(r, phi), tol);
  XNormResult out;
  out.value = out.lo = res.value;
  out.hi = res.hi;
  out.branch = XNormBranch::Numeric;
  out.maximizer_sigma = res.arg;
  return out;
}

std::vector<std::pair<std::string, double>> x_norm_lower_bounds(const CVec4& z) {
  auto r = z.magnitudes();
  std::sort(r.begin(), r.end());
  double l1 = r[0] + r[1] + r[2] + r[3];
  return {
      {"linf", r[3]},
      {"box", r[3] + r[2]},
      {"l1_over_sqrt2", l1 / std::sqrt(2.0)},
      {"l1_minus_2min", l1 - 2.0 * r[0]},
  };
}

std::vector<std::pair<double, double>> beta_profile(
    const std::array<double, 4>& mags, std::span<const double> phi_grid) {
  std::vector<std::pair<double, double>> out;
  out.reserve(phi_grid.size());
  for (double phi : phi_grid) {
    CVec4 z(mags);
    z[0] *= std::exp(cplx(0.0, phi));
    out.emplace_back(phi, x_norm(z).value);
  }
  return out;
}

namespace detail {

XNormResult x_norm_numeric_only(const CVec4& z, double tol) {
  auto r = z.magnitudes();
  double phi = phase_difference(z);
  auto res = tt_max_certified(b_of_sigma(r, phi), tol);
  XNormResult out;
  out.value = out.lo = res.value;
  out.hi = res.hi;
  out.branch = XNormBranch::Numeric;
  out.maximizer_sigma = res.arg;
  return out;
}

double x_norm_fast(const CVec4& z) {
  return x_norm_fast_mag(z.magnitudes(), phase_difference(z));
}

double x_norm_fast_mag(const std::array<double, 4>& r, double phi) {
  return tt_max_fast(b_of_sigma(r, phi), 24).value;
}

}  // namespace detail

}  // namespace xsep
