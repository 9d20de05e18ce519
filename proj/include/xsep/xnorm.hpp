#pragma once

#include <span>
#include <string>
#include <utility>
#include <vector>

#include "xsep/cvec.hpp"

namespace xsep {

enum class XNormBranch { Phase0, OneZero, PhasePi, TwoTwo, Numeric };

std::string to_string(XNormBranch b);

struct XNormResult {
  double value = 0;  // lo <= value <= hi
  double lo = 0;
  double hi = 0;
  XNormBranch branch = XNormBranch::Phase0;
  int omega_region = -1;  // 0..4 when branch == PhasePi
  double maximizer_sigma = 0;
};

/// ||z||_X = max_sigma (|z1 e^{i sigma} + conj z4| + |z2 e^{i sigma} + conj z3|).
/// Closed forms: phi=0 or a zero entry -> l1; |phi|=pi -> Omega-region
/// dispatch; a 2+2 magnitude partition -> 2 sqrt(r^2+s^2+2rs|cos(phi/2)|);
/// otherwise a certified 1-D maximization with bracket width <= tol.
XNormResult x_norm(const CVec4& z, double tol = 1e-9);

/// sqrt((a1a2+a3a4)(a1a3+a2a4)(a1a4+a2a3)/(a1a2a3a4)).
/// Throws std::invalid_argument unless all arguments are positive.
double lambda_big(double a1, double a2, double a3, double a4);

/// Lower bounds: linf, the pairwise box norm, l1/sqrt2, l1 - 2 min.
std::vector<std::pair<std::string, double>> x_norm_lower_bounds(const CVec4& z);

/// beta(phi) = ||(s1 e^{i phi}, s2, s3, s4)||_X on the given grid of [0, pi].
std::vector<std::pair<double, double>> beta_profile(
    const std::array<double, 4>& mags, std::span<const double> phi_grid);

namespace detail {
/// Force the numeric maximization path regardless of closed-form eligibility.
XNormResult x_norm_numeric_only(const CVec4& z, double tol = 1e-9);
/// Uncertified fast evaluation (grid + local refinement), for inner loops.
double x_norm_fast(const CVec4& z);
double x_norm_fast_mag(const std::array<double, 4>& r, double phi);
}  // namespace detail

}  // namespace xsep
