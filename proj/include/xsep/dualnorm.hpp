#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "xsep/cvec.hpp"

namespace xsep {

enum class RealCase { A, B, C };
enum class TriangleClass { None, Obtuse, Right, Acute };
enum class DualBranch { TwoZeros, OneZero, RealEntries, TwoTwo, VkShortcut, Numeric };

std::string to_string(DualBranch b);
std::string to_string(RealCase c);
std::string to_string(TriangleClass t);

/// Sign data of the real-entry dispatch.
struct CaseData {
  std::array<double, 4> lambda{};  // lambda5..lambda8
  std::array<double, 4> t{};       // t1..t4
  RealCase which = RealCase::A;
};

/// Quadrangle / shortcut data for positive magnitudes.
struct VkData {
  std::array<double, 4> v{};             // v1..v4
  std::array<double, 4> lambda_minus{};  // lambda5^-..lambda8^-
  std::array<double, 4> u{};             // u1..u4 (Q-form values; u == v)
  bool one_nonpositive = false;
  int nonpositive_index = -1;  // 0-based, -1 if none
  bool quadrangle = false;
};

struct DualNormResult {
  double value = 0;  // lo <= value <= hi; value == lo == hi on exact branches
  double lo = 0;
  double hi = 0;
  DualBranch branch = DualBranch::TwoZeros;
  TriangleClass triangle = TriangleClass::None;  // when branch == OneZero
  RealCase real_case = RealCase::A;              // when branch == RealEntries
  double t0 = 0;                                 // when branch == TwoTwo
  CVec4 maximizer;                               // z* with Re<c,z*>/||z*|| ~ lo
  bool ascent_ran = false;                       // Numeric branch bookkeeping
};

struct DualNormOptions {
  double tol = 1e-9;
  int starts = 64;
  std::uint64_t seed = 0;
  /// When set and the cheap bound interval already decides against this
  /// threshold, the Numeric branch skips the multi-start ascent.
  std::optional<double> early_decision;
  /// Skip the maximizer search on exact branches (values are unaffected);
  /// useful for bulk scans that ignore certificates.
  bool with_certificate = true;
};

/// ||c||'_X = max_z Re<c,z> / ||z||_X via the case dispatch:
/// >=2 zeros -> linf; one zero -> triangle dispatch; |phi| in {0,pi} -> real
/// entry cases; 2+2 magnitude partition -> t0 formula; one v_k <= 0 -> linf;
/// otherwise multi-start numeric ascent with bracket [best found, min upper].
DualNormResult dual_norm(const CVec4& c, double tol = 1e-9, int starts = 64);
DualNormResult dual_norm(const CVec4& c, const DualNormOptions& opt);

/// Real-entry dual norm. Case A/B -> linf, case C -> Lambda(lambda)/8.
std::pair<double, CaseData> dual_norm_real(const std::array<double, 4>& c);

/// Exactly one zero entry. Returns the value and the triangle class of the
/// three remaining magnitudes. Throws if the hypothesis fails.
std::pair<double, TriangleClass> dual_norm_three(const CVec4& c);

/// 2+2 magnitude partition {i1,i2} u {i3,i4} with magnitudes r,s > 0.
/// phi = 0 -> max(r,s); otherwise the t0 formula. Throws on zero magnitude.
struct TwoTwoValue {
  double value = 0;
  double t0 = 0;
};
TwoTwoValue dual_norm_two_two(const CVec4& c, const std::array<int, 4>& partition);

/// v_k = |c_k|(-2|c_k|^2 + sum |c_i|^2) + 2 prod_{i != k} |c_i|.
/// Throws on a zero magnitude.
VkData vk_test(const CVec4& c);

/// linf, the three pair-average bounds, circumradius bounds where the
/// triangle is acute, and the max-over-phi norm-ratio bound.
std::vector<std::pair<std::string, double>> dual_lower_bounds(const CVec4& c);

/// Second-smallest plus largest magnitude, sqrt2*linf, l1, and the
/// sign-flipped real-entry value.
std::vector<std::pair<std::string, double>> dual_upper_bounds(const CVec4& c);

/// Multi-start coordinate ascent over the 8 real coordinates of z.
/// lo is certified through an upper bound of ||z*||_X; hi is the bound
/// minimum. Deterministic for a fixed seed.
struct NumericSearch {
  double lo = 0;
  double hi = 0;
  CVec4 maximizer;
};
NumericSearch dual_norm_numeric(const CVec4& c, int starts = 64,
                                double tol = 1e-9, std::uint64_t seed = 0);

}  // namespace xsep
