#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "xsep/dualnorm.hpp"
#include "xsep/xstate.hpp"

namespace xsep {

enum class VerdictKind { Separable, Entangled, NotAState, Inconclusive };
std::string to_string(VerdictKind k);

struct Verdict {
  VerdictKind kind = VerdictKind::Inconclusive;
  double delta = 0;
  DualNormResult dual;
  /// Certificate in the witness-inequality form: C(z) delta < L(rho, z)
  /// whenever kind == Entangled.
  std::optional<CVec4> guhne_z;
};

/// Exact decision for X-states: Separable iff delta >= hi(dual norm),
/// Entangled iff delta < lo. Ties within tol on exact branches resolve to
/// Separable (the criterion is non-strict); numeric brackets that straddle
/// delta give Inconclusive.
Verdict decide_xstate(const XState& rho, double tol = 1e-9, int starts = 64);

/// Necessary criterion for general three-qubit states: delta of the X-part
/// against the best dual-norm lower bound. Never returns Separable.
Verdict necessary_check_general(const Dense8& m, double tol = 1e-9);

/// min over the samples of C(z) delta - L(rho, z).
double guhne_check(const XState& rho, std::span<const CVec4> z_samples);

struct RegionRow {
  double theta = 0, r = 0, s = 0, delta = 0, dual = 0;
  VerdictKind verdict = VerdictKind::Separable;
};

struct ThetaScan {
  std::vector<RegionRow> rows;                       // grid-major, r fastest
  std::vector<std::pair<double, double>> boundary;   // refined (r, s) points
};

/// Scan of rho_{theta,r,s} = X(1, 1, (e^{i theta} r, r, s, s)) over
/// [0, rmax]^2. Boundary points come from sign changes of delta - dual along
/// grid rows and columns, refined by bisection to 1e-6.
ThetaScan region_scan_theta(double theta, int grid_n, double rmax = 1.25,
                            double tol = 1e-9);

struct PqRow {
  double p = 0, q = 0, xnorm = 0;
  bool in_ball = false;
};

/// Scan of ||(p, q, q, q)||_X over [-range, range]^2.
std::vector<PqRow> region_scan_pqqq(int grid_n, double range = 1.25);

/// One pure product term: weight and three unit C^2 factors.
struct ProductTerm {
  double weight = 0;
  std::array<std::array<cplx, 2>, 3> factors{};
};

struct ProductDecomposition {
  std::vector<ProductTerm> terms;
  XState target;
  double reconstruction_error = 0;  // max entry deviation of the dense sum
};

/// Seven-term product decomposition of X((1,a,b,c),(1,1/a,1/b,1/c),(1,0,0,0)),
/// valid when ab = c (checked to 1e-10 relative). Built from the order-seven
/// Fourier product vectors pushed through the local filter
/// diag(1,c^-1/2) x diag(1,b^1/2) x diag(1,a^1/2).
ProductDecomposition decompose_acin(double a, double b, double c);

/// Dense reconstruction sum_j w_j P_j of a product decomposition.
Dense8 reconstruct(const ProductDecomposition& d);

}  // namespace xsep
