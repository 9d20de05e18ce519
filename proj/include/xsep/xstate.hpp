#pragma once

#include <array>

#include "xsep/cvec.hpp"

namespace xsep {

/// X-shaped 8x8 self-adjoint matrix X(a,b,c): diagonal (a1..a4,b4..b1),
/// anti-diagonal (c1..c4, conj c4..conj c1), lexicographic basis order.
struct XState {
  std::array<double, 4> a{};
  std::array<double, 4> b{};
  CVec4 c{};
};

/// General three-qubit operator, row-major, lexicographic basis order.
using Dense8 = std::array<std::array<cplx, 8>, 8>;

/// min of the four geometric means sqrt(a_i b_i) and the two fourth-root
/// cross products. Throws std::domain_error on a negative diagonal entry.
double delta(const XState& rho);

/// 2x2 anti-diagonal block PSD test: a,b >= 0 and |c_i|^2 <= a_i b_i,
/// as min block eigenvalue >= -1e-10.
bool is_state(const XState& rho);

/// Dense embedding of X(a,b,c).
Dense8 embed(const XState& rho);

/// Extract the X-part (diagonal and anti-diagonal) of a Hermitian matrix.
/// Throws std::invalid_argument if m is not Hermitian within 1e-12*max|m|.
XState xpart(const Dense8& m);

/// Local phase unitary diag(1,e^{i a}) x diag(1,e^{i b}) x diag(1,e^{i g}).
struct ProductPhases {
  double alpha = 0.0;
  double beta = 0.0;
  double gamma = 0.0;
};

struct PhaseNormalized {
  XState state;          // X(a,b,c') with c' = (|c1|,|c2|,|c3|,|c4| e^{i phi})
  ProductPhases phases;  // the product unitary achieving it
};

/// Conjugate by the product phase unitary that moves all phase information
/// into the last anti-diagonal entry. Diagonals are untouched.
PhaseNormalized phase_normalize(const XState& rho);

/// Apply a ProductPhases unitary to a dense matrix (for cross-checks).
Dense8 conjugate_by_phases(const Dense8& m, const ProductPhases& p);

}  // namespace xsep
