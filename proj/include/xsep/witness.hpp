#pragma once

#include <array>

#include "xsep/cvec.hpp"
#include "xsep/xstate.hpp"

namespace xsep {

/// X-shaped self-adjoint matrix X(s,t,u) used as a witness candidate.
struct Witness {
  std::array<double, 4> s{};
  std::array<double, 4> t{};
  CVec4 u{};
};

/// A(s,t) = inf_{r>0} of the diagonal functional. Closed forms when
/// s1 t2 t3 s4 = t1 s2 s3 t4 (sum of geometric means) or when all s_i t_i
/// agree (two fourth roots); otherwise a certified minimization over log r.
struct AValue {
  double value = 0;  // best found; lo <= inf <= value
  double lo = 0;
  bool closed_form = false;
};
AValue a_value(const std::array<double, 4>& s, const std::array<double, 4>& t,
               double tol = 1e-9);

/// B(u) = max_theta (|u1 e^{i th} + conj u4| + |u2 e^{i th} + conj u3|),
/// i.e. the X norm of u (same code path).
double b_value(const CVec4& u);

/// C(z) = B(z1, z2, z3, conj z4).
double c_value(const CVec4& z);

enum class WitnessCheck { No, Yes, Inconclusive };

/// X(s,t,u) is an entanglement witness iff it is not PSD and A(s,t) >= B(u).
/// Inconclusive when the certified brackets straddle the A = B boundary.
WitnessCheck is_witness(const Witness& w, double tol = 1e-9);

/// <rho, W> = tr(W rho^T) = sum a_i s_i + sum b_i t_i + 2 Re sum c_i u_i.
double pair_value(const XState& rho, const Witness& w);

/// L(rho, z) = Re(z1 c1 + z2 c2 + z3 c3 + z4 conj c4).
double l_value(const XState& rho, const CVec4& z);

/// Scaling factors of the diagonal congruence D_{alpha,beta,gamma}.
struct BalanceFactors {
  double alpha = 1.0;
  double beta = 1.0;
  double gamma = 1.0;
  static BalanceFactors from_fourth_powers(double a4, double b4, double g4);
};

/// D X(a,b,c) D^* = X(x,y,c) with x = (abg a1, abg^-1 a2, ab^-1g a3,
/// ab^-1g^-1 a4) and reciprocal factors on y. Throws on nonpositive factors.
XState scale_conjugate(const XState& rho, const BalanceFactors& f);
Witness scale_conjugate(const Witness& w, const BalanceFactors& f);

/// Unique factors with x_i = y_i = sqrt(a_i b_i); requires
/// a1 b2 b3 a4 = b1 a2 a3 b4 and positive products.
BalanceFactors balance_sym(const std::array<double, 4>& a,
                           const std::array<double, 4>& b);

/// Unique factors with x1=y2=y3=x4 and y1=x2=x3=y4 equal to the two fourth
/// roots; requires a1 b1 = a2 b2 = a3 b3 = a4 b4.
BalanceFactors balance_uni(const std::array<double, 4>& a,
                           const std::array<double, 4>& b);

/// X^sym = X((s+t)/2, (s+t)/2, u).
Witness symmetrize(const Witness& x);

/// X^uni: both diagonal families averaged to their uniform values.
Witness uniformize(const Witness& x);

}  // namespace xsep
