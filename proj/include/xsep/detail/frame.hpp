#pragma once

#include <vector>

#include "xsep/cvec.hpp"
#include "xsep/symmetry.hpp"

namespace xsep::detail {

/// A composable record of norm-preserving vector transformations:
/// group permutations, the two conjugation substitutions, entrywise
/// conjugation, and product-phase patterns. push_c maps the original c to
/// the transformed one; pull_z transports a maximizer of the transformed
/// problem back, preserving Re<c,z> and ||z||_X.
struct Frame {
  struct Op {
    enum class Kind { Perm, T1, T2, Conj, Phase } kind = Kind::Conj;
    std::array<int, 4> perm{0, 1, 2, 3};
    CVec4 phase;
  };
  std::vector<Op> ops;

  void push_perm(const std::array<int, 4>& sigma) {
    ops.push_back({Op::Kind::Perm, sigma, {}});
  }
  void push_t1() { ops.push_back({Op::Kind::T1, {}, {}}); }
  void push_t2() { ops.push_back({Op::Kind::T2, {}, {}}); }
  void push_conj() { ops.push_back({Op::Kind::Conj, {}, {}}); }
  /// pattern u must satisfy arg u1 + arg u4 == arg u2 + arg u3 (mod 2pi).
  void push_phase(const CVec4& u) { ops.push_back({Op::Kind::Phase, {}, u}); }

  static CVec4 apply_t1(const CVec4& v) {
    return {v[0], std::conj(v[3]), v[2], std::conj(v[1])};
  }
  static CVec4 apply_t2(const CVec4& v) {
    return {v[0], v[1], std::conj(v[3]), std::conj(v[2])};
  }

  CVec4 push_c(CVec4 c) const {
    for (const auto& op : ops) {
      switch (op.kind) {
        case Op::Kind::Perm: c = permute(c, op.perm); break;
        case Op::Kind::T1: c = apply_t1(c); break;
        case Op::Kind::T2: c = apply_t2(c); break;
        case Op::Kind::Conj: c = c.conjugated(); break;
        case Op::Kind::Phase:
          for (int i = 0; i < 4; ++i) c[i] *= op.phase[i];
          break;
      }
    }
    return c;
  }

  CVec4 pull_z(CVec4 z) const {
    for (auto it = ops.rbegin(); it != ops.rend(); ++it) {
      switch (it->kind) {
        case Op::Kind::Perm: {
          // c' = c^sigma pairs with z' via z = (z')^{sigma^-1}
          CVec4 out;
          for (int i = 0; i < 4; ++i) out[it->perm[static_cast<size_t>(i)]] = z[i];
          z = out;
          break;
        }
        case Op::Kind::T1: z = apply_t1(z); break;
        case Op::Kind::T2: z = apply_t2(z); break;
        case Op::Kind::Conj: z = z.conjugated(); break;
        case Op::Kind::Phase:
          for (int i = 0; i < 4; ++i) z[i] *= it->phase[i];
          break;
      }
    }
    return z;
  }
};

/// Extend `frame` with norm-preserving operations placing entry idx[k] of c
/// at slot k (up to conjugation of individual entries). The eight
/// permutations plus the two substitutions generate all of S4 on magnitudes;
/// a precomputed word table realizes the needed rearrangement.
CVec4 arrange(const CVec4& c, const std::array<int, 4>& idx, Frame& frame);

/// arrange() to descending magnitudes.
CVec4 sort_magnitudes(const CVec4& c, Frame& frame);

/// Extend `frame` so the result is (|c1|,|c2|,|c3|,|c4| e^{i phi}) with
/// phi = |phase_difference| in [0, pi].
CVec4 normal_phase_form(const CVec4& c, Frame& frame);

}  // namespace xsep::detail
