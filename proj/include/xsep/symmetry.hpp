#pragma once

#include <array>
#include <string>

#include "xsep/xstate.hpp"

namespace xsep {

/// The eight entry permutations that preserve the norms, 0-based images:
/// <1234>, <1324>, <4231>, <4321>, <2143>, <2413>, <3142>, <3412>.
inline constexpr std::array<std::array<int, 4>, 8> kNormPermutations = {{
    {0, 1, 2, 3},
    {0, 2, 1, 3},
    {3, 1, 2, 0},
    {3, 2, 1, 0},
    {1, 0, 3, 2},
    {1, 3, 0, 2},
    {2, 0, 3, 1},
    {2, 3, 0, 1},
}};

inline CVec4 permute(const CVec4& z, const std::array<int, 4>& sigma) {
  return {z[sigma[0]], z[sigma[1]], z[sigma[2]], z[sigma[3]]};
}

inline std::array<double, 4> permute(const std::array<double, 4>& v,
                                     const std::array<int, 4>& sigma) {
  return {v[static_cast<size_t>(sigma[0])], v[static_cast<size_t>(sigma[1])],
          v[static_cast<size_t>(sigma[2])], v[static_cast<size_t>(sigma[3])]};
}

/// Symmetries of the separability problem acting on X-states.
struct SymmetryOp {
  enum class Kind {
    CPerm,   // one of the eight permutations, applied to c only
    GammaA,  // partial transpose of system A
    GammaB,
    GammaC,
    SwapBC,  // interchange systems B and C
    SwapAC,
    SwapAB,
  };
  Kind kind = Kind::CPerm;
  int perm_index = 0;  // into kNormPermutations when kind == CPerm

  static SymmetryOp perm(int index) { return {Kind::CPerm, index}; }
  static SymmetryOp gamma_a() { return {Kind::GammaA, 0}; }
  static SymmetryOp gamma_b() { return {Kind::GammaB, 0}; }
  static SymmetryOp gamma_c() { return {Kind::GammaC, 0}; }
  static SymmetryOp swap_bc() { return {Kind::SwapBC, 0}; }
  static SymmetryOp swap_ac() { return {Kind::SwapAC, 0}; }
  static SymmetryOp swap_ab() { return {Kind::SwapAB, 0}; }
  std::string name() const;
};

XState apply_symmetry(const XState& rho, const SymmetryOp& op);

}  // namespace xsep
