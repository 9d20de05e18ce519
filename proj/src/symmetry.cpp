#include "xsep/symmetry.hpp"

namespace xsep {

std::string SymmetryOp::name() const {
  switch (kind) {
    case Kind::CPerm: {
      const auto& p = kNormPermutations[static_cast<size_t>(perm_index)];
      std::string s = "perm<";
      for (int i : p) s += static_cast<char>('1' + i);
      return s + ">";
    }
    case Kind::GammaA: return "Gamma_A";
    case Kind::GammaB: return "Gamma_B";
    case Kind::GammaC: return "Gamma_C";
    case Kind::SwapBC: return "swap_BC";
    case Kind::SwapAC: return "swap_AC";
    case Kind::SwapAB: return "swap_AB";
  }
  return "?";
}

XState apply_symmetry(const XState& rho, const SymmetryOp& op) {
  const auto& a = rho.a;
  const auto& b = rho.b;
  const auto& c = rho.c;
  XState out = rho;
  switch (op.kind) {
    case SymmetryOp::Kind::CPerm:
      out.c = permute(c, kNormPermutations[static_cast<size_t>(op.perm_index)]);
      break;
    case SymmetryOp::Kind::GammaC:
      out.c = {c[1], c[0], c[3], c[2]};
      break;
    case SymmetryOp::Kind::GammaB:
      out.c = {c[2], c[3], c[0], c[1]};
      break;
    case SymmetryOp::Kind::GammaA:
      out.c = {std::conj(c[3]), std::conj(c[2]), std::conj(c[1]), std::conj(c[0])};
      break;
    case SymmetryOp::Kind::SwapBC:
      out.a = {a[0], a[2], a[1], a[3]};
      out.b = {b[0], b[2], b[1], b[3]};
      out.c = {c[0], c[2], c[1], c[3]};
      break;
    case SymmetryOp::Kind::SwapAC:
      out.a = {a[0], b[3], a[2], b[1]};
      out.b = {b[0], a[3], b[2], a[1]};
      out.c = {c[0], std::conj(c[3]), c[2], std::conj(c[1])};
      break;
    case SymmetryOp::Kind::SwapAB:
      out.a = {a[0], a[1], b[3], b[2]};
      out.b = {b[0], b[1], a[3], a[2]};
      out.c = {c[0], c[1], std::conj(c[3]), std::conj(c[2])};
      break;
  }
  return out;
}

}  // namespace xsep
