#pragma once

#include <cstdint>

#include "xsep/cvec.hpp"
#include "xsep/xstate.hpp"

namespace xsep::oracle {

// Brute-force references for the test suite. Deliberately independent of the
// closed forms in xnorm/dualnorm: everything here is evaluated from the
// defining expressions by dense scans and local refinement.

struct OracleReport {
  double value = 0;  // best found (a feasible value, hence a lower bound)
  double lo = 0;
  double hi = 0;     // certified upper bound
  long grid_n = 0;
  int starts = 0;
  std::uint64_t seed = 0;
};

/// max over grid_n uniform sigma samples of
/// |z1 e^{i s} + conj z4| + |z2 e^{i s} + conj z3|, refined locally,
/// bracketed with the Lipschitz constant of the defining expression.
OracleReport x_norm_oracle(const CVec4& z, long grid_n = 1 << 14);

/// Global search for max_z Re<c,z>/||z||_X over z parametrized by magnitudes
/// and phase difference, free phases maximized in closed form per pair.
/// `starts` counts the scanned candidates (>= 256 required); the best are
/// polished by coordinate ascent with the oracle's own inner maximizer.
OracleReport dual_norm_oracle(const CVec4& c, int starts = 2048,
                              std::uint64_t seed = 12345);

/// All eigenvalues >= -1e-10 via a dense self-adjoint eigensolve.
bool psd_oracle(const Dense8& m);

}  // namespace xsep::oracle
