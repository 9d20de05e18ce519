#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "test_support.hpp"
#include "xsep/oracle.hpp"
#include "xsep/separability.hpp"
#include "xsep/symmetry.hpp"
#include "xsep/witness.hpp"
#include "xsep/xnorm.hpp"

using namespace xsep;

namespace {

XState ghz_state() {
  XState rho;
  rho.a = rho.b = {0.5, 0, 0, 0};
  rho.c = CVec4{0.5, 0, 0, 0};
  return rho;
}

XState acin_state(double a, double b, double c) {
  XState rho;
  rho.a = {1, a, b, c};
  rho.b = {1, 1 / a, 1 / b, 1 / c};
  rho.c = CVec4{1, 0, 0, 0};
  return rho;
}

XState theta_state(double theta, double r, double s) {
  XState rho;
  rho.a = rho.b = {1, 1, 1, 1};
  rho.c = CVec4{std::polar(r, theta), r, s, s};
  return rho;
}

}  // namespace

TEST_CASE("decide_xstate quoted verdicts") {
  Verdict ghz = decide_xstate(ghz_state());
  CHECK(ghz.kind == VerdictKind::Entangled);
  CHECK(ghz.delta == doctest::Approx(0.0));
  CHECK(ghz.dual.value == doctest::Approx(0.5));
  REQUIRE(ghz.guhne_z.has_value());
  // the certificate satisfies C(z) delta < L(rho, z)
  double cz = c_value(*ghz.guhne_z);
  CHECK(cz * ghz.delta < l_value(ghz_state(), *ghz.guhne_z) - 1e-12);

  Verdict acin = decide_xstate(acin_state(2, 3, 6));
  CHECK(acin.kind == VerdictKind::Separable);
  CHECK(acin.delta == doctest::Approx(1.0));
  CHECK(acin.dual.value == doctest::Approx(1.0));

  Verdict ent = decide_xstate(theta_state(kPi, 0.8, 0.8));
  CHECK(ent.kind == VerdictKind::Entangled);
  CHECK(ent.dual.value == doctest::Approx(std::sqrt(1.28)).epsilon(1e-12));

  XState sep;
  sep.a = sep.b = {1, 1, 1, 1};
  sep.c = CVec4{0.7, 0.7, 0.7, 0.7};
  CHECK(decide_xstate(sep).kind == VerdictKind::Separable);

  XState bad;
  bad.a = bad.b = {1, 1, 1, 1};
  bad.c = CVec4{1.2, 0, 0, 0};
  CHECK(decide_xstate(bad).kind == VerdictKind::NotAState);
}

TEST_CASE("verdicts are invariant under all symmetry operations") {
  ts::Rng rng(41);
  std::vector<SymmetryOp> ops;
  for (int p = 0; p < 8; ++p) ops.push_back(SymmetryOp::perm(p));
  ops.push_back(SymmetryOp::gamma_a());
  ops.push_back(SymmetryOp::gamma_b());
  ops.push_back(SymmetryOp::gamma_c());
  ops.push_back(SymmetryOp::swap_bc());
  ops.push_back(SymmetryOp::swap_ac());
  ops.push_back(SymmetryOp::swap_ab());

  // A symmetry image can leave the state cone (partial transposes of
  // entangled states do exactly that), so verdicts must agree whenever both
  // sides are states; separable states stay states under every operation
  // because |c_i| <= ||c||' <= delta <= sqrt(a_j b_j).
  const int n = 1000;
  std::vector<char> ok(static_cast<size_t>(n), 1);
  ts::parallel_for(n, [&](int k) {
    ts::Rng local(5000 + static_cast<std::uint64_t>(k));
    XState rho = local.xstate(local.uniform() < 0.5 ? 0.999 : 0.7);
    Verdict base = decide_xstate(rho, 1e-9, 2);
    if (base.kind == VerdictKind::NotAState) return;
    bool good = true;
    for (const auto& op : ops) {
      Verdict v = decide_xstate(apply_symmetry(rho, op), 1e-9, 2);
      if (base.kind == VerdictKind::Separable)
        good &= (v.kind == VerdictKind::Separable);
      else
        good &= (v.kind == base.kind || v.kind == VerdictKind::NotAState);
    }
    ok[static_cast<size_t>(k)] = good;
  });
  int bad = 0;
  for (char c : ok)
    if (!c) ++bad;
  CHECK(bad == 0);
}

TEST_CASE("verdicts follow the sign of delta minus the dual norm") {
  ts::Rng rng(163);
  int exact_seen = 0, numeric_seen = 0;
  for (int k = 0; k < 600; ++k) {
    XState rho = rng.xstate(rng.uniform() < 0.5 ? 0.999 : 0.6);
    Verdict v = decide_xstate(rho, 1e-9, 4);
    if (v.kind == VerdictKind::NotAState) continue;
    if (v.dual.lo == v.dual.hi) {
      ++exact_seen;
      bool sep = v.delta >= v.dual.value - 1e-9;
      CHECK((v.kind == VerdictKind::Separable) == sep);
    } else {
      ++numeric_seen;
      if (v.kind == VerdictKind::Separable) CHECK(v.delta >= v.dual.hi);
      if (v.kind == VerdictKind::Entangled) CHECK(v.delta < v.dual.lo);
      if (v.kind == VerdictKind::Inconclusive) {
        CHECK(v.delta >= v.dual.lo);
        CHECK(v.delta < v.dual.hi);
      }
    }
  }
  CHECK(exact_seen > 50);
  CHECK(numeric_seen > 50);
}

TEST_CASE("separable implies the averaged two-two state is separable") {
  ts::Rng rng(43);
  int seen = 0;
  for (int k = 0; k < 4000 && seen < 300; ++k) {
    XState rho = rng.xstate(0.8);
    Verdict v = decide_xstate(rho, 1e-9, 4);
    if (v.kind != VerdictKind::Separable) continue;
    ++seen;
    auto r = rho.c.magnitudes();
    double phi = phase_difference(rho.c);
    double m1 = 0.5 * (r[0] + r[3]), m2 = 0.5 * (r[1] + r[2]);
    XState avg = rho;
    avg.c = CVec4{std::polar(m1, phi), m2, m2, m1};
    CHECK(decide_xstate(avg, 1e-9, 4).kind == VerdictKind::Separable);
  }
  CHECK(seen == 300);
}

TEST_CASE("necessary check for general dense states") {
  Verdict ghz = necessary_check_general(embed(ghz_state()));
  CHECK(ghz.kind == VerdictKind::Entangled);

  Dense8 product{};
  product[0][0] = 1.0;  // |000><000|
  CHECK(necessary_check_general(product).kind == VerdictKind::Inconclusive);

  Dense8 negative{};
  for (int i = 0; i < 8; ++i) negative[static_cast<size_t>(i)][static_cast<size_t>(i)] = 1.0;
  negative[7][7] = -0.01;
  CHECK(necessary_check_general(negative).kind == VerdictKind::NotAState);

  // sound on separable states: never Entangled
  ts::Rng rng(47);
  for (int k = 0; k < 200; ++k) {
    XState rho = rng.separable_xstate();
    CHECK(necessary_check_general(embed(rho)).kind != VerdictKind::Entangled);
  }
}

TEST_CASE("guhne margins") {
  XState ghz = ghz_state();
  CVec4 e1{1, 0, 0, 0};
  std::vector<CVec4> zs{e1};
  CHECK(guhne_check(ghz, zs) == doctest::Approx(-0.5));

  ts::Rng rng(53);
  for (int k = 0; k < 150; ++k) {
    XState rho = rng.separable_xstate();
    std::vector<CVec4> samples;
    for (int j = 0; j < 24; ++j) samples.push_back(rng.cvec());
    CHECK(guhne_check(rho, samples) >= -1e-9);
  }

  // the margin is 1-homogeneous in z; normalized to C(z) = 1 it reads
  // delta - L(rho, z), which the dual-norm certificate minimizes
  auto normalized = [](CVec4 z) {
    double cz = c_value(z);
    if (cz <= 0) return z;
    return (1.0 / cz) * z;
  };
  for (int k = 0; k < 40; ++k) {
    XState rho = rng.xstate(0.999);
    Verdict v = decide_xstate(rho, 1e-9, 8);
    if (v.kind != VerdictKind::Entangled) continue;
    REQUIRE(v.guhne_z.has_value());
    std::vector<CVec4> cert{normalized(*v.guhne_z)};
    double at_cert = guhne_check(rho, cert);
    CHECK(at_cert < 0.0);  // the certificate exposes entanglement
    std::vector<CVec4> random;
    for (int j = 0; j < 16; ++j) random.push_back(normalized(rng.cvec()));
    CHECK(at_cert <= guhne_check(rho, random) + 1e-12);
  }
}

TEST_CASE("theta region scan boundaries") {
  auto pi_scan = region_scan_theta(kPi, 60);
  CHECK(pi_scan.rows.size() == 3600);
  for (auto& [r, s] : pi_scan.boundary)
    CHECK(r * r + s * s == doctest::Approx(1.0).epsilon(2e-6));

  auto zero_scan = region_scan_theta(0.0, 60);
  for (auto& [r, s] : zero_scan.boundary)
    CHECK(std::max(r, s) == doctest::Approx(1.0).epsilon(2e-6));

  // intermediate curves sit between circle and square
  for (double theta : {kPi / 10, kPi / 4, kPi / 2}) {
    auto scan = region_scan_theta(theta, 40);
    CHECK(!scan.boundary.empty());
    for (auto& [r, s] : scan.boundary) {
      CHECK(r * r + s * s >= 1.0 - 1e-6);
      CHECK(std::max(r, s) <= 1.0 + 1e-6);
    }
  }

  // rows carry the exact criterion data
  for (const auto& row : pi_scan.rows) {
    CHECK(row.delta == 1.0);
    bool sep = row.verdict == VerdictKind::Separable;
    CHECK(sep == (row.r * row.r + row.s * row.s <= 1.0 + 1e-9));
  }
}

TEST_CASE("pqqq region scan") {
  auto rows = region_scan_pqqq(81, 1.25);
  CHECK(rows.size() == 81u * 81u);
  for (const auto& row : rows) {
    if (row.p * row.q >= 0) {
      CHECK(row.xnorm ==
            doctest::Approx(std::abs(row.p) + 3 * std::abs(row.q)).epsilon(1e-12));
    }
    CHECK(row.in_ball == (row.xnorm <= 1.0));
  }
  // the point A lies on the unit-ball boundary
  double q = 1.0 / (2.0 * std::sqrt(2.0));
  CHECK(x_norm({-q, q, q, q}).value == doctest::Approx(1.0).epsilon(1e-12));
  // bisect the boundary along the antidiagonal direction
  double lo = 0.2, hi = 0.6;
  for (int it = 0; it < 60; ++it) {
    double mid = 0.5 * (lo + hi);
    (x_norm({-mid, mid, mid, mid}).value <= 1.0 ? lo : hi) = mid;
  }
  CHECK(lo == doctest::Approx(q).epsilon(1e-9));
}

TEST_CASE("acin decomposition") {
  auto d111 = decompose_acin(1, 1, 1);
  CHECK(d111.terms.size() == 7);
  CHECK(d111.reconstruction_error <= 1e-12);

  auto d = decompose_acin(2, 3, 6);
  CHECK(d.reconstruction_error <= 1e-10);
  CHECK(d.target.a == std::array<double, 4>{1, 2, 3, 6});

  // every factor is a unit vector and every term is an elementary tensor
  // (all 2x2 minors of every flattening of the 8-vector vanish)
  for (const auto& term : d.terms) {
    CHECK(term.weight >= 0);
    for (const auto& f : term.factors)
      CHECK(std::norm(f[0]) + std::norm(f[1]) == doctest::Approx(1.0).epsilon(1e-12));
    std::array<cplx, 8> psi{};
    for (int k = 0; k < 8; ++k)
      psi[static_cast<size_t>(k)] = term.factors[0][static_cast<size_t>((k >> 2) & 1)] *
                                    term.factors[1][static_cast<size_t>((k >> 1) & 1)] *
                                    term.factors[2][static_cast<size_t>(k & 1)];
    for (int cut = 0; cut < 3; ++cut) {
      auto split = [&](int k) {
        int row = (cut == 0) ? (k >> 2) : (cut == 1 ? (k >> 1) & 1 : k & 1);
        int col = (cut == 0) ? (k & 3)
                             : (cut == 1 ? ((k >> 2) << 1 | (k & 1)) : (k >> 1));
        return std::pair<int, int>(row, col);
      };
      cplx flat[2][4] = {};
      for (int k = 0; k < 8; ++k) {
        auto [row, col] = split(k);
        flat[row][col] = psi[static_cast<size_t>(k)];
      }
      for (int c1 = 0; c1 < 4; ++c1)
        for (int c2 = c1 + 1; c2 < 4; ++c2)
          CHECK(std::abs(flat[0][c1] * flat[1][c2] - flat[0][c2] * flat[1][c1]) < 1e-13);
    }
  }

  ts::Rng rng(59);
  for (int k = 0; k < 20; ++k) {
    double a = rng.uniform(0.3, 3), b = rng.uniform(0.3, 3);
    auto dec = decompose_acin(a, b, a * b);
    CHECK(dec.reconstruction_error <= 1e-10);
    CHECK(decide_xstate(dec.target).kind == VerdictKind::Separable);
    // feeding the weighted sum back through xpart reproduces the state
    XState back = xpart(reconstruct(dec));
    CHECK(delta(back) == doctest::Approx(delta(dec.target)).epsilon(1e-9));
  }

  // ab != c is entangled
  for (int k = 0; k < 20; ++k) {
    double a = rng.uniform(0.3, 3), b = rng.uniform(0.3, 3);
    double c = a * b * rng.uniform(1.05, 2.0);
    if (k % 2) c = a * b / rng.uniform(1.05, 2.0);
    CHECK(decide_xstate(acin_state(a, b, c)).kind == VerdictKind::Entangled);
    CHECK_THROWS(decompose_acin(a, b, c));
  }
}
