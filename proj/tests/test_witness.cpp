#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "test_support.hpp"
#include "xsep/scalar_opt.hpp"
#include "xsep/witness.hpp"
#include "xsep/xnorm.hpp"

using namespace xsep;

namespace {

// reference pairing through the dense embedding: tr(W rho^T)
double dense_pairing(const XState& rho, const Witness& w) {
  Dense8 dm = embed(rho);
  XState wx;
  wx.a = w.s;
  wx.b = w.t;
  wx.c = w.u;
  Dense8 wm = embed(wx);
  cplx tr = 0;
  for (int i = 0; i < 8; ++i)
    for (int j = 0; j < 8; ++j)
      tr += wm[static_cast<size_t>(i)][static_cast<size_t>(j)] *
            std::conj(dm[static_cast<size_t>(j)][static_cast<size_t>(i)]);
  // rho^T in the lexicographic basis is the entrywise conjugate of rho
  return tr.real();
}

Witness random_witness(ts::Rng& rng) {
  // scale a random anti-diagonal so that B(u) slips just under A(s,t) while
  // breaking block positivity; retry until verified
  for (int tries = 0; tries < 400; ++tries) {
    Witness w;
    w.s = rng.quad(0.05, 1.0);
    w.t = rng.quad(0.05, 1.0);
    CVec4 dir = rng.cvec_nonzero();
    double a = a_value(w.s, w.t).lo;
    double b = b_value(dir);
    if (a <= 0 || b <= 0) continue;
    w.u = (a / b * rng.uniform(0.9, 0.999)) * dir;
    if (is_witness(w) == WitnessCheck::Yes) return w;
  }
  REQUIRE(false);
  return {};
}

}  // namespace

TEST_CASE("a_value closed forms and numeric floor") {
  auto a1 = a_value({1, 1, 1, 1}, {1, 1, 1, 1});
  CHECK(a1.value == doctest::Approx(4.0));
  CHECK(a1.closed_form);

  auto a2 = a_value({1, 0, 0, 0}, {1, 0, 0, 0});
  CHECK(a2.value == doctest::Approx(1.0));

  auto a3 = a_value({1, 0, 0, 1}, {0, 1, 1, 0});
  CHECK(a3.value == doctest::Approx(2.0));
  CHECK(a3.closed_form);

  // closed forms agree with the certified numeric infimum when a hypothesis
  // holds (evaluated numerically regardless of the shortcut)
  ts::Rng rng(7);
  for (int k = 0; k < 300; ++k) {
    std::array<double, 4> s = rng.quad(0.05, 2.0);
    std::array<double, 4> t = rng.quad(0.05, 2.0);
    // enforce Lemma hypothesis (i): scale t4 so the cross products match
    t[3] = s[0] * t[1] * t[2] * s[3] / (t[0] * s[1] * s[2]);
    auto closed = a_value(s, t);
    CHECK(closed.closed_form);
    AObjective g;
    g.s14 = s[0] * s[3];
    g.t14 = t[0] * t[3];
    g.c14 = s[0] * t[0] + s[3] * t[3];
    g.s23 = s[1] * s[2];
    g.t23 = t[1] * t[2];
    g.c23 = s[1] * t[1] + s[2] * t[2];
    auto m = a_min_certified(g, -30, 30, 1e-10);
    CHECK(closed.value == doctest::Approx(m.value).epsilon(1e-9));
    CHECK(closed.value >= m.lo - 1e-9);
  }
  // uniform-product hypothesis (ii)
  for (int k = 0; k < 300; ++k) {
    std::array<double, 4> s = rng.quad(0.05, 2.0);
    double p = rng.uniform(0.1, 1.0);
    std::array<double, 4> t{p / s[0], p / s[1], p / s[2], p / s[3]};
    auto closed = a_value(s, t);
    CHECK(closed.closed_form);
    double expect = 2 * std::pow(s[0] * t[1] * t[2] * s[3], 0.25) +
                    2 * std::pow(t[0] * s[1] * s[2] * t[3], 0.25);
    CHECK(closed.value == doctest::Approx(expect).epsilon(1e-12));
  }
  // fully generic data goes through the certified minimization
  for (int k = 0; k < 100; ++k) {
    auto s = rng.quad(0.05, 2.0);
    auto t = rng.quad(0.05, 2.0);
    auto got = a_value(s, t, 1e-10);
    CHECK(got.value >= got.lo);
    CHECK(got.value - got.lo <= 2e-10);
    // scan for any point below the certified floor
    AObjective g;
    g.s14 = s[0] * s[3];
    g.t14 = t[0] * t[3];
    g.c14 = s[0] * t[0] + s[3] * t[3];
    g.s23 = s[1] * s[2];
    g.t23 = t[1] * t[2];
    g.c23 = s[1] * t[1] + s[2] * t[2];
    for (int i = 0; i <= 200; ++i) CHECK(g(-5.0 + 0.05 * i) >= got.lo - 1e-9);
  }
}

TEST_CASE("b_value and c_value") {
  CHECK(b_value({1, 0, 0, 0}) == doctest::Approx(1.0));
  CHECK(b_value({1, 1, 1, 1}) == doctest::Approx(4.0));
  CHECK(b_value({1, 1, 1, -1}) == doctest::Approx(2.0 * std::sqrt(2.0)));
  ts::Rng rng(11);
  for (int k = 0; k < 200; ++k) {
    CVec4 z = rng.cvec();
    CHECK(b_value(z) == x_norm(z).value);
    CHECK(c_value(z) ==
          doctest::Approx(b_value({z[0], z[1], z[2], std::conj(z[3])})));
  }
}

TEST_CASE("is_witness") {
  Witness w1{{1, 1, 1, 1}, {1, 1, 1, 1}, CVec4{-1, -1, -1, -1}};
  CHECK(is_witness(w1) == WitnessCheck::No);  // PSD despite A >= B

  Witness w2{{1, 1, 1, 1}, {1, 1, 1, 1}, CVec4{-1.5, -1, -1, -1}};
  // normalize so B(u) = A(s,t) = 4 with |u1| > 1
  double scale = 4.0 / b_value(w2.u);
  w2.u = scale * w2.u;
  CHECK(std::abs(w2.u[0]) > 1.0);
  CHECK(is_witness(w2) == WitnessCheck::Yes);

  Witness w3{{0, 0, 0, 0}, {0, 0, 0, 0}, CVec4{1, 0, 0, 0}};
  CHECK(is_witness(w3) == WitnessCheck::No);

  // a coarse tolerance widens the A bracket until it straddles A = B
  ts::Rng rng(43);
  bool saw_inconclusive = false;
  for (int k = 0; k < 200 && !saw_inconclusive; ++k) {
    Witness w;
    w.s = rng.quad(0.05, 1.0);
    w.t = rng.quad(0.05, 1.0);
    CVec4 dir = rng.cvec_nonzero();
    auto a = a_value(w.s, w.t, 0.05);
    if (a.closed_form) continue;
    double b = b_value(dir);
    if (b <= 0) continue;
    w.u = (0.5 * (a.lo + a.value) / b) * dir;
    bool psd = true;
    for (int i = 0; i < 4; ++i)
      psd &= std::norm(w.u[i]) <= w.s[static_cast<size_t>(i)] * w.t[static_cast<size_t>(i)];
    if (psd) continue;
    saw_inconclusive = is_witness(w, 0.05) == WitnessCheck::Inconclusive;
  }
  CHECK(saw_inconclusive);
}

TEST_CASE("pair value matches the dense trace") {
  XState ghz;
  ghz.a = ghz.b = {0.5, 0, 0, 0};
  ghz.c = CVec4{0.5, 0, 0, 0};
  Witness boundary{{1, 0, 0, 0}, {1, 0, 0, 0}, CVec4{-1, 0, 0, 0}};
  CHECK(pair_value(ghz, boundary) == doctest::Approx(0.0));

  XState diag;
  diag.a = {1, 2, 3, 4};
  diag.b = {5, 6, 7, 8};
  Witness wd{{1, 1, 0, 0}, {0, 2, 1, 0}, CVec4{}};
  CHECK(pair_value(diag, wd) == doctest::Approx(1 + 2 + 12 + 7));

  ts::Rng rng(13);
  for (int k = 0; k < 300; ++k) {
    XState rho = rng.xstate();
    Witness w;
    w.s = rng.quad(0, 1);
    w.t = rng.quad(0, 1);
    w.u = rng.cvec();
    CHECK(pair_value(rho, w) == doctest::Approx(dense_pairing(rho, w)).epsilon(1e-11));
  }
}

TEST_CASE("separable states pair nonnegatively with verified witnesses") {
  ts::Rng rng(17);
  for (int k = 0; k < 300; ++k) {
    XState rho = rng.separable_xstate();
    Witness w = random_witness(rng);
    CHECK(pair_value(rho, w) >= -1e-9);
  }
}

TEST_CASE("l_value") {
  XState rho;
  rho.c = CVec4{0.5, 0, 0, 0};
  CHECK(l_value(rho, {1, 0, 0, 0}) == doctest::Approx(0.5));

  ts::Rng rng(19);
  for (int k = 0; k < 200; ++k) {
    XState s = rng.xstate();
    CVec4 z{std::conj(s.c[0]), std::conj(s.c[1]), std::conj(s.c[2]), s.c[3]};
    auto r = s.c.magnitudes();
    CHECK(l_value(s, z) ==
          doctest::Approx(r[0] * r[0] + r[1] * r[1] + r[2] * r[2] + r[3] * r[3]));
  }
}

TEST_CASE("scale_conjugate") {
  XState rho;
  rho.a = rho.b = {1, 1, 1, 1};
  rho.c = CVec4{0.3, 0.3, 0.3, 0.3};
  XState same = scale_conjugate(rho, BalanceFactors{});
  CHECK(same.a == rho.a);
  CHECK(same.b == rho.b);

  XState two = scale_conjugate(rho, BalanceFactors::from_fourth_powers(16, 1, 1));
  CHECK(two.a == std::array<double, 4>{2, 2, 2, 2});
  CHECK(two.b == std::array<double, 4>{0.5, 0.5, 0.5, 0.5});

  CHECK_THROWS(scale_conjugate(rho, BalanceFactors{-1, 1, 1}));

  // delta and the three product relations are preserved
  ts::Rng rng(23);
  for (int k = 0; k < 500; ++k) {
    XState s = rng.xstate();
    BalanceFactors f{rng.uniform(0.2, 3), rng.uniform(0.2, 3), rng.uniform(0.2, 3)};
    XState t = scale_conjugate(s, f);
    CHECK(delta(t) == doctest::Approx(delta(s)).epsilon(1e-12));
    for (int i = 0; i < 4; ++i)
      CHECK(t.a[static_cast<size_t>(i)] * t.b[static_cast<size_t>(i)] ==
            doctest::Approx(s.a[static_cast<size_t>(i)] * s.b[static_cast<size_t>(i)])
                .epsilon(1e-12));
    CHECK(t.a[0] * t.b[1] * t.b[2] * t.a[3] ==
          doctest::Approx(s.a[0] * s.b[1] * s.b[2] * s.a[3]).epsilon(1e-12));
    CHECK(t.b[0] * t.a[1] * t.a[2] * t.b[3] ==
          doctest::Approx(s.b[0] * s.a[1] * s.a[2] * s.b[3]).epsilon(1e-12));
  }
}

TEST_CASE("balance_sym") {
  auto id = balance_sym({1, 2, 3, 4}, {1, 2, 3, 4});
  CHECK(id.alpha == doctest::Approx(1.0));
  CHECK(id.beta == doctest::Approx(1.0));
  CHECK(id.gamma == doctest::Approx(1.0));

  auto f = balance_sym({4, 1, 1, 1}, {1, 1, 1, 4});
  CHECK(f.alpha == doctest::Approx(1.0));
  CHECK(std::pow(f.beta, 4) == doctest::Approx(0.25));
  CHECK(std::pow(f.gamma, 4) == doctest::Approx(0.25));
  XState rho;
  rho.a = {4, 1, 1, 1};
  rho.b = {1, 1, 1, 4};
  XState bal = scale_conjugate(rho, f);
  CHECK(bal.a[0] == doctest::Approx(2.0));
  CHECK(bal.a[3] == doctest::Approx(2.0));
  for (int i = 0; i < 4; ++i)
    CHECK(bal.a[static_cast<size_t>(i)] == doctest::Approx(bal.b[static_cast<size_t>(i)]));

  ts::Rng rng(29);
  for (int k = 0; k < 1000; ++k) {
    auto a = rng.quad(0.05, 2.0);
    auto b = rng.quad(0.05, 2.0);
    // enforce the balanced-cross-product hypothesis on b4
    b[3] = a[0] * b[1] * b[2] * a[3] / (b[0] * a[1] * a[2]);
    XState s;
    s.a = a;
    s.b = b;
    XState t = scale_conjugate(s, balance_sym(a, b));
    for (int i = 0; i < 4; ++i) {
      double target = std::sqrt(a[static_cast<size_t>(i)] * b[static_cast<size_t>(i)]);
      CHECK(t.a[static_cast<size_t>(i)] == doctest::Approx(target).epsilon(1e-12));
      CHECK(t.b[static_cast<size_t>(i)] == doctest::Approx(target).epsilon(1e-12));
    }
  }
  CHECK_THROWS(balance_sym({1, 1, 1, 1}, {2, 1, 1, 1}));
}

TEST_CASE("balance_uni") {
  auto id = balance_uni({1, 1, 1, 1}, {1, 1, 1, 1});
  CHECK(id.alpha == doctest::Approx(1.0));

  auto f = balance_uni({2, 1, 1, 1}, {0.5, 1, 1, 1});
  XState rho;
  rho.a = {2, 1, 1, 1};
  rho.b = {0.5, 1, 1, 1};
  XState bal = scale_conjugate(rho, f);
  double root = std::pow(2.0, 0.25);
  CHECK(bal.a[0] == doctest::Approx(root).epsilon(1e-12));
  CHECK(bal.a[3] == doctest::Approx(root).epsilon(1e-12));
  CHECK(bal.b[1] == doctest::Approx(root).epsilon(1e-12));
  CHECK(bal.b[2] == doctest::Approx(root).epsilon(1e-12));

  ts::Rng rng(31);
  for (int k = 0; k < 1000; ++k) {
    auto a = rng.quad(0.05, 2.0);
    double p = rng.uniform(0.1, 2.0);
    std::array<double, 4> b{p / a[0], p / a[1], p / a[2], p / a[3]};
    XState s;
    s.a = a;
    s.b = b;
    XState t = scale_conjugate(s, balance_uni(a, b));
    double r1 = std::pow(a[0] * b[1] * b[2] * a[3], 0.25);
    double r2 = std::pow(b[0] * a[1] * a[2] * b[3], 0.25);
    CHECK(t.a[0] == doctest::Approx(r1).epsilon(1e-12));
    CHECK(t.b[1] == doctest::Approx(r1).epsilon(1e-12));
    CHECK(t.b[2] == doctest::Approx(r1).epsilon(1e-12));
    CHECK(t.a[3] == doctest::Approx(r1).epsilon(1e-12));
    CHECK(t.b[0] == doctest::Approx(r2).epsilon(1e-12));
    CHECK(t.a[1] == doctest::Approx(r2).epsilon(1e-12));
    CHECK(t.a[2] == doctest::Approx(r2).epsilon(1e-12));
    CHECK(t.b[3] == doctest::Approx(r2).epsilon(1e-12));
  }
  CHECK_THROWS(balance_uni({2, 1, 1, 1}, {1, 1, 1, 1}));
}

TEST_CASE("symmetrize and uniformize") {
  Witness x{{1, 0, 0, 0}, {0, 0, 0, 1}, CVec4{0.1, 0.2, 0.3, 0.4}};
  Witness sym = symmetrize(x);
  CHECK(sym.s == std::array<double, 4>{0.5, 0, 0, 0.5});
  CHECK(sym.t == std::array<double, 4>{0.5, 0, 0, 0.5});
  CHECK(sym.u[2] == x.u[2]);
  Witness fixed{{1, 2, 3, 4}, {1, 2, 3, 4}, CVec4{}};
  Witness same = symmetrize(fixed);
  CHECK(same.s == fixed.s);

  Witness y{{1, 0, 0, 0}, {0, 0, 0, 0}, CVec4{0.1, 0, 0, 0}};
  Witness uni = uniformize(y);
  CHECK(uni.s == std::array<double, 4>{0.25, 0, 0, 0.25});
  CHECK(uni.t == std::array<double, 4>{0, 0.25, 0.25, 0});
  CHECK(uni.u[0] == y.u[0]);

  ts::Rng rng(37);
  for (int k = 0; k < 200; ++k) {
    Witness w;
    w.s = rng.quad(0, 1);
    w.t = rng.quad(0, 1);
    Witness once = uniformize(w);
    Witness twice = uniformize(once);
    CHECK(once.s == twice.s);
    CHECK(once.t == twice.t);
  }
}
