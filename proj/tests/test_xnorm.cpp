#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "test_support.hpp"
#include "xsep/detail/frame.hpp"
#include "xsep/oracle.hpp"
#include "xsep/symmetry.hpp"
#include "xsep/xnorm.hpp"

using namespace xsep;

TEST_CASE("x_norm closed values") {
  CHECK(x_norm({1, 1, 1, 0}).value == doctest::Approx(3.0).epsilon(1e-14));
  CHECK(x_norm({1, 1, 1, 0}).branch == XNormBranch::OneZero);

  auto pi_case = x_norm({1, 1, 1, -1});
  CHECK(pi_case.value == doctest::Approx(2.0 * std::sqrt(2.0)).epsilon(1e-14));
  CHECK(pi_case.branch == XNormBranch::PhasePi);
  CHECK(pi_case.omega_region == 0);

  auto tt = x_norm({cplx(0, 2), 2, 1, 1});
  CHECK(tt.value == doctest::Approx(2.0 * std::sqrt(5.0 + 2.0 * std::sqrt(2.0))).epsilon(1e-14));
  CHECK(tt.branch == XNormBranch::TwoTwo);

  auto om0 = x_norm({-3, 1, 1, 1});
  CHECK(om0.value == doctest::Approx(8.0 / std::sqrt(3.0)).epsilon(1e-14));
  CHECK(om0.branch == XNormBranch::PhasePi);
  CHECK(om0.omega_region == 0);

  auto om1 = x_norm({-1, 3, 4, 5});
  CHECK(om1.value == doctest::Approx(11.0).epsilon(1e-14));
  CHECK(om1.omega_region == 1);

  CHECK(x_norm({0, 0, 0, 0}).value == 0.0);
  CHECK(x_norm({1, 1, 1, 1}).value == doctest::Approx(4.0));
  CHECK_THROWS(x_norm({1, 1, 1, 1}, 0.0));
}

TEST_CASE("lambda_big") {
  CHECK(lambda_big(1, 1, 1, 1) == doctest::Approx(2.0 * std::sqrt(2.0)));
  CHECK(lambda_big(3, 1, 1, 1) == doctest::Approx(8.0 / std::sqrt(3.0)));
  ts::Rng rng(3);
  for (int k = 0; k < 200; ++k) {
    double a1 = rng.uniform(0.1, 2), a2 = rng.uniform(0.1, 2);
    double a3 = rng.uniform(0.1, 2), a4 = rng.uniform(0.1, 2);
    double lam = rng.uniform(0.1, 5);
    CHECK(lambda_big(lam * a1, lam * a2, lam * a3, lam * a4) ==
          doctest::Approx(lam * lambda_big(a1, a2, a3, a4)).epsilon(1e-12));
  }
  CHECK_THROWS(lambda_big(1, 0, 1, 1));
  CHECK_THROWS(lambda_big(-1, 1, 1, 1));
}

TEST_CASE("maximizer sigma attains the reported value") {
  ts::Rng rng(19);
  for (int k = 0; k < 300; ++k) {
    CVec4 z = rng.cvec();
    auto res = x_norm(z);
    auto r = z.magnitudes();
    double phi = phase_difference(z);
    double s = res.maximizer_sigma;
    double b = std::sqrt(r[0] * r[0] + r[3] * r[3] +
                         2 * r[0] * r[3] * std::cos(s - phi)) +
               std::sqrt(r[1] * r[1] + r[2] * r[2] + 2 * r[1] * r[2] * std::cos(s));
    CHECK(b <= res.hi + 1e-9);
    CHECK(b >= res.value - 1e-7);
  }
}

TEST_CASE("x_norm lower bounds hold and match quoted cases") {
  auto bounds = x_norm_lower_bounds({1, 1, 1, -1});
  double norm = x_norm({1, 1, 1, -1}).value;
  for (auto& [name, v] : bounds) CHECK(v <= norm + 1e-12);
  // the l1/sqrt2 bound is sharp exactly at equal magnitudes
  CHECK(bounds[2].second == doctest::Approx(norm).epsilon(1e-14));

  double q = 1.0 / (2.0 * std::sqrt(2.0));
  CHECK(x_norm({-q, q, q, q}).value == doctest::Approx(1.0).epsilon(1e-13));

  for (auto& [name, v] : x_norm_lower_bounds({1, 0, 0, 0})) CHECK(v <= 1.0 + 1e-15);

  ts::Rng rng(29);
  for (int k = 0; k < 2000; ++k) {
    CVec4 z = rng.cvec();
    double n = x_norm(z).value;
    for (auto& [name, v] : x_norm_lower_bounds(z)) CHECK(v <= n + 1e-9);
    CHECK(n <= z.l1() + 1e-12);
    CHECK(n >= z.linf() - 1e-12);
  }
}

TEST_CASE("beta profile") {
  std::vector<double> grid;
  for (int i = 0; i <= 50; ++i) grid.push_back(kPi * i / 50);

  auto ones = beta_profile({1, 1, 1, 1}, grid);
  CHECK(ones.front().second == doctest::Approx(4.0));
  CHECK(ones.back().second == doctest::Approx(2.0 * std::sqrt(2.0)));

  auto zero = beta_profile({1, 1, 1, 0}, grid);
  for (auto& [phi, b] : zero) CHECK(b == doctest::Approx(3.0).epsilon(1e-13));

  auto tt = beta_profile({1, 2, 1, 2}, grid);
  for (auto& [phi, b] : tt)
    CHECK(b == doctest::Approx(2.0 * std::sqrt(5.0 + 4.0 * std::abs(std::cos(phi / 2))))
                   .epsilon(1e-12));

  ts::Rng rng(37);
  for (int k = 0; k < 50; ++k) {
    auto mags = rng.quad(0.05, 1.0);
    auto prof = beta_profile(mags, grid);
    for (size_t i = 1; i < prof.size(); ++i) CHECK(prof[i].second < prof[i - 1].second);
  }
}

TEST_CASE("norm axioms on random samples") {
  ts::Rng rng(41);
  for (int k = 0; k < 1000; ++k) {
    CVec4 z = rng.cvec();
    CVec4 w = rng.cvec();
    double nz = x_norm(z).value, nw = x_norm(w).value;
    cplx al{rng.uniform(-2, 2), rng.uniform(-2, 2)};
    CHECK(x_norm(al * z).value == doctest::Approx(std::abs(al) * nz).epsilon(1e-10));
    CHECK(x_norm(z + w).value <= nz + nw + 1e-10);
    CHECK(x_norm(z.conjugated()).value == doctest::Approx(nz).epsilon(1e-10));
  }
}

TEST_CASE("invariance under the group, substitutions, and re-phasing") {
  ts::Rng rng(43);
  for (int k = 0; k < 1000; ++k) {
    CVec4 z = rng.cvec();
    double n = x_norm(z).value;
    for (const auto& sigma : kNormPermutations)
      CHECK(x_norm(permute(z, sigma)).value == doctest::Approx(n).epsilon(1e-9));
    CHECK(x_norm(detail::Frame::apply_t1(z)).value == doctest::Approx(n).epsilon(1e-9));
    CHECK(x_norm(detail::Frame::apply_t2(z)).value == doctest::Approx(n).epsilon(1e-9));

    // re-phase with a pattern fixing magnitudes and |phi|
    // (arg u1 + arg u4 = arg u2 + arg u3)
    double a = rng.angle(), b = rng.angle(), g = rng.angle();
    CVec4 u{std::polar(1.0, a), std::polar(1.0, b), std::polar(1.0, g),
            std::polar(1.0, b + g - a)};
    CVec4 w;
    for (int i = 0; i < 4; ++i) w[i] = z[i] * u[i];
    CHECK(std::abs(std::abs(phase_difference(w)) - std::abs(phase_difference(z))) < 1e-9);
    CHECK(x_norm(w).value == doctest::Approx(n).epsilon(1e-9));
  }
}

TEST_CASE("a non-invariant permutation exists: <2134>") {
  CVec4 z{cplx(0, 1), 1, 1, std::polar(1.0, kPi / 4)};
  CVec4 zp{z[1], z[0], z[2], z[3]};
  double n = x_norm(z).value;
  double np = x_norm(zp).value;
  CHECK(std::abs(n - np) > 0.5);
  CHECK(std::abs(std::abs(phase_difference(z)) - std::abs(phase_difference(zp))) > 0.5);
}

TEST_CASE("closed-form branches agree with the numeric branch") {
  ts::Rng rng(47);
  const int per_branch = 10000;

  std::vector<CVec4> inputs;
  inputs.reserve(4 * per_branch);
  for (int k = 0; k < per_branch; ++k) {
    // Phase0
    CVec4 a{rng.uniform(0.05, 1), rng.uniform(0.05, 1), rng.uniform(0.05, 1),
            rng.uniform(0.05, 1)};
    double al = rng.angle(), be = rng.angle(), ga = rng.angle();
    CVec4 u{std::polar(1.0, al), std::polar(1.0, be), std::polar(1.0, ga),
            std::polar(1.0, be + ga - al)};
    for (int i = 0; i < 4; ++i) a[i] *= u[i];
    inputs.push_back(a);
    // OneZero
    CVec4 b = rng.cvec_nonzero();
    b[static_cast<int>(rng.g() % 4)] = 0.0;
    inputs.push_back(b);
    // PhasePi
    CVec4 c{-rng.uniform(0.05, 1), rng.uniform(0.05, 1), rng.uniform(0.05, 1),
            rng.uniform(0.05, 1)};
    for (int i = 0; i < 4; ++i) c[i] *= u[i];
    inputs.push_back(c);
    // TwoTwo
    double r = rng.uniform(0.05, 1), s = rng.uniform(0.05, 1);
    CVec4 d{std::polar(r, rng.angle()), std::polar(r, rng.angle()),
            std::polar(s, rng.angle()), std::polar(s, rng.angle())};
    static constexpr std::array<std::array<int, 4>, 3> parts = {
        {{0, 1, 2, 3}, {0, 2, 1, 3}, {0, 3, 1, 2}}};
    d = permute(d, kNormPermutations[rng.g() % 8]);
    (void)parts;
    inputs.push_back(d);
  }

  std::vector<char> ok(inputs.size(), 0);
  ts::parallel_for(static_cast<int>(inputs.size()), [&](int i) {
    const CVec4& z = inputs[static_cast<size_t>(i)];
    auto closed = x_norm(z);
    auto numeric = detail::x_norm_numeric_only(z, 1e-10);
    bool branch_ok = closed.branch != XNormBranch::Numeric;
    double scale = std::max(1.0, closed.value);
    bool agree = std::abs(closed.value - numeric.value) <= 1e-8 * scale;
    bool bracket = closed.value >= numeric.lo - 1e-9 && closed.value <= numeric.hi + 1e-9;
    ok[static_cast<size_t>(i)] = branch_ok && agree && bracket;
  });
  int bad = 0;
  for (char c : ok)
    if (!c) ++bad;
  CHECK(bad == 0);
}

TEST_CASE("numeric branch brackets contain the oracle") {
  ts::Rng rng(53);
  for (int k = 0; k < 300; ++k) {
    CVec4 z = rng.cvec_nonzero();
    auto res = x_norm(z, 1e-10);
    auto rep = oracle::x_norm_oracle(z, 1 << 12);
    CHECK(res.hi - res.lo <= 1e-9);
    CHECK(rep.value <= res.hi + 1e-9);
    CHECK(res.value <= rep.hi + 1e-9);
    CHECK(std::abs(res.value - rep.value) < 1e-6);
  }
}
