#include "xsep/separability.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include <Eigen/Dense>

#include "xsep/witness.hpp"
#include "xsep/xnorm.hpp"

namespace xsep {

std::string to_string(VerdictKind k) {
  switch (k) {
    case VerdictKind::Separable: return "Separable";
    case VerdictKind::Entangled: return "Entangled";
    case VerdictKind::NotAState: return "NotAState";
    case VerdictKind::Inconclusive: return "Inconclusive";
  }
  return "?";
}

namespace {

CVec4 guhne_form(const CVec4& z) {
  return {z[0], z[1], z[2], std::conj(z[3])};
}

Eigen::Matrix<std::complex<double>, 8, 8> to_eigen(const Dense8& m) {
  Eigen::Matrix<std::complex<double>, 8, 8> e;
  for (int i = 0; i < 8; ++i)
    for (int j = 0; j < 8; ++j)
      e(i, j) = m[static_cast<size_t>(i)][static_cast<size_t>(j)];
  return e;
}

}  // namespace

Verdict decide_xstate(const XState& rho, double tol, int starts) {
  Verdict v;
  if (!is_state(rho)) {
    v.kind = VerdictKind::NotAState;
    bool diag_ok = true;
    for (int i = 0; i < 4; ++i)
      diag_ok &= rho.a[static_cast<size_t>(i)] >= 0 && rho.b[static_cast<size_t>(i)] >= 0;
    v.delta = diag_ok ? delta(rho) : std::nan("");
    return v;
  }
  v.delta = delta(rho);
  DualNormOptions opt;
  opt.tol = tol;
  opt.starts = starts;
  opt.early_decision = v.delta;
  v.dual = dual_norm(rho.c, opt);

  if (v.dual.lo == v.dual.hi || v.dual.branch != DualBranch::Numeric) {
    // exact branch: the criterion is non-strict, ties go to Separable
    v.kind = (v.delta >= v.dual.value - tol) ? VerdictKind::Separable
                                             : VerdictKind::Entangled;
  } else if (v.delta >= v.dual.hi) {
    v.kind = VerdictKind::Separable;
  } else if (v.delta < v.dual.lo) {
    v.kind = VerdictKind::Entangled;
  } else {
    v.kind = VerdictKind::Inconclusive;
  }
  if (v.kind == VerdictKind::Entangled) v.guhne_z = guhne_form(v.dual.maximizer);
  return v;
}

Verdict necessary_check_general(const Dense8& m, double tol) {
  Verdict v;
  XState rho = xpart(m);  // throws if not Hermitian
  auto eig = to_eigen(m).selfadjointView<Eigen::Lower>().eigenvalues();
  double scale = 0;
  for (const auto& row : m)
    for (const auto& x : row) scale = std::max(scale, std::abs(x));
  if (eig.minCoeff() < -std::max(tol, 1e-10) * std::max(1.0, scale)) {
    v.kind = VerdictKind::NotAState;
    return v;
  }
  for (int i = 0; i < 4; ++i) {
    rho.a[static_cast<size_t>(i)] = std::max(rho.a[static_cast<size_t>(i)], 0.0);
    rho.b[static_cast<size_t>(i)] = std::max(rho.b[static_cast<size_t>(i)], 0.0);
  }
  v.delta = delta(rho);

  double max_lb = 0;
  for (auto& [name, val] : dual_lower_bounds(rho.c)) max_lb = std::max(max_lb, val);

  DualNormOptions opt;
  opt.tol = tol;
  opt.early_decision = v.delta;
  v.dual = dual_norm(rho.c, opt);

  if (v.delta < max_lb - tol) {
    v.kind = VerdictKind::Entangled;
    v.guhne_z = guhne_form(v.dual.maximizer);
  } else {
    v.kind = VerdictKind::Inconclusive;  // the X-part test is only necessary
  }
  return v;
}

double guhne_check(const XState& rho, std::span<const CVec4> z_samples) {
  double d = delta(rho);
  double worst = std::numeric_limits<double>::infinity();
  for (const auto& z : z_samples) {
    double cz = x_norm({z[0], z[1], z[2], std::conj(z[3])}).value;
    worst = std::min(worst, cz * d - l_value(rho, z));
  }
  return worst;
}

ThetaScan region_scan_theta(double theta, int grid_n, double rmax, double tol) {
  if (grid_n < 2) throw std::invalid_argument("region_scan_theta: grid_n >= 2");
  ThetaScan out;
  out.rows.reserve(static_cast<size_t>(grid_n) * static_cast<size_t>(grid_n));

  auto dual_at = [&](double r, double s) {
    CVec4 c{r * std::exp(cplx(0.0, theta)), r, s, s};
    DualNormOptions opt;
    opt.tol = tol;
    opt.with_certificate = false;
    return dual_norm(c, opt).value;
  };

  std::vector<double> grid(static_cast<size_t>(grid_n));
  for (int i = 0; i < grid_n; ++i)
    grid[static_cast<size_t>(i)] = rmax * i / (grid_n - 1);

  for (int j = 0; j < grid_n; ++j) {
    for (int i = 0; i < grid_n; ++i) {
      double r = grid[static_cast<size_t>(i)], s = grid[static_cast<size_t>(j)];
      double d = 1.0;
      double v = dual_at(r, s);
      RegionRow row;
      row.theta = theta;
      row.r = r;
      row.s = s;
      row.delta = d;
      row.dual = v;
      row.verdict = (d >= v - tol) ? VerdictKind::Separable : VerdictKind::Entangled;
      out.rows.push_back(row);
    }
  }

  // boundary: bisect delta - dual sign changes along rows and columns
  auto margin = [&](double r, double s) { return 1.0 - dual_at(r, s); };
  auto bisect = [&](double x0, double x1, auto eval) {
    double f0 = eval(x0);
    for (int it = 0; it < 40; ++it) {
      double xm = 0.5 * (x0 + x1);
      double fm = eval(xm);
      if ((fm >= 0) == (f0 >= 0)) {
        x0 = xm;
        f0 = fm;
      } else {
        x1 = xm;
      }
      if (x1 - x0 < 1e-7) break;
    }
    return 0.5 * (x0 + x1);
  };
  for (int j = 0; j < grid_n; ++j) {
    double s = grid[static_cast<size_t>(j)];
    for (int i = 0; i + 1 < grid_n; ++i) {
      double r0 = grid[static_cast<size_t>(i)], r1 = grid[static_cast<size_t>(i + 1)];
      if ((margin(r0, s) >= 0) != (margin(r1, s) >= 0)) {
        double rb = bisect(r0, r1, [&](double r) { return margin(r, s); });
        out.boundary.emplace_back(rb, s);
      }
    }
  }
  for (int i = 0; i < grid_n; ++i) {
    double r = grid[static_cast<size_t>(i)];
    for (int j = 0; j + 1 < grid_n; ++j) {
      double s0 = grid[static_cast<size_t>(j)], s1 = grid[static_cast<size_t>(j + 1)];
      if ((margin(r, s0) >= 0) != (margin(r, s1) >= 0)) {
        double sb = bisect(s0, s1, [&](double s) { return margin(r, s); });
        out.boundary.emplace_back(r, sb);
      }
    }
  }
  return out;
}

std::vector<PqRow> region_scan_pqqq(int grid_n, double range) {
  if (grid_n < 2) throw std::invalid_argument("region_scan_pqqq: grid_n >= 2");
  std::vector<PqRow> out;
  out.reserve(static_cast<size_t>(grid_n) * static_cast<size_t>(grid_n));
  for (int j = 0; j < grid_n; ++j) {
    for (int i = 0; i < grid_n; ++i) {
      double p = -range + 2.0 * range * i / (grid_n - 1);
      double q = -range + 2.0 * range * j / (grid_n - 1);
      PqRow row;
      row.p = p;
      row.q = q;
      row.xnorm = x_norm({p, q, q, q}).value;
      row.in_ball = row.xnorm <= 1.0;
      out.push_back(row);
    }
  }
  return out;
}

ProductDecomposition decompose_acin(double a, double b, double c) {
  if (!(a > 0 && b > 0 && c > 0))
    throw std::invalid_argument("decompose_acin: parameters must be positive");
  if (std::abs(a * b - c) > 1e-10 * std::max(std::abs(a * b), std::abs(c)))
    throw std::invalid_argument("decompose_acin: requires ab = c");

  ProductDecomposition out;
  out.target.a = {1.0, a, b, c};
  out.target.b = {1.0, 1.0 / a, 1.0 / b, 1.0 / c};
  out.target.c = CVec4{1.0, 0.0, 0.0, 0.0};

  const double sa = std::sqrt(a), sb = std::sqrt(b), sc = std::sqrt(c);
  for (int j = 0; j < 7; ++j) {
    auto w = [&](int k) {
      return std::exp(cplx(0.0, 2.0 * kPi * ((k * j) % 7) / 7.0));
    };
    std::array<std::array<cplx, 2>, 3> f{{{cplx(1.0), w(4) / sc},
                                          {cplx(1.0), w(2) * sb},
                                          {cplx(1.0), w(1) * sa}}};
    ProductTerm term;
    term.weight = 1.0 / 7.0;
    for (int k = 0; k < 3; ++k) {
      double n2 = std::norm(f[static_cast<size_t>(k)][0]) +
                  std::norm(f[static_cast<size_t>(k)][1]);
      double n = std::sqrt(n2);
      term.weight *= n2;
      term.factors[static_cast<size_t>(k)] = {f[static_cast<size_t>(k)][0] / n,
                                              f[static_cast<size_t>(k)][1] / n};
    }
    out.terms.push_back(term);
  }

  Dense8 sum = reconstruct(out);
  Dense8 tgt = embed(out.target);
  double err = 0;
  for (int i = 0; i < 8; ++i)
    for (int jj = 0; jj < 8; ++jj)
      err = std::max(err, std::abs(sum[static_cast<size_t>(i)][static_cast<size_t>(jj)] -
                                   tgt[static_cast<size_t>(i)][static_cast<size_t>(jj)]));
  out.reconstruction_error = err;
  return out;
}

Dense8 reconstruct(const ProductDecomposition& d) {
  Dense8 sum{};
  for (auto& row : sum) row.fill(cplx(0.0, 0.0));
  for (const auto& term : d.terms) {
    std::array<cplx, 8> psi{};
    for (int k = 0; k < 8; ++k) {
      psi[static_cast<size_t>(k)] = term.factors[0][static_cast<size_t>((k >> 2) & 1)] *
                                    term.factors[1][static_cast<size_t>((k >> 1) & 1)] *
                                    term.factors[2][static_cast<size_t>(k & 1)];
    }
    for (int i = 0; i < 8; ++i)
      for (int j = 0; j < 8; ++j)
        sum[static_cast<size_t>(i)][static_cast<size_t>(j)] +=
            term.weight * psi[static_cast<size_t>(i)] *
            std::conj(psi[static_cast<size_t>(j)]);
  }
  return sum;
}

}  // namespace xsep
