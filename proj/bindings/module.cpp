#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "xsep/oracle.hpp"
#include "xsep/separability.hpp"
#include "xsep/witness.hpp"
#include "xsep/xnorm.hpp"

namespace py = pybind11;
using namespace xsep;

namespace {

CVec4 to_cvec(const std::array<cplx, 4>& v) { return CVec4(v); }

XState to_state(const std::array<double, 4>& a, const std::array<double, 4>& b,
                const std::array<cplx, 4>& c) {
  XState rho;
  rho.a = a;
  rho.b = b;
  rho.c = CVec4(c);
  return rho;
}

py::dict dual_dict(const DualNormResult& r) {
  py::dict d;
  d["value"] = r.value;
  d["lo"] = r.lo;
  d["hi"] = r.hi;
  d["branch"] = to_string(r.branch);
  d["maximizer"] = r.maximizer.e;
  if (r.branch == DualBranch::OneZero) d["triangle"] = to_string(r.triangle);
  if (r.branch == DualBranch::RealEntries) d["real_case"] = to_string(r.real_case);
  if (r.branch == DualBranch::TwoTwo) d["t0"] = r.t0;
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "three-qubit X-state separability toolkit";

  m.def("phase_difference",
        [](const std::array<cplx, 4>& c) { return phase_difference(to_cvec(c)); },
        py::arg("c"));

  m.def("delta",
        [](const std::array<double, 4>& a, const std::array<double, 4>& b) {
          XState rho;
          rho.a = a;
          rho.b = b;
          return delta(rho);
        },
        py::arg("a"), py::arg("b"));

  m.def("is_state",
        [](const std::array<double, 4>& a, const std::array<double, 4>& b,
           const std::array<cplx, 4>& c) { return is_state(to_state(a, b, c)); },
        py::arg("a"), py::arg("b"), py::arg("c"));

  m.def("x_norm",
        [](const std::array<cplx, 4>& z, double tol) {
          auto r = x_norm(to_cvec(z), tol);
          py::dict d;
          d["value"] = r.value;
          d["lo"] = r.lo;
          d["hi"] = r.hi;
          d["branch"] = to_string(r.branch);
          d["maximizer_sigma"] = r.maximizer_sigma;
          if (r.branch == XNormBranch::PhasePi) d["omega_region"] = r.omega_region;
          return d;
        },
        py::arg("z"), py::arg("tol") = 1e-9);

  m.def("dual_norm",
        [](const std::array<cplx, 4>& c, double tol, int starts) {
          return dual_dict(dual_norm(to_cvec(c), tol, starts));
        },
        py::arg("c"), py::arg("tol") = 1e-9, py::arg("starts") = 64);

  m.def("decide",
        [](const std::array<double, 4>& a, const std::array<double, 4>& b,
           const std::array<cplx, 4>& c, double tol, int starts) {
          Verdict v = decide_xstate(to_state(a, b, c), tol, starts);
          py::dict d;
          d["verdict"] = to_string(v.kind);
          d["delta"] = v.delta;
          d["dual"] = dual_dict(v.dual);
          if (v.guhne_z) d["certificate"] = v.guhne_z->e;
          return d;
        },
        py::arg("a"), py::arg("b"), py::arg("c"), py::arg("tol") = 1e-9,
        py::arg("starts") = 64);

  m.def("a_value",
        [](const std::array<double, 4>& s, const std::array<double, 4>& t, double tol) {
          auto a = a_value(s, t, tol);
          py::dict d;
          d["value"] = a.value;
          d["lo"] = a.lo;
          d["closed_form"] = a.closed_form;
          return d;
        },
        py::arg("s"), py::arg("t"), py::arg("tol") = 1e-9);

  m.def("b_value",
        [](const std::array<cplx, 4>& u) { return b_value(to_cvec(u)); }, py::arg("u"));

  m.def("is_witness",
        [](const std::array<double, 4>& s, const std::array<double, 4>& t,
           const std::array<cplx, 4>& u, double tol) {
          Witness w;
          w.s = s;
          w.t = t;
          w.u = CVec4(u);
          switch (is_witness(w, tol)) {
            case WitnessCheck::Yes: return "Yes";
            case WitnessCheck::No: return "No";
            default: return "Inconclusive";
          }
        },
        py::arg("s"), py::arg("t"), py::arg("u"), py::arg("tol") = 1e-9);

  m.def("pair_value",
        [](const std::array<double, 4>& a, const std::array<double, 4>& b,
           const std::array<cplx, 4>& c, const std::array<double, 4>& s,
           const std::array<double, 4>& t, const std::array<cplx, 4>& u) {
          Witness w;
          w.s = s;
          w.t = t;
          w.u = CVec4(u);
          return pair_value(to_state(a, b, c), w);
        },
        py::arg("a"), py::arg("b"), py::arg("c"), py::arg("s"), py::arg("t"),
        py::arg("u"));

  m.def("decompose_acin",
        [](double a, double b, double c) {
          auto dec = decompose_acin(a, b, c);
          py::list terms;
          for (const auto& term : dec.terms) {
            py::dict t;
            t["weight"] = term.weight;
            t["factors"] = term.factors;
            terms.append(t);
          }
          py::dict d;
          d["terms"] = terms;
          d["reconstruction_error"] = dec.reconstruction_error;
          return d;
        },
        py::arg("a"), py::arg("b"), py::arg("c"));

  m.def("region_scan_theta",
        [](double theta, int grid, double rmax) {
          auto scan = region_scan_theta(theta, grid, rmax);
          py::list rows;
          for (const auto& r : scan.rows)
            rows.append(py::make_tuple(r.theta, r.r, r.s, r.delta, r.dual,
                                       to_string(r.verdict)));
          py::list boundary;
          for (auto& [r, s] : scan.boundary) boundary.append(py::make_tuple(r, s));
          py::dict d;
          d["rows"] = rows;
          d["boundary"] = boundary;
          return d;
        },
        py::arg("theta"), py::arg("grid") = 100, py::arg("rmax") = 1.25);

  m.def("region_scan_pqqq",
        [](int grid, double range) {
          py::list rows;
          for (const auto& r : region_scan_pqqq(grid, range))
            rows.append(py::make_tuple(r.p, r.q, r.xnorm, r.in_ball));
          return rows;
        },
        py::arg("grid") = 100, py::arg("range") = 1.25);

  m.def("x_norm_oracle",
        [](const std::array<cplx, 4>& z, long grid_n) {
          auto rep = oracle::x_norm_oracle(to_cvec(z), grid_n);
          return py::make_tuple(rep.value, rep.lo, rep.hi);
        },
        py::arg("z"), py::arg("grid_n") = 1 << 14);

  m.def("dual_norm_oracle",
        [](const std::array<cplx, 4>& c, int starts, std::uint64_t seed) {
          auto rep = oracle::dual_norm_oracle(to_cvec(c), starts, seed);
          return py::make_tuple(rep.value, rep.lo, rep.hi);
        },
        py::arg("c"), py::arg("starts") = 2048, py::arg("seed") = 12345);

  m.attr("__version__") = "0.1.0";
}
