#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "xsep/json_io.hpp"
#include "xsep/oracle.hpp"
#include "xsep/separability.hpp"
#include "xsep/witness.hpp"
#include "xsep/xnorm.hpp"

using nlohmann::json;
using namespace xsep;

namespace {

constexpr int kExitError = 2;

json complex_json(const cplx& z) { return json::array({z.real(), z.imag()}); }

json cvec_json(const CVec4& z) {
  return json::array(
      {complex_json(z[0]), complex_json(z[1]), complex_json(z[2]), complex_json(z[3])});
}

json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open file: " + path);
  json j;
  in >> j;
  return j;
}

struct VectorInput {
  std::string inline_text;
  std::string file;

  CVec4 resolve() const {
    if (!inline_text.empty() && !file.empty())
      throw std::invalid_argument("--c and --file both given; pass exactly one");
    if (!inline_text.empty()) return parse_cvec(inline_text);
    if (!file.empty()) return xstate_from_json(load_json_file(file)).c;
    throw std::invalid_argument("missing input: pass --c or --file");
  }
};

json dual_report(const DualNormResult& r) {
  json j;
  j["value"] = r.value;
  j["bracket"] = json::array({r.lo, r.hi});
  j["branch"] = to_string(r.branch);
  switch (r.branch) {
    case DualBranch::OneZero: j["triangle"] = to_string(r.triangle); break;
    case DualBranch::RealEntries: j["real_case"] = to_string(r.real_case); break;
    case DualBranch::TwoTwo: j["t0"] = r.t0; break;
    default: break;
  }
  j["maximizer"] = cvec_json(r.maximizer);
  return j;
}

void emit(const json& j) { std::cout << j.dump(2) << "\n"; }

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"three-qubit X-state separability toolkit"};
  app.require_subcommand(1);

  double tol = 1e-9;
  int starts = 64;
  std::uint64_t seed = 0;
  app.add_option("--tol", tol, "bracket tolerance")->capture_default_str();
  app.add_option("--starts", starts, "numeric multistart count")->capture_default_str();
  app.add_option("--seed", seed, "random seed")->capture_default_str();

  VectorInput vec;
  std::string format = "csv";  // region output; the other reports are JSON

  auto* norm_cmd = app.add_subcommand("norm", "X norm of an anti-diagonal vector");
  norm_cmd->add_option("--c", vec.inline_text, "inline vector: re or re+imj, comma separated");
  norm_cmd->add_option("--file", vec.file, "state JSON; its anti-diagonal is used");

  auto* dual_cmd = app.add_subcommand("dual", "dual X norm with branch and certificate");
  dual_cmd->add_option("--c", vec.inline_text, "inline vector");
  dual_cmd->add_option("--file", vec.file, "state JSON; its anti-diagonal is used");

  auto* check_cmd = app.add_subcommand("check", "separability verdict for an X-state");
  std::string check_file, check_a, check_b;
  check_cmd->add_option("--file", check_file, "state JSON");
  check_cmd->add_option("--c", vec.inline_text, "inline anti-diagonal");
  check_cmd->add_option("--a", check_a, "inline diagonal quadruple a");
  check_cmd->add_option("--b", check_b, "inline diagonal quadruple b");

  auto* witness_cmd = app.add_subcommand("witness", "verify an X-shaped witness");
  std::string witness_file, witness_state;
  witness_cmd->add_option("--file", witness_file, "witness JSON {s,t,u}")->required();
  witness_cmd->add_option("--state", witness_state, "optional state JSON to pair with");

  auto* region_cmd = app.add_subcommand("region", "CSV region scan");
  std::string family = "theta-rs";
  double theta = kPi;
  int grid = 100;
  double rmax = 1.25;
  bool boundary_only = false;
  region_cmd->add_option("--family", family, "theta-rs | pqqq")->capture_default_str();
  region_cmd->add_option("--theta", theta, "phase of the first anti-diagonal entry")
      ->capture_default_str();
  region_cmd->add_option("--grid", grid, "grid resolution per axis")->capture_default_str();
  region_cmd->add_option("--rmax", rmax, "scan range")->capture_default_str();
  region_cmd->add_flag("--boundary", boundary_only, "emit refined boundary rows only");
  region_cmd->add_option("--format", format, "json|csv (csv default for region)");

  auto* decompose_cmd =
      app.add_subcommand("decompose", "product decomposition of the a,b,c family");
  double da = 1, db = 1, dc = 1;
  decompose_cmd->add_option("--a", da, "parameter a")->required();
  decompose_cmd->add_option("--b", db, "parameter b")->required();
  decompose_cmd->add_option("--c", dc, "parameter c (must equal ab)")->required();

  auto* sample_cmd = app.add_subcommand("sample", "verdict statistics over random X-states");
  int nsamples = 100;
  sample_cmd->add_option("--n", nsamples, "sample count")->capture_default_str();

  for (auto* sub : {norm_cmd, dual_cmd, check_cmd, witness_cmd, region_cmd,
                    decompose_cmd, sample_cmd})
    sub->fallthrough();

  CLI11_PARSE(app, argc, argv);

  try {
    if (norm_cmd->parsed()) {
      auto res = x_norm(vec.resolve(), tol);
      json j;
      j["value"] = res.value;
      j["bracket"] = json::array({res.lo, res.hi});
      j["branch"] = to_string(res.branch);
      if (res.branch == XNormBranch::PhasePi) j["omega_region"] = res.omega_region;
      j["maximizer_sigma"] = res.maximizer_sigma;
      emit(j);
      return 0;
    }

    if (dual_cmd->parsed()) {
      DualNormOptions opt;
      opt.tol = tol;
      opt.starts = starts;
      opt.seed = seed;
      CVec4 c = vec.resolve();
      json j = dual_report(dual_norm(c, opt));
      json lows = json::object(), ups = json::object();
      for (auto& [name, v] : dual_lower_bounds(c)) lows[name] = v;
      for (auto& [name, v] : dual_upper_bounds(c)) ups[name] = v;
      j["lower_bounds"] = lows;
      j["upper_bounds"] = ups;
      emit(j);
      return 0;
    }

    if (check_cmd->parsed()) {
      XState rho;
      if (!check_file.empty()) {
        if (!vec.inline_text.empty() || !check_a.empty() || !check_b.empty())
          throw std::invalid_argument("--file excludes --a/--b/--c; pass exactly one form");
        json in = load_json_file(check_file);
        if (in.contains("m")) {
          // dense three-qubit operator: necessary criterion on the X part
          Verdict v = necessary_check_general(dense8_from_json(in), tol);
          json j;
          j["verdict"] = to_string(v.kind);
          j["delta"] = v.delta;
          j["dual"] = dual_report(v.dual);
          if (v.guhne_z) j["certificate"] = cvec_json(*v.guhne_z);
          emit(j);
          switch (v.kind) {
            case VerdictKind::Entangled: return 1;
            case VerdictKind::Inconclusive: return 3;
            default: return 2;
          }
        }
        rho = xstate_from_json(in);
      } else {
        if (vec.inline_text.empty() || check_a.empty() || check_b.empty())
          throw std::invalid_argument("check needs --file or all of --a, --b, --c");
        rho.a = parse_quad(check_a);
        rho.b = parse_quad(check_b);
        rho.c = parse_cvec(vec.inline_text);
      }
      Verdict v = decide_xstate(rho, tol, starts);
      json j;
      j["verdict"] = to_string(v.kind);
      j["delta"] = v.delta;
      j["dual"] = dual_report(v.dual);
      if (v.guhne_z) j["certificate"] = cvec_json(*v.guhne_z);
      emit(j);
      switch (v.kind) {
        case VerdictKind::Separable: return 0;
        case VerdictKind::Entangled: return 1;
        case VerdictKind::Inconclusive: return 3;
        case VerdictKind::NotAState: return 2;
      }
      return kExitError;
    }

    if (witness_cmd->parsed()) {
      Witness w = witness_from_json(load_json_file(witness_file));
      AValue a = a_value(w.s, w.t, tol);
      json j;
      j["A"] = json{{"value", a.value}, {"lo", a.lo}, {"closed_form", a.closed_form}};
      j["B"] = b_value(w.u);
      WitnessCheck chk = is_witness(w, tol);
      j["is_witness"] = chk == WitnessCheck::Yes      ? "Yes"
                        : chk == WitnessCheck::No     ? "No"
                                                      : "Inconclusive";
      if (!witness_state.empty()) {
        XState rho = xstate_from_json(load_json_file(witness_state));
        j["pair"] = pair_value(rho, w);
      }
      emit(j);
      return 0;
    }

    if (region_cmd->parsed()) {
      if (format != "csv" && format != "json")
        throw std::invalid_argument("unknown format: " + format);
      if (family == "theta-rs") {
        auto scan = region_scan_theta(theta, grid, rmax, tol);
        if (format == "json") {
          json rows = json::array();
          for (const auto& row : scan.rows)
            rows.push_back(json{{"theta", row.theta},
                                {"r", row.r},
                                {"s", row.s},
                                {"delta", row.delta},
                                {"dual_norm", row.dual},
                                {"verdict", to_string(row.verdict)}});
          json boundary = json::array();
          for (auto& [r, s] : scan.boundary) boundary.push_back(json::array({r, s}));
          emit(json{{"rows", rows}, {"boundary", boundary}});
          return 0;
        }
        std::cout << "theta,r,s,delta,dual_norm,verdict\n";
        if (boundary_only) {
          for (auto& [r, s] : scan.boundary) {
            XState rho;
            rho.a = rho.b = {1, 1, 1, 1};
            rho.c = CVec4{std::polar(r, theta), r, s, s};
            DualNormOptions opt;
            opt.tol = tol;
            opt.with_certificate = false;
            auto dn = dual_norm(rho.c, opt);
            std::cout << fmt(theta) << "," << fmt(r) << "," << fmt(s) << ",1,"
                      << fmt(dn.value) << ","
                      << to_string(1.0 >= dn.value - tol ? VerdictKind::Separable
                                                         : VerdictKind::Entangled)
                      << "\n";
          }
        } else {
          for (const auto& row : scan.rows)
            std::cout << fmt(row.theta) << "," << fmt(row.r) << "," << fmt(row.s) << ","
                      << fmt(row.delta) << "," << fmt(row.dual) << ","
                      << to_string(row.verdict) << "\n";
        }
        return 0;
      }
      if (family == "pqqq") {
        auto rows = region_scan_pqqq(grid, rmax);
        if (format == "json") {
          json out = json::array();
          for (const auto& row : rows)
            out.push_back(json{{"p", row.p},
                               {"q", row.q},
                               {"xnorm", row.xnorm},
                               {"in_ball", row.in_ball}});
          emit(out);
          return 0;
        }
        std::cout << "p,q,xnorm,in_ball\n";
        for (const auto& row : rows)
          std::cout << fmt(row.p) << "," << fmt(row.q) << "," << fmt(row.xnorm) << ","
                    << (row.in_ball ? 1 : 0) << "\n";
        return 0;
      }
      throw std::invalid_argument("unknown family: " + family);
    }

    if (decompose_cmd->parsed()) {
      auto dec = decompose_acin(da, db, dc);
      json terms = json::array();
      for (const auto& term : dec.terms) {
        json factors = json::array();
        for (const auto& f : term.factors)
          factors.push_back(json::array({complex_json(f[0]), complex_json(f[1])}));
        terms.push_back(json{{"weight", term.weight}, {"factors", factors}});
      }
      json j;
      j["terms"] = terms;
      j["target"] = to_json(dec.target);
      j["reconstruction_error"] = dec.reconstruction_error;
      emit(j);
      return 0;
    }

    if (sample_cmd->parsed()) {
      std::mt19937_64 rng(seed);
      auto uni = [&]() { return (rng() >> 11) * 0x1.0p-53; };
      json counts = {{"Separable", 0}, {"Entangled", 0}, {"Inconclusive", 0},
                     {"NotAState", 0}};
      json branches = json::object();
      for (int k = 0; k < nsamples; ++k) {
        XState rho;
        for (int i = 0; i < 4; ++i) {
          rho.a[static_cast<size_t>(i)] = uni();
          rho.b[static_cast<size_t>(i)] = uni();
        }
        for (int i = 0; i < 4; ++i) {
          double cap = std::sqrt(rho.a[static_cast<size_t>(i)] * rho.b[static_cast<size_t>(i)]);
          rho.c[i] = std::polar(uni() * cap, 2 * kPi * uni() - kPi);
        }
        Verdict v = decide_xstate(rho, tol, starts);
        counts[to_string(v.kind)] = counts[to_string(v.kind)].get<int>() + 1;
        std::string b = to_string(v.dual.branch);
        branches[b] = (branches.contains(b) ? branches[b].get<int>() : 0) + 1;
      }
      json j;
      j["n"] = nsamples;
      j["seed"] = seed;
      j["counts"] = counts;
      j["branches"] = branches;
      emit(j);
      return 0;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitError;
  }
  return kExitError;
}
