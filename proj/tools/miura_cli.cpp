// Copyright 2026 The miura-scatter authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// miura: batch driver for the forward, inverse and oracle workflows.
//
// Exit status: 0 when every checked invariant holds, 1 when one fails (or
// the data violate a precondition), 2 for usage errors.

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>

#include "CLI11.hpp"
#include "config.hpp"
#include "json.hpp"
#include "miura/error.hpp"
#include "miura/io.hpp"
#include "miura/schrodinger.hpp"

namespace fs = std::filesystem;
using nlohmann::json;
using namespace miura;
using cli::RunConfig;

namespace {

constexpr const char* kVersion = "0.1.0";

// Collects named invariant checks for the report and the exit status.
class Report {
public:
  Report(std::string command, const RunConfig& cfg) : command_(std::move(command)), cfg_(cfg) {}

  json& results() { return results_; }

  void check(const std::string& name, double value, double tol, bool pass) {
    invariants_[name] = {{"value", value}, {"tolerance", tol}, {"pass", pass}};
    if (!pass) failed_.push_back(name);
  }
  void check_le(const std::string& name, double value, double tol) { check(name, value, tol, value <= tol); }

  int finish() const {
    fs::create_directories(cfg_.out);
    json doc{{"command", command_},
             {"version", kVersion},
             {"config", cli::to_json(cfg_)},
             {"results", results_},
             {"invariants", invariants_},
             {"status", failed_.empty() ? "pass" : "fail"}};
    std::ofstream os(fs::path(cfg_.out) / "report.json");
    os << doc.dump(2) << '\n';
    if (!os) fail(ErrorKind::Usage, "cannot write the report in " + cfg_.out);
    for (const auto& name : failed_) std::cerr << "invariant failed: " << name << '\n';
    std::cout << command_ << ": " << (failed_.empty() ? "pass" : "fail") << " (" << (fs::path(cfg_.out) / "report.json").string()
              << ")\n";
    return failed_.empty() ? 0 : 1;
  }

private:
  std::string command_;
  const RunConfig& cfg_;
  json results_ = json::object();
  json invariants_ = json::object();
  std::vector<std::string> failed_;
};

std::string out_file(const RunConfig& cfg, const std::string& name) {
  fs::create_directories(cfg.out);
  return (fs::path(cfg.out) / name).string();
}

// A potential argument names an existing CSV file or an example spec.
Potential load_potential(const RunConfig& cfg) {
  if (fs::is_regular_file(cfg.potential)) return io::read_potential(cfg.potential);
  return example_potential(ExampleSpec::parse(cfg.potential), cfg.grid());
}

ReflectionCoefficient load_reflection(const RunConfig& cfg) {
  if (cfg.r_file.empty()) fail(ErrorKind::Usage, "--r <file> is required");
  return io::read_reflection(cfg.r_file);
}

int cmd_examples() {
  std::cout << "families and default parameters:\n"
               "  zero\n"
               "  gaussian  amp=0.5 width=1 center=0   amp*exp(-((x-center)/width)^2)\n"
               "  sech      amp=0.3 k=0                amp*exp(ikx)*sech(x)\n"
               "  box       alpha=0.4 a=-1 b=1         alpha on [a,b] with declared jumps\n"
               "  ex1       alpha=2 beta=4             |x|^-alpha sin(|x|^beta)\n"
               "  ex2       alpha=0.5                  alpha*cutoff(x)*log|x|\n"
               "  delta     alpha=1                    oracle only: alpha*delta_0\n";
  return 0;
}

int cmd_forward(const RunConfig& cfg) {
  Report rep("forward", cfg);
  auto u = load_potential(cfg);
  ForwardOptions fo = cfg.forward_options();
  fo.unitarity_error = std::max(fo.unitarity_error, cfg.unitarity_tol);
  auto sd = solve_scattering(u, fo);
  auto rp = reflection(sd, Side::Right), rm = reflection(sd, Side::Left);
  io::write_potential(out_file(cfg, "potential.csv"), u);
  io::write_scattering(out_file(cfg, "scattering.csv"), sd);
  io::write_reflection(out_file(cfg, "r_plus.csv"), rp);
  io::write_reflection(out_file(cfg, "r_minus.csv"), rm);
  io::write_kernel(out_file(cfg, "F_plus.csv"), marchenko_kernel(rp));
  io::write_kernel(out_file(cfg, "F_minus.csv"), marchenko_kernel(rm));
  auto& r = rep.results();
  r["unitarity_defect"] = sd.unitarity_defect;
  r["det_drift"] = sd.det_drift;
  r["edge_a_deviation"] = sd.edge_a_deviation;
  r["rho"] = rp.rho;
  r["rho_margin"] = 1.0 - rp.rho;
  r["norm_x"] = u.norm_x();
  rep.check_le("unitarity", sd.unitarity_defect, cfg.unitarity_tol);
  rep.check("contraction", rp.rho, 1.0, rp.rho < 1.0);
  return rep.finish();
}

void write_reconstruction_files(const RunConfig& cfg, const ReconstructionResult& rec) {
  io::write_reconstruction(out_file(cfg, "u.csv"), rec);
  io::write_space_function(out_file(cfg, "u_plus.csv"), rec.u_plus);
  io::write_space_function(out_file(cfg, "u_minus.csv"), rec.u_minus);
  io::write_reflection(out_file(cfg, "r_plus.csv"), rec.r_plus);
  io::write_reflection(out_file(cfg, "r_minus.csv"), rec.r_minus);
}

int cmd_inverse(const RunConfig& cfg) {
  Report rep("inverse", cfg);
  auto r = load_reflection(cfg);
  auto rec = invert(r, cfg.inverse_options());
  write_reconstruction_files(cfg, rec);
  auto& res = rep.results();
  res["rho"] = r.rho;
  res["input_side"] = side_name(r.side);
  res["overlap_gap"] = rec.overlap_gap;
  res["max_residual"] = rec.max_residual;
  res["norm_estimate"] = {{"right", rec.plus.norm_estimate}, {"left", rec.minus.norm_estimate}};
  res["max_u"] = sup_norm(rec.u.values());
  rep.check_le("overlap_gap", rec.overlap_gap, rec.overlap_tol);
  rep.check_le("glm_residual", rec.max_residual, cfg.residual_tol);
  return rep.finish();
}

int cmd_roundtrip(const RunConfig& cfg) {
  Report rep("roundtrip", cfg);
  auto u = load_potential(cfg);
  BijectionOptions bo;
  bo.forward = cfg.forward_options();
  bo.inverse = cfg.inverse_options();
  bo.tolerance = cfg.roundtrip_tol;
  auto b = verify_bijection(u, bo);

  {
    std::ofstream os(out_file(cfg, "u_overlay.csv"));
    os << "x,re_u,im_u,re_u_rec,im_u_rec\n";
    const auto& g = u.grid();
    for (std::size_t j = 0; j < g.n; ++j)
      os << io::format_double(g.x(j)) << ',' << io::format_double(u.values()[j].real()) << ','
         << io::format_double(u.values()[j].imag()) << ',' << io::format_double(b.u_rec.values()[j].real()) << ','
         << io::format_double(b.u_rec.values()[j].imag()) << '\n';
  }
  {
    std::ofstream os(out_file(cfg, "r_overlay.csv"));
    os << "s,abs_r,abs_r_rec\n";
    for (std::size_t k = 0; k < b.r.r.size(); ++k)
      os << io::format_double(b.r.freq.s(k)) << ',' << io::format_double(std::abs(b.r.r[k])) << ','
         << io::format_double(std::abs(b.r_rec.r[k])) << '\n';
  }
  io::write_potential(out_file(cfg, "u_rec.csv"), b.u_rec);

  auto& res = rep.results();
  res["rel_x_error"] = b.rel_x_error;
  res["r_sup_gap"] = b.r_sup_gap;
  res["overlap_gap"] = b.overlap_gap;
  res["rho"] = b.rho;
  res["unitarity_defect"] = b.unitarity_defect;
  res["max_residual"] = b.max_residual;
  rep.check_le("unitarity", b.unitarity_defect, cfg.unitarity_tol);
  rep.check_le("rel_x_error", b.rel_x_error, cfg.roundtrip_tol);
  rep.check_le("r_sup_gap", b.r_sup_gap, cfg.roundtrip_tol);
  rep.check_le("overlap_gap", b.overlap_gap, b.overlap_tol);
  return rep.finish();
}

int cmd_miura(const RunConfig& cfg) {
  Report rep("miura", cfg);
  auto u = load_potential(cfg);
  auto q = miura_map(u);
  io::write_space_function(out_file(cfg, "q_derivative.csv"), q.derivative_part);
  io::write_space_function(out_file(cfg, "q_square.csv"), q.square_part);
  json atoms = json::array();
  for (const auto& a : q.atoms) atoms.push_back({{"x", a.x}, {"w", {a.weight.real(), a.weight.imag()}}});
  {
    std::ofstream os(out_file(cfg, "q_atoms.json"));
    os << json{{"atoms", atoms}}.dump(2) << '\n';
  }
  // Pairing with the standard Gaussian test function.
  SpaceFunction phi(q.grid);
  for (std::size_t j = 0; j < q.grid.n; ++j) phi.values[j] = std::exp(-q.grid.x(j) * q.grid.x(j));
  Complex p = miura_pairing(q, phi);
  auto& res = rep.results();
  res["atoms"] = atoms;
  res["pairing_gaussian"] = {p.real(), p.imag()};
  if (u.real_valued()) {
    auto z = zero_energy_solution(u);
    io::write_space_function(out_file(cfg, "zero_energy.csv"), z.phi);
    double phimin = INFINITY;
    for (auto v : z.phi.values) phimin = std::min(phimin, v.real());
    res["zero_energy_min"] = phimin;
    rep.check("zero_energy_positive", phimin, 0.0, phimin > 0.0);
  }
  return rep.finish();
}

int cmd_involution(const RunConfig& cfg) {
  Report rep("involution", cfg);
  auto r = load_reflection(cfg);
  InvolutionOptions io_opts;
  io_opts.oversample = cfg.oversample;
  auto prof = modulus_profile(r, io_opts);
  auto a = a_from_modulus(r, io_opts);
  auto ir = involute(r, io_opts);
  auto iir = involute(ir, io_opts);
  io::write_freq_function(out_file(cfg, "a.csv"), a);
  io::write_reflection(out_file(cfg, std::string("r_") + (ir.side == Side::Right ? "plus" : "minus") + ".csv"), ir);
  double modulus = 0, amin = INFINITY;
  for (std::size_t k = 0; k < a.size(); ++k) {
    modulus = std::max(modulus, std::abs(std::norm(a[k]) * (1.0 - std::norm(r.r[k])) - 1.0));
    amin = std::min(amin, std::abs(a[k]));
  }
  auto& res = rep.results();
  res["rho"] = r.rho;
  res["input_side"] = side_name(r.side);
  res["output_side"] = side_name(ir.side);
  res["clamped_bins"] = prof.clamped;
  res["min_abs_a"] = amin;
  const double sq = sup_diff(iir.r, r.r);
  res["involution_squared_error"] = sq;
  rep.check_le("modulus_identity", modulus, cfg.unitarity_tol);
  rep.check_le("involution_squared", sq, cfg.unitarity_tol);
  return rep.finish();
}

int cmd_oracle(const RunConfig& cfg) {
  Report rep("oracle", cfg);
  const RVector ks = linear_k_grid(cfg.k_min, cfg.k_max, cfg.k_count);
  auto& res = rep.results();

  std::optional<ExampleSpec> delta;
  if (!fs::is_regular_file(cfg.potential) && cfg.potential.rfind("delta", 0) == 0) {
    const auto colon = cfg.potential.find(':');
    const std::string rest = colon == std::string::npos ? "" : cfg.potential.substr(colon + 1);
    // Reuse the spec parser for the parameter list.
    delta = ExampleSpec::parse("zero" + (rest.empty() ? std::string() : ":" + rest));
    for (const auto& [k, v] : delta->params)
      if (k != "alpha") fail(ErrorKind::Usage, "unknown parameter '" + k + "' for delta");
  }

  if (delta) {
    const double alpha = delta->get("alpha", 1.0);
    auto q = MiuraPotential::zero(cfg.grid());
    q.atoms.push_back({0.0, Complex(alpha)});
    auto sc = schrodinger_reflection(q, ks);
    io::write_schrodinger(out_file(cfg, "schrodinger.csv"), sc.k, sc.R_left, sc.T);
    double curve = 0;
    for (std::size_t i = 0; i < ks.size(); ++i)
      curve = std::max(curve, std::abs(sc.R_left[i] - alpha / Complex(-alpha, 2.0 * ks[i])));
    res["R_at_k_min"] = {sc.R_left.front().real(), sc.R_left.front().imag()};
    res["distance_to_minus_one"] = std::abs(sc.R_left.front() + 1.0);
    res["unitarity_defect"] = sc.unitarity_defect;
    rep.check_le("delta_closed_form", curve, cfg.correspondence_tol);
    rep.check_le("unitarity", sc.unitarity_defect, cfg.unitarity_tol);
    if (alpha > 0) {
      auto ext = check_extremal_solutions(q);
      json windows = json::array();
      for (const auto& w : ext.windows) windows.push_back({{"W", w.W}, {"l1", w.l1}, {"log1p_alpha_W", w.predicted}});
      res["extremal"] = {{"phi_plus_at_minus2", ext.phi_plus_at_minus2},
                         {"phi_minus_at_2", ext.phi_minus_at_2},
                         {"residual_plus", ext.residual_plus},
                         {"residual_minus", ext.residual_minus},
                         {"windows", windows}};
      rep.check("extremal_certified", ext.residual_plus, 1e-8, ext.certified);
    }
    return rep.finish();
  }

  auto u = load_potential(cfg);
  auto q = miura_map(u);
  auto sc = schrodinger_reflection(q, ks);
  io::write_schrodinger(out_file(cfg, "schrodinger.csv"), sc.k, sc.R_left, sc.T);
  res["unitarity_defect"] = sc.unitarity_defect;
  if (!u.real_valued()) {
    res["correspondence"] = "not applicable: complex u";
    return rep.finish();
  }
  rep.check_le("unitarity", sc.unitarity_defect, cfg.unitarity_tol);

  // Compare on the AKNS frequency grid, s = 2k, inside [k_min, k_max].
  auto rm = reflection(solve_scattering(u, cfg.forward_options()), Side::Left);
  RVector kk;
  std::vector<std::size_t> idx;
  for (std::size_t k = 0; k < rm.r.size(); ++k) {
    const double half = rm.freq.s(k) / 2.0;
    if (half >= cfg.k_min && half <= cfg.k_max) {
      kk.push_back(half);
      idx.push_back(k);
    }
  }
  if (kk.empty()) fail(ErrorKind::Usage, "no frequency s = 2k of the grid falls in [k-min, k-max]");
  auto sc2 = schrodinger_reflection(q, kk);
  double gap = 0;
  {
    std::ofstream os(out_file(cfg, "correspondence.csv"));
    os << "k,re_R,im_R,re_r_minus_2k,im_r_minus_2k\n";
    for (std::size_t i = 0; i < kk.size(); ++i) {
      const Complex a = sc2.R_left[i], b = rm.r[idx[i]];
      gap = std::max(gap, std::abs(a - b));
      os << io::format_double(kk[i]) << ',' << io::format_double(a.real()) << ',' << io::format_double(a.imag()) << ','
         << io::format_double(b.real()) << ',' << io::format_double(b.imag()) << '\n';
    }
  }
  res["correspondence_gap"] = gap;
  res["correspondence_points"] = kk.size();
  rep.check_le("correspondence", gap, cfg.correspondence_tol);
  return rep.finish();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Direct and inverse scattering for ZS-AKNS systems and the Miura map"};
  app.set_version_flag("--version", kVersion);
  app.set_config("--config", "", "key=value configuration file (flags win)");
  app.require_subcommand(1, 1);
  RunConfig cfg;
  cli::add_options(app, cfg);

  struct Sub {
    const char* name;
    const char* help;
  };
  const Sub subs[] = {{"forward", "Potential -> scattering data, reflection coefficients and kernels"},
                      {"inverse", "Reflection coefficient (--r) -> potential"},
                      {"roundtrip", "forward -> inverse -> forward consistency report"},
                      {"miura", "Weak-form Miura record q = u' + u^2"},
                      {"involution", "Schwarz reconstruction of a and the opposite-side coefficient (--r)"},
                      {"oracle", "Schrodinger scattering of miura(u) or a delta atom; correspondence check"},
                      {"examples", "List built-in potential families"}};
  for (const auto& s : subs) app.add_subcommand(s.name, s.help)->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    const std::string cmd = app.get_subcommands().front()->get_name();
    if (cmd == "examples") return cmd_examples();
    cli::validate(cfg);
    if (cmd == "forward") return cmd_forward(cfg);
    if (cmd == "inverse") return cmd_inverse(cfg);
    if (cmd == "roundtrip") return cmd_roundtrip(cfg);
    if (cmd == "miura") return cmd_miura(cfg);
    if (cmd == "involution") return cmd_involution(cfg);
    if (cmd == "oracle") return cmd_oracle(cfg);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return e.kind() == ErrorKind::Usage ? 2 : 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 2;
}
