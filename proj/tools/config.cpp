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

#include "config.hpp"

#include <cmath>

#include "miura/error.hpp"

namespace miura::cli {

namespace {

std::pair<double, double> parse_window(const std::string& text) {
  const auto colon = text.find(':', 1);
  if (colon == std::string::npos) fail(ErrorKind::Usage, "window must be a:b, got '" + text + "'");
  try {
    std::size_t used = 0;
    double a = std::stod(text.substr(0, colon), &used);
    if (used != colon) throw std::invalid_argument(text);
    const std::string rest = text.substr(colon + 1);
    double b = std::stod(rest, &used);
    if (used != rest.size()) throw std::invalid_argument(text);
    return {a, b};
  } catch (const std::logic_error&) {
    fail(ErrorKind::Usage, "window must be a:b with numbers, got '" + text + "'");
  }
}

void positive(double v, const char* name) {
  if (!(v > 0.0) || !std::isfinite(v)) fail(ErrorKind::Usage, std::string(name) + " must be positive");
}

}  // namespace

double RunConfig::x0() const { return parse_window(window).first; }
double RunConfig::x1() const { return parse_window(window).second; }

SpatialGrid RunConfig::grid() const {
  auto [a, b] = parse_window(window);
  return SpatialGrid::window(a, b, n);
}

ForwardOptions RunConfig::forward_options() const {
  ForwardOptions f;
  f.substeps = substeps;
  return f;
}

InverseOptions RunConfig::inverse_options() const {
  InverseOptions o;
  o.c = c;
  o.width = width;
  o.overlap_tol = overlap_tol;
  o.glm.backend = parse_backend(backend);
  o.glm.quadrature = parse_quadrature(quadrature);
  o.glm.tail_tol = tail_tol;
  o.glm.neumann_terms = neumann_terms;
  o.involution.oversample = oversample;
  return o;
}

void add_options(CLI::App& app, RunConfig& cfg) {
  app.add_option("--potential,-p", cfg.potential, "Example spec (name:key=value,...) or a potential CSV file")
      ->capture_default_str();
  app.add_option("--window", cfg.window, "Spatial window a:b")->capture_default_str();
  app.add_option("--n", cfg.n, "Grid size (power of two)")->capture_default_str();
  app.add_option("--out,-o", cfg.out, "Output directory")->capture_default_str();
  app.add_option("--r", cfg.r_file, "Reflection coefficient CSV (inverse, involution)");

  auto* tol = "Tolerances";
  app.add_option("--unitarity-tol", cfg.unitarity_tol, "Max | |a|^2 - |b|^2 - 1 |")->group(tol)->capture_default_str();
  app.add_option("--residual-tol", cfg.residual_tol, "Max GLM residual")->group(tol)->capture_default_str();
  app.add_option("--roundtrip-tol", cfg.roundtrip_tol, "Relative X error and r gap for a roundtrip pass")
      ->group(tol)->capture_default_str();
  app.add_option("--correspondence-tol", cfg.correspondence_tol, "Max |R_left(k) - r-(2k)|")
      ->group(tol)->capture_default_str();
  app.add_option("--overlap-tol", cfg.overlap_tol, "Overlap gap tolerance (negative: 1e-3 (1 + max|u|))")
      ->group(tol)->capture_default_str();

  auto* inv = "Inverse solver";
  app.add_option("--c", cfg.c, "Blend centre")->group(inv)->capture_default_str();
  app.add_option("--width", cfg.width, "Blend half-width")->group(inv)->capture_default_str();
  app.add_option("--backend", cfg.backend, "GLM backend: dense, neumann, hankel-fast")->group(inv)->capture_default_str();
  app.add_option("--quadrature", cfg.quadrature, "GLM weights: trapezoid, gregory")->group(inv)->capture_default_str();
  app.add_option("--tail-tol", cfg.tail_tol, "zeta_max: kernel tail beyond it below this")->group(inv)->capture_default_str();
  app.add_option("--neumann-terms", cfg.neumann_terms, "Terms of the Neumann backend")->group(inv)->capture_default_str();
  app.add_option("--oversample", cfg.oversample, "Zero padding of the Cauchy projection")->group(inv)->capture_default_str();
  app.add_option("--substeps", cfg.substeps, "Forward Magnus substeps per cell")->group(inv)->capture_default_str();

  auto* orc = "Oracle";
  app.add_option("--k-min", cfg.k_min, "Smallest wavenumber")->group(orc)->capture_default_str();
  app.add_option("--k-max", cfg.k_max, "Largest wavenumber")->group(orc)->capture_default_str();
  app.add_option("--k-count", cfg.k_count, "Number of wavenumbers")->group(orc)->capture_default_str();
}

void validate(const RunConfig& cfg) {
  auto [a, b] = parse_window(cfg.window);
  if (!(a < b)) fail(ErrorKind::Usage, "window must satisfy x0 < x1");
  if (!is_power_of_two(cfg.n) || cfg.n < 64) fail(ErrorKind::Usage, "n must be a power of two >= 64");
  positive(cfg.unitarity_tol, "unitarity-tol");
  positive(cfg.residual_tol, "residual-tol");
  positive(cfg.roundtrip_tol, "roundtrip-tol");
  positive(cfg.correspondence_tol, "correspondence-tol");
  if (cfg.overlap_tol == 0.0 || !std::isfinite(cfg.overlap_tol)) fail(ErrorKind::Usage, "overlap-tol must be nonzero");
  positive(cfg.width, "width");
  positive(cfg.tail_tol, "tail-tol");
  if (!std::isfinite(cfg.c)) fail(ErrorKind::Usage, "c must be finite");
  if (cfg.substeps == 0) fail(ErrorKind::Usage, "substeps must be positive");
  if (cfg.neumann_terms == 0) fail(ErrorKind::Usage, "neumann-terms must be positive");
  if (!is_power_of_two(cfg.oversample)) fail(ErrorKind::Usage, "oversample must be a power of two");
  parse_backend(cfg.backend);
  parse_quadrature(cfg.quadrature);
  if (!(cfg.k_min > 0.0) || !(cfg.k_max >= cfg.k_min) || cfg.k_count == 0)
    fail(ErrorKind::Usage, "k grid requires 0 < k-min <= k-max and k-count >= 1");
}

nlohmann::json to_json(const RunConfig& cfg) {
  return {{"potential", cfg.potential},
          {"window", {cfg.x0(), cfg.x1()}},
          {"n", cfg.n},
          {"out", cfg.out},
          {"r", cfg.r_file},
          {"tolerances",
           {{"unitarity", cfg.unitarity_tol},
            {"residual", cfg.residual_tol},
            {"roundtrip", cfg.roundtrip_tol},
            {"correspondence", cfg.correspondence_tol},
            {"overlap", cfg.overlap_tol}}},
          {"blend", {{"c", cfg.c}, {"width", cfg.width}}},
          {"glm",
           {{"backend", cfg.backend},
            {"quadrature", cfg.quadrature},
            {"tail_tol", cfg.tail_tol},
            {"neumann_terms", cfg.neumann_terms}}},
          {"involution", {{"oversample", cfg.oversample}}},
          {"forward", {{"substeps", cfg.substeps}}},
          {"k_grid", {{"min", cfg.k_min}, {"max", cfg.k_max}, {"count", cfg.k_count}}}};
}

}  // namespace miura::cli
