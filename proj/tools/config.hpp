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

#pragma once

#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "miura/glm.hpp"
#include "miura/inverse.hpp"
#include "miura/potential.hpp"

namespace miura::cli {

/// Everything a run depends on. Flags and the key=value config file fill
/// the same fields; flags win.
struct RunConfig {
  std::string potential = "gaussian:amp=0.5,width=1";
  std::string window = "-20:20";
  std::size_t n = 4096;
  std::string out = "miura_out";
  std::string r_file;

  double unitarity_tol = 1e-6;
  double residual_tol = 1e-8;
  double roundtrip_tol = 1e-3;
  double correspondence_tol = 1e-3;
  double overlap_tol = -1.0;  // negative: 1e-3 * (1 + max|u|)

  double c = 0.0;
  double width = 1.0;
  std::string backend = "hankel-fast";
  std::string quadrature = "gregory";
  double tail_tol = 1e-8;  // zeta_max policy
  std::size_t neumann_terms = 25;
  std::size_t substeps = 2;
  std::size_t oversample = 8;

  double k_min = 0.1;
  double k_max = 5.0;
  std::size_t k_count = 100;

  double x0() const;
  double x1() const;
  SpatialGrid grid() const;
  ForwardOptions forward_options() const;
  InverseOptions inverse_options() const;
};

/// Registers the shared options on the root app.
void add_options(CLI::App& app, RunConfig& cfg);

/// Throws a usage Error for out-of-range values.
void validate(const RunConfig& cfg);

nlohmann::json to_json(const RunConfig& cfg);

}  // namespace miura::cli
