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

#include "miura/glm.hpp"
#include "miura/involution.hpp"

namespace miura {

struct InverseOptions {
  double c = 0.0;            // blend centre
  double width = 1.0;        // blend half-width; zeta is 1 left of c-width, 0 right of c+width
  GlmOptions glm;
  InvolutionOptions involution;
  double overlap_tol = -1.0;  // negative: 1e-3 * (1 + max|u|)
  double overlap_error_factor = 10.0;
};

/// Smooth step: 1 for t <= -1, 0 for t >= 1, C-infinity, built from exp(-1/t).
double blend_step(double t);

struct ReconstructionResult {
  Potential u;
  SpaceFunction u_plus;   // valid on x >= c - width
  SpaceFunction u_minus;  // valid on x <= c + width
  double overlap_gap = 0.0;
  double overlap_tol = 0.0;
  double c = 0.0;
  double width = 1.0;
  ReflectionCoefficient r_plus;
  ReflectionCoefficient r_minus;
  MarchenkoKernel F_plus;
  MarchenkoKernel F_minus;
  HalfLineReconstruction plus;
  HalfLineReconstruction minus;
  double max_residual = 0.0;
};

/// Full-line inverse map from one reflection coefficient (either side).
ReconstructionResult invert(const ReflectionCoefficient& r, const InverseOptions& opts = {});

struct BijectionOptions {
  ForwardOptions forward;
  InverseOptions inverse;
  double tolerance = 1e-3;
};

struct BijectionReport {
  double rel_x_error = 0.0;  // ||u_rec - u||_X / ||u||_X (absolute when u = 0)
  double r_sup_gap = 0.0;    // sup |r+(u_rec) - r+(u)|
  double overlap_gap = 0.0;
  double overlap_tol = 0.0;
  double rho = 0.0;
  double unitarity_defect = 0.0;
  double max_residual = 0.0;
  double tolerance = 1e-3;
  bool pass = false;
  Potential u_rec;
  ReflectionCoefficient r;
  ReflectionCoefficient r_rec;
};

/// forward -> invert -> forward. Failures are reported, not thrown, unless a
/// stage violates its own preconditions.
BijectionReport verify_bijection(const Potential& u, const BijectionOptions& opts = {});

}  // namespace miura
