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

#include "miura/grid.hpp"
#include "miura/potential.hpp"

namespace miura {

enum class Side { Left, Right };
const char* side_name(Side s);
Side parse_side(const std::string& text);
inline Side opposite(Side s) { return s == Side::Left ? Side::Right : Side::Left; }

struct ForwardOptions {
  // Magnus substeps per grid cell; the scheme is 4th order in the substep.
  std::size_t substeps = 2;
  double unitarity_error = 1e-4;
};

/// Boundary values a(s) = N11(-inf, s), b(s) = N21(-inf, s) plus diagnostics.
struct ScatteringData {
  FrequencyGrid freq;
  CVector a;
  CVector b;
  double unitarity_defect = 0.0;  // max | |a|^2 - |b|^2 - 1 |
  double det_drift = 0.0;         // max |det N - 1| over the sampled frequencies
  double edge_a_deviation = 0.0;  // max |a - 1| over the 10 outermost bins
};

struct ReflectionCoefficient {
  FrequencyGrid freq;
  CVector r;
  Side side = Side::Right;
  double rho = 0.0;

  FreqFunction function() const { return FreqFunction(freq, r); }
};

struct MarchenkoKernel {
  SpatialGrid space;
  CVector F;
  Side side = Side::Right;

  SpaceFunction function() const { return SpaceFunction(space, F); }
};

/// Integrates the ZS-AKNS system through the band-limited interpolant of the
/// samples with a 4th-order Magnus scheme, from the right window end to the
/// left, for every frequency of the paired grid.
ScatteringData solve_scattering(const Potential& u, const ForwardOptions& opts = {});

/// First Volterra term of b: -\int e^{isy} conj(u(y)) dy.
FreqFunction born_approximation(const Potential& u);

/// r- = b/a (left) or r+ = -conj(b)/a (right). Throws if max|r| >= 1.
ReflectionCoefficient reflection(const ScatteringData& sd, Side side);

/// Wraps samples as a reflection coefficient, enforcing rho < 1.
ReflectionCoefficient make_reflection(const FreqFunction& r, Side side);

/// F+ = fourier_plus(r+) for the right side, F- = fourier_minus(r-) for the left.
MarchenkoKernel marchenko_kernel(const ReflectionCoefficient& r);

struct JostSolutions {
  SpaceFunction chi_plus;   // (1 1) times the first column of Psi+, ~ e^{isx/2} at +inf
  SpaceFunction chi_minus;  // (1 1) times the second column of Psi-, ~ e^{-isx/2} at -inf
  double det_drift = 0.0;
};

JostSolutions jost_row_solutions(const Potential& u, double s, const ForwardOptions& opts = {});

}  // namespace miura
