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

#include "miura/potential.hpp"

namespace miura {

struct SchrodingerScattering {
  RVector k;
  CVector R_left;   // incident e^{ikx} from the left
  CVector R_right;  // incident e^{-ikx} from the right
  CVector T;
  double unitarity_defect = 0.0;  // max | |R_left|^2 + |T|^2 - 1 |, meaningful for real q
};

/// Scattering for -chi'' + q chi = k^2 chi with q in weak form. The smooth
/// part is integrated in the variables (chi, chi' - d chi) with a fourth-order
/// Magnus step per cell, so the weak derivative of d never has to be formed
/// and free cells are propagated exactly. Atoms are exact jumps of the second
/// variable. An atom inside a cell splits that cell into two steps.
///
/// Convention: with q = u' + u^2 for real u, R_left(k) = r-(2k), T(k) = 1/a(2k).
SchrodingerScattering schrodinger_reflection(const MiuraPotential& q, const RVector& k_grid);

RVector linear_k_grid(double kmin, double kmax, std::size_t count);

struct ExtremalWindow {
  double W = 0.0;
  double l1 = 0.0;         // \int_{-W}^0 |phi+'/phi+|
  double predicted = 0.0;  // log(1 + alpha W)
};

struct ExtremalReport {
  double alpha = 0.0;
  double phi_plus_at_minus2 = 0.0;
  double phi_minus_at_2 = 0.0;
  double residual_plus = 0.0;   // max weak residual over the test family
  double residual_minus = 0.0;
  std::vector<ExtremalWindow> windows;
  bool log_growth = false;      // l1 matches log(1 + alpha W) and keeps growing
  bool certified = false;       // residuals <= 1e-8 and log growth
};

/// For q = alpha * delta_0: checks that phi+ = 1 (x > 0), 1 - alpha x (x < 0)
/// and its mirror phi- solve -phi'' + q phi = 0 weakly, and that their
/// logarithmic derivatives are not integrable.
ExtremalReport check_extremal_solutions(const MiuraPotential& q);

}  // namespace miura
