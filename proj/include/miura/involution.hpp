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

#include "miura/direct.hpp"

namespace miura {

struct InvolutionOptions {
  double clamp_eps = 1e-12;    // floor on 1 - |r|^2 before the log
  std::size_t oversample = 8;  // zero padding used by the Cauchy projection
};

struct ModulusProfile {
  FrequencyGrid freq;
  RVector logterm;  // log(max(1 - |r|^2, clamp_eps)), never positive
  double clamp_eps = 1e-12;
  std::size_t clamped = 0;  // bins where the floor was active
};

ModulusProfile modulus_profile(const ReflectionCoefficient& r, const InvolutionOptions& opts = {});

/// a(s) = exp(-C+[log(1 - |r|^2)](s)). The result has |a|^2 = 1/(1 - |r|^2)
/// on the grid and min|a| >= 1.
FreqFunction a_from_modulus(const ReflectionCoefficient& r, const InvolutionOptions& opts = {});

/// I(r) = -conj(r) conj(a)/a with a from a_from_modulus; the side flips.
ReflectionCoefficient involute(const ReflectionCoefficient& r, const InvolutionOptions& opts = {});

}  // namespace miura
