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

#include "miura/involution.hpp"

#include <cmath>

#include "miura/error.hpp"

namespace miura {

ModulusProfile modulus_profile(const ReflectionCoefficient& r, const InvolutionOptions& opts) {
  if (!(r.rho < 1.0)) fail(ErrorKind::Invariant, "max|r| >= 1: outside X1");
  if (!(opts.clamp_eps > 0.0)) fail(ErrorKind::Precondition, "clamp_eps must be positive");
  ModulusProfile m{r.freq, RVector(r.r.size()), opts.clamp_eps, 0};
  for (std::size_t k = 0; k < r.r.size(); ++k) {
    double d = 1.0 - std::norm(r.r[k]);
    if (d < opts.clamp_eps) {
      d = opts.clamp_eps;
      ++m.clamped;
    }
    m.logterm[k] = std::log(d);
  }
  if (m.clamped * 100 > r.r.size()) warn("near-generic data: 1 - |r|^2 clamped on more than 1% of bins");
  return m;
}

FreqFunction a_from_modulus(const ReflectionCoefficient& r, const InvolutionOptions& opts) {
  ModulusProfile m = modulus_profile(r, opts);
  FreqFunction ell(r.freq);
  for (std::size_t k = 0; k < ell.size(); ++k) ell.values[k] = m.logterm[k];
  CauchyOptions co;
  co.oversample = opts.oversample;
  co.warn_on_tail = false;  // padding absorbs the slowly decaying tail
  FreqFunction c = cauchy_plus(ell, co);
  FreqFunction a(r.freq);
  double amin = INFINITY;
  for (std::size_t k = 0; k < a.size(); ++k) {
    a.values[k] = std::exp(-c.values[k]);
    amin = std::min(amin, std::abs(a.values[k]));
  }
  // Re C+[l] = l/2 exactly for real l, so |a| = (1 - |r|^2)^{-1/2} >= 1.
  if (amin < 1.0 - 1e-12) fail(ErrorKind::Invariant, "reconstructed a has modulus below 1");
  return a;
}

ReflectionCoefficient involute(const ReflectionCoefficient& r, const InvolutionOptions& opts) {
  FreqFunction a = a_from_modulus(r, opts);
  FreqFunction out(r.freq);
  for (std::size_t k = 0; k < out.size(); ++k) {
    const Complex& ak = a.values[k];
    out.values[k] = -std::conj(r.r[k]) * (std::conj(ak) / ak);
  }
  return make_reflection(out, opposite(r.side));
}

}  // namespace miura
