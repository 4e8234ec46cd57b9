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

#include <cstddef>
#include <vector>

namespace miura {

struct GaussRule {
  std::vector<double> nodes;    // on [-1, 1]
  std::vector<double> weights;
};

/// Gauss-Legendre rule with m points, by Newton iteration on P_m.
GaussRule gauss_legendre(std::size_t m);

/// Integral of f over [a, b] with `pieces` equal panels of an m-point rule.
template <class F>
auto integrate(F&& f, double a, double b, std::size_t pieces, const GaussRule& rule) {
  using R = decltype(f(a));
  R sum{};
  const double w = (b - a) / static_cast<double>(pieces);
  for (std::size_t p = 0; p < pieces; ++p) {
    const double lo = a + w * static_cast<double>(p);
    for (std::size_t i = 0; i < rule.nodes.size(); ++i)
      sum += f(lo + 0.5 * w * (rule.nodes[i] + 1.0)) * (0.5 * w * rule.weights[i]);
  }
  return sum;
}

}  // namespace miura
