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

#include <map>
#include <string>
#include <vector>

#include "miura/grid.hpp"

namespace miura {

/// A declared jump of u at x with w = u(x+) - u(x-).
struct Jump {
  double x = 0.0;
  Complex w;
};

/// Samples of u on a spatial grid. Samples are read as the band-limited
/// interpolant through them. Cells containing a jump or an integrable
/// singularity hold exact cell averages, so sum(u_j)*h equals the integral.
class Potential {
public:
  Potential() = default;
  /// real_valued is inferred from the samples.
  explicit Potential(SpaceFunction samples, std::vector<Jump> jumps = {});
  /// Explicit flag; throws if real_valued is claimed for complex samples.
  Potential(SpaceFunction samples, bool real_valued, std::vector<Jump> jumps);

  const SpatialGrid& grid() const { return samples_.grid; }
  const SpaceFunction& samples() const { return samples_; }
  const CVector& values() const { return samples_.values; }
  bool real_valued() const { return real_valued_; }
  const std::vector<Jump>& jumps() const { return jumps_; }

  double l1() const { return l1_; }
  double l2() const { return l2_; }
  double norm_x() const { return l1_ + l2_; }
  double sup() const;

private:
  void init();
  SpaceFunction samples_;
  bool real_valued_ = true;
  std::vector<Jump> jumps_;
  double l1_ = 0.0;
  double l2_ = 0.0;
};

struct Atom {
  double x = 0.0;
  Complex weight;
};

/// Weak-form record of q = u' + u^2: the pairing with a test function phi is
///   -\int d phi' + \int sq phi + sum_k w_k phi(x_k).
struct MiuraPotential {
  SpatialGrid grid;
  SpaceFunction derivative_part;  // d
  SpaceFunction square_part;      // sq
  std::vector<Atom> atoms;

  /// q = 0 on the grid.
  static MiuraPotential zero(const SpatialGrid& g);
};

struct ZeroEnergySolution {
  SpaceFunction phi;  // real, strictly positive
};

/// Declared jumps are moved from the derivative part into atoms, so the
/// box gives d = 0 and atoms (+alpha at -1, -alpha at +1).
MiuraPotential miura_map(const Potential& u);

Complex miura_pairing(const MiuraPotential& q, const SpaceFunction& phi);

/// phi(x) = exp(\int_0^x u) by cumulative trapezoid, phi(0) = 1.
ZeroEnergySolution zero_energy_solution(const Potential& u);

enum class ExampleKind { Zero, Gaussian, Sech, Box, Ex1, Ex2 };

/// Named family plus parameters, e.g. "gaussian:amp=0.5,width=1".
struct ExampleSpec {
  ExampleKind kind = ExampleKind::Zero;
  std::map<std::string, double> params;

  static ExampleSpec parse(const std::string& text);
  std::string to_string() const;
  double get(const std::string& key, double fallback) const;
};

/// Families:
///   zero
///   gaussian  amp, width=1, center=0      amp*exp(-((x-center)/width)^2)
///   sech      amp, k=0                    amp*exp(ikx)*sech(x)
///   box       alpha, a=-1, b=1            alpha on [a,b], jumps declared
///   ex1       alpha=2, beta=4             even extension of x^-alpha sin(x^beta)
///   ex2       alpha=0.5                   alpha*cutoff(x)*log|x|
Potential example_potential(const ExampleSpec& spec, const SpatialGrid& grid);
Potential example_potential(ExampleKind kind, const std::map<std::string, double>& params,
                            const SpatialGrid& grid);

/// Embeds u in a window `factor` times longer (power of two), centred on
/// the original, with zeros outside. The spacing is unchanged, so the
/// frequency grid becomes `factor` times finer.
Potential zero_pad(const Potential& u, std::size_t factor);

/// Cutoff used by ex2: 1 on |x| <= 1, 0 on |x| >= 2, quintic smoothstep between.
double ex2_cutoff(double x);

std::vector<std::string> example_names();
const char* example_name(ExampleKind kind);

}  // namespace miura
