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

#include <complex>
#include <cstddef>
#include <string>
#include <vector>

namespace miura {

using Complex = std::complex<double>;
using CVector = std::vector<Complex>;
using RVector = std::vector<double>;

inline constexpr double kPi = 3.14159265358979323846;

bool is_power_of_two(std::size_t n);

/// Uniform spatial grid x_j = x0 + j*h, j = 0..n-1, with n a power of two.
struct SpatialGrid {
  double x0 = 0.0;
  double h = 1.0;
  std::size_t n = 2;

  SpatialGrid() = default;
  SpatialGrid(double x0_, double h_, std::size_t n_);

  /// Grid covering [a, b) with n points, so h = (b - a) / n.
  static SpatialGrid window(double a, double b, std::size_t n);

  double x(std::size_t j) const { return x0 + static_cast<double>(j) * h; }
  double length() const { return static_cast<double>(n) * h; }
  /// Index of the node equal to x within a small relative slack; throws otherwise.
  std::size_t node_index(double x) const;
  std::size_t nearest_index(double x) const;

  bool operator==(const SpatialGrid& o) const {
    return x0 == o.x0 && h == o.h && n == o.n;
  }
};

/// Frequency grid s_k = (k - n/2)*ds paired to a spatial grid, ds = 2*pi/(n*h).
/// It stores the spatial grid it was derived from because transform phases
/// depend on x0.
struct FrequencyGrid {
  SpatialGrid space;

  FrequencyGrid() = default;
  explicit FrequencyGrid(const SpatialGrid& g) : space(g) {}

  std::size_t n() const { return space.n; }
  double ds() const { return 2.0 * kPi / (static_cast<double>(space.n) * space.h); }
  double s(std::size_t k) const {
    return (static_cast<double>(k) - static_cast<double>(space.n / 2)) * ds();
  }
  std::size_t zero_index() const { return space.n / 2; }

  bool operator==(const FrequencyGrid& o) const { return space == o.space; }
};

template <class Grid>
struct GridFunction {
  Grid grid;
  CVector values;

  GridFunction() = default;
  GridFunction(const Grid& g, CVector v);
  explicit GridFunction(const Grid& g);

  std::size_t size() const { return values.size(); }
  Complex& operator[](std::size_t i) { return values[i]; }
  const Complex& operator[](std::size_t i) const { return values[i]; }
};

using SpaceFunction = GridFunction<SpatialGrid>;
using FreqFunction = GridFunction<FrequencyGrid>;

/// Throws "unpaired grids" unless the frequency grid is the dual of `space`
/// (same n and h). The spatial origin may differ.
void require_paired(const SpatialGrid& space, const FrequencyGrid& freq);

/// Fhat(s) = \int e^{-isx} f(x) dx by the trapezoid rule, evaluated with one FFT.
FreqFunction fourier_hat(const SpaceFunction& f);
/// (1/2pi) \int e^{isx} r(s) ds on the paired spatial grid.
SpaceFunction fourier_plus(const FreqFunction& r);
SpaceFunction fourier_plus(const FreqFunction& r, const SpatialGrid& target);
/// (1/2pi) \int e^{-isx} r(s) ds.
SpaceFunction fourier_minus(const FreqFunction& r);
SpaceFunction fourier_minus(const FreqFunction& r, const SpatialGrid& target);

struct CauchyOptions {
  // Zero-padding factor in s (power of two). Padding moves the periodic
  // image of the Cauchy kernel away from the band and matters for inputs
  // whose transform decays slowly.
  std::size_t oversample = 1;
  bool warn_on_tail = true;
  // High-order weights at the x = 0 cut (see cauchy_plus); without them the
  // projection is only second-order accurate for smooth inputs.
  bool endpoint_correction = true;
};

/// Projection onto boundary values of functions holomorphic in the upper
/// half plane: keep the part of the (1/2pi) \int e^{isx} f ds transform
/// living on x < 0. The x = 0 bin and the periodic wrap bin carry weight 1/2
/// in both projections and the cut weights satisfy m(x) + m(-x) = 1, so
/// C+ - C- = I on the grid and Re C+ f = f/2 for real f.
FreqFunction cauchy_plus(const FreqFunction& f, const CauchyOptions& opts = {});
FreqFunction cauchy_minus(const FreqFunction& f, const CauchyOptions& opts = {});

struct DecayProfile {
  SpaceFunction eta;    // \int_x^\infty |u|
  SpaceFunction gamma;  // (\int_x^\infty |u|^2)^{1/2}
};

/// Right-to-left trapezoid accumulation on the samples.
DecayProfile decay_profile(const SpaceFunction& u);

/// Largest |f| over the `edge` outermost samples at either end, relative to max|f|.
double edge_ratio(const CVector& f, std::size_t edge);

/// Band-limited (trigonometric) interpolant of the samples, evaluated at x_j + shift.
CVector shift_samples(const SpaceFunction& f, double shift);

// Discrete norms by the trapezoid rule on a decaying function.
double norm_l1(const SpaceFunction& f);
double norm_l2(const SpaceFunction& f);
double norm_x(const SpaceFunction& f);
double sup_norm(const CVector& f);
double sup_diff(const CVector& a, const CVector& b);

}  // namespace miura
