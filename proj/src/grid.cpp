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

#include "miura/grid.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "miura/error.hpp"
#include "miura/fft.hpp"

namespace miura {

bool is_power_of_two(std::size_t n) { return n >= 2 && (n & (n - 1)) == 0; }

SpatialGrid::SpatialGrid(double x0_, double h_, std::size_t n_) : x0(x0_), h(h_), n(n_) {
  if (!(h > 0.0) || !std::isfinite(h) || !std::isfinite(x0))
    fail(ErrorKind::Precondition, "grid spacing must be positive and finite");
  if (!is_power_of_two(n))
    fail(ErrorKind::Precondition, "grid size must be a power of two >= 2");
}

SpatialGrid SpatialGrid::window(double a, double b, std::size_t n) {
  if (!(b > a)) fail(ErrorKind::Precondition, "window must satisfy x0 < x1");
  return SpatialGrid(a, (b - a) / static_cast<double>(n), n);
}

std::size_t SpatialGrid::nearest_index(double x) const {
  double t = std::round((x - x0) / h);
  if (t < 0) return 0;
  if (t > static_cast<double>(n - 1)) return n - 1;
  return static_cast<std::size_t>(t);
}

std::size_t SpatialGrid::node_index(double x) const {
  double t = (x - x0) / h;
  double r = std::round(t);
  if (std::abs(t - r) > 1e-6 || r < 0 || r > static_cast<double>(n - 1)) {
    std::ostringstream os;
    os << "x = " << x << " is not a grid node";
    fail(ErrorKind::Precondition, os.str());
  }
  return static_cast<std::size_t>(r);
}

template <class Grid>
static std::size_t grid_size(const Grid& g) {
  if constexpr (std::is_same_v<Grid, SpatialGrid>) return g.n;
  else return g.n();
}

template <class Grid>
GridFunction<Grid>::GridFunction(const Grid& g, CVector v) : grid(g), values(std::move(v)) {
  if (values.size() != grid_size(grid))
    fail(ErrorKind::Precondition, "grid function length does not match its grid");
  for (const auto& z : values)
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag()))
      fail(ErrorKind::Precondition, "grid function has non-finite values");
}

template <class Grid>
GridFunction<Grid>::GridFunction(const Grid& g) : grid(g), values(grid_size(g)) {}

template struct GridFunction<SpatialGrid>;
template struct GridFunction<FrequencyGrid>;

void require_paired(const SpatialGrid& space, const FrequencyGrid& freq) {
  if (space.n != freq.space.n || std::abs(space.h - freq.space.h) > 1e-14 * space.h)
    fail(ErrorKind::Precondition, "unpaired grids");
}

namespace {

// (-1)^j as a double.
inline double alt(std::size_t j) { return (j & 1) ? -1.0 : 1.0; }

SpaceFunction inverse_transform(const FreqFunction& r, const SpatialGrid& target, double sign) {
  require_paired(target, r.grid);
  const std::size_t n = target.n;
  CVector tmp(n);
  for (std::size_t k = 0; k < n; ++k)
    tmp[k] = r.values[k] * std::polar(1.0, sign * r.grid.s(k) * target.x0);
  if (sign > 0) fft::backward(tmp.data(), n);
  else fft::forward(tmp.data(), n);
  const double scale = r.grid.ds() / (2.0 * kPi);
  for (std::size_t j = 0; j < n; ++j) tmp[j] *= scale * alt(j);
  SpaceFunction out(target);
  out.values = std::move(tmp);
  return out;
}

}  // namespace

FreqFunction fourier_hat(const SpaceFunction& f) {
  const SpatialGrid& g = f.grid;
  const std::size_t n = g.n;
  CVector tmp(n);
  for (std::size_t j = 0; j < n; ++j) tmp[j] = f.values[j] * alt(j);
  fft::forward(tmp.data(), n);
  FrequencyGrid fg(g);
  for (std::size_t k = 0; k < n; ++k) tmp[k] *= g.h * std::polar(1.0, -fg.s(k) * g.x0);
  FreqFunction out(fg);
  out.values = std::move(tmp);
  return out;
}

SpaceFunction fourier_plus(const FreqFunction& r) { return inverse_transform(r, r.grid.space, +1.0); }
SpaceFunction fourier_plus(const FreqFunction& r, const SpatialGrid& target) {
  return inverse_transform(r, target, +1.0);
}
SpaceFunction fourier_minus(const FreqFunction& r) { return inverse_transform(r, r.grid.space, -1.0); }
SpaceFunction fourier_minus(const FreqFunction& r, const SpatialGrid& target) {
  return inverse_transform(r, target, -1.0);
}

double edge_ratio(const CVector& f, std::size_t edge) {
  double peak = sup_norm(f);
  if (peak == 0.0) return 0.0;
  edge = std::min(edge, f.size() / 2);
  double tail = 0.0;
  for (std::size_t i = 0; i < edge; ++i)
    tail = std::max({tail, std::abs(f[i]), std::abs(f[f.size() - 1 - i])});
  return tail / peak;
}

namespace {

FreqFunction project(const FreqFunction& f, const CauchyOptions& opts, bool plus) {
  const std::size_t n = f.grid.n();
  const std::size_t P = std::max<std::size_t>(1, opts.oversample);
  if (!is_power_of_two(P) && P != 1)
    fail(ErrorKind::Precondition, "oversample factor must be a power of two");
  if (opts.warn_on_tail && edge_ratio(f.values, 8) > 1e-6)
    warn("cauchy projection input does not decay at the frequency-grid ends");

  // Padded frequency grid with the same ds, dual to a centred spatial grid.
  const std::size_t N = n * P;
  const double L = f.grid.space.length();
  SpatialGrid centred(-0.5 * L, f.grid.space.h / static_cast<double>(P), N);
  FreqFunction padded(FrequencyGrid{centred});
  const std::size_t offset = (N - n) / 2;
  for (std::size_t k = 0; k < n; ++k) padded.values[k + offset] = f.values[k];

  SpaceFunction big = fourier_plus(padded);
  // Holomorphic in the upper half plane <=> transform supported on x < 0.
  // The cut at x = 0 is a quadrature endpoint; the antisymmetric corrections
  // at +-h, +-2h remove its O(h^2) and O(h^4) Euler-Maclaurin terms while
  // keeping m(x) + m(-x) = 1.
  constexpr double d1 = 41.0 / 720.0, d2 = -11.0 / 1440.0;
  for (std::size_t j = 0; j < N; ++j) {
    double m;
    if (j == 0 || j == N / 2) m = 0.5;
    else m = (j < N / 2) ? 1.0 : 0.0;
    if (opts.endpoint_correction && N >= 8) {
      if (j == N / 2 - 1) m += d1;
      else if (j == N / 2 + 1) m -= d1;
      else if (j == N / 2 - 2) m += d2;
      else if (j == N / 2 + 2) m -= d2;
    }
    big.values[j] *= plus ? m : -(1.0 - m);
  }
  FreqFunction back = fourier_hat(big);
  FreqFunction out(f.grid);
  for (std::size_t k = 0; k < n; ++k) out.values[k] = back.values[k + offset];
  return out;
}

}  // namespace

FreqFunction cauchy_plus(const FreqFunction& f, const CauchyOptions& opts) { return project(f, opts, true); }
FreqFunction cauchy_minus(const FreqFunction& f, const CauchyOptions& opts) { return project(f, opts, false); }

DecayProfile decay_profile(const SpaceFunction& u) {
  const std::size_t n = u.grid.n;
  const double h = u.grid.h;
  DecayProfile d{SpaceFunction(u.grid), SpaceFunction(u.grid)};
  double e1 = 0.0, e2 = 0.0;
  for (std::size_t j = n - 1; j-- > 0;) {
    double a0 = std::abs(u.values[j]), a1 = std::abs(u.values[j + 1]);
    e1 += 0.5 * h * (a0 + a1);
    e2 += 0.5 * h * (a0 * a0 + a1 * a1);
    d.eta.values[j] = e1;
    d.gamma.values[j] = std::sqrt(e2);
  }
  return d;
}

CVector shift_samples(const SpaceFunction& f, double shift) {
  const std::size_t n = f.grid.n;
  CVector c = f.values;
  fft::forward(c.data(), n);
  const double w = 2.0 * kPi / (static_cast<double>(n) * f.grid.h);
  for (std::size_t m = 0; m < n; ++m) {
    if (m == n / 2) {
      // Nyquist: split evenly between +-pi/h so real data stays real.
      c[m] *= std::cos(kPi * shift / f.grid.h);
      continue;
    }
    double freq = (m < n / 2) ? static_cast<double>(m) : static_cast<double>(m) - static_cast<double>(n);
    c[m] *= std::polar(1.0, freq * w * shift);
  }
  fft::backward(c.data(), n);
  for (auto& z : c) z /= static_cast<double>(n);
  return c;
}

double norm_l1(const SpaceFunction& f) {
  double s = 0.0;
  for (const auto& z : f.values) s += std::abs(z);
  return s * f.grid.h;
}

double norm_l2(const SpaceFunction& f) {
  double s = 0.0;
  for (const auto& z : f.values) s += std::norm(z);
  return std::sqrt(s * f.grid.h);
}

double norm_x(const SpaceFunction& f) { return norm_l1(f) + norm_l2(f); }

double sup_norm(const CVector& f) {
  double m = 0.0;
  for (const auto& z : f) m = std::max(m, std::abs(z));
  return m;
}

double sup_diff(const CVector& a, const CVector& b) {
  if (a.size() != b.size()) fail(ErrorKind::Precondition, "length mismatch");
  double m = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a[i] - b[i]));
  return m;
}

}  // namespace miura
