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

#include "miura/direct.hpp"

#include <algorithm>
#include <cmath>

#include "miura/error.hpp"
#include "miura/parallel.hpp"

namespace miura {

const char* side_name(Side s) { return s == Side::Left ? "left" : "right"; }

Side parse_side(const std::string& text) {
  if (text == "left") return Side::Left;
  if (text == "right") return Side::Right;
  fail(ErrorKind::Usage, "side must be 'left' or 'right', got '" + text + "'");
}

namespace {

// Values of the interpolated potential at the two Gauss points of every
// substep, laid out as [cell][substep][gauss point].
struct MagnusCoefficients {
  std::size_t n = 0;
  std::size_t substeps = 1;
  double H = 0.0;
  std::vector<Complex> u;

  Complex at(std::size_t cell, std::size_t m, std::size_t g) const {
    return u[(cell * substeps + m) * 2 + g];
  }
};

MagnusCoefficients build_coefficients(const Potential& pot, std::size_t substeps) {
  if (substeps == 0) fail(ErrorKind::Precondition, "substeps must be positive");
  const SpatialGrid& g = pot.grid();
  MagnusCoefficients c;
  c.n = g.n;
  c.substeps = substeps;
  c.H = g.h / static_cast<double>(substeps);
  c.u.resize(g.n * substeps * 2);
  const double gauss[2] = {0.5 - std::sqrt(3.0) / 6.0, 0.5 + std::sqrt(3.0) / 6.0};
  const bool zero = pot.sup() == 0.0;
  for (std::size_t m = 0; m < substeps; ++m)
    for (std::size_t q = 0; q < 2; ++q) {
      if (zero) continue;
      CVector shifted = shift_samples(pot.samples(), (static_cast<double>(m) + gauss[q]) * c.H);
      if (pot.real_valued())
        for (auto& z : shifted) z = Complex(z.real(), 0.0);
      for (std::size_t j = 0; j < g.n; ++j) c.u[(j * substeps + m) * 2 + q] = shifted[j];
    }
  return c;
}

struct Mat2 {
  Complex m11, m12, m21, m22;
};

// exp(sign * Omega) for the two-point Gauss Magnus generator of
// A(x) = i s sigma + Q(x) over a substep of length H. Omega is traceless
// with Omega11 = i*p purely imaginary and Omega21 = conj(Omega12), so the
// exponential is exact in closed form.
inline Mat2 magnus_step(double s, double H, Complex u1, Complex u2, double sign) {
  constexpr double kc = 0.14433756729740644;  // sqrt(3)/12
  const double p = 0.5 * H * s - 2.0 * kc * H * H * std::imag(u1 * std::conj(u2));
  const Complex q = 0.5 * H * (u1 + u2) - kc * H * H * Complex(0.0, s) * (u2 - u1);
  const double lam2 = std::norm(q) - p * p;
  double c, sl;
  if (std::abs(lam2) < 1e-6) {
    c = 1.0 + lam2 * (0.5 + lam2 / 24.0);
    sl = 1.0 + lam2 * (1.0 / 6.0 + lam2 / 120.0);
  } else if (lam2 > 0) {
    double l = std::sqrt(lam2);
    c = std::cosh(l);
    sl = std::sinh(l) / l;
  } else {
    double l = std::sqrt(-lam2);
    c = std::cos(l);
    sl = std::sin(l) / l;
  }
  const double f = sign * sl;
  return {Complex(c, f * p), f * q, f * std::conj(q), Complex(c, -f * p)};
}

inline void apply(const Mat2& e, Complex& x1, Complex& x2) {
  Complex y1 = e.m11 * x1 + e.m12 * x2;
  Complex y2 = e.m21 * x1 + e.m22 * x2;
  x1 = y1;
  x2 = y2;
}

// Propagates columns of Psi from the right end x_n down to x_0. The
// callback sees the state after arriving at each node x_j.
template <class Visit>
void sweep_left(const MagnusCoefficients& c, double s, Complex* col, std::size_t ncols, Visit&& visit) {
  for (std::size_t j = c.n; j-- > 0;) {
    for (std::size_t m = c.substeps; m-- > 0;) {
      Mat2 e = magnus_step(s, c.H, c.at(j, m, 0), c.at(j, m, 1), -1.0);
      for (std::size_t k = 0; k < ncols; ++k) apply(e, col[2 * k], col[2 * k + 1]);
    }
    visit(j);
  }
}

template <class Visit>
void sweep_right(const MagnusCoefficients& c, double s, Complex* col, std::size_t ncols, Visit&& visit) {
  visit(std::size_t{0});
  for (std::size_t j = 0; j < c.n; ++j) {
    for (std::size_t m = 0; m < c.substeps; ++m) {
      Mat2 e = magnus_step(s, c.H, c.at(j, m, 0), c.at(j, m, 1), +1.0);
      for (std::size_t k = 0; k < ncols; ++k) apply(e, col[2 * k], col[2 * k + 1]);
    }
    if (j + 1 < c.n) visit(j + 1);
  }
}

void check_decay(const Potential& u) {
  double r = edge_ratio(u.values(), std::max<std::size_t>(1, u.grid().n / 32));
  if (r >= 0.1) fail(ErrorKind::Precondition, "potential does not decay inside the window");
  if (r > 1e-6) warn("potential is not negligible at the window edges (edge/peak ratio " + std::to_string(r) + ")");
}

}  // namespace

ScatteringData solve_scattering(const Potential& u, const ForwardOptions& opts) {
  check_decay(u);
  const SpatialGrid& g = u.grid();
  const MagnusCoefficients coeffs = build_coefficients(u, opts.substeps);
  ScatteringData sd;
  sd.freq = FrequencyGrid(g);
  sd.a.assign(g.n, Complex(1.0));
  sd.b.assign(g.n, Complex(0.0));
  const double xR = g.x0 + g.length();
  const double xL = g.x0;
  // det N is tracked on a subset of frequencies; the exponentials are
  // unimodular, so the drift only measures rounding.
  const std::size_t det_stride = std::max<std::size_t>(1, g.n / 64);
  std::vector<double> det_err(g.n, 0.0);

  parallel_for(g.n, [&](std::size_t k) {
    const double s = sd.freq.s(k);
    const bool full = (k % det_stride) == 0;
    Complex psi[4] = {std::polar(1.0, 0.5 * s * xR), 0.0, 0.0, std::polar(1.0, -0.5 * s * xR)};
    sweep_left(coeffs, s, psi, full ? 2 : 1, [](std::size_t) {});
    // N(x_L) = exp(-i s x_L sigma) Psi(x_L)
    const Complex el = std::polar(1.0, -0.5 * s * xL), er = std::conj(el);
    sd.a[k] = el * psi[0];
    sd.b[k] = er * psi[1];
    if (full) {
      Complex n12 = el * psi[2], n22 = er * psi[3];
      det_err[k] = std::abs(sd.a[k] * n22 - n12 * sd.b[k] - 1.0);
    }
  });

  for (std::size_t k = 0; k < g.n; ++k) {
    sd.unitarity_defect =
        std::max(sd.unitarity_defect, std::abs(std::norm(sd.a[k]) - std::norm(sd.b[k]) - 1.0));
    sd.det_drift = std::max(sd.det_drift, det_err[k]);
    if (std::abs(sd.a[k]) == 0.0) fail(ErrorKind::Invariant, "a(s) vanishes on the grid");
  }
  for (std::size_t i = 0; i < std::min<std::size_t>(10, g.n / 2); ++i)
    sd.edge_a_deviation = std::max({sd.edge_a_deviation, std::abs(sd.a[i] - 1.0), std::abs(sd.a[g.n - 1 - i] - 1.0)});
  if (sd.unitarity_defect > opts.unitarity_error)
    fail(ErrorKind::Invariant, "unitarity drift " + std::to_string(sd.unitarity_defect) + ": step size too coarse");
  return sd;
}

FreqFunction born_approximation(const Potential& u) {
  FreqFunction uh = fourier_hat(u.samples());
  for (auto& z : uh.values) z = -std::conj(z);
  return uh;
}

ReflectionCoefficient make_reflection(const FreqFunction& r, Side side) {
  ReflectionCoefficient rc{r.grid, r.values, side, sup_norm(r.values)};
  if (!(rc.rho < 1.0))
    fail(ErrorKind::Invariant, "max|r| = " + std::to_string(rc.rho) +
                                   " is outside X1 (generic/bound-state case not supported)");
  return rc;
}

ReflectionCoefficient reflection(const ScatteringData& sd, Side side) {
  FreqFunction r(sd.freq);
  for (std::size_t k = 0; k < sd.a.size(); ++k) {
    if (std::abs(sd.a[k]) == 0.0) fail(ErrorKind::Precondition, "a(s) vanishes");
    r.values[k] = side == Side::Left ? sd.b[k] / sd.a[k] : -std::conj(sd.b[k]) / sd.a[k];
  }
  return make_reflection(r, side);
}

MarchenkoKernel marchenko_kernel(const ReflectionCoefficient& r) {
  FreqFunction f = r.function();
  SpaceFunction F = r.side == Side::Right ? fourier_plus(f) : fourier_minus(f);
  return MarchenkoKernel{F.grid, std::move(F.values), r.side};
}

JostSolutions jost_row_solutions(const Potential& u, double s, const ForwardOptions& opts) {
  check_decay(u);
  const SpatialGrid& g = u.grid();
  const MagnusCoefficients coeffs = build_coefficients(u, opts.substeps);
  JostSolutions out{SpaceFunction(g), SpaceFunction(g), 0.0};

  // Psi+ ~ exp(i s x sigma) at the right end; both columns for the determinant.
  const double xR = g.x0 + g.length();
  Complex p[4] = {std::polar(1.0, 0.5 * s * xR), 0.0, 0.0, std::polar(1.0, -0.5 * s * xR)};
  sweep_left(coeffs, s, p, 2, [&](std::size_t j) {
    out.chi_plus.values[j] = p[0] + p[1];
    out.det_drift = std::max(out.det_drift, std::abs(p[0] * p[3] - p[2] * p[1] - 1.0));
  });

  // Psi- ~ exp(i s x sigma) at the left end.
  const double xL = g.x0;
  Complex m[4] = {std::polar(1.0, 0.5 * s * xL), 0.0, 0.0, std::polar(1.0, -0.5 * s * xL)};
  sweep_right(coeffs, s, m, 2, [&](std::size_t j) {
    out.chi_minus.values[j] = m[2] + m[3];
    out.det_drift = std::max(out.det_drift, std::abs(m[0] * m[3] - m[2] * m[1] - 1.0));
  });
  return out;
}

}  // namespace miura
