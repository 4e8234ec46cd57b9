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

#include "miura/schrodinger.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <map>

#include "miura/error.hpp"
#include "miura/parallel.hpp"
#include "miura/quadrature.hpp"

namespace miura {

RVector linear_k_grid(double kmin, double kmax, std::size_t count) {
  if (!(kmin > 0.0) || !(kmax >= kmin) || count == 0)
    fail(ErrorKind::Usage, "k grid requires 0 < kmin <= kmax and count >= 1");
  RVector k(count);
  for (std::size_t i = 0; i < count; ++i)
    k[i] = count == 1 ? kmin : kmin + (kmax - kmin) * static_cast<double>(i) / static_cast<double>(count - 1);
  return k;
}

namespace {

struct Coeff {
  Complex d, sq;
};

// An atom strictly inside a cell, at fraction tau of the cell.
struct Split {
  double tau;
  Complex weight;
};

// Coefficients at the two Gauss points of every cell, by local cubic
// interpolation. Atoms on nodes are keyed by node; atoms inside a cell split
// that cell into two Magnus steps.
struct Profile {
  std::vector<Coeff> g1, g2;
  std::map<std::size_t, Complex> atoms;
  std::map<std::size_t, std::vector<Split>> splits;
};

Complex cubic_at(const CVector& v, std::size_t j, double t) {
  // Value at x_j + t*h, t in [0, 1], from nodes j-1..j+2 (clamped at the ends).
  const long n = static_cast<long>(v.size());
  long i0 = std::clamp<long>(static_cast<long>(j) - 1, 0, n - 4);
  const double tt = t + static_cast<double>(static_cast<long>(j) - i0);
  Complex sum{};
  for (long a = 0; a < 4; ++a) {
    double w = 1.0;
    for (long b = 0; b < 4; ++b)
      if (b != a) w *= (tt - static_cast<double>(b)) / static_cast<double>(a - b);
    sum += w * v[static_cast<std::size_t>(i0 + a)];
  }
  return sum;
}

Profile build_profile(const MiuraPotential& q) {
  const SpatialGrid& g = q.grid;
  const double t1 = 0.5 - std::sqrt(3.0) / 6.0, t2 = 0.5 + std::sqrt(3.0) / 6.0;
  Profile p;
  p.g1.resize(g.n);
  p.g2.resize(g.n);
  const auto& d = q.derivative_part.values;
  const auto& sq = q.square_part.values;
  for (std::size_t j = 0; j + 1 < g.n; ++j) {
    p.g1[j] = {cubic_at(d, j, t1), cubic_at(sq, j, t1)};
    p.g2[j] = {cubic_at(d, j, t2), cubic_at(sq, j, t2)};
  }
  for (const Atom& a : q.atoms) {
    if (!(a.x >= g.x(0) && a.x <= g.x(g.n - 1))) fail(ErrorKind::Precondition, "atom outside the window");
    const double pos = (a.x - g.x0) / g.h;
    const double node = std::round(pos);
    if (std::abs(pos - node) <= 1e-9) {
      p.atoms[static_cast<std::size_t>(node)] += a.weight;
      continue;
    }
    const auto j = static_cast<std::size_t>(std::floor(pos));
    p.splits[j].push_back({pos - static_cast<double>(j), a.weight});
  }
  for (auto& [j, v] : p.splits) std::sort(v.begin(), v.end(), [](const Split& a, const Split& b) { return a.tau < b.tau; });
  return p;
}

using State = std::array<Complex, 2>;

struct Mat2 {
  Complex m11, m12, m21, m22;
};

// Generator of z' = A z, z = (chi, chi' - d chi): A = [[d, 1], [sq - d^2 - k^2, -d]].
inline Mat2 generator(const Coeff& c, double k2) { return {c.d, 1.0, c.sq - c.d * c.d - k2, -c.d}; }

// exp(sign * Omega) with Omega the fourth-order Magnus generator over one
// cell. Omega is traceless, so the exponential is exact in closed form and
// has determinant one; the Wronskian (hence unitarity for real q) is kept.
Mat2 magnus_step(const Coeff& c1, const Coeff& c2, double k2, double h, double sign) {
  const Mat2 a = generator(c1, k2), b = generator(c2, k2);
  constexpr double kc = 0.14433756729740644;  // sqrt(3)/12
  // [b, a] = b a - a b
  const Complex c11 = b.m12 * a.m21 - a.m12 * b.m21;
  const Complex c12 = b.m11 * a.m12 + b.m12 * a.m22 - a.m11 * b.m12 - a.m12 * b.m22;
  const Complex c21 = b.m21 * a.m11 + b.m22 * a.m21 - a.m21 * b.m11 - a.m22 * b.m21;
  const Complex o11 = sign * (0.5 * h * (a.m11 + b.m11) + kc * h * h * c11);
  const Complex o12 = sign * (0.5 * h * (a.m12 + b.m12) + kc * h * h * c12);
  const Complex o21 = sign * (0.5 * h * (a.m21 + b.m21) + kc * h * h * c21);
  const Complex lam2 = o11 * o11 + o12 * o21;
  Complex ch, sh;
  if (std::abs(lam2) < 1e-6) {
    ch = 1.0 + lam2 * (0.5 + lam2 / 24.0);
    sh = 1.0 + lam2 * (1.0 / 6.0 + lam2 / 120.0);
  } else {
    const Complex lam = std::sqrt(lam2);
    ch = std::cosh(lam);
    sh = std::sinh(lam) / lam;
  }
  return {ch + sh * o11, sh * o12, sh * o21, ch - sh * o11};
}

inline State transfer(const Mat2& m, const State& z) {
  return {m.m11 * z[0] + m.m12 * z[1], m.m21 * z[0] + m.m22 * z[1]};
}

// Magnus step over the part [t0, t1] of cell j.
Mat2 partial_step(const MiuraPotential& q, std::size_t j, double t0, double t1, double k2, double sign) {
  const double c = std::sqrt(3.0) / 6.0, m = 0.5 * (t0 + t1), len = t1 - t0;
  const auto& d = q.derivative_part.values;
  const auto& sq = q.square_part.values;
  const double a = m - c * len, b = m + c * len;
  return magnus_step({cubic_at(d, j, a), cubic_at(sq, j, a)}, {cubic_at(d, j, b), cubic_at(sq, j, b)}, k2, len * q.grid.h,
                     sign);
}

// Propagate z across cell j, forward (sign = +1) or backward (sign = -1),
// applying interior atoms.
State cross_cell(const MiuraPotential& q, const Profile& p, std::size_t j, double k2, double sign, State z) {
  auto it = p.splits.find(j);
  if (it == p.splits.end()) return transfer(magnus_step(p.g1[j], p.g2[j], k2, q.grid.h, sign), z);
  std::vector<double> cuts{0.0};
  for (const Split& s : it->second) cuts.push_back(s.tau);
  cuts.push_back(1.0);
  const std::size_t m = it->second.size();
  if (sign > 0) {
    for (std::size_t i = 0; i <= m; ++i) {
      z = transfer(partial_step(q, j, cuts[i], cuts[i + 1], k2, sign), z);
      if (i < m) z[1] += it->second[i].weight * z[0];
    }
  } else {
    for (std::size_t i = m + 1; i-- > 0;) {
      z = transfer(partial_step(q, j, cuts[i], cuts[i + 1], k2, sign), z);
      if (i > 0) z[1] -= it->second[i - 1].weight * z[0];
    }
  }
  return z;
}

}  // namespace

SchrodingerScattering schrodinger_reflection(const MiuraPotential& q, const RVector& k_grid) {
  const SpatialGrid& g = q.grid;
  const std::size_t n = g.n;
  const std::size_t edge = std::max<std::size_t>(1, n / 32);
  if (edge_ratio(q.derivative_part.values, edge) >= 0.1 || edge_ratio(q.square_part.values, edge) >= 0.1)
    fail(ErrorKind::Precondition, "smooth part of q does not decay inside the window");
  for (double k : k_grid)
    if (!(k > 0.0)) fail(ErrorKind::Precondition, "wavenumbers must be positive");

  const Profile p = build_profile(q);
  const double xL = g.x(0), xR = g.x(n - 1);
  SchrodingerScattering out;
  out.k = k_grid;
  out.R_left.resize(k_grid.size());
  out.R_right.resize(k_grid.size());
  out.T.resize(k_grid.size());
  const Complex I(0.0, 1.0);

  parallel_for(k_grid.size(), [&](std::size_t i) {
    const double k = k_grid[i], k2 = k * k;
    auto jump = [&](std::size_t j, State& z, double sign) {
      auto it = p.atoms.find(j);
      if (it != p.atoms.end()) z[1] += sign * it->second * z[0];
    };
    // Incidence from the left: transmitted e^{ikx} at the right edge.
    State z{std::exp(I * k * xR), I * k * std::exp(I * k * xR)};
    z[1] -= q.derivative_part.values[n - 1] * z[0];
    jump(n - 1, z, -1.0);
    for (std::size_t j = n - 1; j-- > 0;) {
      z = cross_cell(q, p, j, k2, -1.0, z);
      jump(j, z, -1.0);
    }
    Complex dchi = z[1] + q.derivative_part.values[0] * z[0];
    Complex A = 0.5 * (z[0] + dchi / (I * k)) * std::exp(-I * k * xL);
    Complex B = 0.5 * (z[0] - dchi / (I * k)) * std::exp(I * k * xL);
    out.R_left[i] = B / A;
    out.T[i] = 1.0 / A;

    // Incidence from the right: transmitted e^{-ikx} at the left edge.
    State w{std::exp(-I * k * xL), -I * k * std::exp(-I * k * xL)};
    w[1] -= q.derivative_part.values[0] * w[0];
    jump(0, w, +1.0);
    for (std::size_t j = 0; j + 1 < n; ++j) {
      w = cross_cell(q, p, j, k2, 1.0, w);
      jump(j + 1, w, +1.0);
    }
    Complex dw = w[1] + q.derivative_part.values[n - 1] * w[0];
    Complex A2 = 0.5 * (w[0] - dw / (I * k)) * std::exp(I * k * xR);
    Complex B2 = 0.5 * (w[0] + dw / (I * k)) * std::exp(-I * k * xR);
    out.R_right[i] = B2 / A2;
  });
  for (std::size_t i = 0; i < k_grid.size(); ++i)
    out.unitarity_defect =
        std::max(out.unitarity_defect, std::abs(std::norm(out.R_left[i]) + std::norm(out.T[i]) - 1.0));
  return out;
}

ExtremalReport check_extremal_solutions(const MiuraPotential& q) {
  if (q.atoms.size() != 1 || sup_norm(q.derivative_part.values) != 0.0 || sup_norm(q.square_part.values) != 0.0)
    fail(ErrorKind::Precondition, "check_extremal_solutions expects q = alpha*delta (a single atom, no smooth part)");
  const Atom atom = q.atoms.front();
  if (atom.weight.imag() != 0.0 || !(atom.weight.real() > 0.0))
    fail(ErrorKind::Precondition, "the atom weight must be real and positive");
  const double a = atom.weight.real(), x0 = atom.x;

  ExtremalReport rep;
  rep.alpha = a;
  auto phi_plus = [&](double x) { return x > x0 ? 1.0 : 1.0 - a * (x - x0); };
  auto phi_minus = [&](double x) { return x < x0 ? 1.0 : 1.0 + a * (x - x0); };
  auto dphi_plus = [&](double x) { return x > x0 ? 0.0 : -a; };
  auto dphi_minus = [&](double x) { return x < x0 ? 0.0 : a; };
  rep.phi_plus_at_minus2 = phi_plus(x0 - 2.0);
  rep.phi_minus_at_2 = phi_minus(x0 + 2.0);

  // Weak form: \int phi' psi' + alpha phi(x0) psi(x0) = 0 for every test psi.
  const GaussRule rule = gauss_legendre(20);
  for (double c : {-1.5, -0.5, 0.0, 0.3, 1.2})
    for (double s : {0.5, 1.0, 2.0}) {
      auto psi = [&](double x) { double t = (x - x0 - c) / s; return std::exp(-t * t); };
      auto dpsi = [&](double x) { double t = (x - x0 - c) / s; return -2.0 * t / s * std::exp(-t * t); };
      const double L = std::abs(c) + 12.0 * s;
      auto res = [&](auto&& phi, auto&& dphi) {
        double left = integrate([&](double x) { return dphi(x) * dpsi(x); }, x0 - L, x0, 64, rule);
        double right = integrate([&](double x) { return dphi(x) * dpsi(x); }, x0, x0 + L, 64, rule);
        return std::abs(left + right + a * phi(x0) * psi(x0));
      };
      rep.residual_plus = std::max(rep.residual_plus, res(phi_plus, dphi_plus));
      rep.residual_minus = std::max(rep.residual_minus, res(phi_minus, dphi_minus));
    }

  // L1 norm of phi+'/phi+ over [-W, 0]; the closed form is log(1 + alpha W).
  bool ok = true;
  double prev = 0.0;
  for (double W = 2.0; W <= 4096.0; W *= 2.0) {
    double l1 = integrate([&](double x) { return std::abs(dphi_plus(x) / phi_plus(x)); }, x0 - W, x0,
                          static_cast<std::size_t>(W) * 4, rule);
    double pred = std::log1p(a * W);
    rep.windows.push_back({W, l1, pred});
    ok = ok && std::abs(l1 - pred) <= 1e-10 * (1.0 + pred) && l1 > prev;
    prev = l1;
  }
  // Doubling the window adds log 2 asymptotically: unbounded growth.
  const auto& last = rep.windows.back();
  const auto& before = rep.windows[rep.windows.size() - 2];
  ok = ok && std::abs((last.l1 - before.l1) - std::log(2.0)) < 1e-2;
  rep.log_growth = ok;
  rep.certified = ok && rep.residual_plus <= 1e-8 && rep.residual_minus <= 1e-8;
  return rep;
}

}  // namespace miura
