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

#include "miura/potential.hpp"

#include <algorithm>
#include <functional>
#include <cmath>
#include <sstream>

#include "miura/error.hpp"
#include "miura/quadrature.hpp"

namespace miura {

Potential::Potential(SpaceFunction samples, std::vector<Jump> jumps)
    : samples_(std::move(samples)), jumps_(std::move(jumps)) {
  real_valued_ = std::all_of(samples_.values.begin(), samples_.values.end(),
                             [](const Complex& z) { return z.imag() == 0.0; });
  init();
}

Potential::Potential(SpaceFunction samples, bool real_valued, std::vector<Jump> jumps)
    : samples_(std::move(samples)), real_valued_(real_valued), jumps_(std::move(jumps)) {
  if (real_valued_)
    for (const auto& z : samples_.values)
      if (z.imag() != 0.0) fail(ErrorKind::Precondition, "real_valued potential has complex samples");
  init();
}

void Potential::init() {
  l1_ = norm_l1(samples_);
  l2_ = norm_l2(samples_);
  std::sort(jumps_.begin(), jumps_.end(), [](const Jump& a, const Jump& b) { return a.x < b.x; });
}

double Potential::sup() const { return sup_norm(samples_.values); }

MiuraPotential MiuraPotential::zero(const SpatialGrid& g) {
  return MiuraPotential{g, SpaceFunction(g), SpaceFunction(g), {}};
}

namespace {

// Fraction of the cell [x_j - h/2, x_j + h/2] lying right of x.
double right_fraction(const SpatialGrid& g, std::size_t j, double x) {
  return std::clamp((g.x(j) + 0.5 * g.h - x) / g.h, 0.0, 1.0);
}

Complex interpolate_cubic(const SpaceFunction& f, double x) {
  const SpatialGrid& g = f.grid;
  double t = (x - g.x0) / g.h;
  long i0 = static_cast<long>(std::floor(t)) - 1;
  i0 = std::clamp<long>(i0, 0, static_cast<long>(g.n) - 4);
  Complex sum{};
  for (long a = 0; a < 4; ++a) {
    double w = 1.0;
    for (long b = 0; b < 4; ++b)
      if (b != a) w *= (t - static_cast<double>(i0 + b)) / static_cast<double>(a - b);
    sum += w * f.values[static_cast<std::size_t>(i0 + a)];
  }
  return sum;
}

}  // namespace

MiuraPotential miura_map(const Potential& u) {
  const SpatialGrid& g = u.grid();
  MiuraPotential q = MiuraPotential::zero(g);
  q.derivative_part.values = u.values();
  for (std::size_t j = 0; j < g.n; ++j) q.square_part.values[j] = u.values()[j] * u.values()[j];

  for (const Jump& jp : u.jumps()) {
    if (jp.x < g.x0 || jp.x > g.x(g.n - 1)) fail(ErrorKind::Precondition, "declared jump outside the grid");
    const std::size_t c = g.nearest_index(jp.x);
    // Subtract the step J*H(x - x_k), cell-averaged like the samples.
    for (std::size_t j = c; j < g.n; ++j)
      q.derivative_part.values[j] -= jp.w * (j == c ? right_fraction(g, c, jp.x) : 1.0);
    // The jump cell's square is the average of the one-sided squares.
    if (c > 0 && c + 1 < g.n) {
      double fr = right_fraction(g, c, jp.x);
      Complex left = u.values()[c - 1], right = u.values()[c + 1];
      q.square_part.values[c] = (1.0 - fr) * left * left + fr * right * right;
    }
    q.atoms.push_back({jp.x, jp.w});
  }
  return q;
}

Complex miura_pairing(const MiuraPotential& q, const SpaceFunction& phi) {
  if (!(phi.grid == q.grid)) fail(ErrorKind::Precondition, "test function is on a different grid");
  const SpatialGrid& g = q.grid;
  if (edge_ratio(phi.values, 4) > 1e-6) warn("test function does not decay inside the window");
  const std::size_t n = g.n;
  auto at = [&](long j) { return (j < 0 || j >= static_cast<long>(n)) ? Complex{} : phi.values[j]; };
  Complex sum{};
  for (std::size_t j = 0; j < n; ++j) {
    long jj = static_cast<long>(j);
    Complex dphi = (at(jj + 1) - at(jj - 1)) / (2.0 * g.h);
    sum += -q.derivative_part.values[j] * dphi + q.square_part.values[j] * phi.values[j];
  }
  sum *= g.h;
  for (const Atom& a : q.atoms) {
    if (a.x < g.x0 || a.x > g.x(n - 1)) fail(ErrorKind::Precondition, "atom outside the grid");
    sum += a.weight * interpolate_cubic(phi, a.x);
  }
  return sum;
}

ZeroEnergySolution zero_energy_solution(const Potential& u) {
  if (!u.real_valued()) fail(ErrorKind::Precondition, "requires real-valued u");
  const SpatialGrid& g = u.grid();
  const auto& v = u.values();
  const std::size_t n = g.n;
  RVector I(n, 0.0);
  std::size_t j0 = g.nearest_index(0.0);
  for (std::size_t j = j0 + 1; j < n; ++j) I[j] = I[j - 1] + 0.5 * g.h * (v[j - 1].real() + v[j].real());
  for (std::size_t j = j0; j-- > 0;) I[j] = I[j + 1] - 0.5 * g.h * (v[j].real() + v[j + 1].real());
  // Shift so the integral starts at x = 0 when 0 falls between nodes.
  double x0n = g.x(j0);
  double offset = 0.0;
  if (x0n != 0.0) {
    std::size_t other = x0n > 0 ? (j0 > 0 ? j0 - 1 : j0) : std::min(j0 + 1, n - 1);
    double slope = other == j0 ? 0.0 : (v[other].real() - v[j0].real()) / (g.x(other) - x0n);
    double u0 = v[j0].real() + slope * (0.0 - x0n);
    offset = 0.5 * (u0 + v[j0].real()) * (x0n - 0.0);
  }
  ZeroEnergySolution z{SpaceFunction(g)};
  for (std::size_t j = 0; j < n; ++j) z.phi.values[j] = std::exp(I[j] + offset);
  return z;
}

Potential zero_pad(const Potential& u, std::size_t factor) {
  if (factor == 1) return u;
  if (!is_power_of_two(factor)) fail(ErrorKind::Precondition, "padding factor must be a power of two");
  const SpatialGrid& g = u.grid();
  const std::size_t offset = g.n * (factor - 1) / 2;
  SpatialGrid big(g.x0 - static_cast<double>(offset) * g.h, g.h, g.n * factor);
  SpaceFunction f(big);
  std::copy(u.values().begin(), u.values().end(), f.values.begin() + static_cast<long>(offset));
  return Potential(std::move(f), u.real_valued(), u.jumps());
}

// ---------------------------------------------------------------------------
// Example library

namespace {

struct FamilyInfo {
  ExampleKind kind;
  const char* name;
};

constexpr FamilyInfo kFamilies[] = {
    {ExampleKind::Zero, "zero"}, {ExampleKind::Gaussian, "gaussian"}, {ExampleKind::Sech, "sech"},
    {ExampleKind::Box, "box"},   {ExampleKind::Ex1, "ex1"},           {ExampleKind::Ex2, "ex2"},
};

[[noreturn]] void bad_param(const std::string& what) { fail(ErrorKind::Usage, what); }

double cell_average(const std::function<double(double)>& f, double a, double b, double singular) {
  static const GaussRule rule = gauss_legendre(24);
  double s;
  if (singular > a && singular < b)
    s = integrate(f, a, singular, 4, rule) + integrate(f, singular, b, 4, rule);
  else
    s = integrate(f, a, b, 4, rule);
  return s / (b - a);
}

}  // namespace

const char* example_name(ExampleKind kind) {
  for (const auto& f : kFamilies)
    if (f.kind == kind) return f.name;
  return "?";
}

std::vector<std::string> example_names() {
  std::vector<std::string> out;
  for (const auto& f : kFamilies) out.emplace_back(f.name);
  return out;
}

ExampleSpec ExampleSpec::parse(const std::string& text) {
  ExampleSpec spec;
  auto colon = text.find(':');
  std::string name = text.substr(0, colon);
  bool found = false;
  for (const auto& f : kFamilies)
    if (name == f.name) {
      spec.kind = f.kind;
      found = true;
    }
  if (!found) bad_param("unknown potential family '" + name + "'");
  if (colon == std::string::npos) return spec;
  std::stringstream ss(text.substr(colon + 1));
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    auto eq = item.find('=');
    if (eq == std::string::npos) bad_param("potential parameter '" + item + "' is not key=value");
    std::string key = item.substr(0, eq);
    std::string val = item.substr(eq + 1);
    try {
      std::size_t used = 0;
      double v = std::stod(val, &used);
      if (used != val.size()) throw std::invalid_argument(val);
      spec.params[key] = v;
    } catch (const std::exception&) {
      bad_param("potential parameter '" + key + "' has non-numeric value '" + val + "'");
    }
  }
  return spec;
}

std::string ExampleSpec::to_string() const {
  std::ostringstream os;
  os.precision(17);
  os << example_name(kind);
  char sep = ':';
  for (const auto& [k, v] : params) {
    os << sep << k << '=' << v;
    sep = ',';
  }
  return os.str();
}

double ExampleSpec::get(const std::string& key, double fallback) const {
  auto it = params.find(key);
  return it == params.end() ? fallback : it->second;
}

double ex2_cutoff(double x) {
  double t = std::abs(x) - 1.0;
  if (t <= 0.0) return 1.0;
  if (t >= 1.0) return 0.0;
  return 1.0 - t * t * t * (10.0 + t * (-15.0 + 6.0 * t));
}

Potential example_potential(ExampleKind kind, const std::map<std::string, double>& params,
                            const SpatialGrid& grid) {
  ExampleSpec spec{kind, params};
  return example_potential(spec, grid);
}

Potential example_potential(const ExampleSpec& spec, const SpatialGrid& g) {
  static const std::map<ExampleKind, std::vector<std::string>> allowed = {
      {ExampleKind::Zero, {}},
      {ExampleKind::Gaussian, {"amp", "width", "center"}},
      {ExampleKind::Sech, {"amp", "k"}},
      {ExampleKind::Box, {"alpha", "a", "b"}},
      {ExampleKind::Ex1, {"alpha", "beta"}},
      {ExampleKind::Ex2, {"alpha"}},
  };
  const auto& keys = allowed.at(spec.kind);
  for (const auto& [k, v] : spec.params) {
    if (std::find(keys.begin(), keys.end(), k) == keys.end())
      bad_param(std::string("unknown parameter '") + k + "' for family " + example_name(spec.kind));
    if (!std::isfinite(v)) bad_param("parameter '" + k + "' must be finite");
  }

  const std::size_t n = g.n;
  SpaceFunction u(g);
  std::vector<Jump> jumps;
  bool real = true;

  switch (spec.kind) {
    case ExampleKind::Zero:
      break;
    case ExampleKind::Gaussian: {
      double amp = spec.get("amp", 0.5), w = spec.get("width", 1.0), c = spec.get("center", 0.0);
      if (!(w > 0)) bad_param("gaussian requires width > 0");
      for (std::size_t j = 0; j < n; ++j) {
        double t = (g.x(j) - c) / w;
        u[j] = amp * std::exp(-t * t);
      }
      break;
    }
    case ExampleKind::Sech: {
      double amp = spec.get("amp", 0.3), k = spec.get("k", 0.0);
      real = (k == 0.0);
      for (std::size_t j = 0; j < n; ++j) {
        double x = g.x(j);
        Complex carrier = real ? Complex(1.0) : std::polar(1.0, k * x);
        u[j] = amp * carrier / std::cosh(x);
      }
      break;
    }
    case ExampleKind::Box: {
      double alpha = spec.get("alpha", 0.4), a = spec.get("a", -1.0), b = spec.get("b", 1.0);
      if (!(b > a)) bad_param("box requires a < b");
      for (std::size_t j = 0; j < n; ++j) {
        double lo = g.x(j) - 0.5 * g.h, hi = g.x(j) + 0.5 * g.h;
        double overlap = std::max(0.0, std::min(hi, b) - std::max(lo, a));
        u[j] = alpha * overlap / g.h;
      }
      if (alpha != 0.0) {
        jumps.push_back({a, Complex(alpha)});
        jumps.push_back({b, Complex(-alpha)});
      }
      break;
    }
    case ExampleKind::Ex1: {
      double alpha = spec.get("alpha", 2.0), beta = spec.get("beta", 4.0);
      if (!(alpha > 1.0)) bad_param("ex1 requires alpha > 1");
      if (!(beta > alpha + 1.0)) bad_param("ex1 requires beta > alpha + 1");
      auto f = [=](double x) {
        double ax = std::abs(x);
        return ax == 0.0 ? 0.0 : std::pow(ax, -alpha) * std::sin(std::pow(ax, beta));
      };
      for (std::size_t j = 0; j < n; ++j) u[j] = f(g.x(j));
      std::size_t c = g.nearest_index(0.0);
      double lo = g.x(c) - 0.5 * g.h, hi = g.x(c) + 0.5 * g.h;
      if (lo <= 0.0 && hi >= 0.0) u[c] = cell_average(f, lo, hi, 0.0);
      break;
    }
    case ExampleKind::Ex2: {
      double alpha = spec.get("alpha", 0.5);
      if (!(alpha > 0.0)) bad_param("ex2 requires alpha > 0");
      for (std::size_t j = 0; j < n; ++j) {
        double x = g.x(j);
        u[j] = x == 0.0 ? 0.0 : alpha * ex2_cutoff(x) * std::log(std::abs(x));
      }
      std::size_t c = g.nearest_index(0.0);
      double lo = g.x(c) - 0.5 * g.h, hi = g.x(c) + 0.5 * g.h;
      if (lo <= 0.0 && hi >= 0.0 && hi - lo <= 1.0) {
        // Antiderivative of log|x| is x log|x| - x; the cutoff is 1 on this cell.
        auto F = [](double x) { return x == 0.0 ? 0.0 : x * std::log(std::abs(x)) - x; };
        u[c] = alpha * (F(hi) - F(lo)) / g.h;
      }
      break;
    }
  }
  if (real)
    for (auto& z : u.values) z = Complex(z.real(), 0.0);
  return Potential(std::move(u), real, std::move(jumps));
}

}  // namespace miura
