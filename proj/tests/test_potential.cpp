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

#include <cmath>

#include "doctest.h"
#include "miura/potential.hpp"
#include "support.hpp"

using namespace miura;
using miura::test::desk_grid;
using miura::test::throws_kind;

namespace {

SpaceFunction gaussian_test_function(const SpatialGrid& g, double center = 0.0) {
  SpaceFunction phi(g);
  for (std::size_t j = 0; j < g.n; ++j) phi[j] = std::exp(-(g.x(j) - center) * (g.x(j) - center));
  return phi;
}

}  // namespace

TEST_SUITE("potential") {

TEST_CASE("zero potential gives the zero Miura record") {
  auto g = desk_grid(1024);
  auto u = example_potential(ExampleSpec::parse("zero"), g);
  auto q = miura_map(u);
  CHECK(sup_norm(q.derivative_part.values) == 0.0);
  CHECK(sup_norm(q.square_part.values) == 0.0);
  CHECK(q.atoms.empty());
  CHECK(std::abs(miura_pairing(q, gaussian_test_function(g))) == 0.0);
}

TEST_CASE("box: atoms are exact and the derivative part vanishes") {
  auto g = desk_grid(4096);
  auto u = example_potential(ExampleSpec::parse("box:alpha=0.4"), g);
  REQUIRE(u.jumps().size() == 2);
  auto q = miura_map(u);
  REQUIRE(q.atoms.size() == 2);
  CHECK(q.atoms[0].x == -1.0);
  CHECK(q.atoms[0].weight == Complex(0.4));
  CHECK(q.atoms[1].x == 1.0);
  CHECK(q.atoms[1].weight == Complex(-0.4));
  CHECK(sup_norm(q.derivative_part.values) < 1e-14);
  // sum(u) h is the exact integral 2 * alpha.
  double integral = 0;
  for (auto v : u.values()) integral += v.real() * g.h;
  CHECK(integral == doctest::Approx(0.8).epsilon(1e-12));
}

TEST_CASE("Gaussian pairing matches the closed form") {
  auto g = desk_grid(4096);
  auto u = example_potential(ExampleSpec::parse("gaussian:amp=1"), g);
  // -\int u phi' vanishes by parity; \int u^2 phi = sqrt(pi/3).
  Complex p = miura_pairing(miura_map(u), gaussian_test_function(g));
  CHECK(std::abs(p - std::sqrt(kPi / 3)) < 1e-8);
}

TEST_CASE("box pairing equals alpha^2 sqrt(pi) erf(1)") {
  auto g = SpatialGrid::window(-8, 8, 1024);
  auto u = example_potential(ExampleSpec::parse("box:alpha=0.4"), g);
  Complex p = miura_pairing(miura_map(u), gaussian_test_function(g));
  CHECK(std::abs(p - 0.16 * std::sqrt(kPi) * std::erf(1.0)) < 1e-5);
}

TEST_CASE("pairing is independent of the representation") {
  // Same q on two resolutions; the difference shrinks with h.
  auto shifted = [](std::size_t n) {
    auto g = SpatialGrid::window(-8, 8, n);
    auto u = example_potential(ExampleSpec::parse("box:alpha=0.4,a=-0.7,b=1.3"), g);
    return miura_pairing(miura_map(u), gaussian_test_function(g, 0.2));
  };
  const Complex exact = 0.16 * std::sqrt(kPi) / 2 * (std::erf(1.1) - std::erf(-0.9)) +
                        0.4 * (std::exp(-0.81) - std::exp(-1.21));
  for (std::size_t n : {512, 1024, 2048, 4096}) CHECK(std::abs(shifted(n) - exact) < 1e-5);
}

TEST_CASE("pairing is linear in the test function") {
  auto g = desk_grid(1024);
  auto q = miura_map(example_potential(ExampleSpec::parse("sech:amp=0.3,k=1"), g));
  auto p1 = gaussian_test_function(g, 0.5), p2 = gaussian_test_function(g, -1.0);
  SpaceFunction mix(g);
  const Complex a(2.0, -1.0), b(0.5, 3.0);
  for (std::size_t j = 0; j < g.n; ++j) mix[j] = a * p1[j] + b * p2[j];
  Complex lhs = miura_pairing(q, mix);
  Complex rhs = a * miura_pairing(q, p1) + b * miura_pairing(q, p2);
  CHECK(std::abs(lhs - rhs) < 1e-13);
}

TEST_CASE("delta atom pairs to alpha phi(0)") {
  auto g = desk_grid(1024);
  auto q = MiuraPotential::zero(g);
  q.atoms.push_back({0.0, Complex(1.5)});
  CHECK(std::abs(miura_pairing(q, gaussian_test_function(g)) - 1.5) < 1e-14);
  q.atoms.push_back({0.3, Complex(1.0)});
  CHECK(std::abs(miura_pairing(q, gaussian_test_function(g)) - 1.5 - std::exp(-0.09)) < 1e-6);
  q.atoms.push_back({25.0, Complex(1.0)});
  CHECK(throws_kind([&] { miura_pairing(q, gaussian_test_function(g)); }, ErrorKind::Precondition, "atom outside"));
  CHECK(throws_kind([&] { miura_pairing(q, gaussian_test_function(desk_grid(512))); }, ErrorKind::Precondition));
}

TEST_CASE("zero-energy solutions") {
  auto g = desk_grid(4096);
  auto z = zero_energy_solution(example_potential(ExampleSpec::parse("zero"), g));
  CHECK(sup_diff(z.phi.values, CVector(g.n, Complex(1.0))) == 0.0);

  // u = -tanh(x) gives phi = sech(x).
  SpaceFunction t(g);
  for (std::size_t j = 0; j < g.n; ++j) t[j] = -std::tanh(g.x(j));
  auto zs = zero_energy_solution(Potential(t));
  double err = 0;
  for (std::size_t j = 0; j < g.n; ++j) err = std::max(err, std::abs(zs.phi[j] - 1.0 / std::cosh(g.x(j))) * std::cosh(g.x(j)));
  CHECK(err < 1e-4);

  // Box: phi = exp(alpha * clamp(x, -1, 1)), positive and bounded.
  auto zb = zero_energy_solution(example_potential(ExampleSpec::parse("box:alpha=0.4"), g));
  double berr = 0;
  for (std::size_t j = 0; j < g.n; ++j) {
    CHECK(zb.phi[j].real() > 0.0);
    double x = g.x(j);
    if (std::abs(std::abs(x) - 1) > 0.05) berr = std::max(berr, std::abs(zb.phi[j].real() - std::exp(0.4 * std::clamp(x, -1.0, 1.0))));
  }
  CHECK(berr < 1e-4);

  auto complex_u = example_potential(ExampleSpec::parse("sech:amp=0.3,k=1"), g);
  CHECK(throws_kind([&] { zero_energy_solution(complex_u); }, ErrorKind::Precondition, "real-valued"));
}

TEST_CASE("example library values") {
  auto g = SpatialGrid::window(-16, 16, 4096);
  const std::size_t i0 = g.node_index(0.0), i15 = g.node_index(1.5), im05 = g.node_index(-0.5);

  auto gauss = example_potential(ExampleSpec::parse("gaussian:amp=0.5,width=2,center=1"), g);
  CHECK(gauss.real_valued());
  CHECK(gauss.values()[i15].real() == doctest::Approx(0.5 * std::exp(-0.0625)));

  auto sech = example_potential(ExampleSpec::parse("sech:amp=0.3,k=1"), g);
  CHECK_FALSE(sech.real_valued());
  CHECK(std::abs(sech.values()[i15] - 0.3 * std::exp(Complex(0, 1.5)) / std::cosh(1.5)) < 1e-15);

  auto ex1 = example_potential(ExampleSpec::parse("ex1"), g);
  CHECK(ex1.values()[i15].real() == doctest::Approx(std::sin(std::pow(1.5, 4)) / 2.25));
  CHECK(ex1.values()[g.node_index(-1.5)].real() == doctest::Approx(ex1.values()[i15].real()));
  CHECK(std::isfinite(ex1.values()[i0].real()));

  auto ex2 = example_potential(ExampleSpec::parse("ex2:alpha=0.5"), g);
  CHECK(ex2.values()[im05].real() == doctest::Approx(0.5 * std::log(0.5)));
  CHECK(ex2.values()[g.node_index(3.0)].real() == 0.0);
  // The singular cell holds the exact average of alpha log|x| over [-h/2, h/2].
  CHECK(ex2.values()[i0].real() == doctest::Approx(0.5 * (std::log(g.h / 2) - 1)).epsilon(1e-12));

  CHECK(ex2_cutoff(0.5) == 1.0);
  CHECK(ex2_cutoff(1.5) == doctest::Approx(0.5));
  CHECK(ex2_cutoff(-2.5) == 0.0);
  CHECK(example_names().size() == 6);
}

TEST_CASE("example spec parsing and parameter errors") {
  auto spec = ExampleSpec::parse("gaussian:amp=0.25,width=2");
  CHECK(spec.kind == ExampleKind::Gaussian);
  CHECK(spec.get("amp", 0) == 0.25);
  CHECK(ExampleSpec::parse(spec.to_string()).params == spec.params);

  auto g = desk_grid(256);
  CHECK(throws_kind([] { ExampleSpec::parse("lorentz:amp=1"); }, ErrorKind::Usage, "unknown potential family"));
  CHECK(throws_kind([] { ExampleSpec::parse("gaussian:amp"); }, ErrorKind::Usage, "key=value"));
  CHECK(throws_kind([] { ExampleSpec::parse("gaussian:amp=x"); }, ErrorKind::Usage, "non-numeric"));
  CHECK(throws_kind([&] { example_potential(ExampleSpec::parse("gaussian:depth=1"), g); }, ErrorKind::Usage, "unknown parameter"));
  CHECK(throws_kind([&] { example_potential(ExampleSpec::parse("ex1:alpha=1"), g); }, ErrorKind::Usage, "alpha > 1"));
  CHECK(throws_kind([&] { example_potential(ExampleSpec::parse("ex1:alpha=2,beta=2.5"), g); }, ErrorKind::Usage, "beta"));
  CHECK(throws_kind([&] { example_potential(ExampleSpec::parse("box:a=1,b=-1"), g); }, ErrorKind::Usage));
}

TEST_CASE("potential validation and zero padding") {
  auto g = desk_grid(256);
  SpaceFunction f(g);
  f[10] = Complex(0, 1);
  CHECK(throws_kind([&] { Potential(f, true, {}); }, ErrorKind::Precondition, "complex samples"));
  CHECK_FALSE(Potential(f).real_valued());

  auto u = example_potential(ExampleSpec::parse("box:alpha=0.4"), desk_grid(1024));
  auto p = zero_pad(u, 2);
  CHECK(p.grid().n == 2048);
  CHECK(p.grid().h == u.grid().h);
  CHECK(p.grid().x0 == doctest::Approx(-40.0));
  CHECK(p.l1() == doctest::Approx(u.l1()).epsilon(1e-14));
  CHECK(p.values()[p.grid().node_index(0.0)] == u.values()[u.grid().node_index(0.0)]);
  CHECK(p.jumps().size() == 2);
}

}  // TEST_SUITE
