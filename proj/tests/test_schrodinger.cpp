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
#include "miura/direct.hpp"
#include "miura/schrodinger.hpp"
#include "support.hpp"

using namespace miura;
using miura::test::throws_kind;

namespace {

MiuraPotential delta(double alpha, const SpatialGrid& g) {
  auto q = MiuraPotential::zero(g);
  q.atoms.push_back({0.0, Complex(alpha)});
  return q;
}

}  // namespace

TEST_SUITE("schrodinger") {

TEST_CASE("q = 0 is transparent") {
  auto g = SpatialGrid::window(-16, 16, 1024);
  auto sc = schrodinger_reflection(MiuraPotential::zero(g), linear_k_grid(0.1, 5, 20));
  CHECK(sup_norm(sc.R_left) < 1e-12);
  CHECK(sup_norm(sc.R_right) < 1e-12);
  CHECK(sup_diff(sc.T, CVector(20, 1.0)) < 1e-12);
}

TEST_CASE("delta atom against the single-atom transfer matrix") {
  auto g = SpatialGrid::window(-16, 16, 1024);
  for (double alpha : {1.0, 0.4}) {
    auto ks = linear_k_grid(1e-3, 6, 40);
    auto sc = schrodinger_reflection(delta(alpha, g), ks);
    for (std::size_t i = 0; i < ks.size(); ++i) {
      const double k = ks[i];
      const Complex R = alpha / Complex(-alpha, 2 * k);
      CHECK(std::abs(sc.R_left[i] - R) < 1e-12);
      CHECK(std::abs(sc.R_right[i] - R) < 1e-12);
      CHECK(std::abs(sc.R_left[i]) == doctest::Approx(alpha / std::sqrt(alpha * alpha + 4 * k * k)));
    }
    CHECK(std::abs(sc.R_left.front() + 1.0) < 1e-2);
    CHECK(sc.unitarity_defect < 1e-12);
  }
}

TEST_CASE("atoms between nodes split the cell") {
  auto g = SpatialGrid::window(-16, 16, 1024);
  const double x0 = 0.3 * g.h + 1.0, alpha = 0.7;
  auto q = MiuraPotential::zero(g);
  q.atoms.push_back({x0, Complex(alpha)});
  auto ks = linear_k_grid(0.05, 6, 30);
  auto sc = schrodinger_reflection(q, ks);
  const Complex I(0, 1);
  for (std::size_t i = 0; i < ks.size(); ++i) {
    const double k = ks[i];
    const Complex R = alpha / Complex(-alpha, 2 * k);
    CHECK(std::abs(sc.R_left[i] - R * std::exp(2.0 * I * k * x0)) < 1e-12);
    CHECK(std::abs(sc.R_right[i] - R * std::exp(-2.0 * I * k * x0)) < 1e-12);
  }
  CHECK(sc.unitarity_defect < 1e-12);
}

TEST_CASE("Miura correspondence R_left(k) = r-(2k) for a Gaussian") {
  auto g = SpatialGrid::window(-20, 20, 4096);
  auto u = example_potential(ExampleSpec::parse("gaussian:amp=0.3"), g);
  auto rm = reflection(solve_scattering(u), Side::Left);
  RVector ks;
  std::vector<std::size_t> idx;
  for (std::size_t k = 0; k < g.n; ++k) {
    double s = rm.freq.s(k);
    if (s >= 0.2 - 1e-12 && s <= 10.0 + 1e-12) {
      ks.push_back(s / 2);
      idx.push_back(k);
    }
  }
  auto sc = schrodinger_reflection(miura_map(u), ks);
  double gap = 0;
  for (std::size_t i = 0; i < ks.size(); ++i) gap = std::max(gap, std::abs(sc.R_left[i] - rm.r[idx[i]]));
  CHECK(gap < 1e-3);
  CHECK(sc.unitarity_defect < 1e-6);
}

TEST_CASE("box: atoms plus square part, unitarity holds") {
  auto g = SpatialGrid::window(-16, 16, 4096);
  auto u = example_potential(ExampleSpec::parse("box:alpha=0.4,a=-1,b=1"), g);
  auto sc = schrodinger_reflection(miura_map(u), linear_k_grid(0.1, 5, 30));
  CHECK(sc.unitarity_defect < 1e-6);
}

TEST_CASE("narrow box converges to the delta atom at rate eps") {
  auto g = SpatialGrid::window(-16, 16, 8192);
  auto ks = linear_k_grid(0.2, 3, 15);
  auto ref = schrodinger_reflection(delta(1.0, g), ks);
  RVector gaps;
  for (double eps : {0.25, 0.125, 0.0625}) {
    auto q = MiuraPotential::zero(g);
    for (std::size_t j = 0; j < g.n; ++j) {
      double x = g.x(j);
      if (x > 1e-12 && x < eps - 1e-12) q.square_part[j] = 1.0 / eps;
      else if (std::abs(x) < 1e-12 || std::abs(x - eps) < 1e-12) q.square_part[j] = 0.5 / eps;
    }
    auto sc = schrodinger_reflection(q, ks);
    gaps.push_back(sup_diff(sc.R_left, ref.R_left));
  }
  CHECK(gaps[0] < 0.25);
  CHECK(gaps[1] / gaps[2] > 1.5);
  CHECK(gaps[0] / gaps[1] > 1.5);
}

TEST_CASE("extremal solutions of the delta potential") {
  auto g = SpatialGrid::window(-16, 16, 1024);
  auto rep = check_extremal_solutions(delta(1.0, g));
  CHECK(rep.phi_plus_at_minus2 == 3.0);
  CHECK(rep.phi_minus_at_2 == 3.0);
  CHECK(rep.residual_plus <= 1e-8);
  CHECK(rep.residual_minus <= 1e-8);
  CHECK(rep.log_growth);
  CHECK(rep.certified);
  CHECK(rep.windows.back().l1 == doctest::Approx(std::log1p(4096.0)));

  auto two = delta(1.0, g);
  two.atoms.push_back({1.0, Complex(1.0)});
  CHECK(throws_kind([&] { check_extremal_solutions(two); }, ErrorKind::Precondition, "single atom"));
  auto smooth = delta(1.0, g);
  smooth.square_part[3] = 0.1;
  CHECK(throws_kind([&] { check_extremal_solutions(smooth); }, ErrorKind::Precondition));
  CHECK(throws_kind([&] { check_extremal_solutions(delta(-1.0, g)); }, ErrorKind::Precondition, "positive"));
}

TEST_CASE("input validation") {
  auto g = SpatialGrid::window(-16, 16, 256);
  auto q = MiuraPotential::zero(g);
  for (auto& z : q.square_part.values) z = 1.0;
  CHECK(throws_kind([&] { schrodinger_reflection(q, {1.0}); }, ErrorKind::Precondition, "does not decay"));
  CHECK(throws_kind([&] { schrodinger_reflection(MiuraPotential::zero(g), {0.0}); }, ErrorKind::Precondition));
  CHECK(throws_kind([] { linear_k_grid(0, 1, 5); }, ErrorKind::Usage));
  auto off = MiuraPotential::zero(g);
  off.atoms.push_back({40.0, Complex(1.0)});
  CHECK(throws_kind([&] { schrodinger_reflection(off, {1.0}); }, ErrorKind::Precondition, "outside"));
}

}  // TEST_SUITE
