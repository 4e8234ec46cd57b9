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

#include <array>
#include <cmath>

#include "doctest.h"
#include "miura/direct.hpp"
#include "support.hpp"

using namespace miura;
using miura::test::desk_grid;
using miura::test::throws_kind;

namespace {

using M2 = std::array<Complex, 4>;

M2 mul(const M2& x, const M2& y) {
  return {x[0] * y[0] + x[1] * y[2], x[0] * y[1] + x[1] * y[3], x[2] * y[0] + x[3] * y[2], x[2] * y[1] + x[3] * y[3]};
}

// Taylor series with scaling and squaring.
M2 expm(M2 A) {
  int squarings = 0;
  double nrm = 0;
  for (auto z : A) nrm = std::max(nrm, std::abs(z));
  while (nrm > 0.25) { nrm /= 2; ++squarings; }
  for (auto& z : A) z /= std::pow(2.0, squarings);
  M2 sum{1, 0, 0, 1}, term{1, 0, 0, 1};
  for (int k = 1; k < 30; ++k) {
    term = mul(term, A);
    for (auto& z : term) z /= static_cast<double>(k);
    for (int i = 0; i < 4; ++i) sum[i] += term[i];
  }
  for (int i = 0; i < squarings; ++i) sum = mul(sum, sum);
  return sum;
}

// (a, b) for u = alpha on [-L, L]: N(-inf) = e^{i s L sigma} exp(-2L A) e^{i s L sigma} e1.
std::pair<Complex, Complex> box_oracle(double alpha, double L, double s) {
  M2 A{Complex(0, s / 2), alpha, alpha, Complex(0, -s / 2)};
  for (auto& z : A) z *= -2 * L;
  M2 E = expm(A);
  Complex ph = std::exp(Complex(0, s * L / 2));
  return {ph * E[0] * ph, std::conj(ph) * E[2] * ph};
}

}  // namespace

TEST_SUITE("direct") {

TEST_CASE("u = 0 gives a = 1, b = 0") {
  auto u = example_potential(ExampleSpec::parse("zero"), desk_grid(512));
  auto sd = solve_scattering(u);
  CHECK(sup_diff(sd.a, CVector(512, 1.0)) < 1e-12);
  CHECK(sup_norm(sd.b) == 0.0);
  auto r = reflection(sd, Side::Right);
  CHECK(r.rho < 1e-14);
  CHECK(sup_norm(marchenko_kernel(r).F) < 1e-14);
}

TEST_CASE("box against the matrix-exponential oracle") {
  auto u = example_potential(ExampleSpec::parse("box:alpha=0.4"), desk_grid(4096));
  auto sd = solve_scattering(u);
  const std::size_t k0 = sd.freq.zero_index();
  CHECK(std::abs(sd.a[k0] - std::cosh(0.8)) < 1e-6);
  CHECK(std::abs(sd.b[k0] + std::sinh(0.8)) < 1e-6);
  auto [a0, b0] = box_oracle(0.4, 1.0, 0.0);
  CHECK(std::abs(a0 - std::cosh(0.8)) < 1e-14);
  CHECK(std::abs(b0 + std::sinh(0.8)) < 1e-14);
  auto rm = reflection(sd, Side::Left);
  CHECK(std::abs(rm.r[k0] + std::tanh(0.8)) < 1e-6);
  // Away from s = 0 the jumps limit accuracy to O(h).
  for (std::size_t k : {k0 + 3, k0 + 10, k0 - 25, k0 + 60}) {
    auto [a, b] = box_oracle(0.4, 1.0, sd.freq.s(k));
    CHECK(std::abs(sd.a[k] - a) < 2e-3);
    CHECK(std::abs(sd.b[k] - b) < 2e-3);
  }
}

TEST_CASE("Born term: closed form and cubic scaling of the remainder") {
  auto g = desk_grid(2048);
  double prev = 0;
  for (double eps : {0.2, 0.1, 0.05}) {
    auto u = example_potential(ExampleSpec::parse("gaussian:amp=" + std::to_string(eps)), g);
    auto born = born_approximation(u);
    double cf = 0;
    for (std::size_t k = 0; k < g.n; ++k) {
      double s = born.grid.s(k);
      cf = std::max(cf, std::abs(born[k] + eps * std::sqrt(kPi) * std::exp(-s * s / 4)));
    }
    CHECK(cf < 1e-12);
    auto sd = solve_scattering(u);
    double rem = sup_diff(sd.b, born.values);
    if (prev > 0) {
      CHECK(prev / rem > 7.0);
      CHECK(prev / rem < 9.0);
    }
    prev = rem;
  }
}

TEST_CASE("reflection identities and the contraction precondition") {
  auto u = example_potential(ExampleSpec::parse("sech:amp=0.3,k=1"), desk_grid(2048));
  auto sd = solve_scattering(u);
  auto rp = reflection(sd, Side::Right), rm = reflection(sd, Side::Left);
  CHECK(rp.side == Side::Right);
  CHECK(rm.side == Side::Left);
  for (std::size_t k = 0; k < sd.a.size(); ++k) {
    CHECK(std::abs(rm.r[k] - sd.b[k] / sd.a[k]) == 0.0);
    CHECK(std::abs(std::abs(rp.r[k]) - std::abs(rm.r[k])) < 1e-15);
    CHECK(std::norm(rm.r[k]) == doctest::Approx(1.0 - 1.0 / std::norm(sd.a[k])).epsilon(1e-9));
  }
  CHECK(rp.rho < 1.0);
  CHECK(rp.rho == doctest::Approx(rm.rho));

  FreqFunction big(sd.freq);
  big[5] = 1.2;
  CHECK(throws_kind([&] { make_reflection(big, Side::Right); }, ErrorKind::Invariant, "outside X1"));
  big[5] = 1.0;
  CHECK(throws_kind([&] { make_reflection(big, Side::Left); }, ErrorKind::Invariant));
}

TEST_CASE("Marchenko kernels: transform consistency and realness") {
  auto u = example_potential(ExampleSpec::parse("gaussian:amp=0.5"), desk_grid(2048));
  auto sd = solve_scattering(u);
  auto rp = reflection(sd, Side::Right), rm = reflection(sd, Side::Left);
  auto Fp = marchenko_kernel(rp), Fm = marchenko_kernel(rm);
  CHECK(Fp.side == Side::Right);
  CHECK(Fm.side == Side::Left);
  auto back = fourier_hat(Fp.function());
  // fourier_hat inverts fourier_plus on the paired grid.
  CHECK(sup_diff(back.values, rp.r) < 1e-13);
  double imag = 0;
  for (auto z : Fp.F) imag = std::max(imag, std::abs(z.imag()));
  for (auto z : Fm.F) imag = std::max(imag, std::abs(z.imag()));
  CHECK(imag < 1e-13);
  // Leading order F+ ~ -u for small data: F+(x) = (1/2pi)\int e^{isx} r+ ds, r+ ~ -conj(b) ~ uhat.
  auto small = example_potential(ExampleSpec::parse("gaussian:amp=0.01"), desk_grid(2048));
  auto Fs = marchenko_kernel(reflection(solve_scattering(small), Side::Right));
  CHECK(sup_diff(Fs.F, small.values()) < 1e-5);
}

TEST_CASE("Jost row solutions") {
  auto g = desk_grid(2048);
  auto u = example_potential(ExampleSpec::parse("gaussian:amp=0.5"), g);
  for (double s : {0.0, 1.3, -4.0}) {
    auto js = jost_row_solutions(u, s);
    CHECK(js.det_drift < 1e-8);
    double right = 0, left = 0;
    for (std::size_t j = g.n - 200; j < g.n; ++j)
      right = std::max(right, std::abs(js.chi_plus[j] - std::exp(Complex(0, s * g.x(j) / 2))));
    for (std::size_t j = 0; j < 200; ++j)
      left = std::max(left, std::abs(js.chi_minus[j] - std::exp(Complex(0, -s * g.x(j) / 2))));
    CHECK(right < 1e-4);
    CHECK(left < 1e-4);
  }
  auto free = jost_row_solutions(example_potential(ExampleSpec::parse("zero"), g), 2.0);
  for (std::size_t j = 0; j < g.n; j += 97) CHECK(std::abs(free.chi_plus[j] - std::exp(Complex(0, g.x(j)))) < 1e-12);
}

TEST_CASE("unitarity, determinant and real symmetry invariants") {
  auto g = desk_grid(4096);
  for (const char* spec : {"gaussian:amp=0.5", "box:alpha=0.4", "ex1", "ex2:alpha=0.5", "sech:amp=0.3,k=1"}) {
    CAPTURE(spec);
    miura::test::WarningCapture quiet;
    auto u = example_potential(ExampleSpec::parse(spec), g);
    auto sd = solve_scattering(u);
    CHECK(sd.unitarity_defect < 1e-10);
    CHECK(sd.det_drift < 1e-10);
    if (u.real_valued()) {
      double sym = 0;
      for (std::size_t k = 1; k < g.n; ++k) {
        sym = std::max(sym, std::abs(sd.a[g.n - k] - std::conj(sd.a[k])));
        sym = std::max(sym, std::abs(sd.b[g.n - k] - std::conj(sd.b[k])));
      }
      CHECK(sym < 1e-10);
    }
  }
}

TEST_CASE("fourth-order convergence in the step") {
  auto solve = [](std::size_t n) {
    return solve_scattering(example_potential(ExampleSpec::parse("gaussian:amp=0.5"), desk_grid(n)));
  };
  auto ref = solve(8192);
  auto err = [&](const ScatteringData& sd) {
    // Frequencies are shared: same window, ds fixed; compare the common band.
    const std::size_t off = (ref.a.size() - sd.a.size()) / 2;
    double e = 0;
    for (std::size_t k = 0; k < sd.a.size(); ++k) e = std::max(e, std::abs(sd.b[k] - ref.b[k + off]));
    return e;
  };
  double e1 = err(solve(1024)), e2 = err(solve(2048));
  CHECK(e1 / e2 > 12.0);
}

TEST_CASE("sech: |r|^2 matches the closed form") {
  // u = A sech x: |r(s)|^2 = sinh^2(pi A) / (cosh^2(pi s / 2) + sinh^2(pi A)).
  auto g = SpatialGrid::window(-32, 32, 2048);
  for (double A : {0.3, 0.7}) {
    auto u = example_potential(ExampleSpec::parse("sech:amp=" + std::to_string(A)), g);
    auto r = reflection(solve_scattering(u), Side::Left);
    double err = 0;
    for (std::size_t k = 0; k < g.n; ++k) {
      double s = r.freq.s(k), sh = std::sinh(kPi * A), ch = std::cosh(kPi * s / 2);
      err = std::max(err, std::abs(std::norm(r.r[k]) - sh * sh / (ch * ch + sh * sh)));
    }
    CHECK(err < 1e-9);
    CHECK(r.rho == doctest::Approx(std::tanh(kPi * A)).epsilon(1e-9));
  }
}

TEST_CASE("non-decaying potentials are rejected") {
  auto g = desk_grid(512);
  SpaceFunction c(g);
  for (auto& z : c.values) z = 0.1;
  CHECK(throws_kind([&] { solve_scattering(Potential(c)); }, ErrorKind::Precondition, "does not decay"));
  CHECK(parse_side("left") == Side::Left);
  CHECK(throws_kind([] { parse_side("up"); }, ErrorKind::Usage));
}

}  // TEST_SUITE
