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

#include <memory>

#include "miura/direct.hpp"

namespace miura {

enum class GlmBackend { Dense, Neumann, HankelFast };
enum class GlmQuadrature { Trapezoid, Gregory };

const char* backend_name(GlmBackend b);
GlmBackend parse_backend(const std::string& text);
const char* quadrature_name(GlmQuadrature q);
GlmQuadrature parse_quadrature(const std::string& text);

struct GlmOptions {
  GlmBackend backend = GlmBackend::HankelFast;
  GlmQuadrature quadrature = GlmQuadrature::Gregory;
  double tail_tol = 1e-8;          // zeta_max: tail \int |F| beyond it is below this
  std::size_t neumann_terms = 25;  // Neumann backend only
  double cg_tol = 1e-13;           // relative residual target of the fast backend
  std::size_t max_iterations = 400;
  bool estimate_norm = true;       // power iteration on the Hankel operator
  bool keep_profiles = false;      // keep Gamma(x, .) and H(x, .) in the solution
};

/// Discretized Hankel operator (K psi)_i = sum_j g(i + j) w_j psi_j on the
/// half-line nodes t_j = j*h, where g(m) = G(x + m*h) is the driving kernel
/// seen from the base node. Applied by FFT convolution.
class HankelOperator {
public:
  HankelOperator(CVector g, RVector weights);

  std::size_t size() const { return w_.size(); }
  const RVector& weights() const { return w_; }
  const CVector& kernel() const { return g_; }

  CVector apply(const CVector& v) const;       // K v
  CVector apply_conj(const CVector& v) const;  // conj(K) v
  /// (I - K conj(K)) v
  CVector apply_system(const CVector& v) const;
  /// Estimate of the operator norm in the weighted l2 norm of the quadrature.
  double norm_estimate(std::size_t iterations = 60) const;

private:
  CVector g_;
  RVector w_;
  std::size_t fft_size_ = 0;
  CVector g_hat_;
};

struct GlmSolution {
  double x = 0.0;
  std::size_t node = 0;
  std::size_t M = 0;          // half-line nodes, zeta_max = M*h
  Complex gamma0;             // Gamma(x, 0)
  Complex u;                  // u+(x) = -Gamma0 (right) or u-(x) = Gamma0 (left)
  Complex w;                  // correction: \int H(x,t) G(x+t) dt
  double residual = 0.0;      // max |(I - K conj K) Gamma + g|
  double norm_estimate = -1;  // -1 when not computed
  std::size_t iterations = 0;
  CVector gamma;              // kept when requested
  CVector H;
};

/// Right equation (I - T_F T_conjF) Gamma = -F(x + .) on [0, zeta_max).
GlmSolution solve_glm_right(const MarchenkoKernel& F, double x, const GlmOptions& opts = {});
/// Left equation on (-zeta_max, 0]; the driving kernel is conj(F-).
GlmSolution solve_glm_left(const MarchenkoKernel& F, double x, const GlmOptions& opts = {});

struct HalfLineReconstruction {
  Side side = Side::Right;
  SpaceFunction u;           // zero outside the computed range
  std::size_t first = 0;     // computed node range, inclusive
  std::size_t last = 0;
  bool empty = true;
  RVector residual;          // per node, zero outside the range
  double max_residual = 0.0;
  double norm_estimate = -1;
  std::size_t max_M = 0;
};

/// Right side: every node x >= c. Left side: every node x <= c.
HalfLineReconstruction reconstruct_half_line(const MarchenkoKernel& F, double c, const GlmOptions& opts = {});

}  // namespace miura
