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

#include "miura/glm.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>

#include "miura/error.hpp"
#include "miura/fft.hpp"
#include "miura/parallel.hpp"

namespace miura {

const char* backend_name(GlmBackend b) {
  switch (b) {
    case GlmBackend::Dense: return "dense";
    case GlmBackend::Neumann: return "neumann";
    case GlmBackend::HankelFast: return "hankel-fast";
  }
  return "?";
}

GlmBackend parse_backend(const std::string& text) {
  if (text == "dense") return GlmBackend::Dense;
  if (text == "neumann") return GlmBackend::Neumann;
  if (text == "hankel-fast") return GlmBackend::HankelFast;
  fail(ErrorKind::Usage, "backend must be dense, neumann or hankel-fast, got '" + text + "'");
}

const char* quadrature_name(GlmQuadrature q) { return q == GlmQuadrature::Trapezoid ? "trapezoid" : "gregory"; }

GlmQuadrature parse_quadrature(const std::string& text) {
  if (text == "trapezoid") return GlmQuadrature::Trapezoid;
  if (text == "gregory") return GlmQuadrature::Gregory;
  fail(ErrorKind::Usage, "quadrature must be trapezoid or gregory, got '" + text + "'");
}

// ---------------------------------------------------------------------------

namespace {

std::size_t next_pow2(std::size_t m) {
  std::size_t p = 1;
  while (p < m) p <<= 1;
  return p;
}

double weighted_dot_re(const RVector& w, const CVector& a, const CVector& b) {
  double s = 0.0;
  for (std::size_t i = 0; i < w.size(); ++i) s += w[i] * std::real(std::conj(a[i]) * b[i]);
  return s;
}

}  // namespace

HankelOperator::HankelOperator(CVector g, RVector weights) : g_(std::move(g)), w_(std::move(weights)) {
  const std::size_t M = w_.size();
  if (M == 0 || g_.size() != 2 * M - 1) fail(ErrorKind::Precondition, "Hankel kernel length must be 2M-1");
  fft_size_ = next_pow2(2 * M - 1);
  g_hat_.assign(fft_size_, Complex{});
  std::copy(g_.begin(), g_.end(), g_hat_.begin());
  fft::forward(g_hat_.data(), fft_size_);
}

CVector HankelOperator::apply(const CVector& v) const {
  const std::size_t M = w_.size();
  if (M == 1) return {g_[0] * w_[0] * v[0]};
  // y_i = sum_j g_{i+j} z_j is entry i+M-1 of the convolution of g with reversed z.
  CVector z(fft_size_, Complex{});
  for (std::size_t j = 0; j < M; ++j) z[M - 1 - j] = w_[j] * v[j];
  fft::forward(z.data(), fft_size_);
  for (std::size_t p = 0; p < fft_size_; ++p) z[p] *= g_hat_[p];
  fft::backward(z.data(), fft_size_);
  CVector y(M);
  const double inv = 1.0 / static_cast<double>(fft_size_);
  for (std::size_t i = 0; i < M; ++i) y[i] = z[i + M - 1] * inv;
  return y;
}

CVector HankelOperator::apply_conj(const CVector& v) const {
  CVector c(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) c[i] = std::conj(v[i]);
  CVector y = apply(c);
  for (auto& z : y) z = std::conj(z);
  return y;
}

CVector HankelOperator::apply_system(const CVector& v) const {
  CVector y = apply(apply_conj(v));
  for (std::size_t i = 0; i < v.size(); ++i) y[i] = v[i] - y[i];
  return y;
}

double HankelOperator::norm_estimate(std::size_t iterations) const {
  // K conj(K) is self-adjoint and nonnegative in the weighted inner product,
  // and its largest eigenvalue is ||K||^2.
  const std::size_t M = w_.size();
  CVector v(M);
  for (std::size_t i = 0; i < M; ++i) v[i] = Complex(1.0, 0.5 * std::sin(static_cast<double>(i)));
  double lambda = 0.0;
  for (std::size_t it = 0; it < iterations; ++it) {
    double nv = std::sqrt(weighted_dot_re(w_, v, v));
    if (nv == 0.0) return 0.0;
    for (auto& z : v) z /= nv;
    CVector kv = apply(apply_conj(v));
    double next = weighted_dot_re(w_, v, kv);
    v = std::move(kv);
    if (it > 5 && std::abs(next - lambda) <= 1e-9 * std::max(next, 1e-300)) {
      lambda = next;
      break;
    }
    lambda = next;
  }
  return std::sqrt(std::max(lambda, 0.0));
}

// ---------------------------------------------------------------------------

namespace {

RVector quadrature_weights(std::size_t M, double h, GlmQuadrature q) {
  RVector w(M, h);
  if (q == GlmQuadrature::Gregory && M >= 6) {
    w[0] = 3.0 / 8.0 * h;
    w[1] = 7.0 / 6.0 * h;
    w[2] = 23.0 / 24.0 * h;
  } else {
    w[0] = 0.5 * h;
  }
  return w;
}

// Driving kernel seen from node k: g(m) = F[k+m] on the right, conj(F[k-m]) on the left.
CVector driving_sequence(const MarchenkoKernel& F, std::size_t k, std::size_t count) {
  const std::size_t n = F.F.size();
  CVector g(count, Complex{});
  for (std::size_t m = 0; m < count; ++m) {
    if (F.side == Side::Right) {
      if (k + m < n) g[m] = F.F[k + m];
    } else if (m <= k) {
      g[m] = std::conj(F.F[k - m]);
    }
  }
  return g;
}

// Cumulative tails of |F| toward the far end of each half-line.
struct TailTable {
  RVector right;  // right[i] = h * sum_{l >= i} |F_l|, size n + 1
  RVector left;   // left[i] = h * sum_{l < i} |F_l|, size n + 1
};

TailTable tail_table(const MarchenkoKernel& F) {
  const std::size_t n = F.F.size();
  const double h = F.space.h;
  TailTable t{RVector(n + 1, 0.0), RVector(n + 1, 0.0)};
  for (std::size_t i = n; i-- > 0;) t.right[i] = t.right[i + 1] + h * std::abs(F.F[i]);
  for (std::size_t i = 0; i < n; ++i) t.left[i + 1] = t.left[i] + h * std::abs(F.F[i]);
  return t;
}

std::size_t half_line_size(const TailTable& t, Side side, std::size_t k, double tol) {
  const std::size_t n = t.right.size() - 1;
  if (side == Side::Right) {
    std::size_t m = 1;
    while (k + m < n && t.right[k + m] > tol) ++m;
    return m;
  }
  std::size_t m = 1;
  while (m <= k && t.left[k - m + 1] > tol) ++m;
  return m;
}

CVector solve_dense(const HankelOperator& K, const CVector& rhs) {
  const std::size_t M = K.size();
  const CVector& g = K.kernel();
  const RVector& w = K.weights();
  Eigen::MatrixXcd A(M, M);
  for (std::size_t i = 0; i < M; ++i)
    for (std::size_t j = 0; j < M; ++j) A(i, j) = g[i + j] * w[j];
  Eigen::MatrixXcd S = -(A * A.conjugate());
  S.diagonal().array() += 1.0;
  Eigen::VectorXcd b(M);
  for (std::size_t i = 0; i < M; ++i) b(i) = rhs[i];
  Eigen::VectorXcd x = S.partialPivLu().solve(b);
  return CVector(x.data(), x.data() + M);
}

CVector solve_neumann(const HankelOperator& K, const CVector& rhs, std::size_t terms) {
  // Explicit matrix products keep this path independent of the FFT one.
  const std::size_t M = K.size();
  const CVector& g = K.kernel();
  const RVector& w = K.weights();
  Eigen::MatrixXcd A(M, M);
  for (std::size_t i = 0; i < M; ++i)
    for (std::size_t j = 0; j < M; ++j) A(i, j) = g[i + j] * w[j];
  Eigen::MatrixXcd Ac = A.conjugate();
  Eigen::VectorXcd term(M);
  for (std::size_t i = 0; i < M; ++i) term(i) = rhs[i];
  Eigen::VectorXcd sum = term;
  for (std::size_t k = 1; k < terms; ++k) {
    term = A * (Ac * term);
    sum += term;
  }
  return CVector(sum.data(), sum.data() + M);
}

CVector solve_cg(const HankelOperator& K, const CVector& rhs, double tol, std::size_t max_it,
                 std::size_t& iterations) {
  // Conjugate gradients in the quadrature-weighted inner product, where the
  // system operator is self-adjoint and positive definite.
  const RVector& w = K.weights();
  const std::size_t M = K.size();
  CVector x(M, Complex{}), r = rhs, p = rhs;
  double rr = weighted_dot_re(w, r, r);
  const double target = tol * tol * rr;
  iterations = 0;
  while (rr > target && iterations < max_it) {
    CVector Ap = K.apply_system(p);
    double alpha = rr / weighted_dot_re(w, p, Ap);
    for (std::size_t i = 0; i < M; ++i) {
      x[i] += alpha * p[i];
      r[i] -= alpha * Ap[i];
    }
    double rr_new = weighted_dot_re(w, r, r);
    double beta = rr_new / rr;
    rr = rr_new;
    for (std::size_t i = 0; i < M; ++i) p[i] = r[i] + beta * p[i];
    ++iterations;
  }
  return x;
}

GlmSolution solve_at(const MarchenkoKernel& F, std::size_t k, std::size_t M, const GlmOptions& opts) {
  GlmSolution sol;
  sol.node = k;
  sol.x = F.space.x(k);
  sol.M = M;
  HankelOperator K(driving_sequence(F, k, 2 * M - 1), quadrature_weights(M, F.space.h, opts.quadrature));

  if (opts.estimate_norm) {
    sol.norm_estimate = K.norm_estimate();
    if (sol.norm_estimate >= 1.0)
      fail(ErrorKind::Invariant, "contraction violated (data outside X1 or zeta_max too small)");
  }

  CVector rhs(M);
  for (std::size_t i = 0; i < M; ++i) rhs[i] = -K.kernel()[i];
  CVector gamma;
  switch (opts.backend) {
    case GlmBackend::Dense: gamma = solve_dense(K, rhs); break;
    case GlmBackend::Neumann: gamma = solve_neumann(K, rhs, opts.neumann_terms); break;
    case GlmBackend::HankelFast:
      gamma = solve_cg(K, rhs, opts.cg_tol, opts.max_iterations, sol.iterations);
      break;
  }

  CVector res = K.apply_system(gamma);
  for (std::size_t i = 0; i < M; ++i) sol.residual = std::max(sol.residual, std::abs(res[i] - rhs[i]));

  // H = -conj(K) Gamma, w = sum_j g_j w_j H_j, Gamma0 = -g_0 - w.
  CVector H = K.apply_conj(gamma);
  for (auto& z : H) z = -z;
  Complex wsum{};
  for (std::size_t j = 0; j < M; ++j) wsum += K.kernel()[j] * K.weights()[j] * H[j];
  sol.w = wsum;
  sol.gamma0 = gamma[0];
  sol.u = F.side == Side::Right ? -gamma[0] : gamma[0];
  if (opts.keep_profiles) {
    sol.gamma = std::move(gamma);
    sol.H = std::move(H);
  }
  return sol;
}

GlmSolution solve_side(const MarchenkoKernel& F, double x, const GlmOptions& opts, Side side) {
  if (F.side != side)
    fail(ErrorKind::Precondition, std::string("kernel side must be ") + side_name(side));
  std::size_t k = F.space.node_index(x);
  TailTable t = tail_table(F);
  return solve_at(F, k, half_line_size(t, side, k, opts.tail_tol), opts);
}

}  // namespace

GlmSolution solve_glm_right(const MarchenkoKernel& F, double x, const GlmOptions& opts) {
  return solve_side(F, x, opts, Side::Right);
}

GlmSolution solve_glm_left(const MarchenkoKernel& F, double x, const GlmOptions& opts) {
  return solve_side(F, x, opts, Side::Left);
}

HalfLineReconstruction reconstruct_half_line(const MarchenkoKernel& F, double c, const GlmOptions& opts) {
  const SpatialGrid& g = F.space;
  const std::size_t n = g.n;
  HalfLineReconstruction out;
  out.side = F.side;
  out.u = SpaceFunction(g);
  out.residual.assign(n, 0.0);

  std::vector<std::size_t> nodes;
  for (std::size_t k = 0; k < n; ++k) {
    double x = g.x(k);
    double slack = 1e-9 * g.h;
    if (F.side == Side::Right ? x >= c - slack : x <= c + slack) nodes.push_back(k);
  }
  if (nodes.empty()) return out;
  out.empty = false;
  out.first = nodes.front();
  out.last = nodes.back();

  TailTable t = tail_table(F);
  // The operator norm is monotone along the sweep: it is largest at the node
  // deepest into the kernel's support.
  if (opts.estimate_norm) {
    std::size_t k = F.side == Side::Right ? out.first : out.last;
    std::size_t M = half_line_size(t, F.side, k, opts.tail_tol);
    HankelOperator K(driving_sequence(F, k, 2 * M - 1), quadrature_weights(M, g.h, opts.quadrature));
    out.norm_estimate = K.norm_estimate();
    if (out.norm_estimate >= 1.0)
      fail(ErrorKind::Invariant, "contraction violated (data outside X1 or zeta_max too small)");
  }

  GlmOptions per = opts;
  per.estimate_norm = false;
  per.keep_profiles = false;
  std::vector<GlmSolution> sols(nodes.size());
  parallel_for(nodes.size(), [&](std::size_t i) {
    std::size_t k = nodes[i];
    sols[i] = solve_at(F, k, half_line_size(t, F.side, k, opts.tail_tol), per);
  });
  for (const auto& s : sols) {
    out.u.values[s.node] = s.u;
    out.residual[s.node] = s.residual;
    out.max_residual = std::max(out.max_residual, s.residual);
    out.max_M = std::max(out.max_M, s.M);
  }
  return out;
}

}  // namespace miura
