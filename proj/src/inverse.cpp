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

#include "miura/inverse.hpp"

#include <cmath>
#include <sstream>

#include "miura/error.hpp"

namespace miura {

double blend_step(double t) {
  if (t <= -1.0) return 1.0;
  if (t >= 1.0) return 0.0;
  auto psi = [](double y) { return y > 0.0 ? std::exp(-1.0 / y) : 0.0; };
  double left = psi(1.0 - t), right = psi(1.0 + t);
  return left / (left + right);
}

ReconstructionResult invert(const ReflectionCoefficient& r, const InverseOptions& opts) {
  if (!(r.rho < 1.0)) fail(ErrorKind::Invariant, "max|r| >= 1: outside X1");
  if (!(opts.width > 0.0)) fail(ErrorKind::Precondition, "blend width must be positive");
  ReconstructionResult out;
  out.c = opts.c;
  out.width = opts.width;
  if (r.side == Side::Right) {
    out.r_plus = r;
    out.r_minus = involute(r, opts.involution);
  } else {
    out.r_minus = r;
    out.r_plus = involute(r, opts.involution);
  }
  out.F_plus = marchenko_kernel(out.r_plus);
  out.F_minus = marchenko_kernel(out.r_minus);

  out.plus = reconstruct_half_line(out.F_plus, opts.c - opts.width, opts.glm);
  out.minus = reconstruct_half_line(out.F_minus, opts.c + opts.width, opts.glm);
  out.u_plus = out.plus.u;
  out.u_minus = out.minus.u;
  out.max_residual = std::max(out.plus.max_residual, out.minus.max_residual);

  const SpatialGrid& g = out.F_plus.space;
  SpaceFunction u(g);
  for (std::size_t j = 0; j < g.n; ++j) {
    double z = blend_step((g.x(j) - opts.c) / opts.width);
    u.values[j] = z * out.u_minus.values[j] + (1.0 - z) * out.u_plus.values[j];
    double x = g.x(j);
    double slack = 1e-9 * g.h;
    if (x >= opts.c - opts.width - slack && x <= opts.c + opts.width + slack)
      out.overlap_gap = std::max(out.overlap_gap, std::abs(out.u_plus.values[j] - out.u_minus.values[j]));
  }
  out.overlap_tol = opts.overlap_tol > 0.0 ? opts.overlap_tol : 1e-3 * (1.0 + sup_norm(u.values));
  out.u = Potential(std::move(u));
  if (out.overlap_gap > opts.overlap_error_factor * out.overlap_tol) {
    std::ostringstream os;
    os << "left/right reconstructions inconsistent (data not in the image of S+-): overlap gap "
       << out.overlap_gap;
    fail(ErrorKind::Invariant, os.str());
  }
  return out;
}

BijectionReport verify_bijection(const Potential& u, const BijectionOptions& opts) {
  BijectionReport rep;
  rep.tolerance = opts.tolerance;
  ScatteringData sd = solve_scattering(u, opts.forward);
  rep.unitarity_defect = sd.unitarity_defect;
  rep.r = reflection(sd, Side::Right);
  rep.rho = rep.r.rho;
  ReconstructionResult rec = invert(rep.r, opts.inverse);
  rep.u_rec = rec.u;
  rep.overlap_gap = rec.overlap_gap;
  rep.overlap_tol = rec.overlap_tol;
  rep.max_residual = rec.max_residual;

  SpaceFunction diff(u.grid());
  for (std::size_t j = 0; j < u.grid().n; ++j) diff.values[j] = rec.u.values()[j] - u.values()[j];
  double ref = u.norm_x();
  rep.rel_x_error = ref > 0.0 ? norm_x(diff) / ref : norm_x(diff);

  ScatteringData sd2 = solve_scattering(rec.u, opts.forward);
  rep.r_rec = reflection(sd2, Side::Right);
  rep.r_sup_gap = sup_diff(rep.r_rec.r, rep.r.r);
  rep.pass = rep.rel_x_error <= opts.tolerance && rep.r_sup_gap <= opts.tolerance;
  return rep;
}

}  // namespace miura
