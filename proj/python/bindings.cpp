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

#include <pybind11/complex.h>
#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "miura/direct.hpp"
#include "miura/error.hpp"
#include "miura/grid.hpp"
#include "miura/inverse.hpp"
#include "miura/involution.hpp"
#include "miura/potential.hpp"
#include "miura/schrodinger.hpp"

namespace py = pybind11;
using namespace miura;

namespace {

using CArray = py::array_t<Complex, py::array::c_style | py::array::forcecast>;
using RArray = py::array_t<double, py::array::c_style | py::array::forcecast>;

template <class T>
py::array_t<T> to_numpy(const std::vector<T>& v) {
  py::array_t<T> out(static_cast<py::ssize_t>(v.size()));
  std::copy(v.begin(), v.end(), out.mutable_data());
  return out;
}

CVector to_cvector(const CArray& a) {
  if (a.ndim() != 1) throw Error(ErrorKind::Usage, "expected a one-dimensional array");
  return CVector(a.data(), a.data() + a.size());
}

RArray nodes(const SpatialGrid& g) {
  RArray x(static_cast<py::ssize_t>(g.n));
  for (std::size_t j = 0; j < g.n; ++j) x.mutable_data()[j] = g.x(j);
  return x;
}

RArray freqs(const FrequencyGrid& f) {
  RArray s(static_cast<py::ssize_t>(f.n()));
  for (std::size_t k = 0; k < f.n(); ++k) s.mutable_data()[k] = f.s(k);
  return s;
}

ForwardOptions forward_opts(int substeps) {
  ForwardOptions o;
  o.substeps = substeps;
  return o;
}

InverseOptions inverse_opts(double c, double width, const std::string& backend, const std::string& quadrature,
                            double overlap_tol) {
  InverseOptions o;
  o.c = c;
  o.width = width;
  o.glm.backend = parse_backend(backend);
  o.glm.quadrature = parse_quadrature(quadrature);
  o.overlap_tol = overlap_tol;
  return o;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Direct and inverse scattering for ZS-AKNS systems with L1 + L2 potentials";

  static py::exception<Error> base(m, "MiuraError", PyExc_ValueError);
  static py::exception<Error> precondition(m, "PreconditionError", base.ptr());
  static py::exception<Error> invariant(m, "InvariantError", base.ptr());
  static py::exception<Error> usage(m, "UsageError", base.ptr());
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      switch (e.kind()) {
        case ErrorKind::Precondition: py::set_error(precondition, e.what()); break;
        case ErrorKind::Invariant: py::set_error(invariant, e.what()); break;
        case ErrorKind::Usage: py::set_error(usage, e.what()); break;
      }
    }
  });

  py::enum_<Side>(m, "Side").value("LEFT", Side::Left).value("RIGHT", Side::Right);

  py::class_<SpatialGrid>(m, "Grid")
      .def(py::init<double, double, std::size_t>(), py::arg("x0"), py::arg("h"), py::arg("n"))
      .def_static("window", &SpatialGrid::window, py::arg("a"), py::arg("b"), py::arg("n"),
                  "Grid covering [a, b) with n points.")
      .def_readonly("x0", &SpatialGrid::x0)
      .def_readonly("h", &SpatialGrid::h)
      .def_readonly("n", &SpatialGrid::n)
      .def_property_readonly("x", &nodes)
      .def_property_readonly("s", [](const SpatialGrid& g) { return freqs(FrequencyGrid(g)); })
      .def("__repr__", [](const SpatialGrid& g) {
        return "Grid(x0=" + std::to_string(g.x0) + ", h=" + std::to_string(g.h) + ", n=" + std::to_string(g.n) + ")";
      });

  py::class_<Potential>(m, "Potential")
      .def(py::init([](const SpatialGrid& g, const CArray& v, const std::vector<std::pair<double, Complex>>& jumps) {
             std::vector<Jump> js;
             for (const auto& [x, w] : jumps) js.push_back({x, w});
             return Potential(SpaceFunction(g, to_cvector(v)), std::move(js));
           }),
           py::arg("grid"), py::arg("values"), py::arg("jumps") = std::vector<std::pair<double, Complex>>{})
      .def_static(
          "example", [](const std::string& spec, const SpatialGrid& g) { return example_potential(ExampleSpec::parse(spec), g); },
          py::arg("spec"), py::arg("grid"), "Built-in family, e.g. 'box:alpha=0.4' or 'sech:amp=0.3,k=1'.")
      .def_property_readonly("grid", &Potential::grid)
      .def_property_readonly("x", [](const Potential& u) { return nodes(u.grid()); })
      .def_property_readonly("values", [](const Potential& u) { return to_numpy(u.values()); })
      .def_property_readonly("real_valued", &Potential::real_valued)
      .def_property_readonly("jumps",
                             [](const Potential& u) {
                               std::vector<std::pair<double, Complex>> out;
                               for (const auto& j : u.jumps()) out.emplace_back(j.x, j.w);
                               return out;
                             })
      .def_property_readonly("norm_x", &Potential::norm_x);

  py::class_<ScatteringData>(m, "ScatteringData")
      .def_property_readonly("s", [](const ScatteringData& d) { return freqs(d.freq); })
      .def_property_readonly("a", [](const ScatteringData& d) { return to_numpy(d.a); })
      .def_property_readonly("b", [](const ScatteringData& d) { return to_numpy(d.b); })
      .def_readonly("unitarity_defect", &ScatteringData::unitarity_defect)
      .def_readonly("det_drift", &ScatteringData::det_drift);

  py::class_<ReflectionCoefficient>(m, "Reflection")
      .def(py::init([](const SpatialGrid& g, const CArray& r, Side side) {
             return make_reflection(FreqFunction(FrequencyGrid(g), to_cvector(r)), side);
           }),
           py::arg("grid"), py::arg("r"), py::arg("side") = Side::Right,
           "Samples on the frequency grid paired to `grid`; requires sup|r| < 1.")
      .def_property_readonly("s", [](const ReflectionCoefficient& r) { return freqs(r.freq); })
      .def_property_readonly("r", [](const ReflectionCoefficient& r) { return to_numpy(r.r); })
      .def_property_readonly("grid", [](const ReflectionCoefficient& r) { return r.freq.space; })
      .def_readonly("side", &ReflectionCoefficient::side)
      .def_readonly("rho", &ReflectionCoefficient::rho);

  py::class_<MarchenkoKernel>(m, "Kernel")
      .def_property_readonly("x", [](const MarchenkoKernel& k) { return nodes(k.space); })
      .def_property_readonly("F", [](const MarchenkoKernel& k) { return to_numpy(k.F); })
      .def_readonly("side", &MarchenkoKernel::side);

  py::class_<ReconstructionResult>(m, "Reconstruction")
      .def_readonly("u", &ReconstructionResult::u)
      .def_property_readonly("u_plus", [](const ReconstructionResult& r) { return to_numpy(r.u_plus.values); })
      .def_property_readonly("u_minus", [](const ReconstructionResult& r) { return to_numpy(r.u_minus.values); })
      .def_readonly("r_plus", &ReconstructionResult::r_plus)
      .def_readonly("r_minus", &ReconstructionResult::r_minus)
      .def_readonly("overlap_gap", &ReconstructionResult::overlap_gap)
      .def_readonly("overlap_tol", &ReconstructionResult::overlap_tol)
      .def_readonly("max_residual", &ReconstructionResult::max_residual);

  py::class_<BijectionReport>(m, "BijectionReport")
      .def_readonly("rel_x_error", &BijectionReport::rel_x_error)
      .def_readonly("r_sup_gap", &BijectionReport::r_sup_gap)
      .def_readonly("overlap_gap", &BijectionReport::overlap_gap)
      .def_readonly("rho", &BijectionReport::rho)
      .def_readonly("unitarity_defect", &BijectionReport::unitarity_defect)
      .def_readonly("passed", &BijectionReport::pass)
      .def_readonly("u_rec", &BijectionReport::u_rec);

  py::class_<MiuraPotential>(m, "MiuraPotential")
      .def_static(
          "delta",
          [](const SpatialGrid& g, double alpha, double x) {
            auto q = MiuraPotential::zero(g);
            q.atoms.push_back({x, Complex(alpha)});
            return q;
          },
          py::arg("grid"), py::arg("alpha"), py::arg("x") = 0.0)
      .def_property_readonly("d", [](const MiuraPotential& q) { return to_numpy(q.derivative_part.values); })
      .def_property_readonly("sq", [](const MiuraPotential& q) { return to_numpy(q.square_part.values); })
      .def_property_readonly("atoms", [](const MiuraPotential& q) {
        std::vector<std::pair<double, Complex>> out;
        for (const auto& a : q.atoms) out.emplace_back(a.x, a.weight);
        return out;
      });

  py::class_<SchrodingerScattering>(m, "SchrodingerScattering")
      .def_property_readonly("k", [](const SchrodingerScattering& s) { return to_numpy(s.k); })
      .def_property_readonly("R_left", [](const SchrodingerScattering& s) { return to_numpy(s.R_left); })
      .def_property_readonly("R_right", [](const SchrodingerScattering& s) { return to_numpy(s.R_right); })
      .def_property_readonly("T", [](const SchrodingerScattering& s) { return to_numpy(s.T); })
      .def_readonly("unitarity_defect", &SchrodingerScattering::unitarity_defect);

  m.def("example_names", &example_names);
  m.def(
      "solve_scattering", [](const Potential& u, int substeps) { return solve_scattering(u, forward_opts(substeps)); },
      py::arg("u"), py::arg("substeps") = 2);
  m.def("reflection", &reflection, py::arg("data"), py::arg("side") = Side::Right);
  m.def("marchenko_kernel", &marchenko_kernel, py::arg("r"));
  m.def(
      "a_from_modulus", [](const ReflectionCoefficient& r) { return to_numpy(a_from_modulus(r).values); }, py::arg("r"),
      "Transmission denominator a(s) rebuilt from |r| alone.");
  m.def(
      "involute", [](const ReflectionCoefficient& r) { return involute(r); }, py::arg("r"),
      "Reflection coefficient of the opposite side.");
  m.def(
      "cauchy_plus",
      [](const SpatialGrid& g, const CArray& f) {
        return to_numpy(cauchy_plus(FreqFunction(FrequencyGrid(g), to_cvector(f))).values);
      },
      py::arg("grid"), py::arg("f"));
  m.def(
      "invert",
      [](const ReflectionCoefficient& r, double c, double width, const std::string& backend, const std::string& quadrature,
         double overlap_tol) {
        py::gil_scoped_release release;
        return invert(r, inverse_opts(c, width, backend, quadrature, overlap_tol));
      },
      py::arg("r"), py::arg("c") = 0.0, py::arg("width") = 1.0, py::arg("backend") = "hankel-fast",
      py::arg("quadrature") = "gregory", py::arg("overlap_tol") = -1.0);
  m.def(
      "verify_bijection",
      [](const Potential& u, double tolerance) {
        py::gil_scoped_release release;
        BijectionOptions o;
        o.tolerance = tolerance;
        return verify_bijection(u, o);
      },
      py::arg("u"), py::arg("tolerance") = 1e-3);
  m.def("miura_map", &miura_map, py::arg("u"));
  m.def(
      "schrodinger_reflection",
      [](const MiuraPotential& q, const RArray& k) {
        return schrodinger_reflection(q, RVector(k.data(), k.data() + k.size()));
      },
      py::arg("q"), py::arg("k"));
}
