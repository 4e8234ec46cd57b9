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

#include <string>

#include "miura/direct.hpp"
#include "miura/inverse.hpp"
#include "miura/schrodinger.hpp"

namespace miura::io {

// CSV files carry their grid as a "# grid: {...}" comment line. Numbers are
// written with 17 significant digits so doubles survive a round trip.

std::string format_double(double v);

/// "x.csv" -> "x.json"; other names get ".json" appended.
std::string sidecar_path(const std::string& csv_path);

void write_space_function(const std::string& path, const SpaceFunction& f);
void write_freq_function(const std::string& path, const FreqFunction& f);
SpaceFunction read_space_function(const std::string& path);
FreqFunction read_freq_function(const std::string& path);

void write_potential(const std::string& path, const Potential& u);
Potential read_potential(const std::string& path);

void write_scattering(const std::string& path, const ScatteringData& sd);

void write_reflection(const std::string& path, const ReflectionCoefficient& r);
/// Side comes from the sidecar when present, else from `fallback`.
ReflectionCoefficient read_reflection(const std::string& path, Side fallback = Side::Right);

void write_kernel(const std::string& path, const MarchenkoKernel& F);

void write_reconstruction(const std::string& path, const ReconstructionResult& rec);

void write_schrodinger(const std::string& path, const RVector& k, const CVector& R, const CVector& T);

}  // namespace miura::io
