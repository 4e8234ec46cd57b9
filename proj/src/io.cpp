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

#include "miura/io.hpp"

#include "json.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include "miura/error.hpp"

namespace miura::io {

using nlohmann::json;

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string sidecar_path(const std::string& csv_path) {
  const std::string ext = ".csv";
  if (csv_path.size() >= ext.size() && csv_path.compare(csv_path.size() - ext.size(), ext.size(), ext) == 0)
    return csv_path.substr(0, csv_path.size() - ext.size()) + ".json";
  return csv_path + ".json";
}

namespace {

std::ofstream open_out(const std::string& path) {
  std::ofstream os(path);
  if (!os) fail(ErrorKind::Usage, "cannot write " + path);
  return os;
}

void write_json(const std::string& path, const json& j) {
  auto os = open_out(path);
  os << j.dump(2) << '\n';
}

json grid_json(const SpatialGrid& g, const char* kind) {
  return json{{"x0", g.x0}, {"h", g.h}, {"n", g.n}, {"kind", kind}};
}

struct Table {
  json grid;
  std::vector<std::vector<double>> rows;
};

Table read_table(const std::string& path, std::size_t min_cols) {
  std::ifstream is(path);
  if (!is) fail(ErrorKind::Usage, "cannot read " + path);
  Table t;
  std::string line;
  bool header = false;
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    if (line[0] == '#') {
      auto pos = line.find("grid:");
      if (pos != std::string::npos) t.grid = json::parse(line.substr(pos + 5));
      continue;
    }
    if (!header) {
      header = true;
      continue;
    }
    std::vector<double> row;
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ',')) {
      try {
        row.push_back(std::stod(cell));
      } catch (const std::exception&) {
        fail(ErrorKind::Usage, path + ": malformed number '" + cell + "'");
      }
    }
    if (row.size() < min_cols) fail(ErrorKind::Usage, path + ": too few columns");
    t.rows.push_back(std::move(row));
  }
  if (t.grid.is_null()) fail(ErrorKind::Usage, path + ": missing '# grid:' line");
  return t;
}

SpatialGrid grid_from(const json& j) {
  return SpatialGrid(j.at("x0").get<double>(), j.at("h").get<double>(), j.at("n").get<std::size_t>());
}

template <class Grid>
void write_columns(const std::string& path, const json& grid, const char* header,
                   const std::vector<double>& coord, const CVector& v) {
  auto os = open_out(path);
  os << "# grid: " << grid.dump() << '\n' << header << '\n';
  for (std::size_t i = 0; i < v.size(); ++i)
    os << format_double(coord[i]) << ',' << format_double(v[i].real()) << ',' << format_double(v[i].imag())
       << '\n';
}

std::vector<double> coords(const SpatialGrid& g) {
  std::vector<double> c(g.n);
  for (std::size_t j = 0; j < g.n; ++j) c[j] = g.x(j);
  return c;
}

std::vector<double> coords(const FrequencyGrid& g) {
  std::vector<double> c(g.n());
  for (std::size_t k = 0; k < g.n(); ++k) c[k] = g.s(k);
  return c;
}

CVector column_values(const Table& t, std::size_t re, std::size_t im, std::size_t n, const std::string& path) {
  if (t.rows.size() != n) fail(ErrorKind::Usage, path + ": row count does not match the grid");
  CVector v(n);
  for (std::size_t i = 0; i < n; ++i) v[i] = Complex(t.rows[i][re], t.rows[i][im]);
  return v;
}

}  // namespace

void write_space_function(const std::string& path, const SpaceFunction& f) {
  write_columns<SpatialGrid>(path, grid_json(f.grid, "space"), "coord,re,im", coords(f.grid), f.values);
}

void write_freq_function(const std::string& path, const FreqFunction& f) {
  write_columns<FrequencyGrid>(path, grid_json(f.grid.space, "frequency"), "coord,re,im", coords(f.grid),
                               f.values);
}

SpaceFunction read_space_function(const std::string& path) {
  Table t = read_table(path, 3);
  SpatialGrid g = grid_from(t.grid);
  return SpaceFunction(g, column_values(t, 1, 2, g.n, path));
}

FreqFunction read_freq_function(const std::string& path) {
  Table t = read_table(path, 3);
  FrequencyGrid g(grid_from(t.grid));
  return FreqFunction(g, column_values(t, 1, 2, g.n(), path));
}

void write_potential(const std::string& path, const Potential& u) {
  write_space_function(path, u.samples());
  json jumps = json::array();
  for (const auto& jp : u.jumps()) jumps.push_back({{"x", jp.x}, {"w", {jp.w.real(), jp.w.imag()}}});
  write_json(sidecar_path(path), json{{"real_valued", u.real_valued()}, {"jumps", jumps}});
}

Potential read_potential(const std::string& path) {
  SpaceFunction f = read_space_function(path);
  std::ifstream meta(sidecar_path(path));
  if (!meta) return Potential(std::move(f));
  json j = json::parse(meta);
  std::vector<Jump> jumps;
  for (const auto& e : j.value("jumps", json::array())) {
    const auto& w = e.at("w");
    Complex wc = w.is_array() ? Complex(w.at(0).get<double>(), w.at(1).get<double>()) : Complex(w.get<double>());
    jumps.push_back({e.at("x").get<double>(), wc});
  }
  bool real = j.value("real_valued", false);
  if (real)
    for (auto& z : f.values)
      if (z.imag() != 0.0) fail(ErrorKind::Usage, path + ": real_valued potential has complex samples");
  return Potential(std::move(f), real, std::move(jumps));
}

void write_scattering(const std::string& path, const ScatteringData& sd) {
  auto os = open_out(path);
  os << "# grid: " << grid_json(sd.freq.space, "frequency").dump() << '\n' << "s,re_a,im_a,re_b,im_b\n";
  for (std::size_t k = 0; k < sd.a.size(); ++k)
    os << format_double(sd.freq.s(k)) << ',' << format_double(sd.a[k].real()) << ','
       << format_double(sd.a[k].imag()) << ',' << format_double(sd.b[k].real()) << ','
       << format_double(sd.b[k].imag()) << '\n';
}

void write_reflection(const std::string& path, const ReflectionCoefficient& r) {
  auto os = open_out(path);
  os << "# grid: " << grid_json(r.freq.space, "frequency").dump() << '\n' << "s,re_r,im_r\n";
  for (std::size_t k = 0; k < r.r.size(); ++k)
    os << format_double(r.freq.s(k)) << ',' << format_double(r.r[k].real()) << ','
       << format_double(r.r[k].imag()) << '\n';
  write_json(sidecar_path(path), json{{"side", side_name(r.side)}, {"rho", r.rho}});
}

ReflectionCoefficient read_reflection(const std::string& path, Side fallback) {
  FreqFunction f = read_freq_function(path);
  Side side = fallback;
  std::ifstream meta(sidecar_path(path));
  if (meta) {
    json j = json::parse(meta);
    if (j.contains("side")) side = parse_side(j.at("side").get<std::string>());
  }
  return make_reflection(f, side);
}

void write_kernel(const std::string& path, const MarchenkoKernel& F) {
  write_space_function(path, F.function());
  write_json(sidecar_path(path), json{{"side", side_name(F.side)}});
}

void write_reconstruction(const std::string& path, const ReconstructionResult& rec) {
  const SpatialGrid& g = rec.u.grid();
  auto os = open_out(path);
  os << "# grid: " << grid_json(g, "space").dump() << '\n' << "x,re_u,im_u,residual\n";
  for (std::size_t j = 0; j < g.n; ++j) {
    // The blended value takes the residual of whichever side dominates.
    double z = blend_step((g.x(j) - rec.c) / rec.width);
    double res = z >= 0.5 ? rec.minus.residual[j] : rec.plus.residual[j];
    os << format_double(g.x(j)) << ',' << format_double(rec.u.values()[j].real()) << ','
       << format_double(rec.u.values()[j].imag()) << ',' << format_double(res) << '\n';
  }
  json summary{{"max_residual", rec.max_residual},
               {"right", {{"max_residual", rec.plus.max_residual}, {"norm_estimate", rec.plus.norm_estimate},
                          {"max_M", rec.plus.max_M}}},
               {"left", {{"max_residual", rec.minus.max_residual}, {"norm_estimate", rec.minus.norm_estimate},
                         {"max_M", rec.minus.max_M}}}};
  write_json(sidecar_path(path), json{{"overlap_gap", rec.overlap_gap},
                                      {"overlap_tol", rec.overlap_tol},
                                      {"blend", {{"c", rec.c}, {"width", rec.width}}},
                                      {"residual_summary", summary}});
}

void write_schrodinger(const std::string& path, const RVector& k, const CVector& R, const CVector& T) {
  auto os = open_out(path);
  os << "k,re_R,im_R,re_T,im_T\n";
  for (std::size_t i = 0; i < k.size(); ++i)
    os << format_double(k[i]) << ',' << format_double(R[i].real()) << ',' << format_double(R[i].imag()) << ','
       << format_double(T[i].real()) << ',' << format_double(T[i].imag()) << '\n';
}

}  // namespace miura::io
