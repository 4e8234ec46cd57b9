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

#include "miura/fft.hpp"

#include <fftw3.h>

#include <map>
#include <mutex>
#include <utility>
#include <vector>

namespace miura::fft {
namespace {

// FFTW planning is not thread-safe; execution of a finished plan on new
// arrays is. Plans are cached per (size, direction) and never destroyed.
struct PlanCache {
  std::mutex mutex;
  std::map<std::pair<std::size_t, int>, fftw_plan> plans;

  fftw_plan get(std::size_t n, int sign) {
    std::lock_guard lock(mutex);
    auto key = std::make_pair(n, sign);
    auto it = plans.find(key);
    if (it != plans.end()) return it->second;
    // Plans are used in place, so they must be created in place.
    std::vector<fftw_complex> buf(n);
    fftw_plan p = fftw_plan_dft_1d(static_cast<int>(n), buf.data(), buf.data(), sign,
                                   FFTW_ESTIMATE | FFTW_UNALIGNED);
    plans.emplace(key, p);
    return p;
  }
};

PlanCache& cache() {
  static PlanCache c;
  return c;
}

void run(std::complex<double>* data, std::size_t n, int sign) {
  if (n <= 1) return;
  fftw_plan p = cache().get(n, sign);
  auto* d = reinterpret_cast<fftw_complex*>(data);
  fftw_execute_dft(p, d, d);
}

}  // namespace

void forward(std::complex<double>* data, std::size_t n) { run(data, n, FFTW_FORWARD); }
void backward(std::complex<double>* data, std::size_t n) { run(data, n, FFTW_BACKWARD); }

}  // namespace miura::fft
