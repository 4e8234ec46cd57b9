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

#include <complex>
#include <cstddef>

namespace miura::fft {

// Unnormalized in-place transforms of length n backed by FFTW.
// forward: X_k = sum_j x_j e^{-2 pi i jk/n}; backward uses e^{+...}.
void forward(std::complex<double>* data, std::size_t n);
void backward(std::complex<double>* data, std::size_t n);

}  // namespace miura::fft
