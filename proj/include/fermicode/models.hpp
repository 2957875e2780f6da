// Copyright 2026 The fermicode Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef FERMICODE_MODELS_HPP
#define FERMICODE_MODELS_HPP

#include <utility>
#include <vector>

#include "fermicode/transform.hpp"

namespace fermicode {

/// Undirected nearest-neighbour edges of a rows x cols grid; site (r, c) is r*cols + c + 1.
/// Rows wrap around laterally when periodic and cols > 2.
std::vector<std::pair<std::size_t, std::size_t>> grid_edges(std::size_t rows, std::size_t cols, bool periodic_lateral);

/// Spin-up modes 1..M, spin-down M+1..2M with M = rows*cols.
FermionHamiltonian gen_hubbard(std::size_t rows = 2, std::size_t cols = 5, double t = 1.0, double U = 1.0,
                               bool periodic_lateral = true);

struct H2Params {
    double h11 = 0, h22 = 0, h1331 = 0, h2442 = 0, h1221 = 0, h1212 = 0;
};

/// Minimal-basis hydrogen molecule on 4 spin orbitals; zero-coefficient terms are left out.
FermionHamiltonian gen_h2(const H2Params &h);

}  // namespace fermicode

#endif
