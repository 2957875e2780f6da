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

#include "fermicode/models.hpp"

#include "fermicode/errors.hpp"

namespace fermicode {

std::vector<std::pair<std::size_t, std::size_t>> grid_edges(std::size_t rows, std::size_t cols, bool periodic_lateral) {
    if (rows * cols < 1) {
        throw PreconditionError("lattice needs at least one site");
    }
    auto site = [cols](std::size_t r, std::size_t c) { return r * cols + c + 1; };
    std::vector<std::pair<std::size_t, std::size_t>> edges;
    for (std::size_t r = 0; r < rows; ++r) {
        for (std::size_t c = 0; c + 1 < cols; ++c) {
            edges.emplace_back(site(r, c), site(r, c + 1));
        }
        if (periodic_lateral && cols > 2) {
            edges.emplace_back(site(r, 0), site(r, cols - 1));
        }
    }
    for (std::size_t r = 0; r + 1 < rows; ++r) {
        for (std::size_t c = 0; c < cols; ++c) {
            edges.emplace_back(site(r, c), site(r + 1, c));
        }
    }
    return edges;
}

FermionHamiltonian gen_hubbard(std::size_t rows, std::size_t cols, double t, double U, bool periodic_lateral) {
    std::size_t M = rows * cols;
    auto edges = grid_edges(rows, cols, periodic_lateral);
    FermionHamiltonian H(2 * M);
    if (t != 0.0) {
        for (std::size_t spin = 0; spin < 2; ++spin) {
            std::size_t off = spin * M;
            for (auto [i, j] : edges) {
                H.add(-t, {cr(i + off), an(j + off)});
                H.add(-t, {cr(j + off), an(i + off)});
            }
        }
    }
    if (U != 0.0) {
        for (std::size_t j = 1; j <= M; ++j) {
            H.add(U, {cr(j), an(j), cr(M + j), an(M + j)});
        }
    }
    return H;
}

FermionHamiltonian gen_h2(const H2Params &h) {
    FermionHamiltonian H(4);
    auto add = [&](double c, std::vector<FermionOp> ops) {
        if (c != 0.0) {
            H.add(c, std::move(ops));
        }
    };
    add(-h.h11, {cr(1), an(1)});
    add(-h.h11, {cr(3), an(3)});
    add(-h.h22, {cr(2), an(2)});
    add(-h.h22, {cr(4), an(4)});
    add(h.h1331, {cr(1), cr(3), an(3), an(1)});
    add(h.h2442, {cr(2), cr(4), an(4), an(2)});
    add(h.h1221, {cr(1), cr(4), an(4), an(1)});
    add(h.h1221, {cr(3), cr(2), an(2), an(3)});
    add(h.h1221 - h.h1212, {cr(1), cr(2), an(2), an(1)});
    add(h.h1221 - h.h1212, {cr(3), cr(4), an(4), an(3)});
    add(h.h1212, {cr(1), cr(4), an(3), an(2)});
    add(h.h1212, {cr(2), cr(3), an(4), an(1)});
    add(h.h1212, {cr(1), cr(3), an(4), an(2)});
    add(h.h1212, {cr(2), cr(4), an(3), an(1)});
    return H;
}

}  // namespace fermicode
