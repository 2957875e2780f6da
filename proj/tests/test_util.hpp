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

// Independent reference implementations used as test oracles.

#ifndef FERMICODE_TESTS_TEST_UTIL_HPP
#define FERMICODE_TESTS_TEST_UTIL_HPP

#include <array>
#include <cmath>
#include <algorithm>
#include <exception>
#include <complex>
#include <random>
#include <vector>

#include "fermicode/codes.hpp"
#include "fermicode/pauli.hpp"
#include "fermicode/transform.hpp"

namespace fermicode::testing {

using Dense = std::vector<std::vector<Complex>>;

inline Dense dense_zero(std::size_t d) {
    return Dense(d, std::vector<Complex>(d));
}

inline Dense dense_identity(std::size_t d) {
    Dense m = dense_zero(d);
    for (std::size_t i = 0; i < d; ++i) {
        m[i][i] = 1.0;
    }
    return m;
}

inline Dense dense_mul(const Dense &a, const Dense &b) {
    std::size_t d = a.size();
    Dense c = dense_zero(d);
    for (std::size_t i = 0; i < d; ++i) {
        for (std::size_t k = 0; k < d; ++k) {
            if (a[i][k] == Complex(0.0)) {
                continue;
            }
            for (std::size_t j = 0; j < d; ++j) {
                c[i][j] += a[i][k] * b[k][j];
            }
        }
    }
    return c;
}

inline Dense dense_add(const Dense &a, const Dense &b, Complex s = 1.0) {
    Dense c = a;
    for (std::size_t i = 0; i < a.size(); ++i) {
        for (std::size_t j = 0; j < a.size(); ++j) {
            c[i][j] += s * b[i][j];
        }
    }
    return c;
}

inline double dense_max_diff(const Dense &a, const Dense &b) {
    double m = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        for (std::size_t j = 0; j < a.size(); ++j) {
            m = std::max(m, std::abs(a[i][j] - b[i][j]));
        }
    }
    return m;
}

inline Dense dense_adjoint(const Dense &a) {
    Dense c = dense_zero(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        for (std::size_t j = 0; j < a.size(); ++j) {
            c[j][i] = std::conj(a[i][j]);
        }
    }
    return c;
}

/// Kronecker product of 2x2 letter matrices; qubit 1 is the least significant index bit.
inline Dense dense_pauli(const PauliString &p) {
    using M2 = std::array<std::array<Complex, 2>, 2>;
    const Complex i(0, 1);
    auto mat = [&](PauliLetter l) -> M2 {
        switch (l) {
            case PauliLetter::X:
                return M2{{{0, 1}, {1, 0}}};
            case PauliLetter::Y:
                return M2{{{0, -i}, {i, 0}}};
            case PauliLetter::Z:
                return M2{{{1, 0}, {0, -1}}};
            default:
                return M2{{{1, 0}, {0, 1}}};
        }
    };
    std::size_t n = p.num_qubits();
    std::size_t d = std::size_t{1} << n;
    Dense m = dense_zero(d);
    for (std::size_t r = 0; r < d; ++r) {
        for (std::size_t c = 0; c < d; ++c) {
            Complex v = 1.0;
            for (std::size_t q = 0; q < n && v != Complex(0.0); ++q) {
                v *= mat(p.letter(q + 1))[(r >> q) & 1][(c >> q) & 1];
            }
            m[r][c] = v;
        }
    }
    return m;
}

inline Dense dense_op(const QubitOperator &op) {
    std::size_t d = std::size_t{1} << op.num_qubits();
    Dense m = dense_zero(d);
    for (const auto &[s, c] : op.sorted_terms()) {
        m = dense_add(m, dense_pauli(s), c);
    }
    return m;
}

/// Matrix of c_j or c_j^dagger in the occupation basis, index bit j-1 = nu_j.
inline Dense dense_fermion(std::size_t N, std::size_t j, bool dagger) {
    std::size_t d = std::size_t{1} << N;
    Dense m = dense_zero(d);
    for (std::size_t nu = 0; nu < d; ++nu) {
        bool occ = (nu >> (j - 1)) & 1;
        if (occ == dagger) {
            continue;
        }
        int parity = 0;
        for (std::size_t i = 1; i < j; ++i) {
            parity += (nu >> (i - 1)) & 1;
        }
        m[nu ^ (std::size_t{1} << (j - 1))][nu] = (parity % 2) ? -1.0 : 1.0;
    }
    return m;
}

inline Dense dense_fermion_term(std::size_t N, const FermionTerm &t) {
    Dense m = dense_identity(std::size_t{1} << N);
    for (const auto &op : t.ops) {
        m = dense_mul(m, dense_fermion(N, op.mode, op.dagger));
    }
    for (auto &row : m) {
        for (auto &x : row) {
            x *= t.coeff;
        }
    }
    return m;
}

inline Dense dense_fermion_hamiltonian(const FermionHamiltonian &H) {
    Dense m = dense_zero(std::size_t{1} << H.N);
    for (const auto &t : H.terms) {
        m = dense_add(m, dense_fermion_term(H.N, t));
    }
    return m;
}

inline BoolPoly random_poly(std::size_t n, std::mt19937_64 &rng, double density = 0.3) {
    std::bernoulli_distribution pick(density);
    std::vector<Monomial> monos;
    for (std::uint64_t m = 0; m < (std::uint64_t{1} << n); ++m) {
        if (pick(rng)) {
            monos.push_back(m);
        }
    }
    return BoolPoly(n, monos);
}

inline std::vector<bool> truth_table(const BoolPoly &p) {
    std::vector<bool> t(std::size_t{1} << p.num_vars());
    for (std::uint64_t x = 0; x < t.size(); ++x) {
        bool v = false;
        for (Monomial m : p.monomials()) {
            v ^= (x & m) == m;
        }
        t[x] = v;
    }
    return t;
}

inline BitMat random_invertible(std::size_t N, std::mt19937_64 &rng) {
    std::bernoulli_distribution coin(0.5);
    while (true) {
        BitMat a(N, N);
        for (std::size_t i = 1; i <= N; ++i) {
            for (std::size_t j = 1; j <= N; ++j) {
                a.set(i, j, coin(rng));
            }
        }
        try {
            mat_inverse_mod2(a);
            return a;
        } catch (const std::exception &) {
        }
    }
}

/// The weight-l operator map as a literal product, with the update operator summed over all t.
inline QubitOperator literal_term(const Code &code, const FermionTerm &term) {
    std::size_t n = code.num_qubits();
    std::size_t l = term.ops.size();
    QubitOperator I = QubitOperator::identity(n);
    BitVec q(code.num_modes());
    int sign = 1;
    for (std::size_t v = 0; v < l; ++v) {
        q.flip(term.ops[v].mode);
        for (std::size_t w = v + 1; w < l; ++w) {
            if (term.ops[v].mode > term.ops[w].mode) {
                sign = -sign;
            }
        }
    }
    auto eps = update_epsilon(code, q);
    QubitOperator U(n);
    for (std::uint64_t t = 0; t < (std::uint64_t{1} << n); ++t) {
        QubitOperator f = QubitOperator::term(PauliString::x_string(n, t));
        for (std::size_t k = 0; k < n; ++k) {
            QubitOperator x = extract(eps[k], n);
            f = op_mul(f, op_scale(I + op_scale(x, ((t >> k) & 1) ? -1.0 : 1.0), 0.5));
        }
        U += f;
    }
    QubitOperator r = op_scale(U, term.coeff * static_cast<double>(sign));
    for (std::size_t x = 0; x < l; ++x) {
        std::size_t a = term.ops[x].mode;
        int s = 1;
        for (std::size_t y = x + 1; y < l; ++y) {
            if (term.ops[y].mode == a) {
                s = -s;
            }
        }
        double c = s * (term.ops[x].dagger ? -1.0 : 1.0);
        QubitOperator proj = op_scale(I - op_scale(extract(code.decode(a), n), c), 0.5);
        r = op_mul(r, op_mul(proj, extract(parity_function(code, a), n)));
    }
    return r;
}

inline FermionTerm adjoint_term(const FermionTerm &t) {
    FermionTerm r{std::conj(t.coeff), {}};
    for (auto it = t.ops.rbegin(); it != t.ops.rend(); ++it) {
        r.ops.push_back({it->mode, !it->dagger});
    }
    return r;
}

/// Random hermitian, particle-conserving Hamiltonian with creators and annihilators in arbitrary order.
inline FermionHamiltonian random_hamiltonian(std::size_t N, std::size_t terms, std::mt19937_64 &rng,
                                             std::size_t max_pairs = 2) {
    std::uniform_int_distribution<std::size_t> mode(1, N), pairs(1, max_pairs);
    std::normal_distribution<double> g;
    FermionHamiltonian H(N);
    for (std::size_t k = 0; k < terms; ++k) {
        std::size_t p = pairs(rng);
        std::vector<FermionOp> ops;
        for (std::size_t i = 0; i < p; ++i) {
            ops.push_back(cr(mode(rng)));
            ops.push_back(an(mode(rng)));
        }
        std::shuffle(ops.begin(), ops.end(), rng);
        FermionTerm t{Complex(g(rng), g(rng)), ops};
        H.terms.push_back(t);
        H.terms.push_back(adjoint_term(t));
    }
    return H;
}

}  // namespace fermicode::testing

#endif
