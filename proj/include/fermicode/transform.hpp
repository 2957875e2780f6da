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

#ifndef FERMICODE_TRANSFORM_HPP
#define FERMICODE_TRANSFORM_HPP

#include <map>
#include <string>
#include <unordered_map>
#include <vector>

#include "fermicode/codes.hpp"
#include "fermicode/pauli.hpp"

namespace fermicode {

struct FermionOp {
    std::size_t mode = 0;
    bool dagger = false;
    bool operator==(const FermionOp &) const = default;
};

inline FermionOp cr(std::size_t mode) {
    return {mode, true};
}
inline FermionOp an(std::size_t mode) {
    return {mode, false};
}

/// coeff * ops[0] ops[1] ... ; the last operator acts first.
struct FermionTerm {
    Complex coeff = 1.0;
    std::vector<FermionOp> ops;

    /// "+1 -2" style.
    std::string ops_str() const;
    bool is_blocked() const;
    bool conserves_number() const;
};

struct FermionHamiltonian {
    std::size_t N = 0;
    std::vector<FermionTerm> terms;

    FermionHamiltonian() = default;
    explicit FermionHamiltonian(std::size_t num_modes) : N(num_modes) {
    }
    FermionHamiltonian &add(Complex coeff, std::vector<FermionOp> ops);
    void validate() const;
};

struct TransformOptions {
    double prune_epsilon = kDefaultPruneEpsilon;
    std::size_t budget = kDefaultBudget;
};

/// p_j = sum_{i<j} d_i.
BoolPoly parity_function(const Code &code, std::size_t j);
/// epsilon^q(omega) = e(d(omega) + q) + omega.
std::vector<BoolPoly> update_epsilon(const Code &code, const BitVec &q, std::size_t budget = kDefaultBudget);
QubitOperator update_operator(const Code &code, const BitVec &q, const TransformOptions &opts = {});

/// Caches parity functions, projectors and update operators of one code.
class CodeTransformer {
   public:
    explicit CodeTransformer(Code code, TransformOptions opts = {});

    const Code &code() const {
        return code_;
    }
    const BoolPoly &parity(std::size_t j) const;
    QubitOperator term(const FermionTerm &t);
    const QubitOperator &update(std::uint64_t q);
    QubitOperator pair(std::size_t i, std::size_t j);

   private:
    const QubitOperator &projector(std::size_t mode, bool value);
    QubitOperator apply_update(std::uint64_t q, const QubitOperator &diag);

    Code code_;
    TransformOptions opts_;
    std::vector<BoolPoly> parity_;
    bool linear_encode_;
    BitMat enc_lin_;
    std::map<std::pair<std::size_t, bool>, QubitOperator> projectors_;
    std::unordered_map<std::uint64_t, QubitOperator> updates_;
};

QubitOperator transform_term(const Code &code, const FermionTerm &term, const TransformOptions &opts = {});

struct TransformResult {
    QubitOperator op;
    HermiticityReport hermiticity;
    std::size_t fermion_terms = 0;
};

/// Sums transformed terms in input order; never throws on non-hermitian results, see hermiticity.
TransformResult transform_hamiltonian(const Code &code, const FermionHamiltonian &H, const TransformOptions &opts = {});

struct LinearSets {
    std::vector<std::size_t> parity_set;
    std::vector<std::size_t> flip_set;
    std::vector<std::size_t> update_set;
};

LinearSets linear_sets(const Code &code, std::size_t j);
/// c_j (dagger=false) or c_j^dagger via parity, flip and update sets.
QubitOperator transform_op_linear(const Code &code, std::size_t j, bool dagger);

/// Single operator between the subspaces of two codes: c_j maps even-code words to odd-code words,
/// c_j^dagger maps odd-code words back.
QubitOperator transform_single_two_codes(const Code &code_even, const Code &code_odd, std::size_t j, bool dagger,
                                         const TransformOptions &opts = {});
/// Update for a transition between codes: sum_t X^t prod_k (I + (-1)^t_k X[eps_k])/2,
/// eps(omega) = e_out(d_in(omega) + q) + omega.
QubitOperator cross_update_operator(const Code &code_in, const Code &code_out, const BitVec &q,
                                    const TransformOptions &opts = {});

/// c_i^dagger c_j as a block.
QubitOperator transform_pair(const Code &code, std::size_t i, std::size_t j, const TransformOptions &opts = {});

/// Rewrites every term so operators alternate creation/annihilation, starting with creation.
FermionHamiltonian normal_order_blocks(const FermionHamiltonian &H);

/// Dresses inter-segment c_i^dagger c_j blocks so they vanish on states that would leave the
/// per-segment weight bound.
FermionHamiltonian adjust_for_segments(const FermionHamiltonian &H, const std::vector<SegmentBlock> &segments);
FermionHamiltonian adjust_for_segments(const FermionHamiltonian &H, const std::vector<std::vector<std::size_t>> &segments,
                                       std::size_t K);

}  // namespace fermicode

#endif
