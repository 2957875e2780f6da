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

#ifndef FERMICODE_FOCK_ORACLE_HPP
#define FERMICODE_FOCK_ORACLE_HPP

#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "fermicode/transform.hpp"

namespace fermicode {

/// Sparse state over occupation vectors (or qubit words); zero amplitudes are dropped.
struct SparseState {
    std::size_t len = 0;
    std::unordered_map<BitVec, Complex> amps;

    SparseState() = default;
    explicit SparseState(std::size_t length) : len(length) {
    }
    static SparseState basis(const BitVec &v, Complex c = 1.0);
    void add(const BitVec &v, Complex c);
    Complex amplitude(const BitVec &v) const;
    /// Largest amplitude difference over the union of supports.
    double max_diff(const SparseState &other) const;
};

using FockStateVector = SparseState;
using QubitStateVector = SparseState;

struct FermionImage {
    Complex coeff;
    BitVec nu;
};

/// Applies the operators right to left with Jordan-Wigner signs; nullopt if the state is annihilated.
std::optional<FermionImage> apply_fermion_term(const FermionTerm &term, const BitVec &nu);
FockStateVector apply_hamiltonian_fock(const FermionHamiltonian &H, const FockStateVector &s);
QubitStateVector apply_qubit_operator(const QubitOperator &op, const QubitStateVector &s);

struct VerificationFailure {
    BitVec nu;
    std::string detail;
};

struct EquivalenceReport {
    enum class Status { Pass, Mismatch, Incompatible };
    Status status = Status::Pass;
    double max_deviation = 0.0;
    std::size_t checked = 0;
    std::size_t failure_count = 0;
    std::size_t incompatible_count = 0;
    /// First failures only.
    std::vector<VerificationFailure> failures;

    bool passed() const {
        return status == Status::Pass;
    }
    std::string status_str() const;
    std::string summary() const;
    std::string to_json() const;
};

EquivalenceReport verify_equivalence(const Code &code, const FermionHamiltonian &H, const QubitOperator &Hq,
                                     const std::vector<BitVec> &basis, double tol = 1e-9,
                                     std::size_t max_listed = 20);

struct AnticommutationReport {
    bool passed = true;
    std::size_t checked = 0;
    std::vector<std::string> failures;
};

AnticommutationReport verify_anticommutation(const Code &code, double tol = 1e-12);

}  // namespace fermicode

#endif
