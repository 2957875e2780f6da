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

#ifndef FERMICODE_PAULI_HPP
#define FERMICODE_PAULI_HPP

#include <complex>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "fermicode/bitmath.hpp"

namespace fermicode {

using Complex = std::complex<double>;

inline constexpr double kDefaultPruneEpsilon = 1e-12;

enum class PauliLetter : std::uint8_t { I = 0, X = 1, Y = 2, Z = 3 };

/// Bit masks of a Pauli string; qubit j carries X if only x has bit j-1, Z if only z, Y if both.
struct PauliKey {
    std::uint64_t x = 0;
    std::uint64_t z = 0;
    bool operator==(const PauliKey &) const = default;
};

struct PauliKeyHash {
    std::size_t operator()(const PauliKey &k) const noexcept {
        std::uint64_t h = k.x * 0x9E3779B97F4A7C15ull;
        h ^= (k.z + 0x632BE59BD9B4E019ull + (h << 6) + (h >> 2));
        return static_cast<std::size_t>(h);
    }
};

/// Hermitian Pauli string on n qubits (Y = iXZ, no phase stored).
class PauliString {
   public:
    PauliString() = default;
    explicit PauliString(std::size_t n, PauliKey key = {});
    static PauliString identity(std::size_t n) {
        return PauliString(n);
    }
    static PauliString single(std::size_t n, std::size_t qubit, PauliLetter letter);
    static PauliString x_string(std::size_t n, std::uint64_t mask);
    static PauliString z_string(std::size_t n, std::uint64_t mask);
    /// "I" or factors like "X1*Z3*Y4".
    static PauliString parse(std::string_view text, std::size_t n);

    std::size_t num_qubits() const {
        return n_;
    }
    const PauliKey &key() const {
        return key_;
    }
    PauliLetter letter(std::size_t qubit) const;
    std::size_t weight() const;
    bool is_identity() const {
        return !key_.x && !key_.z;
    }

    bool operator==(const PauliString &) const = default;
    /// Canonical order: weight, then (index, letter) lists with X < Y < Z.
    bool operator<(const PauliString &other) const;

    std::string str() const;

   private:
    std::size_t n_ = 0;
    PauliKey key_;
};

struct PauliProduct {
    Complex phase;
    PauliString string;
};

/// Operator product a*b (b acts first).
PauliProduct pauli_mul(const PauliString &a, const PauliString &b);
/// Exponent k of the phase i^k of a*b, for masks.
int pauli_mul_phase(const PauliKey &a, const PauliKey &b);

class QubitOperator {
   public:
    using TermMap = std::unordered_map<PauliKey, Complex, PauliKeyHash>;

    explicit QubitOperator(std::size_t n = 0, double prune_epsilon = kDefaultPruneEpsilon);
    static QubitOperator identity(std::size_t n, Complex c = 1.0, double prune_epsilon = kDefaultPruneEpsilon);
    static QubitOperator term(const PauliString &s, Complex c = 1.0, double prune_epsilon = kDefaultPruneEpsilon);

    std::size_t num_qubits() const {
        return n_;
    }
    double prune_epsilon() const {
        return eps_;
    }
    std::size_t size() const {
        return terms_.size();
    }
    bool empty() const {
        return terms_.empty();
    }
    const TermMap &terms() const {
        return terms_;
    }

    void add(const PauliString &s, Complex c);
    void add(const PauliKey &k, Complex c);
    Complex coefficient(const PauliString &s) const;
    std::vector<std::pair<PauliString, Complex>> sorted_terms() const;
    void prune();

    QubitOperator &operator+=(const QubitOperator &other);
    QubitOperator &operator-=(const QubitOperator &other);
    QubitOperator &operator*=(Complex c);
    QubitOperator adjoint() const;

    std::string str() const;

   private:
    std::size_t n_;
    double eps_;
    TermMap terms_;
};

QubitOperator op_add(const QubitOperator &a, const QubitOperator &b);
QubitOperator op_mul(const QubitOperator &a, const QubitOperator &b);
QubitOperator op_scale(const QubitOperator &a, Complex c);

inline QubitOperator operator+(const QubitOperator &a, const QubitOperator &b) {
    return op_add(a, b);
}
inline QubitOperator operator-(const QubitOperator &a, const QubitOperator &b) {
    QubitOperator r = a;
    r -= b;
    return r;
}
inline QubitOperator operator*(const QubitOperator &a, const QubitOperator &b) {
    return op_mul(a, b);
}
inline QubitOperator operator*(Complex c, const QubitOperator &a) {
    return op_scale(a, c);
}

/// Max coefficient difference is at most tol.
bool approx_equal(const QubitOperator &a, const QubitOperator &b, double tol = 1e-12);

/// Diagonal operator with entries (-1)^f(omega), expanded into Z strings.
QubitOperator extract(const BoolPoly &f, std::size_t n, std::size_t budget = kDefaultBudget);
/// I - 2 prod_{j in S} (I - Z_j)/2.
QubitOperator cphase_expand(const std::vector<std::size_t> &indices, std::size_t n);

struct HermiticityReport {
    bool hermitian = true;
    std::optional<PauliString> witness;
    Complex witness_coeff;
};
HermiticityReport check_hermitian(const QubitOperator &op, double tol = 1e-12);

struct PauliStats {
    std::size_t terms = 0;
    std::size_t gate_weight = 0;
    bool has_identity = false;
    std::size_t terms_without_identity() const {
        return terms - (has_identity ? 1 : 0);
    }
};
PauliStats count_stats(const QubitOperator &op);

}  // namespace fermicode

#endif
