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

#ifndef FERMICODE_BITMATH_HPP
#define FERMICODE_BITMATH_HPP

#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

namespace fermicode {

inline constexpr std::size_t kMaxBits = 64;
inline constexpr std::size_t kDefaultBudget = std::size_t{1} << 20;

/// Bit i (1-based) lives in bit i-1 of the mask.
inline std::uint64_t low_mask(std::size_t len) {
    return len >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << len) - 1;
}

/// Fixed-length vector over Z_2, indexed 1..size().
class BitVec {
   public:
    BitVec() = default;
    explicit BitVec(std::size_t len, std::uint64_t mask = 0);
    BitVec(std::initializer_list<int> bits);

    /// Parses "0110" (first character is index 1).
    static BitVec from_string(std::string_view text);
    static BitVec unit(std::size_t len, std::size_t index);

    std::size_t size() const {
        return len_;
    }
    std::uint64_t mask() const {
        return bits_;
    }
    bool get(std::size_t index) const;
    bool operator[](std::size_t index) const {
        return get(index);
    }
    void set(std::size_t index, bool value);
    void flip(std::size_t index);
    std::size_t weight() const;
    std::vector<std::size_t> support() const;

    BitVec operator+(const BitVec &other) const;
    BitVec &operator+=(const BitVec &other);
    /// Concatenation self (+) other.
    BitVec concat(const BitVec &other) const;
    BitVec slice(std::size_t first, std::size_t count) const;

    bool operator==(const BitVec &other) const = default;
    /// Lexicographic with index 1 most significant; shorter vectors first.
    bool operator<(const BitVec &other) const;

    std::string str() const;

   private:
    std::size_t len_ = 0;
    std::uint64_t bits_ = 0;
};

/// Dense matrix over Z_2, entries (i, j) 1-based.
class BitMat {
   public:
    BitMat() = default;
    BitMat(std::size_t rows, std::size_t cols);
    static BitMat identity(std::size_t n);
    static BitMat from_rows(const std::vector<std::vector<int>> &rows);

    std::size_t rows() const {
        return rows_;
    }
    std::size_t cols() const {
        return cols_;
    }
    bool get(std::size_t i, std::size_t j) const;
    void set(std::size_t i, std::size_t j, bool value);
    BitVec row(std::size_t i) const;
    BitVec col(std::size_t j) const;

    BitMat operator*(const BitMat &other) const;
    BitVec operator*(const BitVec &v) const;
    BitMat transpose() const;
    bool operator==(const BitMat &other) const = default;

    std::string str() const;

   private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<std::uint64_t> data_;
};

BitMat mat_inverse_mod2(const BitMat &a);

/// Monomial = set of variables, bit i-1 for variable x_i. Zero mask is the constant 1.
using Monomial = std::uint64_t;

/// Graded order: degree first, then lexicographic on sorted index lists.
bool monomial_less(Monomial a, Monomial b);
std::string monomial_str(Monomial m);

/// Boolean polynomial in algebraic normal form over x_1..x_n.
class BoolPoly {
   public:
    BoolPoly() = default;
    explicit BoolPoly(std::size_t num_vars) : num_vars_(num_vars) {
    }
    /// Sums the given monomials mod 2.
    BoolPoly(std::size_t num_vars, std::vector<Monomial> monomials);

    static BoolPoly zero(std::size_t num_vars) {
        return BoolPoly(num_vars);
    }
    static BoolPoly constant(std::size_t num_vars, bool value);
    static BoolPoly variable(std::size_t num_vars, std::size_t index);
    static BoolPoly monomial(std::size_t num_vars, const std::vector<std::size_t> &indices);
    /// Affine function c + sum_{i in mask} x_i.
    static BoolPoly linear(std::size_t num_vars, std::uint64_t mask, bool constant = false);
    /// Moebius transform of a truth table indexed by input mask.
    static BoolPoly from_truth_table(std::size_t num_vars, const std::vector<bool> &table);
    static BoolPoly parse(std::string_view text, std::size_t num_vars);

    std::size_t num_vars() const {
        return num_vars_;
    }
    const std::vector<Monomial> &monomials() const {
        return monos_;
    }
    std::size_t size() const {
        return monos_.size();
    }
    bool is_zero() const {
        return monos_.empty();
    }
    bool constant_term() const {
        return !monos_.empty() && monos_.front() == 0;
    }
    bool is_constant() const;
    std::size_t degree() const;
    /// Variables that occur in some monomial.
    std::uint64_t support() const;

    bool eval(const BitVec &x) const;
    bool eval_mask(std::uint64_t x) const {
        bool r = false;
        for (Monomial m : monos_) {
            r ^= (x & m) == m;
        }
        return r;
    }

    BoolPoly &operator+=(const BoolPoly &other);
    bool operator==(const BoolPoly &other) const = default;

    std::string str() const;

   private:
    std::size_t num_vars_ = 0;
    std::vector<Monomial> monos_;
};

BoolPoly bp_add(const BoolPoly &a, const BoolPoly &b);
BoolPoly bp_mul(const BoolPoly &a, const BoolPoly &b, std::size_t budget = kDefaultBudget);
/// Substitutes subs[i-1] for x_i.
BoolPoly bp_compose(const BoolPoly &p, const std::vector<BoolPoly> &subs, std::size_t budget = kDefaultBudget);
bool bp_eval(const BoolPoly &p, const BitVec &x);

inline BoolPoly operator+(const BoolPoly &a, const BoolPoly &b) {
    return bp_add(a, b);
}
inline BoolPoly operator*(const BoolPoly &a, const BoolPoly &b) {
    return bp_mul(a, b);
}

/// Re-indexes variables: x_i becomes x_{i+offset} over new_num_vars.
BoolPoly shift_vars(const BoolPoly &p, std::size_t offset, std::size_t new_num_vars);

}  // namespace fermicode

template <>
struct std::hash<fermicode::BitVec> {
    std::size_t operator()(const fermicode::BitVec &v) const noexcept {
        return std::hash<std::uint64_t>{}(v.mask() * 0x9E3779B97F4A7C15ull ^ v.size());
    }
};

#endif
