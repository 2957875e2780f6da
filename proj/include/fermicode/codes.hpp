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

#ifndef FERMICODE_CODES_HPP
#define FERMICODE_CODES_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "fermicode/bitmath.hpp"

namespace fermicode {

/// Modes (1-based) whose occupation never exceeds max_weight in the encoded space.
struct SegmentBlock {
    std::vector<std::size_t> modes;
    std::size_t max_weight = 0;
    bool operator==(const SegmentBlock &) const = default;
};

/// Encoding e: Z_2^N -> Z_2^n and decoding d: Z_2^n -> Z_2^N as polynomial vectors.
/// Affine parts live in the constant monomials.
class Code {
   public:
    Code() = default;
    Code(std::string name, std::vector<BoolPoly> encode, std::vector<BoolPoly> decode);

    const std::string &name() const {
        return name_;
    }
    std::size_t num_modes() const {
        return N_;
    }
    std::size_t num_qubits() const {
        return n_;
    }
    const std::vector<BoolPoly> &encode() const {
        return enc_;
    }
    const std::vector<BoolPoly> &decode() const {
        return dec_;
    }
    /// Component e_i, 1-based.
    const BoolPoly &encode(std::size_t i) const;
    /// Component d_j, 1-based.
    const BoolPoly &decode(std::size_t j) const;

    BitVec encode_vec(const BitVec &nu) const;
    BitVec decode_vec(const BitVec &omega) const;
    std::uint64_t encode_mask(std::uint64_t nu) const;
    std::uint64_t decode_mask(std::uint64_t omega) const;

    bool encode_is_linear() const;
    bool decode_is_linear() const;
    BitVec encode_affine() const;
    BitVec decode_affine() const;
    /// n x N matrix of the degree-one encode part; requires encode_is_linear().
    BitMat encode_matrix() const;
    /// N x n matrix of the degree-one decode part; requires decode_is_linear().
    BitMat decode_matrix() const;

    const std::optional<BitMat> &matrix_a() const {
        return a_;
    }
    const std::optional<BitMat> &matrix_a_inv() const {
        return a_inv_;
    }
    const std::vector<SegmentBlock> &segments() const {
        return segments_;
    }
    /// Occupation vectors decoded from words outside the encoded space.
    const std::vector<BitVec> &degenerate_images() const {
        return degenerate_;
    }

    Code &set_matrices(BitMat a, BitMat a_inv);
    Code &set_segments(std::vector<SegmentBlock> segments);
    Code &set_degenerate_images(std::vector<BitVec> images);
    Code &set_name(std::string name);

   private:
    std::string name_;
    std::size_t N_ = 0;
    std::size_t n_ = 0;
    std::vector<BoolPoly> enc_;
    std::vector<BoolPoly> dec_;
    std::optional<BitMat> a_;
    std::optional<BitMat> a_inv_;
    std::vector<SegmentBlock> segments_;
    std::vector<BitVec> degenerate_;
};

/// Square invertible linear code e = A nu, d = A^-1 omega.
Code make_linear_code(const BitMat &a, std::string name = "linear");
/// Code from matrices plus affine vectors: e = E nu + e0, d = D omega + d0.
Code make_affine_code(const BitMat &e, const BitVec &e0, const BitMat &d, const BitVec &d0, std::string name);

BitMat parity_matrix(std::size_t N);
BitMat bravyi_kitaev_matrix(std::size_t N);

Code make_jordan_wigner(std::size_t N);
Code make_parity_code(std::size_t N);
Code make_bravyi_kitaev(std::size_t N);

enum class ChecksumFlavor { Even, Odd };
Code make_checksum(std::size_t N, ChecksumFlavor flavor);

Code make_binary_addressing_k1(std::size_t r);
Code make_binary_addressing_k2(std::size_t r);

/// 1 iff the weight of the 2K inputs exceeds K, as the sum of indicator products.
BoolPoly binary_switch(std::size_t K);
Code make_segment_subcode(std::size_t K);
Code make_segment_code(std::size_t K, std::size_t segments);

/// The two-qubit code for the minimal-basis hydrogen molecule.
Code make_h2_code();

Code concat_codes(const Code &c1, const Code &c2);

struct BasisSpec {
    std::size_t N = 0;
    std::vector<std::vector<std::size_t>> suits;
    std::vector<std::vector<std::size_t>> target_weights;

    static BasisSpec full_fock(std::size_t N);
    static BasisSpec fixed_weight(std::size_t N, std::vector<std::size_t> weights);
    /// "1-10:2;11-20:2" or "1,2:1;3,4:1"; several weights as "0,2,4".
    static BasisSpec parse(const std::string &text, std::size_t N);
    /// Per-segment weights 0..max_weight, remaining modes unconstrained.
    static BasisSpec from_segments(const Code &code);
    void validate() const;
    bool contains(const BitVec &nu) const;
};

/// Lexicographic, index 1 most significant.
std::vector<BitVec> enumerate_basis(const BasisSpec &spec);

struct CodeValidationReport {
    std::size_t basis_size = 0;
    std::size_t words_scanned = 0;
    std::vector<BitVec> round_trip_failures;
    /// Words decoding outside the basis set and not designated degenerate.
    std::vector<std::pair<BitVec, BitVec>> images_outside;
    std::size_t degenerate_words = 0;
    bool one_to_one = true;
    std::map<std::size_t, std::size_t> image_weights;

    bool round_trip_ok() const {
        return round_trip_failures.empty();
    }
    bool ok() const {
        return round_trip_failures.empty() && images_outside.empty();
    }
    std::string summary() const;
};

/// Scans all 2^n words; throws ResourceError if 2^n exceeds word_budget.
CodeValidationReport validate_code(const Code &code, const BasisSpec &spec, std::size_t word_budget = kDefaultBudget);

}  // namespace fermicode

#endif
