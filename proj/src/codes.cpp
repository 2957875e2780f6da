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

#include "fermicode/codes.hpp"

#include <algorithm>
#include <bit>
#include <set>
#include <sstream>

#include "fermicode/errors.hpp"

namespace fermicode {

Code::Code(std::string name, std::vector<BoolPoly> encode, std::vector<BoolPoly> decode)
    : name_(std::move(name)), N_(decode.size()), n_(encode.size()), enc_(std::move(encode)), dec_(std::move(decode)) {
    if (N_ == 0) {
        throw DimensionError("code needs at least one mode");
    }
    if (N_ > kMaxBits || n_ > kMaxBits) {
        throw DimensionError("code sizes beyond 64 bits are not supported");
    }
    for (const auto &p : enc_) {
        if (p.num_vars() != N_) {
            throw DimensionError("encode component over " + std::to_string(p.num_vars()) + " variables, expected " +
                                 std::to_string(N_));
        }
    }
    for (const auto &p : dec_) {
        if (p.num_vars() != n_) {
            throw DimensionError("decode component over " + std::to_string(p.num_vars()) + " variables, expected " +
                                 std::to_string(n_));
        }
    }
}

const BoolPoly &Code::encode(std::size_t i) const {
    if (i < 1 || i > n_) {
        throw DimensionError("encode component " + std::to_string(i) + " outside 1.." + std::to_string(n_));
    }
    return enc_[i - 1];
}

const BoolPoly &Code::decode(std::size_t j) const {
    if (j < 1 || j > N_) {
        throw DimensionError("decode component " + std::to_string(j) + " outside 1.." + std::to_string(N_));
    }
    return dec_[j - 1];
}

std::uint64_t Code::encode_mask(std::uint64_t nu) const {
    std::uint64_t out = 0;
    for (std::size_t i = 0; i < n_; ++i) {
        if (enc_[i].eval_mask(nu)) {
            out |= std::uint64_t{1} << i;
        }
    }
    return out;
}

std::uint64_t Code::decode_mask(std::uint64_t omega) const {
    std::uint64_t out = 0;
    for (std::size_t j = 0; j < N_; ++j) {
        if (dec_[j].eval_mask(omega)) {
            out |= std::uint64_t{1} << j;
        }
    }
    return out;
}

BitVec Code::encode_vec(const BitVec &nu) const {
    if (nu.size() != N_) {
        throw DimensionError("encoding a " + std::to_string(nu.size()) + "-bit vector with an N=" + std::to_string(N_) +
                             " code");
    }
    return BitVec(n_, encode_mask(nu.mask()));
}

BitVec Code::decode_vec(const BitVec &omega) const {
    if (omega.size() != n_) {
        throw DimensionError("decoding a " + std::to_string(omega.size()) + "-bit word with an n=" +
                             std::to_string(n_) + " code");
    }
    return BitVec(N_, decode_mask(omega.mask()));
}

namespace {

bool all_affine(const std::vector<BoolPoly> &ps) {
    return std::all_of(ps.begin(), ps.end(), [](const BoolPoly &p) { return p.degree() <= 1; });
}

BitMat linear_part(const std::vector<BoolPoly> &ps, std::size_t cols) {
    BitMat m(ps.size(), cols);
    for (std::size_t i = 0; i < ps.size(); ++i) {
        if (ps[i].degree() > 1) {
            throw UnsupportedError("component " + std::to_string(i + 1) + " is nonlinear");
        }
        for (Monomial mono : ps[i].monomials()) {
            if (mono) {
                m.set(i + 1, std::countr_zero(mono) + 1, true);
            }
        }
    }
    return m;
}

BitVec constant_part(const std::vector<BoolPoly> &ps) {
    BitVec v(ps.size());
    for (std::size_t i = 0; i < ps.size(); ++i) {
        v.set(i + 1, ps[i].constant_term());
    }
    return v;
}

std::vector<BoolPoly> polys_from_matrix(const BitMat &m, const BitVec &affine) {
    std::vector<BoolPoly> out;
    for (std::size_t i = 1; i <= m.rows(); ++i) {
        out.push_back(BoolPoly::linear(m.cols(), m.row(i).mask(), affine.get(i)));
    }
    return out;
}

}  // namespace

bool Code::encode_is_linear() const {
    return all_affine(enc_);
}

bool Code::decode_is_linear() const {
    return all_affine(dec_);
}

BitVec Code::encode_affine() const {
    return constant_part(enc_);
}

BitVec Code::decode_affine() const {
    return constant_part(dec_);
}

BitMat Code::encode_matrix() const {
    return linear_part(enc_, N_);
}

BitMat Code::decode_matrix() const {
    return linear_part(dec_, n_);
}

Code &Code::set_matrices(BitMat a, BitMat a_inv) {
    if (a.rows() != N_ || a.cols() != N_ || n_ != N_) {
        throw DimensionError("generator matrices need a square code");
    }
    if (!encode_is_linear() || !decode_is_linear() || encode_affine().weight() || decode_affine().weight() ||
        !(encode_matrix() == a) || !(decode_matrix() == a_inv)) {
        throw PreconditionError("generator matrices do not reproduce the code polynomials");
    }
    a_ = std::move(a);
    a_inv_ = std::move(a_inv);
    return *this;
}

Code &Code::set_segments(std::vector<SegmentBlock> segments) {
    for (const auto &s : segments) {
        for (std::size_t m : s.modes) {
            if (m < 1 || m > N_) {
                throw DimensionError("segment mode outside the code");
            }
        }
    }
    segments_ = std::move(segments);
    return *this;
}

Code &Code::set_degenerate_images(std::vector<BitVec> images) {
    degenerate_ = std::move(images);
    return *this;
}

Code &Code::set_name(std::string name) {
    name_ = std::move(name);
    return *this;
}

Code make_linear_code(const BitMat &a, std::string name) {
    BitMat a_inv = mat_inverse_mod2(a);
    std::size_t N = a.rows();
    Code c(std::move(name), polys_from_matrix(a, BitVec(N)), polys_from_matrix(a_inv, BitVec(N)));
    c.set_matrices(a, a_inv);
    return c;
}

Code make_affine_code(const BitMat &e, const BitVec &e0, const BitMat &d, const BitVec &d0, std::string name) {
    if (e.cols() != d.rows() || e.rows() != d.cols() || e0.size() != e.rows() || d0.size() != d.rows()) {
        throw DimensionError("inconsistent affine code shapes");
    }
    return Code(std::move(name), polys_from_matrix(e, e0), polys_from_matrix(d, d0));
}

BitMat parity_matrix(std::size_t N) {
    BitMat a(N, N);
    for (std::size_t i = 1; i <= N; ++i) {
        for (std::size_t j = 1; j <= i; ++j) {
            a.set(i, j, true);
        }
    }
    return a;
}

BitMat bravyi_kitaev_matrix(std::size_t N) {
    // Fenwick tree: qubit j stores the parity of modes (j & (j+1)) .. j, 0-based.
    BitMat a(N, N);
    for (std::size_t j = 0; j < N; ++j) {
        for (std::size_t i = j & (j + 1); i <= j; ++i) {
            a.set(j + 1, i + 1, true);
        }
    }
    return a;
}

Code make_jordan_wigner(std::size_t N) {
    if (N < 1) {
        throw PreconditionError("Jordan-Wigner needs N >= 1");
    }
    return make_linear_code(BitMat::identity(N), "jordan_wigner");
}

Code make_parity_code(std::size_t N) {
    if (N < 1) {
        throw PreconditionError("parity code needs N >= 1");
    }
    return make_linear_code(parity_matrix(N), "parity");
}

Code make_bravyi_kitaev(std::size_t N) {
    if (N < 1) {
        throw PreconditionError("Bravyi-Kitaev needs N >= 1");
    }
    return make_linear_code(bravyi_kitaev_matrix(N), "bravyi_kitaev");
}

Code make_checksum(std::size_t N, ChecksumFlavor flavor) {
    if (N < 2) {
        throw PreconditionError("checksum code needs N >= 2");
    }
    std::size_t n = N - 1;
    std::vector<BoolPoly> enc, dec;
    for (std::size_t i = 1; i <= n; ++i) {
        enc.push_back(BoolPoly::variable(N, i));
        dec.push_back(BoolPoly::variable(n, i));
    }
    dec.push_back(BoolPoly::linear(n, low_mask(n), flavor == ChecksumFlavor::Odd));
    return Code(flavor == ChecksumFlavor::Odd ? "checksum_odd" : "checksum_even", std::move(enc), std::move(dec));
}

namespace {

// Indicator that the variables x_{first}..x_{first+bits-1} spell the number `value`
// (x_first least significant).
BoolPoly equals_number(std::size_t num_vars, std::size_t first, std::size_t bits, std::uint64_t value) {
    BoolPoly r = BoolPoly::constant(num_vars, true);
    for (std::size_t i = 0; i < bits; ++i) {
        bool q = (value >> i) & 1;
        BoolPoly factor = BoolPoly::variable(num_vars, first + i) + BoolPoly::constant(num_vars, !q);
        r = bp_mul(r, factor);
    }
    return r;
}

void check_r(std::size_t r, std::size_t min) {
    if (r < min || r > 6) {
        throw PreconditionError("binary addressing needs " + std::to_string(min) + " <= r <= 6");
    }
}

}  // namespace

Code make_binary_addressing_k1(std::size_t r) {
    check_r(r, 1);
    std::size_t N = std::size_t{1} << r;
    std::vector<BoolPoly> dec;
    for (std::size_t j = 1; j <= N; ++j) {
        dec.push_back(equals_number(r, 1, r, j - 1));
    }
    BitMat e(r, N);
    for (std::size_t j = 1; j <= N; ++j) {
        for (std::size_t i = 1; i <= r; ++i) {
            if (((j - 1) >> (i - 1)) & 1) {
                e.set(i, j, true);
            }
        }
    }
    return Code("binary_addressing_k1", polys_from_matrix(e, BitVec(r)), std::move(dec));
}

Code make_binary_addressing_k2(std::size_t r) {
    check_r(r, 2);
    std::size_t N = std::size_t{1} << r;
    std::size_t half = N / 2;
    std::size_t n = 2 * r - 1;
    auto alpha = [&](std::size_t i) { return BoolPoly::variable(n, i); };
    auto beta = [&](std::size_t i) { return BoolPoly::variable(n, r + i); };
    BoolPoly one = BoolPoly::constant(n, true);

    // S: 1 iff y1 < N/2 + y2, with y1 = bin(alpha)+1, y2 = bin(beta)+1.
    BoolPoly below(n);
    for (std::size_t j = 1; j <= r - 1; ++j) {
        BoolPoly t = (one + alpha(j)) * beta(j);
        for (std::size_t i = j + 1; i <= r - 1; ++i) {
            t = t * (alpha(i) + beta(i) + one);
        }
        below += t;
    }
    BoolPoly S = alpha(r) * below + one + alpha(r);
    // T: low alpha bits equal beta.
    BoolPoly T = one;
    for (std::size_t i = 1; i <= r - 1; ++i) {
        T = T * (alpha(i) + beta(i) + one);
    }
    BoolPoly left = (one + S) * (one + T);

    std::vector<BoolPoly> dec;
    for (std::size_t j = 1; j <= N; ++j) {
        std::uint64_t q = j - 1;
        std::uint64_t low = q & low_mask(r - 1);
        bool top = (q >> (r - 1)) & 1;
        BoolPoly d = S * equals_number(n, 1, r, q) + left * equals_number(n, 1, r, ~q & low_mask(r));
        if (top) {
            d += S * equals_number(n, r + 1, r - 1, low);
        } else {
            d += left * equals_number(n, r + 1, r - 1, ~low & low_mask(r - 1));
        }
        dec.push_back(std::move(d));
    }

    // word for the occupied pair i < j
    auto pair_word = [&](std::size_t i, std::size_t j) -> std::uint64_t {
        std::uint64_t a, b;
        if (j <= half) {
            a = ~(i - 1) & low_mask(r);
            b = ~(j - 1) & low_mask(r - 1);
        } else {
            a = i - 1;
            b = j - half - 1;
        }
        return a | (b << r);
    };
    std::vector<BoolPoly> enc(n, BoolPoly(N));
    for (std::size_t j = 2; j <= N; ++j) {
        for (std::size_t i = 1; i < j; ++i) {
            std::uint64_t w = pair_word(i, j);
            BoolPoly nn = BoolPoly::monomial(N, {i, j});
            for (std::size_t k = 0; k < n; ++k) {
                if ((w >> k) & 1) {
                    enc[k] += nn;
                }
            }
        }
    }
    Code c("binary_addressing_k2", std::move(enc), std::move(dec));
    c.set_degenerate_images({BitVec(N)});
    return c;
}

BoolPoly binary_switch(std::size_t K) {
    if (K < 1 || K > 8) {
        throw PreconditionError("binary switch needs 1 <= K <= 8");
    }
    std::size_t m = 2 * K;
    BoolPoly one = BoolPoly::constant(m, true);
    BoolPoly f(m);
    for (std::uint64_t s = 0; s < (std::uint64_t{1} << m); ++s) {
        if (static_cast<std::size_t>(std::popcount(s)) <= K) {
            continue;
        }
        BoolPoly t = one;
        for (std::size_t i = 1; i <= m; ++i) {
            BoolPoly x = BoolPoly::variable(m, i);
            t = t * (((s >> (i - 1)) & 1) ? x : x + one);
        }
        f += t;
    }
    return f;
}

Code make_segment_subcode(std::size_t K) {
    BoolPoly f = binary_switch(K);
    std::size_t n = 2 * K, N = 2 * K + 1;
    std::vector<BoolPoly> enc, dec;
    for (std::size_t i = 1; i <= n; ++i) {
        enc.push_back(BoolPoly::variable(N, i) + BoolPoly::variable(N, N));
        dec.push_back(BoolPoly::variable(n, i) + f);
    }
    dec.push_back(f);
    Code c("segment", std::move(enc), std::move(dec));
    std::vector<std::size_t> modes(N);
    for (std::size_t i = 0; i < N; ++i) {
        modes[i] = i + 1;
    }
    c.set_segments({SegmentBlock{modes, K}});
    return c;
}

Code make_segment_code(std::size_t K, std::size_t segments) {
    if (segments < 1) {
        throw PreconditionError("segment code needs at least one segment");
    }
    Code sub = make_segment_subcode(K);
    Code c = sub;
    for (std::size_t s = 1; s < segments; ++s) {
        c = concat_codes(c, sub);
    }
    c.set_name("segment");
    return c;
}

Code make_h2_code() {
    Code c = concat_codes(make_binary_addressing_k1(1), make_binary_addressing_k1(1));
    c.set_name("h2");
    return c;
}

Code concat_codes(const Code &c1, const Code &c2) {
    std::size_t N = c1.num_modes() + c2.num_modes();
    std::size_t n = c1.num_qubits() + c2.num_qubits();
    if (N > kMaxBits || n > kMaxBits) {
        throw DimensionError("concatenated code exceeds 64 bits");
    }
    std::vector<BoolPoly> enc, dec;
    for (const auto &p : c1.encode()) {
        enc.push_back(shift_vars(p, 0, N));
    }
    for (const auto &p : c2.encode()) {
        enc.push_back(shift_vars(p, c1.num_modes(), N));
    }
    for (const auto &p : c1.decode()) {
        dec.push_back(shift_vars(p, 0, n));
    }
    for (const auto &p : c2.decode()) {
        dec.push_back(shift_vars(p, c1.num_qubits(), n));
    }
    Code c(c1.name() + "+" + c2.name(), std::move(enc), std::move(dec));
    if (c1.matrix_a() && c2.matrix_a()) {
        BitMat a(N, N), ai(N, N);
        auto place = [](BitMat &dst, const BitMat &src, std::size_t off) {
            for (std::size_t i = 1; i <= src.rows(); ++i) {
                for (std::size_t j = 1; j <= src.cols(); ++j) {
                    dst.set(i + off, j + off, src.get(i, j));
                }
            }
        };
        place(a, *c1.matrix_a(), 0);
        place(a, *c2.matrix_a(), c1.num_modes());
        place(ai, *c1.matrix_a_inv(), 0);
        place(ai, *c2.matrix_a_inv(), c1.num_modes());
        c.set_matrices(a, ai);
    }
    std::vector<SegmentBlock> segs = c1.segments();
    for (auto s : c2.segments()) {
        for (auto &m : s.modes) {
            m += c1.num_modes();
        }
        segs.push_back(std::move(s));
    }
    c.set_segments(std::move(segs));
    return c;
}

BasisSpec BasisSpec::full_fock(std::size_t N) {
    BasisSpec s;
    s.N = N;
    std::vector<std::size_t> suit, weights;
    for (std::size_t i = 1; i <= N; ++i) {
        suit.push_back(i);
    }
    for (std::size_t w = 0; w <= N; ++w) {
        weights.push_back(w);
    }
    s.suits = {suit};
    s.target_weights = {weights};
    return s;
}

BasisSpec BasisSpec::fixed_weight(std::size_t N, std::vector<std::size_t> weights) {
    BasisSpec s = full_fock(N);
    s.target_weights = {std::move(weights)};
    s.validate();
    return s;
}

namespace {

std::vector<std::string> split(const std::string &s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    std::istringstream in(s);
    while (std::getline(in, cur, sep)) {
        out.push_back(cur);
    }
    if (!s.empty() && s.back() == sep) {
        out.emplace_back();
    }
    return out;
}

std::size_t parse_uint(const std::string &s) {
    if (s.empty() || !std::all_of(s.begin(), s.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); })) {
        throw ParseError("expected a non-negative integer, got '" + s + "'");
    }
    return std::stoul(s);
}

}  // namespace

BasisSpec BasisSpec::parse(const std::string &text, std::size_t N) {
    std::string t;
    for (char c : text) {
        if (!std::isspace(static_cast<unsigned char>(c))) {
            t += c;
        }
    }
    if (t.empty() || t == "all" || t == "full") {
        return full_fock(N);
    }
    BasisSpec s;
    s.N = N;
    for (const auto &part : split(t, ';')) {
        auto colon = part.find(':');
        if (colon == std::string::npos) {
            throw ParseError("basis suit '" + part + "' lacks ':weights'");
        }
        std::vector<std::size_t> suit, weights;
        for (const auto &item : split(part.substr(0, colon), ',')) {
            auto dash = item.find('-');
            if (dash == std::string::npos) {
                suit.push_back(parse_uint(item));
            } else {
                std::size_t a = parse_uint(item.substr(0, dash)), b = parse_uint(item.substr(dash + 1));
                if (a > b) {
                    throw ParseError("descending range '" + item + "'");
                }
                for (std::size_t i = a; i <= b; ++i) {
                    suit.push_back(i);
                }
            }
        }
        for (const auto &w : split(part.substr(colon + 1), ',')) {
            weights.push_back(parse_uint(w));
        }
        s.suits.push_back(std::move(suit));
        s.target_weights.push_back(std::move(weights));
    }
    try {
        s.validate();
    } catch (const PreconditionError &e) {
        throw ParseError(e.what());
    }
    return s;
}

BasisSpec BasisSpec::from_segments(const Code &code) {
    BasisSpec s;
    s.N = code.num_modes();
    std::vector<bool> covered(s.N + 1, false);
    for (const auto &seg : code.segments()) {
        std::vector<std::size_t> w;
        for (std::size_t k = 0; k <= seg.max_weight; ++k) {
            w.push_back(k);
        }
        s.suits.push_back(seg.modes);
        s.target_weights.push_back(w);
        for (std::size_t m : seg.modes) {
            covered[m] = true;
        }
    }
    std::vector<std::size_t> rest, w{0};
    for (std::size_t m = 1; m <= s.N; ++m) {
        if (!covered[m]) {
            rest.push_back(m);
            w.push_back(rest.size());
        }
    }
    if (!rest.empty()) {
        s.suits.push_back(rest);
        s.target_weights.push_back(w);
    }
    s.validate();
    return s;
}

void BasisSpec::validate() const {
    if (N < 1 || N > kMaxBits) {
        throw PreconditionError("basis needs 1 <= N <= 64");
    }
    if (suits.size() != target_weights.size()) {
        throw PreconditionError("one weight list per suit required");
    }
    std::vector<int> seen(N + 1, 0);
    for (std::size_t s = 0; s < suits.size(); ++s) {
        for (std::size_t m : suits[s]) {
            if (m < 1 || m > N) {
                throw PreconditionError("suit mode " + std::to_string(m) + " outside 1.." + std::to_string(N));
            }
            ++seen[m];
        }
        for (std::size_t w : target_weights[s]) {
            if (w > suits[s].size()) {
                throw PreconditionError("weight " + std::to_string(w) + " exceeds suit size");
            }
        }
    }
    for (std::size_t m = 1; m <= N; ++m) {
        if (seen[m] != 1) {
            throw PreconditionError("suits must partition 1.." + std::to_string(N) + "; mode " + std::to_string(m) +
                                    " appears " + std::to_string(seen[m]) + " times");
        }
    }
}

bool BasisSpec::contains(const BitVec &nu) const {
    if (nu.size() != N) {
        return false;
    }
    for (std::size_t s = 0; s < suits.size(); ++s) {
        std::size_t w = 0;
        for (std::size_t m : suits[s]) {
            w += nu.get(m);
        }
        if (std::find(target_weights[s].begin(), target_weights[s].end(), w) == target_weights[s].end()) {
            return false;
        }
    }
    return true;
}

std::vector<BitVec> enumerate_basis(const BasisSpec &spec) {
    spec.validate();
    std::vector<std::uint64_t> acc{0};
    for (std::size_t s = 0; s < spec.suits.size(); ++s) {
        const auto &suit = spec.suits[s];
        std::set<std::size_t> weights(spec.target_weights[s].begin(), spec.target_weights[s].end());
        std::vector<std::uint64_t> local;
        for (std::uint64_t sub = 0; sub < (std::uint64_t{1} << suit.size()); ++sub) {
            if (!weights.count(std::popcount(sub))) {
                continue;
            }
            std::uint64_t m = 0;
            for (std::size_t k = 0; k < suit.size(); ++k) {
                if ((sub >> k) & 1) {
                    m |= std::uint64_t{1} << (suit[k] - 1);
                }
            }
            local.push_back(m);
        }
        std::vector<std::uint64_t> next;
        next.reserve(acc.size() * local.size());
        for (auto a : acc) {
            for (auto l : local) {
                next.push_back(a | l);
            }
        }
        acc = std::move(next);
    }
    std::vector<BitVec> out;
    out.reserve(acc.size());
    for (auto m : acc) {
        out.emplace_back(spec.N, m);
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::string CodeValidationReport::summary() const {
    std::ostringstream os;
    os << "basis=" << basis_size << " words=" << words_scanned << " round_trip_failures=" << round_trip_failures.size()
       << " images_outside=" << images_outside.size() << " degenerate_words=" << degenerate_words
       << " one_to_one=" << (one_to_one ? "yes" : "no") << " image_weights={";
    bool first = true;
    for (const auto &[w, c] : image_weights) {
        os << (first ? "" : ",") << w << ":" << c;
        first = false;
    }
    os << "}";
    return os.str();
}

CodeValidationReport validate_code(const Code &code, const BasisSpec &spec, std::size_t word_budget) {
    if (spec.N != code.num_modes()) {
        throw DimensionError("basis spec over " + std::to_string(spec.N) + " modes for an N=" +
                             std::to_string(code.num_modes()) + " code");
    }
    std::size_t n = code.num_qubits();
    if (n >= 63 || (std::uint64_t{1} << n) > word_budget) {
        throw ResourceError("exhaustive scan of 2^" + std::to_string(n) + " words exceeds budget");
    }
    CodeValidationReport rep;
    auto basis = enumerate_basis(spec);
    rep.basis_size = basis.size();
    for (const auto &nu : basis) {
        if (!(code.decode_vec(code.encode_vec(nu)) == nu)) {
            rep.round_trip_failures.push_back(nu);
        }
    }
    std::size_t words = std::size_t{1} << n;
    rep.words_scanned = words;
    const auto &deg = code.degenerate_images();
    for (std::uint64_t w = 0; w < words; ++w) {
        BitVec img(code.num_modes(), code.decode_mask(w));
        ++rep.image_weights[img.weight()];
        if (code.encode_mask(img.mask()) != w) {
            rep.one_to_one = false;
        }
        if (!spec.contains(img)) {
            if (std::find(deg.begin(), deg.end(), img) != deg.end()) {
                ++rep.degenerate_words;
            } else {
                rep.images_outside.emplace_back(BitVec(n, w), img);
            }
        }
    }
    return rep;
}

}  // namespace fermicode
