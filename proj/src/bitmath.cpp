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

#include "fermicode/bitmath.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <unordered_map>
#include <unordered_set>

#include "fermicode/errors.hpp"

namespace fermicode {

namespace {

void check_len(std::size_t len) {
    if (len > kMaxBits) {
        throw DimensionError("at most " + std::to_string(kMaxBits) + " bits supported, got " + std::to_string(len));
    }
}

void check_index(std::size_t index, std::size_t len) {
    if (index < 1 || index > len) {
        throw DimensionError("index " + std::to_string(index) + " outside 1.." + std::to_string(len));
    }
}

}  // namespace

BitVec::BitVec(std::size_t len, std::uint64_t mask) : len_(len), bits_(mask) {
    check_len(len);
    if (mask & ~low_mask(len)) {
        throw DimensionError("mask has bits beyond length " + std::to_string(len));
    }
}

BitVec::BitVec(std::initializer_list<int> bits) : len_(bits.size()) {
    check_len(len_);
    std::size_t i = 0;
    for (int b : bits) {
        if (b & 1) {
            bits_ |= std::uint64_t{1} << i;
        }
        ++i;
    }
}

BitVec BitVec::from_string(std::string_view text) {
    BitVec v(text.size());
    for (std::size_t i = 0; i < text.size(); ++i) {
        if (text[i] == '1') {
            v.bits_ |= std::uint64_t{1} << i;
        } else if (text[i] != '0') {
            throw ParseError("bad bit character '" + std::string(1, text[i]) + "'");
        }
    }
    return v;
}

BitVec BitVec::unit(std::size_t len, std::size_t index) {
    check_index(index, len);
    return BitVec(len, std::uint64_t{1} << (index - 1));
}

bool BitVec::get(std::size_t index) const {
    check_index(index, len_);
    return (bits_ >> (index - 1)) & 1;
}

void BitVec::set(std::size_t index, bool value) {
    check_index(index, len_);
    std::uint64_t b = std::uint64_t{1} << (index - 1);
    bits_ = value ? (bits_ | b) : (bits_ & ~b);
}

void BitVec::flip(std::size_t index) {
    check_index(index, len_);
    bits_ ^= std::uint64_t{1} << (index - 1);
}

std::size_t BitVec::weight() const {
    return std::popcount(bits_);
}

std::vector<std::size_t> BitVec::support() const {
    std::vector<std::size_t> out;
    for (std::uint64_t m = bits_; m; m &= m - 1) {
        out.push_back(std::countr_zero(m) + 1);
    }
    return out;
}

BitVec BitVec::operator+(const BitVec &other) const {
    BitVec r = *this;
    r += other;
    return r;
}

BitVec &BitVec::operator+=(const BitVec &other) {
    if (len_ != other.len_) {
        throw DimensionError("adding BitVecs of lengths " + std::to_string(len_) + " and " + std::to_string(other.len_));
    }
    bits_ ^= other.bits_;
    return *this;
}

BitVec BitVec::concat(const BitVec &other) const {
    check_len(len_ + other.len_);
    return BitVec(len_ + other.len_, bits_ | (other.len_ ? other.bits_ << len_ : 0));
}

BitVec BitVec::slice(std::size_t first, std::size_t count) const {
    if (count == 0) {
        return BitVec(0);
    }
    check_index(first, len_);
    check_index(first + count - 1, len_);
    return BitVec(count, (bits_ >> (first - 1)) & low_mask(count));
}

bool BitVec::operator<(const BitVec &other) const {
    if (len_ != other.len_) {
        return len_ < other.len_;
    }
    std::uint64_t diff = bits_ ^ other.bits_;
    if (!diff) {
        return false;
    }
    return !(bits_ & (diff & -diff));
}

std::string BitVec::str() const {
    std::string s(len_, '0');
    for (std::size_t i = 0; i < len_; ++i) {
        if ((bits_ >> i) & 1) {
            s[i] = '1';
        }
    }
    return s;
}

BitMat::BitMat(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows, 0) {
    check_len(cols);
}

BitMat BitMat::identity(std::size_t n) {
    BitMat m(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        m.data_[i] = std::uint64_t{1} << i;
    }
    return m;
}

BitMat BitMat::from_rows(const std::vector<std::vector<int>> &rows) {
    std::size_t cols = rows.empty() ? 0 : rows[0].size();
    BitMat m(rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != cols) {
            throw DimensionError("ragged matrix rows");
        }
        for (std::size_t j = 0; j < cols; ++j) {
            if (rows[i][j] & 1) {
                m.data_[i] |= std::uint64_t{1} << j;
            }
        }
    }
    return m;
}

bool BitMat::get(std::size_t i, std::size_t j) const {
    check_index(i, rows_);
    check_index(j, cols_);
    return (data_[i - 1] >> (j - 1)) & 1;
}

void BitMat::set(std::size_t i, std::size_t j, bool value) {
    check_index(i, rows_);
    check_index(j, cols_);
    std::uint64_t b = std::uint64_t{1} << (j - 1);
    data_[i - 1] = value ? (data_[i - 1] | b) : (data_[i - 1] & ~b);
}

BitVec BitMat::row(std::size_t i) const {
    check_index(i, rows_);
    return BitVec(cols_, data_[i - 1]);
}

BitVec BitMat::col(std::size_t j) const {
    check_index(j, cols_);
    BitVec v(rows_);
    for (std::size_t i = 0; i < rows_; ++i) {
        if ((data_[i] >> (j - 1)) & 1) {
            v.set(i + 1, true);
        }
    }
    return v;
}

BitMat BitMat::operator*(const BitMat &other) const {
    if (cols_ != other.rows_) {
        throw DimensionError("matrix product of incompatible shapes");
    }
    BitMat r(rows_, other.cols_);
    for (std::size_t i = 0; i < rows_; ++i) {
        std::uint64_t acc = 0;
        for (std::uint64_t m = data_[i]; m; m &= m - 1) {
            acc ^= other.data_[std::countr_zero(m)];
        }
        r.data_[i] = acc;
    }
    return r;
}

BitVec BitMat::operator*(const BitVec &v) const {
    if (cols_ != v.size()) {
        throw DimensionError("matrix-vector product of incompatible shapes");
    }
    BitVec r(rows_);
    for (std::size_t i = 0; i < rows_; ++i) {
        if (std::popcount(data_[i] & v.mask()) & 1) {
            r.set(i + 1, true);
        }
    }
    return r;
}

BitMat BitMat::transpose() const {
    BitMat r(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::uint64_t m = data_[i]; m; m &= m - 1) {
            r.data_[std::countr_zero(m)] |= std::uint64_t{1} << i;
        }
    }
    return r;
}

std::string BitMat::str() const {
    std::string s;
    for (std::size_t i = 1; i <= rows_; ++i) {
        s += row(i).str();
        s += '\n';
    }
    return s;
}

BitMat mat_inverse_mod2(const BitMat &a) {
    std::size_t n = a.rows();
    if (n != a.cols()) {
        throw DimensionError("inverse of non-square matrix");
    }
    std::vector<std::uint64_t> left(n), right(n);
    for (std::size_t i = 0; i < n; ++i) {
        left[i] = a.row(i + 1).mask();
        right[i] = std::uint64_t{1} << i;
    }
    for (std::size_t c = 0; c < n; ++c) {
        std::uint64_t bit = std::uint64_t{1} << c;
        std::size_t pivot = c;
        while (pivot < n && !(left[pivot] & bit)) {
            ++pivot;
        }
        if (pivot == n) {
            throw NotInvertibleError("matrix is singular over GF(2)");
        }
        std::swap(left[c], left[pivot]);
        std::swap(right[c], right[pivot]);
        for (std::size_t r = 0; r < n; ++r) {
            if (r != c && (left[r] & bit)) {
                left[r] ^= left[c];
                right[r] ^= right[c];
            }
        }
    }
    BitMat inv(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::uint64_t m = right[i]; m; m &= m - 1) {
            inv.set(i + 1, std::countr_zero(m) + 1, true);
        }
    }
    return inv;
}

bool monomial_less(Monomial a, Monomial b) {
    int da = std::popcount(a), db = std::popcount(b);
    if (da != db) {
        return da < db;
    }
    std::uint64_t diff = a ^ b;
    return diff && (a & (diff & -diff));
}

std::string monomial_str(Monomial m) {
    if (!m) {
        return "1";
    }
    std::string s;
    for (; m; m &= m - 1) {
        if (!s.empty()) {
            s += '*';
        }
        s += 'x' + std::to_string(std::countr_zero(m) + 1);
    }
    return s;
}

namespace {

// Sorts and cancels pairs in place.
void canonicalize(std::vector<Monomial> &monos) {
    std::sort(monos.begin(), monos.end(), monomial_less);
    std::size_t out = 0;
    for (std::size_t i = 0; i < monos.size();) {
        std::size_t j = i;
        while (j < monos.size() && monos[j] == monos[i]) {
            ++j;
        }
        if ((j - i) & 1) {
            monos[out++] = monos[i];
        }
        i = j;
    }
    monos.resize(out);
}

void check_vars(const BoolPoly &a, const BoolPoly &b) {
    if (a.num_vars() != b.num_vars()) {
        throw DimensionError("polynomials over " + std::to_string(a.num_vars()) + " and " +
                             std::to_string(b.num_vars()) + " variables");
    }
}

void toggle(std::unordered_set<Monomial> &acc, Monomial m, std::size_t budget) {
    auto [it, inserted] = acc.insert(m);
    if (!inserted) {
        acc.erase(it);
    } else if (acc.size() > budget) {
        throw ResourceError("boolean polynomial exceeds monomial budget of " + std::to_string(budget));
    }
}

BoolPoly from_set(std::size_t num_vars, const std::unordered_set<Monomial> &acc) {
    return BoolPoly(num_vars, std::vector<Monomial>(acc.begin(), acc.end()));
}

}  // namespace

BoolPoly::BoolPoly(std::size_t num_vars, std::vector<Monomial> monomials) : num_vars_(num_vars), monos_(std::move(monomials)) {
    check_len(num_vars);
    for (Monomial m : monos_) {
        if (m & ~low_mask(num_vars)) {
            throw DimensionError("monomial " + monomial_str(m) + " uses variables beyond x" + std::to_string(num_vars));
        }
    }
    canonicalize(monos_);
}

BoolPoly BoolPoly::constant(std::size_t num_vars, bool value) {
    return value ? BoolPoly(num_vars, {0}) : BoolPoly(num_vars);
}

BoolPoly BoolPoly::variable(std::size_t num_vars, std::size_t index) {
    check_index(index, num_vars);
    return BoolPoly(num_vars, {std::uint64_t{1} << (index - 1)});
}

BoolPoly BoolPoly::monomial(std::size_t num_vars, const std::vector<std::size_t> &indices) {
    Monomial m = 0;
    for (std::size_t i : indices) {
        check_index(i, num_vars);
        m |= std::uint64_t{1} << (i - 1);
    }
    return BoolPoly(num_vars, {m});
}

BoolPoly BoolPoly::linear(std::size_t num_vars, std::uint64_t mask, bool constant) {
    std::vector<Monomial> monos;
    if (constant) {
        monos.push_back(0);
    }
    for (std::uint64_t m = mask; m; m &= m - 1) {
        monos.push_back(m & -m);
    }
    return BoolPoly(num_vars, std::move(monos));
}

BoolPoly BoolPoly::from_truth_table(std::size_t num_vars, const std::vector<bool> &table) {
    if (num_vars > 24 || table.size() != (std::size_t{1} << num_vars)) {
        throw DimensionError("truth table size does not match 2^num_vars");
    }
    std::vector<std::uint8_t> t(table.begin(), table.end());
    for (std::size_t bit = 1; bit < t.size(); bit <<= 1) {
        for (std::size_t x = 0; x < t.size(); ++x) {
            if (x & bit) {
                t[x] ^= t[x ^ bit];
            }
        }
    }
    std::vector<Monomial> monos;
    for (std::size_t x = 0; x < t.size(); ++x) {
        if (t[x]) {
            monos.push_back(x);
        }
    }
    return BoolPoly(num_vars, std::move(monos));
}

BoolPoly BoolPoly::parse(std::string_view text, std::size_t num_vars) {
    std::string s;
    for (char c : text) {
        if (!std::isspace(static_cast<unsigned char>(c))) {
            s += c;
        }
    }
    if (s.empty()) {
        throw ParseError("empty polynomial text");
    }
    std::vector<Monomial> monos;
    if (s == "0") {
        return BoolPoly(num_vars);
    }
    std::size_t pos = 0;
    while (pos <= s.size()) {
        std::size_t end = s.find('+', pos);
        if (end == std::string::npos) {
            end = s.size();
        }
        std::string term = s.substr(pos, end - pos);
        if (term.empty()) {
            throw ParseError("empty monomial in '" + std::string(text) + "'");
        }
        Monomial m = 0;
        std::size_t fpos = 0;
        while (fpos <= term.size()) {
            std::size_t fend = term.find('*', fpos);
            if (fend == std::string::npos) {
                fend = term.size();
            }
            std::string factor = term.substr(fpos, fend - fpos);
            if (factor == "1") {
            } else if (factor.size() >= 2 && factor[0] == 'x' &&
                       std::all_of(factor.begin() + 1, factor.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); })) {
                std::size_t idx = std::stoul(factor.substr(1));
                if (idx < 1 || idx > num_vars) {
                    throw ParseError("variable " + factor + " outside x1..x" + std::to_string(num_vars));
                }
                m |= std::uint64_t{1} << (idx - 1);
            } else {
                throw ParseError("bad factor '" + factor + "' in polynomial '" + std::string(text) + "'");
            }
            fpos = fend + 1;
        }
        monos.push_back(m);
        pos = end + 1;
    }
    return BoolPoly(num_vars, std::move(monos));
}

bool BoolPoly::is_constant() const {
    return monos_.empty() || (monos_.size() == 1 && monos_[0] == 0);
}

std::size_t BoolPoly::degree() const {
    return monos_.empty() ? 0 : std::popcount(monos_.back());
}

std::uint64_t BoolPoly::support() const {
    std::uint64_t s = 0;
    for (Monomial m : monos_) {
        s |= m;
    }
    return s;
}

bool BoolPoly::eval(const BitVec &x) const {
    if (x.size() != num_vars_) {
        throw DimensionError("evaluating polynomial over " + std::to_string(num_vars_) + " variables at a " +
                             std::to_string(x.size()) + "-bit vector");
    }
    return eval_mask(x.mask());
}

BoolPoly &BoolPoly::operator+=(const BoolPoly &other) {
    check_vars(*this, other);
    std::vector<Monomial> out;
    out.reserve(monos_.size() + other.monos_.size());
    auto a = monos_.cbegin();
    auto b = other.monos_.cbegin();
    while (a != monos_.cend() && b != other.monos_.cend()) {
        if (*a == *b) {
            ++a;
            ++b;
        } else if (monomial_less(*a, *b)) {
            out.push_back(*a++);
        } else {
            out.push_back(*b++);
        }
    }
    out.insert(out.end(), a, monos_.cend());
    out.insert(out.end(), b, other.monos_.cend());
    monos_ = std::move(out);
    return *this;
}

std::string BoolPoly::str() const {
    if (monos_.empty()) {
        return "0";
    }
    std::string s;
    for (Monomial m : monos_) {
        if (!s.empty()) {
            s += '+';
        }
        s += monomial_str(m);
    }
    return s;
}

BoolPoly bp_add(const BoolPoly &a, const BoolPoly &b) {
    BoolPoly r = a;
    r += b;
    return r;
}

BoolPoly bp_mul(const BoolPoly &a, const BoolPoly &b, std::size_t budget) {
    check_vars(a, b);
    std::unordered_set<Monomial> acc;
    for (Monomial x : a.monomials()) {
        for (Monomial y : b.monomials()) {
            toggle(acc, x | y, budget);
        }
    }
    return from_set(a.num_vars(), acc);
}

BoolPoly bp_compose(const BoolPoly &p, const std::vector<BoolPoly> &subs, std::size_t budget) {
    if (subs.size() != p.num_vars()) {
        throw DimensionError("composition needs " + std::to_string(p.num_vars()) + " substitutions, got " +
                             std::to_string(subs.size()));
    }
    std::size_t k = subs.empty() ? 0 : subs[0].num_vars();
    for (const auto &s : subs) {
        if (s.num_vars() != k) {
            throw DimensionError("substitutions over differing variable counts");
        }
    }
    // products of substituted variables, built by peeling off the highest variable
    std::unordered_map<Monomial, BoolPoly> memo;
    memo.emplace(0, BoolPoly::constant(k, true));
    std::function<const BoolPoly &(Monomial)> product = [&](Monomial m) -> const BoolPoly & {
        auto it = memo.find(m);
        if (it != memo.end()) {
            return it->second;
        }
        int top = 63 - std::countl_zero(m);
        Monomial rest = m & ~(std::uint64_t{1} << top);
        BoolPoly r = bp_mul(product(rest), subs[top], budget);
        return memo.emplace(m, std::move(r)).first->second;
    };
    std::unordered_set<Monomial> acc;
    for (Monomial m : p.monomials()) {
        for (Monomial x : product(m).monomials()) {
            toggle(acc, x, budget);
        }
    }
    return from_set(k, acc);
}

bool bp_eval(const BoolPoly &p, const BitVec &x) {
    return p.eval(x);
}

BoolPoly shift_vars(const BoolPoly &p, std::size_t offset, std::size_t new_num_vars) {
    if (p.num_vars() + offset > new_num_vars) {
        throw DimensionError("shifted polynomial does not fit");
    }
    std::vector<Monomial> monos;
    monos.reserve(p.size());
    for (Monomial m : p.monomials()) {
        monos.push_back(offset >= 64 ? 0 : m << offset);
    }
    return BoolPoly(new_num_vars, std::move(monos));
}

}  // namespace fermicode
