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

#include "fermicode/pauli.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <cmath>
#include <cstdio>

#include "fermicode/errors.hpp"

namespace fermicode {

namespace {

const Complex kIPow[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};

void check_qubit(std::size_t q, std::size_t n) {
    if (q < 1 || q > n) {
        throw DimensionError("qubit " + std::to_string(q) + " outside 1.." + std::to_string(n));
    }
}

void check_same(const QubitOperator &a, const QubitOperator &b) {
    if (a.num_qubits() != b.num_qubits()) {
        throw DimensionError("operators on " + std::to_string(a.num_qubits()) + " and " +
                             std::to_string(b.num_qubits()) + " qubits");
    }
}

char letter_char(PauliLetter l) {
    return "IXYZ"[static_cast<int>(l)];
}

}  // namespace

PauliString::PauliString(std::size_t n, PauliKey key) : n_(n), key_(key) {
    if (n > kMaxBits) {
        throw DimensionError("at most 64 qubits supported");
    }
    if ((key.x | key.z) & ~low_mask(n)) {
        throw DimensionError("Pauli string acts beyond qubit " + std::to_string(n));
    }
}

PauliString PauliString::single(std::size_t n, std::size_t qubit, PauliLetter letter) {
    check_qubit(qubit, n);
    std::uint64_t b = std::uint64_t{1} << (qubit - 1);
    PauliKey k;
    if (letter == PauliLetter::X || letter == PauliLetter::Y) {
        k.x = b;
    }
    if (letter == PauliLetter::Z || letter == PauliLetter::Y) {
        k.z = b;
    }
    return PauliString(n, k);
}

PauliString PauliString::x_string(std::size_t n, std::uint64_t mask) {
    return PauliString(n, {mask, 0});
}

PauliString PauliString::z_string(std::size_t n, std::uint64_t mask) {
    return PauliString(n, {0, mask});
}

PauliString PauliString::parse(std::string_view text, std::size_t n) {
    std::string s;
    for (char c : text) {
        if (!std::isspace(static_cast<unsigned char>(c))) {
            s += c;
        }
    }
    if (s == "I") {
        return PauliString(n);
    }
    PauliKey k;
    std::size_t pos = 0;
    while (pos <= s.size()) {
        std::size_t end = s.find('*', pos);
        if (end == std::string::npos) {
            end = s.size();
        }
        std::string f = s.substr(pos, end - pos);
        if (f.size() < 2 || !std::all_of(f.begin() + 1, f.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); })) {
            throw ParseError("bad Pauli factor '" + f + "'");
        }
        std::size_t q = std::stoul(f.substr(1));
        if (q < 1 || q > n) {
            throw ParseError("qubit index " + f.substr(1) + " outside 1.." + std::to_string(n));
        }
        std::uint64_t b = std::uint64_t{1} << (q - 1);
        if ((k.x | k.z) & b) {
            throw ParseError("qubit " + std::to_string(q) + " repeated in Pauli string");
        }
        switch (f[0]) {
            case 'X':
                k.x |= b;
                break;
            case 'Y':
                k.x |= b;
                k.z |= b;
                break;
            case 'Z':
                k.z |= b;
                break;
            default:
                throw ParseError("bad Pauli letter in '" + f + "'");
        }
        pos = end + 1;
    }
    return PauliString(n, k);
}

PauliLetter PauliString::letter(std::size_t qubit) const {
    check_qubit(qubit, n_);
    int x = (key_.x >> (qubit - 1)) & 1;
    int z = (key_.z >> (qubit - 1)) & 1;
    if (x && z) {
        return PauliLetter::Y;
    }
    return x ? PauliLetter::X : (z ? PauliLetter::Z : PauliLetter::I);
}

std::size_t PauliString::weight() const {
    return std::popcount(key_.x | key_.z);
}

bool PauliString::operator<(const PauliString &other) const {
    std::size_t wa = weight(), wb = other.weight();
    if (wa != wb) {
        return wa < wb;
    }
    std::uint64_t sa = key_.x | key_.z, sb = other.key_.x | other.key_.z;
    while (sa && sb) {
        int ia = std::countr_zero(sa), ib = std::countr_zero(sb);
        if (ia != ib) {
            return ia < ib;
        }
        auto la = letter(ia + 1), lb = other.letter(ib + 1);
        if (la != lb) {
            return la < lb;
        }
        sa &= sa - 1;
        sb &= sb - 1;
    }
    return false;
}

std::string PauliString::str() const {
    if (is_identity()) {
        return "I";
    }
    std::string s;
    for (std::uint64_t m = key_.x | key_.z; m; m &= m - 1) {
        std::size_t q = std::countr_zero(m) + 1;
        if (!s.empty()) {
            s += '*';
        }
        s += letter_char(letter(q));
        s += std::to_string(q);
    }
    return s;
}

int pauli_mul_phase(const PauliKey &a, const PauliKey &b) {
    PauliKey c{a.x ^ b.x, a.z ^ b.z};
    int k = std::popcount(a.x & a.z) + std::popcount(b.x & b.z) + 2 * std::popcount(a.z & b.x) -
            std::popcount(c.x & c.z);
    return ((k % 4) + 4) % 4;
}

PauliProduct pauli_mul(const PauliString &a, const PauliString &b) {
    if (a.num_qubits() != b.num_qubits()) {
        throw DimensionError("Pauli strings on different qubit counts");
    }
    PauliKey c{a.key().x ^ b.key().x, a.key().z ^ b.key().z};
    return {kIPow[pauli_mul_phase(a.key(), b.key())], PauliString(a.num_qubits(), c)};
}

QubitOperator::QubitOperator(std::size_t n, double prune_epsilon) : n_(n), eps_(prune_epsilon) {
    if (n > kMaxBits) {
        throw DimensionError("at most 64 qubits supported");
    }
}

QubitOperator QubitOperator::identity(std::size_t n, Complex c, double prune_epsilon) {
    QubitOperator op(n, prune_epsilon);
    op.add(PauliKey{}, c);
    return op;
}

QubitOperator QubitOperator::term(const PauliString &s, Complex c, double prune_epsilon) {
    QubitOperator op(s.num_qubits(), prune_epsilon);
    op.add(s, c);
    return op;
}

void QubitOperator::add(const PauliString &s, Complex c) {
    if (s.num_qubits() != n_) {
        throw DimensionError("adding a " + std::to_string(s.num_qubits()) + "-qubit string to a " +
                             std::to_string(n_) + "-qubit operator");
    }
    add(s.key(), c);
}

void QubitOperator::add(const PauliKey &k, Complex c) {
    auto [it, inserted] = terms_.try_emplace(k, c);
    if (!inserted) {
        it->second += c;
    }
    if (std::abs(it->second) <= eps_) {
        terms_.erase(it);
    }
}

Complex QubitOperator::coefficient(const PauliString &s) const {
    auto it = terms_.find(s.key());
    return it == terms_.end() ? Complex{} : it->second;
}

std::vector<std::pair<PauliString, Complex>> QubitOperator::sorted_terms() const {
    std::vector<std::pair<PauliString, Complex>> out;
    out.reserve(terms_.size());
    for (const auto &[k, c] : terms_) {
        out.emplace_back(PauliString(n_, k), c);
    }
    std::sort(out.begin(), out.end(), [](const auto &a, const auto &b) { return a.first < b.first; });
    return out;
}

void QubitOperator::prune() {
    std::erase_if(terms_, [this](const auto &kv) { return std::abs(kv.second) <= eps_; });
}

QubitOperator &QubitOperator::operator+=(const QubitOperator &other) {
    check_same(*this, other);
    for (const auto &[k, c] : other.terms_) {
        add(k, c);
    }
    return *this;
}

QubitOperator &QubitOperator::operator-=(const QubitOperator &other) {
    check_same(*this, other);
    for (const auto &[k, c] : other.terms_) {
        add(k, -c);
    }
    return *this;
}

QubitOperator &QubitOperator::operator*=(Complex c) {
    for (auto &kv : terms_) {
        kv.second *= c;
    }
    prune();
    return *this;
}

QubitOperator QubitOperator::adjoint() const {
    QubitOperator r = *this;
    for (auto &kv : r.terms_) {
        kv.second = std::conj(kv.second);
    }
    return r;
}

std::string QubitOperator::str() const {
    if (terms_.empty()) {
        return "0";
    }
    std::string s;
    char buf[96];
    for (const auto &[p, c] : sorted_terms()) {
        std::snprintf(buf, sizeof buf, "(%.6g%+.6gi) ", c.real(), c.imag());
        if (!s.empty()) {
            s += " + ";
        }
        s += buf;
        s += p.str();
    }
    return s;
}

QubitOperator op_add(const QubitOperator &a, const QubitOperator &b) {
    QubitOperator r = a;
    r += b;
    return r;
}

QubitOperator op_mul(const QubitOperator &a, const QubitOperator &b) {
    check_same(a, b);
    QubitOperator r(a.num_qubits(), a.prune_epsilon());
    QubitOperator::TermMap acc;
    acc.reserve(a.size() * b.size());
    for (const auto &[ka, ca] : a.terms()) {
        for (const auto &[kb, cb] : b.terms()) {
            PauliKey kc{ka.x ^ kb.x, ka.z ^ kb.z};
            acc[kc] += kIPow[pauli_mul_phase(ka, kb)] * ca * cb;
        }
    }
    for (const auto &[k, c] : acc) {
        r.add(k, c);
    }
    return r;
}

QubitOperator op_scale(const QubitOperator &a, Complex c) {
    QubitOperator r = a;
    r *= c;
    return r;
}

bool approx_equal(const QubitOperator &a, const QubitOperator &b, double tol) {
    if (a.num_qubits() != b.num_qubits()) {
        return false;
    }
    for (const auto &[k, c] : a.terms()) {
        auto it = b.terms().find(k);
        Complex o = it == b.terms().end() ? Complex{} : it->second;
        if (std::abs(c - o) > tol) {
            return false;
        }
    }
    for (const auto &[k, c] : b.terms()) {
        if (!a.terms().count(k) && std::abs(c) > tol) {
            return false;
        }
    }
    return true;
}

namespace {

using DiagMap = std::unordered_map<std::uint64_t, double>;

// I - 2 prod_{j in m} (I - Z_j)/2, as Z-mask -> coefficient.
DiagMap monomial_factor(std::uint64_t m) {
    DiagMap out;
    if (m == 0) {
        out[0] = -1.0;
        return out;
    }
    int d = std::popcount(m);
    double scale = std::ldexp(1.0, 1 - d);
    // subsets of m
    std::uint64_t s = 0;
    do {
        double sign = (std::popcount(s) & 1) ? -1.0 : 1.0;
        out[s] -= scale * sign;
        s = (s - m) & m;
    } while (s != 0);
    out[0] += 1.0;
    std::erase_if(out, [](const auto &kv) { return kv.second == 0.0; });
    return out;
}

DiagMap diag_mul(const DiagMap &a, const DiagMap &b, std::size_t budget) {
    DiagMap out;
    for (const auto &[za, ca] : a) {
        for (const auto &[zb, cb] : b) {
            out[za ^ zb] += ca * cb;
        }
    }
    std::erase_if(out, [](const auto &kv) { return std::abs(kv.second) <= kDefaultPruneEpsilon; });
    if (out.size() > budget) {
        throw ResourceError("extraction exceeds term budget of " + std::to_string(budget));
    }
    return out;
}

}  // namespace

QubitOperator extract(const BoolPoly &f, std::size_t n, std::size_t budget) {
    if (f.num_vars() != n) {
        throw DimensionError("extracting a polynomial over " + std::to_string(f.num_vars()) + " variables on " +
                             std::to_string(n) + " qubits");
    }
    DiagMap acc{{0, 1.0}};
    for (Monomial m : f.monomials()) {
        acc = diag_mul(acc, monomial_factor(m), budget);
    }
    QubitOperator op(n);
    for (const auto &[z, c] : acc) {
        op.add(PauliKey{0, z}, c);
    }
    return op;
}

QubitOperator cphase_expand(const std::vector<std::size_t> &indices, std::size_t n) {
    if (indices.empty()) {
        throw PreconditionError("cphase_expand needs a nonempty index set");
    }
    std::uint64_t m = 0;
    for (std::size_t j : indices) {
        check_qubit(j, n);
        m |= std::uint64_t{1} << (j - 1);
    }
    QubitOperator op(n);
    for (const auto &[z, c] : monomial_factor(m)) {
        op.add(PauliKey{0, z}, c);
    }
    return op;
}

HermiticityReport check_hermitian(const QubitOperator &op, double tol) {
    HermiticityReport rep;
    for (const auto &[s, c] : op.sorted_terms()) {
        if (std::abs(c.imag()) > tol) {
            rep.hermitian = false;
            rep.witness = s;
            rep.witness_coeff = c;
            break;
        }
    }
    return rep;
}

PauliStats count_stats(const QubitOperator &op) {
    PauliStats st;
    for (const auto &[k, c] : op.terms()) {
        ++st.terms;
        st.gate_weight += std::popcount(k.x | k.z);
        if (!k.x && !k.z) {
            st.has_identity = true;
        }
    }
    return st;
}

}  // namespace fermicode
