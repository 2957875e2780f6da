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

#include "fermicode/fock_oracle.hpp"

#include <bit>
#include <cstdio>
#include <sstream>

#include "fermicode/errors.hpp"
#include "json.hpp"

namespace fermicode {

namespace {

const Complex kIPow[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};

}  // namespace

SparseState SparseState::basis(const BitVec &v, Complex c) {
    SparseState s(v.size());
    s.add(v, c);
    return s;
}

void SparseState::add(const BitVec &v, Complex c) {
    if (v.size() != len) {
        throw DimensionError("state component of length " + std::to_string(v.size()) + ", expected " +
                             std::to_string(len));
    }
    auto [it, inserted] = amps.try_emplace(v, c);
    if (!inserted) {
        it->second += c;
    }
    if (it->second == Complex(0.0)) {
        amps.erase(it);
    }
}

Complex SparseState::amplitude(const BitVec &v) const {
    auto it = amps.find(v);
    return it == amps.end() ? Complex{} : it->second;
}

double SparseState::max_diff(const SparseState &other) const {
    double m = 0;
    for (const auto &[v, c] : amps) {
        m = std::max(m, std::abs(c - other.amplitude(v)));
    }
    for (const auto &[v, c] : other.amps) {
        if (!amps.count(v)) {
            m = std::max(m, std::abs(c));
        }
    }
    return m;
}

std::optional<FermionImage> apply_fermion_term(const FermionTerm &term, const BitVec &nu) {
    std::uint64_t occ = nu.mask();
    int sign = 1;
    for (auto it = term.ops.rbegin(); it != term.ops.rend(); ++it) {
        if (it->mode < 1 || it->mode > nu.size()) {
            throw DimensionError("mode " + std::to_string(it->mode) + " outside 1.." + std::to_string(nu.size()));
        }
        std::uint64_t bit = std::uint64_t{1} << (it->mode - 1);
        if (static_cast<bool>(occ & bit) == it->dagger) {
            return std::nullopt;
        }
        if (std::popcount(occ & (bit - 1)) & 1) {
            sign = -sign;
        }
        occ ^= bit;
    }
    return FermionImage{term.coeff * static_cast<double>(sign), BitVec(nu.size(), occ)};
}

FockStateVector apply_hamiltonian_fock(const FermionHamiltonian &H, const FockStateVector &s) {
    if (s.len != H.N) {
        throw DimensionError("state on " + std::to_string(s.len) + " modes, Hamiltonian on " + std::to_string(H.N));
    }
    FockStateVector out(H.N);
    for (const auto &[nu, a] : s.amps) {
        for (const auto &t : H.terms) {
            if (auto img = apply_fermion_term(t, nu)) {
                out.add(img->nu, img->coeff * a);
            }
        }
    }
    return out;
}

QubitStateVector apply_qubit_operator(const QubitOperator &op, const QubitStateVector &s) {
    if (s.len != op.num_qubits()) {
        throw DimensionError("state on " + std::to_string(s.len) + " qubits, operator on " +
                             std::to_string(op.num_qubits()));
    }
    QubitStateVector out(s.len);
    for (const auto &[w, a] : s.amps) {
        std::uint64_t omega = w.mask();
        for (const auto &[k, c] : op.terms()) {
            int ph = std::popcount(k.x & k.z) + 2 * std::popcount(k.z & omega);
            out.add(BitVec(s.len, omega ^ k.x), kIPow[ph & 3] * c * a);
        }
    }
    return out;
}

std::string EquivalenceReport::status_str() const {
    switch (status) {
        case Status::Pass:
            return "pass";
        case Status::Mismatch:
            return "mismatch";
        case Status::Incompatible:
            return "incompatible";
    }
    return "unknown";
}

std::string EquivalenceReport::summary() const {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.3g", max_deviation);
    std::ostringstream os;
    os << "status=" << status_str() << " checked=" << checked << " max_deviation=" << buf
       << " failures=" << failure_count << " incompatible=" << incompatible_count;
    return os.str();
}

std::string EquivalenceReport::to_json() const {
    nlohmann::json j;
    j["status"] = status_str();
    j["max_deviation"] = max_deviation;
    j["checked"] = checked;
    j["failure_count"] = failure_count;
    j["incompatible_count"] = incompatible_count;
    j["failures"] = nlohmann::json::array();
    for (const auto &f : failures) {
        j["failures"].push_back({{"nu", f.nu.str()}, {"detail", f.detail}});
    }
    return j.dump(2);
}

EquivalenceReport verify_equivalence(const Code &code, const FermionHamiltonian &H, const QubitOperator &Hq,
                                     const std::vector<BitVec> &basis, double tol, std::size_t max_listed) {
    if (H.N != code.num_modes() || Hq.num_qubits() != code.num_qubits()) {
        throw DimensionError("Hamiltonian, code and qubit operator sizes disagree");
    }
    EquivalenceReport rep;
    auto note = [&](const BitVec &nu, std::string detail) {
        if (rep.failures.size() < max_listed) {
            rep.failures.push_back({nu, std::move(detail)});
        }
    };
    auto encodable = [&](const BitVec &v) { return code.decode_mask(code.encode_mask(v.mask())) == v.mask(); };
    for (const auto &nu : basis) {
        ++rep.checked;
        if (!encodable(nu)) {
            ++rep.failure_count;
            note(nu, "basis vector is not reproduced by decode(encode(nu))");
            if (rep.status == EquivalenceReport::Status::Pass) {
                rep.status = EquivalenceReport::Status::Mismatch;
            }
            continue;
        }
        FockStateVector image = apply_hamiltonian_fock(H, FockStateVector::basis(nu));
        QubitStateVector expected(code.num_qubits());
        bool compatible = true;
        for (const auto &[v, a] : image.amps) {
            if (std::abs(a) <= tol) {
                continue;
            }
            if (!encodable(v)) {
                compatible = false;
                note(nu, "image " + v.str() + " leaves the encoded space");
                break;
            }
            expected.add(code.encode_vec(v), a);
        }
        if (!compatible) {
            ++rep.incompatible_count;
            rep.status = EquivalenceReport::Status::Incompatible;
            continue;
        }
        QubitStateVector actual = apply_qubit_operator(Hq, QubitStateVector::basis(code.encode_vec(nu)));
        double dev = actual.max_diff(expected);
        rep.max_deviation = std::max(rep.max_deviation, dev);
        if (dev >= tol) {
            ++rep.failure_count;
            char buf[64];
            std::snprintf(buf, sizeof buf, "%.3g", dev);
            note(nu, std::string("amplitude deviation ") + buf);
            if (rep.status == EquivalenceReport::Status::Pass) {
                rep.status = EquivalenceReport::Status::Mismatch;
            }
        }
    }
    return rep;
}

AnticommutationReport verify_anticommutation(const Code &code, double tol) {
    if (!code.matrix_a() || code.num_qubits() != code.num_modes()) {
        throw UnsupportedError("anticommutation check needs a full-Fock linear code");
    }
    std::size_t N = code.num_modes();
    std::vector<QubitOperator> c, cd;
    for (std::size_t j = 1; j <= N; ++j) {
        c.push_back(transform_op_linear(code, j, false));
        cd.push_back(transform_op_linear(code, j, true));
    }
    AnticommutationReport rep;
    auto check = [&](const QubitOperator &a, const QubitOperator &b, bool delta, const std::string &what) {
        ++rep.checked;
        QubitOperator ac = op_mul(a, b) + op_mul(b, a);
        QubitOperator want = delta ? QubitOperator::identity(code.num_qubits()) : QubitOperator(code.num_qubits());
        if (!approx_equal(ac, want, tol)) {
            rep.passed = false;
            rep.failures.push_back(what + " = " + ac.str());
        }
    };
    for (std::size_t i = 0; i < N; ++i) {
        for (std::size_t j = 0; j < N; ++j) {
            check(c[i], cd[j], i == j, "{c" + std::to_string(i + 1) + ", c" + std::to_string(j + 1) + "^dag}");
            check(c[i], c[j], false, "{c" + std::to_string(i + 1) + ", c" + std::to_string(j + 1) + "}");
            check(cd[i], cd[j], false, "{c" + std::to_string(i + 1) + "^dag, c" + std::to_string(j + 1) + "^dag}");
        }
    }
    return rep;
}

}  // namespace fermicode
