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

#include "fermicode/transform.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <map>

#include "fermicode/errors.hpp"

namespace fermicode {

std::string FermionTerm::ops_str() const {
    std::string s;
    for (const auto &op : ops) {
        if (!s.empty()) {
            s += ' ';
        }
        s += (op.dagger ? '+' : '-') + std::to_string(op.mode);
    }
    return s;
}

bool FermionTerm::is_blocked() const {
    if (ops.size() % 2) {
        return false;
    }
    for (std::size_t k = 0; k < ops.size(); ++k) {
        if (ops[k].dagger != (k % 2 == 0)) {
            return false;
        }
    }
    return true;
}

bool FermionTerm::conserves_number() const {
    std::size_t c = std::count_if(ops.begin(), ops.end(), [](const FermionOp &o) { return o.dagger; });
    return 2 * c == ops.size();
}

FermionHamiltonian &FermionHamiltonian::add(Complex coeff, std::vector<FermionOp> ops) {
    terms.push_back(FermionTerm{coeff, std::move(ops)});
    return *this;
}

void FermionHamiltonian::validate() const {
    for (const auto &t : terms) {
        for (const auto &op : t.ops) {
            if (op.mode < 1 || op.mode > N) {
                throw DimensionError("mode " + std::to_string(op.mode) + " outside 1.." + std::to_string(N));
            }
        }
    }
}

BoolPoly parity_function(const Code &code, std::size_t j) {
    if (j < 1 || j > code.num_modes()) {
        throw DimensionError("mode " + std::to_string(j) + " outside 1.." + std::to_string(code.num_modes()));
    }
    BoolPoly p(code.num_qubits());
    for (std::size_t i = 1; i < j; ++i) {
        p += code.decode(i);
    }
    return p;
}

namespace {

std::vector<BoolPoly> epsilon_between(const Code &in, const Code &out, std::uint64_t q, std::size_t budget) {
    std::size_t n = in.num_qubits();
    if (n <= 16 && (std::size_t{1} << n) <= budget) {
        // pointwise, then back to ANF
        std::vector<std::vector<bool>> tables(n, std::vector<bool>(std::size_t{1} << n));
        for (std::uint64_t omega = 0; omega < (std::uint64_t{1} << n); ++omega) {
            std::uint64_t e = out.encode_mask(in.decode_mask(omega) ^ q) ^ omega;
            for (std::size_t k = 0; k < n; ++k) {
                tables[k][omega] = (e >> k) & 1;
            }
        }
        std::vector<BoolPoly> eps;
        for (std::size_t k = 0; k < n; ++k) {
            eps.push_back(BoolPoly::from_truth_table(n, tables[k]));
        }
        return eps;
    }
    std::vector<BoolPoly> subs;
    for (std::size_t i = 1; i <= in.num_modes(); ++i) {
        subs.push_back(in.decode(i) + BoolPoly::constant(n, (q >> (i - 1)) & 1));
    }
    std::vector<BoolPoly> eps;
    for (std::size_t k = 1; k <= n; ++k) {
        eps.push_back(bp_compose(out.encode(k), subs, budget) + BoolPoly::variable(n, k));
    }
    return eps;
}

QubitOperator x_string(std::size_t n, std::uint64_t mask, double eps) {
    return QubitOperator::term(PauliString::x_string(n, mask), 1.0, eps);
}

QubitOperator half_projector(const QubitOperator &x, bool value, double eps) {
    // (I + (-1)^value x) / 2
    QubitOperator r = QubitOperator::identity(x.num_qubits(), 0.5, eps);
    QubitOperator s = op_scale(x, value ? -0.5 : 0.5);
    r += s;
    return r;
}

// sum_t X^t prod_k (I + (-1)^t_k X[eps_k]) / 2
QubitOperator update_from_epsilon(const std::vector<BoolPoly> &eps, std::size_t n, const TransformOptions &opts) {
    std::uint64_t fixed = 0, support = 0;
    std::vector<std::size_t> varying;
    for (std::size_t k = 0; k < n; ++k) {
        if (eps[k].is_constant()) {
            if (eps[k].constant_term()) {
                fixed |= std::uint64_t{1} << k;
            }
        } else {
            varying.push_back(k);
            support |= eps[k].support();
        }
    }
    if (varying.empty()) {
        return x_string(n, fixed, opts.prune_epsilon);
    }
    QubitOperator U(n, opts.prune_epsilon);
    auto emit = [&](std::uint64_t t, const QubitOperator &proj) {
        U += op_mul(x_string(n, t, opts.prune_epsilon), proj);
        if (U.size() > opts.budget) {
            throw ResourceError("update operator exceeds term budget");
        }
    };
    std::size_t s = std::popcount(support);
    if (s < 63 && (std::uint64_t{1} << s) <= opts.budget) {
        // only patterns reachable as eps(omega); each projector product is the
        // diagonal indicator of eps(omega) == t, expanded in Z strings by a Walsh transform
        std::vector<int> bits;
        for (std::uint64_t m = support; m; m &= m - 1) {
            bits.push_back(std::countr_zero(m));
        }
        auto spread = [&](std::uint64_t a) {
            std::uint64_t omega = 0;
            for (std::size_t b = 0; b < bits.size(); ++b) {
                if ((a >> b) & 1) {
                    omega |= std::uint64_t{1} << bits[b];
                }
            }
            return omega;
        };
        std::size_t dim = std::size_t{1} << s;
        std::map<std::uint64_t, std::vector<std::uint64_t>> patterns;
        for (std::uint64_t a = 0; a < dim; ++a) {
            std::uint64_t omega = spread(a);
            std::uint64_t t = fixed;
            for (std::size_t k : varying) {
                if (eps[k].eval_mask(omega)) {
                    t |= std::uint64_t{1} << k;
                }
            }
            patterns[t].push_back(a);
        }
        std::vector<double> g(dim);
        for (const auto &[t, hits] : patterns) {
            std::fill(g.begin(), g.end(), 0.0);
            for (std::uint64_t a : hits) {
                g[a] = 1.0;
            }
            for (std::size_t h = 1; h < dim; h <<= 1) {
                for (std::size_t i = 0; i < dim; i += 2 * h) {
                    for (std::size_t j = i; j < i + h; ++j) {
                        double x = g[j], y = g[j + h];
                        g[j] = x + y;
                        g[j + h] = x - y;
                    }
                }
            }
            QubitOperator proj(n, opts.prune_epsilon);
            for (std::uint64_t z = 0; z < dim; ++z) {
                if (g[z] != 0.0) {
                    proj.add(PauliString::z_string(n, spread(z)), g[z] / static_cast<double>(dim));
                }
            }
            if (!proj.empty()) {
                emit(t, proj);
            }
        }
    } else {
        // depth-first over t with zero-projector pruning
        std::vector<QubitOperator> ext;
        for (std::size_t k : varying) {
            ext.push_back(extract(eps[k], n, opts.budget));
        }
        std::function<void(std::size_t, std::uint64_t, const QubitOperator &)> rec =
            [&](std::size_t v, std::uint64_t t, const QubitOperator &proj) {
                if (proj.empty()) {
                    return;
                }
                if (v == varying.size()) {
                    emit(t, proj);
                    return;
                }
                for (int bit = 0; bit < 2; ++bit) {
                    rec(v + 1, bit ? t | (std::uint64_t{1} << varying[v]) : t,
                        op_mul(proj, half_projector(ext[v], bit, opts.prune_epsilon)));
                }
            };
        rec(0, fixed, QubitOperator::identity(n, 1.0, opts.prune_epsilon));
    }
    return U;
}

std::uint64_t q_mask(const Code &code, const BitVec &q) {
    if (q.size() != code.num_modes()) {
        throw DimensionError("update vector of length " + std::to_string(q.size()) + " for an N=" +
                             std::to_string(code.num_modes()) + " code");
    }
    return q.mask();
}

void check_mode(const Code &code, std::size_t j) {
    if (j < 1 || j > code.num_modes()) {
        throw DimensionError("mode " + std::to_string(j) + " outside 1.." + std::to_string(code.num_modes()));
    }
}

}  // namespace

std::vector<BoolPoly> update_epsilon(const Code &code, const BitVec &q, std::size_t budget) {
    return epsilon_between(code, code, q_mask(code, q), budget);
}

QubitOperator update_operator(const Code &code, const BitVec &q, const TransformOptions &opts) {
    std::uint64_t qm = q_mask(code, q);
    if (code.encode_is_linear()) {
        return x_string(code.num_qubits(), (code.encode_matrix() * q).mask(), opts.prune_epsilon);
    }
    return update_from_epsilon(epsilon_between(code, code, qm, opts.budget), code.num_qubits(), opts);
}

QubitOperator cross_update_operator(const Code &code_in, const Code &code_out, const BitVec &q,
                                    const TransformOptions &opts) {
    if (code_in.num_qubits() != code_out.num_qubits() || code_in.num_modes() != code_out.num_modes()) {
        throw DimensionError("codes differ in N or n");
    }
    return update_from_epsilon(epsilon_between(code_in, code_out, q_mask(code_in, q), opts.budget),
                               code_in.num_qubits(), opts);
}

CodeTransformer::CodeTransformer(Code code, TransformOptions opts)
    : code_(std::move(code)), opts_(opts), linear_encode_(code_.encode_is_linear()) {
    std::size_t n = code_.num_qubits();
    parity_.reserve(code_.num_modes());
    BoolPoly p(n);
    for (std::size_t j = 1; j <= code_.num_modes(); ++j) {
        parity_.push_back(p);
        p += code_.decode(j);
    }
    if (linear_encode_) {
        enc_lin_ = code_.encode_matrix();
    }
}

const BoolPoly &CodeTransformer::parity(std::size_t j) const {
    check_mode(code_, j);
    return parity_[j - 1];
}

const QubitOperator &CodeTransformer::projector(std::size_t mode, bool value) {
    auto key = std::make_pair(mode, value);
    auto it = projectors_.find(key);
    if (it == projectors_.end()) {
        QubitOperator x = extract(code_.decode(mode), code_.num_qubits(), opts_.budget);
        it = projectors_.emplace(key, half_projector(x, value, opts_.prune_epsilon)).first;
    }
    return it->second;
}

const QubitOperator &CodeTransformer::update(std::uint64_t q) {
    auto it = updates_.find(q);
    if (it == updates_.end()) {
        BitVec qv(code_.num_modes(), q);
        QubitOperator u = linear_encode_ ? x_string(code_.num_qubits(), (enc_lin_ * qv).mask(), opts_.prune_epsilon)
                                         : update_from_epsilon(epsilon_between(code_, code_, q, opts_.budget),
                                                               code_.num_qubits(), opts_);
        it = updates_.emplace(q, std::move(u)).first;
    }
    return it->second;
}

QubitOperator CodeTransformer::apply_update(std::uint64_t q, const QubitOperator &diag) {
    const QubitOperator &u = update(q);
    if (u.size() == 1 && linear_encode_) {
        const auto &[ku, cu] = *u.terms().begin();
        if (ku.z == 0 && cu == Complex(1.0)) {
            if (ku.x == 0) {
                return diag;
            }
            static const Complex ipow[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
            QubitOperator r(diag.num_qubits(), opts_.prune_epsilon);
            for (const auto &[k, c] : diag.terms()) {
                r.add(PauliKey{k.x ^ ku.x, k.z}, ipow[pauli_mul_phase(ku, k)] * c);
            }
            return r;
        }
    }
    return op_mul(u, diag);
}

QubitOperator CodeTransformer::term(const FermionTerm &t) {
    std::size_t n = code_.num_qubits();
    std::size_t l = t.ops.size();
    for (const auto &op : t.ops) {
        check_mode(code_, op.mode);
    }
    int sign = 1;
    std::uint64_t q = 0;
    for (std::size_t v = 0; v < l; ++v) {
        q ^= std::uint64_t{1} << (t.ops[v].mode - 1);
        for (std::size_t w = v + 1; w < l; ++w) {
            if (t.ops[v].mode > t.ops[w].mode) {
                sign = -sign;
            }
        }
    }
    // projector conditions d_a(omega) = 1 + b + #{later ops on a}, grouped by mode
    std::map<std::size_t, bool> need;
    BoolPoly P(n);
    for (std::size_t x = 0; x < l; ++x) {
        std::size_t a = t.ops[x].mode;
        std::size_t later = 0;
        for (std::size_t y = x + 1; y < l; ++y) {
            later += t.ops[y].mode == a;
        }
        bool r = (1 + t.ops[x].dagger + later) & 1;
        auto [it, inserted] = need.emplace(a, r);
        if (!inserted && it->second != r) {
            return QubitOperator(n, opts_.prune_epsilon);
        }
        P += parity_[a - 1];
    }
    QubitOperator D = QubitOperator::identity(n, t.coeff * static_cast<double>(sign), opts_.prune_epsilon);
    for (const auto &[m, r] : need) {
        D = op_mul(D, projector(m, r));
        if (D.empty()) {
            return D;
        }
    }
    if (!P.is_zero()) {
        D = op_mul(D, extract(P, n, opts_.budget));
    }
    return apply_update(q, D);
}

QubitOperator CodeTransformer::pair(std::size_t i, std::size_t j) {
    check_mode(code_, i);
    check_mode(code_, j);
    std::size_t n = code_.num_qubits();
    QubitOperator I = QubitOperator::identity(n, 1.0, opts_.prune_epsilon);
    QubitOperator xdj = extract(code_.decode(j), n, opts_.budget);
    if (i == j) {
        return op_scale(I - xdj, 0.5);
    }
    QubitOperator xdi = extract(code_.decode(i), n, opts_.budget);
    QubitOperator r = op_mul(extract(parity_[i - 1], n, opts_.budget), extract(parity_[j - 1], n, opts_.budget));
    r = op_mul(r, I + xdi);
    r = op_mul(r, I - xdj);
    r = op_mul(update((std::uint64_t{1} << (i - 1)) ^ (std::uint64_t{1} << (j - 1))), r);
    return op_scale(r, i > j ? -0.25 : 0.25);
}

QubitOperator transform_term(const Code &code, const FermionTerm &term, const TransformOptions &opts) {
    CodeTransformer tr(code, opts);
    return tr.term(term);
}

TransformResult transform_hamiltonian(const Code &code, const FermionHamiltonian &H, const TransformOptions &opts) {
    if (H.N != code.num_modes()) {
        throw DimensionError("Hamiltonian on " + std::to_string(H.N) + " modes, code on " +
                             std::to_string(code.num_modes()));
    }
    H.validate();
    CodeTransformer tr(code, opts);
    TransformResult res{QubitOperator(code.num_qubits(), opts.prune_epsilon), {}, H.terms.size()};
    for (const auto &t : H.terms) {
        res.op += tr.term(t);
    }
    res.hermiticity = check_hermitian(res.op, 1e-10);
    return res;
}

LinearSets linear_sets(const Code &code, std::size_t j) {
    if (!code.matrix_a()) {
        throw UnsupportedError("parity/flip/update sets need a square linear code with stored matrices");
    }
    check_mode(code, j);
    const BitMat &A = *code.matrix_a();
    const BitMat &Ainv = *code.matrix_a_inv();
    std::size_t N = code.num_modes();
    BitVec prow(N);
    for (std::size_t i = 1; i < j; ++i) {
        prow += Ainv.row(i);
    }
    return {prow.support(), Ainv.row(j).support(), A.col(j).support()};
}

QubitOperator transform_op_linear(const Code &code, std::size_t j, bool dagger) {
    LinearSets s = linear_sets(code, j);
    std::size_t n = code.num_qubits();
    auto mask = [](const std::vector<std::size_t> &v) {
        std::uint64_t m = 0;
        for (auto i : v) {
            m |= std::uint64_t{1} << (i - 1);
        }
        return m;
    };
    QubitOperator x = QubitOperator::term(PauliString::x_string(n, mask(s.update_set)));
    QubitOperator zf = QubitOperator::term(PauliString::z_string(n, mask(s.flip_set)));
    QubitOperator zp = QubitOperator::term(PauliString::z_string(n, mask(s.parity_set)));
    QubitOperator mid = QubitOperator::identity(n) - op_scale(zf, dagger ? -1.0 : 1.0);
    return op_scale(op_mul(op_mul(x, mid), zp), 0.5);
}

QubitOperator transform_single_two_codes(const Code &code_even, const Code &code_odd, std::size_t j, bool dagger,
                                         const TransformOptions &opts) {
    if (code_even.num_qubits() != code_odd.num_qubits() || code_even.num_modes() != code_odd.num_modes()) {
        throw DimensionError("even and odd codes differ in N or n");
    }
    check_mode(code_even, j);
    const Code &in = dagger ? code_odd : code_even;
    const Code &out = dagger ? code_even : code_odd;
    std::size_t n = in.num_qubits();
    QubitOperator xd = extract(in.decode(j), n, opts.budget);
    QubitOperator proj = op_scale(QubitOperator::identity(n, 1.0, opts.prune_epsilon) + op_scale(xd, dagger ? 1.0 : -1.0), 0.5);
    QubitOperator diag = op_mul(proj, extract(parity_function(in, j), n, opts.budget));
    QubitOperator u = cross_update_operator(in, out, BitVec::unit(in.num_modes(), j), opts);
    return op_mul(u, diag);
}

QubitOperator transform_pair(const Code &code, std::size_t i, std::size_t j, const TransformOptions &opts) {
    CodeTransformer tr(code, opts);
    return tr.pair(i, j);
}

namespace {

struct TermAccumulator {
    std::vector<FermionTerm> terms;
    std::map<std::vector<std::pair<std::size_t, bool>>, std::size_t> index;

    void add(Complex c, const std::vector<FermionOp> &ops) {
        std::vector<std::pair<std::size_t, bool>> key;
        for (const auto &o : ops) {
            key.emplace_back(o.mode, o.dagger);
        }
        auto [it, inserted] = index.emplace(key, terms.size());
        if (inserted) {
            terms.push_back(FermionTerm{c, ops});
        } else {
            terms[it->second].coeff += c;
        }
    }
};

void order_term(Complex coeff, std::vector<FermionOp> ops, TermAccumulator &acc) {
    for (std::size_t k = 0; k < ops.size(); ++k) {
        bool want = k % 2 == 0;
        if (ops[k].dagger == want) {
            continue;
        }
        std::size_t m = ops.size();
        if (want) {
            for (std::size_t s = k + 1; s < ops.size(); ++s) {
                if (ops[s].dagger) {
                    m = s;
                    break;
                }
            }
        } else {
            for (std::size_t s = ops.size(); s-- > k + 1;) {
                if (!ops[s].dagger) {
                    m = s;
                    break;
                }
            }
        }
        if (m == ops.size()) {
            throw UnsupportedError("term does not conserve particle number");
        }
        // bubble ops[m] down to position k: A B = -B A + {A, B}
        for (std::size_t s = m; s > k; --s) {
            FermionOp a = ops[s - 1], b = ops[s];
            if (a.mode == b.mode && a.dagger != b.dagger) {
                std::vector<FermionOp> contracted;
                contracted.insert(contracted.end(), ops.begin(), ops.begin() + (s - 1));
                contracted.insert(contracted.end(), ops.begin() + (s + 1), ops.end());
                order_term(coeff, std::move(contracted), acc);
            }
            std::swap(ops[s - 1], ops[s]);
            coeff = -coeff;
        }
    }
    acc.add(coeff, ops);
}

}  // namespace

FermionHamiltonian normal_order_blocks(const FermionHamiltonian &H) {
    H.validate();
    TermAccumulator acc;
    for (const auto &t : H.terms) {
        if (!t.conserves_number()) {
            throw UnsupportedError("term '" + t.ops_str() + "' does not conserve particle number");
        }
        order_term(t.coeff, t.ops, acc);
    }
    FermionHamiltonian out(H.N);
    for (auto &t : acc.terms) {
        if (t.coeff != Complex(0.0)) {
            out.terms.push_back(std::move(t));
        }
    }
    return out;
}

FermionHamiltonian adjust_for_segments(const FermionHamiltonian &H, const std::vector<SegmentBlock> &segments) {
    H.validate();
    std::vector<int> seg_of(H.N + 1, -1);
    for (std::size_t s = 0; s < segments.size(); ++s) {
        for (std::size_t m : segments[s].modes) {
            if (m < 1 || m > H.N) {
                throw DimensionError("segment mode outside 1.." + std::to_string(H.N));
            }
            if (seg_of[m] != -1) {
                throw PreconditionError("segments overlap at mode " + std::to_string(m));
            }
            seg_of[m] = static_cast<int>(s);
        }
    }
    // 1 - sum_{|S| = K, S in segment} prod n_s, as signed operator sequences
    using Seq = std::pair<double, std::vector<FermionOp>>;
    auto dressing = [&](int s) {
        std::vector<Seq> out{{1.0, {}}};
        const auto &modes = segments[s].modes;
        std::size_t K = segments[s].max_weight;
        std::vector<std::size_t> sorted = modes;
        std::sort(sorted.begin(), sorted.end());
        std::function<void(std::size_t, std::vector<FermionOp> &, std::size_t)> rec = [&](std::size_t start,
                                                                                         std::vector<FermionOp> &cur,
                                                                                         std::size_t left) {
            if (left == 0) {
                out.emplace_back(-1.0, cur);
                return;
            }
            for (std::size_t i = start; i + left <= sorted.size(); ++i) {
                cur.push_back(cr(sorted[i]));
                cur.push_back(an(sorted[i]));
                rec(i + 1, cur, left - 1);
                cur.pop_back();
                cur.pop_back();
            }
        };
        std::vector<FermionOp> cur;
        if (K <= sorted.size()) {
            rec(0, cur, K);
        }
        return out;
    };
    FermionHamiltonian out(H.N);
    for (const auto &t : H.terms) {
        if (!t.is_blocked()) {
            throw PreconditionError("term '" + t.ops_str() + "' is not in blocked creation/annihilation form");
        }
        std::vector<Seq> acc{{1.0, {}}};
        for (std::size_t k = 0; k < t.ops.size(); k += 2) {
            std::size_t i = t.ops[k].mode, j = t.ops[k + 1].mode;
            std::vector<Seq> left{{1.0, {}}}, right{{1.0, {}}};
            if (seg_of[i] != seg_of[j]) {
                if (seg_of[j] >= 0) {
                    left = dressing(seg_of[j]);
                }
                if (seg_of[i] >= 0) {
                    right = dressing(seg_of[i]);
                }
            }
            std::vector<Seq> next;
            for (const auto &[ca, a] : acc) {
                for (const auto &[cl, l] : left) {
                    for (const auto &[crt, r] : right) {
                        std::vector<FermionOp> ops = a;
                        ops.insert(ops.end(), l.begin(), l.end());
                        ops.push_back(t.ops[k]);
                        ops.push_back(t.ops[k + 1]);
                        ops.insert(ops.end(), r.begin(), r.end());
                        next.emplace_back(ca * cl * crt, std::move(ops));
                    }
                }
            }
            acc = std::move(next);
        }
        for (auto &[c, ops] : acc) {
            out.terms.push_back(FermionTerm{t.coeff * c, std::move(ops)});
        }
    }
    return out;
}

FermionHamiltonian adjust_for_segments(const FermionHamiltonian &H, const std::vector<std::vector<std::size_t>> &segments,
                                       std::size_t K) {
    std::vector<SegmentBlock> blocks;
    for (const auto &s : segments) {
        blocks.push_back(SegmentBlock{s, K});
    }
    return adjust_for_segments(H, blocks);
}

}  // namespace fermicode
