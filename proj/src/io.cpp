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

#include "fermicode/io.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "fermicode/errors.hpp"
#include "json.hpp"

namespace fermicode {

std::string format_real(double x) {
    if (x == 0.0) {
        return "0";
    }
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.15g", x);
    return buf;
}

void write_pauli_file(std::ostream &out, const QubitOperator &op) {
    for (const auto &[s, c] : op.sorted_terms()) {
        out << format_real(c.real()) << ' ' << format_real(c.imag()) << ' ' << s.str() << '\n';
    }
}

namespace {

double parse_real(const std::string &tok, std::size_t line) {
    try {
        std::size_t used = 0;
        double v = std::stod(tok, &used);
        if (used != tok.size()) {
            throw ParseError("bad number '" + tok + "'", line);
        }
        return v;
    } catch (const std::logic_error &) {
        throw ParseError("bad number '" + tok + "'", line);
    }
}

std::string strip_comment(const std::string &s) {
    auto pos = s.find('#');
    return pos == std::string::npos ? s : s.substr(0, pos);
}

}  // namespace

QubitOperator read_pauli_file(std::istream &in, std::size_t n, double prune_epsilon) {
    QubitOperator op(n, prune_epsilon);
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::istringstream ls(strip_comment(line));
        std::string re, im, str, extra;
        if (!(ls >> re)) {
            continue;
        }
        if (!(ls >> im >> str) || (ls >> extra)) {
            throw ParseError("expected '<re> <im> <string>'", lineno);
        }
        try {
            op.add(PauliString::parse(str, n), Complex(parse_real(re, lineno), parse_real(im, lineno)));
        } catch (const ParseError &e) {
            if (e.line) {
                throw;
            }
            throw ParseError(e.what(), lineno);
        }
    }
    return op;
}

void write_fermion_hamiltonian(std::ostream &out, const FermionHamiltonian &H) {
    out << "# modes " << H.N << '\n';
    for (const auto &t : H.terms) {
        out << format_real(t.coeff.real()) << ' ' << format_real(t.coeff.imag()) << " : " << t.ops_str() << '\n';
    }
}

FermionHamiltonian read_fermion_hamiltonian(std::istream &in, std::size_t num_modes) {
    FermionHamiltonian H;
    std::size_t max_mode = 0;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::string body = strip_comment(line);
        if (body.find_first_not_of(" \t\r") == std::string::npos) {
            continue;
        }
        auto colon = body.find(':');
        if (colon == std::string::npos) {
            throw ParseError("expected '<re> <im> : <ops>'", lineno);
        }
        std::istringstream head(body.substr(0, colon));
        std::string re, im, extra;
        if (!(head >> re >> im) || (head >> extra)) {
            throw ParseError("expected two coefficient fields before ':'", lineno);
        }
        FermionTerm t;
        t.coeff = Complex(parse_real(re, lineno), parse_real(im, lineno));
        std::istringstream ops(body.substr(colon + 1));
        std::string tok;
        while (ops >> tok) {
            if (tok.size() < 2 || (tok[0] != '+' && tok[0] != '-') ||
                tok.find_first_not_of("0123456789", 1) != std::string::npos) {
                throw ParseError("bad operator '" + tok + "' (use +k or -k)", lineno);
            }
            std::size_t mode = std::stoul(tok.substr(1));
            if (mode < 1) {
                throw ParseError("modes are 1-based", lineno);
            }
            if (num_modes && mode > num_modes) {
                throw ParseError("mode " + std::to_string(mode) + " exceeds N=" + std::to_string(num_modes), lineno);
            }
            max_mode = std::max(max_mode, mode);
            t.ops.push_back({mode, tok[0] == '+'});
        }
        H.terms.push_back(std::move(t));
    }
    H.N = num_modes ? num_modes : max_mode;
    return H;
}

namespace {

using nlohmann::json;

std::size_t get_size(const json &j, const char *key) {
    if (!j.contains(key) || !j[key].is_number_unsigned()) {
        throw ParseError(std::string("code spec needs a non-negative integer '") + key + "'");
    }
    return j[key].get<std::size_t>();
}

BitVec get_bits(const json &j, const char *key, std::size_t len) {
    if (!j.contains(key)) {
        return BitVec(len);
    }
    const json &a = j[key];
    if (!a.is_array() || a.size() != len) {
        throw ParseError(std::string("'") + key + "' must be an array of " + std::to_string(len) + " bits");
    }
    BitVec v(len);
    for (std::size_t i = 0; i < len; ++i) {
        if (!a[i].is_number_integer() || (a[i].get<int>() != 0 && a[i].get<int>() != 1)) {
            throw ParseError(std::string("'") + key + "' entries must be 0 or 1");
        }
        v.set(i + 1, a[i].get<int>() == 1);
    }
    return v;
}

std::vector<BoolPoly> get_polys(const json &j, const char *key, std::size_t count, std::size_t vars, const BitVec &affine) {
    if (!j.contains(key) || !j[key].is_array() || j[key].size() != count) {
        throw ParseError(std::string("'") + key + "' must be an array of " + std::to_string(count) + " polynomials");
    }
    std::vector<BoolPoly> out;
    for (std::size_t i = 0; i < count; ++i) {
        if (!j[key][i].is_string()) {
            throw ParseError(std::string("'") + key + "' entries must be polynomial strings");
        }
        BoolPoly p = BoolPoly::parse(j[key][i].get<std::string>(), vars);
        if (affine.get(i + 1)) {
            p += BoolPoly::constant(vars, true);
        }
        out.push_back(std::move(p));
    }
    return out;
}

Code code_from_json(const json &j) {
    if (!j.is_object() || !j.contains("kind") || !j["kind"].is_string()) {
        throw ParseError("code spec needs a string 'kind'");
    }
    std::string kind = j["kind"].get<std::string>();
    if (kind == "jordan_wigner") {
        return make_jordan_wigner(get_size(j, "modes"));
    }
    if (kind == "parity") {
        return make_parity_code(get_size(j, "modes"));
    }
    if (kind == "bravyi_kitaev") {
        return make_bravyi_kitaev(get_size(j, "modes"));
    }
    if (kind == "checksum") {
        std::string flavor = j.value("flavor", "even");
        if (flavor != "even" && flavor != "odd") {
            throw ParseError("checksum flavor must be 'even' or 'odd'");
        }
        return make_checksum(get_size(j, "modes"), flavor == "odd" ? ChecksumFlavor::Odd : ChecksumFlavor::Even);
    }
    if (kind == "binary_addressing_k1") {
        return make_binary_addressing_k1(get_size(j, "r"));
    }
    if (kind == "binary_addressing_k2") {
        return make_binary_addressing_k2(get_size(j, "r"));
    }
    if (kind == "segment") {
        return make_segment_code(get_size(j, "K"), get_size(j, "segments"));
    }
    if (kind == "h2") {
        return make_h2_code();
    }
    if (kind == "concat") {
        if (!j.contains("codes") || !j["codes"].is_array() || j["codes"].empty()) {
            throw ParseError("concat needs a nonempty 'codes' array");
        }
        Code c = code_from_json(j["codes"][0]);
        for (std::size_t i = 1; i < j["codes"].size(); ++i) {
            c = concat_codes(c, code_from_json(j["codes"][i]));
        }
        return c;
    }
    if (kind == "custom") {
        std::size_t N = get_size(j, "modes"), n = get_size(j, "qubits");
        if (N < 1 || N > kMaxBits || n > kMaxBits) {
            throw ParseError("custom code sizes must lie in 1..64");
        }
        auto enc = get_polys(j, "encode", n, N, get_bits(j, "encode_affine", n));
        auto dec = get_polys(j, "decode", N, n, get_bits(j, "decode_affine", N));
        Code c(j.value("name", "custom"), std::move(enc), std::move(dec));
        if (N == n && c.encode_is_linear() && c.decode_is_linear() && !c.encode_affine().weight() &&
            !c.decode_affine().weight()) {
            try {
                BitMat a = c.encode_matrix();
                if (mat_inverse_mod2(a) == c.decode_matrix()) {
                    c.set_matrices(a, c.decode_matrix());
                }
            } catch (const NotInvertibleError &) {
            }
        }
        return c;
    }
    throw ParseError("unknown code kind '" + kind + "'");
}

std::vector<std::string> split_on(const std::string &s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    std::istringstream in(s);
    while (std::getline(in, cur, sep)) {
        out.push_back(cur);
    }
    return out;
}

std::size_t builtin_size(const std::vector<std::string> &parts, std::size_t i, const std::string &item) {
    if (parts.size() <= i || parts[i].empty() || parts[i].find_first_not_of("0123456789") != std::string::npos) {
        throw ParseError("builtin code '" + item + "' needs a numeric parameter");
    }
    return std::stoul(parts[i]);
}

Code builtin_single(const std::string &item) {
    auto parts = split_on(item, ':');
    if (parts.empty()) {
        throw ParseError("empty builtin code name");
    }
    const std::string &k = parts[0];
    if (k == "jw" || k == "jordan_wigner") {
        return make_jordan_wigner(builtin_size(parts, 1, item));
    }
    if (k == "parity") {
        return make_parity_code(builtin_size(parts, 1, item));
    }
    if (k == "bk" || k == "bravyi_kitaev") {
        return make_bravyi_kitaev(builtin_size(parts, 1, item));
    }
    if (k == "checksum" || k == "cs") {
        std::string flavor = parts.size() > 2 ? parts[2] : "even";
        if (flavor != "even" && flavor != "odd") {
            throw ParseError("checksum flavor must be 'even' or 'odd'");
        }
        return make_checksum(builtin_size(parts, 1, item), flavor == "odd" ? ChecksumFlavor::Odd : ChecksumFlavor::Even);
    }
    if (k == "ba1" || k == "binary_addressing_k1") {
        return make_binary_addressing_k1(builtin_size(parts, 1, item));
    }
    if (k == "ba2" || k == "binary_addressing_k2") {
        return make_binary_addressing_k2(builtin_size(parts, 1, item));
    }
    if (k == "segment" || k == "seg") {
        return make_segment_code(builtin_size(parts, 1, item), builtin_size(parts, 2, item));
    }
    if (k == "h2") {
        return make_h2_code();
    }
    throw ParseError("unknown builtin code '" + item + "'");
}

}  // namespace

Code code_from_json_text(const std::string &text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error &e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
    return code_from_json(j);
}

Code builtin_code(const std::string &name) {
    auto items = split_on(name, '+');
    if (items.empty()) {
        throw ParseError("empty code name");
    }
    Code c = builtin_single(items[0]);
    for (std::size_t i = 1; i < items.size(); ++i) {
        c = concat_codes(c, builtin_single(items[i]));
    }
    return c;
}

Code load_code(const std::string &path_or_name) {
    std::error_code ec;
    if (std::filesystem::is_regular_file(path_or_name, ec)) {
        std::ifstream in(path_or_name);
        if (!in) {
            throw ParseError("cannot open code file " + path_or_name);
        }
        std::stringstream ss;
        ss << in.rdbuf();
        return code_from_json_text(ss.str());
    }
    return builtin_code(path_or_name);
}

std::string code_to_json_text(const Code &code) {
    json j;
    j["kind"] = "custom";
    j["name"] = code.name();
    j["modes"] = code.num_modes();
    j["qubits"] = code.num_qubits();
    j["encode"] = json::array();
    j["decode"] = json::array();
    for (const auto &p : code.encode()) {
        j["encode"].push_back(p.str());
    }
    for (const auto &p : code.decode()) {
        j["decode"].push_back(p.str());
    }
    return j.dump(2);
}

}  // namespace fermicode
