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

#include "fermicode/cli.hpp"

#include <fstream>
#include <functional>
#include <iostream>

#include "CLI11.hpp"
#include "fermicode/errors.hpp"
#include "fermicode/fock_oracle.hpp"
#include "fermicode/io.hpp"

namespace fermicode {

namespace {

FermionHamiltonian load_hamiltonian(const RunConfig &cfg, std::size_t N) {
    bool from_file = !cfg.hamiltonian_path.empty();
    bool from_model = !cfg.model.empty();
    if (from_file == from_model) {
        throw PreconditionError("give exactly one of --hamiltonian or --model");
    }
    FermionHamiltonian H;
    if (from_file) {
        std::ifstream in(cfg.hamiltonian_path);
        if (!in) {
            throw ParseError("cannot open Hamiltonian file " + cfg.hamiltonian_path);
        }
        try {
            H = read_fermion_hamiltonian(in, N);
        } catch (const ParseError &e) {
            throw ParseError(cfg.hamiltonian_path + ": " + e.what());
        }
    } else if (cfg.model == "hubbard") {
        H = gen_hubbard(cfg.rows, cfg.cols, cfg.t, cfg.u, !cfg.open_boundary);
    } else if (cfg.model == "h2") {
        H = gen_h2(cfg.h2);
    } else {
        throw PreconditionError("unknown model '" + cfg.model + "' (hubbard or h2)");
    }
    if (N && H.N != N) {
        throw DimensionError("Hamiltonian has " + std::to_string(H.N) + " modes but the code has " + std::to_string(N));
    }
    return H;
}

struct Prepared {
    Code code;
    FermionHamiltonian H;
    bool adjusted = false;
};

Prepared prepare(const RunConfig &cfg) {
    if (cfg.code.empty()) {
        throw PreconditionError("--code is required");
    }
    Prepared p;
    p.code = load_code(cfg.code);
    p.H = load_hamiltonian(cfg, p.code.num_modes());
    if (!p.code.segments().empty() && !cfg.no_adjust) {
        p.H = adjust_for_segments(normal_order_blocks(p.H), p.code.segments());
        p.adjusted = true;
    }
    return p;
}

std::vector<BitVec> basis_for(const RunConfig &cfg, const Code &code) {
    if (cfg.basis.empty()) {
        throw PreconditionError("verification needs --basis");
    }
    return enumerate_basis(BasisSpec::parse(cfg.basis, code.num_modes()));
}

int guarded(const std::function<int()> &fn, std::ostream &err) {
    try {
        return fn();
    } catch (const ResourceError &e) {
        err << "error: resource budget exceeded: " << e.what() << '\n';
        return kExitBudget;
    } catch (const std::exception &e) {
        err << "error: " << e.what() << '\n';
        return kExitInputError;
    }
}

int transform_impl(const RunConfig &cfg, bool verify, std::ostream &out, std::ostream &err) {
    Prepared p = prepare(cfg);
    TransformOptions opts{cfg.epsilon, cfg.budget};
    TransformResult res = transform_hamiltonian(p.code, p.H, opts);
    if (!cfg.out_path.empty()) {
        std::ofstream f(cfg.out_path);
        if (!f) {
            throw ParseError("cannot write " + cfg.out_path);
        }
        write_pauli_file(f, res.op);
    }
    PauliStats st = count_stats(res.op);
    out << "qubits=" << p.code.num_qubits() << " terms=" << st.terms << " gates=" << st.gate_weight << '\n';
    out << "terms_without_identity=" << st.terms_without_identity() << " fermion_terms=" << res.fermion_terms
        << " segment_adjusted=" << (p.adjusted ? "yes" : "no") << '\n';
    int status = kExitOk;
    if (!res.hermiticity.hermitian) {
        err << "warning: transformed Hamiltonian is not hermitian (coefficient of " << res.hermiticity.witness->str()
            << " has imaginary part " << res.hermiticity.witness_coeff.imag()
            << "); the code and Hamiltonian are likely incompatible\n";
        status = kExitVerifyFailed;
    }
    if (verify) {
        EquivalenceReport rep = verify_equivalence(p.code, p.H, res.op, basis_for(cfg, p.code));
        out << "verify: " << rep.summary() << '\n';
        for (const auto &f : rep.failures) {
            out << "  " << f.nu.str() << ": " << f.detail << '\n';
        }
        if (!cfg.report_path.empty()) {
            std::ofstream f(cfg.report_path);
            if (!f) {
                throw ParseError("cannot write " + cfg.report_path);
            }
            f << rep.to_json() << '\n';
        }
        if (!rep.passed()) {
            status = kExitVerifyFailed;
        }
    }
    return status;
}

}  // namespace

int run_transform(const RunConfig &cfg, std::ostream &out, std::ostream &err) {
    return guarded([&] { return transform_impl(cfg, cfg.verify, out, err); }, err);
}

int run_verify(const RunConfig &cfg, std::ostream &out, std::ostream &err) {
    return guarded([&] { return transform_impl(cfg, true, out, err); }, err);
}

int run_validate_code(const RunConfig &cfg, std::ostream &out, std::ostream &err) {
    return guarded(
        [&] {
            if (cfg.code.empty()) {
                throw PreconditionError("--code is required");
            }
            Code code = load_code(cfg.code);
            BasisSpec spec = cfg.basis.empty() ? BasisSpec::full_fock(code.num_modes())
                                               : BasisSpec::parse(cfg.basis, code.num_modes());
            CodeValidationReport rep = validate_code(code, spec, cfg.budget);
            out << "code=" << code.name() << " N=" << code.num_modes() << " n=" << code.num_qubits()
                << " encode_linear=" << (code.encode_is_linear() ? "yes" : "no") << '\n';
            out << rep.summary() << '\n';
            for (std::size_t i = 0; i < rep.round_trip_failures.size() && i < 10; ++i) {
                out << "  round trip fails for " << rep.round_trip_failures[i].str() << '\n';
            }
            for (std::size_t i = 0; i < rep.images_outside.size() && i < 10; ++i) {
                out << "  word " << rep.images_outside[i].first.str() << " decodes to "
                    << rep.images_outside[i].second.str() << " outside the basis\n";
            }
            return rep.round_trip_ok() ? kExitOk : kExitVerifyFailed;
        },
        err);
}

int run_gen_model(const RunConfig &cfg, std::ostream &out, std::ostream &err) {
    return guarded(
        [&] {
            RunConfig c = cfg;
            c.hamiltonian_path.clear();
            if (c.model.empty()) {
                throw PreconditionError("--model is required");
            }
            FermionHamiltonian H = load_hamiltonian(c, 0);
            if (cfg.out_path.empty()) {
                write_fermion_hamiltonian(out, H);
            } else {
                std::ofstream f(cfg.out_path);
                if (!f) {
                    throw ParseError("cannot write " + cfg.out_path);
                }
                write_fermion_hamiltonian(f, H);
            }
            return kExitOk;
        },
        err);
}

int cli_main(int argc, const char *const *argv, std::ostream &out, std::ostream &err) {
    CLI::App app{"Fermion-to-qubit Hamiltonian transforms through binary codes", "fermicode"};
    app.require_subcommand(1);
    RunConfig cfg;
    auto add_source = [&](CLI::App *sub) {
        sub->add_option("--hamiltonian", cfg.hamiltonian_path, "Fermion Hamiltonian file");
        sub->add_option("--model", cfg.model, "Model generator: hubbard or h2");
        sub->add_option("--rows", cfg.rows, "Hubbard lattice rows");
        sub->add_option("--cols", cfg.cols, "Hubbard lattice columns");
        sub->add_option("--t", cfg.t, "Hubbard hopping");
        sub->add_option("--u", cfg.u, "Hubbard interaction");
        sub->add_flag("--open", cfg.open_boundary, "No periodic lateral boundary");
        sub->add_option("--h11", cfg.h2.h11);
        sub->add_option("--h22", cfg.h2.h22);
        sub->add_option("--h1331", cfg.h2.h1331);
        sub->add_option("--h2442", cfg.h2.h2442);
        sub->add_option("--h1221", cfg.h2.h1221);
        sub->add_option("--h1212", cfg.h2.h1212);
    };
    auto add_pipeline = [&](CLI::App *sub) {
        add_source(sub);
        sub->add_option("--code", cfg.code, "Code spec JSON file or builtin name (e.g. jw:20, checksum:10+segment:2:2)");
        sub->add_option("--out", cfg.out_path, "Pauli Hamiltonian output file");
        sub->add_option("--report", cfg.report_path, "JSON verification report output file");
        sub->add_flag("--verify", cfg.verify, "Check against the Fock-space oracle");
        sub->add_option("--basis", cfg.basis, "Basis spec, e.g. \"1-10:2;11-20:2\"");
        sub->add_option("--epsilon", cfg.epsilon, "Coefficient pruning threshold");
        sub->add_option("--budget", cfg.budget, "Monomial/term budget");
        sub->add_flag("--no-adjust", cfg.no_adjust, "Skip the segment-code Hamiltonian adjustment");
    };
    auto *transform = app.add_subcommand("transform", "Transform a Hamiltonian into a Pauli sum");
    add_pipeline(transform);
    auto *verify = app.add_subcommand("verify", "Transform and verify against the Fock-space oracle");
    add_pipeline(verify);
    auto *validate = app.add_subcommand("validate-code", "Round-trip and decode-image checks for a code");
    validate->add_option("--code", cfg.code, "Code spec JSON file or builtin name")->required();
    validate->add_option("--basis", cfg.basis, "Basis spec (default: full Fock space)");
    validate->add_option("--budget", cfg.budget, "Word scan budget");
    auto *gen = app.add_subcommand("gen-model", "Write a model Hamiltonian file");
    add_source(gen);
    gen->add_option("--out", cfg.out_path, "Output file (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp &) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::ParseError &e) {
        err << "error: " << e.what() << '\n';
        return kExitInputError;
    }
    if (*transform) {
        return run_transform(cfg, out, err);
    }
    if (*verify) {
        return run_verify(cfg, out, err);
    }
    if (*validate) {
        return run_validate_code(cfg, out, err);
    }
    return run_gen_model(cfg, out, err);
}

}  // namespace fermicode
