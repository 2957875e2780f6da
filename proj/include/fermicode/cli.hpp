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

#ifndef FERMICODE_CLI_HPP
#define FERMICODE_CLI_HPP

#include <iosfwd>
#include <string>

#include "fermicode/models.hpp"

namespace fermicode {

enum ExitCode : int { kExitOk = 0, kExitVerifyFailed = 1, kExitInputError = 2, kExitBudget = 3 };

struct RunConfig {
    std::string hamiltonian_path;
    std::string model;  // "hubbard" or "h2"
    std::size_t rows = 2;
    std::size_t cols = 5;
    double t = 1.0;
    double u = 1.0;
    bool open_boundary = false;
    H2Params h2;

    std::string code;
    std::string out_path;
    std::string report_path;
    bool verify = false;
    std::string basis;
    double epsilon = kDefaultPruneEpsilon;
    std::size_t budget = kDefaultBudget;
    bool no_adjust = false;
};

int run_transform(const RunConfig &cfg, std::ostream &out, std::ostream &err);
int run_verify(const RunConfig &cfg, std::ostream &out, std::ostream &err);
int run_validate_code(const RunConfig &cfg, std::ostream &out, std::ostream &err);
int run_gen_model(const RunConfig &cfg, std::ostream &out, std::ostream &err);

/// Parses argv with subcommands transform, verify, validate-code, gen-model.
int cli_main(int argc, const char *const *argv, std::ostream &out, std::ostream &err);

}  // namespace fermicode

#endif
