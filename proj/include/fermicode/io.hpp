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

#ifndef FERMICODE_IO_HPP
#define FERMICODE_IO_HPP

#include <iosfwd>
#include <string>

#include "fermicode/codes.hpp"
#include "fermicode/pauli.hpp"
#include "fermicode/transform.hpp"

namespace fermicode {

/// "%.15g", with negative zero printed as 0.
std::string format_real(double x);

/// One "<re> <im> <string>" line per term, canonical order.
void write_pauli_file(std::ostream &out, const QubitOperator &op);
QubitOperator read_pauli_file(std::istream &in, std::size_t n, double prune_epsilon = kDefaultPruneEpsilon);

/// One "<re> <im> : +i -j ..." line per term. N is the largest mode seen unless num_modes > 0.
void write_fermion_hamiltonian(std::ostream &out, const FermionHamiltonian &H);
FermionHamiltonian read_fermion_hamiltonian(std::istream &in, std::size_t num_modes = 0);

/// JSON code description, see README for the schema.
Code code_from_json_text(const std::string &text);
/// Builtin names like "jw:20", "checksum:10:odd", "segment:2:2", "h2", joined with '+'.
Code builtin_code(const std::string &name);
/// Path to a JSON file if it exists, builtin name otherwise.
Code load_code(const std::string &path_or_name);
/// "custom" JSON form of any code.
std::string code_to_json_text(const Code &code);

}  // namespace fermicode

#endif
