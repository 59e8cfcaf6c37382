// Copyright 2026 The extractorlab authors
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

#ifndef EXTRACTORLAB_IO_HPP
#define EXTRACTORLAB_IO_HPP

#include <iosfwd>
#include <string>
#include <variant>

#include "extractorlab/classical.hpp"
#include "extractorlab/entropy.hpp"
#include "extractorlab/quantum.hpp"

namespace extractorlab {

/// Shortest decimal form that parses back to the identical double.
std::string format_double(double v);

std::string to_string(Mode mode);
Mode mode_from_string(const std::string& s);

/// Function family file: header `n m d mode`, then one line per member with
/// 2^n whitespace-separated output symbols. d is log2 of the member count
/// (fractional for non-power-of-two families).
void write_function_family(std::ostream& out, const FunctionFamily& fam);
FunctionFamily read_function_family(std::istream& in);

/// Unitary family file: header `n m count mode`, then one line per member
/// with 2*4^n reals (real/imag interleaved, row-major). Doubles are written
/// in shortest round-trip form, so read-back is bit exact.
void write_unitary_family(std::ostream& out, const UnitaryFamily& fam);
UnitaryFamily read_unitary_family(std::istream& in);

/// Loads either family kind, telling them apart by the token count of the
/// first data line.
using AnyFamily = std::variant<FunctionFamily, UnitaryFamily>;
AnyFamily read_family_auto(std::istream& in);

/// State file: header `dimN dimR kind` with kind in {cc, cq, qq}, then the
/// density matrix as `re im` pairs, one matrix row per line.
void write_state(std::ostream& out, const BipartiteState& state);
BipartiteState read_state(std::istream& in);

/// Classical distributions are stored as diagonal cc states with dimR = 1.
void write_classical_state(std::ostream& out, const ClassicalState& p);

struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace extractorlab

#endif  // EXTRACTORLAB_IO_HPP
