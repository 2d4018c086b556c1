// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef MATCYC_IO_HPP_
#define MATCYC_IO_HPP_

#include <optional>
#include <string>
#include <vector>

#include "matcyc/error.hpp"
#include "matcyc/field_matrix.hpp"
#include "matcyc/lattice.hpp"
#include "matcyc/matroid.hpp"

namespace matcyc {

enum class InputKind { kMatrix, kUniform, kRankTable, kBases };
const char* to_string(InputKind kind);

struct InputSpec {
  InputKind kind = InputKind::kMatrix;
  std::string source;
  std::optional<FieldMatrix> matrix;
  int n = 0;
  int k = 0;                       // uniform only
  std::vector<int> rank_table;     // ranktable only, indexed by bitmask
  std::vector<ElementSet> bases;   // bases only
};

// `% comment` lines, optional `q <prime>` (default 2), one row per line.
FieldMatrix parse_matrix(const std::string& text);
std::string format_matrix(const FieldMatrix& m);

// Detects the format from the first token.
InputSpec parse_input(const std::string& text, const std::string& source = "");
std::string format_input(const InputSpec& spec);

Matroid build_matroid(const InputSpec& spec, const Limits& limits = {});

std::string read_text_file(const std::string& path);

std::string lattice_dot(const CyclicFlatLattice& lattice);

}  // namespace matcyc

#endif  // MATCYC_IO_HPP_
