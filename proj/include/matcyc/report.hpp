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

#ifndef MATCYC_REPORT_HPP_
#define MATCYC_REPORT_HPP_

#include <string>
#include <vector>

#include "json.hpp"
#include "matcyc/lattice.hpp"
#include "matcyc/lrc.hpp"
#include "matcyc/uniform_minor.hpp"
#include "matcyc/witness.hpp"

namespace matcyc {

// Sets become arrays of 1-based labels.
nlohmann::json set_json(ElementSet s);
nlohmann::json witness_json(const UniformWitness& w);
nlohmann::json lattice_json(const CyclicFlatLattice& lattice);
std::string lattice_text(const CyclicFlatLattice& lattice);

std::string lrc_text(const LrcReport& report, bool with_locality_line);
nlohmann::json lrc_json(const LrcReport& report);

std::string binary_structure_text(const BinaryStructureResult& result);
nlohmann::json binary_structure_json(const BinaryStructureResult& result);

}  // namespace matcyc

#endif  // MATCYC_REPORT_HPP_
