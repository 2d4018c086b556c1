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

#ifndef MATCYC_WITNESS_HPP_
#define MATCYC_WITNESS_HPP_

#include <string>

#include "matcyc/element_set.hpp"

namespace matcyc {

enum class Certificate {
  kEdgeTheorem,
  kRestrictionTheorem,
  kContractionTheorem,
  kCombinedTheorem,
  kBruteForce,
};

const char* to_string(Certificate c);

// A certified uniform minor M|Y/X = U(n, k).
struct UniformWitness {
  ElementSet restrict_to;  // Y
  ElementSet contract_by;  // X
  int n = 0;
  int k = 0;
  Certificate via = Certificate::kBruteForce;

  bool operator==(const UniformWitness&) const = default;
};

// UNIFORM-MINOR U(n,k) restrict={...} contract={...} via=<certificate>
std::string format_witness(const UniformWitness& w);

}  // namespace matcyc

#endif  // MATCYC_WITNESS_HPP_
