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

#include "matcyc/error.hpp"
#include "matcyc/witness.hpp"

namespace matcyc {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kInvalidSubset:
      return "invalid-subset";
    case ErrorKind::kIncompatibleMatrices:
      return "incompatible-matrices";
    case ErrorKind::kResourceLimit:
      return "resource-limit";
    case ErrorKind::kDegenerateCode:
      return "degenerate-code";
    case ErrorKind::kInvalidMinorSpec:
      return "invalid-minor-spec";
    case ErrorKind::kInvalidEdge:
      return "invalid-edge";
    case ErrorKind::kNoLocality:
      return "no-locality";
    case ErrorKind::kInapplicableTheorem:
      return "inapplicable-theorem";
    case ErrorKind::kInvalidArgument:
      return "invalid-argument";
    case ErrorKind::kParse:
      return "parse-error";
  }
  return "error";
}

const char* to_string(Certificate c) {
  switch (c) {
    case Certificate::kEdgeTheorem:
      return "edge";
    case Certificate::kRestrictionTheorem:
      return "restriction";
    case Certificate::kContractionTheorem:
      return "contraction";
    case Certificate::kCombinedTheorem:
      return "combined";
    case Certificate::kBruteForce:
      return "brute-force";
  }
  return "unknown";
}

std::string format_witness(const UniformWitness& w) {
  return "UNIFORM-MINOR U(" + std::to_string(w.n) + "," + std::to_string(w.k) +
         ") restrict=" + format_set(w.restrict_to) +
         " contract=" + format_set(w.contract_by) + " via=" + to_string(w.via);
}

}  // namespace matcyc
