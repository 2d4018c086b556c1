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

#ifndef MATCYC_ERROR_HPP_
#define MATCYC_ERROR_HPP_

#include <cstdint>
#include <stdexcept>
#include <string>

namespace matcyc {

enum class ErrorKind {
  kInvalidSubset,
  kIncompatibleMatrices,
  kResourceLimit,
  kDegenerateCode,
  kInvalidMinorSpec,
  kInvalidEdge,
  kNoLocality,
  kInapplicableTheorem,
  kInvalidArgument,
  kParse,
};

const char* to_string(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

// Resource caps shared by every exhaustive routine. The CLI exposes them as
// --max-n and --max-codewords.
struct Limits {
  int max_ground = 16;         // rank-table, bases, uniform and general oracles
  int max_ground_binary = 20;  // linear oracles over GF(2)
  int max_brute_ground = 16;   // (X, Y) minor searches, 3^n pairs
  std::uint64_t max_codewords = std::uint64_t{1} << 24;
};

}  // namespace matcyc

#endif  // MATCYC_ERROR_HPP_
