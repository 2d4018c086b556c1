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

#ifndef MATCYC_UNIFORM_MINOR_HPP_
#define MATCYC_UNIFORM_MINOR_HPP_

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "matcyc/lattice.hpp"
#include "matcyc/matroid.hpp"
#include "matcyc/witness.hpp"

namespace matcyc {

// A covering edge lower < upper of Z(M) gives M|upper/lower = U(|upper -
// lower|, rank difference). Throws kInvalidEdge for a non-covering pair.
UniformWitness edge_minor(const Matroid& m, const CyclicFlatLattice& lattice,
                          ElementSet lower, ElementSet upper);

// Covering edges with delta rank >= k' and delta nullity >= n' - k'. Each of
// them certifies a U(n', k') minor.
std::vector<CoverEdge> hasse_violations(const CyclicFlatLattice& lattice,
                                        int n_minor, int k_minor);

// Turns a witness for U(n, k) into one for U(n', k') by contracting and
// deleting elements of Y - X. Requires uniform_has_uniform_minor.
UniformWitness shrink_witness(const Matroid& m, const UniformWitness& w,
                              int n_minor, int k_minor);

// Uniformity of M|y decided on Z(M).
std::optional<UniformWitness> restriction_uniform(
    const Matroid& m, const CyclicFlatLattice& lattice, ElementSet y);

// Uniformity of M/x decided on Z(M).
std::optional<UniformWitness> contraction_uniform(
    const Matroid& m, const CyclicFlatLattice& lattice, ElementSet x);

// Uniformity of M|y/x decided on Z(M). Throws kInvalidMinorSpec unless x is a
// subset of y.
std::optional<UniformWitness> combined_uniform(
    const Matroid& m, const CyclicFlatLattice& lattice, ElementSet x,
    ElementSet y);

struct BinaryVerdict {
  bool binary = true;
  std::optional<UniformWitness> witness;  // a U(4,2) minor when not binary
};

// Tutte's criterion: binary iff there is no U(4,2) minor. Hasse edges are
// tried first; brute force settles the rest.
BinaryVerdict tutte_binary_test(const Matroid& m,
                                const CyclicFlatLattice& lattice,
                                const Limits& limits = {});

struct FieldCheck {
  int q = 0;
  std::vector<std::pair<int, int>> searched;  // (q + 2, k) pairs examined
  std::vector<UniformWitness> witnesses;
  std::string note;
};

inline constexpr const char* kFieldCheckCaveat =
    "necessary, conditional on the MDS conjecture; an empty result does not "
    "prove GF(q)-representability";

// Searches the U(q+2, k) minors that no GF(q)-representable matroid can have.
FieldCheck field_necessary_check(const Matroid& m,
                                 const CyclicFlatLattice& lattice, int q,
                                 const Limits& limits = {});

// The k values forbidden for U(q+2, k) minors over GF(q).
std::vector<int> forbidden_uniform_ranks(int q);

// Combined search used by the CLI: Hasse certificate first, then brute force.
std::optional<UniformWitness> find_uniform_minor(
    const Matroid& m, const CyclicFlatLattice& lattice, int n_minor,
    int k_minor, const Limits& limits = {});

}  // namespace matcyc

#endif  // MATCYC_UNIFORM_MINOR_HPP_
