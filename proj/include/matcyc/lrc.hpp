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

#ifndef MATCYC_LRC_HPP_
#define MATCYC_LRC_HPP_

#include <optional>
#include <string>
#include <vector>

#include "matcyc/lattice.hpp"
#include "matcyc/matroid.hpp"

namespace matcyc {

// C|x is non-degenerate: Z(M|x) has top x and bottom the empty set.
bool is_nondegenerate(const Matroid& m, ElementSet x);

// d = eta(E) + 1 - max eta(Z) over cyclic flats Z != E. Throws
// kDegenerateCode unless the bottom is empty and the top is E.
int global_distance(const Matroid& m, const CyclicFlatLattice& lattice);

// Minimum distance of any matroid with rank(E) > 0, degenerate or not: 1
// with coloops, otherwise the cyclic-flat formula on the loopless part.
int code_distance(const Matroid& m, const CyclicFlatLattice& lattice);

struct PunctureParams {
  int dimension = 0;
  int distance = 0;
  bool operator==(const PunctureParams&) const = default;
};

// (k_x, d_x) of C|x from Z(M|x) = { cyc(Z & x) : Z in Z(M) }.
PunctureParams punctured_params(const Matroid& m,
                                const CyclicFlatLattice& lattice, ElementSet x);

// |x| - d_x + 1 for a nonempty cyclic flat x, cross-checked against
// rank(x) + max eta over the cyclic flats strictly below x.
int s_value(const Matroid& m, const CyclicFlatLattice& lattice, ElementSet x);

struct Locality {
  int element = 0;
  int r = 0;
  ElementSet repair_set;
  bool operator==(const Locality&) const = default;
};

enum class LocalitySearch {
  kCyclicFlats,  // spanning subsets of cyclic flats with large enough d
  kBruteForce,   // every R containing i; n <= 12
};

// Least r such that some R containing `element` has |R| <= r + delta - 1 and
// d_R >= delta. Ties: smallest |R|, then lexicographic R. Throws kNoLocality
// when no such R exists.
Locality locality_of_element(const Matroid& m, const CyclicFlatLattice& lattice,
                             int element, int delta,
                             LocalitySearch search = LocalitySearch::kCyclicFlats);

inline constexpr int kMaxBruteForceLocalityGround = 12;

struct LrcReport {
  int n = 0;
  int k = 0;
  int d = 0;
  int r = 0;      // max r_i over elements that have a repair set
  int delta = 0;
  int r_required = 0;
  bool nondegenerate = false;
  bool passes = false;
  std::vector<Locality> per_element;
  std::vector<int> failing;  // 0-based elements with r_i > r or no repair set
  std::vector<std::string> notes;
};

LrcReport verify_lrc(const Matroid& m, const CyclicFlatLattice& lattice, int r,
                     int delta);

// Discovered parameters for a fixed delta: r is the max r_i.
LrcReport discover_lrc(const Matroid& m, const CyclicFlatLattice& lattice,
                       int delta);

struct ParamPoint {
  int delta = 0;
  int r = 0;
};

// Locality r for every delta in [2, d].
std::vector<ParamPoint> locality_profile(const Matroid& m,
                                         const CyclicFlatLattice& lattice);

enum class Verdict { kPass, kFail, kNotApplicable };
const char* to_string(Verdict v);

struct ConditionResult {
  int index = 0;  // 1..4
  Verdict verdict = Verdict::kNotApplicable;
  std::string detail;  // counterexample or reason
};

struct BinaryStructureResult {
  bool precondition_met = false;  // d > 2
  std::string precondition_note;
  int d = 0;
  std::vector<ConditionResult> conditions;

  bool all_pass() const;
};

// Checks the lattice conditions that every binary (n,k,d,r,delta)-LRC with
// d > 2 satisfies. Throws kInapplicableTheorem for non-binary input.
BinaryStructureResult binary_structure_check(const Matroid& m,
                                             const CyclicFlatLattice& lattice,
                                             int r, int delta,
                                             const Limits& limits = {});

// Uniform with 0 < k < n. For linear matroids also asserts d = n - k + 1 by
// codeword enumeration.
bool mds_check(const Matroid& m, const Limits& limits = {});

}  // namespace matcyc

#endif  // MATCYC_LRC_HPP_
