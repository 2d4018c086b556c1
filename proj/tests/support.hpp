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

#ifndef MATCYC_TESTS_SUPPORT_HPP_
#define MATCYC_TESTS_SUPPORT_HPP_

#include <cstdint>
#include <random>
#include <vector>

#include "matcyc/element_set.hpp"
#include "matcyc/field_matrix.hpp"
#include "matcyc/matroid.hpp"

namespace matcyc::testing {

inline ElementSet L(std::initializer_list<int> labels) {
  return ElementSet::from_labels(labels);
}

FieldMatrix example_g();
FieldMatrix simplex7();

// Entries uniform in GF(q); rows and cols as given.
FieldMatrix random_matrix(std::mt19937_64& rng, int q, int rows, int cols);

// A GF(2) or GF(3) matrix with 3..max_cols columns and 2..4 rows.
FieldMatrix random_small_matrix(std::mt19937_64& rng, int max_cols);

ElementSet random_subset(std::mt19937_64& rng, ElementSet of);

// Oracles below avoid Gaussian elimination and the library's operators.

// log_q of the number of distinct projections of row-space vectors onto s,
// enumerating every coefficient vector over all rows.
int oracle_rank(const FieldMatrix& m, ElementSet s);

// Minimum nonzero weight of the projections onto s; 0 when all vanish.
int oracle_min_distance(const FieldMatrix& m, ElementSet s);

// Rank table of every subset of the ground set, in universe bit positions.
std::vector<int> rank_table(const Matroid& m);

// Cyclic flats by the definitions, scanning every subset.
std::vector<ElementSet> oracle_cyclic_flats(const Matroid& m);

// (n, k) when rank(x) == min(|x|, k) for every x.
std::optional<std::pair<int, int>> oracle_uniform(const Matroid& m);

// d_R >= delta for every R, then the smallest |R| per element.
struct OracleLocality {
  int r = -1;  // -1: none
  ElementSet repair_set;
};
OracleLocality oracle_locality(const Matroid& m, int element, int delta);

}  // namespace matcyc::testing

#endif  // MATCYC_TESTS_SUPPORT_HPP_
