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

#ifndef MATCYC_FIELD_MATRIX_HPP_
#define MATCYC_FIELD_MATRIX_HPP_

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "matcyc/element_set.hpp"
#include "matcyc/error.hpp"

namespace matcyc {

bool is_prime(int value);

// Generator matrix over the prime field GF(q), 2 <= q <= 251. Columns are the
// coordinates of the code; column c (0-based) carries label c + 1.
class FieldMatrix {
 public:
  static constexpr int kMaxPrime = 251;

  // `entries` is row-major and must hold rows * cols residues in [0, q).
  FieldMatrix(int q, int rows, int cols, std::vector<int> entries);
  static FieldMatrix from_rows(int q, const std::vector<std::vector<int>>& rows);

  int q() const { return q_; }
  int rows() const { return rows_; }
  int cols() const { return cols_; }
  int at(int r, int c) const { return entries_[index(r, c)]; }
  std::span<const int> row(int r) const {
    return {entries_.data() + index(r, 0), static_cast<std::size_t>(cols_)};
  }
  const std::vector<int>& entries() const { return entries_; }
  ElementSet columns() const { return ElementSet::full(cols_); }

  // Bit-packed column words for q = 2 and rows <= 64; empty otherwise.
  const std::vector<std::uint64_t>& packed_columns() const { return packed_; }

  bool operator==(const FieldMatrix& other) const {
    return q_ == other.q_ && rows_ == other.rows_ && cols_ == other.cols_ &&
           entries_ == other.entries_;
  }

 private:
  std::size_t index(int r, int c) const {
    return static_cast<std::size_t>(r) * cols_ + c;
  }

  int q_;
  int rows_;
  int cols_;
  std::vector<int> entries_;
  std::vector<std::uint64_t> packed_;
};

// Rank over GF(q) of the submatrix formed by the columns in `s`. Uses XOR
// elimination on packed column words for q = 2.
int rank_of_columns(const FieldMatrix& m, ElementSet s);

namespace detail {
// Residue-arithmetic elimination for any prime q; the reference for the
// packed q = 2 path.
int modular_rank(const FieldMatrix& m, ElementSet s);
int packed_binary_rank(const FieldMatrix& m, ElementSet s);
}  // namespace detail

// Reduced row-echelon form with zero rows dropped.
FieldMatrix reduced_row_echelon(const FieldMatrix& m);

bool row_space_equal(const FieldMatrix& a, const FieldMatrix& b);

// Visits each codeword of the row space exactly once (zero word first).
// Throws kResourceLimit when q^rank exceeds `max_codewords`.
void for_each_codeword(const FieldMatrix& m,
                       const std::function<void(std::span<const int>)>& visit,
                       std::uint64_t max_codewords = Limits{}.max_codewords);

std::uint64_t codeword_count(const FieldMatrix& m);

// Minimum Hamming weight of the nonzero words of the code punctured to `s`.
int min_distance_bruteforce(
    const FieldMatrix& m, ElementSet s,
    std::uint64_t max_codewords = Limits{}.max_codewords);

// k x n matrix with column j = (a_j^0, ..., a_j^(k-1)), a_j = j. Needs n <= q.
FieldMatrix vandermonde_matrix(int q, int k, int n);

// k x (2^k - 1) binary matrix whose columns are all nonzero vectors; column j
// is the binary expansion of j + 1 (row i holds bit i).
FieldMatrix binary_simplex_matrix(int k);

}  // namespace matcyc

#endif  // MATCYC_FIELD_MATRIX_HPP_
