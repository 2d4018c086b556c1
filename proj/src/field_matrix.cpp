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

#include "matcyc/field_matrix.hpp"

#include <string>
#include <utility>

namespace matcyc {
namespace {

int inverse_mod(int a, int q) {
  // Fermat: a^(q-2) mod q.
  long long result = 1;
  long long base = a % q;
  int exp = q - 2;
  while (exp > 0) {
    if (exp & 1) result = result * base % q;
    base = base * base % q;
    exp >>= 1;
  }
  return static_cast<int>(result);
}

void check_columns(const FieldMatrix& m, ElementSet s) {
  if (!s.subset_of(m.columns())) {
    throw Error(ErrorKind::kInvalidSubset,
                "column set " + format_set(s) + " exceeds " +
                    std::to_string(m.cols()) + " columns");
  }
}

// Row-reduces `rows` (each of width `width`) in place and returns the rank.
int eliminate(std::vector<std::vector<int>>& rows, int width, int q) {
  int rank = 0;
  const int height = static_cast<int>(rows.size());
  for (int c = 0; c < width && rank < height; ++c) {
    int pivot = -1;
    for (int r = rank; r < height; ++r) {
      if (rows[r][c] != 0) {
        pivot = r;
        break;
      }
    }
    if (pivot < 0) continue;
    std::swap(rows[rank], rows[pivot]);
    const int inv = inverse_mod(rows[rank][c], q);
    for (int& v : rows[rank]) v = v * inv % q;
    for (int r = 0; r < height; ++r) {
      if (r == rank || rows[r][c] == 0) continue;
      const int f = rows[r][c];
      for (int j = 0; j < width; ++j) {
        rows[r][j] = ((rows[r][j] - f * rows[rank][j]) % q + q) % q;
      }
    }
    ++rank;
  }
  return rank;
}

}  // namespace

bool is_prime(int value) {
  if (value < 2) return false;
  for (int d = 2; d * d <= value; ++d) {
    if (value % d == 0) return false;
  }
  return true;
}

FieldMatrix::FieldMatrix(int q, int rows, int cols, std::vector<int> entries)
    : q_(q), rows_(rows), cols_(cols), entries_(std::move(entries)) {
  if (!is_prime(q) || q > kMaxPrime) {
    throw Error(ErrorKind::kInvalidArgument,
                "field size must be a prime in [2, 251], got " +
                    std::to_string(q));
  }
  if (rows < 1 || cols < 1) {
    throw Error(ErrorKind::kInvalidArgument,
                "matrix needs at least one row and one column");
  }
  if (cols > ElementSet::kMaxElements) {
    throw Error(ErrorKind::kResourceLimit,
                "at most 64 columns are supported, got " +
                    std::to_string(cols));
  }
  if (entries_.size() != static_cast<std::size_t>(rows) * cols) {
    throw Error(ErrorKind::kInvalidArgument, "entry count does not match shape");
  }
  for (int v : entries_) {
    if (v < 0 || v >= q) {
      throw Error(ErrorKind::kInvalidArgument,
                  "entry " + std::to_string(v) + " is not a residue mod " +
                      std::to_string(q));
    }
  }
  if (q == 2 && rows <= 64) {
    packed_.assign(static_cast<std::size_t>(cols), 0);
    for (int r = 0; r < rows; ++r) {
      for (int c = 0; c < cols; ++c) {
        if (at(r, c) != 0) packed_[c] |= std::uint64_t{1} << r;
      }
    }
  }
}

FieldMatrix FieldMatrix::from_rows(int q,
                                   const std::vector<std::vector<int>>& rows) {
  if (rows.empty() || rows.front().empty()) {
    throw Error(ErrorKind::kInvalidArgument,
                "matrix needs at least one row and one column");
  }
  const std::size_t cols = rows.front().size();
  std::vector<int> entries;
  entries.reserve(rows.size() * cols);
  for (const auto& row : rows) {
    if (row.size() != cols) {
      throw Error(ErrorKind::kInvalidArgument, "ragged matrix rows");
    }
    entries.insert(entries.end(), row.begin(), row.end());
  }
  return FieldMatrix(q, static_cast<int>(rows.size()), static_cast<int>(cols),
                     std::move(entries));
}

namespace detail {

int modular_rank(const FieldMatrix& m, ElementSet s) {
  check_columns(m, s);
  if (s.empty()) return 0;
  const std::vector<int> cols = s.elements();
  const int width = static_cast<int>(cols.size());
  std::vector<std::vector<int>> rows(static_cast<std::size_t>(m.rows()),
                                     std::vector<int>(cols.size()));
  for (int r = 0; r < m.rows(); ++r) {
    for (int j = 0; j < width; ++j) rows[r][j] = m.at(r, cols[j]);
  }
  return eliminate(rows, width, m.q());
}

int packed_binary_rank(const FieldMatrix& m, ElementSet s) {
  check_columns(m, s);
  const auto& packed = m.packed_columns();
  // basis[b] holds a reduced vector whose highest set bit is b.
  std::uint64_t basis[64] = {};
  int rank = 0;
  for (int c : s) {
    std::uint64_t v = packed[c];
    while (v != 0) {
      const int top = 63 - std::countl_zero(v);
      if (basis[top] == 0) {
        basis[top] = v;
        ++rank;
        break;
      }
      v ^= basis[top];
    }
  }
  return rank;
}

}  // namespace detail

int rank_of_columns(const FieldMatrix& m, ElementSet s) {
  if (!m.packed_columns().empty()) return detail::packed_binary_rank(m, s);
  return detail::modular_rank(m, s);
}

FieldMatrix reduced_row_echelon(const FieldMatrix& m) {
  std::vector<std::vector<int>> rows;
  rows.reserve(static_cast<std::size_t>(m.rows()));
  for (int r = 0; r < m.rows(); ++r) {
    rows.emplace_back(m.row(r).begin(), m.row(r).end());
  }
  const int rank = eliminate(rows, m.cols(), m.q());
  rows.resize(static_cast<std::size_t>(rank));
  if (rows.empty()) {
    rows.emplace_back(static_cast<std::size_t>(m.cols()), 0);
  }
  return FieldMatrix::from_rows(m.q(), rows);
}

bool row_space_equal(const FieldMatrix& a, const FieldMatrix& b) {
  if (a.q() != b.q() || a.cols() != b.cols()) {
    throw Error(ErrorKind::kIncompatibleMatrices,
                "row spaces over different fields or lengths");
  }
  return reduced_row_echelon(a) == reduced_row_echelon(b);
}

std::uint64_t codeword_count(const FieldMatrix& m) {
  const int rank = rank_of_columns(m, m.columns());
  std::uint64_t count = 1;
  for (int i = 0; i < rank; ++i) {
    if (count > (std::uint64_t{1} << 62) / static_cast<std::uint64_t>(m.q())) {
      return ~std::uint64_t{0};
    }
    count *= static_cast<std::uint64_t>(m.q());
  }
  return count;
}

void for_each_codeword(const FieldMatrix& m,
                       const std::function<void(std::span<const int>)>& visit,
                       std::uint64_t max_codewords) {
  const std::uint64_t count = codeword_count(m);
  if (count > max_codewords) {
    throw Error(ErrorKind::kResourceLimit,
                "code has more than " + std::to_string(max_codewords) +
                    " codewords");
  }
  const FieldMatrix basis = reduced_row_echelon(m);
  const int q = m.q();
  const int n = m.cols();
  int k = basis.rows();
  if (rank_of_columns(m, m.columns()) == 0) k = 0;

  // Odometer over coefficient tuples; the word is updated incrementally.
  std::vector<int> coeff(static_cast<std::size_t>(k), 0);
  std::vector<int> word(static_cast<std::size_t>(n), 0);
  while (true) {
    visit(word);
    int i = k - 1;
    while (i >= 0 && coeff[i] == q - 1) {
      coeff[i] = 0;
      // Wrapping q-1 -> 0 adds one more copy of the row (q copies vanish).
      for (int j = 0; j < n; ++j) word[j] = (word[j] + basis.at(i, j)) % q;
      --i;
    }
    if (i < 0) break;
    ++coeff[i];
    for (int j = 0; j < n; ++j) word[j] = (word[j] + basis.at(i, j)) % q;
  }
}

int min_distance_bruteforce(const FieldMatrix& m, ElementSet s,
                            std::uint64_t max_codewords) {
  check_columns(m, s);
  const std::vector<int> cols = s.elements();
  int best = -1;
  for_each_codeword(
      m,
      [&](std::span<const int> word) {
        int weight = 0;
        for (int c : cols) weight += word[c] != 0 ? 1 : 0;
        if (weight > 0 && (best < 0 || weight < best)) best = weight;
      },
      max_codewords);
  if (best < 0) {
    throw Error(ErrorKind::kDegenerateCode,
                "punctured code on " + format_set(s) + " is the zero code");
  }
  return best;
}

FieldMatrix vandermonde_matrix(int q, int k, int n) {
  if (n > q) {
    throw Error(ErrorKind::kInvalidArgument,
                "Vandermonde matrix needs n <= q distinct points");
  }
  std::vector<std::vector<int>> rows(static_cast<std::size_t>(k),
                                     std::vector<int>(static_cast<std::size_t>(n)));
  for (int j = 0; j < n; ++j) {
    int power = 1;
    for (int i = 0; i < k; ++i) {
      rows[i][j] = power;
      power = power * j % q;
    }
  }
  return FieldMatrix::from_rows(q, rows);
}

FieldMatrix binary_simplex_matrix(int k) {
  const int n = (1 << k) - 1;
  std::vector<std::vector<int>> rows(static_cast<std::size_t>(k),
                                     std::vector<int>(static_cast<std::size_t>(n)));
  for (int j = 0; j < n; ++j) {
    for (int i = 0; i < k; ++i) rows[i][j] = ((j + 1) >> i) & 1;
  }
  return FieldMatrix::from_rows(2, rows);
}

}  // namespace matcyc
