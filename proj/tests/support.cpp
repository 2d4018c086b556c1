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

#include "support.hpp"

#include <algorithm>
#include <set>

namespace matcyc::testing {

FieldMatrix example_g() {
  return FieldMatrix::from_rows(2, {{1, 0, 1, 0, 1, 1},
                                    {0, 1, 1, 0, 1, 1},
                                    {0, 0, 0, 1, 1, 1}});
}

FieldMatrix simplex7() {
  return FieldMatrix::from_rows(2, {{1, 0, 1, 0, 1, 0, 1},
                                    {0, 1, 1, 0, 0, 1, 1},
                                    {0, 0, 0, 1, 1, 1, 1}});
}

FieldMatrix random_matrix(std::mt19937_64& rng, int q, int rows, int cols) {
  std::uniform_int_distribution<int> entry(0, q - 1);
  std::vector<int> entries(static_cast<std::size_t>(rows) * cols);
  for (int& e : entries) e = entry(rng);
  return FieldMatrix(q, rows, cols, std::move(entries));
}

FieldMatrix random_small_matrix(std::mt19937_64& rng, int max_cols) {
  const int q = std::uniform_int_distribution<int>(0, 1)(rng) ? 3 : 2;
  const int cols = std::uniform_int_distribution<int>(3, max_cols)(rng);
  const int rows = std::uniform_int_distribution<int>(2, 4)(rng);
  return random_matrix(rng, q, rows, cols);
}

ElementSet random_subset(std::mt19937_64& rng, ElementSet of) {
  ElementSet out;
  for (int e : of) {
    if (rng() & 1U) out = out.with(e);
  }
  return out;
}

namespace {

template <class Fn>
void each_combination(const FieldMatrix& m, Fn&& fn) {
  std::vector<int> coeff(m.rows(), 0);
  std::vector<int> word(m.cols(), 0);
  while (true) {
    std::fill(word.begin(), word.end(), 0);
    for (int r = 0; r < m.rows(); ++r) {
      for (int c = 0; c < m.cols(); ++c) {
        word[c] = (word[c] + coeff[r] * m.at(r, c)) % m.q();
      }
    }
    fn(word);
    int r = 0;
    while (r < m.rows() && ++coeff[r] == m.q()) coeff[r++] = 0;
    if (r == m.rows()) break;
  }
}

}  // namespace

int oracle_rank(const FieldMatrix& m, ElementSet s) {
  std::set<std::vector<int>> seen;
  each_combination(m, [&](const std::vector<int>& word) {
    std::vector<int> proj;
    for (int c : s) proj.push_back(word[c]);
    seen.insert(proj);
  });
  int rank = 0;
  for (std::size_t count = 1; count < seen.size(); count *= m.q()) ++rank;
  return rank;
}

int oracle_min_distance(const FieldMatrix& m, ElementSet s) {
  int best = 0;
  each_combination(m, [&](const std::vector<int>& word) {
    int weight = 0;
    for (int c : s) weight += word[c] != 0;
    if (weight > 0 && (best == 0 || weight < best)) best = weight;
  });
  return best;
}

std::vector<int> rank_table(const Matroid& m) {
  std::vector<int> table(std::size_t{1} << m.universe_size(), -1);
  for_each_subset(m.ground(),
                  [&](ElementSet x) { table[x.bits()] = m.rank(x); });
  return table;
}

std::vector<ElementSet> oracle_cyclic_flats(const Matroid& m) {
  const auto table = rank_table(m);
  std::vector<ElementSet> out;
  for_each_subset(m.ground(), [&](ElementSet x) {
    const int r = table[x.bits()];
    for (int e : m.ground() - x) {
      if (table[x.with(e).bits()] == r) return;
    }
    for (int e : x) {
      if (table[x.without(e).bits()] != r) return;
    }
    out.push_back(x);
  });
  std::sort(out.begin(), out.end(), lex_less);
  return out;
}

std::optional<std::pair<int, int>> oracle_uniform(const Matroid& m) {
  const int k = m.rank();
  bool ok = true;
  for_each_subset(m.ground(), [&](ElementSet x) {
    if (m.rank(x) != std::min(x.size(), k)) ok = false;
  });
  if (!ok) return std::nullopt;
  return std::make_pair(m.size(), k);
}

OracleLocality oracle_locality(const Matroid& m, int element, int delta) {
  const ElementSet usable = m.ground() - m.closure(ElementSet());
  OracleLocality best;
  for_each_subset(usable, [&](ElementSet r) {
    if (!r.contains(element)) return;
    const int full = m.rank(r);
    if (full == 0) return;
    // d_R: fewest deletions that drop the rank.
    int d = r.size();
    for_each_subset(r, [&](ElementSet t) {
      if (t.size() < d && m.rank(r - t) < full) d = t.size();
    });
    if (d < delta) return;
    const int value = std::max(1, r.size() - delta + 1);
    if (best.r < 0 || r.size() < best.repair_set.size() ||
        (r.size() == best.repair_set.size() && lex_less(r, best.repair_set))) {
      best = {value, r};
    }
  });
  return best;
}

}  // namespace matcyc::testing
