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

#ifndef MATCYC_MATROID_HPP_
#define MATCYC_MATROID_HPP_

#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "matcyc/element_set.hpp"
#include "matcyc/error.hpp"
#include "matcyc/field_matrix.hpp"
#include "matcyc/witness.hpp"

namespace matcyc {

// Rank function on subsets of a universe {0, ..., universe_size() - 1}.
class RankOracle {
 public:
  virtual ~RankOracle() = default;
  virtual int universe_size() const = 0;
  virtual int rank(ElementSet x) const = 0;
  virtual std::string describe() const = 0;
};

class RankCache;

// Restriction followed by contraction: the minor M|Y/X on Y - X.
struct MinorSpec {
  ElementSet restrict_to;
  ElementSet contract_by;
};

// A matroid on `ground()`, a subset of the universe of its oracle. Sets are
// always expressed in universe coordinates, so minors keep the labels of the
// matroid they came from. Copies share the oracle and the memo cache.
class Matroid {
 public:
  static Matroid linear(FieldMatrix matrix);
  static Matroid uniform(int n, int k);
  // table[x.bits()] is the rank of x; size must be 2^n. Axioms are checked.
  static Matroid from_rank_table(int n, std::vector<int> table);
  static Matroid from_bases(int n, const std::vector<ElementSet>& bases);
  static Matroid from_oracle(std::shared_ptr<const RankOracle> oracle,
                             ElementSet ground, std::string provenance);

  ElementSet ground() const { return ground_; }
  int size() const { return ground_.size(); }
  int universe_size() const { return oracle_->universe_size(); }
  const std::string& provenance() const { return provenance_; }
  // Generator matrix when this matroid is a restriction of a linear matroid.
  const FieldMatrix* matrix() const { return matrix_.get(); }

  int rank(ElementSet x) const;
  int rank() const { return rank(ground_); }
  int nullity(ElementSet x) const { return x.size() - rank(x); }
  bool is_independent(ElementSet x) const { return rank(x) == x.size(); }
  bool is_basis(ElementSet x) const;

  ElementSet closure(ElementSet x) const;
  ElementSet cyc(ElementSet x) const;
  bool is_flat(ElementSet x) const { return closure(x) == x; }
  bool is_cyclic_set(ElementSet x) const { return cyc(x) == x; }
  bool is_cyclic_flat(ElementSet x) const;

  // Elements e with rank({e}) = 0 / rank(E - e) < rank(E).
  ElementSet loops() const;
  ElementSet coloops() const;

  // Throws kInvalidSubset unless x is inside the ground set.
  void check_subset(ElementSet x) const;

 private:
  Matroid(std::shared_ptr<const RankOracle> oracle, ElementSet ground,
          std::string provenance,
          std::shared_ptr<const FieldMatrix> matrix = nullptr);

  friend Matroid restrict(const Matroid& m, ElementSet y);

  std::shared_ptr<const RankOracle> oracle_;
  ElementSet ground_;
  std::shared_ptr<RankCache> cache_;
  std::string provenance_;
  std::shared_ptr<const FieldMatrix> matrix_;
};

Matroid dual(const Matroid& m);
Matroid restrict(const Matroid& m, ElementSet y);
Matroid contract(const Matroid& m, ElementSet x);
Matroid minor(const Matroid& m, const MinorSpec& spec);

// (n', k') when rank(x) = min(|x|, k') for all x, with n' = |E|.
std::optional<std::pair<int, int>> uniform_test(const Matroid& m);

// Exhaustive search for X subset-of Y with M|Y/X = U(n', k'). Pairs are
// visited by |Y| ascending, then Y lexicographically, then X
// lexicographically; the first hit is returned.
std::optional<UniformWitness> uniform_minor_bruteforce(
    const Matroid& m, int n_minor, int k_minor, const Limits& limits = {});

// Whether U(n', k') is a minor of U(n, k).
bool uniform_has_uniform_minor(int n, int k, int n_minor, int k_minor);

// Exhaustive check of (R.1)-(R.3) on a full rank table; throws
// kInvalidArgument naming the first violated axiom.
void validate_rank_axioms(int n, const std::vector<int>& table);

}  // namespace matcyc

#endif  // MATCYC_MATROID_HPP_
