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

#include "matcyc/matroid.hpp"

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <list>
#include <mutex>
#include <string>
#include <unordered_map>
#include <utility>

namespace matcyc {

// Transparent memo of subset ranks. Ground sets of at most 16 elements use a
// dense lock-free table; larger ones an LRU map capped at 2^20 entries.
class RankCache {
 public:
  static constexpr int kDenseLimit = 16;
  static constexpr std::size_t kLruCapacity = std::size_t{1} << 20;

  explicit RankCache(ElementSet ground)
      : ground_(ground),
        contiguous_(ground == ElementSet::full(ground.size())),
        dense_(ground.size() <= kDenseLimit) {
    if (dense_) {
      const std::size_t slots = std::size_t{1} << ground.size();
      table_ = std::make_unique<std::atomic<std::int8_t>[]>(slots);
      for (std::size_t i = 0; i < slots; ++i) {
        table_[i].store(-1, std::memory_order_relaxed);
      }
    }
  }

  template <class Compute>
  int get(ElementSet x, Compute&& compute) {
    if (dense_) {
      const auto key = static_cast<std::size_t>(
          contiguous_ ? x.bits() : compress(x, ground_));
      const std::int8_t cached = table_[key].load(std::memory_order_relaxed);
      if (cached >= 0) return cached;
      const int value = compute();
      table_[key].store(static_cast<std::int8_t>(value),
                        std::memory_order_relaxed);
      return value;
    }
    {
      std::lock_guard<std::mutex> lock(mu_);
      auto it = index_.find(x.bits());
      if (it != index_.end()) {
        order_.splice(order_.begin(), order_, it->second);
        return it->second->second;
      }
    }
    const int value = compute();
    std::lock_guard<std::mutex> lock(mu_);
    if (index_.find(x.bits()) == index_.end()) {
      order_.emplace_front(x.bits(), value);
      index_[x.bits()] = order_.begin();
      if (order_.size() > kLruCapacity) {
        index_.erase(order_.back().first);
        order_.pop_back();
      }
    }
    return value;
  }

 private:
  ElementSet ground_;
  bool contiguous_;
  bool dense_;
  std::unique_ptr<std::atomic<std::int8_t>[]> table_;
  std::mutex mu_;
  std::list<std::pair<ElementSet::Word, int>> order_;
  std::unordered_map<ElementSet::Word,
                     std::list<std::pair<ElementSet::Word, int>>::iterator>
      index_;
};

namespace {

class LinearOracle final : public RankOracle {
 public:
  explicit LinearOracle(std::shared_ptr<const FieldMatrix> matrix)
      : matrix_(std::move(matrix)) {}
  int universe_size() const override { return matrix_->cols(); }
  int rank(ElementSet x) const override {
    return rank_of_columns(*matrix_, x);
  }
  std::string describe() const override {
    return "linear GF(" + std::to_string(matrix_->q()) + ") " +
           std::to_string(matrix_->rows()) + "x" +
           std::to_string(matrix_->cols());
  }

 private:
  std::shared_ptr<const FieldMatrix> matrix_;
};

class UniformOracle final : public RankOracle {
 public:
  UniformOracle(int n, int k) : n_(n), k_(k) {}
  int universe_size() const override { return n_; }
  int rank(ElementSet x) const override { return std::min(x.size(), k_); }
  std::string describe() const override {
    return "uniform U(" + std::to_string(n_) + "," + std::to_string(k_) + ")";
  }

 private:
  int n_;
  int k_;
};

class TableOracle final : public RankOracle {
 public:
  TableOracle(int n, std::vector<int> table, std::string kind)
      : n_(n), table_(std::move(table)), kind_(std::move(kind)) {}
  int universe_size() const override { return n_; }
  int rank(ElementSet x) const override {
    return table_[static_cast<std::size_t>(x.bits())];
  }
  std::string describe() const override {
    return kind_ + " n=" + std::to_string(n_);
  }

 private:
  int n_;
  std::vector<int> table_;
  std::string kind_;
};

class DualOracle final : public RankOracle {
 public:
  explicit DualOracle(Matroid base) : base_(std::move(base)) {}
  int universe_size() const override { return base_.universe_size(); }
  int rank(ElementSet x) const override {
    return x.size() + base_.rank(base_.ground() - x) - base_.rank();
  }
  std::string describe() const override {
    return "dual of " + base_.provenance();
  }

 private:
  Matroid base_;
};

// rank(A) = base.rank(A | X) - base.rank(X); X empty gives a restriction view
// that still hits the base matroid's cache.
class MinorOracle final : public RankOracle {
 public:
  MinorOracle(Matroid base, ElementSet contract_by)
      : base_(std::move(base)),
        contract_by_(contract_by),
        offset_(base_.rank(contract_by)) {}
  int universe_size() const override { return base_.universe_size(); }
  int rank(ElementSet x) const override {
    return base_.rank(x | contract_by_) - offset_;
  }
  std::string describe() const override { return base_.provenance(); }

 private:
  Matroid base_;
  ElementSet contract_by_;
  int offset_;
};

void check_ground_size(int n, int limit, const char* what) {
  if (n < 0) {
    throw Error(ErrorKind::kInvalidArgument, "negative ground set size");
  }
  if (n > limit) {
    throw Error(ErrorKind::kResourceLimit,
                std::string(what) + " supports at most " +
                    std::to_string(limit) + " elements, got " +
                    std::to_string(n));
  }
}

std::string axiom_failure(const char* axiom, ElementSet x, const char* detail) {
  return std::string("rank table violates ") + axiom + " at " + format_set(x) +
         ": " + detail;
}

}  // namespace

Matroid::Matroid(std::shared_ptr<const RankOracle> oracle, ElementSet ground,
                 std::string provenance,
                 std::shared_ptr<const FieldMatrix> matrix)
    : oracle_(std::move(oracle)),
      ground_(ground),
      cache_(std::make_shared<RankCache>(ground)),
      provenance_(std::move(provenance)),
      matrix_(std::move(matrix)) {}

Matroid Matroid::linear(FieldMatrix matrix) {
  auto shared = std::make_shared<const FieldMatrix>(std::move(matrix));
  auto oracle = std::make_shared<const LinearOracle>(shared);
  std::string provenance = oracle->describe();
  return Matroid(std::move(oracle), shared->columns(), std::move(provenance),
                 shared);
}

Matroid Matroid::uniform(int n, int k) {
  check_ground_size(n, ElementSet::kMaxElements, "uniform matroid");
  if (k < 0 || k > n) {
    throw Error(ErrorKind::kInvalidArgument,
                "uniform matroid needs 0 <= k <= n");
  }
  auto oracle = std::make_shared<const UniformOracle>(n, k);
  std::string provenance = oracle->describe();
  return Matroid(std::move(oracle), ElementSet::full(n), std::move(provenance));
}

void validate_rank_axioms(int n, const std::vector<int>& table) {
  const std::size_t count = std::size_t{1} << n;
  if (table.size() != count) {
    throw Error(ErrorKind::kInvalidArgument,
                "rank table must list all " + std::to_string(count) +
                    " subsets");
  }
  for (std::size_t bits = 0; bits < count; ++bits) {
    const ElementSet x(bits);
    const int r = table[bits];
    if (r < 0 || r > x.size()) {
      throw Error(ErrorKind::kInvalidArgument,
                  axiom_failure("(R.1)", x, "need 0 <= rank <= |X|"));
    }
  }
  // Monotonicity and submodularity are equivalent to their one- and
  // two-element local forms.
  for (std::size_t bits = 0; bits < count; ++bits) {
    const ElementSet x(bits);
    const ElementSet outside = ElementSet::full(n) - x;
    for (int a : outside) {
      const int ra = table[x.with(a).bits()];
      if (ra < table[bits]) {
        throw Error(ErrorKind::kInvalidArgument,
                    axiom_failure("(R.2)", x.with(a), "rank decreases"));
      }
      for (int b : outside) {
        if (b <= a) continue;
        const int rb = table[x.with(b).bits()];
        const int rab = table[x.with(a).with(b).bits()];
        if (ra + rb < rab + table[bits]) {
          throw Error(ErrorKind::kInvalidArgument,
                      axiom_failure("(R.3)", x.with(a).with(b),
                                    "not submodular"));
        }
      }
    }
  }
}

Matroid Matroid::from_rank_table(int n, std::vector<int> table) {
  check_ground_size(n, 16, "rank-table oracle");
  validate_rank_axioms(n, table);
  auto oracle =
      std::make_shared<const TableOracle>(n, std::move(table), "rank table");
  std::string provenance = oracle->describe();
  return Matroid(std::move(oracle), ElementSet::full(n), std::move(provenance));
}

Matroid Matroid::from_bases(int n, const std::vector<ElementSet>& bases) {
  check_ground_size(n, 16, "bases oracle");
  if (bases.empty()) {
    throw Error(ErrorKind::kInvalidArgument, "a matroid has at least one basis");
  }
  const ElementSet ground = ElementSet::full(n);
  const int k = bases.front().size();
  for (ElementSet b : bases) {
    if (!b.subset_of(ground)) {
      throw Error(ErrorKind::kInvalidSubset,
                  "basis " + format_set(b) + " leaves the ground set");
    }
    if (b.size() != k) {
      throw Error(ErrorKind::kInvalidArgument,
                  "bases " + format_set(bases.front()) + " and " +
                      format_set(b) + " differ in size");
    }
  }
  const std::size_t count = std::size_t{1} << n;
  std::vector<char> independent(count, 0);
  for (ElementSet b : bases) independent[b.bits()] = 1;
  for (std::size_t bits = count; bits-- > 0;) {
    if (independent[bits]) continue;
    for (int e : ground - ElementSet(bits)) {
      if (independent[ElementSet(bits).with(e).bits()]) {
        independent[bits] = 1;
        break;
      }
    }
  }
  // rank(X) = max |X & B|, via the largest independent subset.
  std::vector<int> table(count, 0);
  for (std::size_t bits = 1; bits < count; ++bits) {
    const ElementSet x(bits);
    if (independent[bits]) {
      table[bits] = x.size();
      continue;
    }
    int best = 0;
    for (int e : x) best = std::max(best, table[x.without(e).bits()]);
    table[bits] = best;
  }
  validate_rank_axioms(n, table);
  std::size_t induced_bases = 0;
  for_each_subset_of_size(ground, k, [&](ElementSet s) {
    if (table[s.bits()] == k) ++induced_bases;
    return true;
  });
  std::vector<ElementSet> unique = bases;
  std::sort(unique.begin(), unique.end(), lex_less);
  unique.erase(std::unique(unique.begin(), unique.end()), unique.end());
  if (induced_bases != unique.size()) {
    throw Error(ErrorKind::kInvalidArgument,
                "basis list is not closed under basis exchange");
  }
  auto oracle =
      std::make_shared<const TableOracle>(n, std::move(table), "bases");
  std::string provenance = oracle->describe();
  return Matroid(std::move(oracle), ground, std::move(provenance));
}

Matroid Matroid::from_oracle(std::shared_ptr<const RankOracle> oracle,
                             ElementSet ground, std::string provenance) {
  if (!ground.subset_of(ElementSet::full(oracle->universe_size()))) {
    throw Error(ErrorKind::kInvalidSubset, "ground set outside the universe");
  }
  return Matroid(std::move(oracle), ground, std::move(provenance));
}

void Matroid::check_subset(ElementSet x) const {
  if (!x.subset_of(ground_)) {
    throw Error(ErrorKind::kInvalidSubset,
                format_set(x) + " is not a subset of the ground set " +
                    format_set(ground_));
  }
}

int Matroid::rank(ElementSet x) const {
  check_subset(x);
  return cache_->get(x, [&] { return oracle_->rank(x); });
}

bool Matroid::is_basis(ElementSet x) const {
  return is_independent(x) && x.size() == rank();
}

ElementSet Matroid::closure(ElementSet x) const {
  const int r = rank(x);
  ElementSet out = x;
  for (int e : ground_ - x) {
    if (rank(x.with(e)) == r) out = out.with(e);
  }
  return out;
}

ElementSet Matroid::cyc(ElementSet x) const {
  const int r = rank(x);
  ElementSet out;
  for (int e : x) {
    if (rank(x.without(e)) == r) out = out.with(e);
  }
  return out;
}

bool Matroid::is_cyclic_flat(ElementSet x) const {
  const int r = rank(x);
  for (int e : ground_ - x) {
    if (rank(x.with(e)) == r) return false;
  }
  for (int e : x) {
    if (rank(x.without(e)) != r) return false;
  }
  return true;
}

ElementSet Matroid::loops() const { return closure(ElementSet()); }

ElementSet Matroid::coloops() const { return ground_ - cyc(ground_); }

Matroid dual(const Matroid& m) {
  auto oracle = std::make_shared<const DualOracle>(m);
  std::string provenance = oracle->describe();
  return Matroid::from_oracle(std::move(oracle), m.ground(),
                              std::move(provenance));
}

Matroid restrict(const Matroid& m, ElementSet y) {
  m.check_subset(y);
  auto oracle = std::make_shared<const MinorOracle>(m, ElementSet());
  Matroid out(std::move(oracle), y,
              m.provenance() + " | " + format_set(y), m.matrix_);
  return out;
}

Matroid contract(const Matroid& m, ElementSet x) {
  m.check_subset(x);
  auto oracle = std::make_shared<const MinorOracle>(m, x);
  return Matroid::from_oracle(std::move(oracle), m.ground() - x,
                              m.provenance() + " / " + format_set(x));
}

Matroid minor(const Matroid& m, const MinorSpec& spec) {
  m.check_subset(spec.restrict_to);
  if (!spec.contract_by.subset_of(spec.restrict_to)) {
    throw Error(ErrorKind::kInvalidMinorSpec,
                "contraction set " + format_set(spec.contract_by) +
                    " is not inside the restriction " +
                    format_set(spec.restrict_to));
  }
  auto oracle = std::make_shared<const MinorOracle>(m, spec.contract_by);
  return Matroid::from_oracle(std::move(oracle),
                              spec.restrict_to - spec.contract_by,
                              m.provenance() + " | " +
                                  format_set(spec.restrict_to) + " / " +
                                  format_set(spec.contract_by));
}

std::optional<std::pair<int, int>> uniform_test(const Matroid& m) {
  const int n = m.size();
  const int k = m.rank();
  // Every k-subset independent forces rank(x) >= min(|x|, k) by
  // monotonicity; rank(x) <= min(|x|, k) always holds.
  const bool uniform = for_each_subset_of_size(
      m.ground(), k, [&](ElementSet s) { return m.rank(s) == k; });
  if (!uniform) return std::nullopt;
  return std::make_pair(n, k);
}

namespace {

// Whether M|y/x is U(|y - x|, k) with rank(y) - rank(x) = k already known.
bool minor_is_uniform(const Matroid& m, ElementSet y, ElementSet x, int k) {
  const int offset = m.rank(x);
  return for_each_subset_of_size(y - x, k, [&](ElementSet s) {
    return m.rank(s | x) - offset == k;
  });
}

}  // namespace

std::optional<UniformWitness> uniform_minor_bruteforce(const Matroid& m,
                                                       int n_minor, int k_minor,
                                                       const Limits& limits) {
  if (m.size() > limits.max_brute_ground) {
    throw Error(ErrorKind::kResourceLimit,
                "brute-force minor search supports at most " +
                    std::to_string(limits.max_brute_ground) +
                    " elements, got " + std::to_string(m.size()));
  }
  if (n_minor < 0 || k_minor < 0 || k_minor > n_minor || n_minor > m.size()) {
    return std::nullopt;
  }
  std::optional<UniformWitness> found;
  for (int ysize = n_minor; ysize <= m.size() && !found; ++ysize) {
    for_each_subset_of_size(m.ground(), ysize, [&](ElementSet y) {
      const int ry = m.rank(y);
      for_each_subset_of_size(y, ysize - n_minor, [&](ElementSet x) {
        if (ry - m.rank(x) != k_minor) return true;
        if (!minor_is_uniform(m, y, x, k_minor)) return true;
        found = UniformWitness{y, x, n_minor, k_minor,
                               Certificate::kBruteForce};
        return false;
      });
      return !found.has_value();
    });
  }
  if (found) {
    const auto params = uniform_test(minor(m, {found->restrict_to,
                                               found->contract_by}));
    if (!params || *params != std::make_pair(n_minor, k_minor)) {
      throw std::logic_error("brute-force witness failed re-validation");
    }
  }
  return found;
}

bool uniform_has_uniform_minor(int n, int k, int n_minor, int k_minor) {
  if (n < 0 || k < 0 || n_minor < 0 || k_minor < 0 || k > n ||
      k_minor > n_minor) {
    throw Error(ErrorKind::kInvalidArgument,
                "uniform parameters need 0 <= k <= n");
  }
  return k_minor <= k && n_minor - k_minor <= n - k;
}

}  // namespace matcyc
