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

#include "matcyc/lattice.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <string>
#include <unordered_set>

namespace matcyc {
namespace {

bool node_less(const LatticeNode& a, const LatticeNode& b) {
  if (a.rank != b.rank) return a.rank < b.rank;
  return size_lex_less(a.set, b.set);
}

bool ranked_less(const RankedSet& a, const RankedSet& b) {
  if (a.rank != b.rank) return a.rank < b.rank;
  return size_lex_less(a.set, b.set);
}

}  // namespace

CyclicFlatLattice::CyclicFlatLattice(ElementSet ground,
                                     std::vector<LatticeNode> nodes)
    : ground_(ground), nodes_(std::move(nodes)) {
  std::sort(nodes_.begin(), nodes_.end(), node_less);
  nodes_.erase(std::unique(nodes_.begin(), nodes_.end(),
                           [](const LatticeNode& a, const LatticeNode& b) {
                             return a.set == b.set;
                           }),
               nodes_.end());
  if (nodes_.empty()) {
    throw std::logic_error("a lattice of cyclic flats is never empty");
  }
  // A node strictly inside another has strictly smaller rank, so it sorts
  // earlier; scanning downwards meets every intermediate node before the
  // nodes below it.
  const int count = size();
  for (int upper = 0; upper < count; ++upper) {
    std::vector<int> covers;
    for (int lower = upper - 1; lower >= 0; --lower) {
      const ElementSet x = nodes_[lower].set;
      if (!x.proper_subset_of(nodes_[upper].set)) continue;
      bool below_cover = false;
      for (int c : covers) {
        if (x.subset_of(nodes_[c].set)) {
          below_cover = true;
          break;
        }
      }
      if (below_cover) continue;
      covers.push_back(lower);
      edges_.push_back({lower, upper,
                        nodes_[upper].rank - nodes_[lower].rank,
                        nodes_[upper].nullity - nodes_[lower].nullity});
    }
  }
  std::sort(edges_.begin(), edges_.end(),
            [](const CoverEdge& a, const CoverEdge& b) {
              return std::pair(a.lower, a.upper) < std::pair(b.lower, b.upper);
            });
  bottom_ = 0;
  top_ = count - 1;
  for (const auto& node : nodes_) {
    if (!nodes_[bottom_].set.subset_of(node.set) ||
        !node.set.subset_of(nodes_[top_].set)) {
      throw std::logic_error("set family has no bottom or no top");
    }
  }
}

int CyclicFlatLattice::index_of(ElementSet set) const {
  for (int i = 0; i < size(); ++i) {
    if (nodes_[i].set == set) return i;
  }
  return -1;
}

std::optional<CoverEdge> CyclicFlatLattice::edge_between(
    ElementSet lower, ElementSet upper) const {
  const int lo = index_of(lower);
  const int hi = index_of(upper);
  if (lo < 0 || hi < 0) return std::nullopt;
  for (const auto& e : edges_) {
    if (e.lower == lo && e.upper == hi) return e;
  }
  return std::nullopt;
}

std::vector<int> CyclicFlatLattice::lower_covers(int node) const {
  std::vector<int> out;
  for (const auto& e : edges_) {
    if (e.upper == node) out.push_back(e.lower);
  }
  return out;
}

std::vector<int> CyclicFlatLattice::upper_covers(int node) const {
  std::vector<int> out;
  for (const auto& e : edges_) {
    if (e.lower == node) out.push_back(e.upper);
  }
  return out;
}

CyclicFlatLattice make_lattice(const Matroid& m, std::vector<ElementSet> sets) {
  std::vector<LatticeNode> nodes;
  nodes.reserve(sets.size());
  for (ElementSet s : sets) {
    const int r = m.rank(s);
    nodes.push_back({s, r, s.size() - r});
  }
  return CyclicFlatLattice(m.ground(), std::move(nodes));
}

CyclicFlatLattice enumerate_cyclic_flats(const Matroid& m,
                                         const Limits& limits) {
  const int n = m.size();
  const bool binary_linear = m.matrix() != nullptr && m.matrix()->q() == 2;
  const int limit = binary_linear ? limits.max_ground_binary : limits.max_ground;
  if (n > limit) {
    throw Error(ErrorKind::kResourceLimit,
                "cyclic-flat enumeration supports at most " +
                    std::to_string(limit) + " elements here, got " +
                    std::to_string(n));
  }

  // Flats bottom-up: every cover of a flat F is cl(F + e) for some e.
  const std::size_t fallback_at = (std::size_t{1} << n) / 4;
  std::unordered_set<ElementSet, ElementSetHash> flats;
  std::deque<ElementSet> queue;
  const ElementSet bottom = m.closure(ElementSet());
  flats.insert(bottom);
  queue.push_back(bottom);
  bool exhaustive = false;
  while (!queue.empty() && !exhaustive) {
    const ElementSet f = queue.front();
    queue.pop_front();
    ElementSet seen = f;
    for (int e : m.ground() - f) {
      if (seen.contains(e)) continue;
      const ElementSet g = m.closure(f.with(e));
      seen |= g;
      if (flats.insert(g).second) queue.push_back(g);
    }
    exhaustive = flats.size() > fallback_at;
  }

  std::vector<ElementSet> cyclic_flats;
  if (exhaustive) {
    for_each_subset(m.ground(), [&](ElementSet x) {
      if (m.is_cyclic_flat(x)) cyclic_flats.push_back(x);
    });
  } else {
    for (ElementSet f : flats) {
      if (m.is_cyclic_set(f)) cyclic_flats.push_back(f);
    }
  }
  return make_lattice(m, std::move(cyclic_flats));
}

int EdgeLabel::value() const {
  switch (kind) {
    case EdgeKind::kRank:
      return delta_rank;
    case EdgeKind::kNullity:
      return delta_nullity;
    case EdgeKind::kElementary:
      return 1;
    case EdgeKind::kMixed:
      return 0;
  }
  return 0;
}

EdgeLabel classify_edge(int delta_rank, int delta_nullity) {
  EdgeKind kind = EdgeKind::kMixed;
  if (delta_rank == 1 && delta_nullity == 1) {
    kind = EdgeKind::kElementary;
  } else if (delta_rank > 1 && delta_nullity == 1) {
    kind = EdgeKind::kRank;
  } else if (delta_nullity > 1 && delta_rank == 1) {
    kind = EdgeKind::kNullity;
  }
  return {kind, delta_rank, delta_nullity};
}

std::vector<std::pair<CoverEdge, EdgeLabel>> label_edges(
    const CyclicFlatLattice& lattice) {
  std::vector<std::pair<CoverEdge, EdgeLabel>> out;
  out.reserve(lattice.edges().size());
  for (const auto& e : lattice.edges()) {
    out.emplace_back(e, classify_edge(e.delta_rank, e.delta_nullity));
  }
  return out;
}

ElementSet join(const Matroid& m, ElementSet a, ElementSet b) {
  return m.closure(a | b);
}

ElementSet meet(const Matroid& m, ElementSet a, ElementSet b) {
  return m.cyc(a & b);
}

void check_minor_spec(const Matroid& m, const MinorSpec& spec) {
  m.check_subset(spec.restrict_to);
  if (!spec.contract_by.subset_of(spec.restrict_to)) {
    throw Error(ErrorKind::kInvalidMinorSpec,
                "contraction set " + format_set(spec.contract_by) +
                    " is not inside the restriction " +
                    format_set(spec.restrict_to));
  }
}

std::vector<RankedSet> minor_cyclic_flats(const Matroid& m,
                                          const CyclicFlatLattice& lattice,
                                          const MinorSpec& spec,
                                          MinorFormula formula) {
  check_minor_spec(m, spec);
  const ElementSet y = spec.restrict_to;
  const ElementSet x = spec.contract_by;
  const bool x_cyclic = m.is_cyclic_set(x);
  const bool y_flat = m.is_flat(y);

  if (formula == MinorFormula::kAuto) {
    if (x.empty()) {
      formula = MinorFormula::kRestriction;
    } else if (y == m.ground()) {
      formula = MinorFormula::kContraction;
    } else if (x_cyclic && y_flat) {
      formula = MinorFormula::kInterval;
    } else {
      formula = MinorFormula::kCombined;
    }
  }

  std::vector<ElementSet> sets;
  switch (formula) {
    case MinorFormula::kRestriction:
      if (!x.empty()) {
        throw Error(ErrorKind::kInvalidArgument,
                    "restriction formula needs an empty contraction set");
      }
      for (const auto& z : lattice.nodes()) sets.push_back(m.cyc(z.set & y));
      break;
    case MinorFormula::kContraction:
      if (y != m.ground()) {
        throw Error(ErrorKind::kInvalidArgument,
                    "contraction formula needs Y = E");
      }
      for (const auto& z : lattice.nodes()) {
        sets.push_back(m.closure(x | z.set) - x);
      }
      break;
    case MinorFormula::kCombined:
      for (const auto& z : lattice.nodes()) {
        sets.push_back(m.closure(x | m.cyc(z.set & y)) & (y - x));
      }
      break;
    case MinorFormula::kCombinedDual:
      for (const auto& z : lattice.nodes()) {
        sets.push_back(m.cyc(m.closure(x | z.set) & y) - x);
      }
      break;
    case MinorFormula::kInterval:
      if (!x_cyclic || !y_flat) {
        throw Error(ErrorKind::kInvalidArgument,
                    "interval formula needs X cyclic and Y a flat");
      }
      for (const auto& z : lattice.nodes()) {
        if (x.subset_of(z.set) && z.set.subset_of(y)) {
          sets.push_back(z.set - x);
        }
      }
      break;
    case MinorFormula::kAuto:
      break;
  }

  const int offset = m.rank(x);
  std::vector<RankedSet> out;
  out.reserve(sets.size());
  for (ElementSet s : sets) out.push_back({s, m.rank(s | x) - offset});
  std::sort(out.begin(), out.end(), ranked_less);
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

namespace {

// Canonical labelling by individualisation and refinement over the directed
// Hasse diagram; twins (same neighbourhoods) are branched on only once.
class Canonicalizer {
 public:
  static constexpr long kMaxLeaves = 2'000'000;

  explicit Canonicalizer(const CyclicFlatLattice& lattice)
      : n_(lattice.size()),
        up_(static_cast<std::size_t>(n_)),
        down_(static_cast<std::size_t>(n_)),
        adjacent_(static_cast<std::size_t>(n_) * n_, 0) {
    for (const auto& e : lattice.edges()) {
      up_[e.lower].push_back(e.upper);
      down_[e.upper].push_back(e.lower);
      adjacent_[static_cast<std::size_t>(e.lower) * n_ + e.upper] = 1;
    }
    for (const auto& node : lattice.nodes()) {
      labels_.push_back({node.set.size(), node.rank});
    }
  }

  std::vector<int> run() {
    std::vector<std::pair<int, int>> keys(labels_.begin(), labels_.end());
    std::vector<int> colors = rank_keys(keys);
    search(refine(std::move(colors)));
    return best_order_;
  }

  const std::vector<std::pair<int, int>>& labels() const { return labels_; }
  bool adjacent(int a, int b) const {
    return adjacent_[static_cast<std::size_t>(a) * n_ + b] != 0;
  }

 private:
  template <class Key>
  static std::vector<int> rank_keys(const std::vector<Key>& keys) {
    std::vector<Key> sorted = keys;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    std::vector<int> out;
    out.reserve(keys.size());
    for (const auto& k : keys) {
      out.push_back(static_cast<int>(
          std::lower_bound(sorted.begin(), sorted.end(), k) - sorted.begin()));
    }
    return out;
  }

  static int count_colors(const std::vector<int>& colors) {
    return colors.empty()
               ? 0
               : *std::max_element(colors.begin(), colors.end()) + 1;
  }

  std::vector<int> refine(std::vector<int> colors) const {
    int classes = count_colors(colors);
    while (true) {
      using Signature = std::pair<int, std::pair<std::vector<int>,
                                                 std::vector<int>>>;
      std::vector<Signature> sig;
      sig.reserve(static_cast<std::size_t>(n_));
      for (int v = 0; v < n_; ++v) {
        std::vector<int> ups;
        std::vector<int> downs;
        for (int u : up_[v]) ups.push_back(colors[u]);
        for (int u : down_[v]) downs.push_back(colors[u]);
        std::sort(ups.begin(), ups.end());
        std::sort(downs.begin(), downs.end());
        sig.push_back({colors[v], {std::move(ups), std::move(downs)}});
      }
      colors = rank_keys(sig);
      const int next = count_colors(colors);
      if (next == classes) return colors;
      classes = next;
    }
  }

  std::vector<int> encode(const std::vector<int>& colors) const {
    std::vector<int> order(static_cast<std::size_t>(n_));
    for (int v = 0; v < n_; ++v) order[colors[v]] = v;
    std::vector<int> code;
    code.reserve(static_cast<std::size_t>(n_) * n_);
    for (int i = 0; i < n_; ++i) {
      for (int j = 0; j < n_; ++j) code.push_back(adjacent(order[i], order[j]));
    }
    return code;
  }

  void search(const std::vector<int>& colors) {
    const int classes = count_colors(colors);
    if (classes == n_) {
      if (++leaves_ > kMaxLeaves) {
        throw Error(ErrorKind::kResourceLimit,
                    "configuration canonicalisation exceeded its search "
                    "budget");
      }
      std::vector<int> code = encode(colors);
      if (best_order_.empty() || code < best_code_) {
        best_code_ = std::move(code);
        best_order_.assign(static_cast<std::size_t>(n_), 0);
        for (int v = 0; v < n_; ++v) best_order_[colors[v]] = v;
      }
      return;
    }
    std::vector<int> cell_size(static_cast<std::size_t>(classes), 0);
    for (int c : colors) ++cell_size[c];
    int target = 0;
    while (cell_size[target] == 1) ++target;

    std::vector<std::pair<std::vector<int>, std::vector<int>>> tried;
    for (int v = 0; v < n_; ++v) {
      if (colors[v] != target) continue;
      std::vector<int> ups = up_[v];
      std::vector<int> downs = down_[v];
      std::sort(ups.begin(), ups.end());
      std::sort(downs.begin(), downs.end());
      auto neighbourhood = std::make_pair(std::move(ups), std::move(downs));
      if (std::find(tried.begin(), tried.end(), neighbourhood) != tried.end()) {
        continue;
      }
      tried.push_back(std::move(neighbourhood));

      std::vector<int> split(static_cast<std::size_t>(n_));
      for (int u = 0; u < n_; ++u) {
        split[u] = 2 * colors[u] + (colors[u] == target && u != v ? 1 : 0);
      }
      search(refine(rank_keys(split)));
    }
  }

  int n_;
  std::vector<std::vector<int>> up_;
  std::vector<std::vector<int>> down_;
  std::vector<char> adjacent_;
  std::vector<std::pair<int, int>> labels_;
  std::vector<int> best_code_;
  std::vector<int> best_order_;
  long leaves_ = 0;
};

}  // namespace

Configuration configuration(const CyclicFlatLattice& lattice) {
  if (lattice.size() > kMaxConfigurationNodes) {
    throw Error(ErrorKind::kResourceLimit,
                "configuration supports at most " +
                    std::to_string(kMaxConfigurationNodes) + " nodes, got " +
                    std::to_string(lattice.size()));
  }
  Canonicalizer canon(lattice);
  const std::vector<int> order = canon.run();
  std::vector<int> position(order.size());
  for (std::size_t i = 0; i < order.size(); ++i) position[order[i]] = static_cast<int>(i);

  Configuration out;
  for (int v : order) {
    out.nodes_.push_back({canon.labels()[v].first, canon.labels()[v].second});
  }
  for (const auto& e : lattice.edges()) {
    out.edges_.emplace_back(position[e.lower], position[e.upper]);
  }
  std::sort(out.edges_.begin(), out.edges_.end());
  return out;
}

int distance_from_configuration(const Configuration& config) {
  const int count = static_cast<int>(config.nodes().size());
  std::vector<char> has_upper(static_cast<std::size_t>(count), 0);
  for (const auto& [lower, upper] : config.edges()) has_upper[lower] = 1;
  int top = -1;
  for (int i = 0; i < count; ++i) {
    if (!has_upper[i]) top = i;
  }
  if (count < 2 || top < 0) {
    throw Error(ErrorKind::kDegenerateCode,
                "configuration has a single cyclic flat; distance undefined");
  }
  const auto nullity = [&](int i) {
    return config.nodes()[i].size - config.nodes()[i].rank;
  };
  int max_below = 0;
  for (int i = 0; i < count; ++i) {
    if (i != top) max_below = std::max(max_below, nullity(i));
  }
  return nullity(top) + 1 - max_below;
}

}  // namespace matcyc
