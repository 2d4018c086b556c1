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

#ifndef MATCYC_LATTICE_HPP_
#define MATCYC_LATTICE_HPP_

#include <optional>
#include <utility>
#include <vector>

#include "matcyc/element_set.hpp"
#include "matcyc/error.hpp"
#include "matcyc/matroid.hpp"

namespace matcyc {

struct LatticeNode {
  ElementSet set;
  int rank = 0;
  int nullity = 0;
};

// Covering relation lower < upper; indices into CyclicFlatLattice::nodes().
struct CoverEdge {
  int lower = 0;
  int upper = 0;
  int delta_rank = 0;
  int delta_nullity = 0;

  bool operator==(const CoverEdge&) const = default;
};

// The lattice Z(M) of cyclic flats with its Hasse diagram. Nodes are sorted by
// (rank, size, lexicographic set); edges by (lower, upper).
class CyclicFlatLattice {
 public:
  CyclicFlatLattice() = default;
  CyclicFlatLattice(ElementSet ground, std::vector<LatticeNode> nodes);

  ElementSet ground() const { return ground_; }
  const std::vector<LatticeNode>& nodes() const { return nodes_; }
  const std::vector<CoverEdge>& edges() const { return edges_; }
  const LatticeNode& node(int i) const { return nodes_[i]; }
  int size() const { return static_cast<int>(nodes_.size()); }

  int bottom() const { return bottom_; }
  int top() const { return top_; }
  const LatticeNode& bottom_node() const { return nodes_[bottom_]; }
  const LatticeNode& top_node() const { return nodes_[top_]; }

  // -1 when `set` is not a node.
  int index_of(ElementSet set) const;
  bool contains(ElementSet set) const { return index_of(set) >= 0; }
  std::optional<CoverEdge> edge_between(ElementSet lower,
                                        ElementSet upper) const;
  std::vector<int> lower_covers(int node) const;
  std::vector<int> upper_covers(int node) const;

 private:
  ElementSet ground_;
  std::vector<LatticeNode> nodes_;
  std::vector<CoverEdge> edges_;
  int bottom_ = 0;
  int top_ = 0;
};

CyclicFlatLattice enumerate_cyclic_flats(const Matroid& m,
                                         const Limits& limits = {});

// Builds nodes and the Hasse diagram for an already known family of cyclic
// flats of m.
CyclicFlatLattice make_lattice(const Matroid& m, std::vector<ElementSet> sets);

enum class EdgeKind { kRank, kNullity, kElementary, kMixed };

struct EdgeLabel {
  EdgeKind kind = EdgeKind::kElementary;
  int delta_rank = 1;
  int delta_nullity = 1;

  // l for rank and nullity edges, 1 for elementary ones, 0 for mixed ones.
  int value() const;
  bool operator==(const EdgeLabel&) const = default;
};

EdgeLabel classify_edge(int delta_rank, int delta_nullity);
std::vector<std::pair<CoverEdge, EdgeLabel>> label_edges(
    const CyclicFlatLattice& lattice);

// Lattice operations on Z(M).
ElementSet join(const Matroid& m, ElementSet a, ElementSet b);
ElementSet meet(const Matroid& m, ElementSet a, ElementSet b);

struct RankedSet {
  ElementSet set;
  int rank = 0;
  bool operator==(const RankedSet&) const = default;
};

enum class MinorFormula {
  kAuto,
  kRestriction,    // Z(M|Y) = { cyc(Z & Y) }
  kContraction,    // Z(M/X) = { cl(X | Z) - X }
  kCombined,       // Z(M|Y/X) = { cl(X | cyc(Z & Y)) & (Y - X) }
  kCombinedDual,   // Z(M|Y/X) = { cyc(cl(X | Z) & Y) - X }
  kInterval,       // X cyclic, Y flat: { Z - X : X <= Z <= Y }
};

// Cyclic flats of M|Y/X computed from Z(M), sorted like lattice nodes, with
// ranks in the minor. kAuto picks restriction when X is empty, contraction
// when Y = E, the interval form when X is cyclic and Y is a flat, and the
// combined form otherwise. Formulas that do not apply to `spec` (contraction
// with Y != E, restriction with X nonempty, interval without its
// preconditions) throw kInvalidArgument.
std::vector<RankedSet> minor_cyclic_flats(
    const Matroid& m, const CyclicFlatLattice& lattice, const MinorSpec& spec,
    MinorFormula formula = MinorFormula::kAuto);

void check_minor_spec(const Matroid& m, const MinorSpec& spec);

// Isomorphism type of Z(M) decorated with (|Z|, rank(Z)) per node.
class Configuration {
 public:
  struct Node {
    int size = 0;
    int rank = 0;
    auto operator<=>(const Node&) const = default;
  };

  const std::vector<Node>& nodes() const { return nodes_; }
  // Canonical node indices, lower < upper.
  const std::vector<std::pair<int, int>>& edges() const { return edges_; }

  bool operator==(const Configuration&) const = default;

 private:
  friend Configuration configuration(const CyclicFlatLattice&);
  std::vector<Node> nodes_;
  std::vector<std::pair<int, int>> edges_;
};

inline constexpr int kMaxConfigurationNodes = 24;

Configuration configuration(const CyclicFlatLattice& lattice);

// Minimum distance read off a configuration whose top has no coloops below
// it: eta(top) + 1 - max eta over the other nodes. Nodes are (|Z|, rank).
int distance_from_configuration(const Configuration& config);

}  // namespace matcyc

#endif  // MATCYC_LATTICE_HPP_
