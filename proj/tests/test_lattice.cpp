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

#include <algorithm>
#include <numeric>
#include <random>

#include "doctest.h"
#include "matcyc/lattice.hpp"
#include "matcyc/lrc.hpp"
#include "support.hpp"

using namespace matcyc;
using namespace matcyc::testing;

namespace {

Matroid mg() { return Matroid::linear(example_g()); }

std::vector<ElementSet> node_sets(const CyclicFlatLattice& l) {
  std::vector<ElementSet> out;
  for (const auto& z : l.nodes()) out.push_back(z.set);
  std::sort(out.begin(), out.end(), lex_less);
  return out;
}

std::vector<RankedSet> oracle_minor_flats(const Matroid& m,
                                          const MinorSpec& spec) {
  const Matroid n = minor(m, spec);
  std::vector<RankedSet> out;
  for (ElementSet z : oracle_cyclic_flats(n)) out.push_back({z, n.rank(z)});
  return out;
}

std::vector<RankedSet> sorted(std::vector<RankedSet> v) {
  std::sort(v.begin(), v.end(), [](const RankedSet& a, const RankedSet& b) {
    return lex_less(a.set, b.set);
  });
  return v;
}

Matroid permuted(const FieldMatrix& g, const std::vector<int>& perm) {
  std::vector<int> entries;
  for (int r = 0; r < g.rows(); ++r) {
    for (int c = 0; c < g.cols(); ++c) entries.push_back(g.at(r, perm[c]));
  }
  return Matroid::linear(FieldMatrix(g.q(), g.rows(), g.cols(), entries));
}

}  // namespace

TEST_CASE("lattice of the example matroid") {
  const auto l = enumerate_cyclic_flats(mg());
  REQUIRE(l.size() == 5);
  const std::vector<std::pair<ElementSet, int>> expect = {
      {ElementSet(), 0}, {L({5, 6}), 1}, {L({1, 2, 3}), 2},
      {L({3, 4, 5, 6}), 2}, {L({1, 2, 3, 4, 5, 6}), 3}};
  for (std::size_t i = 0; i < expect.size(); ++i) {
    CHECK(l.node(static_cast<int>(i)).set == expect[i].first);
    CHECK(l.node(static_cast<int>(i)).rank == expect[i].second);
  }
  CHECK(l.edges().size() == 5);
  CHECK(l.edge_between(ElementSet(), L({5, 6})));
  CHECK(l.edge_between(ElementSet(), L({1, 2, 3})));
  CHECK(l.edge_between(L({5, 6}), L({3, 4, 5, 6})));
  CHECK(l.edge_between(L({1, 2, 3}), mg().ground()));
  CHECK(l.edge_between(L({3, 4, 5, 6}), mg().ground()));
  CHECK_FALSE(l.edge_between(ElementSet(), mg().ground()));
  CHECK_FALSE(l.edge_between(L({5, 6}), mg().ground()));
}

TEST_CASE("edge labels of the example matroid") {
  const auto l = enumerate_cyclic_flats(mg());
  int elementary = 0;
  for (const auto& [edge, label] : label_edges(l)) {
    const ElementSet lo = l.node(edge.lower).set;
    const ElementSet hi = l.node(edge.upper).set;
    if (lo.empty() && hi == L({1, 2, 3})) {
      CHECK(label == EdgeLabel{EdgeKind::kRank, 2, 1});
      CHECK(label.value() == 2);
    } else if (lo == L({1, 2, 3})) {
      CHECK(label == EdgeLabel{EdgeKind::kNullity, 1, 2});
      CHECK(label.value() == 2);
    } else {
      CHECK(label.kind == EdgeKind::kElementary);
      ++elementary;
    }
  }
  CHECK(elementary == 3);
  CHECK(classify_edge(2, 3).kind == EdgeKind::kMixed);
}

TEST_CASE("small lattices") {
  const auto u = enumerate_cyclic_flats(Matroid::uniform(6, 3));
  REQUIRE(u.size() == 2);
  CHECK(u.bottom_node().set.empty());
  CHECK(u.top_node().rank == 3);
  const auto free = enumerate_cyclic_flats(Matroid::linear(
      FieldMatrix::from_rows(2, {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}})));
  REQUIRE(free.size() == 1);
  CHECK(free.bottom_node().set.empty());
  CHECK(free.edges().empty());
}

TEST_CASE("enumeration agrees with the exhaustive filter") {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 200; ++trial) {
    const FieldMatrix g = trial % 2 ? random_small_matrix(rng, 9)
                                    : random_matrix(rng, 2, 3 + trial % 3, 3 + trial % 7);
    const Matroid m = Matroid::linear(g);
    const auto l = enumerate_cyclic_flats(m);
    REQUIRE(node_sets(l) == oracle_cyclic_flats(m));
    REQUIRE(l.bottom_node().set == m.loops());
    REQUIRE(l.top_node().set == m.ground() - m.coloops());
    REQUIRE(l.bottom_node().set == m.closure(ElementSet()));
    REQUIRE(l.top_node().set == m.cyc(m.ground()));
    for (const auto& e : l.edges()) {
      REQUIRE(e.delta_rank >= 1);
      REQUIRE(e.delta_nullity >= 1);
      if (g.q() == 2) {
        REQUIRE((e.delta_rank == 1 || e.delta_nullity == 1));
        REQUIRE(classify_edge(e.delta_rank, e.delta_nullity).kind !=
                EdgeKind::kMixed);
      }
    }
  }
}

TEST_CASE("covers are exactly the Hasse relation") {
  std::mt19937_64 rng(32);
  for (int trial = 0; trial < 60; ++trial) {
    const Matroid m = Matroid::linear(random_small_matrix(rng, 8));
    const auto l = enumerate_cyclic_flats(m);
    for (int a = 0; a < l.size(); ++a) {
      for (int b = 0; b < l.size(); ++b) {
        const ElementSet x = l.node(a).set;
        const ElementSet y = l.node(b).set;
        bool covers = x.proper_subset_of(y);
        for (int c = 0; c < l.size() && covers; ++c) {
          const ElementSet z = l.node(c).set;
          if (x.proper_subset_of(z) && z.proper_subset_of(y)) covers = false;
        }
        REQUIRE(l.edge_between(x, y).has_value() == covers);
      }
    }
  }
}

TEST_CASE("join and meet are lattice operations") {
  std::mt19937_64 rng(33);
  for (int trial = 0; trial < 60; ++trial) {
    const Matroid m = Matroid::linear(random_small_matrix(rng, 8));
    const auto l = enumerate_cyclic_flats(m);
    for (const auto& a : l.nodes()) {
      for (const auto& b : l.nodes()) {
        const ElementSet j = join(m, a.set, b.set);
        const ElementSet w = meet(m, a.set, b.set);
        REQUIRE(l.contains(j));
        REQUIRE(l.contains(w));
        for (const auto& z : l.nodes()) {
          if (a.set.subset_of(z.set) && b.set.subset_of(z.set)) {
            REQUIRE(j.subset_of(z.set));
          }
          if (z.set.subset_of(a.set) && z.set.subset_of(b.set)) {
            REQUIRE(z.set.subset_of(w));
          }
        }
      }
    }
  }
}

TEST_CASE("cyclic flats of the dual are complements") {
  std::mt19937_64 rng(34);
  for (int trial = 0; trial < 100; ++trial) {
    const Matroid m = Matroid::linear(random_small_matrix(rng, 9));
    std::vector<ElementSet> complements;
    const auto l = enumerate_cyclic_flats(m);
    for (const auto& z : l.nodes()) {
      complements.push_back(m.ground() - z.set);
    }
    std::sort(complements.begin(), complements.end(), lex_less);
    REQUIRE(complements == oracle_cyclic_flats(dual(m)));
  }
}

TEST_CASE("minor formulas on the example matroid") {
  const Matroid m = mg();
  const auto l = enumerate_cyclic_flats(m);
  const ElementSet e = m.ground();
  CHECK(minor_cyclic_flats(m, l, {L({1, 2, 4, 5}), {}}) ==
        std::vector<RankedSet>{{ElementSet(), 0}, {L({1, 2, 4, 5}), 3}});
  std::vector<RankedSet> identity;
  for (const auto& z : l.nodes()) identity.push_back({z.set, z.rank});
  CHECK(minor_cyclic_flats(m, l, {e, {}}) == identity);
  CHECK(minor_cyclic_flats(m, l, {e, L({4})}) ==
        std::vector<RankedSet>{{ElementSet(), 0},
                               {L({3, 5, 6}), 1},
                               {L({1, 2, 3, 5, 6}), 2}});
  CHECK(minor_cyclic_flats(m, l, {L({3, 4, 5, 6}), {}}) ==
        std::vector<RankedSet>{{ElementSet(), 0}, {L({5, 6}), 1},
                               {L({3, 4, 5, 6}), 2}});
  // Contracting 5 makes 6 a loop.
  CHECK(minor_cyclic_flats(m, l, {e, L({5})}) ==
        std::vector<RankedSet>{{L({6}), 0}, {L({3, 4, 6}), 1},
                               {L({1, 2, 3, 4, 6}), 2}});
  CHECK(minor_cyclic_flats(m, l, {L({1, 2, 4, 5}), L({1})}) ==
        std::vector<RankedSet>{{ElementSet(), 0}, {L({2, 4, 5}), 2}});
  try {
    minor_cyclic_flats(m, l, {L({1, 2}), L({1})}, MinorFormula::kRestriction);
    FAIL("expected an error");
  } catch (const Error& err) {
    CHECK(err.kind() == ErrorKind::kInvalidArgument);
  }
  CHECK_THROWS_AS(minor_cyclic_flats(m, l, {L({1, 2}), L({3})}), Error);
}

TEST_CASE("minor formulas match direct enumeration") {
  std::mt19937_64 rng(35);
  int checked = 0;
  for (int trial = 0; trial < 500; ++trial) {
    const Matroid m = Matroid::linear(random_small_matrix(rng, 8));
    const auto l = enumerate_cyclic_flats(m);
    ElementSet y = random_subset(rng, m.ground());
    ElementSet x = random_subset(rng, y);
    if (trial % 5 == 0) x = ElementSet();
    if (trial % 5 == 1) y = m.ground();
    if (trial % 5 == 2) {
      y = m.closure(y);
      x = m.cyc(x);
    }
    const MinorSpec spec{y, x};
    const auto expect = sorted(oracle_minor_flats(m, spec));
    REQUIRE(sorted(minor_cyclic_flats(m, l, spec)) == expect);
    REQUIRE(sorted(minor_cyclic_flats(m, l, spec, MinorFormula::kCombined)) ==
            expect);
    REQUIRE(sorted(minor_cyclic_flats(m, l, spec,
                                      MinorFormula::kCombinedDual)) == expect);
    if (x.empty()) {
      REQUIRE(sorted(minor_cyclic_flats(m, l, spec,
                                        MinorFormula::kRestriction)) == expect);
    }
    if (y == m.ground()) {
      REQUIRE(sorted(minor_cyclic_flats(m, l, spec,
                                        MinorFormula::kContraction)) == expect);
    }
    if (m.is_cyclic_set(x) && m.is_flat(y)) {
      REQUIRE(sorted(minor_cyclic_flats(m, l, spec, MinorFormula::kInterval)) ==
              expect);
    }
    ++checked;
  }
  CHECK(checked == 500);
}

TEST_CASE("configurations") {
  const FieldMatrix g = example_g();
  const auto base = configuration(enumerate_cyclic_flats(Matroid::linear(g)));
  std::vector<int> perm(6);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    REQUIRE(configuration(enumerate_cyclic_flats(permuted(g, perm))) == base);
  } while (std::next_permutation(perm.begin(), perm.end()));
  CHECK_FALSE(configuration(enumerate_cyclic_flats(Matroid::uniform(6, 3))) ==
              base);
  CHECK(distance_from_configuration(base) == 2);
}

TEST_CASE("configurations are relabelling invariant on random matroids") {
  std::mt19937_64 rng(36);
  for (int trial = 0; trial < 60; ++trial) {
    const FieldMatrix g = random_small_matrix(rng, 8);
    const Matroid m = Matroid::linear(g);
    const auto l = enumerate_cyclic_flats(m);
    std::vector<int> perm(g.cols());
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    const auto c = configuration(l);
    REQUIRE(configuration(enumerate_cyclic_flats(permuted(g, perm))) == c);
    if (m.rank() > 0 && l.bottom_node().set.empty() &&
        l.top_node().set == m.ground()) {
      REQUIRE(distance_from_configuration(c) == global_distance(m, l));
    }
  }
}

TEST_CASE("configuration node budget") {
  const auto l = enumerate_cyclic_flats(Matroid::linear(binary_simplex_matrix(4)));
  REQUIRE(l.size() > kMaxConfigurationNodes);
  try {
    configuration(l);
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::kResourceLimit);
  }
}

TEST_CASE("enumeration budget") {
  try {
    enumerate_cyclic_flats(Matroid::uniform(17, 2));
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::kResourceLimit);
  }
  std::mt19937_64 rng(37);
  CHECK_NOTHROW(enumerate_cyclic_flats(Matroid::linear(random_matrix(rng, 2, 5, 20))));
}
