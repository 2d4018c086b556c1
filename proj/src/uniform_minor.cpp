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

#include "matcyc/uniform_minor.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <string>

namespace matcyc {
namespace {

// Witnesses are re-checked on the actual minor before they leave this file.
UniformWitness validated(const Matroid& m, UniformWitness w) {
  const auto params = uniform_test(minor(m, {w.restrict_to, w.contract_by}));
  if (!params || params->first != w.n || params->second != w.k) {
    throw std::logic_error("uniform-minor witness failed re-validation: " +
                           format_witness(w));
  }
  return w;
}

// M|cl/c together with its cyclic flats, taken from the interval [c, cl] of
// Z(M). `c` must be cyclic and `cl` a flat.
struct Reduced {
  Matroid matroid;
  std::vector<RankedSet> flats;
};

Reduced reduce(const Matroid& m, const CyclicFlatLattice& lattice,
               ElementSet cyclic_part, ElementSet flat_hull) {
  const MinorSpec spec{flat_hull, cyclic_part};
  return {minor(m, spec),
          minor_cyclic_flats(m, lattice, spec, MinorFormula::kInterval)};
}

}  // namespace

UniformWitness edge_minor(const Matroid& m, const CyclicFlatLattice& lattice,
                          ElementSet lower, ElementSet upper) {
  const auto edge = lattice.edge_between(lower, upper);
  if (!edge) {
    throw Error(ErrorKind::kInvalidEdge,
                format_set(lower) + " -> " + format_set(upper) +
                    " is not a covering pair of cyclic flats");
  }
  return validated(m, {upper, lower, (upper - lower).size(), edge->delta_rank,
                       Certificate::kEdgeTheorem});
}

std::vector<CoverEdge> hasse_violations(const CyclicFlatLattice& lattice,
                                        int n_minor, int k_minor) {
  std::vector<CoverEdge> out;
  for (const auto& e : lattice.edges()) {
    if (e.delta_rank >= k_minor && e.delta_nullity >= n_minor - k_minor) {
      out.push_back(e);
    }
  }
  return out;
}

UniformWitness shrink_witness(const Matroid& m, const UniformWitness& w,
                              int n_minor, int k_minor) {
  if (!uniform_has_uniform_minor(w.n, w.k, n_minor, k_minor)) {
    throw Error(ErrorKind::kInvalidArgument,
                "U(" + std::to_string(n_minor) + "," +
                    std::to_string(k_minor) + ") is not a minor of U(" +
                    std::to_string(w.n) + "," + std::to_string(w.k) + ")");
  }
  const std::vector<int> free = (w.restrict_to - w.contract_by).elements();
  const int contract_count = w.k - k_minor;
  const int delete_count = (w.n - w.k) - (n_minor - k_minor);
  UniformWitness out = w;
  for (int i = 0; i < contract_count; ++i) {
    out.contract_by = out.contract_by.with(free[i]);
  }
  for (int i = 0; i < delete_count; ++i) {
    out.restrict_to = out.restrict_to.without(free[free.size() - 1 - i]);
  }
  out.n = n_minor;
  out.k = k_minor;
  return validated(m, out);
}

std::optional<UniformWitness> restriction_uniform(
    const Matroid& m, const CyclicFlatLattice& lattice, ElementSet y) {
  m.check_subset(y);
  const int k = m.rank(y);
  if (k == y.size()) {
    return validated(m, {y, {}, k, k, Certificate::kRestrictionTheorem});
  }
  // Inside M|cl(y) the set y has full rank; its ground set must be a cyclic
  // flat there.
  const ElementSet hull = m.closure(y);
  if (!lattice.contains(hull)) return std::nullopt;
  const Reduced n = reduce(m, lattice, {}, hull);
  if (!n.matroid.is_cyclic_set(y)) return std::nullopt;
  for (const auto& z : n.flats) {
    if (z.rank < k && !n.matroid.is_independent(z.set & y)) {
      return std::nullopt;
    }
  }
  return validated(m, {y, {}, y.size(), k, Certificate::kRestrictionTheorem});
}

std::optional<UniformWitness> contraction_uniform(
    const Matroid& m, const CyclicFlatLattice& lattice, ElementSet x) {
  m.check_subset(x);
  const ElementSet ground = m.ground();
  const int n = (ground - x).size();
  const int k = m.rank() - m.rank(x);
  if (k == 0) {
    return validated(m, {ground, x, n, 0, Certificate::kContractionTheorem});
  }
  // Inside M/cyc(x) the rest of x is independent; the empty set must be a
  // cyclic flat there.
  const ElementSet cyclic_part = m.cyc(x);
  if (!lattice.contains(cyclic_part)) return std::nullopt;
  const Reduced reduced = reduce(m, lattice, cyclic_part, ground);
  const Matroid& nm = reduced.matroid;
  const ElementSet rest = x - cyclic_part;
  if (!nm.is_flat(rest)) return std::nullopt;
  for (const auto& z : reduced.flats) {
    if (z.rank > 0 && nm.closure(rest | z.set) != nm.ground()) {
      return std::nullopt;
    }
  }
  return validated(m, {ground, x, n, k, Certificate::kContractionTheorem});
}

std::optional<UniformWitness> combined_uniform(
    const Matroid& m, const CyclicFlatLattice& lattice, ElementSet x,
    ElementSet y) {
  m.check_subset(y);
  if (!x.subset_of(y)) {
    throw Error(ErrorKind::kInvalidMinorSpec,
                "contraction set " + format_set(x) +
                    " is not inside the restriction " + format_set(y));
  }
  const int n = (y - x).size();
  const int k = m.rank(y) - m.rank(x);
  const UniformWitness hit{y, x, n, k, Certificate::kCombinedTheorem};
  if (x == y) return validated(m, hit);

  // Re-root at the interval [cyc(x), cl(y)].
  const ElementSet cyclic_part = m.cyc(x);
  const ElementSet hull = m.closure(y);
  const Reduced reduced = reduce(m, lattice, cyclic_part, hull);
  const Matroid& nm = reduced.matroid;
  const ElementSet ry = y - cyclic_part;
  const ElementSet rx = x - cyclic_part;
  const int full = nm.rank();

  if (nm.rank(ry) == ry.size()) return validated(m, hit);  // y a basis
  if (nm.rank(rx) == full) return validated(m, hit);       // x spanning

  if ((nm.closure(rx) & ry) != rx) return std::nullopt;
  if (!(ry - rx).subset_of(nm.cyc(ry))) return std::nullopt;
  for (const auto& z : reduced.flats) {
    const ElementSet meet_y = z.set & ry;
    if (nm.is_independent(meet_y)) continue;
    if (nm.closure(rx | nm.cyc(meet_y)) != nm.ground()) return std::nullopt;
  }
  return validated(m, hit);
}

BinaryVerdict tutte_binary_test(const Matroid& m,
                                const CyclicFlatLattice& lattice,
                                const Limits& limits) {
  if (auto w = find_uniform_minor(m, lattice, 4, 2, limits)) {
    return {false, w};
  }
  return {true, std::nullopt};
}

std::optional<UniformWitness> find_uniform_minor(
    const Matroid& m, const CyclicFlatLattice& lattice, int n_minor,
    int k_minor, const Limits& limits) {
  const auto edges = hasse_violations(lattice, n_minor, k_minor);
  if (!edges.empty()) {
    const auto& e = edges.front();
    const UniformWitness w = edge_minor(m, lattice, lattice.node(e.lower).set,
                                        lattice.node(e.upper).set);
    return shrink_witness(m, w, n_minor, k_minor);
  }
  return uniform_minor_bruteforce(m, n_minor, k_minor, limits);
}

std::vector<int> forbidden_uniform_ranks(int q) {
  std::set<int> ks{2, q};
  for (int k = 4; k <= q - 2; ++k) ks.insert(k);
  if (q % 2 == 1) {
    ks.insert(3);
    ks.insert(q - 1);
  }
  std::vector<int> out;
  for (int k : ks) {
    if (k >= 0 && k <= q + 2) out.push_back(k);
  }
  return out;
}

FieldCheck field_necessary_check(const Matroid& m,
                                 const CyclicFlatLattice& lattice, int q,
                                 const Limits& limits) {
  if (!is_prime(q)) {
    throw Error(ErrorKind::kInvalidArgument,
                "field size must be prime, got " + std::to_string(q));
  }
  FieldCheck out;
  out.q = q;
  if (q + 2 > m.size()) {
    out.note = "no U(" + std::to_string(q + 2) +
               ",k) minor fits in a ground set of " + std::to_string(m.size()) +
               " elements; " + kFieldCheckCaveat;
    return out;
  }
  for (int k : forbidden_uniform_ranks(q)) {
    out.searched.emplace_back(q + 2, k);
    if (auto w = find_uniform_minor(m, lattice, q + 2, k, limits)) {
      out.witnesses.push_back(*w);
    }
  }
  out.note = kFieldCheckCaveat;
  return out;
}

}  // namespace matcyc
