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

#include "matcyc/lrc.hpp"

#include <algorithm>
#include <climits>
#include <stdexcept>
#include <string>

#include "matcyc/uniform_minor.hpp"

namespace matcyc {
namespace {

// eta(top) + 1 - max eta over the other sets; `flats` are the cyclic flats of
// a non-degenerate matroid whose ground set is `top`.
int distance_from_flats(const std::vector<RankedSet>& flats, ElementSet top) {
  int top_nullity = -1;
  int max_below = 0;
  for (const auto& z : flats) {
    const int nullity = z.set.size() - z.rank;
    if (z.set == top) {
      top_nullity = nullity;
    } else {
      max_below = std::max(max_below, nullity);
    }
  }
  if (top_nullity < 0) {
    throw Error(ErrorKind::kDegenerateCode,
                format_set(top) + " is not a cyclic flat of its restriction");
  }
  return top_nullity + 1 - max_below;
}

std::vector<RankedSet> as_ranked(const CyclicFlatLattice& lattice) {
  std::vector<RankedSet> out;
  for (const auto& node : lattice.nodes()) out.push_back({node.set, node.rank});
  return out;
}

void check_delta(int delta) {
  if (delta < 2) {
    throw Error(ErrorKind::kInvalidArgument,
                "delta must be at least 2, got " + std::to_string(delta));
  }
}

// d_R >= delta from the rank function alone: no delta - 1 deletions drop the
// rank of R.
bool distance_at_least(const Matroid& m, ElementSet r, int delta) {
  const int full = m.rank(r);
  if (full == 0) return false;
  return for_each_subset_of_size(r, delta - 1, [&](ElementSet t) {
    return m.rank(r - t) == full;
  });
}

Locality brute_force_locality(const Matroid& m, int element, int delta) {
  if (m.size() > kMaxBruteForceLocalityGround) {
    throw Error(ErrorKind::kResourceLimit,
                "brute-force locality search supports at most " +
                    std::to_string(kMaxBruteForceLocalityGround) +
                    " elements");
  }
  const ElementSet others = m.ground().without(element);
  for (int size = delta; size <= m.size(); ++size) {
    std::optional<ElementSet> found;
    for_each_subset_of_size(others, size - 1, [&](ElementSet rest) {
      const ElementSet r = rest.with(element);
      if (!distance_at_least(m, r, delta)) return true;
      found = r;
      return false;
    });
    if (found) return {element, size - delta + 1, *found};
  }
  throw Error(ErrorKind::kNoLocality,
              "element " + std::to_string(element + 1) +
                  " has no repair set with distance >= " +
                  std::to_string(delta));
}

Locality cyclic_flat_locality(const Matroid& m,
                              const CyclicFlatLattice& lattice, int element,
                              int delta) {
  struct Candidate {
    ElementSet set;
    int rank;
  };
  // Any valid R spans the cyclic flat cl(R), which contains the element and
  // has d >= d_R; so candidates are spanning subsets of such flats.
  std::vector<Candidate> candidates;
  int smallest = INT_MAX;
  int achievable = INT_MAX;
  for (const auto& z : lattice.nodes()) {
    if (!z.set.contains(element)) continue;
    const int d = punctured_params(m, lattice, z.set).distance;
    if (d < delta) continue;
    candidates.push_back({z.set, z.rank});
    smallest = std::min(smallest, z.rank + delta - 1);
    achievable = std::min(achievable, z.set.size() - d + 1 + delta - 1);
  }
  if (candidates.empty()) {
    throw Error(ErrorKind::kNoLocality,
                "element " + std::to_string(element + 1) +
                    " has no repair set with distance >= " +
                    std::to_string(delta));
  }
  for (int size = smallest; size <= achievable; ++size) {
    std::optional<ElementSet> best;
    for (const auto& c : candidates) {
      if (c.rank + delta - 1 > size || c.set.size() < size) continue;
      for_each_subset_of_size(
          c.set.without(element), size - 1, [&](ElementSet rest) {
            const ElementSet r = rest.with(element);
            if (best && !lex_less(r, *best)) return false;
            if (!m.is_cyclic_set(r)) return true;
            if (punctured_params(m, lattice, r).distance < delta) return true;
            best = r;
            return false;
          });
    }
    if (best) return {element, size - delta + 1, *best};
  }
  throw std::logic_error("cyclic-flat locality search missed a repair set");
}

struct Assessment {
  std::vector<Locality> found;
  std::vector<int> missing;
  std::vector<std::string> notes;
};

Assessment assess(const Matroid& m, const CyclicFlatLattice& lattice,
                  int delta) {
  Assessment out;
  for (int e : m.ground()) {
    try {
      out.found.push_back(locality_of_element(m, lattice, e, delta));
    } catch (const Error& err) {
      if (err.kind() != ErrorKind::kNoLocality &&
          err.kind() != ErrorKind::kDegenerateCode) {
        throw;
      }
      out.missing.push_back(e);
      out.notes.push_back(err.what());
    }
  }
  return out;
}

LrcReport build_report(const Matroid& m, const CyclicFlatLattice& lattice,
                       int r_required, int delta) {
  LrcReport report;
  report.n = m.size();
  report.k = m.rank();
  report.delta = delta;
  report.r_required = r_required;
  report.nondegenerate = !m.ground().empty() && is_nondegenerate(m, m.ground());
  if (report.k > 0) {
    report.d = code_distance(m, lattice);
  } else {
    report.notes.push_back("zero code: distance undefined");
  }
  Assessment a = assess(m, lattice, delta);
  report.per_element = a.found;
  report.notes.insert(report.notes.end(), a.notes.begin(), a.notes.end());
  for (const auto& loc : a.found) report.r = std::max(report.r, loc.r);
  report.failing = a.missing;
  for (const auto& loc : a.found) {
    if (loc.r > r_required) report.failing.push_back(loc.element);
  }
  std::sort(report.failing.begin(), report.failing.end());
  report.passes = report.failing.empty() && report.nondegenerate;
  if (!report.nondegenerate) {
    report.notes.push_back("code is degenerate (zero column or d < 2)");
  }
  if (report.k > 0 && r_required >= report.k) {
    report.notes.push_back("r >= k: locality is not below the dimension");
  }
  return report;
}

}  // namespace

bool is_nondegenerate(const Matroid& m, ElementSet x) {
  m.check_subset(x);
  if (x.empty()) {
    throw Error(ErrorKind::kInvalidSubset,
                "non-degeneracy needs a nonempty coordinate set");
  }
  return m.cyc(x) == x && (m.loops() & x).empty();
}

int global_distance(const Matroid& m, const CyclicFlatLattice& lattice) {
  if (!lattice.bottom_node().set.empty() ||
      lattice.top_node().set != m.ground() || m.ground().empty()) {
    throw Error(ErrorKind::kDegenerateCode,
                "distance formula needs bottom {} and top E, got bottom " +
                    format_set(lattice.bottom_node().set) + " and top " +
                    format_set(lattice.top_node().set));
  }
  return distance_from_flats(as_ranked(lattice), m.ground());
}

int code_distance(const Matroid& m, const CyclicFlatLattice& lattice) {
  if (m.rank() == 0) {
    throw Error(ErrorKind::kDegenerateCode, "zero code has no distance");
  }
  if (!m.coloops().empty()) return 1;
  const ElementSet loops = m.loops();
  if (loops.empty()) return global_distance(m, lattice);
  const ElementSet rest = m.ground() - loops;
  return distance_from_flats(
      minor_cyclic_flats(m, lattice, {rest, {}}, MinorFormula::kRestriction),
      rest);
}

PunctureParams punctured_params(const Matroid& m,
                                const CyclicFlatLattice& lattice,
                                ElementSet x) {
  if (!is_nondegenerate(m, x)) {
    throw Error(ErrorKind::kDegenerateCode,
                "punctured code on " + format_set(x) + " is degenerate");
  }
  const auto flats =
      minor_cyclic_flats(m, lattice, {x, {}}, MinorFormula::kRestriction);
  return {m.rank(x), distance_from_flats(flats, x)};
}

int s_value(const Matroid& m, const CyclicFlatLattice& lattice, ElementSet x) {
  if (x.empty() || !lattice.contains(x)) {
    throw Error(ErrorKind::kInvalidArgument,
                format_set(x) + " is not a nonempty cyclic flat");
  }
  const int s = x.size() - punctured_params(m, lattice, x).distance + 1;
  int max_below = 0;
  for (const auto& z : lattice.nodes()) {
    if (z.set.proper_subset_of(x)) max_below = std::max(max_below, z.nullity);
  }
  if (s != m.rank(x) + max_below) {
    throw std::logic_error("s-value formulas disagree on " + format_set(x));
  }
  return s;
}

Locality locality_of_element(const Matroid& m, const CyclicFlatLattice& lattice,
                             int element, int delta, LocalitySearch search) {
  check_delta(delta);
  m.check_subset(ElementSet::single(element));
  const ElementSet loops = m.loops();
  if (loops.contains(element)) {
    throw Error(ErrorKind::kDegenerateCode,
                "element " + std::to_string(element + 1) +
                    " is a zero coordinate");
  }
  if (!loops.empty()) {
    // Repair sets never use zero coordinates; work in the loopless part.
    const Matroid rest = restrict(m, m.ground() - loops);
    std::vector<ElementSet> sets;
    for (const auto& z : minor_cyclic_flats(m, lattice, {rest.ground(), {}},
                                            MinorFormula::kRestriction)) {
      sets.push_back(z.set);
    }
    return locality_of_element(rest, make_lattice(rest, std::move(sets)),
                               element, delta, search);
  }
  if (search == LocalitySearch::kBruteForce) {
    return brute_force_locality(m, element, delta);
  }
  return cyclic_flat_locality(m, lattice, element, delta);
}

LrcReport verify_lrc(const Matroid& m, const CyclicFlatLattice& lattice, int r,
                     int delta) {
  check_delta(delta);
  if (r < 1) {
    throw Error(ErrorKind::kInvalidArgument,
                "r must be at least 1, got " + std::to_string(r));
  }
  return build_report(m, lattice, r, delta);
}

LrcReport discover_lrc(const Matroid& m, const CyclicFlatLattice& lattice,
                       int delta) {
  check_delta(delta);
  LrcReport report = build_report(m, lattice, INT_MAX, delta);
  report.r_required = report.r;
  report.notes.erase(
      std::remove(report.notes.begin(), report.notes.end(),
                  "r >= k: locality is not below the dimension"),
      report.notes.end());
  if (report.k > 0 && report.r >= report.k) {
    report.notes.push_back("r >= k: locality is not below the dimension");
  }
  return report;
}

std::vector<ParamPoint> locality_profile(const Matroid& m,
                                         const CyclicFlatLattice& lattice) {
  std::vector<ParamPoint> out;
  const int d = code_distance(m, lattice);
  for (int delta = 2; delta <= d; ++delta) {
    const LrcReport report = discover_lrc(m, lattice, delta);
    if (!report.passes) break;
    out.push_back({delta, report.r});
  }
  return out;
}

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::kPass:
      return "pass";
    case Verdict::kFail:
      return "fail";
    case Verdict::kNotApplicable:
      return "n/a";
  }
  return "?";
}

bool BinaryStructureResult::all_pass() const {
  return precondition_met &&
         std::none_of(conditions.begin(), conditions.end(),
                      [](const ConditionResult& c) {
                        return c.verdict == Verdict::kFail;
                      });
}

BinaryStructureResult binary_structure_check(const Matroid& m,
                                             const CyclicFlatLattice& lattice,
                                             int r, int delta,
                                             const Limits& limits) {
  check_delta(delta);
  const bool binary_matrix = m.matrix() != nullptr && m.matrix()->q() == 2;
  if (!binary_matrix && !tutte_binary_test(m, lattice, limits).binary) {
    throw Error(ErrorKind::kInapplicableTheorem,
                "binary structure conditions need a binary matroid");
  }
  BinaryStructureResult out;
  out.d = code_distance(m, lattice);
  if (out.d <= 2) {
    out.precondition_note = "theorem precondition d>2 not met (d=" +
                            std::to_string(out.d) + ")";
    for (int i = 1; i <= 4; ++i) {
      out.conditions.push_back({i, Verdict::kNotApplicable,
                                "precondition d>2 not met"});
    }
    return out;
  }
  out.precondition_met = true;
  const ElementSet ground = m.ground();

  ConditionResult c1{1, Verdict::kPass, "{} and E are cyclic flats"};
  if (!lattice.contains(ElementSet())) {
    c1 = {1, Verdict::kFail, "{} is not a cyclic flat (bottom is " +
                                 format_set(lattice.bottom_node().set) + ")"};
  } else if (!lattice.contains(ground)) {
    c1 = {1, Verdict::kFail, "E is not a cyclic flat (top is " +
                                 format_set(lattice.top_node().set) + ")"};
  }
  out.conditions.push_back(c1);

  ConditionResult c2{2, Verdict::kPass, ""};
  const int top = lattice.index_of(ground);
  if (top < 0) {
    c2 = {2, Verdict::kFail, "E is not a cyclic flat"};
  } else {
    int smallest = INT_MAX;
    for (int lower : lattice.lower_covers(top)) {
      const auto& z = lattice.node(lower);
      const EdgeLabel label = classify_edge(lattice.top_node().rank - z.rank,
                                            lattice.top_node().nullity -
                                                z.nullity);
      if (label.kind != EdgeKind::kNullity || label.value() < out.d - 1) {
        c2 = {2, Verdict::kFail,
              format_set(z.set) + " -> E has delta rank " +
                  std::to_string(label.delta_rank) + ", delta nullity " +
                  std::to_string(label.delta_nullity) + "; need a nullity edge >= " +
                  std::to_string(out.d - 1)};
        break;
      }
      smallest = std::min(smallest, label.value());
    }
    if (c2.verdict == Verdict::kPass) {
      c2.detail = "top edges are nullity edges, smallest label " +
                  std::to_string(smallest) + " >= d-1 = " +
                  std::to_string(out.d - 1);
    }
  }
  out.conditions.push_back(c2);

  ConditionResult c3{3, Verdict::kNotApplicable, "delta > 2"};
  if (delta == 2) {
    c3 = {3, Verdict::kPass,
          "every element lies in a cyclic flat of rank <= " +
              std::to_string(r)};
    for (int e : ground) {
      const bool ok = std::any_of(
          lattice.nodes().begin(), lattice.nodes().end(),
          [&](const LatticeNode& z) {
            return z.set.contains(e) && z.rank <= r;
          });
      if (!ok) {
        c3 = {3, Verdict::kFail,
              "element " + std::to_string(e + 1) +
                  " lies in no cyclic flat of rank <= " + std::to_string(r)};
        break;
      }
    }
  }
  out.conditions.push_back(c3);

  ConditionResult c4{4, Verdict::kNotApplicable, "delta = 2"};
  if (delta > 2) {
    c4 = {4, Verdict::kPass,
          "every element lies in a qualifying cyclic flat (rank bound r-2 as "
          "stated in source)"};
    for (int e : ground) {
      bool ok = false;
      for (int x = 0; x < lattice.size() && !ok; ++x) {
        const auto& node = lattice.node(x);
        if (!node.set.contains(e)) continue;
        ok = true;
        for (int lower : lattice.lower_covers(x)) {
          const auto& y = lattice.node(lower);
          const EdgeLabel label =
              classify_edge(node.rank - y.rank, node.nullity - y.nullity);
          if (label.kind != EdgeKind::kNullity ||
              label.value() < delta - 1 || y.rank > r - 2) {
            ok = false;
            break;
          }
        }
      }
      if (!ok) {
        c4 = {4, Verdict::kFail,
              "element " + std::to_string(e + 1) +
                  " lies in no cyclic flat whose lower covers are nullity "
                  "edges >= " +
                  std::to_string(delta - 1) + " from flats of rank <= " +
                  std::to_string(r - 2) + " (as stated in source)"};
        break;
      }
    }
  }
  out.conditions.push_back(c4);
  return out;
}

bool mds_check(const Matroid& m, const Limits& limits) {
  const auto params = uniform_test(m);
  const bool mds =
      params && params->second > 0 && params->second < params->first;
  if (mds && m.matrix() != nullptr) {
    const int d =
        min_distance_bruteforce(*m.matrix(), m.ground(), limits.max_codewords);
    if (d != params->first - params->second + 1) {
      throw std::logic_error("uniform linear matroid without MDS distance");
    }
  }
  return mds;
}

}  // namespace matcyc
