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

#include "matcyc/report.hpp"

#include <sstream>

namespace matcyc {
namespace {

const char* edge_kind_name(EdgeKind kind) {
  switch (kind) {
    case EdgeKind::kRank:
      return "rank";
    case EdgeKind::kNullity:
      return "nullity";
    case EdgeKind::kElementary:
      return "elementary";
    case EdgeKind::kMixed:
      return "mixed";
  }
  return "?";
}

std::string triple(int n, int k, int d) {
  return "(" + std::to_string(n) + "," + std::to_string(k) + "," +
         std::to_string(d) + ")";
}

}  // namespace

nlohmann::json set_json(ElementSet s) {
  nlohmann::json out = nlohmann::json::array();
  for (int label : s.labels()) out.push_back(label);
  return out;
}

nlohmann::json witness_json(const UniformWitness& w) {
  return {{"n", w.n},
          {"k", w.k},
          {"restrict", set_json(w.restrict_to)},
          {"contract", set_json(w.contract_by)},
          {"via", to_string(w.via)}};
}

nlohmann::json lattice_json(const CyclicFlatLattice& lattice) {
  nlohmann::json nodes = nlohmann::json::array();
  for (const auto& z : lattice.nodes()) {
    nodes.push_back(
        {{"set", set_json(z.set)}, {"rank", z.rank}, {"nullity", z.nullity}});
  }
  nlohmann::json edges = nlohmann::json::array();
  for (const auto& [edge, label] : label_edges(lattice)) {
    edges.push_back({{"lower", set_json(lattice.node(edge.lower).set)},
                     {"upper", set_json(lattice.node(edge.upper).set)},
                     {"kind", edge_kind_name(label.kind)},
                     {"delta_rank", label.delta_rank},
                     {"delta_nullity", label.delta_nullity}});
  }
  return {{"nodes", nodes}, {"edges", edges}};
}

std::string lattice_text(const CyclicFlatLattice& lattice) {
  std::ostringstream out;
  out << "nodes " << lattice.size() << "\n";
  for (const auto& z : lattice.nodes()) {
    out << format_set(z.set) << " rank=" << z.rank << " nullity=" << z.nullity
        << "\n";
  }
  const auto labelled = label_edges(lattice);
  out << "edges " << labelled.size() << "\n";
  for (const auto& [edge, label] : labelled) {
    out << format_set(lattice.node(edge.lower).set) << " < "
        << format_set(lattice.node(edge.upper).set) << " "
        << edge_kind_name(label.kind);
    if (label.kind == EdgeKind::kRank) out << " ρ=" << label.delta_rank;
    if (label.kind == EdgeKind::kNullity) out << " η=" << label.delta_nullity;
    if (label.kind == EdgeKind::kMixed) {
      out << " ρ=" << label.delta_rank << ",η=" << label.delta_nullity;
    }
    out << "\n";
  }
  return out.str();
}

std::string lrc_text(const LrcReport& report, bool with_locality_line) {
  std::ostringstream out;
  out << "(n,k,d) = " << triple(report.n, report.k, report.d) << "\n";
  for (const auto& loc : report.per_element) {
    out << loc.element + 1 << ": r=" << loc.r
        << " R=" << format_set(loc.repair_set) << "\n";
  }
  if (!report.failing.empty()) {
    ElementSet failing;
    for (int e : report.failing) failing = failing.with(e);
    out << "failing: " << format_set(failing) << "\n";
  }
  for (const auto& note : report.notes) out << "note: " << note << "\n";
  if (with_locality_line) {
    out << "(n,k,d,r,delta) = (" << report.n << "," << report.k << ","
        << report.d << "," << report.r << "," << report.delta << ")\n";
  }
  return out.str();
}

nlohmann::json lrc_json(const LrcReport& report) {
  nlohmann::json elements = nlohmann::json::array();
  for (const auto& loc : report.per_element) {
    elements.push_back({{"element", loc.element + 1},
                        {"r", loc.r},
                        {"R", set_json(loc.repair_set)}});
  }
  nlohmann::json failing = nlohmann::json::array();
  for (int e : report.failing) failing.push_back(e + 1);
  return {{"n", report.n},
          {"k", report.k},
          {"d", report.d},
          {"r", report.r},
          {"delta", report.delta},
          {"r_required", report.r_required},
          {"nondegenerate", report.nondegenerate},
          {"passes", report.passes},
          {"elements", elements},
          {"failing", failing},
          {"notes", report.notes}};
}

std::string binary_structure_text(const BinaryStructureResult& result) {
  std::ostringstream out;
  out << "d = " << result.d << "\n";
  if (!result.precondition_met) out << "note: " << result.precondition_note << "\n";
  for (const auto& c : result.conditions) {
    out << "condition " << c.index << ": " << to_string(c.verdict) << " ("
        << c.detail << ")\n";
  }
  return out.str();
}

nlohmann::json binary_structure_json(const BinaryStructureResult& result) {
  nlohmann::json conditions = nlohmann::json::array();
  for (const auto& c : result.conditions) {
    conditions.push_back({{"index", c.index},
                          {"verdict", to_string(c.verdict)},
                          {"detail", c.detail}});
  }
  return {{"d", result.d},
          {"precondition_met", result.precondition_met},
          {"precondition_note", result.precondition_note},
          {"conditions", conditions},
          {"all_pass", result.all_pass()}};
}

}  // namespace matcyc
