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

#include "matcyc/io.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

namespace matcyc {
namespace {

struct Line {
  int number;
  std::string text;
};

std::string trim(const std::string& s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string::npos) return "";
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

std::vector<Line> content_lines(const std::string& text) {
  std::vector<Line> out;
  std::istringstream in(text);
  std::string raw;
  int number = 0;
  while (std::getline(in, raw)) {
    ++number;
    const auto comment = raw.find('%');
    if (comment != std::string::npos) raw.resize(comment);
    raw = trim(raw);
    if (!raw.empty()) out.push_back({number, raw});
  }
  return out;
}

[[noreturn]] void parse_error(const Line& line, const std::string& what) {
  throw Error(ErrorKind::kParse, "line " + std::to_string(line.number) +
                                     ": " + what + " in '" + line.text + "'");
}

std::vector<std::string> words(const std::string& s) {
  std::istringstream in(s);
  return {std::istream_iterator<std::string>(in),
          std::istream_iterator<std::string>()};
}

int to_int(const Line& line, const std::string& word) {
  std::size_t used = 0;
  int value = 0;
  try {
    value = std::stoi(word, &used);
  } catch (const std::exception&) {
    parse_error(line, "expected an integer, got '" + word + "'");
  }
  if (used != word.size()) {
    parse_error(line, "expected an integer, got '" + word + "'");
  }
  return value;
}

ElementSet to_set(const Line& line, const std::string& text) {
  try {
    return parse_set(text);
  } catch (const Error& e) {
    parse_error(line, e.what());
  }
}

// `n <size>` header shared by rank tables and bases lists.
int size_header(const std::vector<Line>& lines) {
  const auto w = words(lines.front().text);
  if (w.size() != 2 || w[0] != "n") {
    parse_error(lines.front(), "expected 'n <size>'");
  }
  const int n = to_int(lines.front(), w[1]);
  if (n < 0 || n > ElementSet::kMaxElements) {
    parse_error(lines.front(), "ground-set size out of range");
  }
  return n;
}

void check_inside(const Line& line, ElementSet s, int n) {
  if (!s.subset_of(ElementSet::full(n))) {
    parse_error(line, "label outside 1.." + std::to_string(n));
  }
}

InputSpec parse_rank_table(const std::vector<Line>& lines) {
  InputSpec spec;
  spec.kind = InputKind::kRankTable;
  spec.n = size_header(lines);
  if (spec.n > 16) parse_error(lines.front(), "rank tables allow n <= 16");
  spec.rank_table.assign(std::size_t{1} << spec.n, -1);
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const Line& line = lines[i];
    const auto arrow = line.text.find("->");
    if (arrow == std::string::npos) parse_error(line, "expected 'subset -> rank'");
    const ElementSet s = to_set(line, trim(line.text.substr(0, arrow)));
    check_inside(line, s, spec.n);
    const auto rhs = words(line.text.substr(arrow + 2));
    if (rhs.size() != 1) parse_error(line, "expected one rank");
    const int r = to_int(line, rhs[0]);
    int& slot = spec.rank_table[s.bits()];
    if (slot >= 0 && slot != r) parse_error(line, "conflicting rank");
    slot = r;
  }
  for (std::size_t bits = 0; bits < spec.rank_table.size(); ++bits) {
    if (spec.rank_table[bits] < 0) {
      throw Error(ErrorKind::kParse, "rank table misses subset " +
                                         format_set(ElementSet(bits)));
    }
  }
  return spec;
}

InputSpec parse_bases(const std::vector<Line>& lines) {
  InputSpec spec;
  spec.kind = InputKind::kBases;
  spec.n = size_header(lines);
  std::size_t i = 1;
  if (i < lines.size() && lines[i].text == "bases") ++i;
  for (; i < lines.size(); ++i) {
    const ElementSet b = to_set(lines[i], lines[i].text);
    check_inside(lines[i], b, spec.n);
    spec.bases.push_back(b);
  }
  std::sort(spec.bases.begin(), spec.bases.end(), lex_less);
  spec.bases.erase(std::unique(spec.bases.begin(), spec.bases.end()),
                   spec.bases.end());
  if (spec.bases.empty()) {
    throw Error(ErrorKind::kParse, "bases list is empty");
  }
  return spec;
}

InputSpec parse_uniform(const std::vector<Line>& lines) {
  const auto w = words(lines.front().text);
  if (w.size() != 3 || lines.size() != 1) {
    parse_error(lines.front(), "expected 'uniform <n> <k>'");
  }
  InputSpec spec;
  spec.kind = InputKind::kUniform;
  spec.n = to_int(lines.front(), w[1]);
  spec.k = to_int(lines.front(), w[2]);
  if (spec.n < 0 || spec.n > ElementSet::kMaxElements || spec.k < 0 ||
      spec.k > spec.n) {
    parse_error(lines.front(), "need 0 <= k <= n <= 64");
  }
  return spec;
}

FieldMatrix parse_matrix_lines(const std::vector<Line>& lines) {
  if (lines.empty()) throw Error(ErrorKind::kParse, "empty matrix");
  int q = 2;
  std::size_t i = 0;
  const auto head = words(lines.front().text);
  if (head.front() == "q") {
    if (head.size() != 2) parse_error(lines.front(), "expected 'q <prime>'");
    q = to_int(lines.front(), head[1]);
    if (!is_prime(q) || q > FieldMatrix::kMaxPrime) {
      parse_error(lines.front(), "q must be a prime <= 251");
    }
    ++i;
  }
  std::vector<std::vector<int>> rows;
  for (; i < lines.size(); ++i) {
    std::vector<int> row;
    for (const auto& w : words(lines[i].text)) {
      const int v = to_int(lines[i], w);
      if (v < 0 || v >= q) parse_error(lines[i], "entry outside 0..q-1");
      row.push_back(v);
    }
    if (!rows.empty() && row.size() != rows.front().size()) {
      parse_error(lines[i], "ragged row");
    }
    rows.push_back(std::move(row));
  }
  if (rows.empty()) throw Error(ErrorKind::kParse, "matrix has no rows");
  if (rows.front().size() > static_cast<std::size_t>(ElementSet::kMaxElements)) {
    throw Error(ErrorKind::kParse, "matrix has more than 64 columns");
  }
  return FieldMatrix::from_rows(q, rows);
}

}  // namespace

const char* to_string(InputKind kind) {
  switch (kind) {
    case InputKind::kMatrix:
      return "matrix";
    case InputKind::kUniform:
      return "uniform";
    case InputKind::kRankTable:
      return "ranktable";
    case InputKind::kBases:
      return "bases";
  }
  return "?";
}

FieldMatrix parse_matrix(const std::string& text) {
  return parse_matrix_lines(content_lines(text));
}

std::string format_matrix(const FieldMatrix& m) {
  std::ostringstream out;
  out << "q " << m.q() << "\n";
  for (int r = 0; r < m.rows(); ++r) {
    for (int c = 0; c < m.cols(); ++c) out << (c ? " " : "") << m.at(r, c);
    out << "\n";
  }
  return out.str();
}

InputSpec parse_input(const std::string& text, const std::string& source) {
  const auto lines = content_lines(text);
  if (lines.empty()) throw Error(ErrorKind::kParse, "empty input");
  const std::string first = words(lines.front().text).front();
  InputSpec spec;
  if (first == "uniform") {
    spec = parse_uniform(lines);
  } else if (first == "n") {
    const bool arrows =
        std::any_of(lines.begin() + 1, lines.end(), [](const Line& l) {
          return l.text.find("->") != std::string::npos;
        });
    spec = arrows ? parse_rank_table(lines) : parse_bases(lines);
  } else if (first == "q" || std::isdigit(static_cast<unsigned char>(first[0]))) {
    spec.kind = InputKind::kMatrix;
    spec.matrix = parse_matrix_lines(lines);
    spec.n = spec.matrix->cols();
  } else {
    parse_error(lines.front(), "unrecognised input format");
  }
  spec.source = source;
  return spec;
}

std::string format_input(const InputSpec& spec) {
  std::ostringstream out;
  switch (spec.kind) {
    case InputKind::kMatrix:
      return format_matrix(*spec.matrix);
    case InputKind::kUniform:
      out << "uniform " << spec.n << " " << spec.k << "\n";
      break;
    case InputKind::kRankTable: {
      out << "n " << spec.n << "\n";
      std::vector<ElementSet> subsets;
      for_each_subset(ElementSet::full(spec.n),
                      [&](ElementSet s) { subsets.push_back(s); });
      std::sort(subsets.begin(), subsets.end(), size_lex_less);
      for (ElementSet s : subsets) {
        out << (s.empty() ? "-" : format_set(s).substr(1, format_set(s).size() - 2))
            << " -> " << spec.rank_table[s.bits()] << "\n";
      }
      break;
    }
    case InputKind::kBases:
      out << "n " << spec.n << "\nbases\n";
      for (ElementSet b : spec.bases) {
        const std::string s = format_set(b);
        out << (b.empty() ? "{}" : s.substr(1, s.size() - 2)) << "\n";
      }
      break;
  }
  return out.str();
}

Matroid build_matroid(const InputSpec& spec, const Limits& limits) {
  const bool binary = spec.kind == InputKind::kMatrix && spec.matrix->q() == 2;
  const int cap = binary ? limits.max_ground_binary : limits.max_ground;
  if (spec.n > cap) {
    throw Error(ErrorKind::kResourceLimit,
                "ground set of " + std::to_string(spec.n) +
                    " elements exceeds the limit of " + std::to_string(cap));
  }
  switch (spec.kind) {
    case InputKind::kMatrix:
      return Matroid::linear(*spec.matrix);
    case InputKind::kUniform:
      return Matroid::uniform(spec.n, spec.k);
    case InputKind::kRankTable:
      return Matroid::from_rank_table(spec.n, spec.rank_table);
    case InputKind::kBases:
      return Matroid::from_bases(spec.n, spec.bases);
  }
  throw std::logic_error("unknown input kind");
}

std::string read_text_file(const std::string& path) {
  if (path == "-") {
    return {std::istreambuf_iterator<char>(std::cin),
            std::istreambuf_iterator<char>()};
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::kParse, "cannot read " + path);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

std::string lattice_dot(const CyclicFlatLattice& lattice) {
  std::ostringstream out;
  out << "digraph cyclic_flats {\n  rankdir=BT;\n";
  for (int i = 0; i < lattice.size(); ++i) {
    const auto& z = lattice.node(i);
    out << "  n" << i << " [label=\"" << format_set(z.set) << "\\nρ=" << z.rank
        << " η=" << z.nullity << "\"];\n";
  }
  for (const auto& [edge, label] : label_edges(lattice)) {
    out << "  n" << edge.lower << " -> n" << edge.upper << " [label=\"";
    switch (label.kind) {
      case EdgeKind::kRank:
        out << "ρ=" << label.delta_rank;
        break;
      case EdgeKind::kNullity:
        out << "η=" << label.delta_nullity;
        break;
      case EdgeKind::kElementary:
        break;
      case EdgeKind::kMixed:
        out << "ρ=" << label.delta_rank << ",η=" << label.delta_nullity;
        break;
    }
    out << "\"];\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace matcyc
