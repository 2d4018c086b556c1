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

#include "matcyc/cli.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <sstream>

#include "CLI11.hpp"
#include "matcyc/io.hpp"
#include "matcyc/lattice.hpp"
#include "matcyc/lrc.hpp"
#include "matcyc/report.hpp"
#include "matcyc/uniform_minor.hpp"

namespace matcyc {
namespace {

using nlohmann::json;

struct Options {
  bool json = false;
  int max_n = 0;
  std::uint64_t max_codewords = 0;
  std::string input;
  std::string set;
  bool cyclic = false;
  std::string dot_path;
  std::string restrict_to;
  std::string contract_by;
  bool test_uniform = false;
  std::string uniform;
  bool brute = false;
  int q = 0;
  int delta = 0;
  int r = 0;
};

int exit_code(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kResourceLimit:
      return 3;
    case ErrorKind::kParse:
    case ErrorKind::kInvalidArgument:
    case ErrorKind::kInvalidSubset:
    case ErrorKind::kInvalidMinorSpec:
    case ErrorKind::kInvalidEdge:
      return 2;
    default:
      return 1;
  }
}

class Session {
 public:
  Session(const Options& opt, std::ostream& out) : opt_(opt), out_(out) {
    if (opt.max_n > 0) {
      limits_.max_ground = opt.max_n;
      limits_.max_ground_binary = opt.max_n;
      limits_.max_brute_ground = opt.max_n;
    }
    if (opt.max_codewords > 0) limits_.max_codewords = opt.max_codewords;
    spec_ = parse_input(read_text_file(opt.input), opt.input);
  }

  const Matroid& matroid() {
    if (!matroid_) matroid_ = build_matroid(spec_, limits_);
    return *matroid_;
  }

  const CyclicFlatLattice& lattice() {
    if (!lattice_) lattice_ = enumerate_cyclic_flats(matroid(), limits_);
    return *lattice_;
  }

  ElementSet set_arg(const std::string& text) {
    const ElementSet s = parse_set(text);
    matroid().check_subset(s);
    return s;
  }

  void emit(const json& j, const std::string& text) {
    if (opt_.json) {
      out_ << j.dump(2) << "\n";
    } else {
      out_ << text;
    }
  }

  const Options& opt() const { return opt_; }
  const Limits& limits() const { return limits_; }
  const InputSpec& spec() const { return spec_; }

 private:
  const Options& opt_;
  std::ostream& out_;
  Limits limits_;
  InputSpec spec_;
  std::optional<Matroid> matroid_;
  std::optional<CyclicFlatLattice> lattice_;
};

int cmd_rank(Session& s) {
  const ElementSet x = s.opt().set.empty() ? s.matroid().ground()
                                           : s.set_arg(s.opt().set);
  const int r = s.matroid().rank(x);
  s.emit({{"set", set_json(x)}, {"rank", r}},
         "rank(" + format_set(x) + ") = " + std::to_string(r) + "\n");
  return 0;
}

int cmd_operator(Session& s, const std::string& name) {
  const ElementSet x = s.set_arg(s.opt().set);
  const ElementSet y =
      name == "cl" ? s.matroid().closure(x) : s.matroid().cyc(x);
  s.emit({{"set", set_json(x)}, {name, set_json(y)}},
         name + "(" + format_set(x) + ") = " + format_set(y) + "\n");
  return 0;
}

int cmd_flats(Session& s) {
  const Matroid& m = s.matroid();
  std::vector<LatticeNode> flats;
  if (s.opt().cyclic) {
    flats = s.lattice().nodes();
  } else {
    if (m.size() > s.limits().max_ground) {
      throw Error(ErrorKind::kResourceLimit,
                  "flat enumeration supports at most " +
                      std::to_string(s.limits().max_ground) + " elements");
    }
    for_each_subset(m.ground(), [&](ElementSet x) {
      if (m.is_flat(x)) flats.push_back({x, m.rank(x), m.nullity(x)});
    });
    std::sort(flats.begin(), flats.end(),
              [](const LatticeNode& a, const LatticeNode& b) {
                if (a.rank != b.rank) return a.rank < b.rank;
                return size_lex_less(a.set, b.set);
              });
  }
  json list = json::array();
  std::ostringstream text;
  for (const auto& f : flats) {
    list.push_back(
        {{"set", set_json(f.set)}, {"rank", f.rank}, {"nullity", f.nullity}});
    text << format_set(f.set) << " rank=" << f.rank << " nullity=" << f.nullity
         << "\n";
  }
  s.emit({{"cyclic", s.opt().cyclic}, {"flats", list}}, text.str());
  return 0;
}

int cmd_lattice(Session& s) {
  const auto& lattice = s.lattice();
  if (!s.opt().dot_path.empty()) {
    std::ofstream dot(s.opt().dot_path, std::ios::binary);
    if (!dot) {
      throw Error(ErrorKind::kInvalidArgument,
                  "cannot write " + s.opt().dot_path);
    }
    dot << lattice_dot(lattice);
  }
  s.emit(lattice_json(lattice), lattice_text(lattice));
  return 0;
}

int cmd_minor(Session& s) {
  const Matroid& m = s.matroid();
  const MinorSpec spec{s.set_arg(s.opt().restrict_to),
                       s.opt().contract_by.empty()
                           ? ElementSet()
                           : s.set_arg(s.opt().contract_by)};
  check_minor_spec(m, spec);
  const auto flats = minor_cyclic_flats(m, s.lattice(), spec);
  const Matroid n = minor(m, spec);
  json j = {{"restrict", set_json(spec.restrict_to)},
            {"contract", set_json(spec.contract_by)},
            {"size", n.size()},
            {"rank", n.rank()}};
  std::ostringstream text;
  text << "minor restrict=" << format_set(spec.restrict_to)
       << " contract=" << format_set(spec.contract_by) << " size=" << n.size()
       << " rank=" << n.rank() << "\n";
  json list = json::array();
  for (const auto& z : flats) {
    list.push_back({{"set", set_json(z.set)}, {"rank", z.rank}});
    text << format_set(z.set) << " rank=" << z.rank << "\n";
  }
  j["cyclic_flats"] = list;
  if (s.opt().test_uniform) {
    std::optional<UniformWitness> w;
    if (spec.contract_by.empty()) {
      w = restriction_uniform(m, s.lattice(), spec.restrict_to);
    } else if (spec.restrict_to == m.ground()) {
      w = contraction_uniform(m, s.lattice(), spec.contract_by);
    } else {
      w = combined_uniform(m, s.lattice(), spec.contract_by, spec.restrict_to);
    }
    j["uniform"] = w ? witness_json(*w) : json(nullptr);
    text << (w ? format_witness(*w) : std::string("not uniform")) << "\n";
  }
  s.emit(j, text.str());
  return 0;
}

int cmd_scan(Session& s) {
  int n = 0;
  int k = 0;
  char comma = 0;
  std::istringstream in(s.opt().uniform);
  if (!(in >> n >> comma >> k) || comma != ',' || !in.eof() || k < 0 ||
      k > n) {
    throw Error(ErrorKind::kInvalidArgument,
                "--uniform expects n,k with 0 <= k <= n");
  }
  const auto w = s.opt().brute
                     ? uniform_minor_bruteforce(s.matroid(), n, k, s.limits())
                     : find_uniform_minor(s.matroid(), s.lattice(), n, k,
                                          s.limits());
  s.emit({{"n", n}, {"k", k}, {"witness", w ? witness_json(*w) : json(nullptr)}},
         (w ? format_witness(*w) : std::string("none")) + "\n");
  return 0;
}

int cmd_binary(Session& s) {
  const auto verdict = tutte_binary_test(s.matroid(), s.lattice(), s.limits());
  std::string text = verdict.binary ? "binary\n" : "not binary\n";
  if (verdict.witness) text += format_witness(*verdict.witness) + "\n";
  s.emit({{"binary", verdict.binary},
          {"witness", verdict.witness ? witness_json(*verdict.witness)
                                      : json(nullptr)}},
         text);
  return 0;
}

int cmd_field(Session& s) {
  const auto check =
      field_necessary_check(s.matroid(), s.lattice(), s.opt().q, s.limits());
  std::ostringstream text;
  json searched = json::array();
  for (const auto& [n, k] : check.searched) {
    searched.push_back({{"n", n}, {"k", k}});
    const auto hit = std::find_if(
        check.witnesses.begin(), check.witnesses.end(),
        [&](const UniformWitness& w) { return w.n == n && w.k == k; });
    text << "U(" << n << "," << k << "): "
         << (hit == check.witnesses.end() ? "none" : format_witness(*hit))
         << "\n";
  }
  json witnesses = json::array();
  for (const auto& w : check.witnesses) witnesses.push_back(witness_json(w));
  text << "note: " << check.note << "\n";
  s.emit({{"q", check.q},
          {"searched", searched},
          {"witnesses", witnesses},
          {"note", check.note}},
         text.str());
  return 0;
}

int cmd_params(Session& s) {
  const Matroid& m = s.matroid();
  if (s.opt().delta == 0) {
    const int d = code_distance(m, s.lattice());
    json profile = json::array();
    std::ostringstream text;
    text << "(n,k,d) = (" << m.size() << "," << m.rank() << "," << d << ")\n";
    for (const auto& p : locality_profile(m, s.lattice())) {
      profile.push_back({{"delta", p.delta}, {"r", p.r}});
      text << "delta=" << p.delta << " r=" << p.r << "\n";
    }
    s.emit({{"n", m.size()}, {"k", m.rank()}, {"d", d}, {"profile", profile}},
           text.str());
    return 0;
  }
  const LrcReport report = discover_lrc(m, s.lattice(), s.opt().delta);
  s.emit(lrc_json(report), lrc_text(report, report.passes));
  return report.passes ? 0 : 1;
}

int cmd_verify(Session& s) {
  const LrcReport report =
      verify_lrc(s.matroid(), s.lattice(), s.opt().r, s.opt().delta);
  json j = lrc_json(report);
  std::string text = lrc_text(report, false);
  try {
    const auto structure = binary_structure_check(
        s.matroid(), s.lattice(), s.opt().r, s.opt().delta, s.limits());
    j["binary_structure"] = binary_structure_json(structure);
    text += "binary-structure:\n" + binary_structure_text(structure);
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::kInapplicableTheorem &&
        e.kind() != ErrorKind::kDegenerateCode) {
      throw;
    }
    j["binary_structure"] = nullptr;
    text += std::string("binary-structure: not applicable (") + e.what() + ")\n";
  }
  text += "lrc (r=" + std::to_string(s.opt().r) +
          ", delta=" + std::to_string(s.opt().delta) +
          "): " + (report.passes ? "PASS" : "FAIL") + "\n";
  s.emit(j, text);
  return report.passes ? 0 : 1;
}

int cmd_structure(Session& s) {
  const auto result = binary_structure_check(
      s.matroid(), s.lattice(), s.opt().r, s.opt().delta, s.limits());
  const bool failed = std::any_of(
      result.conditions.begin(), result.conditions.end(),
      [](const ConditionResult& c) { return c.verdict == Verdict::kFail; });
  s.emit(binary_structure_json(result), binary_structure_text(result));
  return failed ? 1 : 0;
}

int cmd_echo(Session& s) {
  const std::string text = format_input(s.spec());
  s.emit({{"kind", to_string(s.spec().kind)}, {"text", text}}, text);
  return 0;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Cyclic-flat analysis of matroids and locally repairable codes",
               "matcyc"};
  app.require_subcommand(1);
  app.fallthrough();
  Options opt;
  app.add_flag("--json", opt.json, "JSON output");
  app.add_option("--max-n", opt.max_n, "ground-set size cap")
      ->check(CLI::PositiveNumber);
  app.add_option("--max-codewords", opt.max_codewords, "codeword cap")
      ->check(CLI::PositiveNumber);

  std::vector<std::pair<CLI::App*, std::function<int(Session&)>>> commands;
  auto command = [&](const std::string& name, const std::string& help,
                     std::function<int(Session&)> fn) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->add_option("input", opt.input, "matroid file, - for stdin")
        ->required();
    commands.emplace_back(sub, std::move(fn));
    return sub;
  };

  command("rank", "rank of a set (default E)", cmd_rank)
      ->add_option("set", opt.set, "comma-separated labels");
  command("closure", "closure of a set",
          [](Session& s) { return cmd_operator(s, "cl"); })
      ->add_option("set", opt.set, "comma-separated labels")
      ->required();
  command("cyc", "cyclic part of a set",
          [](Session& s) { return cmd_operator(s, "cyc"); })
      ->add_option("set", opt.set, "comma-separated labels")
      ->required();
  command("flats", "flats, or cyclic flats", cmd_flats)
      ->add_flag("--cyclic", opt.cyclic, "only cyclic flats");
  command("lattice", "lattice of cyclic flats", cmd_lattice)
      ->add_option("--dot", opt.dot_path, "write a DOT diagram");
  auto* minor_cmd = command("minor", "cyclic flats of M|Y/X", cmd_minor);
  minor_cmd->add_option("--restrict", opt.restrict_to, "Y")->required();
  minor_cmd->add_option("--contract", opt.contract_by, "X");
  minor_cmd->add_flag("--test-uniform", opt.test_uniform,
                      "decide uniformity by the lattice criteria");
  auto* scan_cmd = command("scan", "search for a U(n,k) minor", cmd_scan);
  scan_cmd->add_option("--uniform", opt.uniform, "n,k")->required();
  scan_cmd->add_flag("--brute", opt.brute, "exhaustive (X, Y) search");
  command("binary-check", "U(4,2)-minor test", cmd_binary);
  command("field-check", "forbidden uniform minors for GF(q)", cmd_field)
      ->add_option("--q", opt.q, "prime field size")
      ->required();
  command("params", "(n,k,d) and locality", cmd_params)
      ->add_option("--delta", opt.delta, "locality distance")
      ->check(CLI::Range(2, 64));
  auto* verify_cmd = command("lrc-verify", "check (r,delta) locality", cmd_verify);
  verify_cmd->add_option("--r", opt.r, "locality")->required();
  verify_cmd->add_option("--delta", opt.delta, "locality distance")->required();
  auto* structure_cmd = command("binary-structure",
                                "structure conditions for binary LRCs",
                                cmd_structure);
  structure_cmd->add_option("--r", opt.r, "locality")->required();
  structure_cmd->add_option("--delta", opt.delta, "locality distance")
      ->required();
  command("echo", "re-emit the parsed input", cmd_echo);

  std::ostringstream help_out;
  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n" << app.help();
    return 2;
  }

  try {
    for (auto& [sub, fn] : commands) {
      if (!sub->parsed()) continue;
      Session session(opt, out);
      return fn(session);
    }
  } catch (const Error& e) {
    err << "error (" << to_string(e.kind()) << "): " << e.what() << "\n";
    return exit_code(e.kind());
  }
  return 2;
}

}  // namespace matcyc
