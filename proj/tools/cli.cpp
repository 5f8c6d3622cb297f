// Copyright 2026 The unitforge Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//   http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <optional>
#include <sstream>

#include "unitforge/classify.hpp"
#include "unitforge/construction.hpp"
#include "unitforge/error.hpp"
#include "unitforge/json_io.hpp"
#include "unitforge/units.hpp"
#include "unitforge/verify.hpp"

namespace unitforge::cli {

namespace {

struct Options {
  bool json = false;
  std::optional<std::uint64_t> cap;

  std::string group;
  std::string char_spec;
  std::string ring;
  std::string presentation_file;
  std::string out_path;
  std::string suite;
  std::optional<std::uint64_t> p;
  std::optional<int> n_max;
  std::optional<unsigned> k_max;
  std::string target;
  int max_dim = 8;
  int max_generators = 2;
};

Limits limits_for(const Options& o) {
  Limits l = Limits::from_environment();
  if (o.cap) {
    if (*o.cap == 0 || *o.cap > kMaxRingOrderCap) {
      throw InputError("--cap must be in [1, " + std::to_string(kMaxRingOrderCap) + "]");
    }
    l.ring_order_cap = *o.cap;
  }
  return l;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void print_report(const UnitGroupReport& r, std::ostream& out) {
  out << "order: " << r.order << "\n";
  out << "abelian: " << (r.abelian ? "yes" : "no") << "\n";
  out << "abelian type: " << (r.abelian_type ? r.abelian_type->to_string() : "-") << "\n";
  out << "histogram:";
  for (const auto& [o, c] : r.order_histogram) out << " " << o << ":" << c;
  out << "\n";
  out << "center order: " << (r.center_order ? std::to_string(*r.center_order) : "-") << "\n";
  out << "identified: " << (r.identified ? r.identified->to_string() : "-") << "\n";
}

int do_classify(const Options& o, std::ostream& out) {
  const GroupSpec g = parse_group(o.group);
  const CharSpec spec = CharSpec::parse(o.char_spec);
  const Verdict v = classify(g, spec);
  if (o.json) {
    out << verdict_to_json(v) << "\n";
    return kExitOk;
  }
  out << "status: " << status_name(v.status) << "\n";
  out << "char: " << v.char_text() << "\n";
  out << "witness: " << (v.witness ? to_string(v.witness) : "-") << "\n";
  out << "rule: " << rule_name(v.rule) << "\n";
  out << "citation: " << rule_citation(v.rule) << "\n";
  out << "notes: " << (v.notes.empty() ? "-" : v.notes) << "\n";
  return kExitOk;
}

int do_units(const Options& o, std::ostream& out) {
  const Limits limits = limits_for(o);
  if (o.ring.empty() == o.presentation_file.empty()) {
    throw InputError("units needs exactly one of --ring and --presentation");
  }
  const Ring r = o.ring.empty()
                     ? Ring(presentation_from_json(read_file(o.presentation_file)), limits)
                     : build_ring(*parse_ring(o.ring), limits);
  const UnitGroupReport rep = unit_group_report(r);
  if (o.json) {
    out << report_to_json(rep) << "\n";
  } else {
    print_report(rep, out);
  }
  return kExitOk;
}

int do_build(const Options& o, std::ostream& out) {
  const Limits limits = limits_for(o);
  const Ring r = build_ring(*parse_ring(o.ring), limits);
  const std::string json = presentation_to_json(r.presentation());
  if (o.out_path == "-") {
    out << json << "\n";
    return kExitOk;
  }
  std::ofstream f(o.out_path);
  if (!f) throw InputError("cannot write " + o.out_path);
  f << json << "\n";
  if (!f) throw InputError("cannot write " + o.out_path);
  out << "wrote " << o.out_path << " (order " << r.order() << ", dimension " << r.dimension()
      << ")\n";
  return kExitOk;
}

int do_verify(const Options& o, std::ostream& out) {
  const Limits limits = limits_for(o);
  SuiteReport rep;
  if (o.suite == "an_formula" && (o.p || o.n_max)) {
    rep = suite_an_formula(o.p.value_or(2), o.n_max.value_or(12), limits);
  } else if (o.suite == "group_algebra" && o.p) {
    rep = suite_group_algebra(*o.p, default_group_algebra_groups(*o.p), limits);
  } else if (o.suite == "power_down" && o.k_max) {
    rep = suite_power_down(default_power_down_rings(), *o.k_max, limits);
  } else {
    rep = run_suite(o.suite, limits);
  }
  if (o.json) {
    out << suite_to_json(rep) << "\n";
  } else {
    for (const auto& c : rep.cases) {
      out << (c.pass ? "PASS " : "FAIL ") << c.desc << ": expected " << c.expected
          << ", observed " << c.observed << "\n";
    }
    out << "suite " << rep.suite << ": " << (rep.pass ? "PASS" : "FAIL") << " ("
        << rep.cases.size() << " cases, " << rep.vacuous_count() << " vacuous, " << rep.ms
        << " ms)\n";
  }
  return rep.pass ? kExitOk : kExitFailure;
}

int do_search(const Options& o, std::ostream& out) {
  const Limits limits = limits_for(o);
  if (o.char_spec != "2") throw InputError("search only supports --char 2");
  const AbelianType target = parse_abelian(o.target);
  const auto w = search_witness(target, {o.max_dim, o.max_generators}, limits);
  if (o.json) {
    out << "{\"target\":\"" << target.to_string() << "\",\"witness\":"
        << (w ? "\"" + to_string(*w) + "\"" : std::string("null")) << "}\n";
  } else if (w) {
    out << "witness: " << to_string(*w) << "\n";
  } else {
    out << "no witness within the search bounds (inconclusive)\n";
  }
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Realizability of p-groups as unit groups of finite rings", "unitforge"};
  app.require_subcommand(1);
  app.add_flag("--json", o.json, "Emit JSON")->configurable(false);
  app.add_option("--cap", o.cap, "Largest ring order enumerated (also UNITFORGE_CAP)");

  auto* classify_cmd = app.add_subcommand("classify", "Decide realizability of a group");
  classify_cmd->add_option("--group", o.group, "Group, e.g. C8xC2, C4^2xC2, D8")->required();
  classify_cmd->add_option("--char", o.char_spec, "any, 0, odd, 2^k or an integer")
      ->default_val("any");

  auto* units_cmd = app.add_subcommand("units", "Compute the unit group of a finite ring");
  units_cmd->add_option("--ring", o.ring, "Ring expression, e.g. U3[F2]");
  units_cmd->add_option("--presentation", o.presentation_file, "Presentation JSON file");

  auto* build_cmd = app.add_subcommand("build", "Write the presentation JSON of a ring");
  build_cmd->add_option("--ring", o.ring, "Ring expression")->required();
  build_cmd->add_option("--out", o.out_path, "Output path, - for stdout")->required();

  auto* verify_cmd = app.add_subcommand("verify", "Run a verification suite");
  verify_cmd->add_option("--suite", o.suite, "Suite name")
      ->required()
      ->check(CLI::IsMember(suite_names()));
  verify_cmd->add_option("--p", o.p, "Prime for an_formula and group_algebra");
  verify_cmd->add_option("--n-max", o.n_max, "Largest n for an_formula");
  verify_cmd->add_option("--k-max", o.k_max, "Largest k for power_down");

  auto* search_cmd = app.add_subcommand("search", "Search quotient algebras for a unit group");
  search_cmd->add_option("--target", o.target, "Target abelian 2-group")->required();
  search_cmd->add_option("--char", o.char_spec, "Characteristic (only 2)")->default_val("2");
  search_cmd->add_option("--max-dim", o.max_dim, "Largest algebra dimension")->default_val(8);
  search_cmd->add_option("--max-generators", o.max_generators, "Largest ideal generating set")
      ->default_val(2);

  for (auto* sub : {classify_cmd, units_cmd, build_cmd, verify_cmd, search_cmd}) {
    sub->fallthrough();
  }

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n" << app.help();
    return kExitInput;
  }

  try {
    if (classify_cmd->parsed()) return do_classify(o, out);
    if (units_cmd->parsed()) return do_units(o, out);
    if (build_cmd->parsed()) return do_build(o, out);
    if (verify_cmd->parsed()) return do_verify(o, out);
    if (search_cmd->parsed()) return do_search(o, out);
  } catch (const CapExceeded& e) {
    err << "error: " << e.what() << "\n";
    return kExitCap;
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return kExitInput;
  }
  err << app.help();
  return kExitInput;
}

}  // namespace unitforge::cli
