// Copyright 2026 The iet3 Authors. All Rights Reserved.
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

#include "iet3/cli.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>

#include "CLI11.hpp"

#include "iet3/amicability.hpp"
#include "iet3/error.hpp"
#include "iet3/iet.hpp"
#include "iet3/matrices.hpp"
#include "iet3/morphism.hpp"
#include "iet3/quad.hpp"

namespace iet3::cli {

namespace {

using nlohmann::json;

json row(json fields) {
  fields["type"] = "row";
  return fields;
}

json pair_record(const AmicablePair& pair) {
  return row({{"k", pair.k},
              {"kbar", pair.kbar},
              {"b0", pair.b0},
              {"b1", pair.b1},
              {"b", pair.b},
              {"phi", pair.phi.str()},
              {"psi", pair.psi.str()},
              {"eta", pair.eta.str()},
              {"matrix3", incidence_matrix3(pair.eta).str()}});
}

json membership_fields(const MembershipOutcome& outcome) {
  json fields{{"member", outcome.pair.has_value()}};
  if (outcome.pair) {
    fields["phi"] = outcome.pair->first.str();
    fields["psi"] = outcome.pair->second.str();
  } else {
    fields["diagnostic"] = outcome.diagnostic;
  }
  return fields;
}

Morphism parse_ternary(const std::string& text) {
  Morphism m = Morphism::parse(text);
  if (m.alphabet() != Alphabet::kTernary) {
    throw ParseError("expected a morphism over {A,B,C}: '" + text + "'");
  }
  return m;
}

Morphism parse_binary(const std::string& text) {
  Morphism m = Morphism::parse(text);
  if (m.alphabet() != Alphabet::kBinary) {
    throw ParseError("expected a morphism over {0,1}: '" + text + "'");
  }
  return m;
}

std::size_t to_length(std::int64_t n) {
  if (n < 0) throw DomainError("length must be non-negative");
  return static_cast<std::size_t>(n);
}

// Option values shared by the subcommands.
struct Args {
  std::string matrix;
  std::string matrix3;
  std::string phi;
  std::string psi;
  std::string eta;
  std::string slope;
  std::string alpha;
  std::string beta;
  std::string start = "0";
  std::string suite;
  std::optional<std::int64_t> b;
  std::optional<std::int64_t> max_norm;
  std::int64_t length = 0;
  std::int64_t kmax = static_cast<std::int64_t>(kDefaultMaxComplexityLength);
  std::uint64_t seed = verify::Options{}.seed;
  bool compare = false;
  bool pretty = false;
};

void cmd_std(const Args& args, CommandReport& report) {
  const auto a = IntMatrix2::parse(args.matrix);
  const Morphism m = standard_morphism(a);
  report.records.push_back(
      row({{"matrix", a.str()}, {"morphism", m.str()}, {"k", k_index(m)}}));
}

void cmd_enum(const Args& args, CommandReport& report) {
  const auto a = IntMatrix2::parse(args.matrix);
  for (const Morphism& m : enumerate_sturmian(a)) {
    report.records.push_back(row({{"morphism", m.str()},
                                  {"k", k_index(m)},
                                  {"standard", is_standard_morphism(m)}}));
  }
  report.summary["count"] = report.records.size();
}

void cmd_pairs(const Args& args, CommandReport& report) {
  const auto a = IntMatrix2::parse(args.matrix);
  for (const AmicablePair& pair : brute_force_pairs(a)) {
    if (args.b && pair.b != *args.b) continue;
    report.records.push_back(pair_record(pair));
  }
  report.summary["count"] = report.records.size();
}

void cmd_count(const Args& args, CommandReport& report,
               const verify::Hooks& hooks) {
  if (!args.max_norm) throw PreconditionError("count requires --max-norm");
  std::int64_t mismatches = 0;
  for (const IntMatrix2& a : unimodular_matrices(*args.max_norm)) {
    json fields{{"matrix", a.str()},
                {"det", a.det()},
                {"norm", a.norm()},
                {"formula", hooks.count_formula_total(a)}};
    if (args.compare) {
      const auto brute = static_cast<std::int64_t>(brute_force_pairs(a).size());
      fields["brute"] = brute;
      fields["match"] = brute == fields["formula"].get<std::int64_t>();
      if (!fields["match"].get<bool>()) ++mismatches;
    }
    report.records.push_back(row(std::move(fields)));
  }
  report.summary["matrices"] = report.records.size();
  if (args.compare) {
    report.summary["mismatches"] = mismatches;
    if (mismatches > 0) {
      report.status = Status::kPropertyFalse;
      report.message = "formula and brute force disagree";
    }
  }
}

void cmd_ternarize(const Args& args, CommandReport& report) {
  const Morphism phi = parse_binary(args.phi);
  const Morphism psi = parse_binary(args.psi);
  const auto counts = amicable_morphisms(phi, psi);
  if (!counts) {
    report.status = Status::kPropertyFalse;
    report.message = "morphisms are not amicable";
    return;
  }
  report.records.push_back(row({{"eta", ternarize_morphisms(phi, psi).str()},
                                {"b0", counts->b0},
                                {"b1", counts->b1},
                                {"b", counts->b}}));
}

void cmd_member(const Args& args, CommandReport& report) {
  const Morphism eta = parse_ternary(args.eta);
  const MembershipOutcome outcome = check_ternarization(eta);
  json fields = membership_fields(outcome);
  fields["eta"] = eta.str();
  report.records.push_back(row(std::move(fields)));
  if (!outcome.pair) {
    report.status = Status::kPropertyFalse;
    report.message = outcome.diagnostic;
  }
}

void cmd_classify(const Args& args, CommandReport& report) {
  const auto b = IntMatrix3::parse(args.matrix3);
  const auto witness = classify_matrix3(b);
  const auto sign = e_condition(b);
  json fields{{"matrix3", b.str()},
              {"classified", witness.has_value()},
              {"e_sign", sign ? json(*sign) : json(nullptr)}};
  if (witness) {
    fields["matrix"] = witness->a.str();
    fields["b0"] = witness->b0;
    fields["b1"] = witness->b1;
    fields["delta"] = witness->delta;
  }
  report.records.push_back(row(std::move(fields)));
  if (!witness) {
    report.status = Status::kPropertyFalse;
    report.message = "not the incidence matrix of a ternarization";
  }
}

void cmd_word2(const Args& args, CommandReport& report) {
  const TwoIET t(QuadNumber::parse(args.slope));
  const Word w = two_iet_code(t, QuadNumber::parse(args.start), to_length(args.length));
  report.records.push_back(row({{"word", w.str()}, {"length", w.size()}}));
}

void cmd_word3(const Args& args, CommandReport& report) {
  const ThreeIET t(QuadNumber::parse(args.alpha), QuadNumber::parse(args.beta));
  const Word w =
      three_iet_code(t, QuadNumber::parse(args.start), to_length(args.length));
  const bool nondegenerate = is_nondegenerate_params(t);
  report.records.push_back(row({{"word", w.str()},
                                {"length", w.size()},
                                {"nondegenerate", nondegenerate}}));
  if (!nondegenerate) {
    report.summary["warning"] =
        "(1-alpha)/(1+beta) is rational: the coding is not a 3iet word";
  }
}

void cmd_preserve(const Args& args, CommandReport& report) {
  const Morphism eta = parse_ternary(args.eta);
  const ThreeIET t(QuadNumber::parse(args.alpha), QuadNumber::parse(args.beta));
  if (args.kmax < 1) throw DomainError("--kmax must be positive");
  const auto result =
      check_3iet_preservation(eta, t, QuadNumber::parse(args.start),
                              to_length(args.length),
                              static_cast<std::size_t>(args.kmax));
  report.records.push_back(row({{"eta", eta.str()},
                                {"preserved", result.preserved},
                                {"prefix_length", result.prefix_length},
                                {"image_length", result.image_length},
                                {"violation", result.violation}}));
  if (!result.preserved) {
    report.status = Status::kPropertyFalse;
    report.message = result.violation;
  }
}

void cmd_probe(const Args& args, CommandReport& report) {
  const Morphism eta = parse_ternary(args.eta);
  const ProbeReport probe = conjecture_probe(eta);
  for (const ProbeEntry& entry : probe.entries) {
    json fields = membership_fields(entry.membership);
    fields["label"] = entry.label;
    fields["morphism"] = entry.morphism.str();
    report.records.push_back(row(std::move(fields)));
  }
  report.summary["any_member"] = probe.any_member;
}

void cmd_verify(const Args& args, CommandReport& report,
                const verify::Hooks& hooks) {
  const auto& names = verify::suite_names();
  if (std::find(names.begin(), names.end(), args.suite) == names.end()) {
    throw PreconditionError("unknown suite '" + args.suite + "'");
  }
  verify::Options options;
  options.max_norm = args.max_norm;
  options.seed = args.seed;
  const verify::SuiteResult result = verify::run_suite(args.suite, options, hooks);
  for (const json& r : result.rows) report.records.push_back(row(r));
  report.summary["suite"] = result.suite;
  report.summary["max_norm"] = result.max_norm;
  report.summary["checked"] = result.checked;
  report.summary["failures"] = result.failures;
  if (!result.passed()) {
    report.status = Status::kPropertyFalse;
    report.message = std::to_string(result.failures) + " of " +
                     std::to_string(result.checked) + " checks failed";
  }
}

std::string cell(const json& value) {
  return value.is_string() ? value.get<std::string>() : value.dump();
}

void emit_pretty(const CommandReport& report, std::ostream& out) {
  std::set<std::string> column_set;
  for (const json& r : report.records) {
    for (const auto& [key, value] : r.items()) {
      if (key != "type") column_set.insert(key);
    }
  }
  const std::vector<std::string> columns(column_set.begin(), column_set.end());
  std::vector<std::size_t> widths;
  for (const std::string& c : columns) widths.push_back(c.size());
  for (const json& r : report.records) {
    for (std::size_t i = 0; i < columns.size(); ++i) {
      if (r.contains(columns[i])) {
        widths[i] = std::max(widths[i], cell(r[columns[i]]).size());
      }
    }
  }
  auto print_line = [&](const std::function<std::string(std::size_t)>& text) {
    for (std::size_t i = 0; i < columns.size(); ++i) {
      const std::string s = text(i);
      out << s;
      if (i + 1 < columns.size()) out << std::string(widths[i] - s.size() + 2, ' ');
    }
    out << '\n';
  };
  if (!columns.empty()) {
    print_line([&](std::size_t i) { return columns[i]; });
    print_line([&](std::size_t i) { return std::string(widths[i], '-'); });
    for (const json& r : report.records) {
      print_line([&](std::size_t i) {
        return r.contains(columns[i]) ? cell(r[columns[i]]) : std::string();
      });
    }
  }
  for (const auto& [key, value] : report.summary.items()) {
    out << key << ": " << cell(value) << '\n';
  }
  out << report.command << ": " << status_name(report.status);
  if (!report.message.empty()) out << " (" << report.message << ")";
  out << '\n';
}

}  // namespace

int exit_code(Status status) {
  switch (status) {
    case Status::kOk:
      return 0;
    case Status::kPropertyFalse:
      return 1;
    case Status::kInvalidInput:
      return 2;
  }
  return 2;
}

std::string_view status_name(Status status) {
  switch (status) {
    case Status::kOk:
      return "ok";
    case Status::kPropertyFalse:
      return "property-false";
    case Status::kInvalidInput:
      return "invalid-input";
  }
  return "invalid-input";
}

CommandReport dispatch(const std::vector<std::string>& args,
                       const verify::Hooks& hooks) {
  CLI::App app{"Sturmian morphisms, amicability and ternarization", "iet3"};
  app.require_subcommand(1);
  app.fallthrough();
  Args a;
  app.add_flag("--pretty", a.pretty, "Print a table instead of JSON lines");

  auto* std_cmd = app.add_subcommand("std", "Standard morphism of a matrix");
  std_cmd->add_option("--matrix", a.matrix, "2x2 matrix 'a,b;c,d'")->required();

  auto* enum_cmd = app.add_subcommand("enum", "All Sturmian morphisms of a matrix");
  enum_cmd->add_option("--matrix", a.matrix, "2x2 matrix 'a,b;c,d'")->required();

  auto* pairs_cmd = app.add_subcommand("pairs", "Amicable pairs of a matrix");
  pairs_cmd->add_option("--matrix", a.matrix, "2x2 matrix 'a,b;c,d'")->required();
  pairs_cmd->add_option("--b", a.b, "Keep only pairs with this b");

  auto* count_cmd = app.add_subcommand("count", "Amicable pair counts per matrix");
  count_cmd->add_option("--max-norm", a.max_norm, "Largest sum of entries")->required();
  count_cmd->add_flag("--compare", a.compare, "Also count by brute force");

  auto* ter_cmd = app.add_subcommand("ternarize", "Ternarization of two morphisms");
  ter_cmd->add_option("--phi", a.phi, "Binary morphism")->required();
  ter_cmd->add_option("--psi", a.psi, "Binary morphism")->required();

  auto* member_cmd = app.add_subcommand("member", "Is a morphism a ternarization");
  member_cmd->add_option("--eta", a.eta, "Ternary morphism")->required();

  auto* classify_cmd =
      app.add_subcommand("classify", "Is a 3x3 matrix a ternarization matrix");
  classify_cmd->add_option("--matrix3", a.matrix3, "'a,b,c;d,e,f;g,h,i'")->required();

  auto* word2_cmd = app.add_subcommand("word2", "Coding of a 2-interval exchange");
  word2_cmd->add_option("--slope", a.slope, "Slope in [0,1]")->required();
  word2_cmd->add_option("--start", a.start, "Starting point x0");
  word2_cmd->add_option("-n,--length", a.length, "Prefix length")->required();

  auto* word3_cmd = app.add_subcommand("word3", "Coding of a 3-interval exchange");
  word3_cmd->add_option("--alpha", a.alpha, "Length of I_A")->required();
  word3_cmd->add_option("--beta", a.beta, "Length of I_B")->required();
  word3_cmd->add_option("--start", a.start, "Starting point x0");
  word3_cmd->add_option("-n,--length", a.length, "Prefix length")->required();

  auto* preserve_cmd =
      app.add_subcommand("preserve", "Prefix-scale 3iet preservation check");
  preserve_cmd->add_option("--eta", a.eta, "Ternary morphism")->required();
  preserve_cmd->add_option("--alpha", a.alpha, "Length of I_A")->required();
  preserve_cmd->add_option("--beta", a.beta, "Length of I_B")->required();
  preserve_cmd->add_option("--start", a.start, "Starting point x0");
  a.length = static_cast<std::int64_t>(kDefaultPrefixLength);
  preserve_cmd->add_option("-n,--length", a.length, "Prefix length");
  preserve_cmd->add_option("--kmax", a.kmax, "Largest factor length checked");

  auto* probe_cmd = app.add_subcommand("probe", "Membership of eta and relatives");
  probe_cmd->add_option("--eta", a.eta, "Ternary morphism")->required();

  auto* verify_cmd = app.add_subcommand("verify", "Run a verification suite");
  verify_cmd->add_option("--suite", a.suite, "Suite name")
      ->required()
      ->check(CLI::IsMember(verify::suite_names()));
  verify_cmd->add_option("--max-norm", a.max_norm, "Bound of the sweep");
  verify_cmd->add_option("--seed", a.seed, "Seed for sampled suites");

  CommandReport report;
  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    report.command = "help";
    report.message = app.help();
    return report;
  } catch (const CLI::ParseError& e) {
    report.command = args.empty() ? "" : args.front();
    report.status = Status::kInvalidInput;
    report.message = e.what();
    return report;
  }
  report.pretty = a.pretty;
  CLI::App* chosen = app.get_subcommands().front();
  report.command = chosen->get_name();
  try {
    if (chosen == std_cmd) cmd_std(a, report);
    else if (chosen == enum_cmd) cmd_enum(a, report);
    else if (chosen == pairs_cmd) cmd_pairs(a, report);
    else if (chosen == count_cmd) cmd_count(a, report, hooks);
    else if (chosen == ter_cmd) cmd_ternarize(a, report);
    else if (chosen == member_cmd) cmd_member(a, report);
    else if (chosen == classify_cmd) cmd_classify(a, report);
    else if (chosen == word2_cmd) cmd_word2(a, report);
    else if (chosen == word3_cmd) cmd_word3(a, report);
    else if (chosen == preserve_cmd) cmd_preserve(a, report);
    else if (chosen == probe_cmd) cmd_probe(a, report);
    else if (chosen == verify_cmd) cmd_verify(a, report, hooks);
  } catch (const std::exception& e) {
    report.records.clear();
    report.summary = json::object();
    report.status = Status::kInvalidInput;
    report.message = e.what();
  }
  return report;
}

void emit(const CommandReport& report, std::ostream& out) {
  if (report.command == "help" && report.status == Status::kOk) {
    out << report.message;
    return;
  }
  if (report.pretty) {
    emit_pretty(report, out);
    return;
  }
  for (const json& r : report.records) out << r.dump() << '\n';
  json result = report.summary;
  result["type"] = "result";
  result["command"] = report.command;
  result["status"] = status_name(report.status);
  if (!report.message.empty()) result["message"] = report.message;
  out << result.dump() << '\n';
}

int run(const std::vector<std::string>& args, std::ostream& out,
        const verify::Hooks& hooks) {
  const CommandReport report = dispatch(args, hooks);
  emit(report, out);
  return exit_code(report.status);
}

}  // namespace iet3::cli
