// Copyright 2026 The quadsim Authors
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

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "quadsim/analysis/protocol.hpp"
#include "quadsim/circuits/catalogue.hpp"
#include "quadsim/dsl/dsl.hpp"
#include "quadsim/error.hpp"
#include "report.hpp"
#include "verify.hpp"

namespace {

using namespace quadsim;

constexpr int kExitMismatch = 1;
constexpr int kExitUsage = 2;

struct Loaded {
  std::optional<circuits::Circuit> circuit;
  int exit_code = 0;
};

bool is_builtin(const std::string& name) {
  const auto names = circuits::catalogue_names();
  return std::find(names.begin(), names.end(), name) != names.end();
}

Loaded load(const std::string& what) {
  if (is_builtin(what)) return {circuits::builtin_circuit(what), 0};
  std::ifstream in(what);
  if (!in) {
    std::cerr << "quadsim: '" << what << "' is neither a builtin circuit nor a readable file\n";
    return {std::nullopt, kExitUsage};
  }
  std::stringstream buf;
  buf << in.rdbuf();
  auto parsed = dsl::parse(buf.str());
  for (const auto& d : parsed.diagnostics) std::cerr << dsl::to_string(d, what) << '\n';
  if (!parsed.ok()) return {std::nullopt, kExitUsage};
  if (parsed.circuit->name.empty()) parsed.circuit->name = what;
  return {std::move(parsed.circuit), 0};
}

int cmd_run(const std::string& what, const std::string& out, bool full) {
  auto loaded = load(what);
  if (!loaded.circuit) return loaded.exit_code;
  const auto result = analysis::run_protocol(*loaded.circuit);
  if (out == "csv")
    std::cout << tools::result_csv(result);
  else
    std::cout << tools::result_json(result, full).dump(2) << '\n';
  return 0;
}

int cmd_table1(const std::string& out) {
  const auto rows = analysis::reproduce_table1();
  bool ok = true;
  for (const auto& r : rows) ok = ok && r.pass;
  if (out == "csv") {
    std::cout << tools::table1_csv(rows);
  } else {
    for (const auto& r : rows)
      std::cout << (r.pass ? "PASS " : "FAIL ") << r.resources << " -> " << r.output << "  expected "
                << analysis::to_string(r.expected) << "  computed " << tools::format12(r.computed) << " ("
                << analysis::to_string(analysis::nearest_rational(r.computed)) << ")  [" << r.circuit << "]\n";
  }
  return ok ? 0 : kExitMismatch;
}

int cmd_verify() {
  const auto results = tools::run_acceptance();
  bool ok = true;
  for (const auto& r : results) {
    std::cout << tools::format_line(r) << '\n';
    ok = ok && r.pass;
  }
  return ok ? 0 : kExitMismatch;
}

int cmd_list() {
  for (const auto& name : circuits::catalogue_names()) {
    const auto c = circuits::builtin_circuit(name);
    std::cout << name << "\t" << c.description << '\n';
  }
  return 0;
}

int cmd_dump(const std::string& name) {
  if (!is_builtin(name)) {
    std::cerr << "quadsim: unknown builtin circuit '" << name << "'\n";
    return kExitUsage;
  }
  std::cout << dsl::print(circuits::builtin_circuit(name));
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Linear-optical circuit simulator for polarization and spatial photonic modes"};
  app.require_subcommand(1);

  std::string run_target;
  std::string run_out = "json";
  bool full = false;
  auto* run = app.add_subcommand("run", "Evaluate every detection branch of a circuit");
  run->add_option("circuit", run_target, "Builtin name or .qc file")->required();
  run->add_option("--out", run_out, "Output format")->check(CLI::IsMember({"json", "csv"}));
  run->add_flag("--full-branches", full, "Include every branch state in JSON output");

  std::string table_out = "text";
  auto* table = app.add_subcommand("table1", "Reproduce the resource table");
  table->add_option("--out", table_out, "Output format")->check(CLI::IsMember({"text", "csv"}));

  auto* verify = app.add_subcommand("verify", "Run the acceptance suite");
  auto* list = app.add_subcommand("list", "List builtin circuits");

  std::string dump_name;
  auto* dump = app.add_subcommand("dump", "Print a builtin circuit as DSL source");
  dump->add_option("circuit", dump_name, "Builtin name")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (*run) return cmd_run(run_target, run_out, full);
    if (*table) return cmd_table1(table_out);
    if (*verify) return cmd_verify();
    if (*list) return cmd_list();
    if (*dump) return cmd_dump(dump_name);
  } catch (const Error& e) {
    std::cerr << "quadsim: " << to_string(e.kind()) << " error: " << e.what() << '\n';
    return kExitMismatch;
  }
  return kExitUsage;
}
