// Copyright 2026 The unikit Authors
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

#include <iostream>

#include "CLI11.hpp"
#include "unikit/cli/commands.hpp"

int main(int argc, char** argv) {
  using namespace unikit::cli;
  CLI::App app{"unikit: universality of restricted linear-optics gate sets"};
  app.require_subcommand(1);

  ClassifyArgs classify;
  double tol = 0.0;
  auto* c = app.add_subcommand("classify", "classify a scenario file");
  c->add_option("file", classify.scenario, "scenario JSON")->required();
  c->add_flag("--oracle", classify.oracle, "also run the closure oracle");
  auto* tol_opt = c->add_option("--tol", tol, "zero-branch tolerance factor");
  c->add_flag("--json", classify.json, "emit the JSON report");

  bool repro_json = false;
  auto* r = app.add_subcommand("repro", "run the canned example scenarios");
  r->add_flag("--json", repro_json, "emit JSON");

  OracleArgs oracle;
  int max_rounds = 0;
  int max_power = 0;
  auto* o = app.add_subcommand("oracle", "run only the Lie closure oracle");
  o->add_option("file", oracle.scenario, "scenario JSON")->required();
  auto* rounds_opt = o->add_option("--max-rounds", max_rounds, "closure round limit");
  auto* power_opt = o->add_option("--max-power", max_power, "gate powers used as seeds");
  o->add_flag("--json", oracle.json, "emit JSON");

  std::string inv_sector;
  bool inv_json = false;
  auto* inv = app.add_subcommand("invariants", "print the invariant vector of a sector");
  inv->add_option("--sector", inv_sector, "kind:d[:N]")->required();
  inv->add_flag("--json", inv_json, "emit JSON");

  std::string dims_sector;
  bool dims_json = false;
  auto* dims = app.add_subcommand("dims", "print the dimension table of a sector");
  dims->add_option("--sector", dims_sector, "kind:d[:N]")->required();
  dims->add_flag("--json", dims_json, "emit JSON");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitInvalid;
  }

  if (*c) {
    if (*tol_opt) classify.tolerance = tol;
    return run_classify(classify, std::cout, std::cerr);
  }
  if (*r) return run_repro(repro_json, std::cout, std::cerr);
  if (*o) {
    if (*rounds_opt) oracle.max_rounds = max_rounds;
    if (*power_opt) oracle.max_power = max_power;
    return run_oracle_command(oracle, std::cout, std::cerr);
  }
  if (*inv) return run_invariants(inv_sector, inv_json, std::cout, std::cerr);
  return run_dims(dims_sector, dims_json, std::cout, std::cerr);
}
