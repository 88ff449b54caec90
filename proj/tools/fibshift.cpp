// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "fibshift/commands.hpp"

using namespace fibshift;

int main(int argc, char** argv) {
  CLI::App app{"Shift automata for the Fibonacci word in Zeckendorf numeration"};
  app.require_subcommand(1);

  BuildConfig build_cfg;
  std::string build_order = "lsd";
  auto* build = app.add_subcommand("build", "Build one shift automaton and export it");
  build->add_option("--c", build_cfg.c, "shift amount")->required()->check(CLI::NonNegativeNumber);
  build->add_option("--order", build_order, "reading order (msd|lsd)")
      ->check(CLI::IsMember({"msd", "lsd"}));
  build->add_option("--format", build_cfg.format, "output format (dot|walnut)")
      ->check(CLI::IsMember({"dot", "walnut"}));
  build->add_flag("--minimize", build_cfg.minimize, "minimize before exporting");
  build->add_option("--out", build_cfg.out_path, "output file (default stdout)");

  VerifyConfig verify_cfg;
  std::string verify_range = "0..100";
  auto* verify = app.add_subcommand("verify", "Check automata against the word oracle");
  verify->add_option("--c", verify_range, "shift or range a..b")->required();
  verify->add_option("--n", verify_cfg.horizon, "check outputs for i < n");

  TableConfig table_cfg;
  std::string table_range = "0..100";
  auto* table = app.add_subcommand("table", "CSV of state counts per shift");
  table->add_option("--c", table_range, "shift or range a..b")->required();
  table->add_option("--out", table_cfg.out_path, "output file (default stdout)");

  LemmasConfig lemmas_cfg;
  auto* lemmas = app.add_subcommand("lemmas", "Run the exhaustive desk-scale checks");
  lemmas->add_flag("--all", lemmas_cfg.all, "run every named check");
  lemmas->add_option("--name", lemmas_cfg.name, "run one named check");
  lemmas->add_option("--bound", lemmas_cfg.bound, "override the check's primary bound");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (build->parsed()) {
      build_cfg.order = build_order == "msd" ? ReadOrder::msd : ReadOrder::lsd;
      return cmd_build(build_cfg, std::cout, std::cerr);
    }
    if (verify->parsed()) {
      verify_cfg.c_range = parse_range(verify_range);
      return cmd_verify(verify_cfg, std::cout, std::cerr);
    }
    if (table->parsed()) {
      table_cfg.c_range = parse_range(table_range);
      return cmd_table(table_cfg, std::cout, std::cerr);
    }
    if (lemmas->parsed()) {
      return cmd_lemmas(lemmas_cfg, std::cout, std::cerr);
    }
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitVerifyFail;
  }
  return kExitUsage;
}
