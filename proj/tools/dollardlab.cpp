#include "dollard/suites.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <iostream>

using namespace dollard;

int main(int argc, char** argv) {
  CLI::App app{"dollardlab - long-range scattering and wave-front laboratory"};
  app.require_subcommand(1);

  // run <suite> --config <path> [--set key=value ...] [--out dir] [--strict]
  auto* run = app.add_subcommand("run", "run a named experiment suite");
  std::string suite_name, config_path, out_dir;
  std::vector<std::string> overrides;
  bool strict = false, parallel = false;
  run->add_option("suite", suite_name, "suite name (see list-suites)")
      ->required();
  run->add_option("--config", config_path, "TOML config file")->required();
  run->add_option("--set", overrides,
                  "dotted-path override, e.g. flow.seeds=3 (repeatable)");
  run->add_option("--out", out_dir, "output directory for CSV + summary");
  run->add_flag("--strict", strict, "escalate propagation warnings to errors");
  run->add_flag("--parallel", parallel,
                "allow independent checks to run concurrently");

  auto* audit = app.add_subcommand("audit", "run the assumption audit");
  std::string audit_config;
  audit->add_option("--config", audit_config, "TOML config file")->required();

  auto* list = app.add_subcommand("list-suites", "list available suites");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) ? 2 : 0;
  }

  try {
    if (list->parsed()) {
      for (const auto& name : list_suites())
        std::printf("%-20s %s\n", name.c_str(),
                    suite_description(name).c_str());
      return 0;
    }

    if (audit->parsed()) {
      ExperimentConfig cfg = load_config(audit_config);
      SuiteResult res = run_suite("assumption_audit", cfg);
      std::fputs(res.summary_text().c_str(), stdout);
      return res.pass() ? 0 : 1;
    }

    // run
    if (!is_suite(suite_name)) {
      std::fprintf(stderr, "unknown suite '%s'\n", suite_name.c_str());
      return 2;
    }
    ExperimentConfig cfg;
    try {
      cfg = load_config(config_path, overrides);
    } catch (const ConfigError& e) {
      std::fprintf(stderr, "config error: %s\n", e.what());
      return 2;
    }
    if (strict) cfg.map.apply_override("suite.strict=true");
    if (parallel) cfg.map.apply_override("suite.parallel=true");
    if (!out_dir.empty()) cfg.map.set_string("output.directory", out_dir);
    SuiteResult res = run_suite(suite_name, cfg);
    std::fputs(res.summary_text().c_str(), stdout);
    return res.pass() ? 0 : 1;
  } catch (const ConfigError& e) {
    std::fprintf(stderr, "config error: %s\n", e.what());
    return 2;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  }
}
