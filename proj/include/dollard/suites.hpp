#ifndef DOLLARD_SUITES_HPP
#define DOLLARD_SUITES_HPP

#include "dollard/config.hpp"
#include "dollard/report.hpp"

namespace dollard {

// Named experiment suites. Each one binds a single verification target to a
// runnable, deterministic check; run_suite never lets one failing check
// abort its siblings. Results are emitted to cfg output.directory when set.
std::vector<std::string> list_suites();
bool is_suite(const std::string& name);
std::string suite_description(const std::string& name);

SuiteResult run_suite(const std::string& name, const ExperimentConfig& cfg);

// Built-in reference configuration (TOML text) for a suite; the files under
// configs/ carry the same content.
std::string reference_config_text(const std::string& suite);

}  // namespace dollard

#endif
