#ifndef DOLLARD_CONFIG_HPP
#define DOLLARD_CONFIG_HPP

#include "dollard/propagator.hpp"
#include "dollard/symbols.hpp"

#include <map>
#include <string>
#include <vector>

namespace dollard {

// Minimal TOML-style reader: [table] headers, dotted keys, strings, numbers,
// booleans and flat numeric arrays, with # comments. Parse errors carry
// file:line diagnostics. Values live in a flat dotted-key map, which is also
// what --set overrides edit.
struct ConfigValue {
  enum class Kind { Number, Boolean, String, Array };
  Kind kind = Kind::Number;
  double num = 0.0;
  bool boolean = false;
  std::string str;
  std::vector<double> array;
};

class ConfigMap {
 public:
  static ConfigMap parse_file(const std::string& path);
  static ConfigMap parse(const std::string& text,
                         const std::string& origin = "<inline>");

  // "dotted.key=value" with the value in the same syntax as the file.
  void apply_override(const std::string& assignment);

  bool has(const std::string& key) const { return values_.count(key) > 0; }
  double number(const std::string& key) const;
  double number_or(const std::string& key, double fallback) const;
  long integer_or(const std::string& key, long fallback) const;
  bool bool_or(const std::string& key, bool fallback) const;
  std::string string_or(const std::string& key,
                        const std::string& fallback) const;
  std::vector<double> array_or(const std::string& key,
                               const std::vector<double>& fallback) const;

  void set_number(const std::string& key, double v);
  void set_string(const std::string& key, const std::string& v);

  // Sorted key = value dump; reruns hash this, so formatting is fixed.
  std::string canonical() const;
  std::string hash_hex() const;  // FNV-1a 64 over canonical()

  const std::map<std::string, ConfigValue>& values() const { return values_; }

 private:
  std::map<std::string, ConfigValue> values_;
};

// Typed facade the suites consume. Anything absent falls back to the
// documented defaults, so a config file only has to pin what it changes.
struct ExperimentConfig {
  ConfigMap map;

  SymbolModel build_model() const;
  PropagatorConfig propagator_config() const;
  GridState make_grid() const;  // from grid.* keys

  int grid_dim() const { return int(map.integer_or("grid.dimension", 1)); }
  long rng_seed() const { return map.integer_or("flow.rng_seed", 20260810); }
  int n_seeds() const { return int(map.integer_or("flow.seeds", 5)); }
  double flow_tol() const { return map.number_or("flow.tol", 1e-10); }
  double t_max() const { return map.number_or("flow.t_max", 1e4); }
  bool strict() const { return map.bool_or("suite.strict", false); }
  std::string out_dir() const { return map.string_or("output.directory", ""); }
  std::string hash() const { return map.hash_hex(); }
};

ExperimentConfig load_config(const std::string& path,
                             const std::vector<std::string>& overrides = {});
ExperimentConfig config_from_text(const std::string& text,
                                  const std::vector<std::string>& overrides =
                                      {});

}  // namespace dollard

#endif
