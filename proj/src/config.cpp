#include "dollard/config.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

namespace dollard {

namespace {

std::string trim(const std::string& s) {
  size_t b = s.find_first_not_of(" \t\r");
  size_t e = s.find_last_not_of(" \t\r");
  return b == std::string::npos ? "" : s.substr(b, e - b + 1);
}

std::string strip_comment(const std::string& line) {
  bool in_str = false;
  for (size_t i = 0; i < line.size(); ++i) {
    if (line[i] == '"') in_str = !in_str;
    if (line[i] == '#' && !in_str) return line.substr(0, i);
  }
  return line;
}

[[noreturn]] void fail(const std::string& origin, int lineno,
                       const std::string& msg) {
  throw ConfigError(origin + ":" + std::to_string(lineno) + ": " + msg);
}

bool valid_key(const std::string& k) {
  if (k.empty()) return false;
  for (char c : k)
    if (!(std::isalnum((unsigned char)c) || c == '_' || c == '-' || c == '.'))
      return false;
  return true;
}

ConfigValue parse_value(const std::string& raw, const std::string& origin,
                        int lineno) {
  ConfigValue v;
  std::string s = trim(raw);
  if (s.empty()) fail(origin, lineno, "missing value");
  if (s.front() == '"') {
    if (s.size() < 2 || s.back() != '"')
      fail(origin, lineno, "unterminated string");
    v.kind = ConfigValue::Kind::String;
    v.str = s.substr(1, s.size() - 2);
    return v;
  }
  if (s == "true" || s == "false") {
    v.kind = ConfigValue::Kind::Boolean;
    v.boolean = s == "true";
    return v;
  }
  if (s.front() == '[') {
    if (s.back() != ']') fail(origin, lineno, "unterminated array");
    v.kind = ConfigValue::Kind::Array;
    std::string inner = s.substr(1, s.size() - 2);
    std::stringstream ss(inner);
    std::string item;
    while (std::getline(ss, item, ',')) {
      item = trim(item);
      if (item.empty()) continue;
      char* end = nullptr;
      double x = std::strtod(item.c_str(), &end);
      if (end == item.c_str() || *end != '\0')
        fail(origin, lineno, "array entries must be numbers: '" + item + "'");
      v.array.push_back(x);
    }
    return v;
  }
  char* end = nullptr;
  double x = std::strtod(s.c_str(), &end);
  if (end == s.c_str() || *end != '\0')
    fail(origin, lineno, "cannot parse value '" + s + "'");
  v.kind = ConfigValue::Kind::Number;
  v.num = x;
  return v;
}

std::string format_value(const ConfigValue& v) {
  char buf[64];
  switch (v.kind) {
    case ConfigValue::Kind::String:
      return "\"" + v.str + "\"";
    case ConfigValue::Kind::Boolean:
      return v.boolean ? "true" : "false";
    case ConfigValue::Kind::Number:
      std::snprintf(buf, sizeof(buf), "%.17g", v.num);
      return buf;
    case ConfigValue::Kind::Array: {
      std::string out = "[";
      for (size_t i = 0; i < v.array.size(); ++i) {
        std::snprintf(buf, sizeof(buf), "%.17g", v.array[i]);
        out += (i ? "," : "") + std::string(buf);
      }
      return out + "]";
    }
  }
  return "";
}

}  // namespace

ConfigMap ConfigMap::parse(const std::string& text, const std::string& origin) {
  ConfigMap cfg;
  std::stringstream ss(text);
  std::string line, prefix;
  int lineno = 0;
  while (std::getline(ss, line)) {
    ++lineno;
    line = trim(strip_comment(line));
    if (line.empty()) continue;
    if (line.front() == '[') {
      if (line.back() != ']') fail(origin, lineno, "unterminated table header");
      prefix = trim(line.substr(1, line.size() - 2));
      if (!valid_key(prefix)) fail(origin, lineno, "bad table name");
      continue;
    }
    size_t eq = line.find('=');
    if (eq == std::string::npos) fail(origin, lineno, "expected key = value");
    std::string key = trim(line.substr(0, eq));
    if (!valid_key(key)) fail(origin, lineno, "bad key '" + key + "'");
    if (!prefix.empty()) key = prefix + "." + key;
    cfg.values_[key] = parse_value(line.substr(eq + 1), origin, lineno);
  }
  return cfg;
}

ConfigMap ConfigMap::parse_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse(ss.str(), path);
}

void ConfigMap::apply_override(const std::string& assignment) {
  size_t eq = assignment.find('=');
  if (eq == std::string::npos)
    throw ConfigError("override must look like key.path=value: " + assignment);
  std::string key = trim(assignment.substr(0, eq));
  if (!valid_key(key)) throw ConfigError("bad override key '" + key + "'");
  values_[key] = parse_value(assignment.substr(eq + 1), "<override>", 0);
}

double ConfigMap::number(const std::string& key) const {
  auto it = values_.find(key);
  if (it == values_.end()) throw ConfigError("missing config key " + key);
  if (it->second.kind != ConfigValue::Kind::Number)
    throw ConfigError("config key " + key + " is not a number");
  return it->second.num;
}

double ConfigMap::number_or(const std::string& key, double fallback) const {
  auto it = values_.find(key);
  if (it == values_.end()) return fallback;
  if (it->second.kind != ConfigValue::Kind::Number)
    throw ConfigError("config key " + key + " is not a number");
  return it->second.num;
}

long ConfigMap::integer_or(const std::string& key, long fallback) const {
  const double v = number_or(key, double(fallback));
  long r = std::lround(v);
  if (std::abs(v - r) > 1e-9)
    throw ConfigError("config key " + key + " must be an integer");
  return r;
}

bool ConfigMap::bool_or(const std::string& key, bool fallback) const {
  auto it = values_.find(key);
  if (it == values_.end()) return fallback;
  if (it->second.kind != ConfigValue::Kind::Boolean)
    throw ConfigError("config key " + key + " is not a boolean");
  return it->second.boolean;
}

std::string ConfigMap::string_or(const std::string& key,
                                 const std::string& fallback) const {
  auto it = values_.find(key);
  if (it == values_.end()) return fallback;
  if (it->second.kind != ConfigValue::Kind::String)
    throw ConfigError("config key " + key + " is not a string");
  return it->second.str;
}

std::vector<double> ConfigMap::array_or(
    const std::string& key, const std::vector<double>& fallback) const {
  auto it = values_.find(key);
  if (it == values_.end()) return fallback;
  if (it->second.kind != ConfigValue::Kind::Array)
    throw ConfigError("config key " + key + " is not an array");
  return it->second.array;
}

void ConfigMap::set_number(const std::string& key, double v) {
  ConfigValue cv;
  cv.kind = ConfigValue::Kind::Number;
  cv.num = v;
  values_[key] = cv;
}

void ConfigMap::set_string(const std::string& key, const std::string& v) {
  ConfigValue cv;
  cv.kind = ConfigValue::Kind::String;
  cv.str = v;
  values_[key] = cv;
}

std::string ConfigMap::canonical() const {
  std::string out;
  for (const auto& [k, v] : values_) out += k + " = " + format_value(v) + "\n";
  return out;
}

std::string ConfigMap::hash_hex() const {
  uint64_t h = 1469598103934665603ull;
  for (unsigned char c : canonical()) {
    h ^= c;
    h *= 1099511628211ull;
  }
  char buf[24];
  std::snprintf(buf, sizeof(buf), "%016llx", (unsigned long long)h);
  return buf;
}

SymbolModel ExperimentConfig::build_model() const {
  const int d = int(map.integer_or("model.dimension", 1));
  const std::string mfam = map.string_or("model.metric.family", "flat");
  MetricField metric = MetricField::flat(d);
  if (mfam == "isotropic_bump")
    metric = MetricField::isotropic_bump(
        d, map.number_or("model.metric.epsilon", 0.2),
        map.number_or("model.metric.mu", 0.75));
  else if (mfam != "flat")
    throw ConfigError("unknown metric family '" + mfam + "'");

  const std::string lfam =
      map.string_or("model.potential.long_range.family", "zero");
  PotentialSpec pot = PotentialSpec::zero(d);
  if (lfam == "homogeneous") {
    PotentialSpec::Homogeneous h;
    h.beta = map.number_or("model.potential.long_range.beta", 1.0);
    h.r0 = map.number_or("model.potential.long_range.r0", 1.0);
    h.cos_coeffs =
        map.array_or("model.potential.long_range.profile_cos", {1.0});
    h.sin_coeffs = map.array_or("model.potential.long_range.profile_sin", {});
    pot = PotentialSpec::homogeneous(
        d, h,
        map.bool_or("model.potential.long_range.gradient_nonvanishing",
                    false));
  } else if (lfam == "algebraic") {
    pot = PotentialSpec::algebraic_long(
        d, map.number_or("model.potential.long_range.amplitude", 1.0),
        map.number_or("model.potential.long_range.mu", 0.75));
  } else if (lfam != "zero") {
    throw ConfigError("unknown long-range family '" + lfam + "'");
  }

  const std::string sfam =
      map.string_or("model.potential.short_range.family", "zero");
  if (sfam == "algebraic")
    pot.with_short_algebraic(
        map.number_or("model.potential.short_range.amplitude", 0.5),
        map.number_or("model.potential.short_range.nu", 1.6));
  else if (sfam == "gaussian")
    pot.with_short_gaussian(
        map.number_or("model.potential.short_range.amplitude", 0.5),
        map.number_or("model.potential.short_range.width", 1.0));
  else if (sfam != "zero")
    throw ConfigError("unknown short-range family '" + sfam + "'");

  return SymbolModel(std::move(metric), std::move(pot));
}

PropagatorConfig ExperimentConfig::propagator_config() const {
  PropagatorConfig cfg;
  cfg.dt = map.number_or("grid.dt", 1.0 / 512.0);
  cfg.absorb_width = map.number_or("grid.absorb_width", 0.10);
  cfg.absorb_strength = map.number_or("grid.absorb_strength", 5.0);
  cfg.truncation_radius_frac = map.number_or("grid.truncation_frac", 0.8);
  cfg.strict = strict();
  return cfg;
}

GridState ExperimentConfig::make_grid() const {
  const int d = grid_dim();
  const int n = int(map.integer_or("grid.n", 4096));
  const double L = map.number_or("grid.extent", 160.0);
  std::vector<int> shape(d, n);
  std::vector<double> ext(d, L);
  return GridState(shape, ext);
}

ExperimentConfig load_config(const std::string& path,
                             const std::vector<std::string>& overrides) {
  ExperimentConfig cfg;
  cfg.map = ConfigMap::parse_file(path);
  for (const auto& o : overrides) cfg.map.apply_override(o);
  return cfg;
}

ExperimentConfig config_from_text(const std::string& text,
                                  const std::vector<std::string>& overrides) {
  ExperimentConfig cfg;
  cfg.map = ConfigMap::parse(text);
  for (const auto& o : overrides) cfg.map.apply_override(o);
  return cfg;
}

}  // namespace dollard
